#pragma once

#include <cstdint>
#include <stdexcept>

namespace goodint {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;
using i128 = __int128;

// Violated mathematical precondition (bad input, not a bug).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// Input exceeds a documented size guard.
struct SizeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace goodint
