#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "goodint/codes.hpp"
#include "goodint/goodness.hpp"

using nlohmann::json;
using namespace goodint;

namespace {

constexpr const char* kSchemaVersion = "1";
constexpr u64 kDefaultLimit = 1000000;

json envelope(const std::string& command, json params, json result) {
    json out;
    out["schema_version"] = kSchemaVersion;
    out["command"] = command;
    out["params"] = std::move(params);
    out["result"] = std::move(result);
    return out;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

u64 enumeration_limit(std::optional<u64> flag) {
    if (flag) return *flag;
    if (const char* env = std::getenv("GOODINT_LIMIT")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<u64>(v);
    }
    return kDefaultLimit;
}

std::string field_name(const Field& f) {
    if (f.m() == 1) return std::to_string(f.p());
    return std::to_string(f.p()) + "^" + std::to_string(f.m());
}

std::string kind_name(FactorKind k) {
    switch (k) {
        case FactorKind::SelfDual: return "self_dual";
        case FactorKind::PairPrimary: return "pair_primary";
        case FactorKind::PairSecondary: return "pair_secondary";
    }
    return "?";
}

// ---------------------------------------------------------------------------

struct ClassifyArgs {
    i64 a = 0, b = 0;
    u64 ell = 1;
    bool as_json = false;
};

int run_classify(const ClassifyArgs& args) {
    Classification c = classify({args.a, args.b, args.ell});
    if (args.as_json) {
        json result;
        result["good"] = c.good;
        result["oddly"] = c.oddly;
        result["evenly"] = c.evenly;
        result["witness_k"] = c.witness_k ? json(*c.witness_k) : json(nullptr);
        result["trace"] = c.trace;
        emit(envelope("classify", {{"a", args.a}, {"b", args.b}, {"ell", args.ell}}, result));
        return 0;
    }
    std::ostringstream line;
    if (!c.good) {
        line << "bad";
    } else {
        line << "good (";
        if (c.oddly && c.evenly)
            line << "oddly & evenly";
        else
            line << (c.oddly ? "oddly" : "evenly");
        line << "), witness k=" << *c.witness_k;
    }
    std::cout << line.str() << "\n";
    for (const auto& t : c.trace) std::cout << "  " << t << "\n";
    return 0;
}

struct TableArgs {
    i64 a = 0, b = 0;
    u64 max = 50;
    std::string cls = "good";
    bool as_json = false;
};

int run_table(const TableArgs& args) {
    GoodClass cls = args.cls == "good"    ? GoodClass::Good
                    : args.cls == "oddly" ? GoodClass::Oddly
                                          : GoodClass::Evenly;
    std::vector<u64> values = good_table(args.a, args.b, args.max, cls);
    if (args.as_json) {
        json result;
        result["values"] = values;
        emit(envelope("table",
                      {{"a", args.a}, {"b", args.b}, {"max", args.max}, {"class", args.cls}},
                      result));
        return 0;
    }
    for (size_t i = 0; i < values.size(); ++i)
        std::cout << values[i] << (i + 1 < values.size() ? ", " : "");
    std::cout << "\n";
    return 0;
}

struct CosetsArgs {
    u64 N = 1, q = 2;
    std::optional<u64> hermitian_base;
    bool as_json = false;
};

int run_cosets(const CosetsArgs& args) {
    CosetPartition part = cosets(args.N, args.q);
    struct Row {
        const CyclotomicCoset* c;
        CosetDuality d;
    };
    std::vector<Row> rows;
    for (const auto& c : part.cosets) {
        CosetDuality d = args.hermitian_base ? hermitian_type(c, part, *args.hermitian_base)
                                             : euclidean_type(c, part);
        rows.push_back({&c, d});
    }
    const char* type_self = args.hermitian_base ? "I'" : "I";
    const char* type_pair = args.hermitian_base ? "II'" : "II";
    if (args.as_json) {
        json params = {{"N", args.N}, {"q", args.q}};
        if (args.hermitian_base) params["hermitian_base"] = *args.hermitian_base;
        json list = json::array();
        for (const auto& [c, d] : rows) {
            json row;
            row["rep"] = c->rep;
            row["elements"] = c->elements;
            row["add_order"] = c->add_order;
            row["size"] = c->size();
            row["type"] = d.self_paired ? type_self : type_pair;
            row["partner_rep"] = d.partner_rep;
            list.push_back(std::move(row));
        }
        emit(envelope("cosets", params, {{"cosets", list}}));
        return 0;
    }
    std::cout << "N = " << args.N << ", q = " << args.q << ", cosets = " << part.cosets.size()
              << "\n";
    std::cout << std::setw(8) << "rep" << std::setw(11) << "add_order" << std::setw(6) << "size"
              << std::setw(6) << "type" << std::setw(9) << "partner" << "  elements\n";
    for (const auto& [c, d] : rows) {
        std::cout << std::setw(8) << c->rep << std::setw(11) << c->add_order << std::setw(6)
                  << c->size() << std::setw(6) << (d.self_paired ? type_self : type_pair);
        if (d.self_paired)
            std::cout << std::setw(9) << "-";
        else
            std::cout << std::setw(9) << d.partner_rep;
        std::cout << "  {";
        for (size_t i = 0; i < c->elements.size(); ++i)
            std::cout << c->elements[i] << (i + 1 < c->elements.size() ? "," : "");
        std::cout << "}\n";
    }
    return 0;
}

struct FactorArgs {
    u64 n = 1, p = 2;
    u32 m = 1;
    bool hermitian = false;
    bool as_json = false;
};

int run_factor(const FactorArgs& args) {
    FactorTable t =
        factor_table(args.n, args.p, args.m, args.hermitian ? Duality::Hermitian : Duality::Euclidean);
    if (args.as_json) {
        json params = {{"n", args.n}, {"p", args.p}, {"m", args.m}, {"hermitian", args.hermitian}};
        json result;
        result["n"] = t.n;
        result["N"] = t.N;
        result["t"] = t.t;
        result["field"] = field_name(*t.field);
        result["duality"] = t.duality == Duality::Hermitian ? "hermitian" : "euclidean";
        result["multiplicity"] = t.multiplicity();
        json list = json::array();
        for (const auto& r : t.records) {
            json row;
            row["poly"] = poly_to_string(*t.field, r.poly);
            row["coset_rep"] = r.coset_rep;
            row["add_order"] = r.add_order;
            row["kind"] = kind_name(r.kind);
            row["partner_rep"] = r.partner_rep;
            row["multiplicity"] = r.multiplicity;
            list.push_back(std::move(row));
        }
        result["records"] = list;
        emit(envelope("factor", params, result));
        return 0;
    }
    std::cout << "x^" << t.n << " - 1 over F_" << field_name(*t.field) << " ("
              << (t.duality == Duality::Hermitian ? "Hermitian" : "Euclidean") << ", N = " << t.N
              << ", t = " << t.t << ")\n";
    std::cout << std::setw(15) << "kind" << std::setw(6) << "rep" << std::setw(11) << "add_order"
              << std::setw(9) << "partner" << std::setw(6) << "mult" << "  poly\n";
    for (const auto& r : t.records) {
        std::cout << std::setw(15) << kind_name(r.kind) << std::setw(6) << r.coset_rep
                  << std::setw(11) << r.add_order;
        if (r.kind == FactorKind::SelfDual)
            std::cout << std::setw(9) << "-";
        else
            std::cout << std::setw(9) << r.partner_rep;
        std::cout << std::setw(6) << r.multiplicity << "  " << poly_to_string(*t.field, r.poly)
                  << "\n";
    }
    return 0;
}

struct CodesArgs {
    u64 n = 1, p = 2;
    u32 m = 1;
    std::string duality = "euclidean";
    std::string kind = "lcd";
    std::optional<u64> limit;
    bool as_json = false;
};

json code_json(const CyclicCode& c) {
    const FactorTable& t = *c.table;
    json row;
    row["exponents"] = c.exponents;
    row["generator"] = poly_to_string(*t.field, generator_poly(c));
    row["dim"] = dimension(c);
    return row;
}

json codes_params(const CodesArgs& args) {
    return {{"n", args.n},       {"p", args.p},       {"m", args.m},
            {"duality", args.duality}, {"kind", args.kind}};
}

int run_codes_count(const CodesArgs& args) {
    Duality d = args.duality == "hermitian" ? Duality::Hermitian : Duality::Euclidean;
    CodeCount count = args.kind == "lcd" ? count_lcd(args.n, args.p, args.m, d)
                                         : count_self_dual(args.n, args.p, args.m, d);
    if (args.as_json) {
        emit(envelope("codes count", codes_params(args), {{"count", count.str()}}));
        return 0;
    }
    std::cout << count.str() << "\n";
    return 0;
}

int run_codes_list(const CodesArgs& args) {
    Duality d = args.duality == "hermitian" ? Duality::Hermitian : Duality::Euclidean;
    auto table = std::make_shared<const FactorTable>(factor_table(args.n, args.p, args.m, d));
    CodeFamily family = args.kind == "lcd" ? CodeFamily::Lcd : CodeFamily::SelfDual;
    u64 limit = enumeration_limit(args.limit);
    CodeEnumerator e(table, family, limit);
    if (args.as_json) {
        json list = json::array();
        while (auto c = e.next()) list.push_back(code_json(*c));
        json result;
        result["n"] = table->n;
        result["field"] = field_name(*table->field);
        result["duality"] = args.duality;
        result["count"] = e.total().str();
        result["returned"] = list.size();
        result["codes"] = std::move(list);
        emit(envelope("codes list", codes_params(args), result));
        return 0;
    }
    u64 idx = 0;
    while (auto c = e.next()) {
        std::cout << "#" << idx++ << " dim=" << dimension(*c) << " exps=[";
        for (size_t i = 0; i < c->exponents.size(); ++i)
            std::cout << c->exponents[i] << (i + 1 < c->exponents.size() ? "," : "");
        std::cout << "] g = " << poly_to_string(*table->field, generator_poly(*c)) << "\n";
    }
    std::cout << "total " << e.total().str() << ", printed " << idx << "\n";
    return 0;
}

int run_codes_verify(const CodesArgs& args) {
    Duality d = args.duality == "hermitian" ? Duality::Hermitian : Duality::Euclidean;
    auto table = std::make_shared<const FactorTable>(factor_table(args.n, args.p, args.m, d));
    CodeFamily family = args.kind == "lcd" ? CodeFamily::Lcd : CodeFamily::SelfDual;
    u64 limit = enumeration_limit(args.limit);
    CodeEnumerator e(table, family, limit);
    bool all_ok = true;
    u64 idx = 0;
    json list = json::array();
    while (auto c = e.next()) {
        VerifyReport r = brute_verify(*c);
        bool ok = family == CodeFamily::Lcd ? r.lcd : r.self_dual;
        all_ok = all_ok && ok;
        if (args.as_json) {
            json row = code_json(*c);
            row["dim_dual"] = r.dim_dual;
            row["dim_intersection"] = r.dim_intersection;
            row["self_dual"] = r.self_dual;
            row["lcd"] = r.lcd;
            row["ok"] = ok;
            list.push_back(std::move(row));
        } else {
            std::cout << "#" << idx << " dim=" << r.dim << " dual=" << r.dim_dual
                      << " intersection=" << r.dim_intersection
                      << " self_dual=" << (r.self_dual ? "yes" : "no")
                      << " lcd=" << (r.lcd ? "yes" : "no") << (ok ? " ok" : " MISMATCH") << "\n";
        }
        ++idx;
    }
    if (args.as_json) {
        json result;
        result["n"] = table->n;
        result["field"] = field_name(*table->field);
        result["duality"] = args.duality;
        result["verified"] = idx;
        result["all_ok"] = all_ok;
        result["codes"] = std::move(list);
        emit(envelope("codes verify", codes_params(args), result));
    } else {
        std::cout << "verified " << idx << " codes: " << (all_ok ? "all ok" : "MISMATCH") << "\n";
    }
    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"good integers, factor tables of x^n - 1, and cyclic-code duality"};
    app.require_subcommand(1);

    ClassifyArgs cl;
    auto* classify_cmd =
        app.add_subcommand("classify", "classify ell as good / oddly-good / evenly-good");
    classify_cmd->add_option("--a", cl.a, "first of the coprime pair")->required();
    classify_cmd->add_option("--b", cl.b, "second of the coprime pair")->required();
    classify_cmd->add_option("--ell", cl.ell, "integer to classify")->required();
    classify_cmd->add_flag("--json", cl.as_json, "machine-readable output");

    TableArgs tb;
    auto* table_cmd = app.add_subcommand("table", "list all good integers up to a bound");
    table_cmd->add_option("--a", tb.a)->required();
    table_cmd->add_option("--b", tb.b)->required();
    table_cmd->add_option("--max", tb.max, "inclusive bound")->required();
    table_cmd->add_option("--class", tb.cls, "good | oddly | evenly")
        ->check(CLI::IsMember({"good", "oddly", "evenly"}));
    table_cmd->add_flag("--json", tb.as_json);

    CosetsArgs co;
    auto* cosets_cmd = app.add_subcommand("cosets", "q-cyclotomic cosets of Z_N with duality types");
    cosets_cmd->add_option("--N", co.N)->required();
    cosets_cmd->add_option("--q", co.q, "prime power coprime to N")->required();
    u64 hbase = 0;
    auto* hopt = cosets_cmd->add_option("--hermitian-base", hbase,
                                        "p^m with q = (p^m)^2: report types I'/II'");
    cosets_cmd->add_flag("--json", co.as_json);

    FactorArgs fa;
    auto* factor_cmd = app.add_subcommand("factor", "factor x^n - 1 into SRIM/SCRIM factors and pairs");
    factor_cmd->add_option("--n", fa.n)->required();
    factor_cmd->add_option("--p", fa.p, "field characteristic")->required();
    factor_cmd->add_option("--m", fa.m, "extension degree (field is p^m, or p^2m with --hermitian)");
    factor_cmd->add_flag("--hermitian", fa.hermitian, "group by conjugate-reciprocal duality");
    factor_cmd->add_flag("--json", fa.as_json);

    CodesArgs cd;
    auto* codes_cmd = app.add_subcommand("codes", "count, list, or verify LCD / self-dual cyclic codes");
    codes_cmd->require_subcommand(1);
    auto add_codes_opts = [&](CLI::App* sub, bool with_limit) {
        sub->add_option("--n", cd.n, "code length")->required();
        sub->add_option("--p", cd.p, "field characteristic")->required();
        sub->add_option("--m", cd.m, "extension degree");
        sub->add_option("--duality", cd.duality, "euclidean | hermitian")
            ->check(CLI::IsMember({"euclidean", "hermitian"}));
        sub->add_option("--kind", cd.kind, "lcd | self_dual")
            ->check(CLI::IsMember({"lcd", "self_dual"}));
        if (with_limit)
            sub->add_option("--limit", [&](const CLI::results_t& res) {
                cd.limit = std::stoull(res[0]);
                return true;
            }, "enumeration cap (default 10^6, or GOODINT_LIMIT)");
        sub->add_flag("--json", cd.as_json);
    };
    auto* count_cmd = codes_cmd->add_subcommand("count", "closed-form count");
    add_codes_opts(count_cmd, false);
    auto* list_cmd = codes_cmd->add_subcommand("list", "enumerate generator polynomials");
    add_codes_opts(list_cmd, true);
    auto* verify_cmd = codes_cmd->add_subcommand("verify",
                                                 "enumerate and brute-force check each code");
    add_codes_opts(verify_cmd, true);

    int rc = 0;
    classify_cmd->callback([&] { rc = run_classify(cl); });
    table_cmd->callback([&] { rc = run_table(tb); });
    cosets_cmd->callback([&] {
        if (hopt->count()) co.hermitian_base = hbase;
        rc = run_cosets(co);
    });
    factor_cmd->callback([&] { rc = run_factor(fa); });
    count_cmd->callback([&] { rc = run_codes_count(cd); });
    list_cmd->callback([&] { rc = run_codes_list(cd); });
    verify_cmd->callback([&] { rc = run_codes_verify(cd); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const SizeError& e) {
        std::cerr << "size error: " << e.what() << "\n";
        return 3;
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return rc;
}
