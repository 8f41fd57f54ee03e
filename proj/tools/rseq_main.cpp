#include "rseq/analysis.hpp"
#include "rseq/combinatorics.hpp"
#include "rseq/sequence.hpp"
#include "rseq/series_oracle.hpp"
#include "rseq/triangles.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <functional>
#include <iostream>
#include <string>
#include <vector>

using nlohmann::ordered_json;
using namespace rseq;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

std::string join(const std::vector<std::string>& parts, const char* sep) {
    std::string s;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) s += sep;
        s += parts[i];
    }
    return s;
}

std::vector<std::string> coeff_strings(const RationalFunction& f) {
    std::vector<std::string> out;
    const int d = f.numerator().degree();
    for (int k = 0; k <= std::max(d, 0); ++k) out.push_back(f.numerator().coeff(k).str());
    return out;
}

const char* base_name(Var v) { return v == Var::lambda ? "1-lambda" : "1+zeta"; }

int cmd_sequence(Var var, int m_min, int m_max, const std::string& format) {
    if (m_min > m_max) {
        std::cerr << "sequence: m-min must not exceed m-max\n";
        return kExitUsage;
    }
    const SequenceBuilder& builder = default_sequence_builder();
    std::vector<SequenceEntry> entries;
    for (int m = m_min; m <= m_max; ++m) entries.push_back(builder.build(m));

    if (format == "text") {
        for (const auto& e : entries) std::cout << render_text(e, var) << "\n";
        return kExitPass;
    }
    if (format == "csv") {
        std::cout << "m,variable,numerator_coeffs,base,power\n";
        for (const auto& e : entries) {
            const RationalFunction& f = var == Var::lambda ? e.lambda_form : e.zeta_form;
            std::cout << e.m << "," << var_name(var) << "," << join(coeff_strings(f), ";")
                      << "," << base_name(var) << "," << f.power() << "\n";
        }
        return kExitPass;
    }
    for (const auto& e : entries) {
        const RationalFunction& f = var == Var::lambda ? e.lambda_form : e.zeta_form;
        ordered_json j;
        j["m"] = e.m;
        j["variable"] = var_name(var);
        j["numerator_coeffs"] = coeff_strings(f);
        j["base"] = base_name(var);
        j["power"] = f.power();
        std::cout << j.dump() << "\n";
    }
    return kExitPass;
}

const Triangle& triangle_by_name(const std::string& name) {
    if (name == "eulerian2") return eulerian2_triangle();
    if (name == "stirling2assoc") return stirling2_assoc_triangle();
    if (name == "g") return g_triangle();
    if (name == "h") return h_triangle();
    return big_n_triangle();  // "N"
}

int cmd_table(const std::string& name, int max_m, const std::string& format) {
    if (max_m < 1) {
        std::cerr << "table: max-m must be >= 1\n";
        return kExitUsage;
    }
    const Triangle& tri = triangle_by_name(name);
    const int k_origin =
        (name == "eulerian2" || name == "stirling2assoc") ? 0 : 1;
    if (format == "csv") std::cout << "m,k,value\n";
    for (int m = 1; m <= max_m; ++m) {
        const std::vector<Rational> row = tri.row(m);
        std::vector<std::string> vals;
        for (const auto& v : row) vals.push_back(v.str());
        if (format == "text") {
            std::cout << join(vals, " ") << "\n";
        } else if (format == "csv") {
            for (size_t i = 0; i < vals.size(); ++i) {
                std::cout << m << "," << k_origin + static_cast<int>(i) << "," << vals[i] << "\n";
            }
        } else {
            std::cout << ordered_json(vals).dump() << "\n";
        }
    }
    return kExitPass;
}

// One verification family: runs checks until the first failure, reports
// a PASS line with the check count or a FAIL line with the counterexample.
struct FamilyResult {
    bool pass = true;
    long count = 0;
    std::string detail;
};

bool report_family(const std::string& label, const FamilyResult& r) {
    if (r.pass) {
        std::cout << "PASS " << label << " (" << r.count << " checks)\n";
    } else {
        std::cout << "FAIL " << label << " at " << r.detail << "\n";
    }
    return r.pass;
}

bool run_identities(int depth) {
    bool ok = true;

    FamilyResult eq5;
    for (int m = 1; m <= depth && eq5.pass; ++m, ++eq5.count) {
        if (!verify_eq5(m)) {
            eq5.pass = false;
            eq5.detail = "m=" + std::to_string(m);
        }
    }
    ok &= report_family("eq5-eulerian-stirling", eq5);

    FamilyResult eq6;
    for (int n = 1; n <= depth && eq6.pass; ++n)
        for (int q = 1; q <= depth && eq6.pass; ++q, ++eq6.count)
            if (!verify_eq6(n, q)) {
                eq6.pass = false;
                eq6.detail = "n=" + std::to_string(n) + " q=" + std::to_string(q);
            }
    ok &= report_family("eq6-counting", eq6);

    FamilyResult eq7;
    for (int n = 1; n <= depth && eq7.pass; ++n)
        for (int q = 0; q <= depth && eq7.pass; ++q, ++eq7.count)
            if (!verify_eq7(n, q)) {
                eq7.pass = false;
                eq7.detail = "n=" + std::to_string(n) + " q=" + std::to_string(q);
            }
    ok &= report_family("eq7-inverse", eq7);

    FamilyResult eq8;
    for (int m = 1; m <= depth && eq8.pass; ++m)
        for (int k = 1; k <= m && eq8.pass; ++k, ++eq8.count)
            if (h_from_g(m, k) != h_rec(m, k)) {
                eq8.pass = false;
                eq8.detail = "m=" + std::to_string(m) + " k=" + std::to_string(k);
            }
    ok &= report_family("eq8-h-from-g", eq8);

    FamilyResult five;
    for (int m = 1; m <= depth && five.pass; ++m)
        for (int k = 1; k <= m && five.pass; ++k, ++five.count) {
            const Rational r = g_rec(m, k);
            if (g_egyptian(m, k) != r || g_difference(m, k) != r || g_genfunc(m, k) != r ||
                g_hypercube(m, k) != r) {
                five.pass = false;
                five.detail = "m=" + std::to_string(m) + " k=" + std::to_string(k);
            }
        }
    ok &= report_family("g-five-way", five);

    FamilyResult bign;
    for (int m = 1; m <= depth && bign.pass; ++m)
        for (int k = 1; k <= m && bign.pass; ++k, ++bign.count) {
            try {
                numerator_N(m, k);
            } catch (const std::exception&) {
                bign.pass = false;
                bign.detail = "m=" + std::to_string(m) + " k=" + std::to_string(k);
            }
        }
    ok &= report_family("numerator-N-dual", bign);

    FamilyResult conn;
    for (int k = 1; k <= std::min(depth, 6) && conn.pass; ++k, ++conn.count)
        if (!connection_series(k, 8)) {
            conn.pass = false;
            conn.detail = "k=" + std::to_string(k);
        }
    ok &= report_family("connection-series", conn);

    FamilyResult arec;
    for (int m = 1; m <= depth && arec.pass; ++m)
        for (int k = 1; k <= m && arec.pass; ++k, ++arec.count) {
            const Int lhs = stirling2_assoc(m + k, k);
            const Int rhs = Int(m + k - 1) * stirling2_assoc(m + k - 2, k - 1) +
                            Int(k) * stirling2_assoc(m + k - 1, k);
            if (lhs != rhs) {
                arec.pass = false;
                arec.detail = "m=" + std::to_string(m) + " k=" + std::to_string(k);
            }
        }
    ok &= report_family("a-recurrence", arec);

    FamilyResult diag;
    for (int m = 2; m <= depth && diag.pass; ++m, ++diag.count)
        if (h_rec(m, m) != h_rec(m, m - 1) / Rational(m)) {
            diag.pass = false;
            diag.detail = "m=" + std::to_string(m);
        }
    ok &= report_family("diagonal-law", diag);

    return ok;
}

bool run_oracle(int depth) {
    bool ok = true;

    FamilyResult rel;
    rel.count = 1;
    if (!verify_lambda_zeta_relation(depth)) {
        rel.pass = false;
        rel.detail = "order=" + std::to_string(depth);
    }
    ok &= report_family("lambda-zeta-relation", rel);

    FamilyResult closed;
    for (int m = -std::min(8, depth); m <= depth && closed.pass; ++m, ++closed.count)
        if (!verify_closed_form(m, depth)) {
            closed.pass = false;
            closed.detail = "m=" + std::to_string(m);
        }
    ok &= report_family("closed-form-composition", closed);

    FamilyResult prob;
    const unsigned long long budget = enum_budget_from_env();
    for (int m = 1; m <= std::min(depth, 18) && prob.pass; ++m)
        for (int k = 1; k <= m && prob.pass; ++k) {
            if (pow(factorial(k), static_cast<unsigned long>(m - k + 1)) >
                Int(static_cast<unsigned long>(budget)))
                continue;
            ++prob.count;
            if (g_probability_bruteforce(m, k, budget) != g_rec(m, k)) {
                prob.pass = false;
                prob.detail = "m=" + std::to_string(m) + " k=" + std::to_string(k);
            }
        }
    ok &= report_family("probability-oracle", prob);

    return ok;
}

bool run_integrality(int depth) {
    bool ok = true;

    FamilyResult alt;
    for (int m = 1; m <= depth && alt.pass; ++m, ++alt.count)
        if (!alternating_sum_h(m).matches_inverse_factorial) {
            alt.pass = false;
            alt.detail = "m=" + std::to_string(m);
        }
    ok &= report_family("eq10-alternating-sum", alt);

    FamilyResult integ;
    for (int m = 1; m <= depth && integ.pass; ++m, ++integ.count)
        if (!integrality_check(m)) {
            integ.pass = false;
            integ.detail = "m=" + std::to_string(m);
        }
    ok &= report_family("integrality-scalings", integ);

    FamilyResult diag;
    const int M = std::max(depth, 2);
    const DiagTrendReport trend = diag_limit_trend(M);
    diag.count = static_cast<long>(trend.entries.size());
    if (!trend.strictly_decreasing) {
        diag.pass = false;
        diag.detail = "gap sequence not strictly decreasing";
    } else if (M >= 20 && !(trend.entries[20 - 2].gap < Rational(1, 10000))) {
        diag.pass = false;
        diag.detail = "gap(20) not below 1/10000";
    }
    if (diag.pass) {
        std::cout << "PASS diag-1e-trend (m=2.." << M
                  << " strictly decreasing; gap(" << M
                  << ")=" << decimal_string(trend.entries.back().gap, 12)
                  << " (12 digits))\n";
    } else {
        std::cout << "FAIL diag-1e-trend at " << diag.detail << "\n";
    }
    ok &= diag.pass;

    return ok;
}

int cmd_verify(const std::string& suite, int depth) {
    if (depth < 1) {
        std::cerr << "verify: depth must be >= 1\n";
        return kExitUsage;
    }
    bool ok = true;
    if (suite == "identities" || suite == "all") ok &= run_identities(depth);
    if (suite == "oracle" || suite == "all") ok &= run_oracle(depth);
    if (suite == "integrality" || suite == "all") ok &= run_integrality(depth);
    std::cout << "RESULT " << (ok ? "PASS" : "FAIL") << " " << suite << " depth=" << depth
              << "\n";
    return ok ? kExitPass : kExitCheckFailed;
}

int cmd_oracle(int m_min, int m_max, int order) {
    if (m_min > m_max) {
        std::cerr << "oracle: m-min must not exceed m-max\n";
        return kExitUsage;
    }
    if (order < 1) {
        std::cerr << "oracle: order must be >= 1\n";
        return kExitUsage;
    }
    bool ok = true;
    const bool rel = verify_lambda_zeta_relation(order);
    std::cout << (rel ? "PASS" : "FAIL") << " lambda-zeta-relation order=" << order << "\n";
    ok &= rel;
    for (int m = m_min; m <= m_max; ++m) {
        const bool good = verify_closed_form(m, order);
        std::cout << (good ? "PASS" : "FAIL") << " closed-form m=" << m << " order=" << order
                  << "\n";
        ok &= good;
    }
    std::cout << "RESULT " << (ok ? "PASS" : "FAIL") << " oracle\n";
    return ok ? kExitPass : kExitCheckFailed;
}

std::vector<std::string> rational_strings(const std::vector<Rational>& vs) {
    std::vector<std::string> out;
    for (const auto& v : vs) out.push_back(v.str());
    return out;
}

int cmd_asym(int k, int m_max, const std::string& format) {
    AsymptoticReport rep;
    try {
        rep = asym_fit(k, m_max);
    } catch (const std::domain_error& e) {
        std::cerr << "asym: " << e.what() << "\n";
        return kExitUsage;
    }

    if (format == "json") {
        ordered_json j;
        j["k"] = rep.k;
        j["m_range"] = {rep.m_lo, rep.m_hi};
        j["scaled_values"] = rational_strings(rep.scaled_values);
        ordered_json table = ordered_json::array();
        for (const auto& row : rep.difference_table) table.push_back(rational_strings(row));
        j["difference_table"] = table;
        j["stabilized"] = rep.stabilized;
        if (!rep.newton_coeffs.empty()) {
            j["newton_base"] = rep.newton_base;
            std::vector<std::string> nc;
            for (const auto& c : rep.newton_coeffs) nc.push_back(c.get_str());
            j["newton_coeffs"] = nc;
            j["monomial_coeffs"] = rational_strings(rep.monomial_coeffs);
        }
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "asym k=" << rep.k << " window m in [" << rep.m_lo << "," << rep.m_hi
                  << "]\n";
        std::cout << "scaled values (k-1)!*h(m,k): " << join(rational_strings(rep.scaled_values), " ")
                  << "\n";
        for (size_t j = 0; j < rep.difference_table.size(); ++j) {
            std::cout << "D^" << j << ": " << join(rational_strings(rep.difference_table[j]), " ")
                      << "\n";
        }
        const auto& settle = rep.difference_table[k - 1];
        std::vector<std::string> dec;
        for (const auto& v : settle) dec.push_back(decimal_string(v, 12));
        std::cout << "D^" << (k - 1) << " decimal (12 digits): " << join(dec, " ") << "\n";
        std::cout << "stabilized: " << (rep.stabilized ? "yes" : "no") << "\n";
        if (!rep.newton_coeffs.empty()) {
            std::vector<std::string> nc;
            for (const auto& c : rep.newton_coeffs) nc.push_back(c.get_str());
            std::cout << "newton base m=" << rep.newton_base << ": " << join(nc, " ") << "\n";
            std::cout << "fit (ascending powers of m): "
                      << join(rational_strings(rep.monomial_coeffs), " ") << "\n";
        }
    }
    return rep.stabilized ? kExitPass : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact generating-function toolkit for R_m(z) = sum n^(n-m) z^n/n!"};
    app.require_subcommand(1);

    std::string var_s = "lambda", format = "text", triangle, suite;
    int m_min = 0, m_max = 0, depth = 12, order = 12, max_m = 6, k = 2;

    auto* seq = app.add_subcommand("sequence", "print G_m / H_m closed forms");
    seq->add_option("--var", var_s)->check(CLI::IsMember({"lambda", "zeta"}));
    seq->add_option("--m-min", m_min)->required();
    seq->add_option("--m-max", m_max)->required();
    seq->add_option("--format", format)->check(CLI::IsMember({"text", "csv", "json"}));

    auto* tab = app.add_subcommand("table", "print a coefficient triangle");
    tab->add_option("--triangle", triangle)
        ->required()
        ->check(CLI::IsMember({"eulerian2", "stirling2assoc", "g", "h", "N"}));
    tab->add_option("--max-m", max_m)->required();
    tab->add_option("--format", format)->check(CLI::IsMember({"text", "csv", "json"}));

    auto* ver = app.add_subcommand("verify", "run verification suites");
    ver->add_option("--suite", suite)
        ->required()
        ->check(CLI::IsMember({"identities", "oracle", "integrality", "all"}));
    ver->add_option("--depth", depth);

    auto* ora = app.add_subcommand("oracle", "series-composition oracle over an m range");
    ora->add_option("--m-min", m_min)->required();
    ora->add_option("--m-max", m_max)->required();
    ora->add_option("--order", order);

    auto* asy = app.add_subcommand("asym", "difference-table asymptotics of h(m,k)");
    asy->add_option("--k", k)->required();
    asy->add_option("--m-max", m_max)->required();
    asy->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (seq->parsed()) {
            return cmd_sequence(var_s == "lambda" ? Var::lambda : Var::zeta, m_min, m_max,
                                format);
        }
        if (tab->parsed()) return cmd_table(triangle, max_m, format);
        if (ver->parsed()) return cmd_verify(suite, depth);
        if (ora->parsed()) return cmd_oracle(m_min, m_max, order);
        if (asy->parsed()) return cmd_asym(k, m_max, format);
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitCheckFailed;
    }
    return kExitUsage;
}
