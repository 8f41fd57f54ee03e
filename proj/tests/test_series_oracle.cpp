#include "rseq/series_oracle.hpp"

#include "rseq/combinatorics.hpp"
#include "rseq/triangles.hpp"

#include <doctest.h>

#include <cstdlib>

using namespace rseq;

TEST_CASE("egf prefixes match the defining sums") {
    CHECK(egf_prefix(EgfKind::tree, 0, 4).series.coeffs() ==
          std::vector<Rational>{Rational(0), Rational(1), Rational(1), Rational(3, 2),
                                Rational(8, 3)});
    CHECK(egf_prefix(EgfKind::endo, 0, 3).series.coeffs() ==
          std::vector<Rational>{Rational(0), Rational(1), Rational(2), Rational(9, 2)});
    CHECK(egf_prefix(EgfKind::r_of_m, 2, 3).series.coeffs() ==
          std::vector<Rational>{Rational(0), Rational(1), Rational(1, 2), Rational(1, 2)});
    CHECK_THROWS_AS(egf_prefix(EgfKind::tree, 0, 0), std::domain_error);
}

TEST_CASE("definitional aliases") {
    CHECK(egf_prefix(EgfKind::r_of_m, 1, 12).series ==
          egf_prefix(EgfKind::tree, 0, 12).series);
    CHECK(egf_prefix(EgfKind::r_of_m, 0, 12).series ==
          egf_prefix(EgfKind::endo, 0, 12).series);
}

TEST_CASE("zeta = lambda/(1-lambda) on series prefixes") {
    CHECK(verify_lambda_zeta_relation(1));
    CHECK(verify_lambda_zeta_relation(8));
    CHECK(verify_lambda_zeta_relation(12));
}

TEST_CASE("closed forms compose back to the defining coefficients") {
    CHECK(verify_closed_form(2, 8));
    CHECK(verify_closed_form(-3, 10));
    CHECK(verify_closed_form(0, 12));
    for (int m = -8; m <= 12; ++m) CHECK(verify_closed_form(m, 12));
}

TEST_CASE("probability oracle on the named cells") {
    CHECK(g_probability_bruteforce(2, 2) == Rational(1, 2));
    CHECK(g_probability_bruteforce(3, 3) == Rational(1, 6));
    CHECK(g_probability_bruteforce(4, 2) == Rational(7, 8));
    for (int m = 1; m <= 8; ++m) CHECK(g_probability_bruteforce(m, 1) == Rational(1));
}

TEST_CASE("probability oracle equals g_rec on in-budget cells") {
    for (int m = 1; m <= 12; ++m) {
        for (int k = 1; k <= m; ++k) {
            if (pow(factorial(k), static_cast<unsigned long>(m - k + 1)) > Int(200000))
                continue;
            CHECK(g_probability_bruteforce(m, k) == g_rec(m, k));
        }
    }
}

TEST_CASE("parallel enumeration reproduces the serial reference") {
    for (int m = 1; m <= 10; ++m) {
        for (int k = 1; k <= m; ++k) {
            if (pow(factorial(k), static_cast<unsigned long>(m - k + 1)) > Int(200000))
                continue;
            CHECK(count_matching_parallel(k, m - k + 1) ==
                  count_matching_serial(k, m - k + 1));
        }
    }
}

TEST_CASE("enumeration budget") {
    CHECK_THROWS_AS(g_probability_bruteforce(9, 3), std::domain_error);   // 6^7 > 2e5
    CHECK_THROWS_AS(g_probability_bruteforce(4, 2, 7), std::domain_error);
    CHECK(g_probability_bruteforce(4, 2, 8) == Rational(7, 8));
    CHECK_THROWS_AS(g_probability_bruteforce(3, 4), std::domain_error);  // k > m
}

TEST_CASE("budget environment override") {
    unsetenv("RSEQ_ENUM_BUDGET");
    CHECK(enum_budget_from_env() == 200000ull);
    setenv("RSEQ_ENUM_BUDGET", "1500000", 1);
    CHECK(enum_budget_from_env() == 1500000ull);
    setenv("RSEQ_ENUM_BUDGET", "bogus", 1);
    CHECK(enum_budget_from_env() == 200000ull);
    unsetenv("RSEQ_ENUM_BUDGET");
}
