#include "rseq/polynomial.hpp"

#include <doctest.h>

using namespace rseq;

namespace {
Polynomial lam(std::vector<Rational> c) { return Polynomial(Var::lambda, std::move(c)); }
}

TEST_CASE("arithmetic and trimming") {
    const Polynomial x = lam({Rational(0), Rational(1)});
    CHECK(x + x == lam({Rational(0), Rational(2)}));
    CHECK((x - x).is_zero());
    CHECK((x - x).degree() == -1);

    const Polynomial g2 = lam({Rational(0), Rational(1), Rational(-1, 2)});
    CHECK(g2 * Polynomial::constant(Var::lambda, Rational(1)) == g2);
    CHECK(lam({Rational(1), Rational(2)}) * lam({Rational(1), Rational(1)}) ==
          lam({Rational(1), Rational(3), Rational(2)}));
    CHECK(lam({Rational(0), Rational(0)}).is_zero());
}

TEST_CASE("mixing variable tags is an error") {
    const Polynomial a = lam({Rational(1)});
    const Polynomial b = Polynomial(Var::zeta, {Rational(1)});
    CHECK_THROWS_AS(a + b, std::invalid_argument);
    CHECK_THROWS_AS(a * b, std::invalid_argument);
}

TEST_CASE("derivative") {
    CHECK(lam({Rational(0), Rational(1)}).derivative() == lam({Rational(1)}));
    CHECK(lam({Rational(0), Rational(1), Rational(-1, 2)}).derivative() ==
          lam({Rational(1), Rational(-1)}));
    CHECK(lam({Rational(5)}).derivative().is_zero());
}

TEST_CASE("weighted integral") {
    const Polynomial x = lam({Rational(0), Rational(1)});
    CHECK(weighted_integral(x) == lam({Rational(0), Rational(1), Rational(-1, 2)}));
    CHECK(weighted_integral(lam({Rational(0), Rational(1), Rational(-1, 2)})) ==
          lam({Rational(0), Rational(1), Rational(-3, 4), Rational(1, 6)}));
    CHECK(weighted_integral(Polynomial(Var::lambda)).is_zero());
    CHECK_THROWS_AS(weighted_integral(lam({Rational(1), Rational(1)})), std::domain_error);
    CHECK_THROWS_AS(weighted_integral(Polynomial(Var::zeta, {Rational(0), Rational(1)})),
                    std::invalid_argument);
}

TEST_CASE("monomial, coeff access, evaluate") {
    const Polynomial m = Polynomial::monomial(Var::zeta, Rational(3, 2), 4);
    CHECK(m.degree() == 4);
    CHECK(m.coeff(4) == Rational(3, 2));
    CHECK(m.coeff(2).is_zero());
    CHECK(m.coeff(9).is_zero());
    CHECK(lam({Rational(1), Rational(2), Rational(3)}).evaluate(Rational(2)) == Rational(17));
    CHECK(pow(lam({Rational(1), Rational(1)}), 3) ==
          lam({Rational(1), Rational(3), Rational(3), Rational(1)}));
}
