#include "rseq/sequence.hpp"

#include "rseq/combinatorics.hpp"

#include <doctest.h>

using namespace rseq;

namespace {
Polynomial lam(std::vector<Rational> c) { return Polynomial(Var::lambda, std::move(c)); }
const SequenceBuilder& builder() {
    static SequenceBuilder b(64);
    return b;
}
}  // namespace

TEST_CASE("integral operator climbs the polynomial chain") {
    const RationalFunction g1{lam({Rational(0), Rational(1)})};
    const RationalFunction g2 = apply_integral_operator(g1);
    CHECK(g2 == RationalFunction(lam({Rational(0), Rational(1), Rational(-1, 2)})));

    const RationalFunction g4 = apply_integral_operator(builder().build(3).lambda_form);
    CHECK(g4 == RationalFunction(lam({Rational(0), Rational(1), Rational(-7, 8),
                                      Rational(11, 36), Rational(-1, 24)})));

    const RationalFunction g6 = apply_integral_operator(builder().build(5).lambda_form);
    CHECK(g6.numerator().coeff(5) == Rational(137, 7200));

    CHECK_THROWS_AS(apply_integral_operator(builder().build(0).lambda_form),
                    std::invalid_argument);
}

TEST_CASE("differential operator descends the rational chain") {
    const RationalFunction g1{lam({Rational(0), Rational(1)})};
    const RationalFunction g0 = apply_diff_operator_lambda(g1);
    CHECK(g0 == RationalFunction(lam({Rational(0), Rational(1)}), 1));

    const RationalFunction gm1 = apply_diff_operator_lambda(g0);
    CHECK(gm1 == RationalFunction(lam({Rational(0), Rational(1)}), 3));

    const RationalFunction gm3 = apply_diff_operator_lambda(builder().build(-2).lambda_form);
    CHECK(gm3 ==
          RationalFunction(lam({Rational(0), Rational(1), Rational(8), Rational(6)}), 7));
}

TEST_CASE("zeta differential operator agrees with the appendix chain") {
    const SequenceEntry h1 = builder().build(1);
    CHECK(apply_diff_operator_zeta(h1.zeta_form) == closed_form_zeta(0));
    CHECK(apply_diff_operator_zeta(builder().build(0).zeta_form) == closed_form_zeta(-1));
    CHECK(apply_diff_operator_zeta(builder().build(-1).zeta_form) == closed_form_zeta(-2));
}

TEST_CASE("build produces both closed forms") {
    const SequenceEntry e0 = builder().build(0);
    CHECK(e0.lambda_form == RationalFunction(lam({Rational(0), Rational(1)}), 1));
    CHECK(e0.zeta_form ==
          RationalFunction(Polynomial(Var::zeta, {Rational(0), Rational(1)})));

    const SequenceEntry em4 = builder().build(-4);
    CHECK(em4.lambda_form ==
          RationalFunction(
              lam({Rational(0), Rational(1), Rational(22), Rational(58), Rational(24)}), 9));
    CHECK(em4.zeta_form == closed_form_zeta(-4));

    const SequenceEntry e5 = builder().build(5);
    CHECK(e5.lambda_form ==
          RationalFunction(lam({Rational(0), Rational(1), Rational(-15, 16),
                                Rational(85, 216), Rational(-25, 288), Rational(1, 120)})));

    CHECK_THROWS_AS(builder().build(65), std::domain_error);
    CHECK_THROWS_AS(SequenceBuilder(4).build(-5), std::domain_error);
}

TEST_CASE("operator round trip and closed-form agreement") {
    for (int m = 1; m <= 12; ++m) {
        const RationalFunction gm = builder().build(m).lambda_form;
        CHECK(apply_diff_operator_lambda(apply_integral_operator(gm)) == gm);
    }
    for (int m = -8; m <= 12; ++m) {
        const SequenceEntry e = builder().build(m);
        CHECK(e.lambda_form == closed_form_lambda(m));
        CHECK(e.zeta_form == closed_form_zeta(m));
    }
}

TEST_CASE("pullback commutes with the differential operator") {
    for (int m = -8; m <= 12; ++m) {
        const SequenceEntry e = builder().build(m);
        const RationalFunction via_lambda = mobius_substitute(
            apply_diff_operator_lambda(e.lambda_form), MobiusDirection::lambda_to_zeta);
        const RationalFunction via_zeta = apply_diff_operator_zeta(e.zeta_form);
        CHECK(via_lambda == via_zeta);
    }
}

TEST_CASE("leading and trailing coefficients") {
    for (int m = 1; m <= 12; ++m) {
        Rational lead = builder().build(m).lambda_form.numerator().coeff(m);
        Rational expect = Rational(Int(1), factorial(m));
        CHECK(lead == (m % 2 == 1 ? expect : -expect));
    }
    for (int mu = 2; mu <= 8; ++mu) {
        const SequenceEntry e = builder().build(-mu);
        const Polynomial& num = e.lambda_form.numerator();
        CHECK(num.coeff(num.degree()) == Rational(factorial(mu)));
    }
}

TEST_CASE("row extraction checks against the triangles") {
    const RowExtraction eul = extract_row(builder().build(-5), Var::lambda);
    CHECK(eul.rule == TriangleRule::eulerian2);
    CHECK(eul.values == std::vector<Rational>{Rational(1), Rational(52), Rational(328),
                                              Rational(444), Rational(120)});

    const RowExtraction grow = extract_row(builder().build(6), Var::lambda);
    CHECK(grow.rule == TriangleRule::g);
    CHECK(grow.values ==
          std::vector<Rational>{Rational(1), Rational(31, 32), Rational(575, 1296),
                                Rational(415, 3456), Rational(137, 7200), Rational(1, 720)});

    const RowExtraction hrow = extract_row(builder().build(5), Var::zeta);
    CHECK(hrow.rule == TriangleRule::h);
    CHECK(hrow.values ==
          std::vector<Rational>{Rational(1), Rational(49, 16), Rational(1547, 432),
                                Rational(1631, 864), Rational(1631, 4320)});

    const RowExtraction srow = extract_row(builder().build(-4), Var::zeta);
    CHECK(srow.rule == TriangleRule::stirling2_assoc);
    CHECK(srow.values ==
          std::vector<Rational>{Rational(1), Rational(25), Rational(105), Rational(105)});

    CHECK(extract_row(builder().build(0), Var::zeta).values ==
          std::vector<Rational>{Rational(1)});
    CHECK(extract_row(builder().build(0), Var::lambda).values ==
          std::vector<Rational>{Rational(1)});

    // a tampered entry is rejected
    SequenceEntry bad = builder().build(3);
    bad.lambda_form = RationalFunction(lam({Rational(0), Rational(1), Rational(1)}), 0);
    CHECK_THROWS_AS(extract_row(bad, Var::lambda), std::runtime_error);
}

TEST_CASE("appendix-style rendering") {
    CHECK(render_text(builder().build(-3), Var::lambda) ==
          "G_{-3} = lambda(1+8lambda+6lambda^2)/(1-lambda)^7");
    CHECK(render_text(builder().build(0), Var::lambda) == "G_0 = lambda/(1-lambda)");
    CHECK(render_text(builder().build(1), Var::lambda) == "G_1 = lambda");
    CHECK(render_text(builder().build(2), Var::lambda) == "G_2 = -(1/2)lambda^2+lambda");
    CHECK(render_text(builder().build(0), Var::zeta) == "H_0 = zeta");
    CHECK(render_text(builder().build(1), Var::zeta) == "H_1 = zeta/(1+zeta)");
    CHECK(render_text(builder().build(2), Var::zeta) ==
          "H_2 = zeta(1+(1/2)zeta)/(1+zeta)^2");
    CHECK(render_text(builder().build(-1), Var::zeta) == "H_{-1} = zeta(1+zeta)^2");
    CHECK(render_text(builder().build(-2), Var::zeta) == "H_{-2} = zeta(1+zeta)^3(1+3zeta)");
}
