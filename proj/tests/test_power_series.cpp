#include "rseq/power_series.hpp"

#include <doctest.h>

using namespace rseq;

namespace {
PowerSeries ps(std::vector<Rational> c) { return PowerSeries(std::move(c)); }
}

TEST_CASE("mismatched orders truncate to the smaller") {
    const PowerSeries a = ps({Rational(1), Rational(2), Rational(3)});
    const PowerSeries b = ps({Rational(1), Rational(1)});
    CHECK((a + b).order() == 1);
    CHECK((a + b).coeffs() == std::vector<Rational>{Rational(2), Rational(3)});
    CHECK((a * b).coeffs() == std::vector<Rational>{Rational(1), Rational(3)});
}

TEST_CASE("composition basics") {
    // outer identity: z
    const PowerSeries ident = ps({Rational(0), Rational(1), Rational(0), Rational(0)});
    const PowerSeries t = ps({Rational(0), Rational(1), Rational(1), Rational(3, 2)});
    CHECK(compose(ident, t) == t);

    // inner zero series: only the outer constant survives
    const PowerSeries zero = ps({Rational(0), Rational(0), Rational(0), Rational(0)});
    const PowerSeries outer = ps({Rational(7), Rational(2), Rational(5), Rational(1)});
    const PowerSeries composed = compose(outer, zero);
    CHECK(composed.coeff(0) == Rational(7));
    for (int i = 1; i <= 3; ++i) CHECK(composed.coeff(i).is_zero());

    CHECK_THROWS_AS(compose(outer, ps({Rational(1), Rational(1), Rational(0), Rational(0)})),
                    std::domain_error);
}

TEST_CASE("composition matches the defining coefficients of R_2") {
    // tree prefix to order 5: n^(n-1)/n!
    const PowerSeries t =
        ps({Rational(0), Rational(1), Rational(1), Rational(3, 2), Rational(8, 3),
            Rational(125, 24)});
    const PowerSeries g2 = ps({Rational(0), Rational(1), Rational(-1, 2), Rational(0),
                               Rational(0), Rational(0)});
    const PowerSeries expected = ps({Rational(0), Rational(1), Rational(1, 2), Rational(1, 2),
                                     Rational(2, 3), Rational(25, 24)});
    CHECK(compose(g2, t) == expected);
}

TEST_CASE("division") {
    // z / (1 - z) = z + z^2 + ...
    const PowerSeries num = ps({Rational(0), Rational(1), Rational(0), Rational(0)});
    const PowerSeries den = ps({Rational(1), Rational(-1), Rational(0), Rational(0)});
    CHECK(divide(num, den).coeffs() ==
          std::vector<Rational>{Rational(0), Rational(1), Rational(1), Rational(1)});
    CHECK_THROWS_AS(divide(num, ps({Rational(0), Rational(1)})), std::domain_error);

    // division undoes multiplication
    const PowerSeries a = ps({Rational(2), Rational(-3), Rational(5, 7), Rational(1)});
    const PowerSeries b = ps({Rational(1, 2), Rational(4), Rational(-1), Rational(0)});
    CHECK(divide(a * b, b) == a);
}

TEST_CASE("coefficient access and truncation") {
    const PowerSeries a = ps({Rational(1), Rational(2)});
    CHECK(a.coeff(5).is_zero());
    CHECK(a.coeff(-1).is_zero());
    CHECK(a.truncated(0).coeffs() == std::vector<Rational>{Rational(1)});
    CHECK(a.truncated(9) == a);
    CHECK_THROWS_AS(PowerSeries(-1), std::domain_error);
}
