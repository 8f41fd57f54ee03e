#pragma once

#include "rseq/rational.hpp"
#include "rseq/rational_function.hpp"

#include <vector>

namespace rseq {

/// Truncated formal power series: exactly order+1 coefficients c_0..c_N.
/// Binary operations on mismatched orders truncate to the smaller order.
class PowerSeries {
public:
    explicit PowerSeries(int order);
    explicit PowerSeries(std::vector<Rational> coeffs);

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(int n) const;

    PowerSeries truncated(int order) const;

    friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
    friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
    bool operator==(const PowerSeries& o) const { return c_ == o.c_; }

private:
    std::vector<Rational> c_;
};

/// Taylor coefficients of f at 0 through the given order, by exact
/// binomial-series expansion of 1/base^power times the numerator.
PowerSeries series_expand(const RationalFunction& f, int order);

/// outer(inner) through the common order by Horner evaluation; inner
/// must have zero constant term (rejected otherwise), which makes the
/// truncated composition exact.
PowerSeries compose(const PowerSeries& outer, const PowerSeries& inner);

/// Long division a/b through the common order; b must have a nonzero
/// constant term.
PowerSeries divide(const PowerSeries& a, const PowerSeries& b);

}  // namespace rseq
