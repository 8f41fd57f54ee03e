#include "rseq/power_series.hpp"

#include "rseq/combinatorics.hpp"

#include <algorithm>
#include <stdexcept>

namespace rseq {

PowerSeries::PowerSeries(int order) {
    if (order < 0) throw std::domain_error("PowerSeries: negative order");
    c_.resize(order + 1);
}

PowerSeries::PowerSeries(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw std::domain_error("PowerSeries: empty coefficient list");
}

Rational PowerSeries::coeff(int n) const {
    if (n < 0 || n > order()) return Rational();
    return c_[n];
}

PowerSeries PowerSeries::truncated(int order) const {
    if (order >= this->order()) return *this;
    return PowerSeries(std::vector<Rational>(c_.begin(), c_.begin() + order + 1));
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
    const int n = std::min(a.order(), b.order());
    PowerSeries r(n);
    for (int i = 0; i <= n; ++i) r.c_[i] = a.c_[i] + b.c_[i];
    return r;
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
    const int n = std::min(a.order(), b.order());
    PowerSeries r(n);
    for (int i = 0; i <= n; ++i) r.c_[i] = a.c_[i] - b.c_[i];
    return r;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    const int n = std::min(a.order(), b.order());
    PowerSeries r(n);
    for (int i = 0; i <= n; ++i) {
        if (a.c_[i].is_zero()) continue;
        for (int j = 0; i + j <= n; ++j) {
            r.c_[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return r;
}

PowerSeries series_expand(const RationalFunction& f, int order) {
    // 1/(1-x)^p has coefficients C(p-1+k, k); 1/(1+x)^p the same with
    // alternating signs.
    std::vector<Rational> ic(order + 1);
    if (f.power() == 0) {
        ic[0] = Rational(1);
    } else {
        const bool alternating = f.var() == Var::zeta;
        for (int k = 0; k <= order; ++k) {
            Int b = binomial(f.power() - 1 + k, k);
            if (alternating && k % 2 == 1) b = -b;
            ic[k] = Rational(b);
        }
    }
    std::vector<Rational> nc(order + 1);
    for (int k = 0; k <= order && k <= f.numerator().degree(); ++k) {
        nc[k] = f.numerator().coeff(k);
    }
    return PowerSeries(std::move(nc)) * PowerSeries(std::move(ic));
}

PowerSeries compose(const PowerSeries& outer, const PowerSeries& inner) {
    if (!inner.coeff(0).is_zero())
        throw std::domain_error("compose: inner series has nonzero constant term");
    const int n = std::min(outer.order(), inner.order());
    const PowerSeries in = inner.truncated(n);
    // Horner over the truncated outer; coefficients past order n cannot
    // reach orders <= n because the inner series has valuation >= 1.
    PowerSeries acc(n);
    for (int k = n; k >= 0; --k) {
        acc = acc * in;
        std::vector<Rational> c = acc.coeffs();
        c[0] += outer.coeff(k);
        acc = PowerSeries(std::move(c));
    }
    return acc;
}

PowerSeries divide(const PowerSeries& a, const PowerSeries& b) {
    if (b.coeff(0).is_zero())
        throw std::domain_error("divide: divisor has zero constant term");
    const int n = std::min(a.order(), b.order());
    std::vector<Rational> q(n + 1), rem(a.coeffs().begin(), a.coeffs().begin() + n + 1);
    for (int k = 0; k <= n; ++k) {
        q[k] = rem[k] / b.coeff(0);
        if (q[k].is_zero()) continue;
        for (int i = k; i <= n; ++i) {
            rem[i] -= q[k] * b.coeff(i - k);
        }
    }
    return PowerSeries(std::move(q));
}

}  // namespace rseq
