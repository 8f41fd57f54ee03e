#include "rseq/rational_function.hpp"

#include <stdexcept>

namespace rseq {

namespace {

// Synthetic division of p by (x - root): returns the quotient and sets
// `remainder` to p(root).
Polynomial divide_linear(const Polynomial& p, const Rational& root, Rational& remainder) {
    const auto& c = p.coeffs();
    if (c.empty()) {
        remainder = Rational();
        return Polynomial(p.var());
    }
    std::vector<Rational> s(c.size() - 1);
    Rational acc = c.back();
    for (int k = static_cast<int>(c.size()) - 2; k >= 0; --k) {
        s[k] = acc;
        acc = c[k] + root * acc;
    }
    remainder = acc;
    return Polynomial(p.var(), std::move(s));
}

}  // namespace

bool divide_by_base(const Polynomial& p, Polynomial& quotient) {
    // 1 - lambda = -(lambda - 1); 1 + zeta = zeta - (-1).
    const bool is_lambda = p.var() == Var::lambda;
    Rational rem;
    Polynomial q = divide_linear(p, Rational(is_lambda ? 1 : -1), rem);
    if (!rem.is_zero()) return false;
    quotient = is_lambda ? -q : q;
    return true;
}

Polynomial RationalFunction::base_poly(Var v) {
    return Polynomial(v, {Rational(1), Rational(v == Var::lambda ? -1 : 1)});
}

RationalFunction::RationalFunction(Polynomial numerator, long power)
    : num_(std::move(numerator)), power_(power) {
    canonicalize();
}

void RationalFunction::canonicalize() {
    if (num_.is_zero()) {
        power_ = 0;
        return;
    }
    if (power_ < 0) {
        num_ = num_ * pow(base_poly(var()), static_cast<int>(-power_));
        power_ = 0;
    }
    Polynomial q(var());
    while (power_ > 0 && divide_by_base(num_, q)) {
        num_ = q;
        --power_;
    }
}

RationalFunction RationalFunction::derivative() const {
    const Polynomial base = base_poly(var());
    // (N/b^p)' = (N'b - p N b')/b^(p+1), with b' = -1 (lambda) or +1 (zeta).
    const long bprime = var() == Var::lambda ? -1 : 1;
    Polynomial n = num_.derivative() * base -
                   num_ * Polynomial::constant(var(), Rational(power_ * bprime));
    return RationalFunction(std::move(n), power_ + 1);
}

RationalFunction RationalFunction::times_base_power(long k) const {
    return RationalFunction(num_, power_ - k);
}

RationalFunction RationalFunction::times(const Polynomial& p) const {
    return RationalFunction(num_ * p, power_);
}

RationalFunction mobius_substitute(const RationalFunction& f, MobiusDirection dir) {
    const Var source = dir == MobiusDirection::lambda_to_zeta ? Var::lambda : Var::zeta;
    const Var target = dir == MobiusDirection::lambda_to_zeta ? Var::zeta : Var::lambda;
    if (f.var() != source)
        throw std::invalid_argument("mobius_substitute: variable does not match direction");
    if (f.is_zero()) return RationalFunction::zero(target);

    // With x = t/base_t(t), a numerator of degree d maps to
    // H(t) = sum c_k t^k base_t^(d-k) over base_t^d, and the source base
    // factor itself maps to 1/base_t, so base^p contributes base_t^p on top.
    const Polynomial base_t = RationalFunction::base_poly(target);
    const int d = f.numerator().degree();
    Polynomial h(target);
    for (int k = 0; k <= d; ++k) {
        const Rational c = f.numerator().coeff(k);
        if (c.is_zero()) continue;
        Polynomial term = Polynomial::monomial(target, c, k) * pow(base_t, d - k);
        h = h + term;
    }
    return RationalFunction(std::move(h), static_cast<long>(d) - f.power());
}

}  // namespace rseq
