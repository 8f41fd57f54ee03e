#include "rseq/polynomial.hpp"

#include <stdexcept>

namespace rseq {

const char* var_name(Var v) {
    return v == Var::lambda ? "lambda" : "zeta";
}

Polynomial::Polynomial(Var v, std::vector<Rational> coeffs)
    : var_(v), c_(std::move(coeffs)) {
    trim();
}

Polynomial Polynomial::constant(Var v, const Rational& c) {
    return Polynomial(v, {c});
}

Polynomial Polynomial::monomial(Var v, const Rational& c, int power) {
    if (power < 0) throw std::domain_error("Polynomial: negative power");
    std::vector<Rational> cs(power + 1);
    cs[power] = c;
    return Polynomial(v, std::move(cs));
}

Rational Polynomial::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return Rational();
    return c_[k];
}

void Polynomial::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

void Polynomial::check_same_var(const Polynomial& a, const Polynomial& b) {
    if (a.var_ != b.var_)
        throw std::invalid_argument("Polynomial: mixed variable tags");
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    Polynomial::check_same_var(a, b);
    std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < r.size(); ++i) {
        r[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
    }
    return Polynomial(a.var_, std::move(r));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    return a + (-b);
}

Polynomial Polynomial::operator-() const {
    std::vector<Rational> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
    return Polynomial(var_, std::move(r));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial::check_same_var(a, b);
    if (a.is_zero() || b.is_zero()) return Polynomial(a.var_);
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) {
            r[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return Polynomial(a.var_, std::move(r));
}

Polynomial Polynomial::derivative() const {
    if (c_.size() <= 1) return Polynomial(var_);
    std::vector<Rational> r(c_.size() - 1);
    for (size_t k = 1; k < c_.size(); ++k) {
        r[k - 1] = c_[k] * Rational(static_cast<long>(k));
    }
    return Polynomial(var_, std::move(r));
}

Rational Polynomial::evaluate(const Rational& x) const {
    Rational acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

Polynomial pow(const Polynomial& p, int e) {
    if (e < 0) throw std::domain_error("Polynomial: negative exponent");
    Polynomial r = Polynomial::constant(p.var(), 1);
    for (int i = 0; i < e; ++i) r = r * p;
    return r;
}

Polynomial weighted_integral(const Polynomial& p) {
    if (p.var() != Var::lambda)
        throw std::invalid_argument("weighted_integral: expects the lambda variable");
    if (!p.coeff(0).is_zero())
        throw std::domain_error("weighted_integral: nonzero constant term");
    std::vector<Rational> r(p.coeffs().size() + 1);
    for (int k = 1; k <= p.degree(); ++k) {
        const Rational& c = p.coeff(k);
        if (c.is_zero()) continue;
        r[k] += c / Rational(k);
        r[k + 1] -= c / Rational(k + 1);
    }
    return Polynomial(Var::lambda, std::move(r));
}

}  // namespace rseq
