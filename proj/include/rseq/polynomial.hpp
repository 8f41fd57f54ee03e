#pragma once

#include "rseq/rational.hpp"

#include <vector>

namespace rseq {

/// Formal variable tag. lambda is the tree variable, zeta the
/// endofunction variable; arithmetic never mixes the two.
enum class Var { lambda, zeta };

const char* var_name(Var v);

/// Dense univariate polynomial over Rational in one tagged variable.
/// Coefficients ascending by power, trailing zeros trimmed; the zero
/// polynomial has an empty coefficient list and degree -1.
class Polynomial {
public:
    explicit Polynomial(Var v) : var_(v) {}
    Polynomial(Var v, std::vector<Rational> coeffs);

    static Polynomial constant(Var v, const Rational& c);
    static Polynomial monomial(Var v, const Rational& c, int power);

    Var var() const { return var_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return c_; }

    /// Coefficient of var^k (zero beyond the stored range).
    Rational coeff(int k) const;

    Polynomial derivative() const;
    Rational evaluate(const Rational& x) const;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial operator-() const;
    bool operator==(const Polynomial& o) const { return var_ == o.var_ && c_ == o.c_; }

private:
    static void check_same_var(const Polynomial& a, const Polynomial& b);
    void trim();

    Var var_;
    std::vector<Rational> c_;
};

Polynomial pow(const Polynomial& p, int e);

/// Formal integral against the weight (1-rho)/rho from 0 to lambda:
/// termwise lambda^k -> lambda^k/k - lambda^(k+1)/(k+1). Requires a
/// lambda-variable polynomial with zero constant term (so the 1/rho
/// weight cancels); the result again has zero constant term.
Polynomial weighted_integral(const Polynomial& p);

}  // namespace rseq
