#pragma once

#include "rseq/polynomial.hpp"

namespace rseq {

/// Rational function in the canonical shape numerator / base^power where
/// base is the variable's linear factor: (1 - lambda) or (1 + zeta).
/// Kept in lowest terms: when power > 0 the numerator is not divisible
/// by the base factor; power == 0 means the value is a polynomial.
class RationalFunction {
public:
    /// Builds numerator / base^power and canonicalizes. A negative power
    /// multiplies the numerator by base^(-power) instead.
    RationalFunction(Polynomial numerator, long power);

    explicit RationalFunction(Polynomial numerator)
        : RationalFunction(std::move(numerator), 0) {}

    static RationalFunction zero(Var v) { return RationalFunction(Polynomial(v), 0); }

    /// The linear base factor of a variable: 1-lambda or 1+zeta.
    static Polynomial base_poly(Var v);

    Var var() const { return num_.var(); }
    const Polynomial& numerator() const { return num_; }
    long power() const { return power_; }
    bool is_polynomial() const { return power_ == 0; }
    bool is_zero() const { return num_.is_zero(); }

    RationalFunction derivative() const;

    /// Multiplies by base^k for any integer k (re-canonicalized).
    RationalFunction times_base_power(long k) const;
    RationalFunction times(const Polynomial& p) const;

    bool operator==(const RationalFunction& o) const {
        return power_ == o.power_ && num_ == o.num_;
    }

private:
    void canonicalize();

    Polynomial num_;
    long power_;
};

enum class MobiusDirection { lambda_to_zeta, zeta_to_lambda };

/// Exact fractional-linear substitution between the two variables
/// (lambda = zeta/(1+zeta), zeta = lambda/(1-lambda)), by homogenizing
/// the numerator and folding the transformed denominator back in. The
/// two directions are mutually inverse.
RationalFunction mobius_substitute(const RationalFunction& f, MobiusDirection dir);

/// Quotient and divisibility test by the variable's base factor.
/// Returns true and writes the quotient when the base divides p exactly.
bool divide_by_base(const Polynomial& p, Polynomial& quotient);

}  // namespace rseq
