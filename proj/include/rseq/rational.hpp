#pragma once

#include <gmpxx.h>

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace rseq {

/// Arbitrary-precision signed integer (GMP).
using Int = mpz_class;

/// Exact rational scalar: always in lowest terms, denominator >= 1,
/// zero stored as 0/1. Values are immutable in spirit (all operations
/// return new values) and safe to share across threads.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(n) {}
    Rational(const Int& n) : v_(n) {}
    Rational(const Int& num, const Int& den) : v_(num, den) { normalize(); }
    Rational(long num, long den) : v_(Int(num), Int(den)) { normalize(); }

    Int numerator() const { return v_.get_num(); }
    Int denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    /// Canonical text form: "p/q", with "/q" omitted when q == 1 and the
    /// minus sign carried by the numerator (e.g. "-415/3456").
    std::string str() const { return v_.get_str(); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(mpq_class(a.v_ + b.v_));
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(mpq_class(a.v_ - b.v_));
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(mpq_class(a.v_ * b.v_));
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw std::domain_error("Rational: division by zero");
        return Rational(mpq_class(a.v_ / b.v_));
    }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) <= 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) > 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) >= 0; }

private:
    explicit Rational(mpq_class v) : v_(std::move(v)) {}

    void normalize() {
        if (sgn(mpq_class(v_.get_den())) == 0)
            throw std::domain_error("Rational: zero denominator");
        v_.canonicalize();
    }

    mpq_class v_;
};

Rational abs(const Rational& r);

/// r^e with integer e; e < 0 requires r != 0.
Rational pow(const Rational& r, long e);

/// n^e for e >= 0.
Int pow(const Int& n, unsigned long e);

}  // namespace rseq
