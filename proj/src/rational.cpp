#include "rseq/rational.hpp"

namespace rseq {

Rational abs(const Rational& r) {
    return r.sign() < 0 ? -r : r;
}

Rational pow(const Rational& r, long e) {
    if (e < 0) {
        if (r.is_zero()) throw std::domain_error("Rational: 0 to a negative power");
        return pow(Rational(r.denominator(), r.numerator()), -e);
    }
    Int num, den;
    mpz_pow_ui(num.get_mpz_t(), r.numerator().get_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(den.get_mpz_t(), r.denominator().get_mpz_t(), static_cast<unsigned long>(e));
    return Rational(num, den);  // coprime inputs stay coprime under powers
}

Int pow(const Int& n, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), n.get_mpz_t(), e);
    return r;
}

}  // namespace rseq
