#include "rseq/combinatorics.hpp"

namespace rseq {

Int factorial(long n) {
    if (n < 0) throw std::domain_error("factorial: negative argument");
    Int r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

Int binomial(long n, long k) {
    if (k < 0) return 0;
    Int r, nn(n);
    mpz_bin_ui(r.get_mpz_t(), nn.get_mpz_t(), static_cast<unsigned long>(k));
    return r;
}

Int double_factorial_odd(long n) {
    if (n < 0) throw std::domain_error("double_factorial_odd: negative argument");
    if (n == 0) return 1;
    Int r;
    mpz_2fac_ui(r.get_mpz_t(), static_cast<unsigned long>(2 * n - 1));
    return r;
}

Int superfactorial(long m) {
    if (m < 1) throw std::domain_error("superfactorial: argument must be >= 1");
    Int r = 1;
    for (long i = 2; i <= m; ++i) r *= factorial(i);
    return r;
}

}  // namespace rseq
