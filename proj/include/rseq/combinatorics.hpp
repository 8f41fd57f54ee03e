#pragma once

#include "rseq/rational.hpp"

namespace rseq {

/// n! for n >= 0; negative n rejected with std::domain_error.
Int factorial(long n);

/// Binomial coefficient for any integer pair: 0 when k < 0, otherwise the
/// falling-factorial product n(n-1)...(n-k+1)/k!, which extends to
/// negative upper index (C(-n,k) = (-1)^k C(n+k-1,k)).
Int binomial(long n, long k);

/// (2n-1)!! = 1*3*5*...*(2n-1); 1 for n = 0.
Int double_factorial_odd(long n);

/// 1!*2!*...*m! for m >= 1.
Int superfactorial(long m);

}  // namespace rseq
