#pragma once

#include "rseq/rational.hpp"

#include <string>
#include <vector>

namespace rseq {

struct AlternatingSum {
    Rational value;
    bool matches_inverse_factorial;  // value == 1/m!
};

/// sum_{j=1..m} (-1)^(j-1) h(m,j), together with the exact comparison
/// against 1/m!.
AlternatingSum alternating_sum_h(int m);

struct DiagGapEntry {
    int m;
    Rational gap;  // |h(m,m) - 1/e|, exact against the 1/e reference
};

struct DiagTrendReport {
    std::vector<DiagGapEntry> entries;  // m = 2..M
    bool strictly_decreasing;
};

/// Gap of the diagonal h(m,m) to 1/e for m = 2..M. Comparisons are exact
/// rational arithmetic against inv_e_reference(); no binary floating
/// point is involved in the verdict.
DiagTrendReport diag_limit_trend(int M);

/// True iff 1!2!...m! * h(m,k) and (1!2!...k!)^(m-k+1) * h(m,k) are both
/// integers for every 1 <= k <= m.
bool integrality_check(int m);

struct AsymptoticReport {
    int k = 0;
    int m_lo = 0, m_hi = 0;               // inclusive sample window
    std::vector<Rational> scaled_values;  // (k-1)! h(m,k) over the window
    std::vector<std::vector<Rational>> difference_table;  // forward differences
    bool stabilized = false;              // (k-1)-th row settled within tolerance
    long newton_base = 0;
    std::vector<Int> newton_coeffs;       // empty unless a fit was produced
    std::vector<Rational> monomial_coeffs;  // ascending powers of m
};

/// Difference-table fit of (k-1)! h(m,k) over m in [M-8, M]: reports the
/// table, whether the (k-1)-th differences have stabilized within the
/// tolerance, and if so the Newton-form polynomial (integer-rounded
/// coefficients at the top of the window) expanded into powers of m.
AsymptoticReport asym_fit(int k, int M,
                          const Rational& tolerance = Rational(1L, 1000000000L));

/// |Delta^order of (k-1)! h(m,k)| at base points m = m_lo..m_hi.
std::vector<Rational> scaled_h_difference_magnitudes(int k, int order, int m_lo, int m_hi);

/// True iff the m-th second-order Eulerian row sums to (2m-1)!!.
bool eulerian2_rowsum_check(int n);

/// Rational approximation of 1/e accurate to well under 10^-80.
const Rational& inv_e_reference();

/// Exact decimal rendering with the given number of fractional digits,
/// rounding half away from zero.
std::string decimal_string(const Rational& v, int digits);

}  // namespace rseq
