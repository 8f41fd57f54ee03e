#include "rseq/analysis.hpp"

#include "rseq/combinatorics.hpp"
#include "rseq/triangles.hpp"

#include <stdexcept>

namespace rseq {

AlternatingSum alternating_sum_h(int m) {
    if (m < 1) throw std::domain_error("alternating_sum_h: m must be >= 1");
    Rational sum;
    for (int j = 1; j <= m; ++j) {
        const Rational t = h_rec(m, j);
        sum += j % 2 == 1 ? t : -t;
    }
    return AlternatingSum{sum, sum == Rational(Int(1), factorial(m))};
}

const Rational& inv_e_reference() {
    // 1/e from the partial sum of e to n = 60; the tail is below 2/61!,
    // so the reciprocal is accurate far beyond every tolerance used here.
    static const Rational value = [] {
        Rational e;
        for (int n = 0; n <= 60; ++n) e += Rational(Int(1), factorial(n));
        return Rational(1) / e;
    }();
    return value;
}

DiagTrendReport diag_limit_trend(int M) {
    if (M < 2) throw std::domain_error("diag_limit_trend: M must be >= 2");
    DiagTrendReport report;
    report.strictly_decreasing = true;
    for (int m = 2; m <= M; ++m) {
        Rational gap = abs(h_rec(m, m) - inv_e_reference());
        if (!report.entries.empty() && !(gap < report.entries.back().gap))
            report.strictly_decreasing = false;
        report.entries.push_back(DiagGapEntry{m, std::move(gap)});
    }
    return report;
}

bool integrality_check(int m) {
    if (m < 1) throw std::domain_error("integrality_check: m must be >= 1");
    const Rational super_m{superfactorial(m)};
    for (int k = 1; k <= m; ++k) {
        const Rational h = h_rec(m, k);
        if (!(super_m * h).is_integer()) return false;
        const Rational scale = pow(Rational(superfactorial(k)), m - k + 1);
        if (!(scale * h).is_integer()) return false;
    }
    return true;
}

namespace {

Int round_nearest(const Rational& r) {
    // floor((2p + q) / (2q)): round half up, exact.
    Int num = 2 * r.numerator() + r.denominator();
    Int den = 2 * r.denominator();
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

std::vector<Rational> convolve(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    std::vector<Rational> r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

}  // namespace

AsymptoticReport asym_fit(int k, int M, const Rational& tolerance) {
    if (k < 2)
        throw std::domain_error("asym_fit: h(m,1) is identically 1; the fit needs k >= 2");
    if (M < k + 8) throw std::domain_error("asym_fit: M must be at least k + 8");

    AsymptoticReport report;
    report.k = k;
    report.m_lo = M - 8;
    report.m_hi = M;

    const Rational scale{factorial(k - 1)};
    for (int m = report.m_lo; m <= report.m_hi; ++m) {
        report.scaled_values.push_back(scale * h_rec(m, k));
    }
    report.difference_table.push_back(report.scaled_values);
    while (report.difference_table.back().size() > 1) {
        const auto& prev = report.difference_table.back();
        std::vector<Rational> next(prev.size() - 1);
        for (size_t i = 0; i + 1 < prev.size(); ++i) next[i] = prev[i + 1] - prev[i];
        report.difference_table.push_back(std::move(next));
    }

    if (static_cast<size_t>(k - 1) >= report.difference_table.size()) return report;
    const auto& settle_row = report.difference_table[k - 1];
    if (settle_row.size() < 2) return report;  // window too short for this k
    report.stabilized =
        abs(settle_row[settle_row.size() - 1] - settle_row[settle_row.size() - 2]) < tolerance;
    if (!report.stabilized) return report;

    // Newton coefficients at the top of the window, where the transient
    // part of h(m,k) is smallest; they must sit within tolerance of
    // integers for the fit to be reported.
    const long base = report.m_hi - (k - 1);
    const size_t idx = static_cast<size_t>(base - report.m_lo);
    std::vector<Int> newton;
    for (int j = 0; j <= k - 1; ++j) {
        const Rational& c = report.difference_table[j][idx];
        Int r = round_nearest(c);
        if (!(abs(c - Rational(r)) < tolerance)) return report;
        newton.push_back(std::move(r));
    }
    report.newton_base = base;
    report.newton_coeffs = std::move(newton);

    // Expand sum_j c_j * C(x - base, j) into powers of x.
    std::vector<Rational> poly(k);
    for (int j = 0; j <= k - 1; ++j) {
        std::vector<Rational> term{Rational(1)};
        for (int i = 0; i < j; ++i) {
            term = convolve(term, {Rational(-(base + i)), Rational(1)});
        }
        const Rational c = Rational(report.newton_coeffs[j]) / Rational(factorial(j));
        for (size_t i = 0; i < term.size(); ++i) poly[i] += c * term[i];
    }
    report.monomial_coeffs = std::move(poly);
    return report;
}

std::vector<Rational> scaled_h_difference_magnitudes(int k, int order, int m_lo, int m_hi) {
    if (k < 1 || order < 0 || m_lo < 1 || m_hi < m_lo)
        throw std::domain_error("scaled_h_difference_magnitudes: bad window");
    const Rational scale{factorial(k - 1)};
    std::vector<Rational> f;
    for (int m = m_lo; m <= m_hi + order; ++m) f.push_back(scale * h_rec(m, k));
    for (int j = 0; j < order; ++j) {
        for (size_t i = 0; i + 1 < f.size(); ++i) f[i] = f[i + 1] - f[i];
        f.pop_back();
    }
    for (auto& v : f) v = abs(v);
    return f;
}

bool eulerian2_rowsum_check(int n) {
    if (n < 1) throw std::domain_error("eulerian2_rowsum_check: n must be >= 1");
    Int sum = 0;
    for (int k = 0; k <= n - 1; ++k) sum += eulerian2(n, k);
    return sum == double_factorial_odd(n);
}

std::string decimal_string(const Rational& v, int digits) {
    if (digits < 0) throw std::domain_error("decimal_string: negative digit count");
    const bool neg = v.sign() < 0;
    const Int p = neg ? Int(-v.numerator()) : v.numerator();
    const Int q = v.denominator();
    const Int scale = pow(Int(10), static_cast<unsigned long>(digits));
    // round(|v| * 10^digits) half away from zero
    Int scaled;
    {
        Int num = 2 * p * scale + q;
        Int den = 2 * q;
        mpz_fdiv_q(scaled.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
    Int int_part = scaled / scale;
    Int frac_part = scaled % scale;
    std::string s = neg && (sgn(scaled) != 0) ? "-" : "";
    s += int_part.get_str();
    if (digits > 0) {
        std::string frac = frac_part.get_str();
        s += "." + std::string(digits - frac.size(), '0') + frac;
    }
    return s;
}

}  // namespace rseq
