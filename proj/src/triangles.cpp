#include "rseq/triangles.hpp"

#include "rseq/combinatorics.hpp"
#include "rseq/polynomial.hpp"
#include "rseq/power_series.hpp"

#include <stdexcept>

namespace rseq {

const char* triangle_rule_name(TriangleRule r) {
    switch (r) {
        case TriangleRule::eulerian2: return "eulerian2";
        case TriangleRule::stirling2_assoc: return "stirling2assoc";
        case TriangleRule::g: return "g";
        case TriangleRule::h: return "h";
        case TriangleRule::big_n: return "N";
    }
    return "?";
}

namespace {

Rational row_at(const std::vector<Rational>& row, int idx) {
    if (idx < 0 || idx >= static_cast<int>(row.size())) return Rational();
    return row[idx];
}

}  // namespace

std::vector<Rational> Triangle::compute_row(int m) const {
    switch (rule_) {
        case TriangleRule::eulerian2: {
            // <<m,k>> = (k+1)<<m-1,k>> + (2m-k-1)<<m-1,k-1>>, <<0,0>> = 1.
            if (m == 0) return {Rational(1)};
            const auto& prev = rows_[m - 1];
            std::vector<Rational> row(m);
            for (int k = 0; k < m; ++k) {
                row[k] = Rational(k + 1) * row_at(prev, k) +
                         Rational(2 * m - k - 1) * row_at(prev, k - 1);
            }
            return row;
        }
        case TriangleRule::stirling2_assoc: {
            // {{m,k}} = k{{m-1,k}} + (m-1){{m-2,k-1}}, {{0,0}} = 1,
            // zero when m < 2k (m > 0) or k < 0.
            if (m == 0) return {Rational(1)};
            std::vector<Rational> row(m / 2 + 1);
            for (int k = 1; 2 * k <= m; ++k) {
                Rational a = row_at(rows_[m - 1], k);
                Rational b = m >= 2 ? row_at(rows_[m - 2], k - 1) : Rational();
                row[k] = Rational(k) * a + Rational(m - 1) * b;
            }
            return row;
        }
        case TriangleRule::g: {
            // k g(m,k) = g(m-1,k) + g(m-1,k-1); g(m,1) = 1; 0 for k > m.
            std::vector<Rational> row(m);
            row[0] = Rational(1);
            const auto& prev = rows_[m - 1];
            for (int k = 2; k <= m; ++k) {
                row[k - 1] = (row_at(prev, k - 1) + row_at(prev, k - 2)) / Rational(k);
            }
            return row;
        }
        case TriangleRule::h: {
            // k h(m,k) = h(m-1,k) + (m-k+1) h(m,k-1); h(m,1) = 1.
            std::vector<Rational> row(m);
            row[0] = Rational(1);
            for (int k = 2; k <= m; ++k) {
                Rational up = row_at(rows_[m - 1], k - 1);
                row[k - 1] = (up + Rational(m - k + 1) * row[k - 2]) / Rational(k);
            }
            return row;
        }
        case TriangleRule::big_n: {
            std::vector<Rational> row(m);
            for (int k = 1; k <= m; ++k) row[k - 1] = Rational(numerator_N(m, k));
            return row;
        }
    }
    throw std::logic_error("Triangle: unknown rule");
}

void Triangle::extend(int m) const {
    const bool one_based = rule_ == TriangleRule::g || rule_ == TriangleRule::h ||
                           rule_ == TriangleRule::big_n;
    if (one_based && rows_.empty()) rows_.push_back({});  // unused slot for m = 0
    while (static_cast<int>(rows_.size()) <= m) {
        rows_.push_back(compute_row(static_cast<int>(rows_.size())));
    }
}

Rational Triangle::value(int m, int k) const {
    const bool one_based = rule_ == TriangleRule::g || rule_ == TriangleRule::h ||
                           rule_ == TriangleRule::big_n;
    if (m < (one_based ? 1 : 0))
        throw std::domain_error("Triangle: row index below the triangle");
    std::lock_guard<std::mutex> lock(mu_);
    extend(m);
    switch (rule_) {
        case TriangleRule::eulerian2:
        case TriangleRule::stirling2_assoc:
            return row_at(rows_[m], k);
        default:
            return row_at(rows_[m], k - 1);
    }
}

std::vector<Rational> Triangle::row(int m) const {
    const bool one_based = rule_ == TriangleRule::g || rule_ == TriangleRule::h ||
                           rule_ == TriangleRule::big_n;
    if (m < (one_based ? 1 : 0))
        throw std::domain_error("Triangle: row index below the triangle");
    std::lock_guard<std::mutex> lock(mu_);
    extend(m);
    return rows_[m];
}

const Triangle& eulerian2_triangle() {
    static Triangle t(TriangleRule::eulerian2);
    return t;
}
const Triangle& stirling2_assoc_triangle() {
    static Triangle t(TriangleRule::stirling2_assoc);
    return t;
}
const Triangle& g_triangle() {
    static Triangle t(TriangleRule::g);
    return t;
}
const Triangle& h_triangle() {
    static Triangle t(TriangleRule::h);
    return t;
}
const Triangle& big_n_triangle() {
    static Triangle t(TriangleRule::big_n);
    return t;
}

Int eulerian2(int m, int k) {
    return eulerian2_triangle().value(m, k).numerator();
}

Int stirling2_assoc(int m, int k) {
    return stirling2_assoc_triangle().value(m, k).numerator();
}

Rational g_rec(int m, int k) {
    if (k < 1 || k > m) {
        if (m < 1) throw std::domain_error("g_rec: m must be >= 1");
        return Rational();
    }
    return g_triangle().value(m, k);
}

Rational h_rec(int m, int k) {
    if (m < 1) throw std::domain_error("h_rec: m must be >= 1");
    if (k < 1 || k > m) return Rational();
    return h_triangle().value(m, k);
}

namespace {

void require_in_triangle(int m, int k, const char* who) {
    if (k < 1 || k > m)
        throw std::domain_error(std::string(who) + ": requires 1 <= k <= m");
}

// Sum over weakly increasing tuples lo <= i_1 <= ... <= i_len <= k of the
// reciprocal products.
Rational egyptian_sum(int lo, int k, int len) {
    if (len == 0) return Rational(1);
    Rational total;
    for (int i = lo; i <= k; ++i) {
        total += Rational(Int(1), Int(i)) * egyptian_sum(i, k, len - 1);
    }
    return total;
}

// Integral of (x_1...x_dim)^e over the unit dim-cube.
Rational monomial_cube_integral(int e, int dim) {
    return Rational(Int(1), pow(Int(e + 1), static_cast<unsigned long>(dim)));
}

}  // namespace

Rational g_egyptian(int m, int k) {
    require_in_triangle(m, k, "g_egyptian");
    return egyptian_sum(1, k, m - k) / Rational(factorial(k));
}

Rational g_difference(int m, int k) {
    require_in_triangle(m, k, "g_difference");
    Rational sum;
    for (int j = 0; j <= k - 1; ++j) {
        Rational term = Rational(binomial(k - 1, j), pow(Int(j + 1), static_cast<unsigned long>(m - k + 1)));
        sum += j % 2 == 0 ? term : -term;
    }
    return sum / Rational(factorial(k - 1));
}

Rational g_genfunc(int m, int k) {
    require_in_triangle(m, k, "g_genfunc");
    // [z^(m-k)] of prod_{p=1..k} 1/(p-z), each factor (1/p) sum (z/p)^j.
    const int order = m - k;
    PowerSeries prod(std::vector<Rational>(order + 1, Rational()));
    {
        std::vector<Rational> one(order + 1);
        one[0] = Rational(1);
        prod = PowerSeries(std::move(one));
    }
    for (int p = 1; p <= k; ++p) {
        std::vector<Rational> f(order + 1);
        for (int j = 0; j <= order; ++j) {
            f[j] = Rational(Int(1), pow(Int(p), static_cast<unsigned long>(j + 1)));
        }
        prod = prod * PowerSeries(std::move(f));
    }
    return prod.coeff(order);
}

Rational g_hypercube(int m, int k) {
    require_in_triangle(m, k, "g_hypercube");
    // (1-x_1...x_d)^(k-1) expanded by the binomial theorem, integrated
    // monomial by monomial over the unit d-cube, d = m-k+1.
    const int d = m - k + 1;
    Rational sum;
    for (int j = 0; j <= k - 1; ++j) {
        Rational term = Rational(binomial(k - 1, j)) * monomial_cube_integral(j, d);
        sum += j % 2 == 0 ? term : -term;
    }
    return sum / Rational(factorial(k - 1));
}

Int numerator_N(int m, int k) {
    require_in_triangle(m, k, "numerator_N");
    Rational scaled = g_rec(m, k) * pow(Rational(factorial(k)), m - k + 1);
    if (!scaled.is_integer())
        throw std::runtime_error("numerator_N: internal error, g(m,k)*(k!)^(m-k+1) not integral");
    // Independent construction: [z^(m-k)] prod_{p=1..k} 1/(1 - (k!/p) z).
    const int order = m - k;
    const Int kfac = factorial(k);
    std::vector<Rational> one(order + 1);
    one[0] = Rational(1);
    PowerSeries prod{std::move(one)};
    for (int p = 1; p <= k; ++p) {
        const Rational ratio(kfac, Int(p));
        std::vector<Rational> f(order + 1);
        f[0] = Rational(1);
        for (int j = 1; j <= order; ++j) f[j] = f[j - 1] * ratio;
        prod = prod * PowerSeries(std::move(f));
    }
    if (prod.coeff(order) != scaled)
        throw std::runtime_error("numerator_N: internal error, the two constructions disagree");
    return scaled.numerator();
}

Rational h_from_g(int m, int k) {
    require_in_triangle(m, k, "h_from_g");
    Rational sum;
    for (int j = 1; j <= k; ++j) {
        Rational term = Rational(binomial(m - j, k - j)) * g_rec(m, j);
        sum += j % 2 == 1 ? term : -term;
    }
    return sum;
}

Rational virtual_stirling(int neg_k, int n) {
    if (neg_k > -1) throw std::domain_error("virtual_stirling: first index must be <= -1");
    if (n < 0) throw std::domain_error("virtual_stirling: second index must be >= 0");
    const int k = -neg_k;
    Rational v = g_rec(n + k, k);
    return k % 2 == 0 ? v : -v;
}

Rational gen_bernoulli_neg(int m, int k) {
    if (k < 1 || k > m - 1)
        throw std::domain_error("gen_bernoulli_neg: requires 1 <= k <= m-1");
    return -g_rec(m, k) / Rational(binomial(m - 1, k));
}

bool verify_eq5(int m) {
    if (m < 1) throw std::domain_error("verify_eq5: m must be >= 1");
    // sum_k <<m,k>> (1+z)^(m-k-1) z^k  ==  sum_k {{m+k,k}} z^(k-1).
    // <<m,m>> = 0 for m >= 1, so the left sum stops at k = m-1 and every
    // exponent stays nonnegative.
    const Polynomial one_plus = Polynomial(Var::zeta, {Rational(1), Rational(1)});
    Polynomial lhs(Var::zeta);
    for (int k = 0; k <= m - 1; ++k) {
        const Rational c(eulerian2(m, k));
        if (c.is_zero()) continue;
        lhs = lhs + Polynomial::monomial(Var::zeta, c, k) * pow(one_plus, m - k - 1);
    }
    std::vector<Rational> rc(m);
    for (int k = 1; k <= m; ++k) rc[k - 1] = Rational(stirling2_assoc(m + k, k));
    return lhs == Polynomial(Var::zeta, std::move(rc));
}

bool verify_eq6(int n, int q) {
    if (n < 1 || q < 1) throw std::domain_error("verify_eq6: n, q must be >= 1");
    Int sum = 0;
    for (int i = 0; i <= n; ++i) {
        sum += binomial(n - i - 1, q - i - 1) * eulerian2(n, i);
    }
    return sum == stirling2_assoc(n + q, q);
}

bool verify_eq7(int n, int q) {
    if (n < 1 || q < 0) throw std::domain_error("verify_eq7: n >= 1, q >= 0 required");
    Int sum = 0;
    for (int i = 0; i <= n; ++i) {
        Int term = binomial(n - i - 1, q - i) * stirling2_assoc(n + i + 1, i + 1);
        const bool negate = ((q - i) % 2 + 2) % 2 == 1;
        sum += negate ? Int(-term) : term;
    }
    return sum == eulerian2(n, q);
}

bool connection_series(int k, int order) {
    if (k < 1 || order < 0)
        throw std::domain_error("connection_series: k >= 1, order >= 0 required");
    // 1/((x+1)(x+2)...(x+k)), each factor 1/(x+p) = sum (-1)^j x^j / p^(j+1).
    std::vector<Rational> one(order + 1);
    one[0] = Rational(1);
    PowerSeries prod{std::move(one)};
    for (int p = 1; p <= k; ++p) {
        std::vector<Rational> f(order + 1);
        for (int j = 0; j <= order; ++j) {
            Rational t(Int(1), pow(Int(p), static_cast<unsigned long>(j + 1)));
            f[j] = j % 2 == 0 ? t : -t;
        }
        prod = prod * PowerSeries(std::move(f));
    }
    for (int n = 0; n <= order; ++n) {
        Rational expected = g_rec(k + n, k);
        if (n % 2 == 1) expected = -expected;
        if (prod.coeff(n) != expected) return false;
    }
    return true;
}

}  // namespace rseq
