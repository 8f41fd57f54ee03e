#pragma once

#include "rseq/rational.hpp"

#include <mutex>
#include <string>
#include <vector>

namespace rseq {

/// The five coefficient triangles.
///   eulerian2       second-order Eulerian <<m,k>>
///   stirling2_assoc associated Stirling of the second kind {{m,k}}
///                   (partitions into blocks of size >= 2)
///   g               coefficients of the positive-index lambda polynomials
///   h               numerator coefficients of the positive-index zeta forms
///   big_n           integer numerators N(m,k) = g(m,k) * (k!)^(m-k+1)
enum class TriangleRule { eulerian2, stirling2_assoc, g, h, big_n };

const char* triangle_rule_name(TriangleRule r);

/// Memoized triangle with row-major fill. Rows are cached under a lock,
/// so one instance may be shared across threads; reads outside the
/// cached range extend it.
class Triangle {
public:
    explicit Triangle(TriangleRule rule) : rule_(rule) {}

    TriangleRule rule() const { return rule_; }

    /// Entry (m,k); indices outside the triangle's support return 0.
    /// Negative m (or m < 1 for g/h/big_n) is a domain error.
    Rational value(int m, int k) const;

    /// The canonical row for index m: k = 0..m-1 for eulerian2 (row 0 is
    /// {1}), k = 0..floor(m/2) for stirling2_assoc, k = 1..m otherwise.
    std::vector<Rational> row(int m) const;

private:
    void extend(int m) const;
    std::vector<Rational> compute_row(int m) const;

    TriangleRule rule_;
    mutable std::mutex mu_;
    mutable std::vector<std::vector<Rational>> rows_;
};

/// Shared memoized instances.
const Triangle& eulerian2_triangle();
const Triangle& stirling2_assoc_triangle();
const Triangle& g_triangle();
const Triangle& h_triangle();
const Triangle& big_n_triangle();

// Recurrence-backed entry points.
Int eulerian2(int m, int k);
Int stirling2_assoc(int m, int k);
Rational g_rec(int m, int k);
Rational h_rec(int m, int k);

// The four closed-form routes to g(m,k), each a first-class citizen and
// each required to agree with g_rec. All require 1 <= k <= m.
Rational g_egyptian(int m, int k);
Rational g_difference(int m, int k);
Rational g_genfunc(int m, int k);
Rational g_hypercube(int m, int k);

/// N(m,k) = g(m,k)*(k!)^(m-k+1), checked for integrality and against the
/// independent generating-function construction; disagreement raises an
/// internal error.
Int numerator_N(int m, int k);

/// h(m,k) as the alternating binomial combination of the g row.
Rational h_from_g(int m, int k);

/// Virtual Stirling number s(neg_k, n) = (-1)^k g(n+k, k) for neg_k <= -1.
Rational virtual_stirling(int neg_k, int n);

/// Generalized Bernoulli number of negative order,
/// B_{-m}^{(-k)} = -g(m,k)/C(m-1,k), defined for 1 <= k <= m-1.
Rational gen_bernoulli_neg(int m, int k);

// Identity verifiers. Each expands both sides exactly and compares.
bool verify_eq5(int m);             // eulerian/stirling polynomial identity
bool verify_eq6(int n, int q);      // {{n+q,q}} as a binomial sum of <<n,i>>
bool verify_eq7(int n, int q);      // inverse pair of verify_eq6
bool connection_series(int k, int order);  // 1/((x+1)...(x+k)) coefficients

}  // namespace rseq
