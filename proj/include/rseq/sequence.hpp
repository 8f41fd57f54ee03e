#pragma once

#include "rseq/rational_function.hpp"
#include "rseq/triangles.hpp"

#include <map>
#include <mutex>
#include <string>
#include <vector>

namespace rseq {

/// One member of the bilateral family: the closed forms of
/// R_m(z) = sum_{n>=1} n^(n-m) z^n / n! in both variables.
/// For m >= 1 the lambda form is a degree-m polynomial with zero constant
/// term; for m <= 0 it is lambda*P(lambda)/(1-lambda)^(2|m|+1) with a
/// nonnegative integer numerator row. The zeta form is the Moebius
/// pullback of the lambda form.
struct SequenceEntry {
    int m;
    RationalFunction lambda_form;
    RationalFunction zeta_form;
};

/// G_{m+1} = integral of G_m against the (1-rho)/rho weight. Defined on
/// polynomials with zero constant term (the m >= 1 regime).
RationalFunction apply_integral_operator(const RationalFunction& f);

/// G_{m-1} = (lambda/(1-lambda)) * dG_m/dlambda, canonicalized.
RationalFunction apply_diff_operator_lambda(const RationalFunction& f);

/// H_{m-1} = zeta (1+zeta)^2 * dH_m/dzeta, canonicalized.
RationalFunction apply_diff_operator_zeta(const RationalFunction& f);

/// Closed forms assembled directly from the triangle rows: the Eq-(1)
/// shape for m <= 0 and the coefficient polynomials for m >= 1 (lambda);
/// the factored {{.}} shape for m <= 0 and (1+zeta)^-m sum h(m,k) zeta^k
/// for m >= 1 (zeta).
RationalFunction closed_form_lambda(int m);
RationalFunction closed_form_zeta(int m);

/// Builds entries by operator iteration from G_1 = lambda (integral
/// operator upward, differential operator downward) and cross-checks
/// every entry against the triangle closed forms. Entries are cached;
/// the cache is guarded, so a builder may be shared across threads.
class SequenceBuilder {
public:
    explicit SequenceBuilder(int bound = 64) : bound_(bound) {}

    int bound() const { return bound_; }

    /// Entry for any integer m with |m| <= bound.
    SequenceEntry build(int m) const;

private:
    SequenceEntry build_locked(int m) const;

    int bound_;
    mutable std::mutex mu_;
    mutable std::map<int, SequenceEntry> cache_;
};

/// A coefficient row read back out of a canonical closed form, tagged
/// with the triangle it reproduces.
struct RowExtraction {
    TriangleRule rule;
    std::vector<Rational> values;
};

/// Reads the triangle row out of the entry's canonical form for the
/// requested variable and checks it against the triangle module; a
/// non-canonical shape or a mismatched row raises an error.
RowExtraction extract_row(const SequenceEntry& entry, Var var);

/// Appendix-style one-line rendering, e.g.
/// "G_{-3} = lambda(1+8lambda+6lambda^2)/(1-lambda)^7".
std::string render_text(const SequenceEntry& entry, Var var);

}  // namespace rseq
