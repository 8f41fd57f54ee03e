#pragma once

#include "rseq/power_series.hpp"
#include "rseq/sequence.hpp"

namespace rseq {

/// Exact truncations of the defining exponential generating functions:
/// tree is sum n^(n-1) z^n/n!, endo is sum n^n z^n/n!, r_of_m is
/// sum n^(n-m) z^n/n! for any integer m.
enum class EgfKind { tree, endo, r_of_m };

struct EgfPrefix {
    EgfKind kind;
    int m;  // meaningful for r_of_m only
    int order;
    PowerSeries series;
};

EgfPrefix egf_prefix(EgfKind kind, int m, int order);

/// Shared builder used by the oracle checks (bound 64).
const SequenceBuilder& default_sequence_builder();

/// Exact series check of zeta = lambda/(1-lambda): divides the tree
/// prefix by (1 - tree prefix) and compares with the endo prefix.
bool verify_lambda_zeta_relation(int order);

/// The fully independent check that a closed form really is R_m: expand
/// the lambda form, compose with the tree prefix, and compare with the
/// defining coefficients n^(n-m)/n!; likewise for the zeta form against
/// the endo prefix. True iff both match exactly.
bool verify_closed_form(int m, int order);
bool verify_closed_form(int m, int order, const SequenceBuilder& builder);

/// Matrix enumeration behind the probability interpretation of g(m,k):
/// columns are permutations of {1..k}; a matrix matches when every value
/// j in 2..k sits strictly above the value 1 in at least one column AND
/// the first column lists 2..k in increasing order top to bottom (one
/// canonical representative per relabeling of {2..k}). The serial count
/// is the plain reference; the parallel count splits the enumeration
/// over a column prefix and must return the identical total.
unsigned long long count_matching_serial(int k, int ncols);
unsigned long long count_matching_parallel(int k, int ncols);

/// count/(k!)^(m-k+1) over the enumeration above; equals g(m,k).
/// Refuses cells whose matrix count exceeds the budget.
Rational g_probability_bruteforce(int m, int k,
                                  unsigned long long budget = 200000ull);

/// Budget override from RSEQ_ENUM_BUDGET (falls back to 200000).
unsigned long long enum_budget_from_env();

}  // namespace rseq
