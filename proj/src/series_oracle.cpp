#include "rseq/series_oracle.hpp"

#include "rseq/combinatorics.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rseq {

EgfPrefix egf_prefix(EgfKind kind, int m, int order) {
    if (order < 1) throw std::domain_error("egf_prefix: order must be >= 1");
    std::vector<Rational> c(order + 1);
    for (int n = 1; n <= order; ++n) {
        const int e = kind == EgfKind::tree ? n - 1 : kind == EgfKind::endo ? n : n - m;
        const Int nfac = factorial(n);
        if (e >= 0) {
            c[n] = Rational(pow(Int(n), static_cast<unsigned long>(e)), nfac);
        } else {
            c[n] = Rational(Int(1), pow(Int(n), static_cast<unsigned long>(-e)) * nfac);
        }
    }
    return EgfPrefix{kind, kind == EgfKind::r_of_m ? m : 0, order, PowerSeries(std::move(c))};
}

const SequenceBuilder& default_sequence_builder() {
    static SequenceBuilder builder(64);
    return builder;
}

bool verify_lambda_zeta_relation(int order) {
    const PowerSeries tree = egf_prefix(EgfKind::tree, 0, order).series;
    std::vector<Rational> dc(order + 1);
    dc[0] = Rational(1);
    for (int n = 1; n <= order; ++n) dc[n] = -tree.coeff(n);
    const PowerSeries quotient = divide(tree, PowerSeries(std::move(dc)));
    return quotient == egf_prefix(EgfKind::endo, 0, order).series;
}

bool verify_closed_form(int m, int order, const SequenceBuilder& builder) {
    const SequenceEntry entry = builder.build(m);
    const PowerSeries expected = egf_prefix(EgfKind::r_of_m, m, order).series;
    const PowerSeries tree = egf_prefix(EgfKind::tree, 0, order).series;
    if (!(compose(series_expand(entry.lambda_form, order), tree) == expected)) return false;
    const PowerSeries endo = egf_prefix(EgfKind::endo, 0, order).series;
    return compose(series_expand(entry.zeta_form, order), endo) == expected;
}

bool verify_closed_form(int m, int order) {
    return verify_closed_form(m, order, default_sequence_builder());
}

namespace {

struct PermSet {
    std::vector<uint32_t> above_mask;  // bit j-2: value j above value 1
    std::vector<char> ordered_first;   // 2..k increasing top to bottom
    uint32_t full_mask = 0;
};

PermSet build_perm_set(int k) {
    if (k < 1 || k > 12)
        throw std::domain_error("enumeration: k out of the supported range");
    std::vector<int> perm(k);
    for (int i = 0; i < k; ++i) perm[i] = i + 1;
    PermSet ps;
    ps.full_mask = k >= 2 ? (uint32_t{1} << (k - 1)) - 1 : 0;
    do {
        int pos1 = 0;
        while (perm[pos1] != 1) ++pos1;
        uint32_t mask = 0;
        bool ordered = true;
        int last = 0;
        for (int r = 0; r < k; ++r) {
            const int v = perm[r];
            if (v == 1) continue;
            if (r < pos1) mask |= uint32_t{1} << (v - 2);
            if (v < last) ordered = false;
            last = v;
        }
        ps.above_mask.push_back(mask);
        ps.ordered_first.push_back(ordered ? 1 : 0);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return ps;
}

}  // namespace

unsigned long long count_matching_serial(int k, int ncols) {
    if (ncols < 1) throw std::domain_error("enumeration: need at least one column");
    const PermSet ps = build_perm_set(k);
    const std::size_t nperm = ps.above_mask.size();
    std::vector<std::size_t> ranks(ncols, 0);
    unsigned long long count = 0;
    while (true) {
        uint32_t mask = 0;
        for (int c = 0; c < ncols; ++c) mask |= ps.above_mask[ranks[c]];
        if (mask == ps.full_mask && ps.ordered_first[ranks[0]]) ++count;
        int c = ncols - 1;
        while (c >= 0 && ++ranks[c] == nperm) {
            ranks[c] = 0;
            --c;
        }
        if (c < 0) break;
    }
    return count;
}

unsigned long long count_matching_parallel(int k, int ncols) {
#ifndef _OPENMP
    return count_matching_serial(k, ncols);
#else
    if (ncols < 1) throw std::domain_error("enumeration: need at least one column");
    const PermSet ps = build_perm_set(k);
    const long nperm = static_cast<long>(ps.above_mask.size());
    const int prefix = std::min(ncols, 2);
    long tasks = 1;
    for (int i = 0; i < prefix; ++i) tasks *= nperm;

    unsigned long long total = 0;
#pragma omp parallel for reduction(+ : total) schedule(static)
    for (long t = 0; t < tasks; ++t) {
        std::size_t r0 = static_cast<std::size_t>(t) / (prefix == 2 ? nperm : 1) % nperm;
        std::size_t r1 = prefix == 2 ? static_cast<std::size_t>(t) % nperm : 0;
        if (!ps.ordered_first[r0]) continue;
        uint32_t seed = ps.above_mask[r0];
        if (prefix == 2) seed |= ps.above_mask[r1];
        const int rem = ncols - prefix;
        if (rem == 0) {
            if (seed == ps.full_mask) ++total;
            continue;
        }
        std::vector<std::size_t> ranks(rem, 0);
        while (true) {
            uint32_t mask = seed;
            for (int c = 0; c < rem; ++c) mask |= ps.above_mask[ranks[c]];
            if (mask == ps.full_mask) ++total;
            int c = rem - 1;
            while (c >= 0 && ++ranks[c] == static_cast<std::size_t>(nperm)) {
                ranks[c] = 0;
                --c;
            }
            if (c < 0) break;
        }
    }
    return total;
#endif
}

Rational g_probability_bruteforce(int m, int k, unsigned long long budget) {
    if (k < 1 || k > m)
        throw std::domain_error("g_probability_bruteforce: requires 1 <= k <= m");
    const int ncols = m - k + 1;
    const Int total = pow(factorial(k), static_cast<unsigned long>(ncols));
    if (total > Int(static_cast<unsigned long>(budget)))
        throw std::domain_error("g_probability_bruteforce: enumeration budget exceeded");
    const unsigned long long count = count_matching_parallel(k, ncols);
    return Rational(Int(static_cast<unsigned long>(count)), total);
}

unsigned long long enum_budget_from_env() {
    const char* s = std::getenv("RSEQ_ENUM_BUDGET");
    if (s == nullptr || *s == '\0') return 200000ull;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(s, &end, 10);
    if (end == s || v == 0) return 200000ull;
    return v;
}

}  // namespace rseq
