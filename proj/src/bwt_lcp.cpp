// Copyright 2026 The bwtlcp Authors
// SPDX-License-Identifier: Apache-2.0

#include "bwtlcp/bwt_lcp.hpp"

#include <algorithm>
#include <cassert>
#include <cstring>
#include <limits>

namespace bwtlcp {

std::uint64_t step2a_ell_a(const ValidatedText& text, const LcpArray& lcp,
                           std::size_t s, std::size_t p, BuildStats* stats) {
    const auto bytes = text.bytes();
    const auto& values = lcp.values;
    const unsigned char c = bytes[s];

    // Running minimum is seeded from the entry at the sentinel and extended
    // while scanning leftward; the entry at the match itself is excluded.
    std::uint64_t min_lcp = values[p];
    std::uint64_t comparisons = 0;
    bool found = false;
    std::size_t x = p;
    while (x > s + 1) {
        --x;
        ++comparisons;
        if (bytes[x] == c) {
            found = true;
            break;
        }
        min_lcp = std::min(min_lcp, values[x]);
    }
    if (stats) stats->symbol_comparisons += comparisons;
    return found ? min_lcp + 1 : 0;
}

std::uint64_t step2b_ell_b(const ValidatedText& text, const LcpArray& lcp,
                           std::size_t s, std::size_t p, BuildStats* stats) {
    const auto bytes = text.bytes();
    const auto& values = lcp.values;
    const std::size_t n = bytes.size();
    const unsigned char c = bytes[s];

    std::uint64_t min_lcp = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t comparisons = 0;
    for (std::size_t x = p + 1; x < n; ++x) {
        min_lcp = std::min(min_lcp, values[x]);  // entry at the match is included
        ++comparisons;
        if (bytes[x] == c) {
            if (stats) stats->symbol_comparisons += comparisons;
            return min_lcp + 1;
        }
    }
    if (stats) stats->symbol_comparisons += comparisons;
    return 0;
}

void step4a_shift_and_store(LcpArray& lcp, std::size_t s, std::size_t r,
                            std::uint64_t ell_a, std::uint64_t ell_b) {
    auto& values = lcp.values;
    const std::size_t n = values.size();
    if (r > s) std::memmove(&values[s], &values[s + 1], (r - s) * sizeof(values[0]));
    values[r] = ell_a;
    if (r + 1 < n) values[r + 1] = ell_b;
}

std::size_t build_bwt_lcp(ValidatedText& text, LcpArray& lcp, BuildStats* stats) {
    const std::size_t n = text.n();
    if (lcp.values.size() != n) lcp.values.assign(n, 0);

    lcp.values[n - 1] = lcp.values[n - 2] = 0;  // base cases
    std::size_t r = n - 1;
    if (n < 3) return r;

    StepState st;
    for (std::size_t s = n - 3;; --s) {
        st.s = s;
        st.p = step1_find_sentinel(text, s, r);
        st.r = step2_rank(text, s, st.p, stats);
        st.ell_a = step2a_ell_a(text, lcp, s, st.p, stats);
        st.ell_b = step2b_ell_b(text, lcp, s, st.p, stats);
        step3_step4_place_and_shift(text, s, st.p, st.r);
        step4a_shift_and_store(lcp, s, st.r, st.ell_a, st.ell_b);
        r = st.r;
        if (s == 0) break;
    }
    return r;
}

}  // namespace bwtlcp
