// Copyright 2026 The bwtlcp Authors
// SPDX-License-Identifier: Apache-2.0

#include "bwtlcp/bwt_inplace.hpp"

#include <cassert>
#include <cstring>

namespace bwtlcp {

std::size_t find_sentinel_rescan(const ValidatedText& text, std::size_t s) {
    const auto bytes = text.bytes();
    for (std::size_t i = s + 1; i < bytes.size(); ++i)
        if (bytes[i] == text.sentinel()) return i;
    assert(false && "region lost its sentinel");
    return bytes.size();
}

std::size_t step1_find_sentinel(const ValidatedText& text, std::size_t s,
                                std::size_t carried_r) {
    assert(carried_r == find_sentinel_rescan(text, s));
    (void)text;
    (void)s;
    return carried_r;
}

std::size_t step2_rank(const ValidatedText& text, std::size_t s, std::size_t p,
                       BuildStats* stats) {
    const auto bytes = text.bytes();
    const std::size_t n = bytes.size();
    const unsigned char c = bytes[s];
    std::size_t count = 0;
    std::size_t i = s + 1;
    for (; i < p; ++i) count += bytes[i] <= c;
    for (; i < n; ++i) count += bytes[i] < c;  // sentinel at p counts here
    if (stats) stats->symbol_comparisons += n - s - 1;
    return s + count;
}

void step3_step4_place_and_shift(ValidatedText& text, std::size_t s, std::size_t p,
                                 std::size_t r) {
    const auto bytes = text.bytes();
    bytes[p] = bytes[s];
    if (r > s) std::memmove(&bytes[s], &bytes[s + 1], r - s);
    bytes[r] = text.sentinel();
}

std::size_t build_bwt_inplace(ValidatedText& text, BuildStats* stats) {
    const std::size_t n = text.n();
    std::size_t r = n - 1;  // base cases: the two rightmost suffixes are already done
    if (n < 3) return r;
    for (std::size_t s = n - 3;; --s) {
        const std::size_t p = step1_find_sentinel(text, s, r);
        r = step2_rank(text, s, p, stats);
        step3_step4_place_and_shift(text, s, p, r);
        if (s == 0) break;
    }
    return r;
}

}  // namespace bwtlcp
