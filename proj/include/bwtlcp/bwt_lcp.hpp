// Copyright 2026 The bwtlcp Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>

#include "bwtlcp/bwt_inplace.hpp"
#include "bwtlcp/core.hpp"

namespace bwtlcp {

// Extends the in-place BWT induction so that lcp[s+1, n-1] always holds the
// LCP array of the suffix starting at s+1. Each iteration computes the lcp
// of the new suffix against its two rank neighbors: a backward and a forward
// text scan locate the neighbor's successor symbol while accumulating the
// running minimum of lcp values, which is the range-minimum the new entries
// need. Both scans run before steps 3/4 mutate the buffers.

// Step 2': lcp of the new suffix against its in-order predecessor.
// Scans bytes[p-1 .. s+1] backward for the last occurrence of bytes[s] before
// the sentinel; returns rmq(p_a1, p) + 1, or 0 when the symbol is absent
// (absence implies the neighbor starts with a different symbol).
std::uint64_t step2a_ell_a(const ValidatedText& text, const LcpArray& lcp,
                           std::size_t s, std::size_t p, BuildStats* stats = nullptr);

// Step 2'': lcp against the in-order successor, by the symmetric forward scan
// over bytes[p+1 .. n-1].
std::uint64_t step2b_ell_b(const ValidatedText& text, const LcpArray& lcp,
                           std::size_t s, std::size_t p, BuildStats* stats = nullptr);

// Step 4': shift lcp[s+1, r] one position left, store ell_a at r and, unless
// r is the last position, ell_b at r+1.
void step4a_shift_and_store(LcpArray& lcp, std::size_t s, std::size_t r,
                            std::uint64_t ell_a, std::uint64_t ell_b);

// Builds BWT and LCP array together; returns the final sentinel position.
// lcp is caller-provided output storage (resized to n if it is not already);
// beyond it the build keeps a constant number of working variables.
std::size_t build_bwt_lcp(ValidatedText& text, LcpArray& lcp, BuildStats* stats = nullptr);

}  // namespace bwtlcp
