// Copyright 2026 The bwtlcp Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>

#include "bwtlcp/core.hpp"

namespace bwtlcp {

// In-place BWT construction by induction on suffix length. During a run,
// bytes[s+1, n-1] holds the BWT of the suffix starting at s+1, and each
// iteration extends it by one symbol using a constant number of working
// variables. All positions are absolute indices into the text buffer.

// Literal scan for the sentinel in bytes[s+1, n-1]; the reference for the
// carried-r shortcut below.
std::size_t find_sentinel_rescan(const ValidatedText& text, std::size_t s);

// Step 1: the sentinel of the current region sits exactly where the previous
// iteration inserted it, so carried_r is returned directly (n-1 at the base
// case). p - s is the local rank of the suffix starting at s+1.
std::size_t step1_find_sentinel(const ValidatedText& text, std::size_t s,
                                std::size_t carried_r);

// Step 2: local-rank computation for the suffix starting at s, with
// c = bytes[s]. Counts symbols <= c before the sentinel and symbols < c from
// the sentinel onward, in one left-to-right pass; returns s + count.
std::size_t step2_rank(const ValidatedText& text, std::size_t s, std::size_t p,
                       BuildStats* stats = nullptr);

// Steps 3 and 4: write c over the sentinel at p, shift bytes[s+1, r] one
// position left, and write the sentinel at r.
void step3_step4_place_and_shift(ValidatedText& text, std::size_t s, std::size_t p,
                                 std::size_t r);

// Replaces text with its BWT; returns the final sentinel position.
// No heap allocation happens anywhere in the call.
std::size_t build_bwt_inplace(ValidatedText& text, BuildStats* stats = nullptr);

}  // namespace bwtlcp
