// Copyright 2026 The bwtlcp Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "bwtlcp/core.hpp"

namespace bwtlcp {

// Brute-force reference implementations used to validate the in-place
// builders. These favor clarity over speed and allocate freely; they define
// ground truth for tests and for the verify command.

struct OracleIndex {
    std::vector<std::size_t> sa;
    std::vector<std::uint64_t> lcp;
    std::vector<unsigned char> bwt;
};

// Suffix positions sorted lexicographically by comparison sort.
std::vector<std::size_t> naive_sa(const ValidatedText& text);

// lcp[i] by direct symbol-by-symbol comparison of adjacent suffixes; lcp[0] = 0.
std::vector<std::uint64_t> naive_lcp(const ValidatedText& text,
                                     std::span<const std::size_t> sa);

// bwt[i] = text[sa[i] - 1], or the sentinel when sa[i] == 0.
std::vector<unsigned char> bwt_from_sa(const ValidatedText& text,
                                       std::span<const std::size_t> sa);

// Minimum of lcp[i+1 .. j]. Requires 0 <= i < j < n, else BadRange.
std::uint64_t rmq_naive(std::span<const std::uint64_t> lcp, std::size_t i, std::size_t j);

// Reconstructs the original text from a BWT via LF-mapping iteration.
// Throws MalformedBwt when the input is not the BWT of any sentinel-terminated
// text (wrong sentinel count, wrong dollar_pos, or an LF cycle shorter than n).
std::vector<unsigned char> invert_bwt(std::span<const unsigned char> bwt,
                                      std::size_t dollar_pos,
                                      unsigned char sentinel = ValidatedText::kDefaultSentinel);

OracleIndex build_oracle_index(const ValidatedText& text);

}  // namespace bwtlcp
