// Copyright 2026 The bwtlcp Authors
// SPDX-License-Identifier: Apache-2.0

#include "bwtlcp/oracle.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace bwtlcp {

std::vector<std::size_t> naive_sa(const ValidatedText& text) {
    const auto bytes = text.bytes();
    std::vector<std::size_t> sa(text.n());
    std::iota(sa.begin(), sa.end(), std::size_t{0});
    std::sort(sa.begin(), sa.end(), [&](std::size_t a, std::size_t b) {
        return std::lexicographical_compare(bytes.begin() + a, bytes.end(),
                                            bytes.begin() + b, bytes.end());
    });
    return sa;
}

std::vector<std::uint64_t> naive_lcp(const ValidatedText& text,
                                     std::span<const std::size_t> sa) {
    const auto bytes = text.bytes();
    const std::size_t n = text.n();
    std::vector<std::uint64_t> lcp(n, 0);
    for (std::size_t i = 1; i < n; ++i) {
        std::size_t a = sa[i];
        std::size_t b = sa[i - 1];
        std::uint64_t k = 0;
        while (a + k < n && b + k < n && bytes[a + k] == bytes[b + k]) ++k;
        lcp[i] = k;
    }
    return lcp;
}

std::vector<unsigned char> bwt_from_sa(const ValidatedText& text,
                                       std::span<const std::size_t> sa) {
    const auto bytes = text.bytes();
    std::vector<unsigned char> bwt(text.n());
    for (std::size_t i = 0; i < sa.size(); ++i)
        bwt[i] = sa[i] == 0 ? text.sentinel() : bytes[sa[i] - 1];
    return bwt;
}

std::uint64_t rmq_naive(std::span<const std::uint64_t> lcp, std::size_t i, std::size_t j) {
    if (i >= j || j >= lcp.size())
        raise(ErrorKind::BadRange, "rmq requires 0 <= i < j < n");
    return *std::min_element(lcp.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                             lcp.begin() + static_cast<std::ptrdiff_t>(j) + 1);
}

std::vector<unsigned char> invert_bwt(std::span<const unsigned char> bwt,
                                      std::size_t dollar_pos,
                                      unsigned char sentinel) {
    const std::size_t n = bwt.size();
    if (n < 2) raise(ErrorKind::MalformedBwt, "BWT shorter than two symbols");
    if (dollar_pos >= n || bwt[dollar_pos] != sentinel)
        raise(ErrorKind::MalformedBwt, "dollar_pos does not point at the sentinel");

    std::array<std::size_t, 256> count{};
    for (unsigned char b : bwt) count[b]++;
    if (count[sentinel] != 1)
        raise(ErrorKind::MalformedBwt, "sentinel must occur exactly once");

    // starts[b] = number of symbols strictly smaller than b (first column offsets)
    std::array<std::size_t, 256> starts{};
    std::size_t acc = 0;
    for (std::size_t b = 0; b < 256; ++b) {
        starts[b] = acc;
        acc += count[b];
    }

    // LF[i] maps the i-th row to the row of the one-symbol-longer suffix.
    std::vector<std::size_t> lf(n);
    std::array<std::size_t, 256> occ{};
    for (std::size_t i = 0; i < n; ++i) {
        lf[i] = starts[bwt[i]] + occ[bwt[i]];
        occ[bwt[i]]++;
    }

    std::vector<unsigned char> out(n);
    out[n - 1] = sentinel;
    std::size_t row = 0;  // row 0 holds the sentinel suffix
    for (std::size_t k = n - 1; k-- > 0;) {
        if (bwt[row] == sentinel)
            raise(ErrorKind::MalformedBwt, "LF cycle shorter than the text length");
        out[k] = bwt[row];
        row = lf[row];
    }
    if (row != dollar_pos)
        raise(ErrorKind::MalformedBwt, "LF cycle does not close at dollar_pos");
    return out;
}

OracleIndex build_oracle_index(const ValidatedText& text) {
    OracleIndex idx;
    idx.sa = naive_sa(text);
    idx.lcp = naive_lcp(text, idx.sa);
    idx.bwt = bwt_from_sa(text, idx.sa);
    return idx;
}

}  // namespace bwtlcp
