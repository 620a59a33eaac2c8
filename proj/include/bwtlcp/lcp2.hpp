// Copyright 2026 The bwtlcp Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <iosfwd>
#include <utility>

#include "bwtlcp/core.hpp"
#include "bwtlcp/elias.hpp"

namespace bwtlcp {

// The LCP array kept directly as a sequence of Elias delta codes, one
// delta(lcp+1) per suffix-array position of the current suffix set (the +1
// keeps values positive; decoding subtracts it). The codes sit in a backing
// bit buffer with headroom on both sides: replacing a code mid-stream shifts
// only the prefix of the stream, so the occupied range creeps leftward as
// codes get longer, and appending at the top rank extends it rightward.
//
// Two bit cursors persist across iterations: b_start, the offset of the
// first code, and e_p, the offset just past the code at the sentinel's
// position. Everything else is recomputed by forward code-length counting.
class BitLcp {
public:
    BitLcp() = default;

    // Stream for the two base-case entries (both zero) of a text of length n,
    // placed mid-buffer with the growth cap n*ceil(log2 n) + O(n) bits.
    static BitLcp base_case(std::size_t n);

    // Wraps an already-compact stream holding n_codes codes (file loading).
    static BitLcp from_stream(BitSeq stream, std::size_t n_codes);

    std::size_t code_count() const noexcept { return count_; }
    std::size_t b_start() const noexcept { return lo_; }
    std::size_t e_p() const noexcept { return e_p_; }
    std::size_t end_bit() const noexcept { return hi_; }
    std::size_t size_bits() const noexcept { return hi_ - lo_; }
    std::uint64_t growth_events() const noexcept { return growth_events_; }
    const BitSeq& stream() const noexcept { return buf_; }

    // Moves the occupied range to offset zero and trims the buffer, so that
    // stream().size_bits() equals the sum of the code lengths.
    void compact();

    // Bit offset reached after skipping k codes from offset `from`.
    std::size_t skip_codes(std::size_t from, std::size_t k) const;

    friend std::uint64_t c_step2a(const ValidatedText&, const BitLcp&, std::size_t,
                                  std::size_t, BuildStats*);
    friend std::uint64_t c_step2b(const ValidatedText&, const BitLcp&, std::size_t,
                                  std::size_t, BuildStats*);
    friend void c_step4a(BitLcp&, std::size_t, std::size_t, std::uint64_t, std::uint64_t);

private:
    // Guarantees headroom on both sides of the occupied range, reallocating
    // geometrically up to the hard cap (CapacityExhausted beyond it).
    void ensure_headroom(std::size_t front_bits, std::size_t back_bits);

    BitSeq buf_;
    std::size_t lo_ = 0;    // bit offset of the first code (b_start)
    std::size_t hi_ = 0;    // one past the last occupied bit
    std::size_t e_p_ = 0;   // one past the code at the sentinel's position
    std::size_t count_ = 0;
    std::size_t cap_bits_ = 0;
    std::uint64_t growth_events_ = 0;
};

// Step 2' over the compressed stream. The backward text scan cannot decode
// (codes only decode forward), so it runs first; if it finds the symbol, a
// cursor discards the codes before the neighbor's position and the minimum
// is taken over the decoded values through the sentinel-position code.
// Equals step2a_ell_a on the uncompressed array.
std::uint64_t c_step2a(const ValidatedText& text, const BitLcp& bitlcp, std::size_t s,
                       std::size_t p, BuildStats* stats = nullptr);

// Step 2'' fused: one forward pass decodes codes from e_p while scanning the
// text from p+1, keeping the running minimum. Equals step2b_ell_b.
std::uint64_t c_step2b(const ValidatedText& text, const BitLcp& bitlcp, std::size_t s,
                       std::size_t p, BuildStats* stats = nullptr);

// Step 4': replaces the code at rank r's slot with delta(ell_a+1) and
// delta(ell_b+1), shifting the stream prefix by the net length change; when
// r is the top rank only delta(ell_a+1) is appended. Updates b_start and e_p.
void c_step4a(BitLcp& bitlcp, std::size_t s, std::size_t r, std::uint64_t ell_a,
              std::uint64_t ell_b);

// Builds the BWT in place and the LCP array directly in compressed form.
// Returns the final sentinel position and the compacted stream.
std::pair<std::size_t, BitLcp> build_bwt_lcp_compressed(ValidatedText& text,
                                                        BuildStats* stats = nullptr);

// Decodes exactly n codes into an LcpArray (values minus the +1 offset).
// Throws TruncatedCode when the stream is shorter than n codes and
// CountMismatch when decoding n codes does not consume it exactly.
LcpArray decode_lcp(const BitLcp& bitlcp, std::size_t n);

// LCP2 container file: magic "LCP2", version byte, 8-byte little-endian n,
// then the serialized bit sequence.
void write_lcp2_file(std::ostream& os, const BitLcp& bitlcp);
BitLcp read_lcp2_file(std::istream& is);

}  // namespace bwtlcp
