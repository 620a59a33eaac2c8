// Copyright 2026 The bwtlcp Authors
// SPDX-License-Identifier: Apache-2.0

#include "bwtlcp/lcp2.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <istream>
#include <limits>
#include <ostream>

#include "bwtlcp/bwt_inplace.hpp"

namespace bwtlcp {

namespace {

std::size_t ceil_log2(std::size_t n) {
    return n <= 1 ? 0 : static_cast<std::size_t>(std::bit_width(n - 1));
}

void write_u64le(std::ostream& os, std::uint64_t v) {
    unsigned char b[8];
    for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>((v >> (8 * i)) & 0xFF);
    os.write(reinterpret_cast<const char*>(b), 8);
}

std::uint64_t read_u64le(std::istream& is) {
    unsigned char b[8];
    is.read(reinterpret_cast<char*>(b), 8);
    if (!is) raise(ErrorKind::Io, "unexpected end of file");
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(b[i]) << (8 * i);
    return v;
}

}  // namespace

BitLcp BitLcp::base_case(std::size_t n) {
    BitLcp bl;
    bl.cap_bits_ = n * ceil_log2(n) + 16 * n + 1024;
    const std::size_t initial = std::min<std::size_t>(2 * n + 16, bl.cap_bits_);
    bl.buf_.resize_bits(initial);
    bl.lo_ = initial / 2;
    bl.hi_ = bl.lo_ + 2;
    bl.buf_.write_bits(bl.lo_, 0b11, 2);  // delta(0+1) twice
    bl.e_p_ = bl.hi_;                     // sentinel sits at the top rank
    bl.count_ = 2;
    return bl;
}

BitLcp BitLcp::from_stream(BitSeq stream, std::size_t n_codes) {
    BitLcp bl;
    bl.hi_ = stream.size_bits();
    bl.buf_ = std::move(stream);
    bl.count_ = n_codes;
    bl.cap_bits_ = bl.hi_;
    return bl;
}

void BitLcp::compact() {
    if (lo_ > 0) {
        buf_.move_bits(lo_, hi_, 0);
        hi_ -= lo_;
        if (e_p_ >= lo_) e_p_ -= lo_;
        lo_ = 0;
    }
    buf_.resize_bits(hi_);
}

std::size_t BitLcp::skip_codes(std::size_t from, std::size_t k) const {
    BitCursor cur{from};
    for (std::size_t i = 0; i < k; ++i) delta_decode(buf_, cur);
    return cur.offset;
}

void BitLcp::ensure_headroom(std::size_t front_bits, std::size_t back_bits) {
    const std::size_t capacity = buf_.size_bits();
    if (lo_ >= front_bits && capacity - hi_ >= back_bits) return;

    const std::size_t content = hi_ - lo_;
    const std::size_t needed = content + 2 * std::max(front_bits, back_bits) + 64;
    std::size_t grown = std::max(capacity * 2, needed);
    grown = std::min(grown, cap_bits_);
    if (grown < needed)
        raise(ErrorKind::CapacityExhausted,
              "compressed LCP stream exceeded its configured maximum");

    // Reallocate and recenter the occupied range.
    BitSeq next;
    next.resize_bits(grown);
    const std::size_t new_lo = (grown - content) / 2;
    std::size_t done = 0;
    while (done < content) {
        const unsigned w = static_cast<unsigned>(std::min<std::size_t>(64, content - done));
        next.write_bits(new_lo + done, buf_.read_bits(lo_ + done, w), w);
        done += w;
    }
    buf_ = std::move(next);
    e_p_ = e_p_ - lo_ + new_lo;
    hi_ = new_lo + content;
    lo_ = new_lo;
    ++growth_events_;
}

std::uint64_t c_step2a(const ValidatedText& text, const BitLcp& bitlcp, std::size_t s,
                       std::size_t p, BuildStats* stats) {
    const auto bytes = text.bytes();
    const unsigned char c = bytes[s];

    // Phase 1: backward text scan only; no lcp access is possible here.
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
    }
    if (stats) stats->symbol_comparisons += comparisons;
    if (!found) return 0;

    // Phase 2: discard the codes before position x+1, then take the minimum
    // of the decoded values through the code at position p. Codes hold
    // lcp+1, so the minimum decoded value is already rmq+1.
    BitCursor cur{bitlcp.skip_codes(bitlcp.lo_, x - s)};
    std::uint64_t min_code = std::numeric_limits<std::uint64_t>::max();
    for (std::size_t k = 0; k < p - x; ++k)
        min_code = std::min(min_code, delta_decode(bitlcp.buf_, cur));
    assert(cur.offset == bitlcp.e_p_);
    return min_code;
}

std::uint64_t c_step2b(const ValidatedText& text, const BitLcp& bitlcp, std::size_t s,
                       std::size_t p, BuildStats* stats) {
    const auto bytes = text.bytes();
    const std::size_t n = bytes.size();
    const unsigned char c = bytes[s];

    BitCursor cur{bitlcp.e_p_};
    std::uint64_t min_code = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t comparisons = 0;
    for (std::size_t x = p + 1; x < n; ++x) {
        min_code = std::min(min_code, delta_decode(bitlcp.buf_, cur));
        ++comparisons;
        if (bytes[x] == c) {
            if (stats) stats->symbol_comparisons += comparisons;
            return min_code;
        }
    }
    if (stats) stats->symbol_comparisons += comparisons;
    return 0;
}

void c_step4a(BitLcp& bitlcp, std::size_t s, std::size_t r, std::uint64_t ell_a,
              std::uint64_t ell_b) {
    const std::size_t ordinal = r - s;  // rank of the new suffix in the grown set
    const unsigned len_a = code_len_delta(ell_a + 1);

    if (ordinal == bitlcp.count_) {
        // Top rank: nothing is replaced, the new code extends the stream.
        bitlcp.ensure_headroom(0, len_a);
        delta_encode_at(bitlcp.buf_, bitlcp.hi_, ell_a + 1);
        bitlcp.hi_ += len_a;
        bitlcp.e_p_ = bitlcp.hi_;
        ++bitlcp.count_;
        return;
    }

    const unsigned len_b = code_len_delta(ell_b + 1);
    const std::size_t len_new = len_a + len_b;
    // Conservative headroom before any offsets are computed, so reallocation
    // cannot invalidate them.
    bitlcp.ensure_headroom(len_new, 0);

    const std::size_t b_r1 = bitlcp.skip_codes(bitlcp.lo_, ordinal);
    const std::size_t e_r1 = bitlcp.skip_codes(b_r1, 1);
    const std::size_t len_old = e_r1 - b_r1;

    // The suffix of the stream never moves; the prefix shifts by the net
    // length change so the two new codes end exactly at e_r1.
    const std::size_t new_lo = bitlcp.lo_ + len_old - len_new;
    if (new_lo != bitlcp.lo_) bitlcp.buf_.move_bits(bitlcp.lo_, b_r1, new_lo);
    const std::size_t insert_at = b_r1 + len_old - len_new;
    delta_encode_at(bitlcp.buf_, insert_at, ell_a + 1);
    delta_encode_at(bitlcp.buf_, insert_at + len_a, ell_b + 1);

    bitlcp.lo_ = new_lo;
    bitlcp.e_p_ = e_r1 - len_b;
    ++bitlcp.count_;
}

std::pair<std::size_t, BitLcp> build_bwt_lcp_compressed(ValidatedText& text,
                                                        BuildStats* stats) {
    const std::size_t n = text.n();
    BitLcp bitlcp = BitLcp::base_case(n);
    std::size_t r = n - 1;

    if (n >= 3) {
        for (std::size_t s = n - 3;; --s) {
            const std::size_t p = step1_find_sentinel(text, s, r);
            r = step2_rank(text, s, p, stats);
            const std::uint64_t ell_a = c_step2a(text, bitlcp, s, p, stats);
            const std::uint64_t ell_b = c_step2b(text, bitlcp, s, p, stats);
            step3_step4_place_and_shift(text, s, p, r);
            c_step4a(bitlcp, s, r, ell_a, ell_b);
            if (s == 0) break;
        }
    }
    if (stats) stats->growth_events += bitlcp.growth_events();
    bitlcp.compact();
    return {r, bitlcp};
}

LcpArray decode_lcp(const BitLcp& bitlcp, std::size_t n) {
    LcpArray out;
    out.values.reserve(n);
    BitCursor cur{bitlcp.b_start()};
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint64_t v = delta_decode(bitlcp.stream(), cur);
        if (cur.offset > bitlcp.end_bit())
            raise(ErrorKind::TruncatedCode, "code runs past the end of the stream");
        out.values.push_back(v - 1);
    }
    if (cur.offset != bitlcp.end_bit())
        raise(ErrorKind::CountMismatch, "stream does not hold exactly n codes");
    return out;
}

void write_lcp2_file(std::ostream& os, const BitLcp& bitlcp) {
    os.write("LCP2", 4);
    os.put(1);  // version
    write_u64le(os, bitlcp.code_count());
    if (bitlcp.b_start() == 0 && bitlcp.end_bit() == bitlcp.stream().size_bits()) {
        bitlcp.stream().serialize(os);
    } else {
        // Serialize just the occupied range.
        BitLcp copy = bitlcp;
        copy.compact();
        copy.stream().serialize(os);
    }
    if (!os) raise(ErrorKind::Io, "failed to write LCP2 file");
}

BitLcp read_lcp2_file(std::istream& is) {
    char magic[4];
    is.read(magic, 4);
    if (!is || std::string_view(magic, 4) != "LCP2")
        raise(ErrorKind::Io, "not an LCP2 file");
    const int version = is.get();
    if (version != 1) raise(ErrorKind::Io, "unsupported LCP2 version");
    const std::uint64_t n = read_u64le(is);
    BitSeq stream = BitSeq::deserialize(is);
    return BitLcp::from_stream(std::move(stream), n);
}

}  // namespace bwtlcp
