// Copyright 2026 The bwtlcp Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "bwtlcp/core.hpp"

namespace bwtlcp {

// Growable bit sequence, MSB-first within the stream. Bit i lives in word
// i/64 at bit position 63 - i%64, so dumped streams read left to right.
// Serialized form: 8-byte little-endian bit length, then the bits packed
// big-endian within bytes, final byte zero-padded.
class BitSeq {
public:
    BitSeq() = default;
    explicit BitSeq(std::size_t len_bits) { resize_bits(len_bits); }

    std::size_t size_bits() const noexcept { return len_bits_; }
    void clear() noexcept {
        words_.clear();
        len_bits_ = 0;
    }

    void reserve_bits(std::size_t bits) { words_.reserve((bits + 63) / 64); }
    void resize_bits(std::size_t bits);

    bool bit(std::size_t i) const { return (words_[i >> 6] >> (63 - (i & 63))) & 1u; }

    void append_bit(bool b) { append_bits(b ? 1u : 0u, 1); }
    // Appends the low `width` bits of value, most significant first. width <= 64.
    void append_bits(std::uint64_t value, unsigned width);

    // Reads/writes `width` bits at an absolute offset; width <= 64 and the
    // range must lie inside the sequence.
    std::uint64_t read_bits(std::size_t offset, unsigned width) const;
    void write_bits(std::size_t offset, std::uint64_t value, unsigned width);

    // Moves the bit range [src_begin, src_end) to dst_begin, word at a time.
    // Overlapping ranges are handled like memmove.
    void move_bits(std::size_t src_begin, std::size_t src_end, std::size_t dst_begin);

    std::string to_binary_string() const;

    void serialize(std::ostream& os) const;
    static BitSeq deserialize(std::istream& is);

    bool operator==(const BitSeq& other) const noexcept;

private:
    std::vector<std::uint64_t> words_;
    std::size_t len_bits_ = 0;
};

struct BitCursor {
    std::size_t offset = 0;
};

// Exact code lengths without encoding. Throw NonPositiveValue for value == 0.
unsigned code_len_gamma(std::uint64_t value);
unsigned code_len_delta(std::uint64_t value);

// Elias gamma: unary(floor(log2 v) + 1) then binary(v) without its MSB.
void gamma_encode(BitSeq& bits, std::uint64_t value);
std::uint64_t gamma_decode(const BitSeq& bits, BitCursor& cursor);

// Elias delta: gamma(1 + floor(log2 v)) then binary(v) without its MSB.
void delta_encode(BitSeq& bits, std::uint64_t value);
std::uint64_t delta_decode(const BitSeq& bits, BitCursor& cursor);

// Writes a code into already-allocated bits at a fixed offset.
void gamma_encode_at(BitSeq& bits, std::size_t offset, std::uint64_t value);
void delta_encode_at(BitSeq& bits, std::size_t offset, std::uint64_t value);

}  // namespace bwtlcp
