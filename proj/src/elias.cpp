// Copyright 2026 The bwtlcp Authors
// SPDX-License-Identifier: Apache-2.0

#include "bwtlcp/elias.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <istream>
#include <ostream>

namespace bwtlcp {

namespace {

constexpr std::uint64_t mask(unsigned width) {
    return width >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << width) - 1);
}

unsigned floor_log2(std::uint64_t v) {
    return static_cast<unsigned>(std::bit_width(v)) - 1;
}

}  // namespace

void BitSeq::resize_bits(std::size_t bits) {
    const std::size_t nwords = (bits + 63) / 64;
    words_.resize(nwords, 0);
    if (bits < len_bits_ && bits % 64 != 0) {
        // keep bits past the logical end zeroed so equality stays canonical
        words_[nwords - 1] &= ~mask(64 - (bits & 63));
    }
    len_bits_ = bits;
}

void BitSeq::append_bits(std::uint64_t value, unsigned width) {
    assert(width <= 64);
    const std::size_t offset = len_bits_;
    resize_bits(len_bits_ + width);
    write_bits(offset, value, width);
}

std::uint64_t BitSeq::read_bits(std::size_t offset, unsigned width) const {
    assert(width <= 64 && offset + width <= len_bits_);
    if (width == 0) return 0;
    const std::size_t w = offset >> 6;
    const unsigned shift = static_cast<unsigned>(offset & 63);
    if (shift + width <= 64) {
        return (words_[w] >> (64 - shift - width)) & mask(width);
    }
    const unsigned hi = 64 - shift;        // bits taken from the first word
    const unsigned lo = width - hi;        // bits taken from the second word
    return ((words_[w] & mask(hi)) << lo) | (words_[w + 1] >> (64 - lo));
}

void BitSeq::write_bits(std::size_t offset, std::uint64_t value, unsigned width) {
    assert(width <= 64 && offset + width <= len_bits_);
    if (width == 0) return;
    value &= mask(width);
    const std::size_t w = offset >> 6;
    const unsigned shift = static_cast<unsigned>(offset & 63);
    if (shift + width <= 64) {
        const unsigned down = 64 - shift - width;
        words_[w] = (words_[w] & ~(mask(width) << down)) | (value << down);
        return;
    }
    const unsigned hi = 64 - shift;
    const unsigned lo = width - hi;
    words_[w] = (words_[w] & ~mask(hi)) | (value >> lo);
    words_[w + 1] = (words_[w + 1] & ~(mask(lo) << (64 - lo))) | ((value & mask(lo)) << (64 - lo));
}

void BitSeq::move_bits(std::size_t src_begin, std::size_t src_end, std::size_t dst_begin) {
    assert(src_begin <= src_end && src_end <= len_bits_);
    const std::size_t len = src_end - src_begin;
    assert(dst_begin + len <= len_bits_);
    if (len == 0 || dst_begin == src_begin) return;
    if (dst_begin < src_begin) {
        std::size_t done = 0;
        while (done < len) {
            const unsigned w = static_cast<unsigned>(std::min<std::size_t>(64, len - done));
            write_bits(dst_begin + done, read_bits(src_begin + done, w), w);
            done += w;
        }
    } else {
        std::size_t left = len;
        while (left > 0) {
            const unsigned w = static_cast<unsigned>(std::min<std::size_t>(64, left));
            left -= w;
            write_bits(dst_begin + left, read_bits(src_begin + left, w), w);
        }
    }
}

std::string BitSeq::to_binary_string() const {
    std::string out;
    out.reserve(len_bits_);
    for (std::size_t i = 0; i < len_bits_; ++i) out.push_back(bit(i) ? '1' : '0');
    return out;
}

void BitSeq::serialize(std::ostream& os) const {
    std::uint64_t len = len_bits_;
    unsigned char header[8];
    for (int i = 0; i < 8; ++i) header[i] = static_cast<unsigned char>((len >> (8 * i)) & 0xFF);
    os.write(reinterpret_cast<const char*>(header), 8);
    const std::size_t nbytes = (len_bits_ + 7) / 8;
    for (std::size_t j = 0; j < nbytes; ++j) {
        const unsigned w = static_cast<unsigned>(std::min<std::size_t>(8, len_bits_ - 8 * j));
        const auto byte = static_cast<unsigned char>(read_bits(8 * j, w) << (8 - w));
        os.put(static_cast<char>(byte));
    }
    if (!os) raise(ErrorKind::Io, "failed to write bit sequence");
}

BitSeq BitSeq::deserialize(std::istream& is) {
    unsigned char header[8];
    is.read(reinterpret_cast<char*>(header), 8);
    if (!is) raise(ErrorKind::Io, "failed to read bit sequence header");
    std::uint64_t len = 0;
    for (int i = 0; i < 8; ++i) len |= static_cast<std::uint64_t>(header[i]) << (8 * i);

    BitSeq bits;
    bits.resize_bits(len);
    const std::size_t nbytes = (len + 7) / 8;
    for (std::size_t j = 0; j < nbytes; ++j) {
        const int c = is.get();
        if (c < 0) raise(ErrorKind::Io, "bit sequence body shorter than its header claims");
        const unsigned w = static_cast<unsigned>(std::min<std::uint64_t>(8, len - 8 * j));
        bits.write_bits(8 * j, static_cast<std::uint64_t>(c) >> (8 - w), w);
    }
    return bits;
}

bool BitSeq::operator==(const BitSeq& other) const noexcept {
    return len_bits_ == other.len_bits_ && words_ == other.words_;
}

unsigned code_len_gamma(std::uint64_t value) {
    if (value == 0) raise(ErrorKind::NonPositiveValue, "gamma codes require value >= 1");
    return 2 * floor_log2(value) + 1;
}

unsigned code_len_delta(std::uint64_t value) {
    if (value == 0) raise(ErrorKind::NonPositiveValue, "delta codes require value >= 1");
    const unsigned k = floor_log2(value);
    return 2 * floor_log2(k + 1) + 1 + k;
}

void gamma_encode(BitSeq& bits, std::uint64_t value) {
    const unsigned len = code_len_gamma(value);
    const std::size_t offset = bits.size_bits();
    bits.resize_bits(offset + len);
    gamma_encode_at(bits, offset, value);
}

void gamma_encode_at(BitSeq& bits, std::size_t offset, std::uint64_t value) {
    if (value == 0) raise(ErrorKind::NonPositiveValue, "gamma codes require value >= 1");
    const unsigned k = floor_log2(value);
    bits.write_bits(offset, 1, k + 1);                    // k zeros then a one
    if (k > 0) bits.write_bits(offset + k + 1, value, k); // value without its MSB
}

void delta_encode(BitSeq& bits, std::uint64_t value) {
    const unsigned len = code_len_delta(value);
    const std::size_t offset = bits.size_bits();
    bits.resize_bits(offset + len);
    delta_encode_at(bits, offset, value);
}

void delta_encode_at(BitSeq& bits, std::size_t offset, std::uint64_t value) {
    if (value == 0) raise(ErrorKind::NonPositiveValue, "delta codes require value >= 1");
    const unsigned k = floor_log2(value);
    gamma_encode_at(bits, offset, k + 1);
    if (k > 0) bits.write_bits(offset + code_len_gamma(k + 1), value, k);
}

std::uint64_t gamma_decode(const BitSeq& bits, BitCursor& cursor) {
    const std::size_t len = bits.size_bits();
    const std::size_t off = cursor.offset;
    if (off >= len) raise(ErrorKind::TruncatedCode, "cursor at or past stream end");

    // leading-zero count over 64-bit peeks
    std::size_t zeros = 0;
    for (;;) {
        const std::size_t at = off + zeros;
        if (at >= len) raise(ErrorKind::MalformedUnary, "no 1-bit before stream end");
        const unsigned chunk = static_cast<unsigned>(std::min<std::size_t>(64, len - at));
        const std::uint64_t peek = bits.read_bits(at, chunk) << (64 - chunk);
        const unsigned z = static_cast<unsigned>(std::countl_zero(peek));
        if (z >= chunk) {
            zeros += chunk;
            continue;
        }
        zeros += z;
        break;
    }
    if (zeros > 63)
        raise(ErrorKind::MalformedUnary, "unary prefix wider than a 64-bit value allows");

    const unsigned k = static_cast<unsigned>(zeros);
    if (off + 2 * static_cast<std::size_t>(k) + 1 > len)
        raise(ErrorKind::TruncatedCode, "stream ends inside a gamma mantissa");
    std::uint64_t value = std::uint64_t{1} << k;
    if (k > 0) value |= bits.read_bits(off + k + 1, k);
    cursor.offset = off + 2 * k + 1;
    return value;
}

std::uint64_t delta_decode(const BitSeq& bits, BitCursor& cursor) {
    BitCursor local = cursor;
    const std::uint64_t m = gamma_decode(bits, local);  // 1 + floor(log2 value)
    if (m > 64)
        raise(ErrorKind::TruncatedCode, "delta width field exceeds a 64-bit value");
    const unsigned k = static_cast<unsigned>(m - 1);
    if (local.offset + k > bits.size_bits())
        raise(ErrorKind::TruncatedCode, "stream ends inside a delta mantissa");
    std::uint64_t value = std::uint64_t{1} << k;
    if (k > 0) value |= bits.read_bits(local.offset, k);
    cursor.offset = local.offset + k;
    return value;
}

}  // namespace bwtlcp
