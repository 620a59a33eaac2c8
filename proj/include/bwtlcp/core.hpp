// Copyright 2026 The bwtlcp Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bwtlcp {

enum class ErrorKind {
    EmptyInput,         // input empty, or shorter than the two-symbol minimum
    SentinelMisplaced,  // sentinel absent at the end, or occurring in the interior
    SentinelCollision,  // sentinel byte (or a smaller byte) present where it must not be
    NonPositiveValue,   // Elias codes are defined for positive integers only
    TruncatedCode,      // bit stream ends in the middle of a code
    MalformedUnary,     // no terminating 1-bit in a unary prefix
    CountMismatch,      // stream holds a different number of codes than requested
    CapacityExhausted,  // compressed LCP stream hit its configured hard cap
    BadRange,           // invalid (i, j) interval for a range query
    MalformedBwt,       // inversion input is not a valid BWT
    Io,                 // file/stream failure or unrecognized file format
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string& what) {
    throw Error(kind, what);
}

// A byte string over the raw byte alphabet, terminated by a unique sentinel
// byte that is strictly smaller than every other byte present. Invariants are
// checked once by validate_input(); afterwards the buffer doubles as the
// workspace that the in-place builds permute into the BWT.
class ValidatedText {
public:
    static constexpr unsigned char kDefaultSentinel = 0x00;

    ValidatedText() = default;

    std::size_t n() const noexcept { return bytes_.size(); }
    unsigned char sentinel() const noexcept { return sentinel_; }

    std::span<unsigned char> bytes() noexcept { return bytes_; }
    std::span<const unsigned char> bytes() const noexcept { return bytes_; }

    friend ValidatedText validate_input(std::span<const unsigned char> raw,
                                        bool auto_append_sentinel,
                                        unsigned char sentinel);

private:
    ValidatedText(std::vector<unsigned char> bytes, unsigned char sentinel)
        : bytes_(std::move(bytes)), sentinel_(sentinel) {}

    std::vector<unsigned char> bytes_;
    unsigned char sentinel_ = kDefaultSentinel;
};

// Checks the sentinel discipline and returns the validated buffer.
// With auto_append_sentinel the sentinel must not occur in raw and is
// appended; without it raw must already end with the sentinel and contain
// it nowhere else. Throws EmptyInput, SentinelMisplaced, SentinelCollision.
ValidatedText validate_input(std::span<const unsigned char> raw,
                             bool auto_append_sentinel,
                             unsigned char sentinel = ValidatedText::kDefaultSentinel);

ValidatedText validate_input(std::string_view raw,
                             bool auto_append_sentinel,
                             unsigned char sentinel = ValidatedText::kDefaultSentinel);

// LCP values in suffix-array order, one machine word per entry.
// values[0] == 0 for the completed array of a whole text.
struct LcpArray {
    std::vector<std::uint64_t> values;

    std::size_t size() const noexcept { return values.size(); }
    bool operator==(const LcpArray&) const = default;
};

// The constant-space working set threaded through one induction step.
// Positions are absolute indices into the text buffer; p_a1/p_b1 are npos
// when the corresponding neighbor symbol does not occur in its scan range.
// b_cursor/e_cursor carry the bit offsets used by the compressed variant.
struct StepState {
    static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

    std::size_t s = 0;
    std::size_t p = 0;
    std::size_t r = 0;
    std::size_t p_a1 = npos;
    std::size_t p_b1 = npos;
    std::uint64_t ell_a = 0;
    std::uint64_t ell_b = 0;
    std::size_t b_cursor = 0;
    std::size_t e_cursor = 0;
};

// Counters filled by the construction routines. Symbol comparisons are the
// byte comparisons performed by the rank pass and the two neighbor scans;
// growth events count buffer reallocations of the compressed LCP stream.
struct BuildStats {
    std::uint64_t symbol_comparisons = 0;
    std::uint64_t growth_events = 0;
};

}  // namespace bwtlcp
