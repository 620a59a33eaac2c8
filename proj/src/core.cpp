// Copyright 2026 The bwtlcp Authors
// SPDX-License-Identifier: Apache-2.0

#include "bwtlcp/core.hpp"

#include <algorithm>

namespace bwtlcp {

ValidatedText validate_input(std::span<const unsigned char> raw,
                             bool auto_append_sentinel,
                             unsigned char sentinel) {
    if (raw.empty()) raise(ErrorKind::EmptyInput, "input is empty");

    std::vector<unsigned char> bytes(raw.begin(), raw.end());

    if (auto_append_sentinel) {
        for (unsigned char b : bytes) {
            if (b == sentinel)
                raise(ErrorKind::SentinelCollision,
                      "input contains the sentinel byte; cannot auto-append");
            if (b < sentinel)
                raise(ErrorKind::SentinelCollision,
                      "input contains a byte smaller than the sentinel");
        }
        bytes.push_back(sentinel);
    } else {
        if (bytes.back() != sentinel)
            raise(ErrorKind::SentinelMisplaced, "input does not end with the sentinel byte");
        for (std::size_t i = 0; i + 1 < bytes.size(); ++i) {
            if (bytes[i] == sentinel)
                raise(ErrorKind::SentinelMisplaced, "sentinel byte occurs in the interior");
            if (bytes[i] < sentinel)
                raise(ErrorKind::SentinelCollision,
                      "input contains a byte smaller than the sentinel");
        }
        if (bytes.size() < 2)
            raise(ErrorKind::EmptyInput, "text must have at least one symbol plus the sentinel");
    }

    return ValidatedText(std::move(bytes), sentinel);
}

ValidatedText validate_input(std::string_view raw,
                             bool auto_append_sentinel,
                             unsigned char sentinel) {
    return validate_input(
        std::span<const unsigned char>(reinterpret_cast<const unsigned char*>(raw.data()),
                                       raw.size()),
        auto_append_sentinel, sentinel);
}

}  // namespace bwtlcp
