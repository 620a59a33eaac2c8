// Copyright 2026 The bwtlcp Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>

namespace bwtlcp::alloc_probe {

// Number of global operator new calls since process start. Available only in
// binaries that compile src/alloc_probe.cpp, which replaces the global
// allocation functions with counting versions. Take deltas around a call to
// measure its allocations.
std::uint64_t count() noexcept;

}  // namespace bwtlcp::alloc_probe
