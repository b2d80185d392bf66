// zkoffload: verifiable computation offloading
// Copyright 2026 The zkoffload Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <zkoffload/algebra/field.hpp>

#include <array>
#include <cstdint>
#include <string_view>

namespace zkoffload::snark
{
using algebra::Fr;

/// Source of field scalars for setup and proof blinding.
///
/// Seeded mode is a SHA-256 counter stream: reproducible, and therefore only suitable for
/// tests and benchmarks. Entropy mode draws its seed from the OS.
class FieldRng
{
public:
    static FieldRng from_seed(std::string_view seed);
    static FieldRng from_entropy();

    Fr next();
    Fr next_nonzero();

private:
    explicit FieldRng(const std::array<uint8_t, 32>& key) : key_{key} {}

    std::array<uint8_t, 32> key_;
    uint64_t counter_ = 0;
};

}  // namespace zkoffload::snark
