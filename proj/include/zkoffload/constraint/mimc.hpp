// zkoffload: verifiable computation offloading
// Copyright 2026 The zkoffload Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <zkoffload/algebra/field.hpp>

#include <array>
#include <span>
#include <string_view>

namespace zkoffload::constraint::mimc
{
using algebra::Fr;

inline constexpr std::size_t kRounds = 91;
inline constexpr std::string_view kConstantSeed = "zkoffload.mimc-cube.feistel.v1";

/// c_i = SHA-256^(i+1)(seed), read big-endian and reduced mod r.
const std::array<Fr, kRounds>& round_constants();

/// Two-cell sponge state. `left` is the rate cell, `right` the capacity cell.
struct State
{
    Fr left;
    Fr right;
};

/// Feistel network with round function F(x) = (x + c_i)^3.
/// x^3 alone is not a bijection of Fr (3 divides r - 1); the Feistel structure is.
void permute(State& s) noexcept;

/// Sponge hash: absorb one element per permutation, squeeze two limbs.
/// Throws std::invalid_argument on empty input.
std::array<Fr, 2> hash(std::span<const Fr> inputs);

}  // namespace zkoffload::constraint::mimc
