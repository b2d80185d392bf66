// zkoffload: verifiable computation offloading
// Copyright 2026 The zkoffload Authors.
// SPDX-License-Identifier: Apache-2.0

#include <zkoffload/constraint/mimc.hpp>

#include <openssl/sha.h>

#include <stdexcept>

namespace zkoffload::constraint::mimc
{
const std::array<Fr, kRounds>& round_constants()
{
    static const std::array<Fr, kRounds> constants = [] {
        std::array<Fr, kRounds> out{};
        std::array<uint8_t, SHA256_DIGEST_LENGTH> h{};
        SHA256(reinterpret_cast<const uint8_t*>(kConstantSeed.data()), kConstantSeed.size(), h.data());
        for (std::size_t i = 0; i < kRounds; ++i)
        {
            algebra::Limbs v{};
            for (std::size_t b = 0; b < 32; ++b)
                v[(31 - b) / 8] |= static_cast<uint64_t>(h[b]) << (8 * ((31 - b) % 8));
            out[i] = Fr::from_limbs(v);
            SHA256(h.data(), h.size(), h.data());
        }
        return out;
    }();
    return constants;
}

void permute(State& s) noexcept
{
    const auto& c = round_constants();
    for (std::size_t i = 0; i < kRounds; ++i)
    {
        const Fr t = s.left + c[i];
        const Fr next_left = s.right + t.squared() * t;
        s.right = s.left;
        s.left = next_left;
    }
}

std::array<Fr, 2> hash(std::span<const Fr> inputs)
{
    if (inputs.empty())
        throw std::invalid_argument("mimc::hash: empty input");
    State s;
    for (const auto& x : inputs)
    {
        s.left += x;
        permute(s);
    }
    const Fr limb0 = s.left;
    permute(s);
    return {limb0, s.left};
}
}  // namespace zkoffload::constraint::mimc
