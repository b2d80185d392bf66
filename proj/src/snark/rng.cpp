// zkoffload: verifiable computation offloading
// Copyright 2026 The zkoffload Authors.
// SPDX-License-Identifier: Apache-2.0

#include <zkoffload/snark/rng.hpp>

#include <openssl/sha.h>

#include <random>

namespace zkoffload::snark
{
FieldRng FieldRng::from_seed(std::string_view seed)
{
    std::array<uint8_t, 32> key{};
    SHA256(reinterpret_cast<const uint8_t*>(seed.data()), seed.size(), key.data());
    return FieldRng{key};
}

FieldRng FieldRng::from_entropy()
{
    std::random_device rd;
    std::array<uint8_t, 32> key{};
    for (std::size_t i = 0; i < key.size(); i += 4)
    {
        const uint32_t v = rd();
        for (std::size_t j = 0; j < 4; ++j)
            key[i + j] = static_cast<uint8_t>(v >> (8 * j));
    }
    return FieldRng{key};
}

Fr FieldRng::next()
{
    for (;;)
    {
        std::array<uint8_t, 40> block{};
        std::copy(key_.begin(), key_.end(), block.begin());
        for (std::size_t i = 0; i < 8; ++i)
            block[32 + i] = static_cast<uint8_t>(counter_ >> (8 * i));
        ++counter_;
        std::array<uint8_t, 32> out{};
        SHA256(block.data(), block.size(), out.data());
        algebra::Limbs v{};
        for (std::size_t i = 0; i < 32; ++i)
            v[i / 8] |= static_cast<uint64_t>(out[i]) << (8 * (i % 8));
        v[3] &= (uint64_t{1} << 62) - 1;  // 254 bits, then rejection
        if (!algebra::limbs::geq(v, Fr::kModulus))
            return Fr::from_canonical(v);
    }
}

Fr FieldRng::next_nonzero()
{
    for (;;)
    {
        Fr v = next();
        if (!v.is_zero())
            return v;
    }
}
}  // namespace zkoffload::snark
