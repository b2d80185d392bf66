// zkoffload: verifiable computation offloading
// Copyright 2026 The zkoffload Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <zkoffload/algebra/field.hpp>
#include <zkoffload/tsp/circuit.hpp>

#include <filesystem>
#include <random>

namespace zkoffload::test
{
using algebra::Fr;

template <typename F = Fr>
F random_element(std::mt19937_64& rng)
{
    algebra::Limbs v{rng(), rng(), rng(), rng() >> 3};
    return F::from_limbs(v);
}

inline std::filesystem::path data_dir()
{
    return ZKOFFLOAD_DATA_DIR;
}

inline std::shared_ptr<const tsp::MapRegistry> fixture_maps()
{
    static const auto maps =
        std::make_shared<const tsp::MapRegistry>(tsp::MapRegistry::load(data_dir() / "maps" / "registry.json"));
    return maps;
}

/// The 3-city map d(1,2)=5, d(2,3)=7, d(1,3)=9.
inline tsp::TspMap triangle_map(uint64_t mapnumber = 9)
{
    tsp::TspMap m;
    m.mapnumber = mapnumber;
    m.n = 3;
    m.dist = {0, 5, 9, 5, 0, 7, 9, 7, 0};
    return m;
}

}  // namespace zkoffload::test
