// zkoffload: verifiable computation offloading
// Copyright 2026 The zkoffload Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <zkoffload/constraint/constraint_system.hpp>
#include <zkoffload/snark/witness.hpp>
#include <zkoffload/tsp/tsp.hpp>

#include <array>
#include <filesystem>
#include <map>
#include <memory>

namespace zkoffload::tsp
{
/// Maps by mapnumber. A registry file is JSON {"maps": [{"mapnumber": k, "file": "name.json"}, ...]}
/// with file paths relative to the registry.
class MapRegistry
{
public:
    void add(TspMap map);
    bool contains(uint64_t mapnumber) const noexcept { return maps_.count(mapnumber) != 0; }
    /// Throws TspError for an unregistered mapnumber.
    const TspMap& get(uint64_t mapnumber) const;
    std::vector<uint64_t> mapnumbers() const;

    static MapRegistry load(const std::filesystem::path& registry_file);

private:
    std::map<uint64_t, std::shared_ptr<const TspMap>> maps_;
};

/// Public input vector: [sum, path hash limb0, limb1, cities hash limb0, limb1, 1].
inline constexpr std::size_t kNumPublicInputs = 6;
using PublicInputs = std::array<Fr, kNumPublicInputs>;

struct TspCircuit
{
    uint64_t mapnumber = 0;
    std::size_t tier = 0;
    constraint::Circuit circuit;

    const constraint::ConstraintSystem& system() const noexcept { return circuit.system(); }
};

/// Private inputs: path[tier], mapnumber, cities[tier]. The circuit checks every entry is
/// at most n and mapnumber matches, that path is a permutation of cities, that sum is the
/// path's closed length, that both hashes match the public limbs, and that the return
/// value is one.
/// Throws TspError for an unregistered map or invalid tier.
TspCircuit build_tsp_circuit(const MapRegistry& registry, uint64_t mapnumber, std::size_t tier);
TspCircuit build_tsp_circuit(const TspMap& map, std::size_t tier);

PublicInputs public_inputs(uint64_t sum, std::span<const City> padded_path, std::span<const City> padded_cities);

std::vector<Fr> private_inputs(std::span<const City> padded_path, uint64_t mapnumber,
                               std::span<const City> padded_cities);

/// Pads the tour and cities to the circuit tier and runs compute_witness.
/// Throws TspError if the tour or instance does not fit the tier.
snark::WitnessResult tsp_witness(const TspCircuit& c, const Tour& tour, std::span<const City> cities);

}  // namespace zkoffload::tsp
