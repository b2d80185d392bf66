// zkoffload: verifiable computation offloading
// Copyright 2026 The zkoffload Authors.
// SPDX-License-Identifier: Apache-2.0

#include <zkoffload/constraint/gadgets.hpp>
#include <zkoffload/tsp/circuit.hpp>

#include <json.hpp>

#include <fstream>

namespace zkoffload::tsp
{
using constraint::CircuitBuilder;
using constraint::LC;
using constraint::Variable;
using constraint::Visibility;
namespace gadgets = constraint::gadgets;

void MapRegistry::add(TspMap map)
{
    map.check();
    const uint64_t id = map.mapnumber;
    maps_[id] = std::make_shared<const TspMap>(std::move(map));
}

const TspMap& MapRegistry::get(uint64_t mapnumber) const
{
    const auto it = maps_.find(mapnumber);
    if (it == maps_.end())
        throw TspError("map " + std::to_string(mapnumber) + " is not registered");
    return *it->second;
}

std::vector<uint64_t> MapRegistry::mapnumbers() const
{
    std::vector<uint64_t> out;
    for (const auto& [k, v] : maps_)
        out.push_back(k);
    return out;
}

MapRegistry MapRegistry::load(const std::filesystem::path& registry_file)
{
    std::ifstream in{registry_file};
    if (!in)
        throw TspError("cannot open registry " + registry_file.string());
    MapRegistry reg;
    try
    {
        const auto j = nlohmann::json::parse(in);
        for (const auto& e : j.at("maps"))
        {
            TspMap m = TspMap::load(registry_file.parent_path() / e.at("file").get<std::string>());
            if (m.mapnumber != e.at("mapnumber").get<uint64_t>())
                throw TspError("registry entry disagrees with map file mapnumber");
            reg.add(std::move(m));
        }
    }
    catch (const nlohmann::json::exception& e)
    {
        throw TspError(std::string{"malformed registry: "} + e.what());
    }
    return reg;
}

TspCircuit build_tsp_circuit(const MapRegistry& registry, uint64_t mapnumber, std::size_t tier)
{
    return build_tsp_circuit(registry.get(mapnumber), tier);
}

TspCircuit build_tsp_circuit(const TspMap& map, std::size_t tier)
{
    map.check();
    if (!is_valid_tier(tier))
        throw TspError("invalid tier " + std::to_string(tier));
    // Largest possible sum must stay far below the field modulus.
    if (map.max_distance() > (uint64_t{1} << 48))
        throw TspError("distances too large for the circuit");

    CircuitBuilder b;
    const Variable sum = b.alloc(Visibility::kPublic);
    const Variable path_h0 = b.alloc(Visibility::kPublic);
    const Variable path_h1 = b.alloc(Visibility::kPublic);
    const Variable cities_h0 = b.alloc(Visibility::kPublic);
    const Variable cities_h1 = b.alloc(Visibility::kPublic);
    const Variable ret = b.alloc(Visibility::kPublic);

    std::vector<Variable> path(tier);
    for (auto& v : path)
        v = b.alloc_private_input();
    const Variable mapnumber = b.alloc_private_input();
    std::vector<Variable> cities(tier);
    for (auto& v : cities)
        v = b.alloc_private_input();

    // basicInputCheck
    for (const auto& v : path)
        gadgets::range_check(b, LC{v}, map.n);
    for (const auto& v : cities)
        gadgets::range_check(b, LC{v}, map.n);
    gadgets::equal(b, LC{mapnumber}, LC::constant(map.mapnumber));

    // checkCities
    gadgets::permutation_check(b, path, cities);

    // calculateSum
    auto table = std::make_shared<constraint::SquareTable>();
    table->dim = map.n + 1;
    table->values.assign(table->dim * table->dim, Fr::zero());
    for (std::size_t i = 1; i <= map.n; ++i)
    {
        for (std::size_t j = 1; j <= map.n; ++j)
            table->values[i * table->dim + j] = Fr{map.distance(i, j)};
    }
    gadgets::path_sum(b, path, table, sum);

    std::vector<LC> path_lc(path.begin(), path.end());
    const auto ph = gadgets::hash(b, path_lc);
    gadgets::equal(b, LC{ph.limb0}, LC{path_h0});
    gadgets::equal(b, LC{ph.limb1}, LC{path_h1});

    std::vector<LC> cities_lc(cities.begin(), cities.end());
    const auto ch = gadgets::hash(b, cities_lc);
    gadgets::equal(b, LC{ch.limb0}, LC{cities_h0});
    gadgets::equal(b, LC{ch.limb1}, LC{cities_h1});

    gadgets::equal(b, LC{ret}, LC::constant(1));

    return {map.mapnumber, tier, b.build()};
}

PublicInputs public_inputs(uint64_t sum, std::span<const City> padded_path, std::span<const City> padded_cities)
{
    const HashDigest ph = hash_cities(padded_path);
    const HashDigest ch = hash_cities(padded_cities);
    return {Fr{sum}, ph.limb0, ph.limb1, ch.limb0, ch.limb1, Fr::one()};
}

std::vector<Fr> private_inputs(std::span<const City> padded_path, uint64_t mapnumber,
                               std::span<const City> padded_cities)
{
    std::vector<Fr> out = to_field(padded_path);
    out.emplace_back(mapnumber);
    const auto c = to_field(padded_cities);
    out.insert(out.end(), c.begin(), c.end());
    return out;
}

snark::WitnessResult tsp_witness(const TspCircuit& c, const Tour& tour, std::span<const City> cities)
{
    const auto path = pad_tour(tour, c.tier);
    const auto padded_cities = pad_cities(cities, c.tier);
    const auto pub = public_inputs(tour.sum, path, padded_cities);
    return snark::compute_witness(c.circuit, pub, private_inputs(path, c.mapnumber, padded_cities));
}
}  // namespace zkoffload::tsp
