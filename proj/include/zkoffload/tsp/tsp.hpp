// zkoffload: verifiable computation offloading
// Copyright 2026 The zkoffload Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <zkoffload/algebra/field.hpp>

#include <array>
#include <cstdint>
#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace zkoffload::tsp
{
using algebra::Fr;

class TspError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

using City = uint64_t;

/// Padding value for unused path and city slots.
inline constexpr City kSentinel = 0;

inline constexpr std::array<std::size_t, 6> kTiers{10, 20, 30, 40, 50, 60};

bool is_valid_tier(std::size_t tier) noexcept;

/// Smallest tier holding `cities` entries. Throws TspError if none does.
std::size_t tier_for(std::size_t cities);

/// Cities are numbered 1..n; dist is row-major n x n.
struct TspMap
{
    uint64_t mapnumber = 0;
    std::size_t n = 0;
    std::vector<uint64_t> dist;

    /// Throws TspError for a city outside 1..n.
    uint64_t distance(City a, City b) const;
    bool contains(City c) const noexcept { return c >= 1 && c <= n; }
    uint64_t max_distance() const noexcept;

    /// Throws TspError unless symmetric with a zero diagonal and mapnumber >= 1.
    void check() const;

    std::string to_json() const;
    static TspMap from_json(const std::string& text);
    static TspMap load(const std::filesystem::path& path);
    void save(const std::filesystem::path& path) const;
};

/// Symmetric map with distances drawn uniformly from [1, 100].
TspMap generate_synthetic_map(uint64_t mapnumber, std::size_t n, uint64_t seed);

struct Tour
{
    std::vector<City> path;
    uint64_t sum = 0;

    bool operator==(const Tour&) const = default;
};

struct TaskSpec
{
    uint64_t mapnumber = 0;
    std::vector<City> cities;
    std::size_t tier = 0;

    /// Throws TspError if the tier is invalid, the instance does not fit it, or a city is
    /// missing from the map.
    void check(const TspMap& map) const;
};

/// Closed-tour length of path (last city back to the first). Empty path has length 0.
uint64_t tour_length(const TspMap& map, std::span<const City> path);

/// True iff the path is a permutation of instance_cities and the sum is its closed length.
/// Throws TspError if the path or instance names a city the map lacks.
bool validate_tour(const TspMap& map, std::span<const City> instance_cities, const Tour& tour);

/// Brute force over all orderings with the first city fixed. At most 10 cities.
Tour solve_exact(const TspMap& map, std::span<const City> instance_cities);

/// Nearest neighbour from a seed-chosen start, then 2-opt to a local optimum.
Tour solve_heuristic(const TspMap& map, std::span<const City> instance_cities, uint64_t seed);

/// Path extended with sentinels to exactly `tier` entries. Throws TspError if too long.
std::vector<City> pad_tour(const Tour& tour, std::size_t tier);
std::vector<City> pad_cities(std::span<const City> cities, std::size_t tier);

struct HashDigest
{
    Fr limb0;
    Fr limb1;

    bool operator==(const HashDigest&) const = default;
};

/// Out-of-circuit evaluation of the circuit hash. Throws TspError on empty input.
HashDigest hash_elements(std::span<const Fr> xs);

/// hash_elements over city numbers.
HashDigest hash_cities(std::span<const City> xs);

std::vector<Fr> to_field(std::span<const City> xs);

}  // namespace zkoffload::tsp
