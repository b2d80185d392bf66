// zkoffload: verifiable computation offloading
// Copyright 2026 The zkoffload Authors.
// SPDX-License-Identifier: Apache-2.0

#include <zkoffload/constraint/mimc.hpp>
#include <zkoffload/tsp/tsp.hpp>

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <limits>
#include <random>
#include <sstream>

namespace zkoffload::tsp
{
bool is_valid_tier(std::size_t tier) noexcept
{
    return std::find(kTiers.begin(), kTiers.end(), tier) != kTiers.end();
}

std::size_t tier_for(std::size_t cities)
{
    for (const auto t : kTiers)
    {
        if (cities <= t)
            return t;
    }
    throw TspError("instance of " + std::to_string(cities) + " cities exceeds the largest tier");
}

uint64_t TspMap::distance(City a, City b) const
{
    if (!contains(a) || !contains(b))
        throw TspError("city " + std::to_string(contains(a) ? b : a) + " is not on map " +
                       std::to_string(mapnumber));
    return dist[(a - 1) * n + (b - 1)];
}

uint64_t TspMap::max_distance() const noexcept
{
    return dist.empty() ? 0 : *std::max_element(dist.begin(), dist.end());
}

void TspMap::check() const
{
    if (mapnumber < 1)
        throw TspError("mapnumber must be >= 1");
    if (n == 0)
        throw TspError("map has no cities");
    if (dist.size() != n * n)
        throw TspError("distance matrix must be n x n");
    for (std::size_t i = 0; i < n; ++i)
    {
        if (dist[i * n + i] != 0)
            throw TspError("distance matrix diagonal must be zero");
        for (std::size_t j = i + 1; j < n; ++j)
        {
            if (dist[i * n + j] != dist[j * n + i])
                throw TspError("distance matrix must be symmetric");
        }
    }
}

std::string TspMap::to_json() const
{
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < n; ++i)
        rows.push_back(std::vector<uint64_t>(dist.begin() + static_cast<std::ptrdiff_t>(i * n),
                                             dist.begin() + static_cast<std::ptrdiff_t>((i + 1) * n)));
    nlohmann::json j;
    j["mapnumber"] = mapnumber;
    j["n"] = n;
    j["dist"] = std::move(rows);
    return j.dump();
}

TspMap TspMap::from_json(const std::string& text)
{
    TspMap m;
    try
    {
        const auto j = nlohmann::json::parse(text);
        m.mapnumber = j.at("mapnumber").get<uint64_t>();
        m.n = j.at("n").get<std::size_t>();
        const auto& rows = j.at("dist");
        if (!rows.is_array() || rows.size() != m.n)
            throw TspError("dist must have n rows");
        m.dist.reserve(m.n * m.n);
        for (const auto& row : rows)
        {
            if (!row.is_array() || row.size() != m.n)
                throw TspError("dist rows must have n entries");
            for (const auto& v : row)
                m.dist.push_back(v.get<uint64_t>());
        }
    }
    catch (const nlohmann::json::exception& e)
    {
        throw TspError(std::string{"malformed map: "} + e.what());
    }
    m.check();
    return m;
}

TspMap TspMap::load(const std::filesystem::path& path)
{
    std::ifstream in{path};
    if (!in)
        throw TspError("cannot open map file " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return from_json(ss.str());
}

void TspMap::save(const std::filesystem::path& path) const
{
    std::ofstream out{path};
    if (!out)
        throw std::runtime_error("cannot write " + path.string());
    out << to_json() << '\n';
}

TspMap generate_synthetic_map(uint64_t mapnumber, std::size_t n, uint64_t seed)
{
    std::mt19937_64 rng{seed};
    std::uniform_int_distribution<uint64_t> d{1, 100};
    TspMap m{mapnumber, n, std::vector<uint64_t>(n * n, 0)};
    for (std::size_t i = 0; i < n; ++i)
    {
        for (std::size_t j = i + 1; j < n; ++j)
        {
            const uint64_t v = d(rng);
            m.dist[i * n + j] = v;
            m.dist[j * n + i] = v;
        }
    }
    m.check();
    return m;
}

void TaskSpec::check(const TspMap& map) const
{
    if (!is_valid_tier(tier))
        throw TspError("invalid tier " + std::to_string(tier));
    if (cities.empty())
        throw TspError("task has no cities");
    if (cities.size() > tier)
        throw TspError("instance of " + std::to_string(cities.size()) + " cities exceeds tier " +
                       std::to_string(tier));
    if (map.mapnumber != mapnumber)
        throw TspError("task refers to map " + std::to_string(mapnumber));
    std::vector<City> seen(cities.begin(), cities.end());
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
        throw TspError("task lists a city twice");
    for (const auto c : cities)
    {
        if (!map.contains(c))
            throw TspError("city " + std::to_string(c) + " is not on map " + std::to_string(map.mapnumber));
    }
}

uint64_t tour_length(const TspMap& map, std::span<const City> path)
{
    if (path.empty())
        return 0;
    uint64_t total = 0;
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
        total += map.distance(path[i], path[i + 1]);
    return total + map.distance(path.back(), path.front());
}

bool validate_tour(const TspMap& map, std::span<const City> instance_cities, const Tour& tour)
{
    for (const auto c : instance_cities)
    {
        if (!map.contains(c))
            throw TspError("city " + std::to_string(c) + " is not on map " + std::to_string(map.mapnumber));
    }
    for (const auto c : tour.path)
    {
        if (!map.contains(c))
            throw TspError("city " + std::to_string(c) + " is not on map " + std::to_string(map.mapnumber));
    }
    std::vector<City> a(tour.path.begin(), tour.path.end());
    std::vector<City> b(instance_cities.begin(), instance_cities.end());
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b)
        return false;
    return tour_length(map, tour.path) == tour.sum;
}

namespace
{
void check_instance(const TspMap& map, std::span<const City> cities)
{
    if (cities.empty())
        throw TspError("empty instance");
    for (const auto c : cities)
    {
        if (!map.contains(c))
            throw TspError("city " + std::to_string(c) + " is not on map " + std::to_string(map.mapnumber));
    }
}
}  // namespace

Tour solve_exact(const TspMap& map, std::span<const City> instance_cities)
{
    check_instance(map, instance_cities);
    if (instance_cities.size() > 10)
        throw TspError("solve_exact supports at most 10 cities");
    std::vector<City> path(instance_cities.begin(), instance_cities.end());
    std::sort(path.begin() + 1, path.end());
    Tour best{path, tour_length(map, path)};
    while (std::next_permutation(path.begin() + 1, path.end()))
    {
        const uint64_t len = tour_length(map, path);
        if (len < best.sum)
            best = {path, len};
    }
    return best;
}

Tour solve_heuristic(const TspMap& map, std::span<const City> instance_cities, uint64_t seed)
{
    check_instance(map, instance_cities);
    const std::size_t k = instance_cities.size();
    std::mt19937_64 rng{seed};
    std::vector<City> left(instance_cities.begin(), instance_cities.end());
    const std::size_t start = std::uniform_int_distribution<std::size_t>{0, k - 1}(rng);

    std::vector<City> path;
    path.reserve(k);
    path.push_back(left[start]);
    left.erase(left.begin() + static_cast<std::ptrdiff_t>(start));
    while (!left.empty())
    {
        auto best = left.begin();
        for (auto it = left.begin(); it != left.end(); ++it)
        {
            if (map.distance(path.back(), *it) < map.distance(path.back(), *best))
                best = it;
        }
        path.push_back(*best);
        left.erase(best);
    }

    // 2-opt: reverse path[i..j] when it shortens the closed tour.
    bool improved = k > 3;
    while (improved)
    {
        improved = false;
        for (std::size_t i = 1; i + 1 < k && !improved; ++i)
        {
            for (std::size_t j = i + 1; j < k && !improved; ++j)
            {
                const City a = path[i - 1];
                const City b = path[i];
                const City c = path[j];
                const City d = path[(j + 1) % k];
                const uint64_t before = map.distance(a, b) + map.distance(c, d);
                const uint64_t after = map.distance(a, c) + map.distance(b, d);
                if (after < before)
                {
                    std::reverse(path.begin() + static_cast<std::ptrdiff_t>(i),
                                 path.begin() + static_cast<std::ptrdiff_t>(j) + 1);
                    improved = true;
                }
            }
        }
    }
    const uint64_t len = tour_length(map, path);
    return {std::move(path), len};
}

std::vector<City> pad_cities(std::span<const City> cities, std::size_t tier)
{
    if (cities.size() > tier)
        throw TspError("path of length " + std::to_string(cities.size()) + " does not fit tier " +
                       std::to_string(tier));
    std::vector<City> out(cities.begin(), cities.end());
    out.resize(tier, kSentinel);
    return out;
}

std::vector<City> pad_tour(const Tour& tour, std::size_t tier)
{
    return pad_cities(tour.path, tier);
}

HashDigest hash_elements(std::span<const Fr> xs)
{
    if (xs.empty())
        throw TspError("hash of an empty list");
    const auto h = constraint::mimc::hash(xs);
    return {h[0], h[1]};
}

std::vector<Fr> to_field(std::span<const City> xs)
{
    std::vector<Fr> out;
    out.reserve(xs.size());
    for (const auto x : xs)
        out.emplace_back(x);
    return out;
}

HashDigest hash_cities(std::span<const City> xs)
{
    return hash_elements(to_field(xs));
}
}  // namespace zkoffload::tsp
