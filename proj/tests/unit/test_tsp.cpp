// zkoffload: verifiable computation offloading
// Copyright 2026 The zkoffload Authors.
// SPDX-License-Identifier: Apache-2.0

#include "common.hpp"

#include <zkoffload/constraint/gadgets.hpp>
#include <zkoffload/tsp/circuit.hpp>

#include <gtest/gtest.h>

#include <algorithm>
#include <fstream>
#include <numeric>

using namespace zkoffload;
using namespace zkoffload::tsp;

namespace
{
std::vector<City> first_cities(std::size_t k)
{
    std::vector<City> c(k);
    std::iota(c.begin(), c.end(), City{1});
    return c;
}

uint64_t closed_length(const TspMap& m, const std::vector<City>& p)
{
    uint64_t s = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        s += m.dist[(p[i] - 1) * m.n + (p[(i + 1) % p.size()] - 1)];
    return s;
}
}  // namespace

TEST(Tiers, Selection)
{
    EXPECT_EQ(tier_for(1), 10u);
    EXPECT_EQ(tier_for(10), 10u);
    EXPECT_EQ(tier_for(11), 20u);
    EXPECT_EQ(tier_for(60), 60u);
    EXPECT_THROW(tier_for(61), TspError);
    EXPECT_TRUE(is_valid_tier(30));
    EXPECT_FALSE(is_valid_tier(15));
}

TEST(Map, FixturesMatchGenerator)
{
    const auto maps = test::fixture_maps();
    EXPECT_EQ(maps->mapnumbers(), (std::vector<uint64_t>{1, 2}));
    const auto& m1 = maps->get(1);
    const auto& m2 = maps->get(2);
    EXPECT_EQ(m1.n, 30u);
    EXPECT_EQ(m2.n, 70u);
    EXPECT_NO_THROW(m1.check());
    EXPECT_NO_THROW(m2.check());
    const auto g1 = generate_synthetic_map(1, 30, 30);
    EXPECT_EQ(g1.dist, m1.dist);
    EXPECT_EQ(generate_synthetic_map(2, 70, 70).dist, m2.dist);
    EXPECT_THROW(maps->get(3), TspError);
}

TEST(Map, JsonRoundTripAndChecks)
{
    const auto m = test::triangle_map();
    EXPECT_EQ(TspMap::from_json(m.to_json()).dist, m.dist);
    auto bad = m;
    bad.dist[1] = 6;
    EXPECT_THROW(bad.check(), TspError);
    bad = m;
    bad.dist[0] = 1;
    EXPECT_THROW(bad.check(), TspError);
    bad = m;
    bad.mapnumber = 0;
    EXPECT_THROW(bad.check(), TspError);
    EXPECT_THROW(TspMap::from_json("{\"mapnumber\": 1}"), TspError);
    EXPECT_THROW(m.distance(1, 4), TspError);
    EXPECT_EQ(m.distance(3, 1), 9u);
}

TEST(Validate, Examples)
{
    const auto m = test::triangle_map();
    const std::vector<City> inst{1, 2, 3};
    EXPECT_TRUE(validate_tour(m, inst, {{1, 2, 3}, 21}));
    EXPECT_FALSE(validate_tour(m, inst, {{1, 2, 3}, 20}));
    EXPECT_FALSE(validate_tour(m, inst, {{1, 1, 3}, 21}));
    EXPECT_FALSE(validate_tour(m, inst, {{1, 2}, 10}));
    EXPECT_FALSE(validate_tour(m, inst, {{1, 2, 3, 1}, 21}));
    EXPECT_THROW(validate_tour(m, inst, {{1, 2, 4}, 21}), TspError);
    EXPECT_THROW(validate_tour(m, std::vector<City>{1, 2, 5}, {{1, 2, 3}, 21}), TspError);
}

TEST(Solve, Exact)
{
    const auto m = test::triangle_map();
    EXPECT_EQ(solve_exact(m, std::vector<City>{1, 2, 3}).sum, 21u);
    const auto maps = test::fixture_maps();
    // Brute force over all tours of cities 1..5 on each fixture map.
    const auto t1 = solve_exact(maps->get(1), first_cities(5));
    EXPECT_EQ(t1.sum, 217u);
    EXPECT_TRUE(validate_tour(maps->get(1), first_cities(5), t1));
    EXPECT_EQ(t1.path.front(), 1u);
    EXPECT_EQ(solve_exact(maps->get(2), first_cities(5)).sum, 229u);
    EXPECT_EQ(solve_exact(maps->get(1), first_cities(8)).sum, 245u);
    EXPECT_THROW(solve_exact(maps->get(1), first_cities(11)), TspError);
    EXPECT_NO_THROW(solve_exact(maps->get(1), first_cities(10)));
}

TEST(Solve, Heuristic)
{
    const auto maps = test::fixture_maps();
    const auto& m = maps->get(1);
    const auto tri = test::triangle_map();
    EXPECT_EQ(solve_heuristic(tri, std::vector<City>{1, 2, 3}, 5).sum, solve_exact(tri, std::vector<City>{1, 2, 3}).sum);
    const auto inst = first_cities(8);
    const uint64_t exact = solve_exact(m, inst).sum;
    for (uint64_t seed = 0; seed < 20; ++seed)
    {
        const auto t = solve_heuristic(m, inst, seed);
        EXPECT_TRUE(validate_tour(m, inst, t));
        EXPECT_GE(t.sum, exact);
        EXPECT_EQ(t, solve_heuristic(m, inst, seed));
    }
    for (const std::size_t k : {1u, 2u, 30u})
        EXPECT_TRUE(validate_tour(m, first_cities(k), solve_heuristic(m, first_cities(k), 3)));
    const auto& m2 = maps->get(2);
    EXPECT_TRUE(validate_tour(m2, first_cities(60), solve_heuristic(m2, first_cities(60), 3)));
    EXPECT_THROW(solve_heuristic(m, std::vector<City>{}, 1), TspError);
}

TEST(Padding, Tour)
{
    const Tour t{{3, 1, 2}, 21};
    const auto p = pad_tour(t, 10);
    EXPECT_EQ(p, (std::vector<City>{3, 1, 2, 0, 0, 0, 0, 0, 0, 0}));
    const Tour ten{first_cities(10), 5};
    EXPECT_EQ(pad_tour(ten, 10), ten.path);
    EXPECT_THROW(pad_tour({first_cities(11), 5}, 10), TspError);
    EXPECT_EQ(pad_cities(std::vector<City>{4, 5}, 10).size(), 10u);
}

TEST(TaskSpec, Checks)
{
    const auto& m = test::fixture_maps()->get(1);
    EXPECT_NO_THROW((TaskSpec{1, {1, 2, 3}, 10}.check(m)));
    EXPECT_THROW((TaskSpec{1, {1, 2, 3}, 15}.check(m)), TspError);
    EXPECT_THROW((TaskSpec{1, first_cities(11), 10}.check(m)), TspError);
    EXPECT_THROW((TaskSpec{1, {1, 2, 2}, 10}.check(m)), TspError);
    EXPECT_THROW((TaskSpec{1, {1, 2, 31}, 10}.check(m)), TspError);
    EXPECT_THROW((TaskSpec{2, {1, 2}, 10}.check(m)), TspError);
    EXPECT_THROW((TaskSpec{1, {}, 10}.check(m)), TspError);
}

TEST(Hash, InAndOutOfCircuit)
{
    const std::vector<std::vector<City>> inputs{{1, 2, 3}, {7}, pad_tour({{5, 3, 9}, 0}, 20)};
    for (const auto& xs : inputs)
    {
        constraint::CircuitBuilder b;
        std::vector<constraint::LC> lcs;
        std::vector<constraint::Variable> vars;
        for (std::size_t i = 0; i < xs.size(); ++i)
        {
            vars.push_back(b.alloc_private_input());
            lcs.emplace_back(vars.back());
        }
        const auto h = constraint::gadgets::hash(b, lcs);
        const auto c = b.build();
        auto z = c.system().blank_assignment();
        for (std::size_t i = 0; i < xs.size(); ++i)
            z[vars[i].index] = Fr{xs[i]};
        c.generate(z);
        ASSERT_TRUE(c.system().is_satisfied(z));
        const auto d = hash_cities(xs);
        EXPECT_EQ(z[h.limb0.index], d.limb0);
        EXPECT_EQ(z[h.limb1.index], d.limb1);
    }
    EXPECT_NE(hash_cities(std::vector<City>{1, 2, 3}), hash_cities(std::vector<City>{1, 3, 2}));
    EXPECT_NE(hash_cities(std::vector<City>{1, 2, 3}), hash_cities(std::vector<City>{3, 2, 1}));
    EXPECT_NE(hash_cities(pad_tour({{1, 2, 3}, 0}, 10)), hash_cities(std::vector<City>{1, 2, 3}));
    EXPECT_THROW(hash_elements({}), TspError);
    EXPECT_EQ(hash_elements(to_field(std::vector<City>{4})), hash_cities(std::vector<City>{4}));
}

TEST(Circuit, Structure)
{
    const auto maps = test::fixture_maps();
    const auto c = build_tsp_circuit(*maps, 1, 10);
    EXPECT_EQ(c.system().num_public(), 6u);
    // path[10], mapnumber, cities[10]
    EXPECT_EQ(c.circuit.private_inputs().size(), 21u);
    EXPECT_THROW(build_tsp_circuit(*maps, 3, 10), TspError);
    EXPECT_THROW(build_tsp_circuit(*maps, 1, 15), TspError);
    EXPECT_EQ(build_tsp_circuit(*maps, 1, 10).system().num_constraints(), c.system().num_constraints());
}

TEST(Circuit, Examples)
{
    const auto maps = test::fixture_maps();
    const auto& m = maps->get(1);
    const auto c = build_tsp_circuit(*maps, 1, 10);
    const auto inst = first_cities(6);
    const auto t = solve_heuristic(m, inst, 2);
    auto r = tsp_witness(c, t, inst);
    ASSERT_TRUE(snark::succeeded(r));
    const auto z = std::get<constraint::Assignment>(r);
    EXPECT_TRUE(c.system().is_satisfied(z));

    // Hash limbs of a different valid path in the public inputs.
    Tour other = t;
    std::swap(other.path[1], other.path[2]);
    other.sum = tour_length(m, other.path);
    const auto other_pub = public_inputs(other.sum, pad_tour(other, 10), pad_cities(inst, 10));
    auto w = z;
    w[2] = other_pub[1];
    w[3] = other_pub[2];
    EXPECT_FALSE(c.system().is_satisfied(w));

    Tour dup = t;
    dup.path[1] = dup.path[0];
    dup.sum = tour_length(m, dup.path);
    EXPECT_FALSE(snark::succeeded(tsp_witness(c, dup, inst)));

    // Wrong mapnumber as private input.
    const auto pp = pad_tour(t, 10);
    const auto pc = pad_cities(inst, 10);
    const auto pub = public_inputs(t.sum, pp, pc);
    EXPECT_TRUE(snark::succeeded(snark::compute_witness(c.circuit, pub, private_inputs(pp, 1, pc))));
    EXPECT_FALSE(snark::succeeded(snark::compute_witness(c.circuit, pub, private_inputs(pp, 2, pc))));
    // City outside the map.
    auto big = pp;
    big[0] = 31;
    EXPECT_FALSE(snark::succeeded(
        snark::compute_witness(c.circuit, public_inputs(t.sum, big, pc), private_inputs(big, 1, pc))));
    EXPECT_THROW(snark::compute_witness(c.circuit, std::span{pub}.first(5), private_inputs(pp, 1, pc)),
                 snark::ShapeError);
}

TEST(Circuit, PaddingNeutrality)
{
    const auto maps = test::fixture_maps();
    const auto& m = maps->get(1);
    const auto c10 = build_tsp_circuit(*maps, 1, 10);
    const auto c20 = build_tsp_circuit(*maps, 1, 20);
    for (const std::size_t k : {3u, 7u, 10u})
    {
        const auto inst = first_cities(k);
        const auto t = solve_heuristic(m, inst, 1);
        EXPECT_EQ(closed_length(m, t.path), t.sum);
        EXPECT_TRUE(snark::succeeded(tsp_witness(c10, t, inst)));
        EXPECT_TRUE(snark::succeeded(tsp_witness(c20, t, inst)));
    }
}

TEST(Circuit, EnumerationMatchesValidateSmall)
{
    const auto maps = test::fixture_maps();
    std::mt19937_64 rng{5};
    for (const uint64_t mapnumber : {1u, 2u})
    {
        const auto& m = maps->get(mapnumber);
        const auto c = build_tsp_circuit(*maps, mapnumber, 10);
        for (std::size_t n = 1; n <= 4; ++n)
        {
            const auto inst = first_cities(n);
            std::vector<City> p = inst;
            do
            {
                const uint64_t len = closed_length(m, p);
                for (int v = 0; v < 6; ++v)
                {
                    const uint64_t sum = v == 0 ? len : len + 1 + rng() % 200 - std::min<uint64_t>(len, 100);
                    const Tour t{p, sum};
                    const bool expect = validate_tour(m, inst, t);
                    ASSERT_EQ(snark::succeeded(tsp_witness(c, t, inst)), expect)
                        << mapnumber << " n=" << n << " sum=" << sum;
                }
            } while (std::next_permutation(p.begin(), p.end()));
            // Non-permutations of the same length.
            for (int s = 0; s < 10; ++s)
            {
                std::vector<City> q(n);
                for (auto& x : q)
                    x = 1 + rng() % n;
                const Tour t{q, closed_length(m, q)};
                ASSERT_EQ(snark::succeeded(tsp_witness(c, t, inst)), validate_tour(m, inst, t));
            }
        }
    }
}

TEST(Registry, LoadErrors)
{
    const auto dir = std::filesystem::temp_directory_path() / "zkoffload-registry-test";
    std::filesystem::create_directories(dir);
    test::triangle_map(4).save(dir / "tri.json");
    {
        std::ofstream{dir / "ok.json"} << R"({"maps": [{"mapnumber": 4, "file": "tri.json"}]})";
        std::ofstream{dir / "bad.json"} << R"({"maps": [{"mapnumber": 5, "file": "tri.json"}]})";
    }
    EXPECT_TRUE(MapRegistry::load(dir / "ok.json").contains(4));
    EXPECT_THROW(MapRegistry::load(dir / "bad.json"), TspError);
    EXPECT_THROW(MapRegistry::load(dir / "missing.json"), TspError);
    std::filesystem::remove_all(dir);
}
