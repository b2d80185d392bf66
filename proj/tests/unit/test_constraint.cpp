// zkoffload: verifiable computation offloading
// Copyright 2026 The zkoffload Authors.
// SPDX-License-Identifier: Apache-2.0

#include "common.hpp"

#include <zkoffload/constraint/gadgets.hpp>
#include <zkoffload/constraint/mimc.hpp>
#include <zkoffload/tsp/circuit.hpp>

#include <gtest/gtest.h>

using namespace zkoffload;
using namespace zkoffload::constraint;
using test::random_element;

namespace
{
Assignment solve(const Circuit& c, const std::vector<std::pair<Variable, Fr>>& inputs)
{
    Assignment z = c.system().blank_assignment();
    for (const auto& [v, x] : inputs)
        z[v.index] = x;
    c.generate(z);
    return z;
}

/// Perturbs one random non-constant variable by a random nonzero amount, `trials` times.
/// Returns how many perturbed assignments still satisfied the system.
int perturbation_survivors(const Circuit& c, const Assignment& z, int trials, uint64_t seed)
{
    std::mt19937_64 rng{seed};
    int survivors = 0;
    for (int t = 0; t < trials; ++t)
    {
        Assignment w = z;
        const std::size_t idx = 1 + rng() % (w.size() - 1);
        Fr delta = random_element(rng);
        if (delta.is_zero())
            delta = Fr::one();
        w[idx] += delta;
        survivors += c.system().is_satisfied(w) ? 1 : 0;
    }
    return survivors;
}

Fr hexf(const char* s)
{
    return Fr::from_hex(s);
}
}  // namespace

TEST(ConstraintSystem, AllocationOrder)
{
    ConstraintSystem cs;
    EXPECT_EQ(cs.alloc(Visibility::kPublic).index, 1u);
    EXPECT_EQ(cs.alloc(Visibility::kPublic).index, 2u);
    EXPECT_EQ(cs.alloc(Visibility::kPrivate).index, 3u);
    EXPECT_THROW(cs.alloc(Visibility::kPublic), ConstraintError);
    EXPECT_EQ(cs.num_public(), 2u);
    EXPECT_EQ(cs.num_private(), 1u);
    EXPECT_EQ(cs.num_variables(), 4u);
    cs.finalize();
    EXPECT_THROW(cs.alloc(Visibility::kPrivate), ConstraintError);
    EXPECT_THROW(cs.enforce(LC{}, LC{}, LC{}), ConstraintError);
}

TEST(ConstraintSystem, EnforceRejectsUnknownVariable)
{
    ConstraintSystem cs;
    const Variable a = cs.alloc(Visibility::kPrivate);
    EXPECT_THROW(cs.enforce(a, Variable{5}, a), ConstraintError);
    EXPECT_EQ(cs.num_constraints(), 0u);
}

TEST(ConstraintSystem, Multiplication)
{
    ConstraintSystem cs;
    const Variable c = cs.alloc(Visibility::kPublic);
    const Variable a = cs.alloc(Visibility::kPrivate);
    const Variable b = cs.alloc(Visibility::kPrivate);
    cs.enforce(a, b, c);
    cs.finalize();
    EXPECT_TRUE(cs.is_satisfied(std::vector<Fr>{Fr{1}, Fr{12}, Fr{3}, Fr{4}}));
    EXPECT_FALSE(cs.is_satisfied(std::vector<Fr>{Fr{1}, Fr{11}, Fr{3}, Fr{4}}));
    EXPECT_FALSE(cs.is_satisfied(std::vector<Fr>{Fr{1}, Fr{12}, Fr{3}, Fr{5}}));
    EXPECT_EQ(cs.first_unsatisfied(std::vector<Fr>{Fr{1}, Fr{12}, Fr{3}, Fr{5}}), 0u);
    EXPECT_THROW(cs.is_satisfied(std::vector<Fr>{Fr{1}, Fr{12}}), ConstraintError);
    EXPECT_THROW(cs.is_satisfied(std::vector<Fr>{Fr{2}, Fr{12}, Fr{3}, Fr{4}}), ConstraintError);
}

TEST(ConstraintSystem, EmptySystemSatisfied)
{
    ConstraintSystem cs;
    cs.alloc(Visibility::kPrivate);
    cs.finalize();
    EXPECT_TRUE(cs.is_satisfied(std::vector<Fr>{Fr{1}, Fr{77}}));
}

TEST(ConstraintSystem, Booleanity)
{
    CircuitBuilder b;
    const Variable x = b.alloc_private();
    gadgets::boolean(b, x);
    const Circuit c = b.build();
    std::mt19937_64 rng{1};
    EXPECT_TRUE(c.system().is_satisfied(std::vector<Fr>{Fr{1}, Fr{0}}));
    EXPECT_TRUE(c.system().is_satisfied(std::vector<Fr>{Fr{1}, Fr{1}}));
    EXPECT_FALSE(c.system().is_satisfied(std::vector<Fr>{Fr{1}, Fr{2}}));
    for (int i = 0; i < 100; ++i)
    {
        const Fr v = random_element(rng);
        if (v != Fr::zero() && v != Fr::one())
        {
            EXPECT_FALSE(c.system().is_satisfied(std::vector<Fr>{Fr{1}, v}));
        }
    }
}

TEST(ConstraintSystem, DigestTracksContent)
{
    auto build = [](uint64_t k) {
        ConstraintSystem cs;
        const Variable a = cs.alloc(Visibility::kPrivate);
        cs.enforce(a, LC::constant(k), a);
        cs.finalize();
        return cs;
    };
    EXPECT_EQ(build(1).digest(), build(1).digest());
    EXPECT_NE(build(1).digest(), build(2).digest());
    EXPECT_TRUE(build(3) == build(3));
}

TEST(LinearCombination, CanonicalForm)
{
    const Variable x{3}, y{1};
    LC lc = LC{x} + LC{y} * Fr{2} + LC::constant(5);
    ASSERT_EQ(lc.terms().size(), 3u);
    for (std::size_t i = 1; i < lc.terms().size(); ++i)
        EXPECT_LT(lc.terms()[i - 1].index, lc.terms()[i].index);
    lc -= LC{x};
    EXPECT_EQ(lc.terms().size(), 2u);
    for (const auto& t : lc.terms())
        EXPECT_FALSE(t.coeff.is_zero());
    EXPECT_TRUE((LC{x} - LC{x}).empty());
    const std::vector<Fr> z{Fr{1}, Fr{10}, Fr{0}, Fr{4}};
    EXPECT_EQ((LC{x} * Fr{3} - LC{y} + LC::constant(2)).evaluate(z), Fr{4});
}

TEST(Gadgets, IndexedLookup)
{
    CircuitBuilder b;
    std::vector<Variable> sel{b.alloc_private_input(), b.alloc_private_input(), b.alloc_private_input()};
    const std::vector<Fr> table{Fr{5}, Fr{7}, Fr{9}};
    const Variable out = gadgets::indexed_lookup(b, table, sel);
    const Circuit c = b.build();

    auto run = [&](int s0, int s1, int s2) {
        return solve(c, {{sel[0], Fr{static_cast<uint64_t>(s0)}},
                         {sel[1], Fr{static_cast<uint64_t>(s1)}},
                         {sel[2], Fr{static_cast<uint64_t>(s2)}}});
    };
    auto z = run(0, 1, 0);
    EXPECT_TRUE(c.system().is_satisfied(z));
    EXPECT_EQ(z[out.index], Fr{7});
    z = run(1, 0, 0);
    EXPECT_TRUE(c.system().is_satisfied(z));
    EXPECT_EQ(z[out.index], Fr{5});
    EXPECT_FALSE(c.system().is_satisfied(run(1, 1, 0)));
    EXPECT_FALSE(c.system().is_satisfied(run(0, 0, 0)));

    CircuitBuilder b2;
    std::vector<Variable> two{b2.alloc_private(), b2.alloc_private()};
    EXPECT_THROW(gadgets::indexed_lookup(b2, table, two), std::invalid_argument);

    EXPECT_EQ(perturbation_survivors(c, run(0, 0, 1), 100, 2), 0);
}

TEST(Gadgets, PermutationCheck)
{
    constexpr std::size_t n = 3;
    CircuitBuilder b;
    std::vector<Variable> path, cities;
    for (std::size_t i = 0; i < n; ++i)
        path.push_back(b.alloc_private_input());
    for (std::size_t i = 0; i < n; ++i)
        cities.push_back(b.alloc_private_input());
    gadgets::permutation_check(b, path, cities);
    const Circuit c = b.build();

    auto run = [&](std::array<uint64_t, n> p, std::array<uint64_t, n> q) {
        std::vector<std::pair<Variable, Fr>> in;
        for (std::size_t i = 0; i < n; ++i)
        {
            in.emplace_back(path[i], Fr{p[i]});
            in.emplace_back(cities[i], Fr{q[i]});
        }
        return solve(c, in);
    };
    EXPECT_TRUE(c.system().is_satisfied(run({2, 3, 1}, {1, 2, 3})));
    EXPECT_TRUE(c.system().is_satisfied(run({1, 2, 3}, {1, 2, 3})));
    EXPECT_FALSE(c.system().is_satisfied(run({1, 1, 3}, {1, 2, 3})));
    EXPECT_EQ(perturbation_survivors(c, run({3, 1, 2}, {1, 2, 3}), 100, 3), 0);

    // No selector matrix at all satisfies [1,1,3] against [1,2,3]: the 9 selector bits are enumerated
    // with every product set consistently.
    Assignment base = run({1, 1, 3}, {1, 2, 3});
    const std::size_t first_selector = cities.back().index + 1;
    for (uint32_t mask = 0; mask < (1u << (n * n)); ++mask)
    {
        Assignment w = base;
        for (std::size_t k = 0; k < n * n; ++k)
        {
            const bool on = ((mask >> k) & 1) != 0;
            const std::size_t sel = first_selector + 2 * k;
            w[sel] = on ? Fr::one() : Fr::zero();
            w[sel + 1] = on ? w[cities[k % n].index] : Fr::zero();
        }
        ASSERT_FALSE(c.system().is_satisfied(w)) << mask;
    }
}

TEST(Gadgets, PermutationCheckPadded)
{
    const std::size_t tier = 10;
    CircuitBuilder b;
    std::vector<Variable> path, cities;
    for (std::size_t i = 0; i < tier; ++i)
        path.push_back(b.alloc_private_input());
    for (std::size_t i = 0; i < tier; ++i)
        cities.push_back(b.alloc_private_input());
    gadgets::permutation_check(b, path, cities);
    const Circuit c = b.build();

    auto run = [&](const std::vector<tsp::City>& p, const std::vector<tsp::City>& q) {
        const auto pp = tsp::pad_tour({p, 0}, tier);
        const auto pq = tsp::pad_cities(q, tier);
        std::vector<std::pair<Variable, Fr>> in;
        for (std::size_t i = 0; i < tier; ++i)
        {
            in.emplace_back(path[i], Fr{pp[i]});
            in.emplace_back(cities[i], Fr{pq[i]});
        }
        return solve(c, in);
    };
    EXPECT_TRUE(c.system().is_satisfied(run({1, 2}, {1, 2})));
    EXPECT_TRUE(c.system().is_satisfied(run({2, 1}, {1, 2})));
    // Padding never lets a path skip an instance city.
    EXPECT_FALSE(c.system().is_satisfied(run({1, 2}, {1, 2, 3})));
}

TEST(Gadgets, PathSum)
{
    const auto map = test::triangle_map();
    auto table = std::make_shared<SquareTable>();
    table->dim = map.n + 1;
    table->values.assign(table->dim * table->dim, Fr::zero());
    for (std::size_t i = 1; i <= map.n; ++i)
        for (std::size_t j = 1; j <= map.n; ++j)
            table->values[i * table->dim + j] = Fr{map.distance(i, j)};

    for (const std::size_t slots : {3u, 5u})
    {
        CircuitBuilder b;
        std::vector<Variable> path;
        for (std::size_t i = 0; i < slots; ++i)
            path.push_back(b.alloc_private_input());
        const Variable sum = b.alloc_private_input();
        gadgets::path_sum(b, path, table, sum);
        const Circuit c = b.build();

        auto run = [&](std::vector<uint64_t> p, uint64_t s) {
            p.resize(slots, 0);
            std::vector<std::pair<Variable, Fr>> in{{sum, Fr{s}}};
            for (std::size_t i = 0; i < slots; ++i)
                in.emplace_back(path[i], Fr{p[i]});
            return solve(c, in);
        };
        EXPECT_TRUE(c.system().is_satisfied(run({1, 2, 3}, 21))) << slots;
        EXPECT_TRUE(c.system().is_satisfied(run({3, 1, 2}, 21)));
        EXPECT_FALSE(c.system().is_satisfied(run({1, 2, 3}, 20)));
        EXPECT_FALSE(c.system().is_satisfied(run({1, 2, 3}, 22)));
        // Two cities: 5 + 5 for the closing edge.
        EXPECT_TRUE(c.system().is_satisfied(run({1, 2}, 10)));
        EXPECT_EQ(perturbation_survivors(c, run({2, 3, 1}, 21), 100, 4), 0);
        if (slots == 5)
        {
            // A sentinel may not be followed by a city.
            EXPECT_FALSE(c.system().is_satisfied(run({1, 0, 2, 3, 0}, 21)));
            EXPECT_FALSE(c.system().is_satisfied(run({1, 2, 3, 4, 0}, 21)));
        }
    }
}

TEST(Gadgets, HashMatchesReference)
{
    // Digest limbs from an independent big-integer implementation of the same permutation.
    struct Vec
    {
        std::vector<uint64_t> in;
        const char* l0;
        const char* l1;
    };
    const std::vector<Vec> vecs{
        {{1, 2, 3}, "10107d24dbef4db97e75bf89f0455dc5f4f4b4d07aa9d75e8c2ef6d521cf3e56",
         "2afd5cd030259b9a6ef025589692aa2db8591ddedb02c312e82a080e3567cc29"},
        {{3, 2, 1}, "1696bcd57eeeaf8d01d36872dbfeeb9ba81189ad864a83b166b333bbf848f415",
         "2a44268e5ff6aef3654d5de894a9a13b950c8082a52441b5224609bcfc960b16"},
        {{7}, "1418d577f798672e280025e487defab795d254277e38418350d59d52bb0a4d33",
         "10aac8885a8127c2d6bd021844873c339f872f25e6ac8167f12b8b17d74bb9fe"},
        {{1, 2, 3, 0, 0, 0, 0, 0, 0, 0}, "fc0e7976ec2a73349b15d13471abf73aa69adc3a06881e33effb331668f25d4",
         "226bad625e0e1386b1879bcf25fae59b3e9081f9cf0a591638a795eeebefd5db"},
    };
    for (const auto& v : vecs)
    {
        std::vector<Fr> xs;
        for (const auto x : v.in)
            xs.emplace_back(x);
        const auto d = mimc::hash(xs);
        EXPECT_EQ(d[0], hexf(v.l0));
        EXPECT_EQ(d[1], hexf(v.l1));
    }
    EXPECT_THROW(mimc::hash({}), std::invalid_argument);
}

TEST(Gadgets, HashInCircuit)
{
    const std::vector<Fr> xs{Fr{1}, Fr{2}, Fr{3}};
    const auto digest = mimc::hash(xs);

    CircuitBuilder b;
    const Variable l0 = b.alloc(Visibility::kPublic);
    const Variable l1 = b.alloc(Visibility::kPublic);
    std::vector<Variable> in;
    std::vector<LC> lcs;
    for (std::size_t i = 0; i < xs.size(); ++i)
    {
        in.push_back(b.alloc_private_input());
        lcs.emplace_back(in.back());
    }
    const auto h = gadgets::hash(b, lcs);
    gadgets::equal(b, h.limb0, l0);
    gadgets::equal(b, h.limb1, l1);
    const Circuit c = b.build();

    auto run = [&](std::vector<Fr> vals) {
        std::vector<std::pair<Variable, Fr>> inputs{{l0, digest[0]}, {l1, digest[1]}};
        for (std::size_t i = 0; i < vals.size(); ++i)
            inputs.emplace_back(in[i], vals[i]);
        return solve(c, inputs);
    };
    const Assignment z = run(xs);
    EXPECT_TRUE(c.system().is_satisfied(z));
    EXPECT_EQ(z[h.limb0.index], digest[0]);
    EXPECT_EQ(z[h.limb1.index], digest[1]);
    for (std::size_t i = 0; i < xs.size(); ++i)
    {
        auto p = xs;
        p[i] += Fr::one();
        EXPECT_FALSE(c.system().is_satisfied(run(p))) << i;
    }
    EXPECT_EQ(perturbation_survivors(c, z, 200, 5), 0);

    CircuitBuilder empty;
    EXPECT_THROW(gadgets::hash(empty, {}), std::invalid_argument);
}

TEST(Gadgets, RangeCheck)
{
    for (const uint64_t bound : {0u, 1u, 5u, 8u, 30u, 70u})
    {
        CircuitBuilder b;
        const Variable x = b.alloc_private_input();
        gadgets::range_check(b, x, bound);
        const Circuit c = b.build();
        for (uint64_t v = 0; v <= bound + 3; ++v)
            EXPECT_EQ(c.system().is_satisfied(solve(c, {{x, Fr{v}}})), v <= bound) << bound << " " << v;
        EXPECT_FALSE(c.system().is_satisfied(solve(c, {{x, -Fr::one()}})));
    }

    // For bound 5 and x = 6 no choice of the 6 bits works.
    CircuitBuilder b;
    const Variable x = b.alloc_private_input();
    gadgets::range_check(b, x, 5);
    const Circuit c = b.build();
    Assignment z = solve(c, {{x, Fr{6}}});
    ASSERT_EQ(z.size(), 8u);
    for (uint32_t mask = 0; mask < 64; ++mask)
    {
        for (std::size_t k = 0; k < 6; ++k)
            z[2 + k] = ((mask >> k) & 1) != 0 ? Fr::one() : Fr::zero();
        ASSERT_FALSE(c.system().is_satisfied(z)) << mask;
    }
    EXPECT_EQ(perturbation_survivors(c, solve(c, {{x, Fr{3}}}), 100, 6), 0);
}

TEST(Gadgets, TspCircuitReproducible)
{
    const auto maps = test::fixture_maps();
    const auto a = tsp::build_tsp_circuit(*maps, 1, 10);
    const auto b = tsp::build_tsp_circuit(*maps, 1, 10);
    EXPECT_TRUE(a.system() == b.system());
    EXPECT_EQ(a.system().digest(), b.system().digest());
    EXPECT_EQ(a.system().num_public(), tsp::kNumPublicInputs);
    const auto c = tsp::build_tsp_circuit(*maps, 1, 20);
    EXPECT_GT(c.system().num_constraints(), a.system().num_constraints());
    EXPECT_NE(a.system().digest(), c.system().digest());
}
