// zkoffload: verifiable computation offloading
// Copyright 2026 The zkoffload Authors.
// SPDX-License-Identifier: Apache-2.0

#include "common.hpp"

#include <zkoffload/constraint/gadgets.hpp>
#include <zkoffload/snark/groth16.hpp>
#include <zkoffload/snark/qap.hpp>
#include <zkoffload/snark/serialization.hpp>
#include <zkoffload/snark/witness.hpp>
#include <zkoffload/tsp/circuit.hpp>

#include <gtest/gtest.h>

using namespace zkoffload;
using namespace zkoffload::snark;
using constraint::CircuitBuilder;
using constraint::LC;
using constraint::Variable;
using constraint::Visibility;
using test::random_element;

namespace
{
// Naive polynomial helpers, coefficient vectors lowest degree first.
using Poly = std::vector<Fr>;

Fr eval_poly(const Poly& p, const Fr& x)
{
    Fr acc;
    for (std::size_t i = p.size(); i-- > 0;)
        acc = acc * x + p[i];
    return acc;
}

Poly mul_poly(const Poly& a, const Poly& b)
{
    if (a.empty() || b.empty())
        return {};
    Poly out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
    {
        if (a[i].is_zero())
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] += a[i] * b[j];
    }
    return out;
}

/// Lagrange interpolation through (x_j, y_j), O(n^2) per basis polynomial.
Poly interpolate(const std::vector<Fr>& xs, const std::vector<Fr>& ys)
{
    const std::size_t n = xs.size();
    Poly out(n);
    for (std::size_t j = 0; j < n; ++j)
    {
        if (ys[j].is_zero())
            continue;
        Poly basis{Fr::one()};
        Fr denom = Fr::one();
        for (std::size_t k = 0; k < n; ++k)
        {
            if (k == j)
                continue;
            basis = mul_poly(basis, Poly{-xs[k], Fr::one()});
            denom *= xs[j] - xs[k];
        }
        const Fr scale = ys[j] * denom.inverse();
        for (std::size_t i = 0; i < n; ++i)
            out[i] += basis[i] * scale;
    }
    return out;
}

/// Divides by x^n - 1, returning {quotient, remainder}.
std::pair<Poly, Poly> divide_by_vanishing(Poly p, std::size_t n)
{
    Poly q(p.size() > n ? p.size() - n : 0);
    for (std::size_t i = p.size(); i-- > n;)
    {
        const Fr c = p[i];
        q[i - n] = c;
        p[i] = Fr::zero();
        p[i - n] += c;
    }
    p.resize(std::min(p.size(), n));
    return {q, p};
}

bool all_zero(const Poly& p)
{
    return std::all_of(p.begin(), p.end(), [](const Fr& x) { return x.is_zero(); });
}

/// One multiplication a*b = c with c public.
constraint::Circuit multiplication_circuit()
{
    CircuitBuilder b;
    const Variable c = b.alloc(Visibility::kPublic);
    const Variable x = b.alloc_private_input();
    const Variable y = b.alloc_private_input();
    b.enforce(x, y, c);
    return b.build();
}

/// x^3 + x + 5 = out, plus a second public input k with k * k = k2 (private).
constraint::Circuit cubic_circuit()
{
    CircuitBuilder b;
    const Variable out = b.alloc(Visibility::kPublic);
    const Variable k = b.alloc(Visibility::kPublic);
    const Variable x = b.alloc_private_input();
    const Variable x2 = b.alloc_private();
    const Variable x3 = b.alloc_private();
    const Variable k2 = b.alloc_private();
    b.enforce(x, x, x2);
    b.enforce(x2, x, x3);
    b.enforce(LC{x3} + LC{x} + LC::constant(5), LC::constant(1), out);
    b.enforce(k, k, k2);
    b.add_generator([=](Assignment& z) {
        z[x2.index] = z[x.index].squared();
        z[x3.index] = z[x2.index] * z[x.index];
        z[k2.index] = z[k.index].squared();
    });
    return b.build();
}

/// Same shape as cubic_circuit with a different constant.
constraint::Circuit cubic_circuit_variant()
{
    CircuitBuilder b;
    const Variable out = b.alloc(Visibility::kPublic);
    const Variable k = b.alloc(Visibility::kPublic);
    const Variable x = b.alloc_private_input();
    const Variable x2 = b.alloc_private();
    const Variable x3 = b.alloc_private();
    const Variable k2 = b.alloc_private();
    b.enforce(x, x, x2);
    b.enforce(x2, x, x3);
    b.enforce(LC{x3} + LC{x} + LC::constant(7), LC::constant(1), out);
    b.enforce(k, k, k2);
    b.add_generator([=](Assignment& z) {
        z[x2.index] = z[x.index].squared();
        z[x3.index] = z[x2.index] * z[x.index];
        z[k2.index] = z[k.index].squared();
    });
    return b.build();
}

Assignment cubic_witness(const constraint::Circuit& c, uint64_t x, uint64_t k, uint64_t constant = 5)
{
    const std::vector<Fr> pub{Fr{x * x * x + x + constant}, Fr{k}};
    const std::vector<Fr> priv{Fr{x}};
    auto r = compute_witness(c, pub, priv);
    return std::get<Assignment>(r);
}

/// Interpolated A, B, C column polynomials through the domain, from the R1CS rows directly.
struct NaiveQap
{
    std::vector<Fr> points;
    std::vector<Poly> a, b, c;
};

NaiveQap naive_qap(const constraint::ConstraintSystem& cs, std::size_t n, const Fr& omega)
{
    NaiveQap q;
    Fr w = Fr::one();
    for (std::size_t j = 0; j < n; ++j, w *= omega)
        q.points.push_back(w);
    const std::size_t nv = cs.num_variables();
    std::vector<std::vector<Fr>> ya(nv, std::vector<Fr>(n)), yb = ya, yc = ya;
    const auto& rows = cs.constraints();
    for (std::size_t j = 0; j < rows.size(); ++j)
    {
        for (const auto& t : rows[j].a.terms())
            ya[t.index][j] += t.coeff;
        for (const auto& t : rows[j].b.terms())
            yb[t.index][j] += t.coeff;
        for (const auto& t : rows[j].c.terms())
            yc[t.index][j] += t.coeff;
    }
    // Input-consistency rows: A_i = 1 at row m + i for the constant and each public input.
    for (std::size_t i = 0; i <= cs.num_public(); ++i)
        ya[i][rows.size() + i] += Fr::one();
    for (std::size_t v = 0; v < nv; ++v)
    {
        q.a.push_back(interpolate(q.points, ya[v]));
        q.b.push_back(interpolate(q.points, yb[v]));
        q.c.push_back(interpolate(q.points, yc[v]));
    }
    return q;
}

Poly combine(const std::vector<Poly>& polys, std::span<const Fr> z)
{
    Poly out(polys.front().size());
    for (std::size_t v = 0; v < polys.size(); ++v)
        for (std::size_t i = 0; i < out.size(); ++i)
            out[i] += polys[v][i] * z[v];
    return out;
}

G1Affine random_g1(std::mt19937_64& rng)
{
    return (G1Point::generator() * random_element(rng)).to_affine();
}

G2Affine random_g2(std::mt19937_64& rng)
{
    return (G2Point::generator() * random_element(rng)).to_affine();
}
}  // namespace

TEST(Domain, FftMatchesNaiveEvaluation)
{
    std::mt19937_64 rng{1};
    for (const std::size_t n : {1u, 2u, 8u, 64u})
    {
        const EvaluationDomain d{n};
        ASSERT_EQ(d.size(), n);
        EXPECT_EQ(d.omega().pow(n), Fr::one());
        if (n > 1)
        {
            EXPECT_NE(d.omega().pow(n / 2), Fr::one());
        }
        Poly p(n);
        for (auto& x : p)
            x = random_element(rng);
        auto v = p;
        d.fft(v);
        for (std::size_t j = 0; j < n; ++j)
            EXPECT_EQ(v[j], eval_poly(p, d.element(j)));
        d.ifft(v);
        EXPECT_EQ(v, p);
        auto c = p;
        d.coset_fft(c);
        for (std::size_t j = 0; j < n; ++j)
            EXPECT_EQ(c[j], eval_poly(p, EvaluationDomain::coset_generator() * d.element(j)));
        d.icoset_fft(c);
        EXPECT_EQ(c, p);
    }
    EXPECT_EQ(EvaluationDomain{5}.size(), 8u);
    EXPECT_THROW(EvaluationDomain{(std::size_t{1} << 28) + 1}, std::invalid_argument);
}

TEST(Domain, LagrangeBasis)
{
    std::mt19937_64 rng{2};
    const EvaluationDomain d{16};
    const Fr x = random_element(rng);
    const auto l = d.lagrange_at(x);
    Poly p(16);
    for (auto& c : p)
        c = random_element(rng);
    auto evals = p;
    d.fft(evals);
    Fr acc;
    for (std::size_t j = 0; j < 16; ++j)
        acc += l[j] * evals[j];
    EXPECT_EQ(acc, eval_poly(p, x));
    EXPECT_EQ(d.vanishing_at(x), x.pow(16) - Fr::one());
    EXPECT_THROW(d.lagrange_at(d.element(3)), std::invalid_argument);
}

TEST(Rng, DeterministicPerSeed)
{
    auto a = FieldRng::from_seed("s");
    auto b = FieldRng::from_seed("s");
    auto c = FieldRng::from_seed("t");
    for (int i = 0; i < 10; ++i)
    {
        const Fr x = a.next();
        EXPECT_EQ(x, b.next());
        EXPECT_NE(x, c.next());
    }
    auto e1 = FieldRng::from_entropy();
    auto e2 = FieldRng::from_entropy();
    EXPECT_NE(e1.next(), e2.next());
    EXPECT_FALSE(a.next_nonzero().is_zero());
}

TEST(Qap, SingleMultiplication)
{
    const auto c = multiplication_circuit();
    const auto& cs = c.system();
    const auto q = r1cs_to_qap(cs);
    // One row plus the consistency rows of the constant and the public output.
    EXPECT_EQ(q.domain_size(), 4u);
    EXPECT_EQ(q.num_variables(), 4u);

    const std::vector<Fr> good{Fr{1}, Fr{12}, Fr{3}, Fr{4}};
    const std::vector<Fr> bad{Fr{1}, Fr{11}, Fr{3}, Fr{4}};
    EXPECT_TRUE(q.divisible(good));
    EXPECT_FALSE(q.divisible(bad));
    EXPECT_THROW(q.divisible(std::vector<Fr>{Fr{1}}), std::invalid_argument);

    const auto naive = naive_qap(cs, q.domain_size(), q.domain().omega());
    for (const auto& z : {good, bad})
    {
        const Poly p = [&] {
            Poly ab = mul_poly(combine(naive.a, z), combine(naive.b, z));
            const Poly cc = combine(naive.c, z);
            for (std::size_t i = 0; i < cc.size(); ++i)
                ab[i] -= cc[i];
            return ab;
        }();
        bool vanishes = true;
        for (const auto& pt : naive.points)
            vanishes = vanishes && eval_poly(p, pt).is_zero();
        EXPECT_EQ(vanishes, z == good);
        EXPECT_EQ(all_zero(divide_by_vanishing(p, q.domain_size()).second), z == good);
    }
}

TEST(Qap, Errors)
{
    constraint::ConstraintSystem open;
    open.alloc(Visibility::kPrivate);
    EXPECT_THROW(r1cs_to_qap(open), std::invalid_argument);
    constraint::ConstraintSystem empty;
    empty.finalize();
    EXPECT_THROW(r1cs_to_qap(empty), std::invalid_argument);
}

TEST(Qap, PolynomialsAndQuotientMatchNaive)
{
    const auto c = cubic_circuit();
    const auto& cs = c.system();
    const auto q = r1cs_to_qap(cs);
    const std::size_t n = q.domain_size();
    const auto naive = naive_qap(cs, n, q.domain().omega());
    for (std::size_t v = 0; v < cs.num_variables(); ++v)
    {
        EXPECT_EQ(q.coefficients(0, v), naive.a[v]) << v;
        EXPECT_EQ(q.coefficients(1, v), naive.b[v]) << v;
        EXPECT_EQ(q.coefficients(2, v), naive.c[v]) << v;
    }

    const Assignment z = cubic_witness(c, 3, 4);
    ASSERT_TRUE(cs.is_satisfied(z));
    EXPECT_TRUE(q.divisible(z));
    Poly p = mul_poly(combine(naive.a, z), combine(naive.b, z));
    const Poly cz = combine(naive.c, z);
    for (std::size_t i = 0; i < cz.size(); ++i)
        p[i] -= cz[i];
    auto [h, rem] = divide_by_vanishing(p, n);
    EXPECT_TRUE(all_zero(rem));
    h.resize(n - 1);
    EXPECT_EQ(compute_quotient(q.domain(), evaluate_rows(cs, z, n)), h);

    // Random evaluation point: the Lagrange-form evaluations agree with the dense polynomials.
    std::mt19937_64 rng{3};
    const Fr x = random_element(rng);
    const auto ev = q.evaluate_at(q.domain().lagrange_at(x));
    for (std::size_t v = 0; v < cs.num_variables(); ++v)
    {
        EXPECT_EQ(ev.a[v], eval_poly(naive.a[v], x));
        EXPECT_EQ(ev.b[v], eval_poly(naive.b[v], x));
        EXPECT_EQ(ev.c[v], eval_poly(naive.c[v], x));
    }

    Assignment w = z;
    w[4] += Fr::one();
    EXPECT_FALSE(q.divisible(w));
}

TEST(Qap, TspCircuitDivisibility)
{
    const auto maps = test::fixture_maps();
    const auto tc = tsp::build_tsp_circuit(*maps, 1, 10);
    const auto& map = maps->get(1);
    const std::vector<tsp::City> cities{1, 2, 3, 4, 5};
    const auto tour = tsp::solve_exact(map, cities);
    const auto z = std::get<Assignment>(tsp::tsp_witness(tc, tour, cities));
    const auto q = r1cs_to_qap(tc.system());
    EXPECT_TRUE(q.divisible(z));
    EXPECT_GE(q.domain_size(), tc.system().num_constraints() + tc.system().num_public() + 1);

    // Independent check on the domain: evaluate every row at z directly.
    const auto rows = evaluate_rows(tc.system(), z, q.domain_size());
    for (std::size_t j = 0; j < q.domain_size(); ++j)
        ASSERT_EQ(rows.a[j] * rows.b[j], rows.c[j]) << j;
}

TEST(Witness, ComputeWitness)
{
    const auto c = cubic_circuit();
    auto r = compute_witness(c, std::vector<Fr>{Fr{35}, Fr{2}}, std::vector<Fr>{Fr{3}});
    ASSERT_TRUE(succeeded(r));
    EXPECT_TRUE(c.system().is_satisfied(std::get<Assignment>(r)));
    r = compute_witness(c, std::vector<Fr>{Fr{36}, Fr{2}}, std::vector<Fr>{Fr{3}});
    ASSERT_FALSE(succeeded(r));
    EXPECT_EQ(std::get<WitnessFailure>(r).constraint_index, 2u);
    EXPECT_THROW(compute_witness(c, std::vector<Fr>{Fr{35}}, std::vector<Fr>{Fr{3}}), ShapeError);
    EXPECT_THROW(compute_witness(c, std::vector<Fr>{Fr{35}, Fr{2}}, std::vector<Fr>{}), ShapeError);
}

TEST(Witness, TspThreeCities)
{
    tsp::MapRegistry reg;
    reg.add(test::triangle_map(9));
    const auto tc = tsp::build_tsp_circuit(reg, 9, 10);
    const std::vector<tsp::City> cities{1, 2, 3};
    auto r = tsp::tsp_witness(tc, {{1, 2, 3}, 21}, cities);
    ASSERT_TRUE(succeeded(r));
    EXPECT_TRUE(tc.system().is_satisfied(std::get<Assignment>(r)));
    EXPECT_FALSE(succeeded(tsp::tsp_witness(tc, {{1, 2, 3}, 22}, cities)));
    EXPECT_FALSE(succeeded(tsp::tsp_witness(tc, {{1, 1, 3}, 21}, cities)));
}

TEST(Groth16, MultiplicationRoundTrip)
{
    const auto c = multiplication_circuit();
    const auto kp = setup(c.system(), "mul");
    auto rng = FieldRng::from_seed("blind");
    const std::vector<Fr> z{Fr{1}, Fr{12}, Fr{3}, Fr{4}};
    const Proof p = prove(kp.pk, c.system(), z, rng);
    EXPECT_TRUE(verify(kp.vk, std::vector<Fr>{Fr{12}}, p));
    EXPECT_FALSE(verify(kp.vk, std::vector<Fr>{Fr{13}}, p));
    EXPECT_EQ(kp.vk.ic.size(), 2u);
    EXPECT_THROW(prove(kp.pk, c.system(), std::vector<Fr>{Fr{1}, Fr{11}, Fr{3}, Fr{4}}, rng),
                 UnsatisfiedAssignmentError);
}

TEST(Groth16, SetupDeterminismAndSeeds)
{
    const auto c = cubic_circuit();
    const auto k1 = setup(c.system(), "seed-1");
    const auto k1b = setup(c.system(), "seed-1");
    const auto k2 = setup(c.system(), "seed-2");
    EXPECT_EQ(encode_proving_key(k1.pk), encode_proving_key(k1b.pk));
    EXPECT_EQ(encode_verifying_key(k1.vk), encode_verifying_key(k1b.vk));
    EXPECT_NE(encode_verifying_key(k1.vk), encode_verifying_key(k2.vk));
    EXPECT_EQ(k1.pk.cs_digest, c.system().digest());

    const Assignment z = cubic_witness(c, 3, 4);
    const auto pub = public_part(c.system(), z);
    for (const auto* kp : {&k1, &k2})
    {
        auto rng = FieldRng::from_seed("b");
        const Proof p = prove(kp->pk, c.system(), z, rng);
        EXPECT_TRUE(verify(kp->vk, pub, p));
    }
    // A proof under one key pair does not verify under the other.
    auto rng = FieldRng::from_seed("b");
    EXPECT_FALSE(verify(k2.vk, pub, prove(k1.pk, c.system(), z, rng)));
}

TEST(Groth16, CrossCircuitKeys)
{
    const auto c1 = cubic_circuit();
    const auto c2 = cubic_circuit_variant();
    const auto k1 = setup(c1.system(), "x");
    const auto k2 = setup(c2.system(), "x");
    const Assignment z2 = cubic_witness(c2, 3, 4, 7);
    auto rng = FieldRng::from_seed("b");
    EXPECT_THROW(prove(k1.pk, c2.system(), z2, rng), KeyMismatchError);
    const Proof p2 = prove(k2.pk, c2.system(), z2, rng);
    const auto pub = public_part(c2.system(), z2);
    EXPECT_TRUE(verify(k2.vk, pub, p2));
    EXPECT_FALSE(verify(k1.vk, pub, p2));
}

TEST(Groth16, ArityAndDegenerateProofs)
{
    const auto c = cubic_circuit();
    const auto kp = setup(c.system(), "x");
    const Assignment z = cubic_witness(c, 5, 6);
    auto rng = FieldRng::from_seed("b");
    const Proof p = prove(kp.pk, c.system(), z, rng);
    const auto pub = public_part(c.system(), z);
    EXPECT_THROW(verify(kp.vk, std::vector<Fr>{pub[0]}, p), ArityError);
    EXPECT_THROW(verify(kp.vk, std::vector<Fr>{pub[0], pub[1], Fr{1}}, p), ArityError);
    EXPECT_FALSE(verify(kp.vk, pub, Proof{}));
    Proof zero_a = p;
    zero_a.a = G1Affine::identity();
    EXPECT_FALSE(verify(kp.vk, pub, zero_a));
    Proof off = p;
    off.a.y += algebra::Fq::one();
    EXPECT_FALSE(verify(kp.vk, pub, off));
    for (int i = 0; i < 3; ++i)
        EXPECT_TRUE(verify(kp.vk, pub, p));
}

TEST(Groth16, EntropyBlinding)
{
    const auto c = cubic_circuit();
    const auto kp = setup(c.system(), "x");
    const Assignment z = cubic_witness(c, 2, 9);
    auto r1 = FieldRng::from_entropy();
    auto r2 = FieldRng::from_entropy();
    const Proof p1 = prove(kp.pk, c.system(), z, r1);
    const Proof p2 = prove(kp.pk, c.system(), z, r2);
    EXPECT_NE(p1, p2);
    const auto pub = public_part(c.system(), z);
    EXPECT_TRUE(verify(kp.vk, pub, p1));
    EXPECT_TRUE(verify(kp.vk, pub, p2));
}

TEST(Groth16, Completeness)
{
    const auto c = cubic_circuit();
    const auto kp = setup(c.system(), "complete");
    auto rng = FieldRng::from_seed("complete-blind");
    for (uint64_t x = 0; x < 25; ++x)
    {
        const Assignment z = cubic_witness(c, x, x * 7 + 1);
        EXPECT_TRUE(verify(kp.vk, public_part(c.system(), z), prove(kp.pk, c.system(), z, rng))) << x;
    }
}

class TspProof : public ::testing::Test
{
protected:
    static void SetUpTestSuite()
    {
        const auto maps = test::fixture_maps();
        circuit_ = std::make_unique<tsp::TspCircuit>(tsp::build_tsp_circuit(*maps, 1, 10));
        keys_ = std::make_unique<KeyPair>(setup(circuit_->system(), "tsp-test"));
        cities_ = {1, 2, 3, 4, 5, 6, 7};
        tour_ = tsp::solve_heuristic(maps->get(1), cities_, 1);
        z_ = std::get<Assignment>(tsp::tsp_witness(*circuit_, tour_, cities_));
        auto rng = FieldRng::from_seed("tsp-blind");
        proof_ = prove(keys_->pk, circuit_->system(), z_, rng);
        pub_ = public_part(circuit_->system(), z_);
    }
    static void TearDownTestSuite()
    {
        circuit_.reset();
        keys_.reset();
    }

    static inline std::unique_ptr<tsp::TspCircuit> circuit_;
    static inline std::unique_ptr<KeyPair> keys_;
    static inline std::vector<tsp::City> cities_;
    static inline tsp::Tour tour_;
    static inline Assignment z_;
    static inline Proof proof_;
    static inline std::vector<Fr> pub_;
};

TEST_F(TspProof, HonestProofVerifies)
{
    ASSERT_EQ(pub_.size(), tsp::kNumPublicInputs);
    const auto padded = tsp::pad_tour(tour_, 10);
    const auto expect = tsp::public_inputs(tour_.sum, padded, tsp::pad_cities(cities_, 10));
    EXPECT_TRUE(std::equal(pub_.begin(), pub_.end(), expect.begin()));
    EXPECT_EQ(pub_[5], Fr::one());
    EXPECT_TRUE(verify(keys_->vk, pub_, proof_));
}

TEST_F(TspProof, ByteLevelPerturbationsRejected)
{
    const Bytes good = encode_proof(proof_);
    ASSERT_EQ(good.size(), kProofBytes);
    std::mt19937_64 rng{11};
    int rejected = 0;
    for (int t = 0; t < 100; ++t)
    {
        Bytes bad = good;
        const std::size_t word = rng() % 8;
        const std::size_t byte = 4 + word * 32 + rng() % 31;  // below the top byte keeps most values canonical
        bad[byte] ^= static_cast<uint8_t>(1 + rng() % 255);
        bool accepted = false;
        try
        {
            accepted = verify(keys_->vk, pub_, decode_proof(bad));
        }
        catch (const DecodeError&)
        {
        }
        rejected += accepted ? 0 : 1;
    }
    EXPECT_EQ(rejected, 100);
}

TEST_F(TspProof, PointPerturbationsRejected)
{
    std::mt19937_64 rng{12};
    int accepted = 0;
    for (int t = 0; t < 100; ++t)
    {
        Proof p = proof_;
        switch (t % 6)
        {
        case 0:
            p.a = (G1Point{p.a} + G1Point::generator() * random_element(rng)).to_affine();
            break;
        case 1:
            p.c = (G1Point{p.c} + G1Point::generator() * random_element(rng)).to_affine();
            break;
        case 2:
            p.b = (G2Point{p.b} + G2Point::generator() * random_element(rng)).to_affine();
            break;
        case 3:
            p.a = random_g1(rng);
            break;
        case 4:
            p.b = random_g2(rng);
            break;
        default:
            p.c = -p.c;
            break;
        }
        accepted += verify(keys_->vk, pub_, p) ? 1 : 0;
    }
    EXPECT_EQ(accepted, 0);
}

TEST_F(TspProof, SwappedPublicInputsRejected)
{
    std::mt19937_64 rng{13};
    for (std::size_t i = 0; i < pub_.size(); ++i)
    {
        auto other = pub_;
        other[i] += Fr::one();
        EXPECT_FALSE(verify(keys_->vk, other, proof_)) << i;
        other[i] = random_element(rng);
        EXPECT_FALSE(verify(keys_->vk, other, proof_)) << i;
    }
    // Proof for one path presented with the hash of another valid path.
    const auto map = test::fixture_maps()->get(1);
    tsp::Tour alt{{1, 2, 3, 4, 5, 7, 6}, 0};
    alt.sum = tsp::tour_length(map, alt.path);
    ASSERT_NE(alt.path, tour_.path);
    const auto alt_pub = tsp::public_inputs(alt.sum, tsp::pad_tour(alt, 10), tsp::pad_cities(cities_, 10));
    EXPECT_FALSE(verify(keys_->vk, alt_pub, proof_));
    auto mixed = pub_;
    mixed[1] = alt_pub[1];
    mixed[2] = alt_pub[2];
    EXPECT_FALSE(verify(keys_->vk, mixed, proof_));
}

TEST_F(TspProof, SerializationRoundTrip)
{
    EXPECT_EQ(decode_proof(encode_proof(proof_)), proof_);
    EXPECT_EQ(proof_from_json(proof_to_json(proof_)), proof_);
    EXPECT_EQ(decode_verifying_key(encode_verifying_key(keys_->vk)), keys_->vk);
    EXPECT_EQ(decode_proving_key(encode_proving_key(keys_->pk)), keys_->pk);
    EXPECT_EQ(encode_proof(Proof{}).size(), kProofBytes);
    EXPECT_EQ(decode_proof(encode_proof(Proof{})), Proof{});

    Bytes b = encode_proof(proof_);
    EXPECT_THROW(decode_proof(std::span{b}.first(b.size() - 1)), DecodeError);
    b.push_back(0);
    EXPECT_THROW(decode_proof(b), DecodeError);
    Bytes vk = encode_verifying_key(keys_->vk);
    vk[0] ^= 1;
    EXPECT_THROW(decode_verifying_key(vk), DecodeError);
    Bytes noncanon = encode_proof(proof_);
    std::fill(noncanon.begin() + 4, noncanon.begin() + 36, uint8_t{0xff});
    EXPECT_THROW(decode_proof(noncanon), DecodeError);
    EXPECT_THROW(proof_from_json("{\"a\": [1]}"), DecodeError);

    const auto dir = std::filesystem::temp_directory_path() / "zkoffload-snark-test";
    std::filesystem::create_directories(dir);
    write_file(dir / "proof.bin", encode_proof(proof_));
    EXPECT_EQ(decode_proof(read_file(dir / "proof.bin")), proof_);
    std::filesystem::remove_all(dir);
}

TEST_F(TspProof, ProofSizeIndependentOfInstance)
{
    const auto maps = test::fixture_maps();
    const auto tc = tsp::build_tsp_circuit(*maps, 1, 20);
    const auto kp = setup(tc.system(), "tsp-20");
    const std::vector<tsp::City> cities = test::fixture_maps()->get(1).n >= 20
        ? std::vector<tsp::City>{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20}
        : std::vector<tsp::City>{};
    ASSERT_FALSE(cities.empty());
    const auto tour = tsp::solve_heuristic(maps->get(1), cities, 3);
    const auto z = std::get<Assignment>(tsp::tsp_witness(tc, tour, cities));
    auto rng = FieldRng::from_seed("b");
    const Proof p = prove(kp.pk, tc.system(), z, rng);
    EXPECT_TRUE(verify(kp.vk, public_part(tc.system(), z), p));
    EXPECT_EQ(encode_proof(p).size(), encode_proof(proof_).size());
    EXPECT_EQ(kp.vk.ic.size(), keys_->vk.ic.size());
    EXPECT_EQ(encode_verifying_key(kp.vk).size(), encode_verifying_key(keys_->vk).size());
}
