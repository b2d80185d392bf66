// zkoffload: verifiable computation offloading
// Copyright 2026 The zkoffload Authors.
// SPDX-License-Identifier: Apache-2.0

#include <zkoffload/snark/groth16.hpp>
#include <zkoffload/snark/qap.hpp>

#include <array>

namespace zkoffload::snark
{
using algebra::FixedBaseTable;
using algebra::G1Curve;
using algebra::G2Curve;
using algebra::multi_scalar_combine;

KeyPair setup(const ConstraintSystem& cs, std::string_view seed)
{
    FieldRng rng = FieldRng::from_seed(seed);
    return setup(cs, rng);
}

KeyPair setup(const ConstraintSystem& cs, FieldRng& rng)
{
    const QapInstance qap = r1cs_to_qap(cs);
    const EvaluationDomain& domain = qap.domain();

    Fr tau = rng.next_nonzero();
    while (domain.vanishing_at(tau).is_zero())
        tau = rng.next_nonzero();
    const Fr alpha = rng.next_nonzero();
    const Fr beta = rng.next_nonzero();
    const Fr gamma = rng.next_nonzero();
    const Fr delta = rng.next_nonzero();
    const Fr gamma_inv = gamma.inverse();
    const Fr delta_inv = delta.inverse();

    const auto lagrange = domain.lagrange_at(tau);
    const auto ev = qap.evaluate_at(lagrange);
    const std::size_t nv = qap.num_variables();
    const std::size_t np = qap.num_public();

    std::vector<Fr> ic_scalars(np + 1);
    std::vector<Fr> l_scalars(nv - np - 1);
    for (std::size_t i = 0; i < nv; ++i)
    {
        const Fr k = beta * ev.a[i] + alpha * ev.b[i] + ev.c[i];
        if (i <= np)
            ic_scalars[i] = k * gamma_inv;
        else
            l_scalars[i - np - 1] = k * delta_inv;
    }

    std::vector<Fr> h_scalars(domain.size() - 1);
    Fr step = domain.vanishing_at(tau) * delta_inv;
    for (auto& h : h_scalars)
    {
        h = step;
        step *= tau;
    }

    const FixedBaseTable<G1Curve> g1{G1Point::generator()};
    const FixedBaseTable<G2Curve> g2{G2Point::generator(), 6};

    KeyPair kp;
    ProvingKey& pk = kp.pk;
    pk.cs_digest = cs.digest();
    pk.num_public = np;
    pk.domain_size = domain.size();
    pk.alpha_g1 = g1.mul(alpha).to_affine();
    pk.beta_g1 = g1.mul(beta).to_affine();
    pk.beta_g2 = g2.mul(beta).to_affine();
    pk.delta_g1 = g1.mul(delta).to_affine();
    pk.delta_g2 = g2.mul(delta).to_affine();
    pk.a_query = g1.batch_mul(ev.a);
    pk.b_g1_query = g1.batch_mul(ev.b);
    pk.b_g2_query = g2.batch_mul(ev.b);
    pk.h_query = g1.batch_mul(h_scalars);
    pk.l_query = g1.batch_mul(l_scalars);

    VerifyingKey& vk = kp.vk;
    vk.alpha_g1 = pk.alpha_g1;
    vk.beta_g2 = pk.beta_g2;
    vk.gamma_g2 = g2.mul(gamma).to_affine();
    vk.delta_g2 = pk.delta_g2;
    vk.ic = g1.batch_mul(ic_scalars);
    return kp;
}

Proof prove(const ProvingKey& pk, const ConstraintSystem& cs, std::span<const Fr> z, FieldRng& rng)
{
    if (pk.cs_digest != cs.digest() || pk.num_variables() != cs.num_variables())
        throw KeyMismatchError("proving key was generated for a different constraint system");
    if (!cs.is_satisfied(z))
        throw UnsatisfiedAssignmentError("assignment does not satisfy the constraint system");

    const EvaluationDomain domain{pk.domain_size};
    const auto h = compute_quotient(domain, evaluate_rows(cs, z, domain.size()));

    const Fr r = rng.next();
    const Fr s = rng.next();
    const std::size_t np = cs.num_public();

    const G1Point a = G1Point{pk.alpha_g1} + multi_scalar_combine<G1Curve>(pk.a_query, z) +
                      G1Point{pk.delta_g1} * r;
    const G2Point b = G2Point{pk.beta_g2} + multi_scalar_combine<G2Curve>(pk.b_g2_query, z) +
                      G2Point{pk.delta_g2} * s;
    const G1Point b1 = G1Point{pk.beta_g1} + multi_scalar_combine<G1Curve>(pk.b_g1_query, z) +
                       G1Point{pk.delta_g1} * s;
    const G1Point c = multi_scalar_combine<G1Curve>(pk.l_query, z.subspan(np + 1)) +
                      multi_scalar_combine<G1Curve>(pk.h_query, h) + a * s + b1 * r -
                      G1Point{pk.delta_g1} * (r * s);

    return {a.to_affine(), b.to_affine(), c.to_affine()};
}

namespace
{
bool well_formed(const G1Affine& p)
{
    return !p.infinity && p.is_on_curve();
}

bool well_formed(const G2Affine& p)
{
    return !p.infinity && G2Point{p}.in_subgroup();
}
}  // namespace

bool verify(const VerifyingKey& vk, std::span<const Fr> public_inputs, const Proof& proof)
{
    if (public_inputs.size() != vk.num_public())
        throw ArityError("verify: expected " + std::to_string(vk.num_public()) + " public inputs, got " +
                         std::to_string(public_inputs.size()));
    if (!well_formed(proof.a) || !well_formed(proof.b) || !well_formed(proof.c))
        return false;

    std::vector<Fr> scalars(public_inputs.size() + 1);
    scalars[0] = Fr::one();
    std::copy(public_inputs.begin(), public_inputs.end(), scalars.begin() + 1);
    const G1Affine acc = multi_scalar_combine<G1Curve>(vk.ic, scalars).to_affine();

    const std::array<std::pair<G1Affine, G2Affine>, 4> pairs{{
        {proof.a, proof.b},
        {-vk.alpha_g1, vk.beta_g2},
        {-acc, vk.gamma_g2},
        {-proof.c, vk.delta_g2},
    }};
    return algebra::pairing_product_is_one(pairs);
}

std::vector<Fr> public_part(const ConstraintSystem& cs, std::span<const Fr> z)
{
    if (z.size() != cs.num_variables())
        throw ArityError("public_part: assignment length mismatch");
    return {z.begin() + 1, z.begin() + 1 + static_cast<std::ptrdiff_t>(cs.num_public())};
}
}  // namespace zkoffload::snark
