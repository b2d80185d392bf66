// zkoffload: verifiable computation offloading
// Copyright 2026 The zkoffload Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <zkoffload/algebra/pairing.hpp>
#include <zkoffload/constraint/constraint_system.hpp>
#include <zkoffload/snark/rng.hpp>

#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace zkoffload::snark
{
using algebra::G1Affine;
using algebra::G1Point;
using algebra::G2Affine;
using algebra::G2Point;
using constraint::Assignment;
using constraint::ConstraintSystem;
using constraint::Digest;

class KeyMismatchError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

class UnsatisfiedAssignmentError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

class ArityError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

struct VerifyingKey
{
    G1Affine alpha_g1;
    G2Affine beta_g2;
    G2Affine gamma_g2;
    G2Affine delta_g2;
    std::vector<G1Affine> ic;  // constant, then one per public input

    std::size_t num_public() const noexcept { return ic.empty() ? 0 : ic.size() - 1; }
    bool operator==(const VerifyingKey&) const = default;
};

struct ProvingKey
{
    Digest cs_digest{};
    std::size_t num_public = 0;
    std::size_t domain_size = 0;
    G1Affine alpha_g1;
    G1Affine beta_g1;
    G2Affine beta_g2;
    G1Affine delta_g1;
    G2Affine delta_g2;
    std::vector<G1Affine> a_query;     // A_i(tau), every variable
    std::vector<G1Affine> b_g1_query;  // B_i(tau)
    std::vector<G2Affine> b_g2_query;
    std::vector<G1Affine> h_query;     // tau^i Z(tau) / delta, i < domain_size - 1
    std::vector<G1Affine> l_query;     // (beta A_i + alpha B_i + C_i) / delta, private variables only

    std::size_t num_variables() const noexcept { return a_query.size(); }
    bool operator==(const ProvingKey&) const = default;
};

struct Proof
{
    G1Affine a;
    G2Affine b;
    G1Affine c;

    bool operator==(const Proof&) const = default;
};

struct KeyPair
{
    ProvingKey pk;
    VerifyingKey vk;
};

/// Deterministic in (cs, seed). The toxic scalars never leave this call.
KeyPair setup(const ConstraintSystem& cs, std::string_view seed);

/// Same as setup with scalars drawn from rng.
KeyPair setup(const ConstraintSystem& cs, FieldRng& rng);

/// Throws KeyMismatchError if pk was made for another system and UnsatisfiedAssignmentError
/// if z does not satisfy cs.
Proof prove(const ProvingKey& pk, const ConstraintSystem& cs, std::span<const Fr> z, FieldRng& rng);

/// Throws ArityError when public_inputs has the wrong length. Malformed or degenerate
/// proof points give false.
bool verify(const VerifyingKey& vk, std::span<const Fr> public_inputs, const Proof& proof);

/// Public part of a full assignment (z[1..num_public]).
std::vector<Fr> public_part(const ConstraintSystem& cs, std::span<const Fr> z);

}  // namespace zkoffload::snark
