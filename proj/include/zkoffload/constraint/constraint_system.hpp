// zkoffload: verifiable computation offloading
// Copyright 2026 The zkoffload Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <zkoffload/constraint/linear_combination.hpp>

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

namespace zkoffload::constraint
{
class ConstraintError : public std::logic_error
{
public:
    using std::logic_error::logic_error;
};

enum class Visibility
{
    kPublic,
    kPrivate,
};

/// One rank-1 row: <A,z> * <B,z> = <C,z>.
struct Constraint
{
    LC a;
    LC b;
    LC c;
};

/// Full variable assignment: the constant one, then public inputs, then private witness values.
using Assignment = std::vector<Fr>;

using Digest = std::array<uint8_t, 32>;

/// Rank-1 constraint system. Variables are laid out as
/// [1, public_1..public_k, private_1..private_m]; public variables must be allocated
/// before any private variable.
class ConstraintSystem
{
public:
    Variable alloc(Visibility visibility);

    void enforce(LC a, LC b, LC c);

    /// Freezes the system. Further allocation or enforcement throws.
    void finalize();
    bool finalized() const noexcept { return finalized_; }

    std::size_t num_public() const noexcept { return num_public_; }
    std::size_t num_private() const noexcept { return num_private_; }
    std::size_t num_variables() const noexcept { return 1 + num_public_ + num_private_; }
    std::size_t num_constraints() const noexcept { return constraints_.size(); }
    const std::vector<Constraint>& constraints() const noexcept { return constraints_; }

    /// Assignment of the right length with z[0] = 1 and everything else zero.
    Assignment blank_assignment() const;

    /// True iff every row holds. Throws ConstraintError if the assignment has the wrong length or z[0] != 1.
    bool is_satisfied(std::span<const Fr> z) const;

    /// Index of the first violated row, if any.
    std::optional<std::size_t> first_unsatisfied(std::span<const Fr> z) const;

    /// SHA-256 over a canonical encoding of the shape and every row.
    Digest digest() const;

    bool operator==(const ConstraintSystem& o) const;

private:
    void check_assignment(std::span<const Fr> z) const;

    std::size_t num_public_ = 0;
    std::size_t num_private_ = 0;
    bool finalized_ = false;
    std::vector<Constraint> constraints_;
};

/// A constraint system paired with the witness generators its gadgets registered.
/// Generators run in registration order and fill derived variables from already-set ones.
class Circuit
{
public:
    using Generator = std::function<void(Assignment&)>;

    Circuit() = default;
    Circuit(ConstraintSystem cs, std::vector<Generator> generators, std::vector<Variable> private_inputs)
      : cs_{std::move(cs)}, generators_{std::move(generators)}, private_inputs_{std::move(private_inputs)}
    {
    }

    const ConstraintSystem& system() const noexcept { return cs_; }

    /// Private variables supplied by the prover (as opposed to derived by generators), in declaration order.
    const std::vector<Variable>& private_inputs() const noexcept { return private_inputs_; }

    /// Runs every generator over z, which must already hold the circuit inputs.
    void generate(Assignment& z) const;

private:
    ConstraintSystem cs_;
    std::vector<Generator> generators_;
    std::vector<Variable> private_inputs_;
};

/// Single-writer builder used by gadgets.
class CircuitBuilder
{
public:
    Variable alloc(Visibility visibility) { return cs_.alloc(visibility); }
    Variable alloc_private() { return cs_.alloc(Visibility::kPrivate); }

    /// Private variable whose value is supplied to compute_witness rather than derived.
    Variable alloc_private_input()
    {
        const Variable v = cs_.alloc(Visibility::kPrivate);
        private_inputs_.push_back(v);
        return v;
    }

    void enforce(LC a, LC b, LC c) { cs_.enforce(std::move(a), std::move(b), std::move(c)); }

    void add_generator(Circuit::Generator g) { generators_.push_back(std::move(g)); }

    const ConstraintSystem& system() const noexcept { return cs_; }

    /// Finalizes and hands over the system; the builder is left empty.
    Circuit build();

private:
    ConstraintSystem cs_;
    std::vector<Circuit::Generator> generators_;
    std::vector<Variable> private_inputs_;
};

}  // namespace zkoffload::constraint
