// zkoffload: verifiable computation offloading
// Copyright 2026 The zkoffload Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <zkoffload/constraint/constraint_system.hpp>

#include <array>
#include <memory>
#include <span>
#include <vector>

namespace zkoffload::constraint
{
/// Two-limb digest as produced by the in-circuit hash.
struct HashDigestVars
{
    Variable limb0;
    Variable limb1;
};

/// Dense dim x dim table of constants, row-major.
struct SquareTable
{
    std::size_t dim = 0;
    std::vector<Fr> values;

    const Fr& at(std::size_t row, std::size_t col) const { return values[row * dim + col]; }
};

namespace gadgets
{
/// x * (x - 1) = 0
void boolean(CircuitBuilder& b, const LC& x);

/// (x - y) * 1 = 0
void equal(CircuitBuilder& b, const LC& x, const LC& y);

/// Sum of selector_i * table_i as a linear combination. Adds no constraints.
LC lookup_combination(std::span<const Fr> table, std::span<const Variable> selectors);

/// Constrains the selectors to be boolean with exactly one set, and returns a fresh
/// variable equal to the selected table entry.
/// Throws std::invalid_argument if table and selectors differ in length or are empty.
Variable indexed_lookup(CircuitBuilder& b, std::span<const Fr> table, std::span<const Variable> selectors);

/// One-hot decomposition: `domain` boolean selectors, exactly one set, whose index equals value.
/// The witness is unsatisfiable when value >= domain.
std::vector<Variable> one_hot(CircuitBuilder& b, const LC& value, std::size_t domain);

/// Constrains the multiset of path values to equal the multiset of city values via a
/// permutation matrix of boolean selectors: every path slot picks exactly one city slot
/// and every city slot is picked exactly once. Sentinel zeros pair up like any other value.
void permutation_check(CircuitBuilder& b, std::span<const Variable> path, std::span<const Variable> cities);

/// Constrains out_sum to the closed-tour length of path under `distances`.
/// `distances` is indexed by city value with row/column 0 reserved for the sentinel (all zero).
/// Sentinel slots must form a suffix; the closing edge runs from the last non-sentinel slot to slot 0.
void path_sum(CircuitBuilder& b,
              std::span<const Variable> path,
              std::shared_ptr<const SquareTable> distances,
              Variable out_sum);

/// MiMC sponge over the inputs. Throws std::invalid_argument on empty input.
HashDigestVars hash(CircuitBuilder& b, std::span<const LC> inputs);

/// 0 <= x <= bound, via two bit decompositions of width bit_width(bound).
void range_check(CircuitBuilder& b, const LC& x, uint64_t bound);

}  // namespace gadgets
}  // namespace zkoffload::constraint
