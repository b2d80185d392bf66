// zkoffload: verifiable computation offloading
// Copyright 2026 The zkoffload Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <zkoffload/algebra/field.hpp>

#include <cstddef>
#include <span>
#include <vector>

namespace zkoffload::constraint
{
using algebra::Fr;

/// Index into an assignment vector. Index 0 is the constant-one variable.
struct Variable
{
    std::size_t index = 0;

    static constexpr Variable one() noexcept { return {0}; }
    constexpr bool operator==(const Variable&) const noexcept = default;
};

struct Term
{
    std::size_t index;
    Fr coeff;
};

/// Sparse sum of coefficient * variable. Terms are kept sorted by index with no zero coefficients.
class LinearCombination
{
public:
    LinearCombination() = default;
    LinearCombination(Variable v);  // NOLINT(google-explicit-constructor)

    static LinearCombination constant(const Fr& c);
    static LinearCombination constant(uint64_t c) { return constant(Fr{c}); }

    std::span<const Term> terms() const noexcept { return terms_; }
    bool empty() const noexcept { return terms_.empty(); }
    std::size_t max_index() const noexcept { return terms_.empty() ? 0 : terms_.back().index; }

    Fr evaluate(std::span<const Fr> assignment) const;

    LinearCombination& operator+=(const LinearCombination& o);
    LinearCombination& operator-=(const LinearCombination& o);
    LinearCombination& operator*=(const Fr& s);

    friend LinearCombination operator+(LinearCombination a, const LinearCombination& b) { return a += b; }
    friend LinearCombination operator-(LinearCombination a, const LinearCombination& b) { return a -= b; }
    friend LinearCombination operator*(LinearCombination a, const Fr& s) { return a *= s; }
    friend LinearCombination operator*(const Fr& s, LinearCombination a) { return a *= s; }
    LinearCombination operator-() const { return *this * -Fr::one(); }

    bool operator==(const LinearCombination& o) const;

private:
    void merge(const LinearCombination& o, const Fr& scale);

    std::vector<Term> terms_;
};

using LC = LinearCombination;

}  // namespace zkoffload::constraint
