// zkoffload: verifiable computation offloading
// Copyright 2026 The zkoffload Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <zkoffload/algebra/field.hpp>

#include <vector>

namespace zkoffload::snark
{
using algebra::Fr;

/// Multiplicative subgroup of Fr of power-of-two size, with radix-2 NTTs over it and over
/// the coset g * <omega> for g the field's multiplicative generator.
class EvaluationDomain
{
public:
    /// Smallest power of two >= min_size (at least 1). Throws if it exceeds 2^28.
    explicit EvaluationDomain(std::size_t min_size);

    std::size_t size() const noexcept { return size_; }
    const Fr& omega() const noexcept { return omega_; }
    Fr element(std::size_t i) const { return omega_.pow(static_cast<uint64_t>(i)); }
    static Fr coset_generator() noexcept { return Fr{uint64_t{5}}; }

    void fft(std::vector<Fr>& a) const;
    void ifft(std::vector<Fr>& a) const;
    void coset_fft(std::vector<Fr>& a) const;
    void icoset_fft(std::vector<Fr>& a) const;

    /// Z(x) = x^n - 1
    Fr vanishing_at(const Fr& x) const;

    /// L_0(x), ..., L_{n-1}(x). Requires x outside the domain.
    std::vector<Fr> lagrange_at(const Fr& x) const;

private:
    void transform(std::vector<Fr>& a, const Fr& root) const;

    std::size_t size_;
    unsigned log_size_;
    Fr omega_;
    Fr omega_inv_;
    Fr size_inv_;
};

}  // namespace zkoffload::snark
