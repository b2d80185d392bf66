// zkoffload: verifiable computation offloading
// Copyright 2026 The zkoffload Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <zkoffload/algebra/curve.hpp>

#include <span>
#include <utility>

namespace zkoffload::algebra
{
/// Element of the order-r subgroup of Fq12^*, written multiplicatively.
class TargetElement
{
public:
    TargetElement() noexcept : v_{Fq12::one()} {}
    explicit TargetElement(const Fq12& v) noexcept : v_{v} {}

    static TargetElement identity() noexcept { return {}; }

    bool is_identity() const noexcept { return v_ == Fq12::one(); }

    friend TargetElement operator*(const TargetElement& a, const TargetElement& b) noexcept
    {
        return TargetElement{a.v_ * b.v_};
    }

    TargetElement pow(const Fr& e) const noexcept
    {
        const Limbs l = e.to_limbs();
        return TargetElement{v_.pow(l)};
    }

    /// Unitary elements invert by conjugation.
    TargetElement inverse() const noexcept { return TargetElement{v_.conjugate()}; }

    bool operator==(const TargetElement& o) const noexcept { return v_ == o.v_; }
    bool operator!=(const TargetElement& o) const noexcept { return !(*this == o); }

    const Fq12& value() const noexcept { return v_; }

private:
    Fq12 v_;
};

/// Optimal ate Miller loop for BN254. Returns one if either input is the identity.
Fq12 miller_loop(const G1Affine& p, const G2Affine& q);

Fq12 final_exponentiation(const Fq12& f);

/// Reduced optimal ate pairing e: G1 x G2 -> GT.
TargetElement pairing(const G1Point& p, const G2Point& q);

/// Checks prod_i e(P_i, Q_i) == 1 with a single final exponentiation.
bool pairing_product_is_one(std::span<const std::pair<G1Affine, G2Affine>> pairs);

}  // namespace zkoffload::algebra
