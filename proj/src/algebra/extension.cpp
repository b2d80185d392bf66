// zkoffload: verifiable computation offloading
// Copyright 2026 The zkoffload Authors.
// SPDX-License-Identifier: Apache-2.0

#include <zkoffload/algebra/extension.hpp>

namespace zkoffload::algebra
{
namespace
{
// gamma^i for gamma = xi^((p-1)/6), i = 0..5
const std::array<Fq2, 6>& frobenius_coeffs()
{
    static const std::array<Fq2, 6> coeffs = [] {
        Limbs e = Fq::kModulus;
        e[0] -= 1;
        limbs::div_small(e, 6);
        const Fq2 xi = Fq2::one().mul_by_nonresidue();
        const Fq2 gamma = xi.pow(e);
        std::array<Fq2, 6> out{};
        out[0] = Fq2::one();
        for (std::size_t i = 1; i < 6; ++i)
            out[i] = out[i - 1] * gamma;
        return out;
    }();
    return coeffs;
}
}  // namespace

Fq12 Fq12::frobenius(int times) const
{
    const auto& gamma = frobenius_coeffs();
    // Coefficients in the basis 1, w, w^2 = v, w^3, w^4 = v^2, w^5.
    std::array<Fq2, 6> c{c0.c0, c1.c0, c0.c1, c1.c1, c0.c2, c1.c2};
    for (int t = 0; t < times; ++t)
    {
        for (std::size_t i = 0; i < 6; ++i)
            c[i] = c[i].conjugate() * gamma[i];
    }
    return {{c[0], c[2], c[4]}, {c[1], c[3], c[5]}};
}

const Fq2& frobenius_twist_x()
{
    return frobenius_coeffs()[2];
}

const Fq2& frobenius_twist_y()
{
    return frobenius_coeffs()[3];
}
}  // namespace zkoffload::algebra
