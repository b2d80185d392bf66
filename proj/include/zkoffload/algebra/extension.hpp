// zkoffload: verifiable computation offloading
// Copyright 2026 The zkoffload Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <zkoffload/algebra/field.hpp>

namespace zkoffload::algebra
{
/// Fq2 = Fq[u] / (u^2 + 1)
struct Fq2
{
    Fq c0;
    Fq c1;

    static constexpr Fq2 zero() noexcept { return {}; }
    static constexpr Fq2 one() noexcept { return {Fq::one(), Fq::zero()}; }

    constexpr bool is_zero() const noexcept { return c0.is_zero() && c1.is_zero(); }
    constexpr bool operator==(const Fq2&) const noexcept = default;

    constexpr Fq2& operator+=(const Fq2& o) noexcept
    {
        c0 += o.c0;
        c1 += o.c1;
        return *this;
    }
    constexpr Fq2& operator-=(const Fq2& o) noexcept
    {
        c0 -= o.c0;
        c1 -= o.c1;
        return *this;
    }
    friend constexpr Fq2 operator+(Fq2 a, const Fq2& b) noexcept { return a += b; }
    friend constexpr Fq2 operator-(Fq2 a, const Fq2& b) noexcept { return a -= b; }
    constexpr Fq2 operator-() const noexcept { return {-c0, -c1}; }

    friend constexpr Fq2 operator*(const Fq2& a, const Fq2& b) noexcept
    {
        const Fq t0 = a.c0 * b.c0;
        const Fq t1 = a.c1 * b.c1;
        return {t0 - t1, (a.c0 + a.c1) * (b.c0 + b.c1) - t0 - t1};
    }
    constexpr Fq2& operator*=(const Fq2& o) noexcept { return *this = *this * o; }

    constexpr Fq2 operator*(const Fq& s) const noexcept { return {c0 * s, c1 * s}; }

    constexpr Fq2 squared() const noexcept
    {
        const Fq ab = c0 * c1;
        return {(c0 + c1) * (c0 - c1), ab + ab};
    }
    constexpr Fq2 doubled() const noexcept { return {c0.doubled(), c1.doubled()}; }

    constexpr Fq2 conjugate() const noexcept { return {c0, -c1}; }

    Fq2 inverse() const
    {
        const Fq norm = c0.squared() + c1.squared();
        const Fq inv = norm.inverse();
        return {c0 * inv, -(c1 * inv)};
    }

    /// Multiplies by the cubic/sextic non-residue xi = 9 + u.
    constexpr Fq2 mul_by_nonresidue() const noexcept
    {
        const Fq nine{uint64_t{9}};
        return {nine * c0 - c1, c0 + nine * c1};
    }

    template <std::size_t N>
    Fq2 pow(const std::array<uint64_t, N>& e) const noexcept
    {
        Fq2 acc = one();
        for (int i = static_cast<int>(N) * 64 - 1; i >= 0; --i)
        {
            acc = acc.squared();
            if ((e[static_cast<std::size_t>(i) / 64] >> (i % 64)) & 1)
                acc *= *this;
        }
        return acc;
    }
};

/// Fq6 = Fq2[v] / (v^3 - xi)
struct Fq6
{
    Fq2 c0;
    Fq2 c1;
    Fq2 c2;

    static constexpr Fq6 zero() noexcept { return {}; }
    static constexpr Fq6 one() noexcept { return {Fq2::one(), Fq2::zero(), Fq2::zero()}; }

    constexpr bool is_zero() const noexcept { return c0.is_zero() && c1.is_zero() && c2.is_zero(); }
    constexpr bool operator==(const Fq6&) const noexcept = default;

    friend constexpr Fq6 operator+(const Fq6& a, const Fq6& b) noexcept
    {
        return {a.c0 + b.c0, a.c1 + b.c1, a.c2 + b.c2};
    }
    friend constexpr Fq6 operator-(const Fq6& a, const Fq6& b) noexcept
    {
        return {a.c0 - b.c0, a.c1 - b.c1, a.c2 - b.c2};
    }
    constexpr Fq6 operator-() const noexcept { return {-c0, -c1, -c2}; }

    friend constexpr Fq6 operator*(const Fq6& a, const Fq6& b) noexcept
    {
        const Fq2 t0 = a.c0 * b.c0;
        const Fq2 t1 = a.c1 * b.c1;
        const Fq2 t2 = a.c2 * b.c2;
        return {
            t0 + ((a.c1 + a.c2) * (b.c1 + b.c2) - t1 - t2).mul_by_nonresidue(),
            (a.c0 + a.c1) * (b.c0 + b.c1) - t0 - t1 + t2.mul_by_nonresidue(),
            (a.c0 + a.c2) * (b.c0 + b.c2) - t0 - t2 + t1,
        };
    }

    constexpr Fq6 squared() const noexcept { return *this * *this; }

    /// Multiplication by v.
    constexpr Fq6 mul_by_v() const noexcept { return {c2.mul_by_nonresidue(), c0, c1}; }

    Fq6 inverse() const
    {
        const Fq2 a = c0.squared() - (c1 * c2).mul_by_nonresidue();
        const Fq2 b = c2.squared().mul_by_nonresidue() - c0 * c1;
        const Fq2 c = c1.squared() - c0 * c2;
        const Fq2 f = c0 * a + (c2 * b + c1 * c).mul_by_nonresidue();
        const Fq2 inv = f.inverse();
        return {a * inv, b * inv, c * inv};
    }
};

/// Fq12 = Fq6[w] / (w^2 - v). The pairing target field.
struct Fq12
{
    Fq6 c0;
    Fq6 c1;

    static constexpr Fq12 zero() noexcept { return {}; }
    static constexpr Fq12 one() noexcept { return {Fq6::one(), Fq6::zero()}; }

    constexpr bool is_zero() const noexcept { return c0.is_zero() && c1.is_zero(); }
    constexpr bool operator==(const Fq12&) const noexcept = default;

    friend constexpr Fq12 operator*(const Fq12& a, const Fq12& b) noexcept
    {
        const Fq6 t0 = a.c0 * b.c0;
        const Fq6 t1 = a.c1 * b.c1;
        return {t0 + t1.mul_by_v(), (a.c0 + a.c1) * (b.c0 + b.c1) - t0 - t1};
    }
    Fq12& operator*=(const Fq12& o) noexcept { return *this = *this * o; }

    constexpr Fq12 squared() const noexcept
    {
        const Fq6 ab = c0 * c1;
        // (a + bw)^2 = a^2 + b^2 v + 2ab w, with a^2 + b^2 v = (a + b)(a + bv) - ab - abv
        return {(c0 + c1) * (c0 + c1.mul_by_v()) - ab - ab.mul_by_v(), ab + ab};
    }

    constexpr Fq12 conjugate() const noexcept { return {c0, -c1}; }

    Fq12 inverse() const
    {
        const Fq6 t = (c0.squared() - c1.squared().mul_by_v()).inverse();
        return {c0 * t, -(c1 * t)};
    }

    /// Raises to the p-th power `times` times.
    Fq12 frobenius(int times = 1) const;

    Fq12 pow(std::span<const uint64_t> e) const noexcept
    {
        Fq12 acc = one();
        bool started = false;
        for (std::size_t i = e.size() * 64; i-- > 0;)
        {
            if (started)
                acc = acc.squared();
            if ((e[i / 64] >> (i % 64)) & 1)
            {
                acc *= *this;
                started = true;
            }
        }
        return acc;
    }
};

/// xi^((p-1)/3) and xi^((p-1)/2): Frobenius twisting constants for G2.
const Fq2& frobenius_twist_x();
const Fq2& frobenius_twist_y();

}  // namespace zkoffload::algebra
