// zkoffload: verifiable computation offloading
// Copyright 2026 The zkoffload Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <zkoffload/algebra/extension.hpp>

#include <span>
#include <vector>

namespace zkoffload::algebra
{
/// Short Weierstrass curve y^2 = x^3 + b over Fq (BN254 G1).
struct G1Curve
{
    using Field = Fq;
    static const Fq& b();
    static const Fq& generator_x();
    static const Fq& generator_y();
    static constexpr bool kPrimeOrder = true;
};

/// D-type sextic twist y^2 = x^3 + 3/xi over Fq2 (BN254 G2).
struct G2Curve
{
    using Field = Fq2;
    static const Fq2& b();
    static const Fq2& generator_x();
    static const Fq2& generator_y();
    static constexpr bool kPrimeOrder = false;  // the twist has a non-trivial cofactor
};

template <typename Curve>
struct AffinePoint
{
    using Field = typename Curve::Field;

    Field x{};
    Field y{};
    bool infinity = true;

    static AffinePoint identity() noexcept { return {}; }
    static AffinePoint generator() { return {Curve::generator_x(), Curve::generator_y(), false}; }

    bool is_on_curve() const
    {
        if (infinity)
            return true;
        return y.squared() == x.squared() * x + Curve::b();
    }

    AffinePoint operator-() const noexcept { return infinity ? *this : AffinePoint{x, -y, false}; }

    bool operator==(const AffinePoint& o) const noexcept
    {
        if (infinity || o.infinity)
            return infinity == o.infinity;
        return x == o.x && y == o.y;
    }
};

/// Group element in Jacobian coordinates; Z = 0 encodes the identity.
template <typename Curve>
class Point
{
public:
    using Field = typename Curve::Field;
    using Affine = AffinePoint<Curve>;

    Point() noexcept : x_{Field::one()}, y_{Field::one()}, z_{Field::zero()} {}

    Point(const Affine& a) noexcept  // NOLINT(google-explicit-constructor)
      : x_{a.x}, y_{a.y}, z_{a.infinity ? Field::zero() : Field::one()}
    {
        if (a.infinity)
        {
            x_ = Field::one();
            y_ = Field::one();
        }
    }

    static Point identity() noexcept { return {}; }
    static Point generator() { return Point{Affine::generator()}; }

    bool is_identity() const noexcept { return z_.is_zero(); }

    Affine to_affine() const
    {
        if (is_identity())
            return Affine::identity();
        const Field zinv = z_.inverse();
        const Field zinv2 = zinv.squared();
        return {x_ * zinv2, y_ * zinv2 * zinv, false};
    }

    bool operator==(const Point& o) const
    {
        if (is_identity() || o.is_identity())
            return is_identity() == o.is_identity();
        const Field z1z1 = z_.squared();
        const Field z2z2 = o.z_.squared();
        if (x_ * z2z2 != o.x_ * z1z1)
            return false;
        return y_ * z2z2 * o.z_ == o.y_ * z1z1 * z_;
    }
    bool operator!=(const Point& o) const { return !(*this == o); }

    Point operator-() const noexcept
    {
        Point r = *this;
        r.y_ = -r.y_;
        return r;
    }

    Point doubled() const noexcept
    {
        if (is_identity())
            return *this;
        const Field a = x_.squared();
        const Field b = y_.squared();
        const Field c = b.squared();
        const Field d = ((x_ + b).squared() - a - c).doubled();
        const Field e = a.doubled() + a;
        const Field f = e.squared();
        Point r;
        r.x_ = f - d.doubled();
        const Field c8 = c.doubled().doubled().doubled();
        r.y_ = e * (d - r.x_) - c8;
        r.z_ = (y_ * z_).doubled();
        return r;
    }

    friend Point operator+(const Point& p, const Point& q) noexcept
    {
        if (p.is_identity())
            return q;
        if (q.is_identity())
            return p;
        const Field z1z1 = p.z_.squared();
        const Field z2z2 = q.z_.squared();
        const Field u1 = p.x_ * z2z2;
        const Field u2 = q.x_ * z1z1;
        const Field s1 = p.y_ * q.z_ * z2z2;
        const Field s2 = q.y_ * p.z_ * z1z1;
        const Field h = u2 - u1;
        const Field rr = (s2 - s1).doubled();
        if (h.is_zero())
            return rr.is_zero() ? p.doubled() : Point{};
        const Field i = h.doubled().squared();
        const Field j = h * i;
        const Field v = u1 * i;
        Point r;
        r.x_ = rr.squared() - j - v.doubled();
        r.y_ = rr * (v - r.x_) - (s1 * j).doubled();
        r.z_ = ((p.z_ + q.z_).squared() - z1z1 - z2z2) * h;
        return r;
    }

    /// Mixed addition with an affine point.
    Point add_affine(const Affine& q) const noexcept
    {
        if (q.infinity)
            return *this;
        if (is_identity())
            return Point{q};
        const Field z1z1 = z_.squared();
        const Field u2 = q.x * z1z1;
        const Field s2 = q.y * z_ * z1z1;
        const Field h = u2 - x_;
        const Field rr = (s2 - y_).doubled();
        if (h.is_zero())
            return rr.is_zero() ? doubled() : Point{};
        const Field hh = h.squared();
        const Field i = hh.doubled().doubled();
        const Field j = h * i;
        const Field v = x_ * i;
        Point r;
        r.x_ = rr.squared() - j - v.doubled();
        r.y_ = rr * (v - r.x_) - (y_ * j).doubled();
        r.z_ = (z_ + h).squared() - z1z1 - hh;
        return r;
    }

    Point& operator+=(const Point& o) noexcept { return *this = *this + o; }
    friend Point operator-(const Point& p, const Point& q) noexcept { return p + (-q); }

    /// [k]P for a raw 256-bit multiplier.
    Point mul_limbs(const Limbs& k) const noexcept
    {
        Point acc;
        for (std::size_t i = limbs::bit_length(k); i-- > 0;)
        {
            acc = acc.doubled();
            if (limbs::bit(k, i))
                acc += *this;
        }
        return acc;
    }

    Point operator*(const Fr& k) const noexcept { return mul_limbs(k.to_limbs()); }
    friend Point operator*(const Fr& k, const Point& p) noexcept { return p * k; }

    bool is_on_curve() const { return to_affine().is_on_curve(); }

    /// True if the point lies in the order-r subgroup.
    bool in_subgroup() const
    {
        if constexpr (Curve::kPrimeOrder)
            return is_on_curve();
        else
            return is_on_curve() && mul_limbs(Fr::kModulus).is_identity();
    }

    const Field& x() const noexcept { return x_; }
    const Field& y() const noexcept { return y_; }
    const Field& z() const noexcept { return z_; }

private:
    Field x_;
    Field y_;
    Field z_;
};

using G1Affine = AffinePoint<G1Curve>;
using G2Affine = AffinePoint<G2Curve>;
using G1Point = Point<G1Curve>;
using G2Point = Point<G2Curve>;

/// Normalizes many points with one inversion.
template <typename Curve>
std::vector<AffinePoint<Curve>> batch_to_affine(std::span<const Point<Curve>> pts)
{
    using F = typename Curve::Field;
    std::vector<F> zs;
    zs.reserve(pts.size());
    for (const auto& p : pts)
        zs.push_back(p.z());
    batch_invert<F>(zs);
    std::vector<AffinePoint<Curve>> out(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i)
    {
        if (pts[i].is_identity())
            continue;
        const F zinv2 = zs[i].squared();
        out[i] = {pts[i].x() * zinv2, pts[i].y() * zinv2 * zs[i], false};
    }
    return out;
}

/// Sum of [s_i] P_i. Throws std::invalid_argument on length mismatch.
template <typename Curve>
Point<Curve> multi_scalar_combine(std::span<const AffinePoint<Curve>> points, std::span<const Fr> scalars);

/// Precomputed window table for repeated multiplication of one fixed base.
template <typename Curve>
class FixedBaseTable
{
public:
    explicit FixedBaseTable(const Point<Curve>& base, unsigned window_bits = 8);

    Point<Curve> mul(const Fr& k) const;
    std::vector<AffinePoint<Curve>> batch_mul(std::span<const Fr> ks) const;

private:
    unsigned window_;
    std::size_t windows_;
    std::vector<AffinePoint<Curve>> table_;  // windows_ x (2^window_ - 1)
};

extern template class FixedBaseTable<G1Curve>;
extern template class FixedBaseTable<G2Curve>;

}  // namespace zkoffload::algebra
