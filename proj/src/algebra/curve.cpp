// zkoffload: verifiable computation offloading
// Copyright 2026 The zkoffload Authors.
// SPDX-License-Identifier: Apache-2.0

#include <zkoffload/algebra/curve.hpp>

#include <bit>
#include <stdexcept>

namespace zkoffload::algebra
{
const Fq& G1Curve::b()
{
    static const Fq v{uint64_t{3}};
    return v;
}

const Fq& G1Curve::generator_x()
{
    static const Fq v = Fq::one();
    return v;
}

const Fq& G1Curve::generator_y()
{
    static const Fq v{uint64_t{2}};
    return v;
}

const Fq2& G2Curve::b()
{
    static const Fq2 v = Fq2{Fq{uint64_t{3}}, Fq::zero()} * Fq2::one().mul_by_nonresidue().inverse();
    return v;
}

const Fq2& G2Curve::generator_x()
{
    static const Fq2 v{
        Fq::from_decimal("10857046999023057135944570762232829481370756359578518086990519993285655852781"),
        Fq::from_decimal("11559732032986387107991004021392285783925812861821192530917403151452391805634"),
    };
    return v;
}

const Fq2& G2Curve::generator_y()
{
    static const Fq2 v{
        Fq::from_decimal("8495653923123431417604973247489272438418190587263600148770280649306958101930"),
        Fq::from_decimal("4082367875863433681332203403145435568316851327593401208105741076214120093531"),
    };
    return v;
}

namespace
{
unsigned window_digit(const Limbs& k, std::size_t offset, unsigned width)
{
    if (offset >= 256)
        return 0;
    const std::size_t limb = offset / 64;
    const std::size_t shift = offset % 64;
    uint64_t v = k[limb] >> shift;
    if (shift + width > 64 && limb + 1 < 4)
        v |= k[limb + 1] << (64 - shift);
    return static_cast<unsigned>(v & ((uint64_t{1} << width) - 1));
}

unsigned pippenger_window(std::size_t n)
{
    if (n < 32)
        return 3;
    const auto lg = static_cast<unsigned>(std::bit_width(n));
    return lg * 2 / 3 + 1;
}
}  // namespace

template <typename Curve>
Point<Curve> multi_scalar_combine(std::span<const AffinePoint<Curve>> points, std::span<const Fr> scalars)
{
    if (points.size() != scalars.size())
        throw std::invalid_argument("multi_scalar_combine: length mismatch");
    using P = Point<Curve>;
    const std::size_t n = points.size();
    if (n == 0)
        return P::identity();

    std::vector<Limbs> ks;
    ks.reserve(n);
    std::size_t max_bits = 0;
    for (const auto& s : scalars)
    {
        ks.push_back(s.to_limbs());
        max_bits = std::max(max_bits, limbs::bit_length(ks.back()));
    }
    if (n < 4)
    {
        P acc;
        for (std::size_t i = 0; i < n; ++i)
            acc += P{points[i]}.mul_limbs(ks[i]);
        return acc;
    }

    const unsigned c = pippenger_window(n);
    const std::size_t num_windows = (max_bits + c - 1) / c;
    std::vector<P> buckets(std::size_t{1} << c);
    P result;
    for (std::size_t w = num_windows; w-- > 0;)
    {
        for (unsigned d = 0; d < c; ++d)
            result = result.doubled();
        std::fill(buckets.begin(), buckets.end(), P::identity());
        for (std::size_t i = 0; i < n; ++i)
        {
            const unsigned digit = window_digit(ks[i], w * c, c);
            if (digit != 0)
                buckets[digit] = buckets[digit].add_affine(points[i]);
        }
        P running;
        P sum;
        for (std::size_t j = buckets.size(); j-- > 1;)
        {
            running += buckets[j];
            sum += running;
        }
        result += sum;
    }
    return result;
}

template Point<G1Curve> multi_scalar_combine<G1Curve>(std::span<const G1Affine>, std::span<const Fr>);
template Point<G2Curve> multi_scalar_combine<G2Curve>(std::span<const G2Affine>, std::span<const Fr>);

template <typename Curve>
FixedBaseTable<Curve>::FixedBaseTable(const Point<Curve>& base, unsigned window_bits)
  : window_{window_bits}, windows_{(256 + window_bits - 1) / window_bits}
{
    const std::size_t per_window = (std::size_t{1} << window_) - 1;
    std::vector<Point<Curve>> jac;
    jac.reserve(windows_ * per_window);
    Point<Curve> window_base = base;
    for (std::size_t j = 0; j < windows_; ++j)
    {
        Point<Curve> acc = window_base;
        for (std::size_t d = 0; d < per_window; ++d)
        {
            jac.push_back(acc);
            acc += window_base;
        }
        for (unsigned d = 0; d < window_; ++d)
            window_base = window_base.doubled();
    }
    table_ = batch_to_affine<Curve>(jac);
}

template <typename Curve>
Point<Curve> FixedBaseTable<Curve>::mul(const Fr& k) const
{
    const Limbs v = k.to_limbs();
    const std::size_t per_window = (std::size_t{1} << window_) - 1;
    Point<Curve> acc;
    for (std::size_t j = 0; j < windows_; ++j)
    {
        const unsigned digit = window_digit(v, j * window_, window_);
        if (digit != 0)
            acc = acc.add_affine(table_[j * per_window + digit - 1]);
    }
    return acc;
}

template <typename Curve>
std::vector<AffinePoint<Curve>> FixedBaseTable<Curve>::batch_mul(std::span<const Fr> ks) const
{
    std::vector<Point<Curve>> jac;
    jac.reserve(ks.size());
    for (const auto& k : ks)
        jac.push_back(mul(k));
    return batch_to_affine<Curve>(jac);
}

template class FixedBaseTable<G1Curve>;
template class FixedBaseTable<G2Curve>;

}  // namespace zkoffload::algebra
