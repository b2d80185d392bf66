// zkoffload: verifiable computation offloading
// Copyright 2026 The zkoffload Authors.
// SPDX-License-Identifier: Apache-2.0

#include <zkoffload/algebra/pairing.hpp>

#include <vector>

namespace zkoffload::algebra
{
namespace
{
// 6x + 2 for the BN parameter x = 4965661367192848881.
constexpr uint64_t kLoopHigh = 0x1;
constexpr uint64_t kLoopLow = 0x9d797039be763ba8;
constexpr std::size_t kLoopBits = 65;

// (p^4 - p^2 + 1) / r
constexpr std::string_view kHardExponentHex =
    "1baaa710b0759ad331ec15183177faf6c0eb522d5b122784e529a5861876f6b3b1b1355d189227d79581e16f3fd90c66b887d56d"
    "5095f23aaa441e3954bcf8adcc7b44c87cdbacff1154e7e1da014fd5abf5cc4f49c36d4e81bb482ccdf42b1";

const std::vector<uint64_t>& hard_exponent()
{
    static const std::vector<uint64_t> e = [] {
        std::vector<uint64_t> out((kHardExponentHex.size() + 15) / 16, 0);
        std::size_t pos = 0;
        for (auto it = kHardExponentHex.rbegin(); it != kHardExponentHex.rend(); ++it, ++pos)
        {
            const char ch = *it;
            const uint64_t v = ch <= '9' ? static_cast<uint64_t>(ch - '0') : static_cast<uint64_t>(ch - 'a' + 10);
            out[pos / 16] |= v << (4 * (pos % 16));
        }
        return out;
    }();
    return e;
}

bool loop_bit(std::size_t i)
{
    return i < 64 ? ((kLoopLow >> i) & 1) != 0 : ((kLoopHigh >> (i - 64)) & 1) != 0;
}

struct TwistPoint
{
    Fq2 x;
    Fq2 y;
    bool infinity = false;
};

// Line through the untwisted images of T with slope lambda (on the twist), evaluated at P:
// yP - lambda xP w + (lambda xT - yT) w^3
Fq12 sloped_line(const Fq2& lambda, const TwistPoint& t, const G1Affine& p)
{
    Fq12 l;
    l.c0.c0 = Fq2{p.y, Fq::zero()};
    l.c1.c0 = -(lambda * p.x);
    l.c1.c1 = lambda * t.x - t.y;
    return l;
}

// xP - xT w^2
Fq12 vertical_line(const TwistPoint& t, const G1Affine& p)
{
    Fq12 l;
    l.c0.c0 = Fq2{p.x, Fq::zero()};
    l.c0.c1 = -t.x;
    return l;
}

Fq12 double_step(TwistPoint& t, const G1Affine& p)
{
    if (t.y.is_zero())
    {
        const Fq12 l = vertical_line(t, p);
        t.infinity = true;
        return l;
    }
    const Fq2 x2 = t.x.squared();
    const Fq2 lambda = (x2.doubled() + x2) * t.y.doubled().inverse();
    const Fq12 l = sloped_line(lambda, t, p);
    const Fq2 x3 = lambda.squared() - t.x.doubled();
    t.y = lambda * (t.x - x3) - t.y;
    t.x = x3;
    return l;
}

Fq12 add_step(TwistPoint& t, const TwistPoint& q, const G1Affine& p)
{
    if (t.infinity)
    {
        t = q;
        return Fq12::one();
    }
    if (t.x == q.x)
    {
        if (t.y == q.y)
            return double_step(t, p);
        const Fq12 l = vertical_line(t, p);
        t.infinity = true;
        return l;
    }
    const Fq2 lambda = (q.y - t.y) * (q.x - t.x).inverse();
    const Fq12 l = sloped_line(lambda, t, p);
    const Fq2 x3 = lambda.squared() - t.x - q.x;
    t.y = lambda * (t.x - x3) - t.y;
    t.x = x3;
    return l;
}

TwistPoint frobenius(const TwistPoint& q)
{
    return {q.x.conjugate() * frobenius_twist_x(), q.y.conjugate() * frobenius_twist_y(), q.infinity};
}
}  // namespace

Fq12 miller_loop(const G1Affine& p, const G2Affine& q)
{
    if (p.infinity || q.infinity)
        return Fq12::one();
    const TwistPoint base{q.x, q.y};
    TwistPoint t = base;
    Fq12 f = Fq12::one();
    for (std::size_t i = kLoopBits - 1; i-- > 0;)
    {
        f = f.squared() * double_step(t, p);
        if (loop_bit(i))
            f *= add_step(t, base, p);
    }
    const TwistPoint q1 = frobenius(base);
    TwistPoint q2 = frobenius(q1);
    q2.y = -q2.y;
    f *= add_step(t, q1, p);
    f *= add_step(t, q2, p);
    return f;
}

Fq12 final_exponentiation(const Fq12& f)
{
    // easy part: f^((p^6 - 1)(p^2 + 1))
    const Fq12 f1 = f.conjugate() * f.inverse();
    const Fq12 f2 = f1.frobenius(2) * f1;
    return f2.pow(hard_exponent());
}

TargetElement pairing(const G1Point& p, const G2Point& q)
{
    return TargetElement{final_exponentiation(miller_loop(p.to_affine(), q.to_affine()))};
}

bool pairing_product_is_one(std::span<const std::pair<G1Affine, G2Affine>> pairs)
{
    Fq12 f = Fq12::one();
    for (const auto& [p, q] : pairs)
        f *= miller_loop(p, q);
    return final_exponentiation(f) == Fq12::one();
}
}  // namespace zkoffload::algebra
