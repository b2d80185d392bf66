// zkoffload: verifiable computation offloading
// Copyright 2026 The zkoffload Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace zkoffload::algebra
{
/// Raised for arithmetic that has no defined result, e.g. inverting zero.
class ArithmeticError : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

using Limbs = std::array<uint64_t, 4>;
using u128 = unsigned __int128;

namespace limbs
{
constexpr bool geq(const Limbs& a, const Limbs& b) noexcept
{
    for (int i = 3; i >= 0; --i)
    {
        if (a[i] != b[i])
            return a[i] > b[i];
    }
    return true;
}

constexpr uint64_t add(Limbs& a, const Limbs& b) noexcept
{
    u128 carry = 0;
    for (int i = 0; i < 4; ++i)
    {
        carry += static_cast<u128>(a[i]) + b[i];
        a[i] = static_cast<uint64_t>(carry);
        carry >>= 64;
    }
    return static_cast<uint64_t>(carry);
}

constexpr uint64_t sub(Limbs& a, const Limbs& b) noexcept
{
    uint64_t borrow = 0;
    for (int i = 0; i < 4; ++i)
    {
        const u128 d = static_cast<u128>(a[i]) - b[i] - borrow;
        a[i] = static_cast<uint64_t>(d);
        borrow = static_cast<uint64_t>(d >> 64) & 1;
    }
    return borrow;
}

constexpr bool is_zero(const Limbs& a) noexcept
{
    return (a[0] | a[1] | a[2] | a[3]) == 0;
}

constexpr bool bit(const Limbs& a, std::size_t i) noexcept
{
    return ((a[i / 64] >> (i % 64)) & 1) != 0;
}

constexpr std::size_t bit_length(const Limbs& a) noexcept
{
    for (int i = 3; i >= 0; --i)
    {
        if (a[i] != 0)
            return static_cast<std::size_t>(i) * 64 + (64 - static_cast<std::size_t>(__builtin_clzll(a[i])));
    }
    return 0;
}

/// Parses a decimal literal that fits in 256 bits.
constexpr Limbs from_decimal(std::string_view s)
{
    Limbs r{};
    for (char ch : s)
    {
        if (ch < '0' || ch > '9')
            throw std::invalid_argument("non-decimal digit");
        u128 carry = static_cast<u128>(ch - '0');
        for (int i = 0; i < 4; ++i)
        {
            carry += static_cast<u128>(r[i]) * 10;
            r[i] = static_cast<uint64_t>(carry);
            carry >>= 64;
        }
        if (carry != 0)
            throw std::out_of_range("decimal literal exceeds 256 bits");
    }
    return r;
}

/// Divides by a small integer in place and returns the remainder.
constexpr uint64_t div_small(Limbs& a, uint64_t d) noexcept
{
    u128 rem = 0;
    for (int i = 3; i >= 0; --i)
    {
        const u128 cur = (rem << 64) | a[i];
        a[i] = static_cast<uint64_t>(cur / d);
        rem = cur % d;
    }
    return static_cast<uint64_t>(rem);
}

std::string to_hex(const Limbs& a);
Limbs from_hex(std::string_view s);
std::string to_decimal(Limbs a);
}  // namespace limbs

/// Prime field in Montgomery representation over a 4-limb modulus below 2^255.
/// Arithmetic is not constant time.
template <typename Params>
class Fp
{
public:
    static constexpr Limbs kModulus = Params::kModulus;

private:
    static constexpr uint64_t compute_inv() noexcept
    {
        uint64_t inv = 1;
        for (int i = 0; i < 63; ++i)
        {
            inv *= inv;
            inv *= kModulus[0];
        }
        return ~inv + 1;  // -p^{-1} mod 2^64
    }

    static constexpr Limbs double_mod(Limbs a) noexcept
    {
        const uint64_t top = a[3] >> 63;
        a[3] = (a[3] << 1) | (a[2] >> 63);
        a[2] = (a[2] << 1) | (a[1] >> 63);
        a[1] = (a[1] << 1) | (a[0] >> 63);
        a[0] <<= 1;
        if (top != 0 || limbs::geq(a, kModulus))
            limbs::sub(a, kModulus);
        return a;
    }

    static constexpr Limbs compute_r2() noexcept
    {
        Limbs x{1, 0, 0, 0};
        for (int i = 0; i < 512; ++i)
            x = double_mod(x);
        return x;
    }

public:
    static constexpr uint64_t kInv = compute_inv();
    static constexpr Limbs kR2 = compute_r2();

    constexpr Fp() noexcept = default;

    constexpr explicit Fp(uint64_t v) noexcept : m_{mont_mul(Limbs{v, 0, 0, 0}, kR2)} {}

    static constexpr Fp zero() noexcept { return Fp{}; }
    static constexpr Fp one() noexcept { return Fp{uint64_t{1}}; }

    /// Accepts any 256-bit integer and reduces it.
    static constexpr Fp from_limbs(Limbs v) noexcept
    {
        while (limbs::geq(v, kModulus))
            limbs::sub(v, kModulus);
        Fp r;
        r.m_ = mont_mul(v, kR2);
        return r;
    }

    /// Rejects values that are not already reduced.
    static constexpr Fp from_canonical(const Limbs& v)
    {
        if (limbs::geq(v, kModulus))
            throw std::out_of_range("non-canonical field element");
        Fp r;
        r.m_ = mont_mul(v, kR2);
        return r;
    }

    static constexpr Fp from_decimal(std::string_view s) { return from_limbs(limbs::from_decimal(s)); }

    static Fp from_hex(std::string_view s) { return from_canonical(limbs::from_hex(s)); }

    /// Signed convenience constructor.
    static constexpr Fp from_int(int64_t v) noexcept
    {
        return v >= 0 ? Fp{static_cast<uint64_t>(v)} : -Fp{static_cast<uint64_t>(-(v + 1)) + 1};
    }

    constexpr Limbs to_limbs() const noexcept { return mont_mul(m_, Limbs{1, 0, 0, 0}); }

    std::string to_hex() const { return limbs::to_hex(to_limbs()); }
    std::string to_decimal() const { return limbs::to_decimal(to_limbs()); }

    /// 32-byte little-endian canonical encoding.
    std::array<uint8_t, 32> to_bytes() const noexcept
    {
        std::array<uint8_t, 32> out{};
        const Limbs v = to_limbs();
        for (std::size_t i = 0; i < 32; ++i)
            out[i] = static_cast<uint8_t>(v[i / 8] >> (8 * (i % 8)));
        return out;
    }

    static Fp from_bytes(std::span<const uint8_t, 32> in)
    {
        Limbs v{};
        for (std::size_t i = 0; i < 32; ++i)
            v[i / 8] |= static_cast<uint64_t>(in[i]) << (8 * (i % 8));
        return from_canonical(v);
    }

    /// Returns the value as uint64 when it fits, for small-integer domains.
    constexpr bool fits_u64() const noexcept
    {
        const Limbs v = to_limbs();
        return (v[1] | v[2] | v[3]) == 0;
    }
    constexpr uint64_t low_u64() const noexcept { return to_limbs()[0]; }

    constexpr bool is_zero() const noexcept { return limbs::is_zero(m_); }

    constexpr bool operator==(const Fp& o) const noexcept { return m_ == o.m_; }
    constexpr bool operator!=(const Fp& o) const noexcept { return m_ != o.m_; }

    constexpr Fp& operator+=(const Fp& o) noexcept
    {
        const uint64_t carry = limbs::add(m_, o.m_);
        if (carry != 0 || limbs::geq(m_, kModulus))
            limbs::sub(m_, kModulus);
        return *this;
    }

    constexpr Fp& operator-=(const Fp& o) noexcept
    {
        if (limbs::sub(m_, o.m_) != 0)
            limbs::add(m_, kModulus);
        return *this;
    }

    constexpr Fp& operator*=(const Fp& o) noexcept
    {
        m_ = mont_mul(m_, o.m_);
        return *this;
    }

    friend constexpr Fp operator+(Fp a, const Fp& b) noexcept { return a += b; }
    friend constexpr Fp operator-(Fp a, const Fp& b) noexcept { return a -= b; }
    friend constexpr Fp operator*(Fp a, const Fp& b) noexcept { return a *= b; }

    constexpr Fp operator-() const noexcept
    {
        if (is_zero())
            return *this;
        Fp r;
        r.m_ = kModulus;
        limbs::sub(r.m_, m_);
        return r;
    }

    constexpr Fp squared() const noexcept { return *this * *this; }
    constexpr Fp doubled() const noexcept { return *this + *this; }

    template <std::size_t N>
    constexpr Fp pow(const std::array<uint64_t, N>& e) const noexcept
    {
        Fp acc = one();
        bool started = false;
        for (int i = static_cast<int>(N) * 64 - 1; i >= 0; --i)
        {
            if (started)
                acc = acc.squared();
            if ((e[static_cast<std::size_t>(i) / 64] >> (i % 64)) & 1)
            {
                acc *= *this;
                started = true;
            }
        }
        return acc;
    }

    constexpr Fp pow(uint64_t e) const noexcept { return pow(std::array<uint64_t, 1>{e}); }

    Fp inverse() const
    {
        if (is_zero())
            throw ArithmeticError("inverse of zero");
        Limbs e = kModulus;
        e[0] -= 2;  // p is odd and > 2
        return pow(e);
    }

private:
    static constexpr Limbs mont_mul(const Limbs& a, const Limbs& b) noexcept
    {
        uint64_t t[6] = {0, 0, 0, 0, 0, 0};
        for (int i = 0; i < 4; ++i)
        {
            u128 c = 0;
            for (int j = 0; j < 4; ++j)
            {
                c += static_cast<u128>(a[j]) * b[i] + t[j];
                t[j] = static_cast<uint64_t>(c);
                c >>= 64;
            }
            c += t[4];
            t[4] = static_cast<uint64_t>(c);
            t[5] = static_cast<uint64_t>(c >> 64);

            const uint64_t m = t[0] * kInv;
            c = static_cast<u128>(m) * kModulus[0] + t[0];
            c >>= 64;
            for (int j = 1; j < 4; ++j)
            {
                c += static_cast<u128>(m) * kModulus[j] + t[j];
                t[j - 1] = static_cast<uint64_t>(c);
                c >>= 64;
            }
            c += t[4];
            t[3] = static_cast<uint64_t>(c);
            t[4] = t[5] + static_cast<uint64_t>(c >> 64);
        }
        Limbs r{t[0], t[1], t[2], t[3]};
        if (t[4] != 0 || limbs::geq(r, kModulus))
            limbs::sub(r, kModulus);
        return r;
    }

    Limbs m_{};
};

/// Inverts every nonzero element with a single field inversion. Zeros are left as zero.
template <typename F>
void batch_invert(std::span<F> xs)
{
    std::vector<F> prefix(xs.size());
    F acc = F::one();
    for (std::size_t i = 0; i < xs.size(); ++i)
    {
        prefix[i] = acc;
        if (!xs[i].is_zero())
            acc *= xs[i];
    }
    F inv = acc.inverse();
    for (std::size_t i = xs.size(); i-- > 0;)
    {
        if (xs[i].is_zero())
            continue;
        const F next = inv * xs[i];
        xs[i] = inv * prefix[i];
        inv = next;
    }
}

// BN254 (alt_bn128) base field.
struct FqParams
{
    static constexpr Limbs kModulus =
        limbs::from_decimal("21888242871839275222246405745257275088696311157297823662689037894645226208583");
};

// BN254 scalar field; the field of constraint-system values.
struct FrParams
{
    static constexpr Limbs kModulus =
        limbs::from_decimal("21888242871839275222246405745257275088548364400416034343698204186575808495617");
};

using Fq = Fp<FqParams>;
using Fr = Fp<FrParams>;

/// Scalar type: residues modulo the group order.
using FieldElement = Fr;

}  // namespace zkoffload::algebra
