// zkoffload: verifiable computation offloading
// Copyright 2026 The zkoffload Authors.
// SPDX-License-Identifier: Apache-2.0

#include <zkoffload/snark/domain.hpp>

#include <bit>
#include <stdexcept>

namespace zkoffload::snark
{
namespace
{
constexpr unsigned kTwoAdicity = 28;

// 5^((r-1)/2^28): a primitive 2^28-th root of unity.
Fr max_root_of_unity()
{
    static const Fr root = [] {
        algebra::Limbs e = Fr::kModulus;
        e[0] -= 1;
        for (unsigned i = 0; i < kTwoAdicity; ++i)
            algebra::limbs::div_small(e, 2);
        return Fr{uint64_t{5}}.pow(e);
    }();
    return root;
}
}  // namespace

EvaluationDomain::EvaluationDomain(std::size_t min_size)
{
    size_ = std::bit_ceil(std::max<std::size_t>(min_size, 1));
    log_size_ = static_cast<unsigned>(std::countr_zero(size_));
    if (log_size_ > kTwoAdicity)
        throw std::invalid_argument("evaluation domain too large");
    omega_ = max_root_of_unity();
    for (unsigned i = log_size_; i < kTwoAdicity; ++i)
        omega_ = omega_.squared();
    omega_inv_ = omega_.inverse();
    size_inv_ = Fr{static_cast<uint64_t>(size_)}.inverse();
}

void EvaluationDomain::transform(std::vector<Fr>& a, const Fr& root) const
{
    if (a.size() != size_)
        throw std::invalid_argument("fft: vector length must equal domain size");
    const std::size_t n = size_;
    for (std::size_t i = 1, j = 0; i < n; ++i)
    {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1)
            j ^= bit;
        j ^= bit;
        if (i < j)
            std::swap(a[i], a[j]);
    }
    std::vector<Fr> twiddles(n / 2 > 0 ? n / 2 : 1);
    for (std::size_t len = 2; len <= n; len <<= 1)
    {
        // root^(n/len) generates the subgroup of order len
        Fr w = root;
        for (std::size_t k = len; k < n; k <<= 1)
            w = w.squared();
        const std::size_t half = len / 2;
        twiddles[0] = Fr::one();
        for (std::size_t k = 1; k < half; ++k)
            twiddles[k] = twiddles[k - 1] * w;
        for (std::size_t i = 0; i < n; i += len)
        {
            for (std::size_t k = 0; k < half; ++k)
            {
                const Fr u = a[i + k];
                const Fr v = a[i + k + half] * twiddles[k];
                a[i + k] = u + v;
                a[i + k + half] = u - v;
            }
        }
    }
}

void EvaluationDomain::fft(std::vector<Fr>& a) const
{
    transform(a, omega_);
}

void EvaluationDomain::ifft(std::vector<Fr>& a) const
{
    transform(a, omega_inv_);
    for (auto& x : a)
        x *= size_inv_;
}

void EvaluationDomain::coset_fft(std::vector<Fr>& a) const
{
    const Fr g = coset_generator();
    Fr power = Fr::one();
    for (auto& x : a)
    {
        x *= power;
        power *= g;
    }
    fft(a);
}

void EvaluationDomain::icoset_fft(std::vector<Fr>& a) const
{
    ifft(a);
    const Fr g_inv = coset_generator().inverse();
    Fr power = Fr::one();
    for (auto& x : a)
    {
        x *= power;
        power *= g_inv;
    }
}

Fr EvaluationDomain::vanishing_at(const Fr& x) const
{
    return x.pow(static_cast<uint64_t>(size_)) - Fr::one();
}

std::vector<Fr> EvaluationDomain::lagrange_at(const Fr& x) const
{
    const Fr z = vanishing_at(x);
    if (z.is_zero())
        throw std::invalid_argument("lagrange_at: point lies in the domain");
    // L_i(x) = Z(x) / n * omega^i / (x - omega^i)
    std::vector<Fr> denom(size_);
    std::vector<Fr> out(size_);
    Fr w = Fr::one();
    for (std::size_t i = 0; i < size_; ++i)
    {
        denom[i] = x - w;
        out[i] = w;
        w *= omega_;
    }
    algebra::batch_invert<Fr>(denom);
    const Fr scale = z * size_inv_;
    for (std::size_t i = 0; i < size_; ++i)
        out[i] *= denom[i] * scale;
    return out;
}
}  // namespace zkoffload::snark
