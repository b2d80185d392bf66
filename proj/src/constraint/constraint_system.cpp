// zkoffload: verifiable computation offloading
// Copyright 2026 The zkoffload Authors.
// SPDX-License-Identifier: Apache-2.0

#include <zkoffload/constraint/constraint_system.hpp>

#include <openssl/evp.h>

#include <memory>

namespace zkoffload::constraint
{
Variable ConstraintSystem::alloc(Visibility visibility)
{
    if (finalized_)
        throw ConstraintError("alloc after finalize");
    if (visibility == Visibility::kPublic)
    {
        if (num_private_ != 0)
            throw ConstraintError("public variables must be allocated before private ones");
        return Variable{1 + num_public_++};
    }
    return Variable{1 + num_public_ + num_private_++};
}

void ConstraintSystem::enforce(LC a, LC b, LC c)
{
    if (finalized_)
        throw ConstraintError("enforce after finalize");
    const std::size_t limit = num_variables();
    if (a.max_index() >= limit || b.max_index() >= limit || c.max_index() >= limit)
        throw ConstraintError("constraint references an unallocated variable");
    constraints_.push_back({std::move(a), std::move(b), std::move(c)});
}

void ConstraintSystem::finalize()
{
    finalized_ = true;
}

Assignment ConstraintSystem::blank_assignment() const
{
    Assignment z(num_variables());
    z[0] = Fr::one();
    return z;
}

void ConstraintSystem::check_assignment(std::span<const Fr> z) const
{
    if (z.size() != num_variables())
        throw ConstraintError("assignment length does not match variable count");
    if (z[0] != Fr::one())
        throw ConstraintError("assignment[0] must be one");
}

std::optional<std::size_t> ConstraintSystem::first_unsatisfied(std::span<const Fr> z) const
{
    check_assignment(z);
    for (std::size_t i = 0; i < constraints_.size(); ++i)
    {
        const auto& row = constraints_[i];
        const Fr a = row.a.evaluate(z);
        const Fr lhs = a.is_zero() ? Fr::zero() : a * row.b.evaluate(z);
        if (lhs != row.c.evaluate(z))
            return i;
    }
    return std::nullopt;
}

bool ConstraintSystem::is_satisfied(std::span<const Fr> z) const
{
    return !first_unsatisfied(z).has_value();
}

namespace
{
struct MdCtxDeleter
{
    void operator()(EVP_MD_CTX* ctx) const noexcept { EVP_MD_CTX_free(ctx); }
};

void put_u64(EVP_MD_CTX* ctx, uint64_t v)
{
    uint8_t buf[8];
    for (int i = 0; i < 8; ++i)
        buf[i] = static_cast<uint8_t>(v >> (8 * i));
    EVP_DigestUpdate(ctx, buf, sizeof(buf));
}

void put_lc(EVP_MD_CTX* ctx, const LC& lc)
{
    put_u64(ctx, lc.terms().size());
    for (const auto& t : lc.terms())
    {
        put_u64(ctx, t.index);
        const auto bytes = t.coeff.to_bytes();
        EVP_DigestUpdate(ctx, bytes.data(), bytes.size());
    }
}
}  // namespace

Digest ConstraintSystem::digest() const
{
    std::unique_ptr<EVP_MD_CTX, MdCtxDeleter> ctx{EVP_MD_CTX_new()};
    EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr);
    put_u64(ctx.get(), num_public_);
    put_u64(ctx.get(), num_private_);
    put_u64(ctx.get(), constraints_.size());
    for (const auto& row : constraints_)
    {
        put_lc(ctx.get(), row.a);
        put_lc(ctx.get(), row.b);
        put_lc(ctx.get(), row.c);
    }
    Digest out{};
    unsigned int len = 0;
    EVP_DigestFinal_ex(ctx.get(), out.data(), &len);
    return out;
}

bool ConstraintSystem::operator==(const ConstraintSystem& o) const
{
    if (num_public_ != o.num_public_ || num_private_ != o.num_private_ || constraints_.size() != o.constraints_.size())
        return false;
    for (std::size_t i = 0; i < constraints_.size(); ++i)
    {
        const auto& x = constraints_[i];
        const auto& y = o.constraints_[i];
        if (!(x.a == y.a && x.b == y.b && x.c == y.c))
            return false;
    }
    return true;
}

void Circuit::generate(Assignment& z) const
{
    for (const auto& g : generators_)
        g(z);
}

Circuit CircuitBuilder::build()
{
    cs_.finalize();
    Circuit out{std::move(cs_), std::move(generators_), std::move(private_inputs_)};
    cs_ = ConstraintSystem{};
    generators_.clear();
    private_inputs_.clear();
    return out;
}
}  // namespace zkoffload::constraint
