// zkoffload: verifiable computation offloading
// Copyright 2026 The zkoffload Authors.
// SPDX-License-Identifier: Apache-2.0

#include <zkoffload/constraint/linear_combination.hpp>

namespace zkoffload::constraint
{
LinearCombination::LinearCombination(Variable v) : terms_{{v.index, Fr::one()}} {}

LinearCombination LinearCombination::constant(const Fr& c)
{
    LinearCombination lc;
    if (!c.is_zero())
        lc.terms_.push_back({0, c});
    return lc;
}

Fr LinearCombination::evaluate(std::span<const Fr> assignment) const
{
    // Witnesses are dominated by zero selectors and unit coefficients.
    static const Fr one = Fr::one();
    Fr acc;
    for (const auto& t : terms_)
    {
        const Fr& v = assignment[t.index];
        if (v.is_zero())
            continue;
        if (t.coeff == one)
            acc += v;
        else if (v == one)
            acc += t.coeff;
        else
            acc += t.coeff * v;
    }
    return acc;
}

void LinearCombination::merge(const LinearCombination& o, const Fr& scale)
{
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    while (a != terms_.end() || b != o.terms_.end())
    {
        if (b == o.terms_.end() || (a != terms_.end() && a->index < b->index))
        {
            out.push_back(*a++);
        }
        else if (a == terms_.end() || b->index < a->index)
        {
            out.push_back({b->index, b->coeff * scale});
            ++b;
        }
        else
        {
            const Fr c = a->coeff + b->coeff * scale;
            if (!c.is_zero())
                out.push_back({a->index, c});
            ++a;
            ++b;
        }
    }
    terms_ = std::move(out);
}

LinearCombination& LinearCombination::operator+=(const LinearCombination& o)
{
    merge(o, Fr::one());
    return *this;
}

LinearCombination& LinearCombination::operator-=(const LinearCombination& o)
{
    merge(o, -Fr::one());
    return *this;
}

LinearCombination& LinearCombination::operator*=(const Fr& s)
{
    if (s.is_zero())
    {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_)
        t.coeff *= s;
    return *this;
}

bool LinearCombination::operator==(const LinearCombination& o) const
{
    if (terms_.size() != o.terms_.size())
        return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
    {
        if (terms_[i].index != o.terms_[i].index || terms_[i].coeff != o.terms_[i].coeff)
            return false;
    }
    return true;
}
}  // namespace zkoffload::constraint
