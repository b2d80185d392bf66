// zkoffload: verifiable computation offloading
// Copyright 2026 The zkoffload Authors.
// SPDX-License-Identifier: Apache-2.0

#include <zkoffload/snark/qap.hpp>

#include <stdexcept>

namespace zkoffload::snark
{
std::size_t qap_domain_size(const ConstraintSystem& cs)
{
    return EvaluationDomain{cs.num_constraints() + cs.num_public() + 1}.size();
}

QapInstance r1cs_to_qap(const ConstraintSystem& cs)
{
    if (!cs.finalized())
        throw std::invalid_argument("r1cs_to_qap: system not finalized");
    if (cs.num_constraints() == 0)
        throw std::invalid_argument("r1cs_to_qap: empty constraint system");

    QapInstance q{cs.num_constraints() + cs.num_public() + 1};
    q.num_public_ = cs.num_public();
    q.num_constraints_ = cs.num_constraints();
    const std::size_t nv = cs.num_variables();
    q.a_.resize(nv);
    q.b_.resize(nv);
    q.c_.resize(nv);

    const auto& rows = cs.constraints();
    for (std::size_t j = 0; j < rows.size(); ++j)
    {
        const auto row = static_cast<uint32_t>(j);
        for (const auto& t : rows[j].a.terms())
            q.a_[t.index].entries.emplace_back(row, t.coeff);
        for (const auto& t : rows[j].b.terms())
            q.b_[t.index].entries.emplace_back(row, t.coeff);
        for (const auto& t : rows[j].c.terms())
            q.c_[t.index].entries.emplace_back(row, t.coeff);
    }
    for (std::size_t i = 0; i <= cs.num_public(); ++i)
        q.a_[i].entries.emplace_back(static_cast<uint32_t>(rows.size() + i), Fr::one());
    return q;
}

std::vector<Fr> QapInstance::coefficients(int which, std::size_t var) const
{
    const SparseColumn& col = which == 0 ? a(var) : which == 1 ? b(var) : c(var);
    std::vector<Fr> evals(domain_.size());
    for (const auto& [row, v] : col.entries)
        evals[row] += v;
    domain_.ifft(evals);
    return evals;
}

QapInstance::Evaluations QapInstance::evaluate_at(std::span<const Fr> lagrange) const
{
    Evaluations out;
    auto eval = [&](const std::vector<SparseColumn>& cols, std::vector<Fr>& dst) {
        dst.assign(cols.size(), Fr::zero());
        for (std::size_t i = 0; i < cols.size(); ++i)
        {
            for (const auto& [row, v] : cols[i].entries)
                dst[i] += v * lagrange[row];
        }
    };
    eval(a_, out.a);
    eval(b_, out.b);
    eval(c_, out.c);
    return out;
}

bool QapInstance::divisible(std::span<const Fr> z) const
{
    if (z.size() != num_variables())
        throw std::invalid_argument("divisible: assignment length mismatch");
    const std::size_t n = domain_.size();
    std::vector<Fr> av(n), bv(n), cv(n);
    for (std::size_t i = 0; i < z.size(); ++i)
    {
        for (const auto& [row, v] : a_[i].entries)
            av[row] += v * z[i];
        for (const auto& [row, v] : b_[i].entries)
            bv[row] += v * z[i];
        for (const auto& [row, v] : c_[i].entries)
            cv[row] += v * z[i];
    }
    for (std::size_t j = 0; j < n; ++j)
    {
        if (av[j] * bv[j] != cv[j])
            return false;
    }
    return true;
}

RowEvaluations evaluate_rows(const ConstraintSystem& cs, std::span<const Fr> z, std::size_t domain_size)
{
    RowEvaluations r;
    r.a.assign(domain_size, Fr::zero());
    r.b.assign(domain_size, Fr::zero());
    r.c.assign(domain_size, Fr::zero());
    const auto& rows = cs.constraints();
    for (std::size_t j = 0; j < rows.size(); ++j)
    {
        r.a[j] = rows[j].a.evaluate(z);
        r.b[j] = rows[j].b.evaluate(z);
        r.c[j] = rows[j].c.evaluate(z);
    }
    for (std::size_t i = 0; i <= cs.num_public(); ++i)
        r.a[rows.size() + i] = z[i];
    return r;
}

std::vector<Fr> compute_quotient(const EvaluationDomain& domain, RowEvaluations rows)
{
    domain.ifft(rows.a);
    domain.ifft(rows.b);
    domain.ifft(rows.c);
    domain.coset_fft(rows.a);
    domain.coset_fft(rows.b);
    domain.coset_fft(rows.c);
    // Z is constant on the coset: g^n - 1
    const Fr z_inv = domain.vanishing_at(EvaluationDomain::coset_generator()).inverse();
    std::vector<Fr>& h = rows.a;
    for (std::size_t j = 0; j < h.size(); ++j)
        h[j] = (h[j] * rows.b[j] - rows.c[j]) * z_inv;
    domain.icoset_fft(h);
    h.resize(domain.size() - 1);
    return std::move(h);
}
}  // namespace zkoffload::snark
