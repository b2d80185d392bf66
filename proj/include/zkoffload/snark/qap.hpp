// zkoffload: verifiable computation offloading
// Copyright 2026 The zkoffload Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <zkoffload/constraint/constraint_system.hpp>
#include <zkoffload/snark/domain.hpp>

#include <span>
#include <vector>

namespace zkoffload::snark
{
using constraint::Assignment;
using constraint::ConstraintSystem;

/// Sparse column: the nonzero values a variable's polynomial takes on the domain.
struct SparseColumn
{
    std::vector<std::pair<uint32_t, Fr>> entries;  // (domain row, value)
};

/// Quadratic arithmetic program in Lagrange (evaluation) form.
///
/// Rows 0..m-1 carry the R1CS constraints; rows m..m+k carry the input-consistency rows
/// A_i(omega_{m+i}) = 1 for the constant and each public input, which keep the public
/// polynomials linearly independent.
class QapInstance
{
public:
    std::size_t num_variables() const noexcept { return a_.size(); }
    std::size_t num_public() const noexcept { return num_public_; }
    std::size_t num_constraints() const noexcept { return num_constraints_; }
    const EvaluationDomain& domain() const noexcept { return domain_; }
    std::size_t domain_size() const noexcept { return domain_.size(); }

    const SparseColumn& a(std::size_t var) const { return a_.at(var); }
    const SparseColumn& b(std::size_t var) const { return b_.at(var); }
    const SparseColumn& c(std::size_t var) const { return c_.at(var); }

    /// Dense coefficient vector of A_var, B_var or C_var (which = 0, 1, 2).
    std::vector<Fr> coefficients(int which, std::size_t var) const;

    /// A_i(x), B_i(x), C_i(x) for every variable, given the Lagrange basis at x.
    struct Evaluations
    {
        std::vector<Fr> a;
        std::vector<Fr> b;
        std::vector<Fr> c;
    };
    Evaluations evaluate_at(std::span<const Fr> lagrange) const;

    /// (sum z_i A_i)(sum z_i B_i) - sum z_i C_i vanishes on the whole domain.
    bool divisible(std::span<const Fr> z) const;

private:
    friend QapInstance r1cs_to_qap(const ConstraintSystem& cs);
    explicit QapInstance(std::size_t domain_min) : domain_{domain_min} {}

    std::size_t num_public_ = 0;
    std::size_t num_constraints_ = 0;
    EvaluationDomain domain_;
    std::vector<SparseColumn> a_;
    std::vector<SparseColumn> b_;
    std::vector<SparseColumn> c_;
};

/// Throws std::invalid_argument for an empty or unfinalized system.
QapInstance r1cs_to_qap(const ConstraintSystem& cs);

/// Row values <A_j,z>, <B_j,z>, <C_j,z> over the full domain, including input-consistency rows.
struct RowEvaluations
{
    std::vector<Fr> a;
    std::vector<Fr> b;
    std::vector<Fr> c;
};
RowEvaluations evaluate_rows(const ConstraintSystem& cs, std::span<const Fr> z, std::size_t domain_size);

/// Domain size r1cs_to_qap picks for a system.
std::size_t qap_domain_size(const ConstraintSystem& cs);

/// Coefficients of h(x) = (A(x)B(x) - C(x)) / Z(x), length domain_size - 1.
std::vector<Fr> compute_quotient(const EvaluationDomain& domain, RowEvaluations rows);

}  // namespace zkoffload::snark
