// zkoffload: verifiable computation offloading
// Copyright 2026 The zkoffload Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <zkoffload/constraint/constraint_system.hpp>

#include <span>
#include <stdexcept>
#include <string>
#include <variant>

namespace zkoffload::snark
{
using constraint::Assignment;
using algebra::Fr;
using constraint::Circuit;

/// The inputs do not satisfy the circuit (wrong result, malformed path, ...).
struct WitnessFailure
{
    std::size_t constraint_index = 0;
    std::string message;
};

using WitnessResult = std::variant<Assignment, WitnessFailure>;

class ShapeError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

/// Fills z = [1, public_inputs, private values] and runs the circuit's generators.
/// private_inputs are matched in order against circuit.private_inputs().
/// Throws ShapeError on a length mismatch.
WitnessResult compute_witness(const Circuit& circuit, std::span<const Fr> public_inputs,
    std::span<const Fr> private_inputs);

inline bool succeeded(const WitnessResult& r) noexcept
{
    return std::holds_alternative<Assignment>(r);
}

}  // namespace zkoffload::snark
