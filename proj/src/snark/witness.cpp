// zkoffload: verifiable computation offloading
// Copyright 2026 The zkoffload Authors.
// SPDX-License-Identifier: Apache-2.0

#include <zkoffload/snark/witness.hpp>

namespace zkoffload::snark
{
WitnessResult compute_witness(const Circuit& circuit, std::span<const Fr> public_inputs,
    std::span<const Fr> private_inputs)
{
    const auto& cs = circuit.system();
    if (public_inputs.size() != cs.num_public())
        throw ShapeError("compute_witness: expected " + std::to_string(cs.num_public()) +
                         " public inputs, got " + std::to_string(public_inputs.size()));
    const auto& slots = circuit.private_inputs();
    if (private_inputs.size() != slots.size())
        throw ShapeError("compute_witness: expected " + std::to_string(slots.size()) +
                         " private inputs, got " + std::to_string(private_inputs.size()));

    Assignment z = cs.blank_assignment();
    std::copy(public_inputs.begin(), public_inputs.end(), z.begin() + 1);
    for (std::size_t i = 0; i < slots.size(); ++i)
        z[slots[i].index] = private_inputs[i];
    circuit.generate(z);

    if (const auto bad = cs.first_unsatisfied(z))
        return WitnessFailure{*bad, "constraint " + std::to_string(*bad) + " is violated"};
    return z;
}
}  // namespace zkoffload::snark
