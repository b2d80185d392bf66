# zkoffload: verifiable computation offloading
# Copyright 2026 The zkoffload Authors.
# SPDX-License-Identifier: Apache-2.0

"""Python bindings for zkoffload.

The native module exposes the field and curve primitives, the circuit hash, the TSP
helpers, Groth16 proving for tour circuits, the ledger simulator and the harness flows.
"""

from ._core import (  # noqa: F401
    TIERS,
    DecodeError,
    KeyStore,
    Ledger,
    LedgerError,
    MapRegistry,
    ReplayError,
    TspError,
    TspMap,
    create_task,
    ensure_verifier,
    finish_task,
    fq_modulus,
    fr_inverse,
    fr_modulus,
    g1_mul,
    g2_mul,
    hash_cities,
    hash_elements,
    pad_tour,
    pairing,
    prove_tour,
    public_inputs,
    run_benchmark,
    run_provider,
    solve_exact,
    solve_heuristic,
    tier_for,
    tour_length,
    validate_tour,
    verify_proof,
)

__version__ = "0.1.0"
