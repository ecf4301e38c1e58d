"""Shared fixtures: the six-qubit reference circuit and its hypergraph.

The reference circuit has ten multi-qubit gates over qubits 0..5 and is
small enough for the exhaustive optimizer, so every heuristic result
can be checked against ground truth.
"""

from __future__ import annotations

import pytest

from hypercut import Circuit, Gate, primal_from_circuit

REFERENCE_GATES = (
    Gate("ccx", (0, 1, 5)),
    Gate("cx", (0, 3)),
    Gate("ccx", (1, 2, 4)),
    Gate("cx", (0, 2)),
    Gate("ccx", (3, 4, 5)),
    Gate("ccx", (1, 2, 5)),
    Gate("ccx", (0, 3, 5)),
    Gate("cx", (0, 1)),
    Gate("ccx", (2, 4, 5)),
    Gate("ccx", (0, 2, 3)),
)

# Incidence of the qubit view: one row per gate, one column per qubit.
REFERENCE_INCIDENCE = (
    (1, 1, 0, 0, 0, 1),
    (1, 0, 0, 1, 0, 0),
    (0, 1, 1, 0, 1, 0),
    (1, 0, 1, 0, 0, 0),
    (0, 0, 0, 1, 1, 1),
    (0, 1, 1, 0, 0, 1),
    (1, 0, 0, 1, 0, 1),
    (1, 1, 0, 0, 0, 0),
    (0, 0, 1, 0, 1, 1),
    (1, 0, 1, 1, 0, 0),
)

# Ground truth for the reference circuit, frozen from the exhaustive
# optimizer: both cuts, their baselines, and the temporal split.
REFERENCE_SPATIAL_OPTIMUM = 7
REFERENCE_SPATIAL_BASELINE = 7
REFERENCE_TEMPORAL_OPTIMUM = 4
REFERENCE_TEMPORAL_BASELINE = 6
REFERENCE_SEGMENTS = ([1, 3, 4, 6, 9], [0, 2, 5, 7, 8])


@pytest.fixture
def reference_circuit() -> Circuit:
    return Circuit("reference", 6, REFERENCE_GATES)


@pytest.fixture
def reference_primal(reference_circuit):
    return primal_from_circuit(reference_circuit)
