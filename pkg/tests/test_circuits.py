import pytest

from hypercut import Circuit, Gate, depth, size, width


def test_gate_rejects_unknown_kind():
    with pytest.raises(ValueError, match="unknown gate kind"):
        Gate("frobnicate", (0,))


def test_gate_arity_enforced():
    with pytest.raises(ValueError):
        Gate("cx", (0,))
    with pytest.raises(ValueError):
        Gate("h", (0, 1))
    with pytest.raises(ValueError):
        Gate("ccx", (0, 1))


def test_gate_qubits_distinct():
    with pytest.raises(ValueError, match="distinct"):
        Gate("cx", (3, 3))


def test_gate_param_count():
    with pytest.raises(ValueError):
        Gate("rz", (0,))  # angle missing
    with pytest.raises(ValueError):
        Gate("x", (0,), (0.5,))  # angle not accepted
    g = Gate("cp", (0, 1), (0.25,))
    assert g.params == (0.25,)


def test_mcx_and_barrier_variable_arity():
    assert Gate("mcx", (0, 1)).arity == 2
    assert Gate("mcx", (0, 1, 2, 3)).arity == 4
    with pytest.raises(ValueError):
        Gate("mcx", (0,))
    assert Gate("barrier", (0,)).arity == 1
    with pytest.raises(ValueError):
        Gate("barrier", ())


def test_negative_qubit_rejected():
    with pytest.raises(ValueError):
        Gate("h", (-1,))


def test_circuit_qubit_range_checked():
    with pytest.raises(ValueError, match="register"):
        Circuit("c", 2, (Gate("h", (2,)),))


def test_terminals_excluded_from_metrics():
    c = Circuit(
        "c",
        3,
        (
            Gate("h", (0,)),
            Gate("cx", (0, 1)),
            Gate("barrier", (0, 1, 2)),
            Gate("measure", (0,)),
            Gate("measure", (1,)),
        ),
    )
    assert size(c) == 2
    assert width(c) == 2  # qubit 2 only appears in the barrier
    assert len(c.body()) == 2


def test_depth_is_longest_chain():
    # h(0) and h(1) are parallel; the two cx gates share qubit 1 so
    # they serialize: depth 3 total.
    c = Circuit(
        "c",
        3,
        (
            Gate("h", (0,)),
            Gate("h", (1,)),
            Gate("cx", (0, 1)),
            Gate("cx", (1, 2)),
        ),
    )
    assert depth(c) == 3
    assert depth(Circuit("empty", 3, ())) == 0


def test_width_counts_touched_qubits_only():
    c = Circuit("c", 10, (Gate("cx", (2, 7)),))
    assert width(c) == 2
    assert size(c) == 1
