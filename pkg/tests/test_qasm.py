"""Parser and emitter for the program-text subset."""

import math

import pytest

from hypercut import Circuit, Gate, QasmError, emit_qasm, parse_qasm

MINIMAL = """\
OPENQASM 2.0;
include "qelib1.inc";
qreg q[3];
h q[0];
cx q[0],q[1];
ccx q[0],q[1],q[2];
"""


def test_parse_minimal():
    c = parse_qasm(MINIMAL)
    assert c.num_qubits == 3
    assert [g.kind for g in c.gates] == ["h", "cx", "ccx"]
    assert c.gates[1].qubits == (0, 1)


def test_header_and_include_optional():
    c = parse_qasm("qreg q[2];\ncx q[0],q[1];\n")
    assert len(c.gates) == 1


def test_name_comment_round_trip():
    text = '// circuit: my_fancy_circuit\nqreg q[2];\nh q[0];\n'
    c = parse_qasm(text)
    assert c.name == "my_fancy_circuit"
    assert "// circuit: my_fancy_circuit" in emit_qasm(c)


def test_default_name():
    assert parse_qasm("qreg q[1];\nh q[0];\n").name == "circuit"


def test_pi_expressions():
    text = (
        "qreg q[2];\n"
        "rz(pi) q[0];\n"
        "rz(pi/2) q[0];\n"
        "rz(-pi/4) q[0];\n"
        "rz(2*pi) q[0];\n"
        "rz(3*pi/8) q[0];\n"
        "rz(0.5) q[0];\n"
    )
    c = parse_qasm(text)
    angles = [g.params[0] for g in c.gates]
    assert angles == pytest.approx(
        [math.pi, math.pi / 2, -math.pi / 4, 2 * math.pi, 3 * math.pi / 8, 0.5]
    )


def test_measure_and_barrier():
    text = (
        "qreg q[2];\ncreg c[2];\n"
        "h q[0];\nbarrier q[0],q[1];\n"
        "measure q[0] -> c[0];\nmeasure q[1] -> c[1];\n"
    )
    c = parse_qasm(text)
    kinds = [g.kind for g in c.gates]
    assert kinds == ["h", "barrier", "measure", "measure"]
    assert c.gates[1].qubits == (0, 1)


def test_whitespace_and_comments_ignored():
    text = (
        "// leading comment\n"
        "OPENQASM 2.0;  // trailing\n"
        "qreg q[2];\n\n"
        "  h   q[0] ;\n"
        "cx q[0] , q[1];  // done\n"
    )
    c = parse_qasm(text)
    assert [g.kind for g in c.gates] == ["h", "cx"]


def test_error_reports_position():
    with pytest.raises(QasmError) as err:
        parse_qasm("qreg q[2];\nh q[0]\ncx q[0],q[1];\n")
    assert err.value.line >= 2
    with pytest.raises(QasmError):
        parse_qasm("qreg q[2];\nbogus q[0];\n")
    with pytest.raises(QasmError):
        parse_qasm("h q[0];\n")  # register not declared
    with pytest.raises(QasmError):
        parse_qasm("qreg q[2];\nh q[5];\n")  # out of range


def test_duplicate_qubit_rejected_at_parse():
    with pytest.raises(QasmError):
        parse_qasm("qreg q[2];\ncx q[1],q[1];\n")


def test_emit_parse_round_trip(reference_circuit):
    text = emit_qasm(reference_circuit)
    again = parse_qasm(text)
    assert again == reference_circuit


def test_round_trip_preserves_angles():
    c = Circuit(
        "angles",
        2,
        (
            Gate("rz", (0,), (0.1234567890123456789,)),
            Gate("cp", (0, 1), (math.tau * 0.7,)),
        ),
    )
    again = parse_qasm(emit_qasm(c))
    assert again == c  # 17 significant digits survive a float round trip


def test_emit_layout():
    c = Circuit("t", 2, (Gate("h", (0,)), Gate("measure", (1,))))
    text = emit_qasm(c)
    lines = text.splitlines()
    assert lines[0] == "OPENQASM 2.0;"
    assert lines[1] == 'include "qelib1.inc";'
    assert "qreg q[2];" in lines
    assert "creg c[2];" in lines  # present because the circuit measures
    assert "measure q[1] -> c[1];" in lines
    nomeasure = emit_qasm(Circuit("t", 2, (Gate("h", (0,)),)))
    assert "creg" not in nomeasure
