"""Immutable gate-list circuit model and its basic metrics.

A circuit is a flat, ordered tuple of gates over `num_qubits` wires.  The
gate vocabulary is closed: construction rejects unknown kinds, wrong
arities, wrong parameter counts and repeated qubits.  `measure` and
`barrier` are carried along for round-tripping but are terminal markers,
not computation; the metrics and every downstream hypergraph ignore them.
"""

from __future__ import annotations

from dataclasses import dataclass, field

# kind -> (arity, parameter count); None arity means variable.
_UNARY = ("h", "p", "x", "y", "z", "rx", "rz", "s", "t", "sx")
_BINARY = ("cx", "cp", "cz", "ch", "swap")
_TERNARY = ("ccx", "cswap")
_PARAMETERIZED = ("p", "rx", "rz", "cp")

GATE_KINDS: dict[str, tuple[int | None, int]] = {}
for _k in _UNARY:
    GATE_KINDS[_k] = (1, 1 if _k in _PARAMETERIZED else 0)
for _k in _BINARY:
    GATE_KINDS[_k] = (2, 1 if _k in _PARAMETERIZED else 0)
for _k in _TERNARY:
    GATE_KINDS[_k] = (3, 0)
GATE_KINDS["mcx"] = (None, 0)      # n-1 controls + target, arity >= 2
GATE_KINDS["measure"] = (1, 0)
GATE_KINDS["barrier"] = (None, 0)  # arity >= 1

TERMINAL_KINDS = frozenset({"measure", "barrier"})


@dataclass(frozen=True)
class Gate:
    """One gate application: a kind, its qubits, and any angle parameters."""

    kind: str
    qubits: tuple[int, ...]
    params: tuple[float, ...] = ()

    def __post_init__(self) -> None:
        if self.kind not in GATE_KINDS:
            raise ValueError(f"unknown gate kind {self.kind!r}")
        arity, n_params = GATE_KINDS[self.kind]
        if arity is not None and len(self.qubits) != arity:
            raise ValueError(
                f"{self.kind} takes {arity} qubit(s), got {len(self.qubits)}"
            )
        if arity is None:
            minimum = 2 if self.kind == "mcx" else 1
            if len(self.qubits) < minimum:
                raise ValueError(f"{self.kind} takes at least {minimum} qubits")
        if len(set(self.qubits)) != len(self.qubits):
            raise ValueError(f"{self.kind} qubits must be distinct: {self.qubits}")
        if len(self.params) != n_params:
            raise ValueError(
                f"{self.kind} takes {n_params} parameter(s), got {len(self.params)}"
            )
        if any(q < 0 for q in self.qubits):
            raise ValueError("qubit indices must be non-negative")

    @property
    def is_terminal(self) -> bool:
        return self.kind in TERMINAL_KINDS

    @property
    def arity(self) -> int:
        return len(self.qubits)


@dataclass(frozen=True)
class Circuit:
    """An ordered gate list over a fixed qubit register."""

    name: str
    num_qubits: int
    gates: tuple[Gate, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        if self.num_qubits < 1:
            raise ValueError("num_qubits must be positive")
        for g in self.gates:
            for q in g.qubits:
                if q >= self.num_qubits:
                    raise ValueError(
                        f"gate {g.kind} touches qubit {q}, register has "
                        f"{self.num_qubits}"
                    )

    def body(self) -> tuple[Gate, ...]:
        """Gates that do computation (terminal markers dropped)."""
        return tuple(g for g in self.gates if not g.is_terminal)


def width(circuit: Circuit) -> int:
    """Number of distinct qubits touched by at least one non-terminal gate."""
    seen: set[int] = set()
    for g in circuit.body():
        seen.update(g.qubits)
    return len(seen)


def size(circuit: Circuit) -> int:
    """Gate count, terminal markers excluded."""
    return len(circuit.body())


def depth(circuit: Circuit) -> int:
    """Greedy as-soon-as-possible layer count.

    Every gate lands in the earliest layer after the last layer any of its
    qubits is busy in.  Terminal markers occupy no layer.
    """
    busy: dict[int, int] = {}
    deepest = 0
    for g in circuit.body():
        layer = 1 + max((busy.get(q, 0) for q in g.qubits), default=0)
        for q in g.qubits:
            busy[q] = layer
        deepest = max(deepest, layer)
    return deepest
