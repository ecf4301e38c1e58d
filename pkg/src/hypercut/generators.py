"""Seeded circuit family generators.

Two gate vocabularies are bundled: `NATIVE` mirrors a typical
superconducting basis (rz/sx/x + cx) and `INDEPENDENT` is a wide
textbook set with two- and three-qubit entanglers.  Random circuits draw
kinds uniformly from the flattened vocabulary via SplitMix64 (see `rng`)
so a (family, n, seed) triple renders the same bytes everywhere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .circuits import GATE_KINDS, Circuit, Gate
from .rng import DEFAULT_SEED, SplitMix64, derive_seed


@dataclass(frozen=True)
class GateSet:
    name: str
    unary: tuple[str, ...]
    binary: tuple[str, ...]
    ternary: tuple[str, ...]

    def kinds(self) -> tuple[str, ...]:
        return self.unary + self.binary + self.ternary


NATIVE = GateSet("native", unary=("rz", "sx", "x"), binary=("cx",), ternary=())
INDEPENDENT = GateSet(
    "independent",
    unary=("h", "p", "x", "y", "z", "rx", "rz", "s", "t"),
    binary=("cx", "cp", "swap", "ch", "cz"),
    ternary=("ccx", "cswap"),
)

GATE_SETS = {gs.name: gs for gs in (NATIVE, INDEPENDENT)}

_PARAM_KINDS = frozenset({"p", "rx", "rz", "cp"})


def gen_full(n: int) -> Circuit:
    """Fully coupled circuit: one cz per qubit pair, pairs in lexicographic order."""
    if n < 2:
        raise ValueError("gen_full needs n >= 2")
    gates = [
        Gate("cz", (i, j)) for i in range(n - 1) for j in range(i + 1, n)
    ]
    return Circuit(name=f"full_{n}", num_qubits=n, gates=tuple(gates))


def gen_random(
    n: int,
    gate_set: GateSet,
    seed: int = DEFAULT_SEED,
    depth_factor: float = 2.0,
) -> Circuit:
    """Random circuit grown until its layered depth first reaches ceil(depth_factor * n).

    Per gate the draw order is fixed: kind (uniform over the vocabulary),
    then an ordered tuple of distinct qubits, then any angle in [0, 2*pi).
    Kinds whose arity exceeds n are left out of the pool, so n=2 works
    with vocabularies that contain three-qubit gates.
    """
    if n < 2:
        raise ValueError("gen_random needs n >= 2")
    target = math.ceil(depth_factor * n)
    pool = [k for k in gate_set.kinds() if _arity(k) <= n]
    if not pool:
        raise ValueError("gate set has no kind that fits the register")
    rng = SplitMix64(derive_seed(seed, 0))
    gates: list[Gate] = []
    busy = [0] * n
    deepest = 0
    while deepest < target:
        kind = pool[rng.randrange(len(pool))]
        qubits = rng.sample_distinct(n, _arity(kind))
        params = (rng.angle(),) if kind in _PARAM_KINDS else ()
        gates.append(Gate(kind, qubits, params))
        layer = 1 + max(busy[q] for q in qubits)
        for q in qubits:
            busy[q] = layer
        deepest = max(deepest, layer)
    return Circuit(
        name=f"random_{gate_set.name}_{n}_s{seed}",
        num_qubits=n,
        gates=tuple(gates),
    )


def _arity(kind: str) -> int:
    arity, _ = GATE_KINDS[kind]
    assert arity is not None  # vocabularies hold fixed-arity kinds only
    return arity


def _qft_ladder(n: int) -> list[Gate]:
    gates = []
    for i in range(n):
        gates.append(Gate("h", (i,)))
        for k in range(i + 1, n):
            gates.append(Gate("cp", (k, i), (math.pi / 2 ** (k - i),)))
    return gates


def gen_qft(n: int) -> Circuit:
    """Quantum Fourier transform: h/controlled-phase ladder plus the final swaps."""
    if n < 1:
        raise ValueError("gen_qft needs n >= 1")
    gates = _qft_ladder(n)
    for i in range(n // 2):
        gates.append(Gate("swap", (i, n - 1 - i)))
    return Circuit(name=f"qft_{n}", num_qubits=n, gates=tuple(gates))


def gen_qpe_exact(m: int, phase_index: int | None = None) -> Circuit:
    """Phase estimation with an m-qubit estimation register and one target.

    The target (qubit m) is prepared in |1> and the controlled-phase
    angles encode phase_index / 2**m exactly; the default phase_index is
    2**m - 3, clamped to at least 1.  Ends with the inverse of the
    swapless QFT ladder on the estimation register.
    """
    if m < 1:
        raise ValueError("gen_qpe_exact needs m >= 1")
    if phase_index is None:
        phase_index = max(1, 2**m - 3)
    if not 0 <= phase_index < 2**m:
        raise ValueError(f"phase_index must lie in [0, 2**{m})")
    gates = [Gate("h", (k,)) for k in range(m)]
    gates.append(Gate("x", (m,)))
    for k in range(m):
        angle = math.tau * phase_index * 2**k / 2**m
        gates.append(Gate("cp", (k, m), (angle,)))
    for g in reversed(_qft_ladder(m)):
        if g.kind == "cp":
            gates.append(Gate("cp", g.qubits, (-g.params[0],)))
        else:
            gates.append(g)
    return Circuit(name=f"qpe_{m}_p{phase_index}", num_qubits=m + 1, gates=tuple(gates))


FAMILIES = (
    "full",
    "random",
    "random-native",
    "random-independent",
    "qft",
    "qpe",
    "grover",
)


def build_family(
    family: str,
    n: int,
    gateset: str = "independent",
    seed: int = DEFAULT_SEED,
    depth_factor: float = 2.0,
    phase_index: int | None = None,
    iterations: int = 1,
) -> tuple[str, Circuit]:
    """Build a named circuit family at width n.

    Returns the canonical family tag (random resolves to its gate set)
    and the circuit.  For qpe, n counts all qubits, so the estimation
    register has n - 1.
    """
    if family == "full":
        return "full", gen_full(n)
    if family in ("random", "random-native", "random-independent"):
        name = family.split("-", 1)[1] if "-" in family else gateset
        if name not in GATE_SETS:
            raise ValueError(f"unknown gate set {name!r}")
        return f"random-{name}", gen_random(n, GATE_SETS[name], seed, depth_factor)
    if family == "qft":
        return "qft", gen_qft(n)
    if family == "qpe":
        return "qpe", gen_qpe_exact(n - 1, phase_index)
    if family == "grover":
        return "grover", gen_grover_noancilla(n, iterations)
    raise ValueError(f"unknown family {family!r} (expected one of {FAMILIES})")


def gen_grover_noancilla(n: int, iterations: int = 1) -> Circuit:
    """Grover search without ancillas: mcx oracle plus mcx diffusion per iteration."""
    if n < 2:
        raise ValueError("gen_grover_noancilla needs n >= 2")
    if iterations < 1:
        raise ValueError("iterations must be positive")
    target = n - 1
    everyone = tuple(range(n))
    gates = [Gate("h", (q,)) for q in range(n)]
    for _ in range(iterations):
        # Oracle on the all-ones string.
        gates.append(Gate("h", (target,)))
        gates.append(Gate("mcx", everyone))
        gates.append(Gate("h", (target,)))
        # Diffusion.
        gates.extend(Gate("h", (q,)) for q in range(n))
        gates.extend(Gate("x", (q,)) for q in range(n))
        gates.append(Gate("h", (target,)))
        gates.append(Gate("mcx", everyone))
        gates.append(Gate("h", (target,)))
        gates.extend(Gate("x", (q,)) for q in range(n))
        gates.extend(Gate("h", (q,)) for q in range(n))
    return Circuit(name=f"grover_{n}_i{iterations}", num_qubits=n, gates=tuple(gates))
