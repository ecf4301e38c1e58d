"""Balanced two-way partitioning of hypergraphs.

Everything here scores with the cut-net metric (a hyperedge counts once
when its members land in both blocks) under the exact balance rule:
weighted block sizes must be ceil(W/2) and floor(W/2).

Three solvers share that contract.  `brute_force_optimum` enumerates
(small instances only) and anchors the tests.  `fm_bipartition` is a
move-based pass over gain buckets in the Fiduccia-Mattheyses style;
during a pass block weights may deviate from the exact split by at most
one unit so moves exist for even totals, but the rollback point is
always an exactly balanced prefix.  `kl_bipartition` runs
Kernighan-Lin pair swaps on a star-expanded graph; zero-weight
connector vertices are never swapped, follow their majority side after
each pass, and the reported cut is re-scored on the source hypergraph.

Both heuristics do multi-start: `restarts` seeded random balanced
starts plus (by default) the deterministic mid-split start, which makes
the best result never worse than the mid-split baseline.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

from .circuits import Circuit
from .hypergraph import (
    ExpandedGraph,
    Hypergraph,
    dual,
    expand_bipartite,
    primal_from_circuit,
)
from .rng import DEFAULT_SEED, SplitMix64, derive_seed

BLOCK_A = "A"
BLOCK_B = "B"


@dataclass
class Bipartition:
    """Vertex -> block assignment with per-vertex balance weights."""

    assignment: dict
    weights: dict = field(default_factory=dict)

    def __post_init__(self) -> None:
        bad = {b for b in self.assignment.values()} - {BLOCK_A, BLOCK_B}
        if bad:
            raise ValueError(f"unknown block labels: {sorted(bad)}")
        if not self.weights:
            self.weights = {v: 1 for v in self.assignment}

    def block(self, label) -> str:
        return self.assignment[label]

    def block_vertices(self, block: str) -> list:
        return sorted(v for v, b in self.assignment.items() if b == block)

    def weighted_sizes(self) -> tuple[int, int]:
        wa = sum(self.weights[v] for v, b in self.assignment.items() if b == BLOCK_A)
        wb = sum(self.weights[v] for v, b in self.assignment.items() if b == BLOCK_B)
        return wa, wb

    def is_balanced(self) -> bool:
        wa, wb = self.weighted_sizes()
        total = wa + wb
        return sorted((wa, wb)) == [total // 2, math.ceil(total / 2)]


@dataclass
class CutReport:
    """Result of one partitioning run, JSON-stable field names."""

    cut_count: int
    cut_ids: list[int]
    blocks: tuple[list, list]
    baseline_cut: int
    reduction_pct: float
    heuristic: str
    seed: int
    restarts: int

    def to_dict(self) -> dict:
        return {
            "cut_count": self.cut_count,
            "cut_ids": list(self.cut_ids),
            "blocks": [list(self.blocks[0]), list(self.blocks[1])],
            "baseline_cut": self.baseline_cut,
            "reduction_pct": self.reduction_pct,
            "heuristic": self.heuristic,
            "seed": self.seed,
            "restarts": self.restarts,
        }


@dataclass
class TemporalReport:
    """Gate-list split into two time segments, scored by crossing wires."""

    cut: CutReport
    segments: tuple[list, list]
    precedence_feasible: bool

    def to_dict(self) -> dict:
        out = self.cut.to_dict()
        del out["blocks"]  # same content under the temporal name below
        out["segments"] = [list(self.segments[0]), list(self.segments[1])]
        out["precedence_feasible"] = self.precedence_feasible
        return out


def cut_size(h: Hypergraph, p: Bipartition) -> tuple[int, list[int]]:
    """Cut-net score plus the sorted ids of the spanning hyperedges."""
    missing = [v for v in h.vertices if v not in p.assignment]
    if missing:
        raise ValueError(f"partition misses vertices: {missing}")
    ids = []
    for e in h.hyperedges:
        it = iter(e.members)
        first = p.assignment[next(it)]
        if any(p.assignment[v] != first for v in it):
            ids.append(e.id)
    return len(ids), sorted(ids)


def midpoint_partition(h: Hypergraph) -> Bipartition:
    """Index-order split: the first ceil(n/2) vertices (sorted by label)
    form block A.  No reordering; this is the baseline every heuristic
    is measured against."""
    if not h.vertices:
        raise ValueError("cannot split an empty hypergraph")
    ordered = sorted(h.vertices)
    k = math.ceil(len(ordered) / 2)
    assignment = {v: BLOCK_A if i < k else BLOCK_B for i, v in enumerate(ordered)}
    return Bipartition(assignment)


def reduction_pct(baseline: int, cut: int) -> float:
    return 0.0 if baseline == 0 else 100.0 * (baseline - cut) / baseline


# exhaustive oracle --------------------------------------------------------


def brute_force_optimum(h: Hypergraph) -> tuple[Bipartition, int]:
    """Enumerate every balanced bipartition (first vertex pinned to block A).

    Ties resolve to the lexicographically smallest block-A position
    tuple, so the witness is unique and stable.  Guarded to 20 vertices.
    """
    n = len(h.vertices)
    if n == 0:
        raise ValueError("cannot split an empty hypergraph")
    if n > 20:
        raise ValueError(f"exhaustive search capped at 20 vertices, got {n}")
    if n == 1:
        p = Bipartition({h.vertices[0]: BLOCK_A})
        return p, 0
    index = h.vertex_index()
    masks = [
        sum(1 << index[v] for v in e.members) for e in h.hyperedges
    ]
    sizes = sorted({n // 2, math.ceil(n / 2)})
    best_key: tuple | None = None
    best_positions: tuple[int, ...] = ()
    for k in sizes:
        for rest in itertools.combinations(range(1, n), k - 1):
            positions = (0,) + rest
            mask_a = 0
            for pos in positions:
                mask_a |= 1 << pos
            cut = 0
            for m in masks:
                inside = m & mask_a
                if inside and inside != m:
                    cut += 1
            key = (cut, positions)
            if best_key is None or key < best_key:
                best_key = key
                best_positions = positions
    in_a = set(best_positions)
    assignment = {
        v: BLOCK_A if i in in_a else BLOCK_B for i, v in enumerate(h.vertices)
    }
    return Bipartition(assignment), best_key[0]


# move-based heuristic ------------------------------------------------------


def _fm_pass(
    vlist: list,
    members: list[list[int]],
    pins: list[list[int]],
    assign: list[int],
    weights: list[int],
) -> tuple[int, int, bool]:
    """One pass of gain-bucketed single moves.  Mutates `assign`.

    Returns (start_cut, final_cut, improved).  `assign` holds 0 for
    block A and 1 for block B, indexed like `vlist`.
    """
    n = len(vlist)
    total = sum(weights)
    lo, hi = total // 2, math.ceil(total / 2)
    slack = max(weights) if weights else 1

    count = [[0, 0] for _ in members]
    for j, mem in enumerate(members):
        for i in mem:
            count[j][assign[i]] += 1
    cut = sum(1 for c in count if c[0] and c[1])
    start_cut = cut
    block_w = [0, 0]
    for i in range(n):
        block_w[assign[i]] += weights[i]

    def gain_of(i: int) -> int:
        side = assign[i]
        g = 0
        for j in pins[i]:
            same, other = count[j][side], count[j][1 - side]
            if same == 1 and other >= 1:
                g += 1
            elif other == 0 and same >= 2:
                g -= 1
        return g

    delta = max((len(p) for p in pins), default=0)
    buckets: list[set[int]] = [set() for _ in range(2 * delta + 1)]
    gain = [0] * n
    for i in range(n):
        gain[i] = gain_of(i)
        buckets[gain[i] + delta].add(i)
    locked = [False] * n

    def admissible(i: int) -> bool:
        side = assign[i]
        wa = block_w[0] - (weights[i] if side == 0 else -weights[i])
        wb = total - wa
        return min(wa, wb) >= lo - slack and max(wa, wb) <= hi + slack

    def retarget(i: int, new_gain: int) -> None:
        buckets[gain[i] + delta].discard(i)
        gain[i] = new_gain
        buckets[new_gain + delta].add(i)

    history: list[tuple[int, int, bool]] = []  # (vertex, cut after, balanced)
    while True:
        chosen = -1
        for g in range(2 * delta, -1, -1):
            bucket = buckets[g]
            if not bucket:
                continue
            for i in sorted(bucket):
                if not locked[i] and admissible(i):
                    chosen = i
                    break
            if chosen >= 0:
                break
        if chosen < 0:
            break
        i = chosen
        src = assign[i]
        dst = 1 - src
        locked[i] = True
        buckets[gain[i] + delta].discard(i)
        # Standard incremental gain updates, one hyperedge at a time.
        for j in pins[i]:
            t_count = count[j][dst]
            mem = members[j]
            if t_count == 0:
                for u in mem:
                    if not locked[u]:
                        retarget(u, gain[u] + 1)
            elif t_count == 1:
                for u in mem:
                    if not locked[u] and assign[u] == dst:
                        retarget(u, gain[u] - 1)
            count[j][src] -= 1
            count[j][dst] += 1
            f_count = count[j][src]
            if f_count == 0:
                for u in mem:
                    if not locked[u]:
                        retarget(u, gain[u] - 1)
            elif f_count == 1:
                for u in mem:
                    if not locked[u] and assign[u] == src:
                        retarget(u, gain[u] + 1)
        cut -= gain[i]
        assign[i] = dst
        block_w[src] -= weights[i]
        block_w[dst] += weights[i]
        balanced = sorted(block_w) == [lo, hi]
        history.append((i, cut, balanced))

    best_cut, best_len = start_cut, 0
    for steps, (_, c, balanced) in enumerate(history, start=1):
        if balanced and c < best_cut:
            best_cut, best_len = c, steps
    # Undo the tail beyond the best balanced prefix.
    for i, _, _ in reversed(history[best_len:]):
        assign[i] = 1 - assign[i]
    return start_cut, best_cut, best_cut < start_cut


def _fm_refine(vlist, members, pins, weights, start: dict) -> dict:
    assign = [0 if start[v] == BLOCK_A else 1 for v in vlist]
    while True:
        _, _, improved = _fm_pass(vlist, members, pins, assign, weights)
        if not improved:
            break
    return {v: (BLOCK_A if assign[i] == 0 else BLOCK_B) for i, v in enumerate(vlist)}


def _random_balanced(vertices: tuple, rng: SplitMix64) -> dict:
    order = list(vertices)
    rng.shuffle(order)
    k = math.ceil(len(order) / 2)
    return {v: BLOCK_A if i < k else BLOCK_B for i, v in enumerate(order)}


def fm_bipartition(
    h: Hypergraph,
    seed: int = DEFAULT_SEED,
    restarts: int = 10,
    include_midcut_start: bool = True,
) -> tuple[Bipartition, CutReport]:
    """Multi-start move-based bisection of a hypergraph.

    The best run by (cut, discovery order) wins.  With the mid-split
    start included the result can never be worse than the mid-split
    baseline, whose cut is reported as `baseline_cut` either way.
    """
    if len(h.vertices) < 2:
        raise ValueError("partitioning needs at least 2 vertices")
    vlist = list(h.vertices)
    index = {v: i for i, v in enumerate(vlist)}
    members = [[index[v] for v in e.members] for e in h.hyperedges]
    pins: list[list[int]] = [[] for _ in vlist]
    for j, mem in enumerate(members):
        for i in mem:
            pins[i].append(j)
    weights = [1] * len(vlist)

    baseline = midpoint_partition(h)
    baseline_cut, _ = cut_size(h, baseline)

    starts: list[dict] = []
    if include_midcut_start:
        starts.append(dict(baseline.assignment))
    for r in range(restarts):
        starts.append(_random_balanced(h.vertices, SplitMix64(derive_seed(seed, r + 1))))

    best: tuple[int, dict] | None = None
    if include_midcut_start:
        best = (baseline_cut, dict(baseline.assignment))
    for start in starts:
        refined = _fm_refine(vlist, members, pins, weights, start)
        cut, _ = cut_size(h, Bipartition(refined))
        if best is None or cut < best[0]:
            best = (cut, refined)
    cut, assignment = best
    part = Bipartition(assignment)
    count, ids = cut_size(h, part)
    report = CutReport(
        cut_count=count,
        cut_ids=ids,
        blocks=(part.block_vertices(BLOCK_A), part.block_vertices(BLOCK_B)),
        baseline_cut=baseline_cut,
        reduction_pct=reduction_pct(baseline_cut, count),
        heuristic="fm",
        seed=seed,
        restarts=restarts,
    )
    return part, report


# swap-based heuristic ------------------------------------------------------


def _adjacency(g: ExpandedGraph) -> dict:
    adj: dict = {v: {} for v in g.vertices}
    for u, v in g.edges:
        adj[u][v] = adj[u].get(v, 0) + 1
        adj[v][u] = adj[v].get(u, 0) + 1
    return adj


def _settle_connectors(g: ExpandedGraph, adj: dict, assign: dict) -> None:
    for c in g.connectors():
        votes = {BLOCK_A: 0, BLOCK_B: 0}
        for u, mult in adj[c].items():
            votes[assign[u]] += mult
        if votes[BLOCK_A] > votes[BLOCK_B]:
            assign[c] = BLOCK_A
        elif votes[BLOCK_B] > votes[BLOCK_A]:
            assign[c] = BLOCK_B
        elif c not in assign:
            assign[c] = BLOCK_A

def _kl_pass(actives: list, index: dict, adj: dict, assign: dict) -> bool:
    """One round of pair swaps; commits the best positive prefix.

    Returns True when anything was committed.  Connector vertices keep
    their blocks for the whole pass.
    """
    d_val = {}
    for v in actives:
        d = 0
        mine = assign[v]
        for u, mult in adj[v].items():
            d += mult if assign[u] != mine else -mult
        d_val[v] = d
    order = sorted(actives, key=index.__getitem__)
    free_a = [v for v in order if assign[v] == BLOCK_A]
    free_b = [v for v in order if assign[v] == BLOCK_B]
    swaps: list[tuple] = []
    gains: list[int] = []
    for _ in range(min(len(free_a), len(free_b))):
        best_gain = None
        best_pair = None
        for a in free_a:
            for b in free_b:
                gain = d_val[a] + d_val[b] - 2 * adj[a].get(b, 0)
                if best_gain is None or gain > best_gain:
                    best_gain = gain
                    best_pair = (a, b)
        a, b = best_pair
        swaps.append((a, b))
        gains.append(best_gain)
        free_a.remove(a)
        free_b.remove(b)
        for x in free_a:
            d_val[x] += 2 * adj[x].get(a, 0) - 2 * adj[x].get(b, 0)
        for y in free_b:
            d_val[y] += 2 * adj[y].get(b, 0) - 2 * adj[y].get(a, 0)
    best_total, best_len = 0, 0
    running = 0
    for k, g in enumerate(gains, start=1):
        running += g
        if running > best_total:
            best_total, best_len = running, k
    for a, b in swaps[:best_len]:
        assign[a], assign[b] = assign[b], assign[a]
    return best_len > 0


def kl_bipartition(
    g: ExpandedGraph,
    seed: int = DEFAULT_SEED,
    restarts: int = 10,
    include_midcut_start: bool = True,
) -> tuple[Bipartition, CutReport]:
    """Multi-start pair-swap bisection of a star-expanded hypergraph.

    Swaps touch only weight-1 vertices, so exact balance is preserved by
    construction.  Every candidate (including the raw mid-split when
    enabled) is scored on the source hypergraph, and the best original
    cut wins.
    """
    h = g.source
    actives = [v for v in g.vertices if g.balance_weight[v] == 1]
    if len(actives) < 2:
        raise ValueError("partitioning needs at least 2 weight-1 vertices")
    index = {v: i for i, v in enumerate(g.vertices)}
    adj = _adjacency(g)

    baseline = midpoint_partition(h)
    baseline_cut, _ = cut_size(h, baseline)

    def run(start: dict) -> dict:
        assign = dict(start)
        _settle_connectors(g, adj, assign)
        while _kl_pass(actives, index, adj, assign):
            _settle_connectors(g, adj, assign)
        return assign

    def original_assignment(assign: dict) -> dict:
        return {v: assign[v] for v in h.vertices}

    starts: list[dict] = []
    if include_midcut_start:
        starts.append(dict(baseline.assignment))
    for r in range(restarts):
        starts.append(_random_balanced(tuple(actives), SplitMix64(derive_seed(seed, r + 1))))

    best: tuple[int, dict] | None = None
    if include_midcut_start:
        best = (baseline_cut, dict(baseline.assignment))
    for start in starts:
        settled = run(start)
        original = original_assignment(settled)
        cut, _ = cut_size(h, Bipartition(original))
        if best is None or cut < best[0]:
            best = (cut, original)
    cut, assignment = best
    part = Bipartition(assignment)
    count, ids = cut_size(h, part)
    report = CutReport(
        cut_count=count,
        cut_ids=ids,
        blocks=(part.block_vertices(BLOCK_A), part.block_vertices(BLOCK_B)),
        baseline_cut=baseline_cut,
        reduction_pct=reduction_pct(baseline_cut, count),
        heuristic="kl",
        seed=seed,
        restarts=restarts,
    )
    return part, report


# circuit-level pipelines ----------------------------------------------------


def spatial_cut(
    circuit: Circuit,
    heuristic: str = "fm",
    seed: int = DEFAULT_SEED,
    restarts: int = 10,
    include_midcut_start: bool = True,
) -> CutReport:
    """Split a circuit's qubits into two balanced blocks.

    The baseline is the index-order mid split of the same qubit
    hypergraph; `reduction_pct` says how much the chosen heuristic beat
    it."""
    h = primal_from_circuit(circuit)
    if len(h.vertices) < 2:
        raise ValueError("spatial cut needs an active width of at least 2")
    if heuristic == "fm":
        _, report = fm_bipartition(h, seed, restarts, include_midcut_start)
    elif heuristic == "kl":
        _, report = kl_bipartition(
            expand_bipartite(h), seed, restarts, include_midcut_start
        )
    else:
        raise ValueError(f"unknown heuristic {heuristic!r} (expected fm or kl)")
    return report


def temporal_cut(
    circuit: Circuit,
    seed: int = DEFAULT_SEED,
    restarts: int = 10,
    include_midcut_start: bool = True,
) -> TemporalReport:
    """Split a circuit's multi-qubit gates into two balanced time segments.

    Works on the gate view (dual): vertices are gates, hyperedges are
    qubit wires, and the cut counts wires crossing between segments."""
    h = primal_from_circuit(circuit, include_unary=False)
    return temporal_cut_hypergraph(h, seed, restarts, include_midcut_start)


def temporal_cut_hypergraph(
    primal: Hypergraph,
    seed: int = DEFAULT_SEED,
    restarts: int = 10,
    include_midcut_start: bool = True,
) -> TemporalReport:
    """Temporal pipeline over an explicit qubit-view hypergraph.

    Hyperedge ids are taken as program order, both for the mid-split
    baseline (first half of the gate list) and for the precedence
    check."""
    if len(primal.hyperedges) < 2:
        raise ValueError("temporal cut needs at least 2 multi-qubit gates")
    gate_view = dual(primal)
    _, report = fm_bipartition(gate_view, seed, restarts, include_midcut_start)
    seg_a, seg_b = report.blocks
    feasible = _precedence_feasible(primal, set(seg_a), set(seg_b))
    return TemporalReport(
        cut=report,
        segments=(list(seg_a), list(seg_b)),
        precedence_feasible=feasible,
    )


def _precedence_feasible(primal: Hypergraph, seg_a: set, seg_b: set) -> bool:
    """True when one segment can run entirely before the other.

    Gates sharing a wire must keep their id order, so "A then B" works
    exactly when no wire carries a B gate with a smaller id than an A
    gate on the same wire (and symmetrically for "B then A")."""
    wires: dict = {v: [] for v in primal.vertices}
    for e in primal.hyperedges:
        for v in e.members:
            wires[v].append(e.id)

    def ordered(first: set, second: set) -> bool:
        for ids in wires.values():
            last_first = max((i for i in ids if i in first), default=None)
            first_second = min((i for i in ids if i in second), default=None)
            if (
                last_first is not None
                and first_second is not None
                and first_second < last_first
            ):
                return False
        return True

    return ordered(seg_a, seg_b) or ordered(seg_b, seg_a)
