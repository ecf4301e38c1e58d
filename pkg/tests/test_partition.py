"""Cut metric, exhaustive optimizer, and both refinement heuristics."""

import pytest
from conftest import (
    REFERENCE_SEGMENTS,
    REFERENCE_SPATIAL_BASELINE,
    REFERENCE_SPATIAL_OPTIMUM,
    REFERENCE_TEMPORAL_BASELINE,
    REFERENCE_TEMPORAL_OPTIMUM,
)

from hypercut import (
    Bipartition,
    Hyperedge,
    Hypergraph,
    brute_force_optimum,
    build_family,
    cut_size,
    dual,
    expand_bipartite,
    fm_bipartition,
    kl_bipartition,
    midpoint_partition,
    primal_from_circuit,
    spatial_cut,
    temporal_cut,
    temporal_cut_hypergraph,
)

TRIANGLE = Hypergraph(
    (0, 1, 2, 3),
    (
        Hyperedge(0, "a", frozenset({0, 1})),
        Hyperedge(1, "b", frozenset({1, 2})),
        Hyperedge(2, "c", frozenset({2, 3})),
        Hyperedge(3, "d", frozenset({0, 1, 2})),
    ),
)


def test_bipartition_validates_labels():
    with pytest.raises(ValueError):
        Bipartition({0: "A", 1: "C"})


def test_bipartition_sizes_and_balance():
    p = Bipartition({0: "A", 1: "A", 2: "B"})
    assert p.weighted_sizes() == (2, 1)
    assert p.is_balanced()
    q = Bipartition({0: "A", 1: "A", 2: "B", 3: "B"}, {0: 3, 1: 1, 2: 1, 3: 1})
    assert q.weighted_sizes() == (4, 2)
    assert not q.is_balanced()


def test_cut_size_counts_spanning_edges():
    p = Bipartition({0: "A", 1: "A", 2: "B", 3: "B"})
    count, ids = cut_size(TRIANGLE, p)
    assert count == 2
    assert ids == [1, 3]
    whole = Bipartition({v: "A" for v in TRIANGLE.vertices})
    assert cut_size(TRIANGLE, whole) == (0, [])


def test_cut_size_requires_full_assignment():
    with pytest.raises(ValueError, match="misses"):
        cut_size(TRIANGLE, Bipartition({0: "A"}))


def test_midpoint_splits_sorted_labels():
    h = Hypergraph(
        (5, 2, 9, 0),
        (Hyperedge(0, "e", frozenset({5, 2, 9, 0})),),
    )
    p = midpoint_partition(h)
    assert p.block_vertices("A") == [0, 2]
    assert p.block_vertices("B") == [5, 9]
    odd = Hypergraph((0, 1, 2), (Hyperedge(0, "e", frozenset({0, 1, 2})),))
    assert midpoint_partition(odd).block_vertices("A") == [0, 1]


def test_brute_force_reference(reference_primal):
    p, cut = brute_force_optimum(reference_primal)
    assert cut == REFERENCE_SPATIAL_OPTIMUM
    assert p.is_balanced()
    assert p.block(0) == "A"  # first vertex pinned to break mirror symmetry


def test_brute_force_dual_reference(reference_primal):
    p, cut = brute_force_optimum(dual(reference_primal))
    assert cut == REFERENCE_TEMPORAL_OPTIMUM
    sizes = sorted(p.weighted_sizes())
    assert sizes == [5, 5]


def test_brute_force_pins_first_vertex_and_ties():
    p, cut = brute_force_optimum(TRIANGLE)
    assert p.block(0) == "A"
    assert cut == 2  # every balanced split of the triangle+tail costs 2
    # deterministic witness: lexicographically smallest A-side positions
    assert p.block_vertices("A") == [0, 1]


def test_brute_force_limits():
    with pytest.raises(ValueError):
        brute_force_optimum(Hypergraph((), ()))
    big = Hypergraph(
        tuple(range(21)),
        tuple(Hyperedge(i, "e", frozenset({i, i + 1})) for i in range(20)),
    )
    with pytest.raises(ValueError, match="20"):
        brute_force_optimum(big)
    single = Hypergraph((7,), (Hyperedge(0, "e", frozenset({7})),))
    p, cut = brute_force_optimum(single)
    assert cut == 0 and p.block(7) == "A"


def test_fm_reference_matches_optimum(reference_primal):
    p, report = fm_bipartition(reference_primal)
    assert report.cut_count == REFERENCE_SPATIAL_OPTIMUM
    assert report.baseline_cut == REFERENCE_SPATIAL_BASELINE
    assert report.reduction_pct == 0.0  # mid split is already optimal here
    assert p.is_balanced()


def test_fm_deterministic(reference_primal):
    _, r1 = fm_bipartition(reference_primal, seed=7, restarts=5)
    _, r2 = fm_bipartition(reference_primal, seed=7, restarts=5)
    assert r1.to_dict() == r2.to_dict()


def test_fm_never_worse_than_midpoint():
    for seed in range(8):
        _, c = build_family("random", 8, seed=seed)
        h = primal_from_circuit(c)
        base, _ = cut_size(h, midpoint_partition(h))
        _, report = fm_bipartition(h, seed=seed)
        assert report.cut_count <= base
        assert report.baseline_cut == base


def test_fm_blocks_exactly_balanced():
    for seed in range(6):
        _, c = build_family("random", 9, seed=seed)
        h = primal_from_circuit(c)
        p, _ = fm_bipartition(h, seed=seed)
        sizes = sorted(p.weighted_sizes())
        n = len(h.vertices)
        assert sizes == [n // 2, n - n // 2]


def test_kl_reference_matches_optimum(reference_primal):
    g = expand_bipartite(reference_primal)
    p, report = kl_bipartition(g)
    assert report.cut_count == REFERENCE_SPATIAL_OPTIMUM
    assert report.heuristic == "kl"
    # connectors never leak into the reported blocks
    reported = set(report.blocks[0]) | set(report.blocks[1])
    assert reported == set(reference_primal.vertices)


def test_kl_sandwich_and_balance():
    for seed in range(8):
        _, c = build_family("random", 8, seed=seed)
        h = primal_from_circuit(c)
        base, _ = cut_size(h, midpoint_partition(h))
        _, opt = brute_force_optimum(h)
        _, report = kl_bipartition(expand_bipartite(h), seed=seed)
        assert opt <= report.cut_count <= base


def test_spatial_cut_dispatch(reference_circuit):
    fm = spatial_cut(reference_circuit, "fm")
    kl = spatial_cut(reference_circuit, "kl")
    assert fm.cut_count == kl.cut_count == REFERENCE_SPATIAL_OPTIMUM
    assert fm.heuristic == "fm" and kl.heuristic == "kl"
    with pytest.raises(ValueError, match="heuristic"):
        spatial_cut(reference_circuit, "annealing")


def test_spatial_cut_needs_width_two():
    from hypercut import Circuit, Gate

    c = Circuit("tiny", 2, (Gate("h", (0,)),))
    with pytest.raises(ValueError, match="width"):
        spatial_cut(c)


def test_temporal_reference(reference_circuit):
    r = temporal_cut(reference_circuit)
    assert r.cut.cut_count == REFERENCE_TEMPORAL_OPTIMUM
    assert r.cut.baseline_cut == REFERENCE_TEMPORAL_BASELINE
    assert list(map(list, r.segments)) == [list(s) for s in REFERENCE_SEGMENTS]
    assert r.precedence_feasible is False
    d = r.to_dict()
    assert "segments" in d and "blocks" not in d


def test_temporal_feasible_when_halves_commute():
    from hypercut import Circuit, Gate

    # two disjoint gate groups: any split keeping groups apart is
    # realizable as a schedule, and the best cut severs zero wires
    c = Circuit(
        "c",
        4,
        (
            Gate("cx", (0, 1)),
            Gate("cx", (0, 1)),
            Gate("cx", (2, 3)),
            Gate("cx", (2, 3)),
        ),
    )
    r = temporal_cut(c)
    assert r.cut.cut_count == 0
    assert r.precedence_feasible is True


def test_temporal_hypergraph_needs_two_gates():
    h = Hypergraph((0, 1), (Hyperedge(0, "cx", frozenset({0, 1})),))
    with pytest.raises(ValueError):
        temporal_cut_hypergraph(h)


def test_report_dict_key_order(reference_circuit):
    d = spatial_cut(reference_circuit).to_dict()
    assert list(d) == [
        "cut_count",
        "cut_ids",
        "blocks",
        "baseline_cut",
        "reduction_pct",
        "heuristic",
        "seed",
        "restarts",
    ]
