"""Hypergraphs over circuits, their duals, and exchange formats.

Two views of one circuit: the qubit view ("primal", vertices are qubits
and every multi-vertex gate is a hyperedge) and the gate view ("dual",
vertices are gate instances and every qubit wire is a hyperedge).  The
views are exact transposes of each other's incidence matrices, and
taking the dual twice returns the original structure.

Also here: the star expansion that turns a hypergraph into a plain
graph for pair-swap partitioning, plus hMETIS and JSON serialization.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import BinaryIO

from .circuits import Circuit


@dataclass(frozen=True)
class Hyperedge:
    id: int
    label: str
    members: frozenset

    def arity(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class Hypergraph:
    vertices: tuple
    hyperedges: tuple[Hyperedge, ...]
    role: str = "generic"  # "primal" | "dual" | "generic"

    def __post_init__(self) -> None:
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("vertex labels must be unique")
        vset = set(self.vertices)
        seen_ids = set()
        for e in self.hyperedges:
            if not e.members:
                raise ValueError(f"hyperedge {e.id} has no members")
            if not e.members <= vset:
                raise ValueError(f"hyperedge {e.id} references unknown vertices")
            if e.id in seen_ids:
                raise ValueError(f"duplicate hyperedge id {e.id}")
            seen_ids.add(e.id)

    def vertex_index(self) -> dict:
        return {v: i for i, v in enumerate(self.vertices)}

    def degrees(self) -> dict:
        deg = {v: 0 for v in self.vertices}
        for e in self.hyperedges:
            for v in e.members:
                deg[v] += 1
        return deg

    def same_structure(self, other: Hypergraph) -> bool:
        """Equality on vertices, hyperedge ids and memberships (labels/role ignored)."""
        return self.vertices == other.vertices and [
            (e.id, e.members) for e in self.hyperedges
        ] == [(e.id, e.members) for e in other.hyperedges]


@dataclass(frozen=True)
class IncidenceMatrix:
    """0/1 matrix, one row per hyperedge and one column per vertex."""

    rows: tuple  # hyperedge ids, in hyperedge order
    cols: tuple  # vertex labels, in vertex order
    cells: tuple[tuple[int, ...], ...]

    def transpose(self) -> "IncidenceMatrix":
        flipped = tuple(zip(*self.cells)) if self.cells else ()
        return IncidenceMatrix(rows=self.cols, cols=self.rows, cells=flipped)


def incidence(h: Hypergraph) -> IncidenceMatrix:
    cells = tuple(
        tuple(1 if v in e.members else 0 for v in h.vertices)
        for e in h.hyperedges
    )
    return IncidenceMatrix(
        rows=tuple(e.id for e in h.hyperedges),
        cols=tuple(h.vertices),
        cells=cells,
    )


def primal_from_circuit(circuit: Circuit, include_unary: bool = True) -> Hypergraph:
    """Qubit-view hypergraph: vertices in first-appearance order, one
    hyperedge per non-terminal gate (unary gates optional)."""
    vertices: list[int] = []
    seen: set[int] = set()
    edges: list[Hyperedge] = []
    body = [g for g in circuit.body() if include_unary or g.arity >= 2]
    for g in body:
        for q in g.qubits:
            if q not in seen:
                seen.add(q)
                vertices.append(q)
    for i, g in enumerate(body):
        edges.append(Hyperedge(id=i, label=g.kind, members=frozenset(g.qubits)))
    return Hypergraph(tuple(vertices), tuple(edges), role="primal")


def dual(h: Hypergraph) -> Hypergraph:
    """Swap the roles of vertices and hyperedges.

    Vertices of the result are the hyperedge ids of `h` (order kept);
    each original vertex becomes a hyperedge collecting the ids it was
    a member of.  When every vertex is an int it doubles as the new
    hyperedge id, so applying this twice reproduces the original
    structure exactly; otherwise ids fall back to vertex positions.
    Rejects isolated vertices, which would turn into empty hyperedges.
    """
    deg = h.degrees()
    isolated = [v for v in h.vertices if deg[v] == 0]
    if isolated:
        raise ValueError(f"isolated vertices have no dual hyperedge: {isolated}")
    members_of: dict = {v: [] for v in h.vertices}
    for e in h.hyperedges:
        for v in e.members:
            members_of[v].append(e.id)
    int_labeled = all(isinstance(v, int) for v in h.vertices)
    edges = tuple(
        Hyperedge(
            id=v if int_labeled else i,
            label=f"q{v}" if isinstance(v, int) else str(v),
            members=frozenset(members_of[v]),
        )
        for i, v in enumerate(h.vertices)
    )
    flip = {"primal": "dual", "dual": "primal"}
    return Hypergraph(
        vertices=tuple(e.id for e in h.hyperedges),
        hyperedges=edges,
        role=flip.get(h.role, "generic"),
    )


@dataclass(frozen=True)
class Connector:
    """Zero-weight helper vertex standing in for one arity >= 3 hyperedge."""

    edge_id: int


@dataclass(frozen=True)
class ExpandedGraph:
    """Star expansion of a hypergraph into an ordinary multigraph.

    Arity-2 hyperedges become direct edges; arity >= 3 hyperedges each
    contribute a Connector joined to every member; arity-1 hyperedges
    vanish (they can never be cut).  `origin[i]` is the hyperedge id
    edge i came from, and `balance_weight` is 1 for original vertices
    and 0 for connectors.
    """

    vertices: tuple
    edges: tuple[tuple, ...]
    origin: tuple[int, ...]
    balance_weight: dict = field(hash=False)
    source: Hypergraph

    def connectors(self) -> tuple[Connector, ...]:
        return tuple(v for v in self.vertices if isinstance(v, Connector))


def expand_bipartite(h: Hypergraph) -> ExpandedGraph:
    index = h.vertex_index()

    def ordered(e: Hyperedge) -> list:
        return sorted(e.members, key=index.__getitem__)

    verts = list(h.vertices)
    edges: list[tuple] = []
    origin: list[int] = []
    for e in h.hyperedges:
        if e.arity() == 1:
            continue
        if e.arity() == 2:
            u, v = ordered(e)
            edges.append((u, v))
            origin.append(e.id)
        else:
            c = Connector(e.id)
            verts.append(c)
            for m in ordered(e):
                edges.append((c, m))
                origin.append(e.id)
    weight = {v: 0 if isinstance(v, Connector) else 1 for v in verts}
    return ExpandedGraph(
        vertices=tuple(verts),
        edges=tuple(edges),
        origin=tuple(origin),
        balance_weight=weight,
        source=h,
    )


# serialization ----------------------------------------------------------


def export_hmetis(h: Hypergraph, sink: BinaryIO) -> None:
    """Write the plain hMETIS format: a count line, then one line of
    1-based vertex indices per hyperedge."""
    index = h.vertex_index()
    lines = [f"{len(h.hyperedges)} {len(h.vertices)}"]
    for e in h.hyperedges:
        ids = sorted(index[v] + 1 for v in e.members)
        lines.append(" ".join(str(i) for i in ids))
    sink.write(("\n".join(lines) + "\n").encode("ascii"))


def import_hmetis(source: BinaryIO) -> Hypergraph:
    """Read the plain hMETIS format back; vertices are labeled 1..n."""
    text = source.read().decode("ascii")
    rows = [line.split() for line in text.splitlines() if line.strip()]
    if not rows or len(rows[0]) != 2:
        raise ValueError("hMETIS input must start with '<edges> <vertices>'")
    n_edges, n_vertices = (int(x) for x in rows[0])
    if len(rows) - 1 != n_edges:
        raise ValueError(
            f"header promises {n_edges} hyperedges, file has {len(rows) - 1}"
        )
    edges = []
    for i, row in enumerate(rows[1:]):
        members = frozenset(int(x) for x in row)
        if not all(1 <= m <= n_vertices for m in members):
            raise ValueError(f"hyperedge {i} references vertices outside 1..{n_vertices}")
        edges.append(Hyperedge(id=i, label=f"e{i}", members=members))
    return Hypergraph(tuple(range(1, n_vertices + 1)), tuple(edges))


def to_json(h: Hypergraph) -> str:
    index = h.vertex_index()
    payload = {
        "vertices": list(h.vertices),
        "hyperedges": [
            {
                "id": e.id,
                "label": e.label,
                "members": sorted(e.members, key=index.__getitem__),
            }
            for e in h.hyperedges
        ],
    }
    return json.dumps(payload, indent=2) + "\n"


def from_json(text: str, role: str = "generic") -> Hypergraph:
    payload = json.loads(text)
    edges = tuple(
        Hyperedge(
            id=int(e["id"]),
            label=str(e.get("label", f"e{e['id']}")),
            members=frozenset(e["members"]),
        )
        for e in payload["hyperedges"]
    )
    return Hypergraph(tuple(payload["vertices"]), edges, role=payload.get("role", role))
