"""hypercut: spatial and temporal cutting of quantum circuits via
balanced hypergraph bisection."""

from .analysis import (
    CouplingMetrics,
    SweepConfig,
    SweepRow,
    coupling_base,
    coupling_ratio,
    full_circuit_closed_forms,
    rows_to_csv,
    run_sweep,
    summarize,
    summary_lines,
    svg_plot,
)
from .circuits import Circuit, Gate, depth, size, width
from .generators import (
    FAMILIES,
    GATE_SETS,
    INDEPENDENT,
    NATIVE,
    GateSet,
    build_family,
    gen_full,
    gen_grover_noancilla,
    gen_qft,
    gen_qpe_exact,
    gen_random,
)
from .hypergraph import (
    Connector,
    ExpandedGraph,
    Hyperedge,
    Hypergraph,
    IncidenceMatrix,
    dual,
    expand_bipartite,
    export_hmetis,
    from_json,
    import_hmetis,
    incidence,
    primal_from_circuit,
    to_json,
)
from .partition import (
    Bipartition,
    CutReport,
    TemporalReport,
    brute_force_optimum,
    cut_size,
    fm_bipartition,
    kl_bipartition,
    midpoint_partition,
    spatial_cut,
    temporal_cut,
    temporal_cut_hypergraph,
)
from .qasm import QasmError, emit_qasm, parse_qasm
from .rng import DEFAULT_SEED, SplitMix64, derive_seed

__version__ = "0.1.0"

__all__ = [
    "Bipartition",
    "Circuit",
    "Connector",
    "CouplingMetrics",
    "CutReport",
    "DEFAULT_SEED",
    "ExpandedGraph",
    "FAMILIES",
    "GATE_SETS",
    "GateSet",
    "Gate",
    "Hyperedge",
    "Hypergraph",
    "INDEPENDENT",
    "IncidenceMatrix",
    "NATIVE",
    "QasmError",
    "SplitMix64",
    "SweepConfig",
    "SweepRow",
    "TemporalReport",
    "brute_force_optimum",
    "build_family",
    "coupling_base",
    "coupling_ratio",
    "cut_size",
    "depth",
    "derive_seed",
    "dual",
    "emit_qasm",
    "expand_bipartite",
    "export_hmetis",
    "fm_bipartition",
    "from_json",
    "full_circuit_closed_forms",
    "gen_full",
    "gen_grover_noancilla",
    "gen_qft",
    "gen_qpe_exact",
    "gen_random",
    "import_hmetis",
    "incidence",
    "kl_bipartition",
    "midpoint_partition",
    "parse_qasm",
    "primal_from_circuit",
    "rows_to_csv",
    "run_sweep",
    "size",
    "spatial_cut",
    "summarize",
    "summary_lines",
    "svg_plot",
    "temporal_cut",
    "temporal_cut_hypergraph",
    "to_json",
    "width",
]
