"""Coupling metrics, closed forms for fully coupled circuits, and sweeps.

A sweep renders a grid of (family, n, seed, heuristic) spatial-cut runs
into rows with a stable CSV schema.  Sweeps are deterministic by
default: the wall-time column is written as 0 unless `timing` is
switched on, so identical configs produce byte-identical files.
Medians, never means, summarize seed noise.
"""

from __future__ import annotations

import csv
import io
import math
import statistics
import time
from dataclasses import dataclass, field

from .circuits import Circuit, width
from .generators import FAMILIES, GATE_SETS, build_family
from .partition import spatial_cut
from .rng import DEFAULT_SEED

CSV_COLUMNS = (
    "family",
    "n",
    "seed",
    "heuristic",
    "midcut",
    "mincut",
    "reduction_pct",
    "cb",
    "cr",
    "wall_time_ms",
    "error",
)

# Default grid for reduction-vs-size curves.
DEFAULT_N_LIST = (4, 8, 12, 16, 24, 32, 48, 64, 96, 120)


@dataclass(frozen=True)
class CouplingMetrics:
    n: int
    coupling_base: int
    multiqubit_gates: int
    coupling_ratio: float

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "cb": self.coupling_base,
            "multiqubit_gates": self.multiqubit_gates,
            "cr": self.coupling_ratio,
        }


def coupling_base(n: int) -> int:
    """Distinct qubit pairs of an n-qubit device: n*(n-1)/2."""
    if n < 2:
        raise ValueError("coupling base needs n >= 2")
    return n * (n - 1) // 2


def coupling_ratio(circuit: Circuit) -> CouplingMetrics:
    """Multi-qubit gate count relative to the coupling base of the
    circuit's active width."""
    n = width(circuit)
    if n < 2:
        raise ValueError("coupling ratio needs an active width of at least 2")
    base = coupling_base(n)
    multi = sum(1 for g in circuit.body() if g.arity >= 2)
    return CouplingMetrics(
        n=n,
        coupling_base=base,
        multiqubit_gates=multi,
        coupling_ratio=multi / base,
    )


def full_circuit_closed_forms(n_max: int) -> list[tuple[int, int, int]]:
    """(n, pair count, balanced-split cut) for n = 4..n_max.

    In a fully coupled circuit every balanced split cuts exactly
    ceil(n/2)*floor(n/2) pair gates, so the mid split is already optimal.
    """
    if n_max < 4:
        raise ValueError("closed forms start at n = 4")
    return [
        (n, n * (n - 1) // 2, math.ceil(n / 2) * (n // 2))
        for n in range(4, n_max + 1)
    ]


# sweeps ---------------------------------------------------------------------


@dataclass
class SweepConfig:
    families: list[str]
    n_list: list[int] = field(default_factory=lambda: list(DEFAULT_N_LIST))
    seeds: list[int] = field(default_factory=lambda: [DEFAULT_SEED])
    gateset: str = "independent"
    heuristics: list[str] = field(default_factory=lambda: ["fm"])
    restarts: int = 10
    include_midcut_start: bool = True
    depth_factor: float = 2.0
    timing: bool = False

    @classmethod
    def from_dict(cls, raw: dict) -> SweepConfig:
        known = {f for f in cls.__dataclass_fields__}
        unknown = set(raw) - known
        if unknown:
            raise ValueError(f"unknown sweep config keys: {sorted(unknown)}")
        if "families" not in raw:
            raise ValueError("sweep config needs a 'families' list")
        cfg = dict(raw)
        seeds = cfg.get("seeds")
        if isinstance(seeds, int):
            cfg["seeds"] = list(range(seeds))
        out = cls(**cfg)
        for fam in out.families:
            if fam not in FAMILIES:
                raise ValueError(f"unknown family {fam!r} (expected one of {FAMILIES})")
        if out.gateset not in GATE_SETS:
            raise ValueError(f"unknown gate set {out.gateset!r}")
        for heur in out.heuristics:
            if heur not in ("fm", "kl"):
                raise ValueError(f"unknown heuristic {heur!r}")
        return out


@dataclass
class SweepRow:
    family: str
    n: int
    seed: int
    heuristic: str
    midcut: int | None = None
    mincut: int | None = None
    reduction_pct: float | None = None
    cb: int | None = None
    cr: float | None = None
    wall_time_ms: int = 0
    error: str = ""

    def to_csv_values(self) -> list:
        def cell(x):
            return "" if x is None else x

        return [
            self.family,
            self.n,
            self.seed,
            self.heuristic,
            cell(self.midcut),
            cell(self.mincut),
            cell(self.reduction_pct),
            cell(self.cb),
            cell(self.cr),
            self.wall_time_ms,
            self.error,
        ]


def run_sweep(config: SweepConfig) -> list[SweepRow]:
    """One spatial-cut row per (family, n, seed, heuristic), config order.

    A failing cell records its error message in the row instead of
    aborting the sweep."""
    rows: list[SweepRow] = []
    for family in config.families:
        for n in config.n_list:
            for seed in config.seeds:
                for heuristic in config.heuristics:
                    started = time.perf_counter() if config.timing else 0.0
                    try:
                        tag, circuit = build_family(
                            family,
                            n,
                            gateset=config.gateset,
                            seed=seed,
                            depth_factor=config.depth_factor,
                        )
                        report = spatial_cut(
                            circuit,
                            heuristic=heuristic,
                            seed=seed,
                            restarts=config.restarts,
                            include_midcut_start=config.include_midcut_start,
                        )
                        metrics = coupling_ratio(circuit)
                        elapsed = (
                            int(round((time.perf_counter() - started) * 1000))
                            if config.timing
                            else 0
                        )
                        rows.append(
                            SweepRow(
                                family=tag,
                                n=n,
                                seed=seed,
                                heuristic=heuristic,
                                midcut=report.baseline_cut,
                                mincut=report.cut_count,
                                reduction_pct=report.reduction_pct,
                                cb=metrics.coupling_base,
                                cr=metrics.coupling_ratio,
                                wall_time_ms=elapsed,
                            )
                        )
                    except ValueError as exc:
                        rows.append(
                            SweepRow(
                                family=family,
                                n=n,
                                seed=seed,
                                heuristic=heuristic,
                                error=str(exc),
                            )
                        )
    return rows


def rows_to_csv(rows: list[SweepRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for row in rows:
        writer.writerow(row.to_csv_values())
    return buf.getvalue()


def summarize(rows: list[SweepRow]) -> dict:
    """Per-(family, n) median reduction plus a first-to-last trend per family."""
    groups: dict[tuple[str, int], list[float]] = {}
    family_order: list[str] = []
    for row in rows:
        if row.error or row.reduction_pct is None:
            continue
        groups.setdefault((row.family, row.n), []).append(row.reduction_pct)
        if row.family not in family_order:
            family_order.append(row.family)
    medians: dict[str, list[tuple[int, float]]] = {f: [] for f in family_order}
    for (family, n), values in groups.items():
        medians[family].append((n, statistics.median(values)))
    for family in medians:
        medians[family].sort()
    trends: dict[str, dict] = {}
    for family, points in medians.items():
        if not points:
            continue
        (first_n, first_med), (last_n, last_med) = points[0], points[-1]
        if last_med < first_med:
            direction = "decreasing"
        elif last_med > first_med:
            direction = "increasing"
        else:
            direction = "flat"
        trends[family] = {
            "first_n": first_n,
            "first_median": first_med,
            "last_n": last_n,
            "last_median": last_med,
            "direction": direction,
        }
    return {"medians": medians, "trends": trends}


def summary_lines(summary: dict) -> list[str]:
    lines = []
    for family, points in summary["medians"].items():
        for n, med in points:
            lines.append(f"summary: {family} n={n} median reduction {med:.2f}%")
    for family, t in summary["trends"].items():
        lines.append(
            "summary: {f} trend n={a} {x:.2f}% -> n={b} {y:.2f}% ({d})".format(
                f=family,
                a=t["first_n"],
                x=t["first_median"],
                b=t["last_n"],
                y=t["last_median"],
                d=t["direction"],
            )
        )
    return lines


def svg_plot(rows: list[SweepRow], title: str = "median reduction vs n") -> str:
    """Static line plot of the summary medians.  Pure string rendering,
    identical bytes for identical rows."""
    summary = summarize(rows)
    medians = summary["medians"]
    w, h = 640, 420
    left, right, top, bottom = 60, 20, 36, 48
    plot_w, plot_h = w - left - right, h - top - bottom
    xs = sorted({n for pts in medians.values() for n, _ in pts})
    ys = [m for pts in medians.values() for _, m in pts]
    if not xs:
        return (
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}">'
            "<text x='20' y='40'>no data</text></svg>\n"
        )
    x_lo, x_hi = min(xs), max(xs)
    y_lo, y_hi = min(0.0, min(ys)), max(ys) or 1.0
    if x_hi == x_lo:
        x_hi = x_lo + 1
    if y_hi == y_lo:
        y_hi = y_lo + 1

    def px(x: float) -> float:
        return left + (x - x_lo) / (x_hi - x_lo) * plot_w

    def py(y: float) -> float:
        return top + (1 - (y - y_lo) / (y_hi - y_lo)) * plot_h

    colors = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b")
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" '
        f'viewBox="0 0 {w} {h}" font-family="sans-serif" font-size="12">',
        f'<rect width="{w}" height="{h}" fill="white"/>',
        f'<text x="{left}" y="20" font-size="14">{title}</text>',
        f'<line x1="{left}" y1="{top}" x2="{left}" y2="{top + plot_h}" stroke="black"/>',
        f'<line x1="{left}" y1="{top + plot_h}" x2="{left + plot_w}" '
        f'y2="{top + plot_h}" stroke="black"/>',
    ]
    for x in xs:
        parts.append(
            f'<text x="{px(x):.1f}" y="{h - 28}" text-anchor="middle">{x}</text>'
        )
    for frac in (0.0, 0.25, 0.5, 0.75, 1.0):
        y = y_lo + frac * (y_hi - y_lo)
        parts.append(
            f'<text x="{left - 6}" y="{py(y):.1f}" text-anchor="end" '
            f'dominant-baseline="middle">{y:.0f}%</text>'
        )
    for i, (family, pts) in enumerate(medians.items()):
        color = colors[i % len(colors)]
        coords = " ".join(f"{px(n):.1f},{py(m):.1f}" for n, m in pts)
        parts.append(
            f'<polyline fill="none" stroke="{color}" stroke-width="2" points="{coords}"/>'
        )
        for n, m in pts:
            parts.append(
                f'<circle cx="{px(n):.1f}" cy="{py(m):.1f}" r="3" fill="{color}"/>'
            )
        parts.append(
            f'<text x="{left + plot_w - 4}" y="{top + 14 + 16 * i}" '
            f'text-anchor="end" fill="{color}">{family}</text>'
        )
    parts.append(
        f'<text x="{(left + plot_w / 2):.1f}" y="{h - 8}" text-anchor="middle">'
        "qubits n</text>"
    )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
