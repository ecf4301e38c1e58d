"""Request and response schemas for the HTTP service."""

from __future__ import annotations

from pydantic import BaseModel, Field


class HealthResponse(BaseModel):
    status: str
    version: str


class CircuitText(BaseModel):
    """A circuit as program text."""

    qasm: str


class CircuitStats(BaseModel):
    name: str
    width: int
    size: int
    depth: int


class ParseResponse(BaseModel):
    stats: CircuitStats
    canonical_qasm: str


class GenerateRequest(BaseModel):
    family: str
    n: int = Field(ge=1)
    gateset: str = "independent"
    seed: int = 42
    depth_factor: float = 2.0
    phase_index: int | None = None
    iterations: int = Field(default=1, ge=1)


class GenerateResponse(BaseModel):
    tag: str
    qasm: str
    stats: CircuitStats


class PartitionRequest(BaseModel):
    qasm: str | None = None
    hypergraph: dict | None = None
    heuristic: str = "fm"
    seed: int = 42
    restarts: int = Field(default=10, ge=1)
    include_midcut_start: bool = True


class CutReportModel(BaseModel):
    cut_count: int
    cut_ids: list[int]
    blocks: tuple[list, list]
    baseline_cut: int
    reduction_pct: float
    heuristic: str
    seed: int
    restarts: int


class TemporalReportModel(BaseModel):
    cut_count: int
    cut_ids: list[int]
    baseline_cut: int
    reduction_pct: float
    heuristic: str
    seed: int
    restarts: int
    segments: tuple[list, list]
    precedence_feasible: bool


class ExportRequest(BaseModel):
    qasm: str | None = None
    hypergraph: dict | None = None
    format: str = "hmetis"
    dual: bool = False


class ExportResponse(BaseModel):
    format: str
    content: str


class CouplingResponse(BaseModel):
    n: int
    cb: int
    multiqubit_gates: int
    cr: float


class ClosedFormRow(BaseModel):
    n: int
    cb: int
    mincut: int


class SweepRequest(BaseModel):
    config: dict


class SweepResponse(BaseModel):
    csv: str
    summary: list[str]
