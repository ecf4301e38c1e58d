"""Command-line front end.

Subcommands: generate, partition, sweep, export, serve.  Artifacts
(program text, report JSON/CSV, sweep CSV, hMETIS lines) go to stdout
or --out; everything diagnostic goes to stderr.

Exit codes: 0 success, 1 I/O failure, 2 bad arguments or config,
3 input parse error, 4 violated operation precondition.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

from .analysis import (
    SweepConfig,
    rows_to_csv,
    run_sweep,
    summarize,
    summary_lines,
    svg_plot,
)
from .generators import FAMILIES, build_family
from .hypergraph import (
    dual,
    expand_bipartite,
    export_hmetis,
    from_json,
    primal_from_circuit,
    to_json,
)
from .partition import (
    fm_bipartition,
    kl_bipartition,
    spatial_cut,
    temporal_cut,
    temporal_cut_hypergraph,
)
from .qasm import QasmError, emit_qasm, parse_qasm
from .rng import DEFAULT_SEED

EXIT_OK = 0
EXIT_IO = 1
EXIT_ARGS = 2
EXIT_PARSE = 3
EXIT_PRECONDITION = 4


class InputError(ValueError):
    """Malformed input artifact (maps to exit code 3)."""


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def _write_output(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def _load_circuit_or_hypergraph(path: str):
    """Returns ("circuit", Circuit) or ("hypergraph", Hypergraph).

    JSON payloads (by extension or first byte) are hypergraph dumps;
    anything else is treated as program text."""
    text = _read_input(path)
    looks_json = path.endswith(".json") or text.lstrip()[:1] == "{"
    if looks_json:
        try:
            return "hypergraph", from_json(text)
        except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
            raise InputError(f"bad hypergraph JSON: {exc}") from exc
    return "circuit", parse_qasm(text)


# subcommands ----------------------------------------------------------------


def cmd_generate(args: argparse.Namespace) -> int:
    _, circuit = build_family(
        args.family,
        args.n,
        gateset=args.gateset,
        seed=args.seed,
        depth_factor=args.depth_factor,
        phase_index=args.phase,
        iterations=args.iterations,
    )
    _write_output(emit_qasm(circuit), args.out)
    return EXIT_OK


def cmd_partition(args: argparse.Namespace) -> int:
    kind, obj = _load_circuit_or_hypergraph(args.input)
    include_midcut = not args.no_midcut_start
    if args.mode == "spatial":
        if kind == "circuit":
            report = spatial_cut(
                obj, args.heuristic, args.seed, args.restarts, include_midcut
            )
        elif args.heuristic == "fm":
            _, report = fm_bipartition(obj, args.seed, args.restarts, include_midcut)
        else:
            _, report = kl_bipartition(
                expand_bipartite(obj), args.seed, args.restarts, include_midcut
            )
        payload = report.to_dict()
    else:
        if kind == "circuit":
            report = temporal_cut(obj, args.seed, args.restarts, include_midcut)
        else:
            report = temporal_cut_hypergraph(
                obj, args.seed, args.restarts, include_midcut
            )
        payload = report.to_dict()
    if args.format == "json":
        _write_output(json.dumps(payload, indent=2) + "\n", args.out)
    else:
        for key, a_name, b_name in (
            ("blocks", "block_a", "block_b"),
            ("segments", "segment_a", "segment_b"),
        ):
            if key in payload:
                pair = payload.pop(key)
                payload[a_name], payload[b_name] = pair[0], pair[1]
        columns = list(payload)
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(columns)
        writer.writerow(
            [
                " ".join(str(x) for x in payload[c])
                if isinstance(payload[c], list)
                else payload[c]
                for c in columns
            ]
        )
        _write_output(buf.getvalue(), args.out)
    return EXIT_OK


def cmd_sweep(args: argparse.Namespace) -> int:
    try:
        raw = json.loads(_read_input(args.config))
        config = SweepConfig.from_dict(raw)
    except (json.JSONDecodeError, TypeError, ValueError) as exc:
        print(f"bad sweep config: {exc}", file=sys.stderr)
        return EXIT_ARGS
    rows = run_sweep(config)
    _write_output(rows_to_csv(rows), args.out)
    if args.svg is not None:
        Path(args.svg).write_text(svg_plot(rows))
    for line in summary_lines(summarize(rows)):
        print(line, file=sys.stderr)
    return EXIT_OK


def cmd_export(args: argparse.Namespace) -> int:
    kind, obj = _load_circuit_or_hypergraph(args.input)
    if kind == "circuit":
        h = primal_from_circuit(obj)
    else:
        h = obj
    if not h.vertices:
        raise ValueError("nothing to export: the input has no multi-use vertices")
    if args.dual:
        h = dual(h)
    if args.format == "json":
        _write_output(to_json(h), args.out)
    else:
        sink = io.BytesIO()
        export_hmetis(h, sink)
        text = sink.getvalue().decode("ascii")
        _write_output(text, args.out)
    return EXIT_OK


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    uvicorn.run("hypercut.service.app:app", host=args.host, port=args.port)
    return EXIT_OK


# wiring ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hypercut",
        description="Spatial and temporal cutting of quantum circuits "
        "via balanced hypergraph bisection.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("generate", help="emit a circuit family as program text")
    p_gen.add_argument("--family", required=True, choices=FAMILIES)
    p_gen.add_argument("--n", required=True, type=int, help="circuit width in qubits")
    p_gen.add_argument("--gateset", default="independent", choices=("native", "independent"))
    p_gen.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p_gen.add_argument("--depth-factor", type=float, default=2.0)
    p_gen.add_argument("--phase", type=int, default=None, help="qpe phase index")
    p_gen.add_argument("--iterations", type=int, default=1, help="grover iterations")
    p_gen.add_argument("--out", default=None)
    p_gen.set_defaults(func=cmd_generate)

    p_part = sub.add_parser("partition", help="balanced two-way cut of a circuit")
    p_part.add_argument("--input", required=True, help="program text or hypergraph JSON; - for stdin")
    p_part.add_argument("--mode", default="spatial", choices=("spatial", "temporal"))
    p_part.add_argument("--heuristic", default="fm", choices=("fm", "kl"))
    p_part.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p_part.add_argument("--restarts", type=int, default=10)
    p_part.add_argument("--no-midcut-start", action="store_true")
    p_part.add_argument("--format", default="json", choices=("json", "csv"))
    p_part.add_argument("--out", default=None)
    p_part.set_defaults(func=cmd_partition)

    p_sweep = sub.add_parser("sweep", help="grid of spatial cuts rendered as CSV")
    p_sweep.add_argument("--config", required=True, help="sweep config JSON; - for stdin")
    p_sweep.add_argument("--out", default=None)
    p_sweep.add_argument("--svg", default=None, help="also render a median-reduction plot")
    p_sweep.set_defaults(func=cmd_sweep)

    p_exp = sub.add_parser("export", help="hypergraph of a circuit as hMETIS or JSON")
    p_exp.add_argument("--input", required=True, help="program text or hypergraph JSON; - for stdin")
    p_exp.add_argument("--format", default="hmetis", choices=("hmetis", "json"))
    p_exp.add_argument("--dual", action="store_true", help="export the gate view instead")
    p_exp.add_argument("--out", default=None)
    p_exp.set_defaults(func=cmd_export)

    p_srv = sub.add_parser("serve", help="run the HTTP service")
    p_srv.add_argument("--host", default="127.0.0.1")
    p_srv.add_argument("--port", type=int, default=8000)
    p_srv.set_defaults(func=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_ARGS
    try:
        return args.func(args)
    except QasmError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except InputError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
