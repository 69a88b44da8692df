"""Command line interface: analyze, catalog, export-alist, simulate, variance, extend.

Exit codes: 0 on success, 1 for invalid inputs (bad graph, bad parameter),
2 when a requested minimum distance exceeds the enumeration ceiling.
Randomized subcommands require an explicit ``--seed``.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .alist import export_alist
from .analysis import AnalysisReport, analyze_graph, load_graph_file
from .codes import (
    EnumerationLimitExceeded,
    build_code,
    extend_parity_check,
    is_even_code,
    is_lcd,
    is_self_orthogonal,
    minimum_distance,
    tanner_graph,
)
from .channel import AwgnChannel, BscChannel, syndrome_variance_formula
from .experiments import (
    RNG_FAMILY,
    ExperimentConfig,
    run_experiment,
    syndrome_statistics,
)
from .graphs import girth

__all__ = ["main", "entry"]

SIMULATE_HEADER = "channel,param,decoder,trials,seed,ber,fer,syndrome_mean,syndrome_var"
VARIANCE_HEADER = "rho,formula,empirical,stderr,flag"
CATALOG_HEADER = "id,n,k,d,girth,even,self_orth,lcd"


def _fmt_bool(b: bool) -> str:
    return "true" if b else "false"


def _load(path: str):
    try:
        return load_graph_file(path)
    except FileNotFoundError:
        raise SystemExit(_fail(f"no such file: {path}"))
    except ValueError as exc:
        raise SystemExit(_fail(str(exc)))


def _fail(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return 1


def cmd_analyze(args: argparse.Namespace) -> int:
    g = _load(args.path)
    try:
        report = analyze_graph(g, Path(args.path).stem, k_ceiling=args.k_ceiling)
    except ValueError as exc:
        return _fail(str(exc))
    print(report.to_json() if args.format == "json" else report.to_text())
    if report.d is None:
        return 2
    return 0


def cmd_catalog(args: argparse.Namespace) -> int:
    directory = Path(args.directory)
    if not directory.is_dir():
        return _fail(f"not a directory: {directory}")
    files = sorted(
        [p for p in directory.iterdir() if p.suffix in (".edges", ".lcf")],
        key=lambda p: p.stem,
    )
    rows = []
    for path in files:
        try:
            g = load_graph_file(path)
            report = analyze_graph(g, path.stem, k_ceiling=args.k_ceiling)
        except (ValueError, OSError) as exc:
            print(f"warning: skipping {path.name}: {exc}", file=sys.stderr)
            continue
        rows.append(report)
    rows.sort(key=lambda r: (2 * r.n, r.graph_id))
    lines = [CATALOG_HEADER]
    for r in rows:
        d_text = str(r.d) if r.d is not None else ""
        lines.append(
            f"{r.graph_id},{r.n},{r.k},{d_text},{r.girth},"
            f"{_fmt_bool(r.even)},{_fmt_bool(r.self_orthogonal)},{_fmt_bool(r.lcd)}"
        )
    _write_lines(lines, args.out)
    return 0


def cmd_export_alist(args: argparse.Namespace) -> int:
    g = _load(args.path)
    try:
        code = build_code(g)
    except ValueError as exc:
        return _fail(str(exc))
    Path(args.out).write_text(export_alist(code.H))
    return 0


def _parse_float_list(text: str, label: str) -> list[float]:
    try:
        values = [float(tok) for tok in text.split(",") if tok.strip() != ""]
    except ValueError:
        raise SystemExit(_fail(f"bad {label} list: {text!r}"))
    if not values:
        raise SystemExit(_fail(f"empty {label} list"))
    return values


def cmd_simulate(args: argparse.Namespace) -> int:
    g = _load(args.path)
    try:
        code = build_code(g)
    except ValueError as exc:
        return _fail(str(exc))
    params = _parse_float_list(args.param, "parameter")
    lines = [SIMULATE_HEADER]
    for value in params:
        try:
            channel = BscChannel(value) if args.channel == "bsc" else AwgnChannel(value)
            cfg = ExperimentConfig(
                h=code.H,
                channel=channel,
                decoder=args.decoder,
                trials=args.trials,
                master_seed=args.seed,
                max_iterations=args.max_iter,
                worker_count=args.workers,
            )
        except ValueError as exc:
            return _fail(str(exc))
        result = run_experiment(cfg)
        lines.append(
            f"{args.channel},{value!r},{args.decoder},{result.trials},{args.seed},"
            f"{result.ber!r},{result.fer!r},"
            f"{result.syndrome_mean!r},{result.syndrome_variance!r}"
        )
    _write_lines(lines, args.out)
    if args.out:
        meta = {
            "graph": str(args.path),
            "channel": args.channel,
            "params": params,
            "decoder": args.decoder,
            "trials": args.trials,
            "max_iterations": args.max_iter,
            "seed": args.seed,
            "workers": args.workers,
            "rng_family": RNG_FAMILY,
            "version": __version__,
        }
        Path(str(args.out) + ".meta.json").write_text(json.dumps(meta, indent=2) + "\n")
    return 0


def cmd_variance(args: argparse.Namespace) -> int:
    g = _load(args.path)
    try:
        code = build_code(g)
    except ValueError as exc:
        return _fail(str(exc))
    rhos = _parse_float_list(args.rho, "rho")
    g_girth = girth(g)
    flag = "girth<6" if g_girth is not None and g_girth < 6 else ""
    lines = [VARIANCE_HEADER]
    for index, rho in enumerate(rhos):
        if not 0.0 <= rho <= 0.5:
            return _fail(f"rho {rho} outside [0, 1/2]")
        formula = syndrome_variance_formula(code.n, rho)
        stats = syndrome_statistics(
            code.H, rho, trials=args.trials, master_seed=args.seed, stream_index=index
        )
        lines.append(
            f"{rho!r},{formula!r},{stats.variance!r},{stats.variance_stderr!r},{flag}"
        )
    _write_lines(lines, args.out)
    return 0


def cmd_extend(args: argparse.Namespace) -> int:
    g = _load(args.path)
    try:
        code = build_code(g)
        extended = extend_parity_check(code, args.bits)
    except ValueError as exc:
        return _fail(str(exc))
    base_girth = girth(tanner_graph(code.H))
    new_girth = girth(tanner_graph(extended.H))
    if base_girth != new_girth:
        return _fail(
            f"girth changed from {base_girth} to {new_girth}, extension is broken"
        )
    warnings = [
        "rate-boosted code: spectral and clique bounds describe the base graph only"
    ]
    try:
        d = minimum_distance(extended, ceiling=args.k_ceiling)
    except EnumerationLimitExceeded:
        d = None
        warnings.append(
            f"minimum distance not computed: k={extended.k} exceeds ceiling {args.k_ceiling}"
        )
    report = AnalysisReport(
        graph_id=f"{Path(args.path).stem}+{args.bits}",
        n=extended.n,
        k=extended.k,
        d=d,
        girth=new_girth if new_girth is not None else 0,
        even=is_even_code(extended),
        self_orthogonal=is_self_orthogonal(extended),
        lcd=is_lcd(extended),
        bounds=None,
        warnings=warnings,
    )
    print(report.to_json() if args.format == "json" else report.to_text())
    if args.alist_out:
        Path(args.alist_out).write_text(export_alist(extended.H))
    if d is None:
        return 2
    return 0


def _write_lines(lines: list[str], out: str | None) -> None:
    text = "\n".join(lines) + "\n"
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="csg-ldpc",
        description="LDPC codes from cubic symmetric bipartite graphs",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="parameters, flags and bounds of one graph")
    p.add_argument("path")
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.add_argument("--k-ceiling", type=int, default=28)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("catalog", help="CSV table over a directory of graph files")
    p.add_argument("directory")
    p.add_argument("--out", default=None)
    p.add_argument("--k-ceiling", type=int, default=28)
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("export-alist", help="write the parity check in alist format")
    p.add_argument("path")
    p.add_argument("out")
    p.set_defaults(func=cmd_export_alist)

    p = sub.add_parser("simulate", help="Monte-Carlo decoding over BSC or AWGN")
    p.add_argument("path")
    p.add_argument("--channel", choices=("bsc", "awgn"), required=True)
    p.add_argument("--param", required=True, help="comma separated rho or sigma values")
    p.add_argument("--decoder", choices=("gallager-a", "sum-product"), required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--max-iter", type=int, default=50)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("variance", help="syndrome-weight variance, formula vs empirical")
    p.add_argument("path")
    p.add_argument("--rho", required=True, help="comma separated crossover probabilities")
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_variance)

    p = sub.add_parser("extend", help="rate boost by appending identity columns to H")
    p.add_argument("path")
    p.add_argument("--bits", type=int, required=True, help="number of identity columns")
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.add_argument("--k-ceiling", type=int, default=28)
    p.add_argument("--alist-out", default=None)
    p.set_defaults(func=cmd_extend)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else 1


def entry() -> None:
    sys.exit(main())
