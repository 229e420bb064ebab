"""Command-line frontend.

Three subcommands: ``simulate`` runs the round-level simulator and reports
run statistics, ``analyze`` tabulates the closed-form information curves
over a disturbance grid, and ``table`` prints the protocol comparison.
Every subcommand writes CSV (with ``#``-prefixed metadata lines) or JSON to
stdout or to ``--output``.

Exit codes: 0 on success, 2 for command-line usage errors, 3 for
configurations the model rejects, 4 for output I/O failures.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .adversaries import AttackConfig, Strategy
from .analysis import (
    critical_disturbance,
    disturbance_grid,
    information_table,
    protocol_comparison,
)
from .channel import ChannelConfig, ConfigError, Protocol
from .harness import SimConfig, run

EXIT_CONFIG = 3
EXIT_IO = 4


def _grid_arg(text: str) -> str:
    parts = text.split(":")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(
            f"expected START:END:STEP, got {text!r}"
        )
    try:
        for part in parts:
            float(part)
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected numeric START:END:STEP, got {text!r}"
        ) from None
    return text


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="twoway-qkd",
        description="Simulator and analysis tools for two-way and "
        "prepare-and-measure QKD protocols.",
    )
    parser.add_argument(
        "--version", action="version", version=f"%(prog)s {__version__}"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sim = sub.add_parser("simulate", help="run the round-level simulator")
    sim.add_argument(
        "--protocol",
        required=True,
        choices=[p.value for p in Protocol],
    )
    sim.add_argument(
        "--attack",
        default=Strategy.NONE.value,
        choices=[s.value for s in Strategy],
    )
    sim.add_argument("--q", type=float, default=1.0,
                     help="attacker presence probability per round")
    sim.add_argument("--rounds", type=int, required=True)
    sim.add_argument("--seed", type=int, default=0)
    sim.add_argument("--p-segment", type=float, default=1.0,
                     help="single-pass channel transmission probability")
    sim.add_argument("--cm-prob", type=float, default=0.0,
                     help="control-mode probability (two-way protocols)")
    sim.add_argument("--detector-efficiency", type=float, default=1.0)
    sim.add_argument("--dark-count-prob", type=float, default=0.0)
    sim.add_argument("--workers", type=int, default=1,
                     help="processes to spread chunks over (result-neutral)")
    _output_args(sim, default_format="json")
    sim.set_defaults(func=_cmd_simulate)

    ana = sub.add_parser(
        "analyze", help="closed-form information curves over a disturbance grid"
    )
    ana.add_argument("--d-grid", type=_grid_arg, default="0:0.5:0.01",
                     metavar="START:END:STEP")
    _output_args(ana, default_format="csv")
    ana.set_defaults(func=_cmd_analyze)

    tab = sub.add_parser("table", help="protocol comparison table")
    tab.add_argument("--p-segment", type=float, default=1.0)
    _output_args(tab, default_format="csv")
    tab.set_defaults(func=_cmd_table)

    return parser


def _output_args(sub: argparse.ArgumentParser, default_format: str) -> None:
    sub.add_argument("--format", choices=["csv", "json"], default=default_format)
    sub.add_argument("--output", default=None, metavar="PATH")


def _csv_value(value: object) -> str:
    if value is None:
        return "indeterminable"
    return str(value)


def _csv_document(meta: dict[str, object], rows: list[dict[str, object]]) -> str:
    lines = [f"# {key}={_csv_value(value)}" for key, value in meta.items()]
    if rows:
        header = list(rows[0])
        lines.append(",".join(header))
        for row in rows:
            lines.append(",".join(_csv_value(row[key]) for key in header))
    return "\n".join(lines) + "\n"


def _cmd_simulate(args: argparse.Namespace) -> str:
    config = SimConfig(
        protocol=Protocol(args.protocol),
        rounds=args.rounds,
        seed=args.seed,
        attack=AttackConfig(strategy=Strategy(args.attack), q=args.q),
        cm_prob=args.cm_prob,
        channel=ChannelConfig(
            p_segment=args.p_segment,
            detector_efficiency=args.detector_efficiency,
            dark_count_prob=args.dark_count_prob,
        ),
    )
    stats = run(config, workers=args.workers)
    if args.format == "json":
        payload = {
            "config": config.as_dict(),
            "stats": stats.as_dict(),
            "version": __version__,
        }
        return json.dumps(payload, indent=2) + "\n"
    meta = dict(config.as_dict())
    meta["version"] = __version__
    return _csv_document(meta, [stats.as_dict()])


def _cmd_analyze(args: argparse.Namespace) -> str:
    start, end, step = (float(part) for part in args.d_grid.split(":"))
    try:
        grid = disturbance_grid(start, end, step)
        rows = information_table(grid)
    except ValueError as exc:
        raise ConfigError(str(exc)) from None
    d_star = critical_disturbance()
    if args.format == "json":
        payload = {
            "config": {"d_grid": args.d_grid},
            "critical_disturbance": d_star,
            "rows": rows,
            "version": __version__,
        }
        return json.dumps(payload, indent=2) + "\n"
    meta = {
        "d_grid": args.d_grid,
        "critical_disturbance": d_star,
        "version": __version__,
    }
    return _csv_document(meta, rows)


def _cmd_table(args: argparse.Namespace) -> str:
    try:
        rows = protocol_comparison(args.p_segment)
    except ValueError as exc:
        raise ConfigError(str(exc)) from None
    if args.format == "json":
        payload = {
            "config": {"p_segment": args.p_segment},
            "rows": rows,
            "version": __version__,
        }
        return json.dumps(payload, indent=2) + "\n"
    meta = {"p_segment": args.p_segment, "version": __version__}
    return _csv_document(meta, rows)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        text = args.func(args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    try:
        if args.output is None:
            sys.stdout.write(text)
        else:
            with open(args.output, "w", encoding="utf-8") as handle:
                handle.write(text)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    return 0


def entrypoint() -> None:
    sys.exit(main())
