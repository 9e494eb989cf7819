"""Command-line front end.

Usage::

    vbinventory classical   --config FILE
    vbinventory value-based --config FILE
    vbinventory evaluate    --config FILE --q Q
    vbinventory compare     --config FILE --baseline-q Q0 --alt-q Q1
    vbinventory sweep       --config FILE --from A --to B [--baseline-q Q0]
    vbinventory scan        --config FILE [--from A --to B]

Every command accepts ``--format table|csv`` and ``--paper-rounding``.
Exit status is 0 on success, 2 on invalid input and 1 on internal errors.
"""

from __future__ import annotations

import argparse
import math
import sys
from collections.abc import Sequence

from . import lot_models
from .config import ModelConfig, load_config
from .errors import InventoryModelError
from .search import minimize_value_cost, sweep
from .valuation import RoundingMode, compare_policies, evaluate_policy

SWEEP_COLUMNS = ("q", "tci", "delta_tci", "inv", "delta_inv", "delta_v", "delta_eva")
_SWEEP_HEADERS = ("Q", "TCI", "ΔTCI", "INV", "ΔINV", "ΔV", "ΔEVA")


def round_half_up(x: float) -> int:
    return math.floor(x + 0.5)


def _csv_value(value: object) -> str:
    # repr gives the shortest string that round-trips a float.
    return repr(float(value)) if isinstance(value, float) else str(value)


def _csv(header: Sequence[str], rows: Sequence[Sequence[object]]) -> str:
    lines = [",".join(header)]
    lines.extend(",".join(_csv_value(v) for v in row) for row in rows)
    return "\n".join(lines) + "\n"


def _qty(q: float, cfg: ModelConfig) -> str:
    text = f"{round_half_up(q):d}"
    return f"{text} {cfg.quantity_unit}" if cfg.quantity_unit else text


def _money(x: float, cfg: ModelConfig) -> str:
    text = f"{x:.2f}"
    return f"{text} {cfg.currency}" if cfg.currency else text


def _lines(pairs: Sequence[tuple[str, str]]) -> str:
    return "".join(f"{label} = {value}\n" for label, value in pairs)


def _name(cfg: ModelConfig, value_based: bool) -> str:
    base = cfg.model.upper()
    return "VB" + base if value_based else base


def _cmd_quantity(cfg: ModelConfig, args: argparse.Namespace, value_based: bool) -> str:
    if value_based:
        q = lot_models.value_based_quantity(cfg.params, cfg.financial)
    else:
        q = lot_models.classical_quantity(cfg.params)
    name = _name(cfg, value_based)
    if args.format == "csv":
        return _csv(("model", "quantity", "quantity_rounded"), [(name.lower(), q, round_half_up(q))])
    return _lines([(name, repr(q)), (f"{name} (rounded)", _qty(q, cfg))])


def _cmd_evaluate(cfg: ModelConfig, args: argparse.Namespace, rounding: RoundingMode) -> str:
    ev = evaluate_policy(args.q, cfg.params, cfg.financial, rounding)
    if args.format == "csv":
        return _csv(("q", "tci", "inv", "value_cost"), [(args.q, ev.tci, ev.inventory_value, ev.value_cost)])
    return _lines(
        [
            ("Q", _qty(ev.quantity, cfg)),
            ("TCI", _money(ev.tci, cfg)),
            ("INV", _money(ev.inventory_value, cfg)),
            ("value cost", _money(ev.value_cost, cfg)),
        ]
    )


def _cmd_compare(cfg: ModelConfig, args: argparse.Namespace, rounding: RoundingMode) -> str:
    d = compare_policies(cfg.params, cfg.financial, args.baseline_q, args.alt_q, rounding)
    if args.format == "csv":
        return _csv(
            ("baseline_q", "alt_q", "delta_tci", "delta_inv", "delta_v", "delta_eva"),
            [(args.baseline_q, args.alt_q, d.delta_tci, d.delta_inventory, d.delta_v, d.delta_eva)],
        )
    return _lines(
        [
            ("baseline Q", _qty(args.baseline_q, cfg)),
            ("alternative Q", _qty(args.alt_q, cfg)),
            ("ΔTCI", _money(d.delta_tci, cfg)),
            ("ΔINV", _money(d.delta_inventory, cfg)),
            ("ΔV", _money(d.delta_v, cfg)),
            ("ΔEVA", _money(d.delta_eva, cfg)),
        ]
    )


def _cmd_sweep(cfg: ModelConfig, args: argparse.Namespace, rounding: RoundingMode) -> str:
    if args.q_from is None or args.q_to is None:
        raise InventoryModelError("sweep needs both --from and --to")
    rows = sweep(cfg.params, cfg.financial, args.q_from, args.q_to, args.baseline_q, rounding)
    values = [[getattr(r, c) for c in SWEEP_COLUMNS] for r in rows]
    if args.format == "csv":
        return _csv(SWEEP_COLUMNS, values)
    cells = [list(_SWEEP_HEADERS)]
    cells.extend([str(v[0])] + [f"{x:.2f}" for x in v[1:]] for v in values)
    widths = [max(len(row[i]) for row in cells) for i in range(len(_SWEEP_HEADERS))]
    return "".join(
        "  ".join(cell.rjust(w) for cell, w in zip(row, widths)) + "\n" for row in cells
    )


def _cmd_scan(cfg: ModelConfig, args: argparse.Namespace) -> str:
    if (args.q_from is None) != (args.q_to is None):
        raise InventoryModelError("scan needs both --from and --to, or neither")
    q_range = None if args.q_from is None else (args.q_from, args.q_to)
    res = minimize_value_cost(cfg.params, cfg.financial, q_range)
    lo, hi = res.scanned_range
    if args.format == "csv":
        return _csv(("best_q", "best_value_cost", "range_from", "range_to"), [(res.best_q, res.best_value_cost, lo, hi)])
    return _lines(
        [
            ("best Q", _qty(res.best_q, cfg)),
            ("value cost", _money(res.best_value_cost, cfg)),
            ("scanned", f"[{lo}, {hi}]"),
        ]
    )


def render(command: str, args: argparse.Namespace, cfg: ModelConfig) -> str:
    """Run ``command`` against a parsed config and return its rendered output."""
    rounding = RoundingMode.PAPER if args.paper_rounding else RoundingMode.EXACT
    if command == "classical":
        return _cmd_quantity(cfg, args, value_based=False)
    if command == "value-based":
        return _cmd_quantity(cfg, args, value_based=True)
    if command == "evaluate":
        return _cmd_evaluate(cfg, args, rounding)
    if command == "compare":
        return _cmd_compare(cfg, args, rounding)
    if command == "sweep":
        return _cmd_sweep(cfg, args, rounding)
    if command == "scan":
        return _cmd_scan(cfg, args)
    raise ValueError(f"unknown command {command!r}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", required=True, help="model configuration file")
    common.add_argument("--format", choices=("table", "csv"), default="table")
    common.add_argument(
        "--paper-rounding",
        action="store_true",
        help="round costs and the baseline's stock as in the hand-worked examples",
    )

    parser = argparse.ArgumentParser(
        prog="vbinventory",
        description="Classical and value-based lot sizing with firm-value comparisons.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("classical", parents=[common], help="EOQ or POQ")
    sub.add_parser("value-based", parents=[common], help="VBEOQ or VBPOQ")

    p = sub.add_parser("evaluate", parents=[common], help="costs of one lot size")
    p.add_argument("--q", type=int, required=True)

    p = sub.add_parser("compare", parents=[common], help="value effect of changing lot size")
    p.add_argument("--baseline-q", type=int, required=True)
    p.add_argument("--alt-q", type=int, required=True)

    p = sub.add_parser("sweep", parents=[common], help="table of lot sizes against a baseline")
    p.add_argument("--from", dest="q_from", type=int, required=True)
    p.add_argument("--to", dest="q_to", type=int, required=True)
    p.add_argument("--baseline-q", type=int, default=None)

    p = sub.add_parser("scan", parents=[common], help="brute-force value-cost minimizer")
    p.add_argument("--from", dest="q_from", type=int, default=None)
    p.add_argument("--to", dest="q_to", type=int, default=None)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = load_config(args.config)
        output = render(args.command, args, cfg)
    except InventoryModelError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # noqa: BLE001
        print(f"internal error: {exc!r}", file=sys.stderr)
        return 1
    sys.stdout.write(output)
    return 0


if __name__ == "__main__":
    sys.exit(main())
