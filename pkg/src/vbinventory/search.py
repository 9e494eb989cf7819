"""Brute-force integer search over lot sizes and Table-style sweeps.

The scan is deliberately exhaustive: it evaluates the value-cost objective at
every integer lot size in range and serves as an independent check on the
closed-form value-based quantities.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidParameterError
from .lot_models import FinancialContext, ModelParameters, classical_quantity, value_cost
from .valuation import RoundingMode, delta_from_figures, policy_figures

# Bounds memory per vectorized evaluation; the reduction below is order-stable.
_CHUNK = 1 << 20


@dataclass(frozen=True)
class ScanResult:
    best_q: int
    best_value_cost: float
    scanned_range: tuple[int, int]


@dataclass(frozen=True)
class SweepRow:
    q: int
    tci: float
    delta_tci: float
    inv: float
    delta_inv: float
    delta_v: float
    delta_eva: float


def default_scan_range(params: ModelParameters) -> tuple[int, int]:
    """``[1, ceil(10 * classical optimum)]``; brackets the value-based optimum."""
    return 1, max(1, math.ceil(10.0 * classical_quantity(params)))


def default_baseline(params: ModelParameters) -> int:
    return max(1, math.floor(classical_quantity(params) + 0.5))


def _check_bounds(lo: int, hi: int) -> None:
    if int(lo) != lo or int(hi) != hi:
        raise InvalidParameterError("range", f"bounds must be integers, got [{lo}, {hi}]")
    if lo < 1:
        raise InvalidParameterError("range", f"lower bound must be >= 1, got {lo}")
    if hi < lo:
        raise InvalidParameterError("range", f"empty range [{lo}, {hi}]")


def minimize_value_cost(
    params: ModelParameters,
    f: FinancialContext,
    q_range: tuple[int, int] | None = None,
) -> ScanResult:
    """Exact integer minimizer of ``value_cost`` over an inclusive range.

    Ties go to the smallest lot size.
    """
    lo, hi = q_range if q_range is not None else default_scan_range(params)
    _check_bounds(lo, hi)
    lo, hi = int(lo), int(hi)

    best_q, best_cost = None, math.inf
    for start in range(lo, hi + 1, _CHUNK):
        qs = np.arange(start, min(start + _CHUNK, hi + 1), dtype=float)
        costs = value_cost(qs, params, f)
        i = int(np.argmin(costs))  # first occurrence on ties
        if costs[i] < best_cost:
            best_q, best_cost = start + i, float(costs[i])
    if best_q is None:
        raise InvalidParameterError("range", "objective is not finite anywhere in range")
    return ScanResult(best_q=best_q, best_value_cost=best_cost, scanned_range=(lo, hi))


def sweep(
    params: ModelParameters,
    f: FinancialContext,
    q_from: int,
    q_to: int,
    baseline_q: int | None = None,
    rounding: RoundingMode = RoundingMode.EXACT,
) -> list[SweepRow]:
    """One row per integer lot size in ``[q_from, q_to]``, measured against a fixed baseline.

    The baseline defaults to the classical optimum rounded to a whole unit.
    """
    _check_bounds(q_from, q_to)
    if baseline_q is None:
        baseline_q = default_baseline(params)
    base = policy_figures(baseline_q, params, rounding, reference=True)

    rows = []
    for q in range(int(q_from), int(q_to) + 1):
        figures = base if q == baseline_q else policy_figures(q, params, rounding)
        delta = delta_from_figures(base, figures, f)
        rows.append(
            SweepRow(
                q=q,
                tci=figures[0],
                delta_tci=delta.delta_tci,
                inv=figures[1],
                delta_inv=delta.delta_inventory,
                delta_v=delta.delta_v,
                delta_eva=delta.delta_eva,
            )
        )
    return rows
