"""Firm-valuation layer: cash flows, NOPAT, net working capital and EVA.

``compare_policies`` measures what moving from one lot size to another does to
the firm.  The change in stock value is a one-off change in net working
capital at time zero; the change in yearly inventory cost alters every future
free cash flow by ``-(1-T) * delta_tci``, valued as a perpetuity at the cost of
capital.
"""

from __future__ import annotations

import enum
import math
from collections.abc import Sequence
from dataclasses import dataclass

from .errors import InvalidParameterError, PerpetuityUndefinedError
from .lot_models import (
    FinancialContext,
    ModelParameters,
    PolicyEvaluation,
    inventory_value,
    tci,
)


class RoundingMode(enum.Enum):
    """How intermediate figures are rounded before policies are compared.

    ``EXACT`` keeps full floating precision.  ``PAPER`` reproduces the
    hand-worked tables: yearly costs are rounded to whole money units and the
    reference policy's physical stock to whole units, while the stock of the
    alternative policy is kept exact.
    """

    EXACT = "exact"
    PAPER = "paper"


@dataclass(frozen=True)
class CashFlowInputs:
    cash_revenues: float
    cash_expenses: float
    non_cash_expenses: float = 0.0
    capex: float = 0.0
    nwc_growth: float = 0.0

    def __post_init__(self) -> None:
        for name in ("cash_revenues", "cash_expenses", "non_cash_expenses", "capex", "nwc_growth"):
            if not math.isfinite(getattr(self, name)):
                raise InvalidParameterError(name, "must be a finite amount")


@dataclass(frozen=True)
class NwcComponents:
    accounts_receivable: float = 0.0
    inventory: float = 0.0
    cash: float = 0.0
    accounts_payable: float = 0.0

    def __post_init__(self) -> None:
        for name in ("accounts_receivable", "inventory", "cash", "accounts_payable"):
            value = getattr(self, name)
            if not math.isfinite(value) or value < 0:
                raise InvalidParameterError(name, f"balance must be finite and >= 0, got {value!r}")


@dataclass(frozen=True)
class EvaInputs:
    nopat: float
    nwc: float
    operating_investments: float
    cost_of_capital: float

    def __post_init__(self) -> None:
        if self.operating_investments < 0:
            raise InvalidParameterError("operating_investments", "must be >= 0")
        if self.cost_of_capital < 0:
            raise InvalidParameterError("cost_of_capital", "must be >= 0")


@dataclass(frozen=True)
class ValuationDelta:
    """Effect of moving from a baseline lot size to an alternative one.

    ``delta_inventory`` is also the change in net working capital.
    """

    delta_tci: float
    delta_inventory: float
    delta_v: float
    delta_eva: float


def _check_tax_rate(tax_rate: float) -> None:
    if not (math.isfinite(tax_rate) and 0 <= tax_rate < 1):
        raise InvalidParameterError("tax_rate", f"must lie in [0, 1), got {tax_rate!r}")


def nopat(cash_revenues: float, cash_expenses: float, non_cash_expenses: float, tax_rate: float) -> float:
    """Net operating profit after taxes."""
    _check_tax_rate(tax_rate)
    return (cash_revenues - cash_expenses - non_cash_expenses) * (1.0 - tax_rate)


def fcff(c: CashFlowInputs, tax_rate: float) -> float:
    """Free cash flow to the firm for one period."""
    after_tax = nopat(c.cash_revenues, c.cash_expenses, c.non_cash_expenses, tax_rate)
    return after_tax + c.non_cash_expenses - c.capex - c.nwc_growth


def nwc(n: NwcComponents) -> float:
    return n.accounts_receivable + n.inventory + n.cash - n.accounts_payable


def eva(e: EvaInputs) -> float:
    """Residual profit after charging for all capital employed."""
    return e.nopat - e.cost_of_capital * (e.nwc + e.operating_investments)


def present_value_of_deltas(flows: Sequence[float], cost_of_capital: float) -> float:
    """Discount a sequence of cash-flow changes for periods ``t = 1..n``."""
    if len(flows) == 0:
        raise InvalidParameterError("flows", "at least one period is required")
    if not cost_of_capital > -1:
        raise InvalidParameterError("cost_of_capital", "must be > -1")
    discount = 1.0 / (1.0 + cost_of_capital)
    return math.fsum(flow * discount**t for t, flow in enumerate(flows, start=1))


def perpetuity_value(flow: float, cost_of_capital: float) -> float:
    """Value of a constant per-period flow received forever."""
    if not cost_of_capital > 0:
        raise PerpetuityUndefinedError(
            f"perpetuity valuation needs cost_of_capital > 0, got {cost_of_capital!r}"
        )
    return flow / cost_of_capital


def policy_figures(
    q: float,
    params: ModelParameters,
    rounding: RoundingMode = RoundingMode.EXACT,
    reference: bool = False,
) -> tuple[float, float]:
    """Return ``(tci, inventory_value)`` for lot size ``q`` under ``rounding``.

    ``reference`` marks the policy every other one is measured against; only
    its physical stock is rounded in ``PAPER`` mode.
    """
    cost = float(tci(q, params))
    if rounding is RoundingMode.PAPER:
        cost = float(math.floor(cost + 0.5))
        inv = float(inventory_value(q, params, round_units=reference))
    else:
        inv = float(inventory_value(q, params))
    return cost, inv


def evaluate_policy(
    q: float,
    params: ModelParameters,
    f: FinancialContext,
    rounding: RoundingMode = RoundingMode.EXACT,
) -> PolicyEvaluation:
    cost, inv = policy_figures(q, params, rounding, reference=True)
    return PolicyEvaluation(
        quantity=float(q),
        tci=cost,
        inventory_value=inv,
        value_cost=(1.0 - f.tax_rate) * cost + f.cost_of_capital * inv,
    )


def delta_from_figures(
    baseline: tuple[float, float], alternative: tuple[float, float], f: FinancialContext
) -> ValuationDelta:
    """Perpetuity valuation of a change in (tci, inventory value)."""
    k = f.cost_of_capital
    if not k > 0:
        raise PerpetuityUndefinedError(
            f"policy comparison needs cost_of_capital > 0, got {k!r}"
        )
    after_tax = 1.0 - f.tax_rate
    delta_tci = alternative[0] - baseline[0]
    delta_inv = alternative[1] - baseline[1]
    # Released working capital comes back at time zero; the cost change recurs.
    delta_v = -delta_inv + perpetuity_value(-after_tax * delta_tci, k)
    delta_eva = -after_tax * delta_tci - k * delta_inv
    return ValuationDelta(
        delta_tci=delta_tci,
        delta_inventory=delta_inv,
        delta_v=delta_v,
        delta_eva=delta_eva,
    )


def compare_policies(
    params: ModelParameters,
    f: FinancialContext,
    baseline_q: float,
    alternative_q: float,
    rounding: RoundingMode = RoundingMode.EXACT,
) -> ValuationDelta:
    """Value created by switching lot size from ``baseline_q`` to ``alternative_q``.

    Positive ``delta_v`` and ``delta_eva`` mean the alternative adds value.
    """
    if not f.cost_of_capital > 0:
        raise PerpetuityUndefinedError(
            f"policy comparison needs cost_of_capital > 0, got {f.cost_of_capital!r}"
        )
    base = policy_figures(baseline_q, params, rounding, reference=True)
    if alternative_q == baseline_q:
        alt = base
    else:
        alt = policy_figures(alternative_q, params, rounding)
    return delta_from_figures(base, alt, f)
