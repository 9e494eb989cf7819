"""Closed-form lot sizes and the cost functions they minimize.

Two model families are covered:

* purchase lots (EOQ family): an order of ``Q`` units arrives at once, on top
  of a constant safety stock;
* production lots (POQ family): a run of ``Q`` units is produced at a finite
  rate ``m`` while demand ``P`` is drawn down, so the average stock shrinks by
  the factor ``1 - P/m``.

Each family has a classical optimum, minimizing the total inventory cost
``tci``, and a value-based optimum, minimizing ``value_cost``: the after-tax
operating cost plus the capital charge on money tied up in stock.

Quantity arguments of the cost functions may be scalars or numpy arrays; the
arithmetic is elementwise so a whole grid of lot sizes can be evaluated in
one call.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

import numpy as np

from .errors import CapacityError, InvalidParameterError

Quantity = Union[float, np.ndarray]


def _require_finite(field: str, value: float) -> None:
    if not math.isfinite(value):
        raise InvalidParameterError(field, f"must be a finite number, got {value!r}")


def _require_positive(field: str, value: float) -> None:
    _require_finite(field, value)
    if value <= 0:
        raise InvalidParameterError(field, f"must be > 0, got {value!r}")


def _require_fraction(field: str, value: float) -> None:
    _require_positive(field, value)
    if value > 1:
        raise InvalidParameterError(field, f"must lie in (0, 1], got {value!r}")


@dataclass(frozen=True)
class EoqParameters:
    """Inputs of the purchase-lot model.

    ``holding_factor`` is the yearly holding cost as a fraction of the unit
    purchase cost, so the per-unit holding cost is ``holding_factor * unit_cost``.
    """

    demand: float
    order_cost: float
    unit_cost: float
    holding_factor: float
    safety_stock: float = 0.0

    def __post_init__(self) -> None:
        _require_positive("demand", self.demand)
        _require_positive("order_cost", self.order_cost)
        _require_positive("unit_cost", self.unit_cost)
        _require_fraction("holding_factor", self.holding_factor)
        _require_finite("safety_stock", self.safety_stock)
        if self.safety_stock < 0:
            raise InvalidParameterError("safety_stock", f"must be >= 0, got {self.safety_stock!r}")


@dataclass(frozen=True)
class PoqParameters:
    """Inputs of the production-lot model; ``setup_cost`` is paid per run."""

    demand: float
    max_production: float
    setup_cost: float
    unit_cost: float
    holding_factor: float

    def __post_init__(self) -> None:
        _require_positive("demand", self.demand)
        _require_positive("max_production", self.max_production)
        _require_positive("setup_cost", self.setup_cost)
        _require_positive("unit_cost", self.unit_cost)
        _require_fraction("holding_factor", self.holding_factor)
        if self.demand >= self.max_production:
            raise CapacityError(
                "demand",
                f"demand {self.demand!r} must be below max_production {self.max_production!r}",
            )

    @property
    def stock_factor(self) -> float:
        """Share of each run that is on hand at the peak, ``1 - P/m``."""
        return 1.0 - self.demand / self.max_production


@dataclass(frozen=True)
class FinancialContext:
    """Effective tax rate and cost of capital (WACC) of the firm."""

    tax_rate: float
    cost_of_capital: float

    def __post_init__(self) -> None:
        _require_finite("tax_rate", self.tax_rate)
        _require_finite("cost_of_capital", self.cost_of_capital)
        if not 0 <= self.tax_rate < 1:
            raise InvalidParameterError("tax_rate", f"must lie in [0, 1), got {self.tax_rate!r}")
        if self.cost_of_capital < 0:
            raise InvalidParameterError(
                "cost_of_capital", f"must be >= 0, got {self.cost_of_capital!r}"
            )


@dataclass(frozen=True)
class PolicyEvaluation:
    """One lot size with its yearly cost, inventory value and value cost."""

    quantity: float
    tci: float
    inventory_value: float
    value_cost: float


ModelParameters = Union[EoqParameters, PoqParameters]


def _check_quantity(q: Quantity) -> None:
    arr = np.asarray(q, dtype=float)
    if arr.size == 0:
        raise InvalidParameterError("quantity", "no quantity given")
    if not np.all(np.isfinite(arr)) or np.any(arr <= 0):
        raise InvalidParameterError("quantity", "lot size must be a finite number > 0")


def _round_half_up(x: float) -> float:
    return float(math.floor(x + 0.5))


# --- purchase lots -----------------------------------------------------------


def eoq(p: EoqParameters) -> float:
    """Classical economic order quantity ``sqrt(2 P Kz / (C v))``."""
    return math.sqrt(2.0 * p.demand * p.order_cost / (p.holding_factor * p.unit_cost))


def tci_eoq(q: Quantity, p: EoqParameters) -> Quantity:
    """Yearly ordering cost plus holding cost of cycle and safety stock."""
    _check_quantity(q)
    ordering = p.demand / q * p.order_cost
    holding = (q / 2.0 + p.safety_stock) * p.unit_cost * p.holding_factor
    return ordering + holding


def average_stock_eoq(q: Quantity, p: EoqParameters) -> Quantity:
    _check_quantity(q)
    return q / 2.0 + p.safety_stock


def inventory_value_eoq(q: Quantity, p: EoqParameters, round_units: bool = False) -> Quantity:
    """Money tied up in average stock, ``(Q/2 + z_b) * v``.

    With ``round_units`` the physical average is first rounded to a whole
    unit (half up), which is how the worked figures were printed.
    """
    stock = average_stock_eoq(q, p)
    if round_units:
        stock = np.floor(np.asarray(stock) + 0.5) if np.ndim(stock) else _round_half_up(stock)
    return stock * p.unit_cost


def vbeoq(p: EoqParameters, f: FinancialContext) -> float:
    """Value-based order quantity.

    Minimizes ``(1-T) * tci + k * inventory_value``:

        sqrt(2 (1-T) Kz P / (v (k + C (1-T))))
    """
    after_tax = 1.0 - f.tax_rate
    return math.sqrt(
        2.0 * after_tax * p.order_cost * p.demand
        / (p.unit_cost * (f.cost_of_capital + p.holding_factor * after_tax))
    )


# --- production lots ---------------------------------------------------------


def poq(p: PoqParameters) -> float:
    # Denominator v*C*(1-P/m): the printed C*k variant does not reproduce the
    # worked production example.
    return math.sqrt(
        2.0 * p.setup_cost * p.demand / (p.unit_cost * p.holding_factor * p.stock_factor)
    )


def tci_poq(q: Quantity, p: PoqParameters) -> Quantity:
    """Yearly holding cost of the production cycle plus setup cost."""
    _check_quantity(q)
    holding = q / 2.0 * p.stock_factor * p.unit_cost * p.holding_factor
    return holding + p.demand / q * p.setup_cost


def average_stock_poq(q: Quantity, p: PoqParameters) -> Quantity:
    _check_quantity(q)
    return q / 2.0 * p.stock_factor


def inventory_value_poq(q: Quantity, p: PoqParameters, round_units: bool = False) -> Quantity:
    """Money tied up in average stock, ``v * Q/2 * (1 - P/m)``."""
    stock = average_stock_poq(q, p)
    if round_units:
        stock = np.floor(np.asarray(stock) + 0.5) if np.ndim(stock) else _round_half_up(stock)
    return p.unit_cost * stock


def vbpoq(p: PoqParameters, f: FinancialContext) -> float:
    """Value-based production run size."""
    after_tax = 1.0 - f.tax_rate
    return math.sqrt(
        2.0 * p.demand * p.setup_cost * after_tax
        / (
            p.unit_cost
            * p.stock_factor
            * (f.cost_of_capital + p.holding_factor * after_tax)
        )
    )


# --- family dispatch ---------------------------------------------------------


def _family(p: ModelParameters) -> str:
    if isinstance(p, EoqParameters):
        return "eoq"
    if isinstance(p, PoqParameters):
        return "poq"
    raise TypeError(f"unsupported model parameters: {type(p).__name__}")


def classical_quantity(p: ModelParameters) -> float:
    return eoq(p) if _family(p) == "eoq" else poq(p)


def value_based_quantity(p: ModelParameters, f: FinancialContext) -> float:
    return vbeoq(p, f) if _family(p) == "eoq" else vbpoq(p, f)


def tci(q: Quantity, p: ModelParameters) -> Quantity:
    return tci_eoq(q, p) if _family(p) == "eoq" else tci_poq(q, p)


def inventory_value(q: Quantity, p: ModelParameters, round_units: bool = False) -> Quantity:
    if _family(p) == "eoq":
        return inventory_value_eoq(q, p, round_units)
    return inventory_value_poq(q, p, round_units)


def value_cost(q: Quantity, p: ModelParameters, f: FinancialContext) -> Quantity:
    """After-tax inventory cost plus capital charge, ``(1-T) tci + k INV``."""
    return (1.0 - f.tax_rate) * tci(q, p) + f.cost_of_capital * inventory_value(q, p)


def evaluate(q: float, p: ModelParameters, f: FinancialContext) -> PolicyEvaluation:
    cost = float(tci(q, p))
    inv = float(inventory_value(q, p))
    return PolicyEvaluation(
        quantity=float(q),
        tci=cost,
        inventory_value=inv,
        value_cost=(1.0 - f.tax_rate) * cost + f.cost_of_capital * inv,
    )
