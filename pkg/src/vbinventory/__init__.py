"""Classical and value-based lot sizing (EOQ, VBEOQ, POQ, VBPOQ) with a
firm-valuation layer for comparing inventory policies."""

from .errors import (
    CapacityError,
    ConfigError,
    InvalidParameterError,
    InventoryModelError,
    PerpetuityUndefinedError,
)
from .lot_models import (
    EoqParameters,
    FinancialContext,
    PoqParameters,
    PolicyEvaluation,
    classical_quantity,
    eoq,
    inventory_value,
    inventory_value_eoq,
    inventory_value_poq,
    poq,
    tci,
    tci_eoq,
    tci_poq,
    value_based_quantity,
    value_cost,
    vbeoq,
    vbpoq,
)
from .search import ScanResult, SweepRow, minimize_value_cost, sweep
from .valuation import (
    CashFlowInputs,
    EvaInputs,
    NwcComponents,
    RoundingMode,
    ValuationDelta,
    compare_policies,
    eva,
    evaluate_policy,
    fcff,
    nopat,
    nwc,
    perpetuity_value,
    present_value_of_deltas,
)

__all__ = [name for name in dir() if not name.startswith("_")]
