"""Parser for ``key = value`` model configuration files.

Example::

    # purchase lots
    model = eoq
    demand = 220000
    order_cost = 31
    unit_cost = 2
    holding_factor = 0.25
    safety_stock = 300
    tax_rate = 0.19
    wacc = 0.15
    quantity_unit = kg
    currency = $

Numbers use a dot as decimal separator.  Units are taken as given: demand,
costs and quantities must already be expressed in one consistent
(unit, money) pair.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path

from .errors import ConfigError, InvalidParameterError
from .lot_models import EoqParameters, FinancialContext, ModelParameters, PoqParameters

_NUMBER = re.compile(r"[+-]?(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?")
_LINE = re.compile(r"([A-Za-z_][A-Za-z0-9_]*)\s*=\s*(.*)")

_COMMON = ("model", "demand", "unit_cost", "holding_factor", "tax_rate", "wacc")
_LABELS = ("quantity_unit", "currency")
_REQUIRED = {
    "eoq": _COMMON + ("order_cost",),
    "poq": _COMMON + ("order_cost", "max_production"),
}
_OPTIONAL = {
    "eoq": _LABELS + ("safety_stock",),
    "poq": _LABELS,
}
_KNOWN = set(_COMMON) | set(_LABELS) | {"order_cost", "safety_stock", "max_production"}

# Parameter-object field names that differ from config keys.
_FIELD_TO_KEY = {"setup_cost": "order_cost", "cost_of_capital": "wacc"}


@dataclass(frozen=True)
class ModelConfig:
    model: str
    params: ModelParameters
    financial: FinancialContext
    quantity_unit: str = ""
    currency: str = ""


def _strip_comment(line: str) -> str:
    return line.split("#", 1)[0].strip()


def parse_config(text: str) -> ModelConfig:
    """Parse and validate configuration text.

    Raises ConfigError naming the key and line for unknown, missing or
    duplicate keys, malformed numbers and violated model constraints.
    """
    values: dict[str, str] = {}
    lines: dict[str, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = _strip_comment(raw)
        if not body:
            continue
        m = _LINE.fullmatch(body)
        if m is None:
            raise ConfigError("expected 'key = value'", line=lineno)
        key, value = m.group(1), m.group(2).strip()
        if key not in _KNOWN:
            raise ConfigError("unknown key", key=key, line=lineno)
        if key in values:
            raise ConfigError(
                f"duplicate key (first set on line {lines[key]})", key=key, line=lineno
            )
        values[key] = value
        lines[key] = lineno

    if "model" not in values:
        raise ConfigError("missing required key", key="model")
    model = values["model"]
    if model not in _REQUIRED:
        raise ConfigError(f"model must be 'eoq' or 'poq', got {model!r}", key="model", line=lines["model"])

    allowed = set(_REQUIRED[model]) | set(_OPTIONAL[model])
    for key in values:
        if key not in allowed:
            raise ConfigError(f"not used by the {model} model", key=key, line=lines[key])
    for key in _REQUIRED[model]:
        if key not in values:
            raise ConfigError("missing required key", key=key)

    numbers: dict[str, float] = {}
    for key, value in values.items():
        if key == "model" or key in _LABELS:
            continue
        if not _NUMBER.fullmatch(value):
            raise ConfigError(f"malformed number {value!r}", key=key, line=lines[key])
        numbers[key] = float(value)

    try:
        financial = FinancialContext(tax_rate=numbers["tax_rate"], cost_of_capital=numbers["wacc"])
        if model == "eoq":
            params: ModelParameters = EoqParameters(
                demand=numbers["demand"],
                order_cost=numbers["order_cost"],
                unit_cost=numbers["unit_cost"],
                holding_factor=numbers["holding_factor"],
                safety_stock=numbers.get("safety_stock", 0.0),
            )
        else:
            params = PoqParameters(
                demand=numbers["demand"],
                max_production=numbers["max_production"],
                setup_cost=numbers["order_cost"],
                unit_cost=numbers["unit_cost"],
                holding_factor=numbers["holding_factor"],
            )
    except InvalidParameterError as exc:
        key = _FIELD_TO_KEY.get(exc.field, exc.field)
        raise ConfigError(str(exc), key=key, line=lines.get(key)) from exc

    return ModelConfig(
        model=model,
        params=params,
        financial=financial,
        quantity_unit=values.get("quantity_unit", ""),
        currency=values.get("currency", ""),
    )


def load_config(path: str | Path) -> ModelConfig:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"cannot read {path}: {exc.strerror}") from exc
    return parse_config(text)
