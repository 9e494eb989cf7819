"""Exception hierarchy shared by the library and the command line."""

from __future__ import annotations


class InventoryModelError(ValueError):
    """Base class for every validation failure raised by this package."""


class InvalidParameterError(InventoryModelError):
    """A model input violates its range or positivity constraint."""

    def __init__(self, field: str, message: str) -> None:
        super().__init__(f"{field}: {message}")
        self.field = field


class CapacityError(InvalidParameterError):
    """Demand is not strictly below the production capacity."""


class PerpetuityUndefinedError(InventoryModelError):
    """Perpetuity valuation needs a strictly positive cost of capital."""


class ConfigError(InventoryModelError):
    """A configuration file could not be parsed or validated."""

    def __init__(self, message: str, key: str | None = None, line: int | None = None) -> None:
        where = []
        if line is not None:
            where.append(f"line {line}")
        if key is not None:
            where.append(f"key '{key}'")
        prefix = f"{', '.join(where)}: " if where else ""
        super().__init__(prefix + message)
        self.key = key
        self.line = line
