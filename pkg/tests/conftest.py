from pathlib import Path

import pytest

from vbinventory import EoqParameters, FinancialContext, PoqParameters

ROOT = Path(__file__).resolve().parents[1]
CONFIGS = ROOT / "configs"
GOLDEN = Path(__file__).resolve().parent / "golden"


@pytest.fixture
def example1():
    return EoqParameters(demand=220_000, order_cost=31, unit_cost=2, holding_factor=0.25, safety_stock=300)


@pytest.fixture
def example2():
    # unit cost per ton, quantities in tons
    return PoqParameters(demand=2_500, max_production=10_000, setup_cost=12_000, unit_cost=800, holding_factor=0.25)


@pytest.fixture
def fin():
    return FinancialContext(tax_rate=0.19, cost_of_capital=0.15)
