import math
from dataclasses import replace

import numpy as np
import pytest

from vbinventory import (
    CapacityError,
    EoqParameters,
    FinancialContext,
    InvalidParameterError,
    PoqParameters,
    eoq,
    inventory_value_eoq,
    inventory_value_poq,
    poq,
    tci,
    tci_eoq,
    tci_poq,
    value_cost,
    vbeoq,
    vbpoq,
)

from oracle import brute_force_argmin, value_cost_eoq, value_cost_poq


# --- validation --------------------------------------------------------------


@pytest.mark.parametrize(
    "field, value",
    [
        ("demand", 0),
        ("order_cost", -1),
        ("unit_cost", 0),
        ("holding_factor", 0),
        ("holding_factor", 1.5),
        ("safety_stock", -1),
        ("demand", float("nan")),
    ],
)
def test_eoq_parameters_reject_bad_field(example1, field, value):
    with pytest.raises(InvalidParameterError) as info:
        replace(example1, **{field: value})
    assert info.value.field == field


def test_holding_factor_of_one_is_allowed(example1):
    replace(example1, holding_factor=1.0)


def test_poq_requires_demand_below_capacity(example2):
    with pytest.raises(CapacityError):
        replace(example2, demand=12_000)
    with pytest.raises(CapacityError):
        replace(example2, demand=10_000)


@pytest.mark.parametrize("tax, k", [(1.0, 0.1), (-0.1, 0.1), (0.2, -0.01)])
def test_financial_context_ranges(tax, k):
    with pytest.raises(InvalidParameterError):
        FinancialContext(tax_rate=tax, cost_of_capital=k)


@pytest.mark.parametrize("q", [0, -5, float("inf")])
def test_cost_functions_reject_non_positive_quantity(example1, example2, q):
    for fn, p in [(tci_eoq, example1), (inventory_value_eoq, example1), (tci_poq, example2), (inventory_value_poq, example2)]:
        with pytest.raises(InvalidParameterError):
            fn(q, p)


# --- purchase lots -----------------------------------------------------------


def test_eoq_example1(example1):
    assert eoq(example1) == pytest.approx(5223.03, abs=0.01)
    assert round(eoq(example1)) == 5223


def test_eoq_trivial_cancellation():
    assert eoq(EoqParameters(demand=2, order_cost=1, unit_cost=1, holding_factor=1)) == 2.0


def test_eoq_scales_with_sqrt_demand(example1):
    assert eoq(replace(example1, demand=880_000)) == pytest.approx(2 * eoq(example1), rel=1e-12)
    assert eoq(replace(example1, demand=880_000)) == pytest.approx(10446.05, abs=0.01)


@pytest.mark.parametrize("q, expected", [(5223, 2762), (5000, 2764), (3959, 2862)])
def test_tci_eoq_example1(example1, q, expected):
    assert tci_eoq(q, example1) == pytest.approx(expected, abs=1)


def test_inventory_value_eoq(example1):
    assert inventory_value_eoq(5000, example1) == 5600
    # 2911.5 kg of average stock is carried as 2912 kg in the worked figures
    assert inventory_value_eoq(5223, example1) == 5823
    assert inventory_value_eoq(5223, example1, round_units=True) == 5824
    assert inventory_value_eoq(2, EoqParameters(1, 1, 1, 1, 0)) == 1


def test_vbeoq_example1(example1, fin):
    assert vbeoq(example1, fin) == pytest.approx(3958.7, abs=0.05)
    assert round(vbeoq(example1, fin)) == 3959


@pytest.mark.parametrize("tax", [0.0, 0.19, 0.45])
def test_vbeoq_reduces_to_eoq_without_capital_charge(example1, tax):
    f = FinancialContext(tax_rate=tax, cost_of_capital=0.0)
    assert vbeoq(example1, f) == pytest.approx(eoq(example1), rel=1e-12)


def test_vbeoq_matches_exhaustive_scan(example1, fin):
    best = brute_force_argmin(lambda q: value_cost_eoq(q, example1, 0.19, 0.15), 1, 20_000)
    assert best == 3959
    assert abs(best - vbeoq(example1, fin)) <= 1


# --- production lots ---------------------------------------------------------


def test_poq_example2(example2):
    assert poq(example2) == pytest.approx(632.46, abs=0.005)


def test_poq_approaches_eoq_for_large_capacity(example2):
    p = replace(example2, max_production=1e12)
    e = EoqParameters(p.demand, p.setup_cost, p.unit_cost, p.holding_factor)
    assert poq(p) == pytest.approx(eoq(e), rel=1e-4)


def test_poq_inverse_sqrt_in_holding_factor(example2):
    assert poq(replace(example2, holding_factor=0.125)) == pytest.approx(894.43, abs=0.005)


@pytest.mark.parametrize("q, expected", [(633, 94868), (570, 95382), (479, 98555)])
def test_tci_poq_example2(example2, q, expected):
    assert tci_poq(q, example2) == pytest.approx(expected, abs=1)


def test_inventory_value_poq(example2):
    assert inventory_value_poq(633, example2) == pytest.approx(189_900)
    assert inventory_value_poq(633, example2, round_units=True) == 189_600
    assert inventory_value_poq(570, example2) == 171_000
    assert inventory_value_poq(479, example2) == 143_700


def test_vbpoq_example2(example2, fin):
    assert vbpoq(example2, fin) == pytest.approx(479.4, abs=0.05)
    assert round(vbpoq(example2, fin)) == 479


def test_vbpoq_reduces_to_poq_without_capital_charge(example2):
    assert vbpoq(example2, FinancialContext(0.19, 0.0)) == pytest.approx(poq(example2), rel=1e-12)


def test_vbpoq_matches_exhaustive_scan(example2, fin):
    best = brute_force_argmin(lambda q: value_cost_poq(q, example2, 0.19, 0.15), 1, 6330)
    assert best == 479


# --- value cost --------------------------------------------------------------


def test_value_cost_degenerates_to_tci(example1, example2):
    f = FinancialContext(0.0, 0.0)
    for p in (example1, example2):
        assert value_cost(517, p, f) == tci(517, p)


def test_value_cost_matches_reference(example1, example2, fin):
    assert value_cost(4100, example1, fin) == pytest.approx(value_cost_eoq(4100, example1, 0.19, 0.15), rel=1e-14)
    assert value_cost(500, example2, fin) == pytest.approx(value_cost_poq(500, example2, 0.19, 0.15), rel=1e-14)


def test_value_cost_prefers_value_based_run(example2, fin):
    assert value_cost(479, example2, fin) < value_cost(633, example2, fin)


def test_value_cost_at_vbeoq_beats_whole_integer_range(example1, fin):
    grid = np.arange(1, 20_001, dtype=float)
    assert value_cost(3959, example1, fin) <= value_cost(grid, example1, fin).min()


def test_cost_functions_accept_arrays(example1):
    qs = np.array([1000.0, 5000.0])
    np.testing.assert_allclose(tci_eoq(qs, example1), [tci_eoq(1000, example1), tci_eoq(5000, example1)])


# --- properties --------------------------------------------------------------


@pytest.mark.parametrize("delta", [0.001, 0.01, 0.1, 0.5])
def test_eoq_minimizes_tci(example1, delta):
    q = eoq(example1)
    assert tci_eoq(q, example1) <= tci_eoq(q * (1 + delta), example1)
    assert tci_eoq(q, example1) <= tci_eoq(q * (1 - delta), example1)


def test_value_based_strictly_below_classical(example1, example2):
    for k in (1e-4, 0.05, 0.4):
        for tax in (0.0, 0.3, 0.9):
            f = FinancialContext(tax, k)
            assert vbeoq(example1, f) < eoq(example1)
            assert vbpoq(example2, f) < poq(example2)


def test_vbeoq_monotone_in_k_and_tax(example1):
    ks = np.linspace(0.01, 0.4, 10)
    taxes = np.linspace(0.0, 0.6, 10)
    grid = np.array([[vbeoq(example1, FinancialContext(t, k)) for t in taxes] for k in ks])
    assert np.all(np.diff(grid, axis=0) < 0)  # along k
    assert np.all(np.diff(grid, axis=1) < 0)  # along T


def test_poq_limit_gap_at_huge_capacity(example2):
    p = replace(example2, max_production=1e6 * example2.demand)
    e = EoqParameters(p.demand, p.setup_cost, p.unit_cost, p.holding_factor, 0.0)
    assert abs(poq(p) - eoq(e)) / eoq(e) < 1e-6


@pytest.mark.parametrize("lam", [1e-3, 0.37, 12.5, 1e4])
def test_homogeneous_in_order_and_unit_cost(example1, example2, fin, lam):
    e = replace(example1, order_cost=example1.order_cost * lam, unit_cost=example1.unit_cost * lam)
    p = replace(example2, setup_cost=example2.setup_cost * lam, unit_cost=example2.unit_cost * lam)
    assert eoq(e) == pytest.approx(eoq(example1), rel=1e-12)
    assert vbeoq(e, fin) == pytest.approx(vbeoq(example1, fin), rel=1e-12)
    assert poq(p) == pytest.approx(poq(example2), rel=1e-12)
    assert vbpoq(p, fin) == pytest.approx(vbpoq(example2, fin), rel=1e-12)


def test_value_based_points_are_stationary(example1, example2, fin):
    for p, q_star in [(example1, vbeoq(example1, fin)), (example2, vbpoq(example2, fin))]:
        h = q_star * 1e-4
        slope = (value_cost(q_star + h, p, fin) - value_cost(q_star - h, p, fin)) / (2 * h)
        assert abs(slope) < 1e-6 * value_cost(q_star, p, fin) / q_star
        # strict convexity around the stationary point
        second = value_cost(q_star + h, p, fin) - 2 * value_cost(q_star, p, fin) + value_cost(q_star - h, p, fin)
        assert second > 0


def test_safety_stock_does_not_move_optima(example1, fin):
    bare = replace(example1, safety_stock=0)
    assert eoq(bare) == eoq(example1)
    assert vbeoq(bare, fin) == vbeoq(example1, fin)
    assert math.isclose(tci_eoq(4000, example1) - tci_eoq(4000, bare), 300 * 2 * 0.25)
