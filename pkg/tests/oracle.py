"""Reference computations written straight from the model definitions.

Nothing here imports the package's cost functions, so these stay an
independent check on the vectorized scan and on the closed forms.
"""

import random

from vbinventory import EoqParameters, FinancialContext, PoqParameters


def value_cost_eoq(q, p, tax, k):
    tci = p.demand / q * p.order_cost + (q / 2 + p.safety_stock) * p.unit_cost * p.holding_factor
    inv = (q / 2 + p.safety_stock) * p.unit_cost
    return (1 - tax) * tci + k * inv


def value_cost_poq(q, p, tax, k):
    share = 1 - p.demand / p.max_production
    tci = q / 2 * share * p.unit_cost * p.holding_factor + p.demand / q * p.setup_cost
    inv = p.unit_cost * q / 2 * share
    return (1 - tax) * tci + k * inv


def brute_force_argmin(objective, lo, hi):
    """Smallest integer in [lo, hi] minimizing ``objective``."""
    best_q, best = None, float("inf")
    for q in range(lo, hi + 1):
        c = objective(q)
        if c < best:
            best_q, best = q, c
    return best_q


def local_argmin(objective, guess):
    """Integer minimizer of a convex objective, found by walking from ``guess``."""
    q = max(1, guess)
    while q > 1 and objective(q - 1) <= objective(q):
        q -= 1
    while objective(q + 1) < objective(q):
        q += 1
    return q


def random_instances(n, seed=20240601):
    """Parameter draws over the ranges used by the property suites."""
    rng = random.Random(seed)
    out = []
    for _ in range(n):
        demand = rng.uniform(1e3, 1e6)
        order_cost = rng.uniform(1, 1e4)
        unit_cost = rng.uniform(0.1, 1e3)
        holding = rng.uniform(0.05, 0.5)
        fin = FinancialContext(tax_rate=rng.uniform(0, 0.5), cost_of_capital=rng.uniform(0.01, 0.4))
        eoq_p = EoqParameters(demand, order_cost, unit_cost, holding, safety_stock=rng.uniform(0, 1000))
        poq_p = PoqParameters(demand, demand * rng.uniform(2, 100), order_cost, unit_cost, holding)
        out.append((eoq_p, poq_p, fin))
    return out
