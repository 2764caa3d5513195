"""Shared helpers: independent oracles and deterministic sampling."""

from fractions import Fraction
from pathlib import Path

import pytest

from tropdeg import linalg
from tropdeg.cycles import TropicalCycle
from tropdeg.ops import Rng

ROOT = Path(__file__).resolve().parents[1]
FIXTURE_DIR = ROOT / "fixtures"


def fixture_path(name: str) -> Path:
    return FIXTURE_DIR / f"{name}.cyc"


def transverse_degree_oracle(c1: TropicalCycle, c2: TropicalCycle) -> int:
    """Independent intersection count for cycles in transverse position.

    Sums weight products times lattice indices over facet pairs meeting in
    a single point; no displacement, no refinement.  Raises if any meeting
    is not a transverse point, so it cannot silently cover other cases.
    """
    m = c1.m
    assert c1.dim + c2.dim == m
    total = 0
    for f1 in c1.support_facets:
        for f2 in c2.support_facets:
            inter = f1.poly.intersect(f2.poly)
            if inter.is_empty:
                continue
            assert inter.dim == 0, "oracle requires transverse position"
            dirs = f1.poly.direction_basis() + f2.poly.direction_basis()
            assert linalg.rank(dirs) == m, "oracle requires transverse position"
            total += f1.weight * f2.weight * linalg.lattice_index(dirs, m)
    return total


def min_attained_twice(coeffs, point) -> bool:
    """Membership oracle for the hyperplane locus, straight from the definition."""
    vals = [Fraction(coeffs[0])]
    vals += [Fraction(c) + Fraction(x) for c, x in zip(coeffs[1:], point)]
    low = min(vals)
    return sum(1 for v in vals if v == low) >= 2


def cycle_contains(cycle: TropicalCycle, point) -> bool:
    return any(f.poly.contains(point) for f in cycle.support_facets)


def seeded_points(seed: int, count: int, m: int, num_bound: int = 40,
                  den_bound: int = 7):
    rng = Rng(seed)
    return [rng.vector(m, num_bound=num_bound, den_bound=den_bound)
            for _ in range(count)]


def fresh(cycle: TropicalCycle) -> TropicalCycle:
    """Same cycle, new object: drops memoized validation verdicts."""
    return TropicalCycle(cycle.ambient, cycle.facets)


@pytest.fixture
def rng():
    return Rng(20240817)
