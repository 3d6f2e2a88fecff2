import itertools
import random

import pytest
from hypothesis import strategies as st

from hsmult.ideal import IdealPresentation
from hsmult.monomial import MonomialIdeal

XY = ("x", "y")
XYZ = ("x", "y", "z")


def ideal(*gens, ambient=XY):
    return IdealPresentation.from_strings(list(gens), ambient)


def monomial_to_ideal(points, ambient=XY):
    gens = []
    for p in points:
        factors = [f"{v}^{e}" for v, e in zip(ambient, p) if e]
        gens.append("*".join(factors) or "1")
    return ideal(*gens, ambient=ambient)


def random_primary_points(rng, dim=2, top=6, extra=3):
    """Exponent vectors of a random monomial ideal primary to the origin."""
    pts = []
    for v in range(dim):
        p = [0] * dim
        p[v] = rng.randint(1, top)
        pts.append(tuple(p))
    for _ in range(rng.randint(0, extra)):
        pts.append(tuple(rng.randint(0, top - 1) for _ in range(dim)))
    pts = [p for p in pts if any(p)]
    return pts


def brute_staircase(points):
    """Count lattice points not dominating any generator, by box enumeration."""
    dim = len(points[0])
    box = [max(p[v] for p in points) + 1 for v in range(dim)]
    count = 0
    for q in itertools.product(*(range(b) for b in box)):
        if not any(all(a <= b for a, b in zip(p, q)) for p in points):
            count += 1
    return count


@st.composite
def primary_monomial_ideals(draw, dim=2, top=6):
    pts = []
    for v in range(dim):
        p = [0] * dim
        p[v] = draw(st.integers(1, top))
        pts.append(tuple(p))
    interior = draw(st.lists(st.tuples(*[st.integers(0, top - 1)] * dim), max_size=3))
    pts.extend(p for p in interior if any(p))
    return MonomialIdeal(pts, dim)


@pytest.fixture
def rng():
    return random.Random(12345)


def pytest_terminal_summary(terminalreporter):
    import sys
    module = sys.modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in module.summary_lines():
        terminalreporter.write_line(line)
