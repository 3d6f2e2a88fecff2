"""Acceptance criteria, one test per criterion.

Each test records a PASS/FAIL line; the lines are printed in the terminal
summary of a pytest run, or directly when this file is run as a script.
"""

import functools
import math
import random
import time

import pytest

from hsmult import multiplicity as mult
from hsmult.blowdown import (BasePointDatum, BoundsInput, LineBundleDatum, Semigroup,
                             dseq_from_semigroup, first_nongap, lambda_multiplicity,
                             line_bundle_of_point, mult_bounds, rs_blowdown_multiplicity,
                             vol_control_check)
from hsmult.chern import GradedClass, IntersectionTable, top_segre_integral
from hsmult.curve import BranchSeries, CurveGerm, curve_lelong_number, verify_thm13_curve
from hsmult.ideal import IdealPresentation, ideal_power_product
from hsmult.monomial import MonomialIdeal, newton_multiplicity_2d
from hsmult.multiplicity import (hs_multiplicity, mixed_multiplicity, polarization_check,
                                 rees_sharp_check)
from hsmult.poly import Polynomial

XY = ("x", "y")
RESULTS = {}


def criterion(number, title):
    def wrap(fn):
        @functools.wraps(fn)
        def run(*args, **kwargs):
            start = time.perf_counter()
            try:
                detail = fn(*args, **kwargs)
            except Exception as exc:
                RESULTS[number] = (False, title, f"{type(exc).__name__}: {exc}",
                                   time.perf_counter() - start)
                raise
            RESULTS[number] = (True, title, detail or "", time.perf_counter() - start)
        return run
    return wrap


def summary_lines():
    lines = []
    for number in sorted(RESULTS):
        passed, title, detail, elapsed = RESULTS[number]
        status = "PASS" if passed else "FAIL"
        lines.append(f"[{status}] criterion {number:2d} {title} ({elapsed:.2f} s) {detail}".rstrip())
    return lines


def ideal(*gens, ambient=XY):
    return IdealPresentation.from_strings(list(gens), ambient)


def monomial_ideal(points, ambient=XY):
    gens = ["*".join(f"{v}^{e}" for v, e in zip(ambient, p) if e) or "1" for p in points]
    return ideal(*gens, ambient=ambient)


def random_primary(rng, top=4, extra=2):
    pts = [(rng.randint(1, top), 0), (0, rng.randint(1, top))]
    pts += [(rng.randint(0, top - 1), rng.randint(0, top - 1)) for _ in range(rng.randint(0, extra))]
    return MonomialIdeal([p for p in pts if any(p)])


# ---------------------------------------------------------------------------


@criterion(1, "complete intersections e(x^a, y^b) = ab on both backends")
def test_complete_intersections():
    slowest = 0.0
    for a in range(1, 7):
        for b in range(1, 7):
            U = monomial_ideal([(a, 0), (0, b)])
            for backend in ("general", "monomial"):
                start = time.perf_counter()
                value = hs_multiplicity(U, backend=backend).value
                elapsed = time.perf_counter() - start
                slowest = max(slowest, elapsed)
                assert value == a * b, (a, b, backend, value)
                assert elapsed < 1.0, (a, b, backend, elapsed)
    return f"72 cases, slowest {slowest:.3f} s"


@criterion(2, "cusp family: curve Lelong number = multiplicity = a")
def test_cusp_family():
    start = time.perf_counter()
    rep = verify_thm13_curve(CurveGerm([BranchSeries.from_strings(["t^2", "t^3"], 24)], XY),
                             ideal("y^2 - x^3"), ideal("x", "y"))
    assert (rep.lelong, rep.hs, rep.equal) == (2, 2, True)
    count = 0
    for a in range(2, 8):
        for b in range(a + 1, 8):
            if math.gcd(a, b) != 1:
                continue
            Y = CurveGerm([BranchSeries.from_strings([f"t^{a}", f"t^{b}"], 24)], XY)
            rep = verify_thm13_curve(Y, ideal(f"y^{a} - x^{b}"), ideal("x", "y"))
            assert (rep.lelong, rep.hs, rep.equal) == (a, a, True), (a, b, rep)
            count += 1
    elapsed = time.perf_counter() - start
    assert elapsed < 5.0
    return f"{count} cusps"


@criterion(3, "polarization identity on 20 random pairs, all p in {1,2,3}^2")
def test_polarization_identity():
    rng = random.Random(301)
    start = time.perf_counter()
    for _ in range(20):
        U = monomial_ideal(random_primary(rng).points)
        V = monomial_ideal(random_primary(rng).points)
        for p in ((p1, p2) for p1 in (1, 2, 3) for p2 in (1, 2, 3)):
            rep = polarization_check([U, V], list(p))
            assert rep.equal and rep.lhs == rep.rhs, (str(U), str(V), p, rep.lhs, rep.rhs)
    elapsed = time.perf_counter() - start
    assert elapsed < 60.0
    return "180 identities"


@criterion(4, "Rees-Sharp log-convexity on 20 random pairs and the (6,2,1) chain")
def test_rees_sharp():
    rep = rees_sharp_check(ideal("x", "y"), ideal("x^2", "y^3"))
    assert rep.chain == [6, 2, 1] and rep.passed
    rng = random.Random(402)
    for _ in range(20):
        U = monomial_ideal(random_primary(rng).points)
        V = monomial_ideal(random_primary(rng).points)
        rep = rees_sharp_check(U, V)
        e0, e1, e2 = rep.chain
        assert rep.passed and e1 * e1 <= e0 * e2, (str(U), str(V), rep.chain)
    return "chain (6, 2, 1) reproduced"


@criterion(5, "Newton polygon area = Groebner finite differences on 100 ideals")
def test_newton_groebner_agreement():
    rng = random.Random(505)
    start = time.perf_counter()
    for _ in range(100):
        I = random_primary(rng, top=6, extra=3)
        newton = newton_multiplicity_2d(I)
        hs = hs_multiplicity(monomial_ideal(I.points), backend="general").value
        assert newton == hs, (I.points, newton, hs)
    elapsed = time.perf_counter() - start
    assert elapsed < 120.0
    return "100 ideals"


@criterion(6, "blow-down golden values for canonical and point bundles")
def test_golden_values():
    start = time.perf_counter()
    for g in range(2, 7):
        assert rs_blowdown_multiplicity(LineBundleDatum(1, 2 * g - 2)) == 2 * g - 2
    assert rs_blowdown_multiplicity(LineBundleDatum(1, 2)) == 2
    for g in range(1, 9):
        b = BasePointDatum(g + 1, list(range(1, g + 1)) + [0])
        assert rs_blowdown_multiplicity(LineBundleDatum(1, 1, [b])) == g + 1
    assert time.perf_counter() - start < 1.0


GAP_SETS = [(), (1,), (1, 2), (1, 3), (1, 2, 3), (1, 2, 4), (1, 2, 3, 4), (1, 2, 4, 5),
            (1, 2, 3, 5), (1, 2, 5), (1, 3, 5), (1, 2, 3, 4, 5)]


@criterion(7, "semigroup pipeline gives the first nongap")
def test_semigroup_pipeline():
    assert len(GAP_SETS) >= 10
    for gaps in GAP_SETS:
        S = Semigroup(gaps)
        b = dseq_from_semigroup(S)
        L = LineBundleDatum(1, 1, [] if b is None else [b])
        assert rs_blowdown_multiplicity(L) == first_nongap(S), gaps
    return f"{len(GAP_SETS)} gap sets"


def blowdown_test_data():
    data = [LineBundleDatum(1, 2 * g - 2) for g in range(2, 7)]
    data.append(LineBundleDatum(1, 2))
    data += [LineBundleDatum(1, 1, [BasePointDatum(g + 1, list(range(1, g + 1)) + [0])])
             for g in range(1, 9)]
    data += [line_bundle_of_point(Semigroup(gaps)) for gaps in GAP_SETS]
    data += [LineBundleDatum(2, 3, [BasePointDatum(4, (3, 1, 0)), BasePointDatum(3, (2, 0))]),
             LineBundleDatum(3, 1, [BasePointDatum(5, (1, 4, 0))]),
             LineBundleDatum(2, 5)]
    return data


@criterion(8, "multiplicity = k0^2 deg exactly when there are no base points")
def test_base_point_dichotomy():
    data = blowdown_test_data()
    for L in data:
        for b in L.base_points:
            assert lambda_multiplicity(b, L.k0) >= 1
        m = rs_blowdown_multiplicity(L)
        assert (m == L.k0 ** 2 * L.degree) == (not L.base_points), L
        assert m >= L.k0 ** 2 * L.degree
    return f"{len(data)} data"


@criterion(9, "bounds pinch on base-point-free data; volume control slack 0")
def test_bounds():
    for L in blowdown_test_data():
        if L.base_points:
            continue
        lo, hi = mult_bounds(BoundsInput(L.k0, L.k0, 1, 1, L.degree, 0))
        assert lo == hi == rs_blowdown_multiplicity(L)
    for g in range(1, 9):
        rep = vol_control_check(BoundsInput(1, g + 1, 1, 1, 1, g))
        assert rep.passed and rep.slack == 0 and rep.bound == g


@criterion(10, "top Segre integral = blow-down multiplicity for generated line bundles")
def test_segre_matches_blowdown():
    c = GradedClass.chern(1, 1, ["c1"])
    for degree in [2 * g - 2 for g in range(2, 7)] + [2]:
        table = IntersectionTable.from_json({"c1": degree}, ("c1",), (1,), 1)
        assert top_segre_integral(c, table) == rs_blowdown_multiplicity(LineBundleDatum(1, degree))


@criterion(11, "invariance suites for multiplicities and Lelong numbers")
def test_invariance_suites():
    cases = [
        (ideal("x^2", "y^3"), None),
        (ideal("x", "y"), ideal("y^2 - x^3")),
        (ideal("x^2 + y^3", "y^2"), None),
        (ideal("x^3", "x*y", "y^4"), None),
        (ideal("x^2", "x*y", "y^2"), None),
        (ideal("x^3", "y^2 - x^2"), None),
        (ideal("x", "y^2"), None),
        (ideal("x^2", "y"), ideal("y^2 - x^5")),
        (ideal("x - y^2", "y^3"), None),
        (ideal("x^2", "y^2"), ideal("y^3 - x^4")),
    ]
    for U, J in cases:
        base = hs_multiplicity(U, J).value
        g = U.generators
        augmented = U + IdealPresentation([g[0] * g[-1] + g[0], g[-1].scale(5) - g[0]], XY)
        assert hs_multiplicity(augmented, J).value == base, str(U)

    germs = [(["t^2", "t^3"], ("x", "y")), (["t^3", "t^5"], ("x^2", "y")),
             (["t", "t^2"], ("x", "y")), (["t^3", "t^4"], ("x^2", "x*y", "y^2")),
             (["t^2", "t^5"], ("y",)), (["t^4", "t^5"], ("x", "y^3")),
             (["t + t^2", "t^3"], ("x", "y")), (["t^2", "t^3 + t^4"], ("x^2", "y^2")),
             (["t^5", "t^7"], ("x*y", "x^3")), (["t^3", "t^7"], ("x^2 + y", "y^2"))]
    for branch, gens in germs:
        Y = CurveGerm([BranchSeries.from_strings(branch, 24)], XY)
        U = ideal(*gens)
        base = curve_lelong_number(Y, U)
        g = U.generators
        for extra in (g[0] * g[-1], g[0].scale(3) + g[-1] * g[-1]):
            assert curve_lelong_number(Y, U + IdealPresentation([extra], XY)) == base

    for U, J in cases[:6]:
        n = 1 if J is not None else 2
        e = hs_multiplicity(U, J).value
        for p in (1, 2, 3):
            assert hs_multiplicity(ideal_power_product([U], [p]), J).value == p ** n * e

    rng = random.Random(1101)
    for _ in range(10):
        U = monomial_ideal(random_primary(rng).points)
        V = monomial_ideal(random_primary(rng).points)
        assert mixed_multiplicity([U, V], [1, 1]).value == mixed_multiplicity([V, U], [1, 1]).value
    return "10 ideals, 10 germs, 10 symmetric pairs"


@criterion(12, "mixed-difference extraction self-test before any report")
def test_extraction_self_test():
    rng = random.Random(1201)
    for k, n in ((2, 2), (2, 3), (3, 3), (3, 4)):
        assert mult.verify_extraction_identity(k, n, rng)
    # single parameter: Delta^n P = n! times the leading coefficient
    for n in (1, 2, 3, 4):
        p = mult.random_hilbert_polynomial(1, n, rng)
        lead = p.terms[(n,)]
        delta = mult.symbolic_mixed_difference(p, [n])
        assert delta == Polynomial.constant(math.factorial(n) * lead, p.ambient)
    saved = set(mult._SELF_TESTED)
    mult._SELF_TESTED.clear()
    try:
        mixed_multiplicity([ideal("x", "y"), ideal("x^2", "y^3")], [1, 1])
        assert (2, 2) in mult._SELF_TESTED
        hs_multiplicity(ideal("x", "y"), ideal("y^2 - x^3"))
        assert (1, 1) in mult._SELF_TESTED
    finally:
        mult._SELF_TESTED.update(saved)


if __name__ == "__main__":
    import sys
    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
