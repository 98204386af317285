"""j-invariant machinery: calibration, invariance, and cross-agreement."""

import random
from fractions import Fraction

import pytest

from segrecr.invariants import (
    SingularCurveError,
    cross_ratio_j,
    j_invariant_cubic,
    j_invariant_quartic,
)
from segrecr.parsing import parse_polynomial
from segrecr.polynomials import Polynomial

XYZ = ["x", "y", "z"]


def _weierstrass(p, q):
    return parse_polynomial(f"y^2*z - x^3 - {p}*x*z^2 - {q}*z^3".replace("- -", "+ "), XYZ)


def _expected_j(p, q):
    return Fraction(1728 * 4 * p**3, 4 * p**3 + 27 * q**2)


def test_fermat_cubic_has_j_zero():
    assert j_invariant_cubic(parse_polynomial("x^3 + y^3 + z^3", XYZ)) == 0


def test_harmonic_weierstrass_has_j_1728():
    assert j_invariant_cubic(_weierstrass(-1, 0)) == 1728


@pytest.mark.parametrize("p,q", [(1, 1), (2, 3), (-5, 7), (11, -4), (1, -10)])
def test_weierstrass_matches_closed_form(p, q):
    assert j_invariant_cubic(_weierstrass(p, q)) == _expected_j(p, q)


def test_cubic_j_is_projective_invariant():
    rng = random.Random(8)
    base = _weierstrass(2, 5)
    j0 = j_invariant_cubic(base)
    count = 0
    while count < 6:
        rows = [[rng.randint(-3, 3) for _ in range(3)] for _ in range(3)]
        from segrecr.linalg import ExactMatrix

        if ExactMatrix([[Fraction(v) for v in r] for r in rows]).det() == 0:
            continue
        assert j_invariant_cubic(base.substitute_linear(rows)) == j0
        count += 1


def test_singular_cubic_rejected():
    nodal = parse_polynomial("y^2*z - x^3 - x^2*z", XYZ)  # node at the origin
    with pytest.raises(SingularCurveError):
        j_invariant_cubic(nodal)
    triangle = parse_polynomial("x*y*z", XYZ)
    with pytest.raises(SingularCurveError):
        j_invariant_cubic(triangle)


def _quartic_with_roots(lam: Fraction) -> Polynomial:
    t = Polynomial.variable(2, 0, Fraction(1))
    u = Polynomial.variable(2, 1, Fraction(1))
    return u * t * (t - u) * (t - u * lam)


def test_cross_ratio_formula_values():
    assert cross_ratio_j(Fraction(-1)) == 1728
    assert cross_ratio_j(Fraction(2)) == 1728  # harmonic orbit
    assert cross_ratio_j(Fraction(3)) == Fraction(21952, 9)


@pytest.mark.parametrize("lam", [Fraction(5), Fraction(-7, 2), Fraction(9, 4), Fraction(12)])
def test_quartic_j_matches_cross_ratio(lam):
    assert j_invariant_quartic(_quartic_with_roots(lam)) == cross_ratio_j(lam)


def test_quartic_j_moebius_invariant():
    q = _quartic_with_roots(Fraction(7, 3))
    j0 = j_invariant_quartic(q)
    for sub in ([[2, 1], [1, -1]], [[1, 3], [0, 1]], [[0, 1], [1, 0]]):
        assert j_invariant_quartic(q.substitute_linear(sub)) == j0


def test_repeated_roots_rejected():
    t = Polynomial.variable(2, 0, Fraction(1))
    u = Polynomial.variable(2, 1, Fraction(1))
    squared = t * t * (t - u) * (t - 2 * u)
    with pytest.raises(SingularCurveError):
        j_invariant_quartic(squared)


def test_cross_ratio_degenerate_rejected():
    with pytest.raises(ValueError):
        cross_ratio_j(Fraction(1))
