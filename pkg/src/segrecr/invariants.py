"""Exact j-invariants of plane cubics and of 4-point configurations on a line.

Ternary cubics: the Hessian of a pencil member lambda*F + mu*Hess(F) is
again a combination P(lambda, mu) F + Q(lambda, mu) Hess(F); because the
invariant ring of ternary cubics is generated in degrees 4 and 6, the
binary coefficients of P are universal multiples of the two generators.
They are extracted here by exact linear algebra, and the two universal
normalization constants of j are pinned by Weierstrass curves with known
j-invariant. No classical coefficient formulas are relied on.

Binary quartics: the degree-2 and degree-3 invariants come from
transvectants, normalized the same way against the cross-ratio formula
j = 256 (l^2 - l + 1)^3 / (l^2 (l - 1)^2).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb

from .linalg import ExactMatrix
from .polynomials import Polynomial


class SingularCurveError(ValueError):
    pass


# -- ternary cubics ------------------------------------------------------


def hessian_determinant(cubic: Polynomial) -> Polynomial:
    n = cubic.nvars
    h = [[cubic.partial(i).partial(j) for j in range(n)] for i in range(n)]
    if n != 3:
        raise ValueError("Hessian determinant implemented for ternary forms")
    return (
        h[0][0] * (h[1][1] * h[2][2] - h[1][2] * h[2][1])
        - h[0][1] * (h[1][0] * h[2][2] - h[1][2] * h[2][0])
        + h[0][2] * (h[1][0] * h[2][1] - h[1][1] * h[2][0])
    )


_CUBIC_MONOMIALS = [
    (3, 0, 0), (2, 1, 0), (2, 0, 1), (1, 2, 0), (1, 1, 1),
    (1, 0, 2), (0, 3, 0), (0, 2, 1), (0, 1, 2), (0, 0, 3),
]


def _cubic_vector(poly: Polynomial):
    return [Fraction(poly.coefficient(e)) for e in _CUBIC_MONOMIALS]


def cubic_invariants(cubic: Polynomial) -> tuple[Fraction, Fraction]:
    """The degree-4 and degree-6 invariants, in the pencil normalization.

    Requires the cubic and its Hessian to be linearly independent, which
    holds for every smooth plane cubic.
    """
    if cubic.nvars != 3 or cubic.degree() != 3 or not cubic.is_homogeneous():
        raise ValueError("expected a homogeneous ternary cubic")
    hess = hessian_determinant(cubic)
    f_vec, h_vec = _cubic_vector(cubic), _cubic_vector(hess)
    basis = ExactMatrix([f_vec, h_vec])
    if basis.rank() != 2:
        raise SingularCurveError("cubic and its Hessian are dependent (degenerate curve)")
    # Hess(lambda F + mu H) expanded in the pencil basis, one graded piece at a time
    five = 5
    lam = Polynomial.variable(five, 3)
    mu = Polynomial.variable(five, 4)
    fx = _embed_xyz(cubic, five)
    hx = _embed_xyz(hess, five)
    member = fx * lam + hx * mu
    big_hess = _hessian_xyz(member)
    pieces: dict[int, Polynomial] = {}
    for e, c in big_hess.terms.items():
        key = e[4]  # mu-degree; lambda-degree is 3 - key
        piece = pieces.setdefault(key, Polynomial.zero(3))
        piece.terms[e[:3]] = piece.terms.get(e[:3], 0) + c
        piece._degree = None
    coeffs_p = {}
    solver = ExactMatrix([[f_vec[i], h_vec[i]] for i in range(10)])
    for k, piece in pieces.items():
        target = _cubic_vector(Polynomial(3, piece.terms))
        sol = solver.solve_right(target)
        if sol is None or not _solves(solver, sol, target):
            raise SingularCurveError("pencil Hessian left the pencil span")
        coeffs_p[k] = sol
    s_raw = Fraction(coeffs_p.get(1, [0, 0])[0])
    t_raw = Fraction(coeffs_p.get(2, [0, 0])[0])
    return s_raw, t_raw


def _solves(matrix: ExactMatrix, sol, target) -> bool:
    return matrix.apply(sol) == list(target)


def _embed_xyz(poly: Polynomial, nvars: int) -> Polynomial:
    return Polynomial(nvars, {e + (0,) * (nvars - 3): c for e, c in poly.terms.items()})


def _hessian_xyz(poly: Polynomial) -> Polynomial:
    h = [[poly.partial(i).partial(j) for j in range(3)] for i in range(3)]
    return (
        h[0][0] * (h[1][1] * h[2][2] - h[1][2] * h[2][1])
        - h[0][1] * (h[1][0] * h[2][2] - h[1][2] * h[2][0])
        + h[0][2] * (h[1][0] * h[2][1] - h[1][1] * h[2][0])
    )


def _weierstrass_cubic(p: int, q: int) -> Polynomial:
    # y^2 z - x^3 - p x z^2 - q z^3
    return Polynomial(
        3,
        {
            (0, 2, 1): Fraction(1),
            (3, 0, 0): Fraction(-1),
            (1, 0, 2): Fraction(-p),
            (0, 0, 3): Fraction(-q),
        },
    )


def _weierstrass_j(p: int, q: int) -> Fraction:
    disc = 4 * p**3 + 27 * q**2
    if disc == 0:
        raise ValueError("singular Weierstrass curve")
    return Fraction(1728 * 4 * p**3, disc)


@lru_cache(maxsize=1)
def _cubic_calibration() -> Fraction:
    """The constant kappa with j = 1728 S^3 / (S^3 + kappa T^2)."""
    s1, t1 = cubic_invariants(_weierstrass_cubic(-1, 0))  # j = 1728, so T must vanish
    if t1 != 0:
        raise AssertionError("calibration failed: T nonzero on the j=1728 curve")
    if s1 == 0:
        raise AssertionError("calibration failed: S zero on the j=1728 curve")
    s0, t0 = cubic_invariants(_weierstrass_cubic(0, 1))  # j = 0, so S must vanish
    if s0 != 0:
        raise AssertionError("calibration failed: S nonzero on the j=0 curve")
    s, t = cubic_invariants(_weierstrass_cubic(1, 1))
    target = _weierstrass_j(1, 1)
    # 1728 s^3 / (s^3 + kappa t^2) = target
    kappa = (Fraction(1728) * s**3 / target - s**3) / t**2
    for pp, qq in ((2, 3), (-5, 7), (11, -4)):
        ss, tt = cubic_invariants(_weierstrass_cubic(pp, qq))
        got = Fraction(1728) * ss**3 / (ss**3 + kappa * tt**2)
        if got != _weierstrass_j(pp, qq):
            raise AssertionError("cubic j calibration failed cross-check")
    return kappa


def j_invariant_cubic(cubic: Polynomial) -> Fraction:
    """Exact j-invariant of a smooth plane cubic over the rationals."""
    s, t = cubic_invariants(cubic)
    kappa = _cubic_calibration()
    denom = s**3 + kappa * t**2
    if denom == 0:
        raise SingularCurveError("vanishing discriminant: the cubic is singular")
    return Fraction(1728) * s**3 / denom


# -- binary quartics -----------------------------------------------------


def transvectant(f: Polynomial, g: Polynomial, r: int) -> Polynomial:
    """Order-r transvectant of binary forms, up to a fixed constant."""
    if f.nvars != 2 or g.nvars != 2:
        raise ValueError("transvectants take binary forms")
    out = Polynomial.zero(2)
    for k in range(r + 1):
        df = _multi_partial(f, r - k, k)
        dg = _multi_partial(g, k, r - k)
        term = df * dg * ((-1) ** k * comb(r, k))
        out = out + term
    return out


def _multi_partial(poly: Polynomial, a: int, b: int) -> Polynomial:
    for _ in range(a):
        poly = poly.partial(0)
    for _ in range(b):
        poly = poly.partial(1)
    return poly


def quartic_invariants(quartic: Polynomial) -> tuple[Fraction, Fraction]:
    """Degree-2 and degree-3 invariants of a binary quartic (raw scaling)."""
    if quartic.nvars != 2 or quartic.is_zero() or quartic.degree() != 4 or not quartic.is_homogeneous():
        raise ValueError("expected a nonzero homogeneous binary quartic")
    i_poly = transvectant(quartic, quartic, 4)
    i_raw = Fraction(i_poly.coefficient((0, 0)))
    hess = transvectant(quartic, quartic, 2)
    j_poly = transvectant(quartic, hess, 4)
    j_raw = Fraction(j_poly.coefficient((0, 0)))
    return i_raw, j_raw


def cross_ratio_j(lam: Fraction) -> Fraction:
    """j = 256 (l^2 - l + 1)^3 / (l^2 (l - 1)^2) for cross-ratio l."""
    lam = Fraction(lam)
    if lam in (0, 1):
        raise ValueError("degenerate cross-ratio")
    return 256 * (lam * lam - lam + 1) ** 3 / (lam * lam * (lam - 1) ** 2)


def _quartic_with_roots(lam: Fraction) -> Polynomial:
    # roots 0, 1, infinity, lam of t/u: u * t * (t - u) * (t - lam u)
    t = Polynomial.variable(2, 0, Fraction(1))
    u = Polynomial.variable(2, 1, Fraction(1))
    return u * t * (t - u) * (t - u * lam)


@lru_cache(maxsize=1)
def _quartic_calibration() -> Fraction:
    """The constant kappa with j = 1728 I^3 / (I^3 + kappa J^2)."""
    i1, j1 = quartic_invariants(_quartic_with_roots(Fraction(-1)))  # harmonic: j = 1728
    if j1 != 0 or i1 == 0:
        raise AssertionError("quartic calibration failed on the harmonic configuration")
    i3, j3 = quartic_invariants(_quartic_with_roots(Fraction(3)))
    target = cross_ratio_j(Fraction(3))
    kappa = (Fraction(1728) * i3**3 / target - i3**3) / j3**2
    for lam in (Fraction(4), Fraction(5), Fraction(2, 7), Fraction(-9, 5)):
        ii, jj = quartic_invariants(_quartic_with_roots(lam))
        got = Fraction(1728) * ii**3 / (ii**3 + kappa * jj**2)
        if got != cross_ratio_j(lam):
            raise AssertionError("quartic j calibration failed cross-check")
    return kappa


def j_invariant_quartic(quartic: Polynomial) -> Fraction:
    """j of the double cover of the line branched at the quartic's roots."""
    i_raw, j_raw = quartic_invariants(quartic)
    kappa = _quartic_calibration()
    denom = i_raw**3 + kappa * j_raw**2
    if denom == 0:
        raise SingularCurveError("repeated branch points: vanishing discriminant")
    return Fraction(1728) * i_raw**3 / denom
