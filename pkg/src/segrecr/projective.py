"""Projective points, linear subspaces, hypersurfaces and their singularities.

Points are stored in canonical form (first nonzero coordinate 1); over the
rationals a primitive integer representative is kept for display. Subspaces
are row-reduced spanning matrices, so membership tests and annihilators are
exact and deterministic.
"""

from __future__ import annotations

from fractions import Fraction

from . import ffscan
from .linalg import ExactMatrix, integer_primitive
from .polynomials import Polynomial
from .scalars import Fp, scalar_inverse, scalar_is_zero


class ProjectivePoint:
    __slots__ = ("coords",)

    def __init__(self, coords):
        coords = list(coords)
        if all(scalar_is_zero(c) for c in coords):
            raise ValueError("projective point cannot be the zero vector")
        lead = next(c for c in coords if not scalar_is_zero(c))
        inv = scalar_inverse(lead)
        self.coords = tuple(c * inv for c in coords)

    @property
    def dim(self) -> int:
        return len(self.coords) - 1

    def integer_coords(self) -> tuple[int, ...]:
        """Primitive integer representative (rational points only)."""
        if any(isinstance(c, Fp) for c in self.coords):
            raise TypeError("integer representative requires rational coordinates")
        return tuple(integer_primitive(self.coords))

    def __eq__(self, other):
        if not isinstance(other, ProjectivePoint):
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        try:
            return f"ProjectivePoint{self.integer_coords()}"
        except TypeError:
            return f"ProjectivePoint{tuple(str(c) for c in self.coords)}"

    def pair(self, other: "ProjectivePoint"):
        """The standard bilinear pairing sum_i x_i y_i."""
        return sum((a * b for a, b in zip(self.coords, other.coords)), start=0)

    def reduce_mod(self, p: int) -> "ProjectivePoint":
        ints = self.integer_coords()
        if all(v % p == 0 for v in ints):
            raise ValueError(f"point reduces to zero mod {p}")
        return ProjectivePoint([Fp(v, p) for v in ints])


class LinearSubspace:
    """Row-reduced spanning matrix of a linear cone in k^(n+1)."""

    __slots__ = ("matrix", "ambient")

    def __init__(self, spanning_rows):
        mat = ExactMatrix(spanning_rows)
        reduced, pivots = mat.rref()
        rows = reduced.nonzero_rows()
        if rows.nrows == 0:
            raise ValueError("subspace needs at least one nonzero spanning vector")
        self.matrix = rows
        self.ambient = mat.ncols

    @property
    def cone_dim(self) -> int:
        return self.matrix.nrows

    @property
    def projective_dim(self) -> int:
        return self.matrix.nrows - 1

    def contains_point(self, pt: ProjectivePoint) -> bool:
        return self.matrix.row_space_contains(list(pt.coords))

    def contains_subspace(self, other: "LinearSubspace") -> bool:
        return all(self.matrix.row_space_contains(r) for r in other.matrix.rows)

    def annihilator(self) -> "LinearSubspace":
        """All functionals vanishing on the subspace."""
        return LinearSubspace(self.matrix.right_kernel().rows)

    def basis_points(self) -> list[ProjectivePoint]:
        return [ProjectivePoint(r) for r in self.matrix.rows]

    def __eq__(self, other):
        if not isinstance(other, LinearSubspace):
            return NotImplemented
        return self.matrix == other.matrix

    def __hash__(self):
        return hash(tuple(tuple(Fraction(v) for v in r) for r in self.matrix.rows))

    def __repr__(self):
        return f"LinearSubspace(dim {self.projective_dim} in P^{self.ambient - 1})"


class Hypersurface:
    __slots__ = ("poly", "ambient_dim")

    def __init__(self, poly: Polynomial):
        if poly.is_zero():
            raise ValueError("hypersurface polynomial must be nonzero")
        if not poly.is_homogeneous():
            raise ValueError("hypersurface polynomial must be homogeneous")
        self.poly = poly
        self.ambient_dim = poly.nvars - 1

    def degree(self) -> int:
        return self.poly.degree()

    def contains_point(self, pt: ProjectivePoint) -> bool:
        return scalar_is_zero(self.poly.evaluate(list(pt.coords)))

    def reduce_mod(self, p: int) -> "Hypersurface":
        return Hypersurface(self.poly.reduce_mod(p))

    def __repr__(self):
        return f"Hypersurface(deg {self.degree()} in P^{self.ambient_dim})"


def singular_locus_scan(hs: Hypersurface, p: int, progress=None) -> list[ProjectivePoint]:
    """All points of P^n(F_p) where every partial derivative vanishes.

    By Euler's identity (p must not divide the degree) such points lie on
    the hypersurface. The enumeration order is the affine stratification,
    so the output is deterministic.
    """
    if hs.degree() % p == 0:
        raise ValueError(f"p = {p} divides the degree {hs.degree()}")
    poly_p = hs.poly if _is_mod_p(hs.poly, p) else hs.poly.reduce_mod(p)
    grads = [g for g in poly_p.gradient()]
    pts = ffscan.common_zeros_projective(grads, p, progress=progress)
    return [ProjectivePoint([Fp(v, p) for v in row]) for row in pts]


def _is_mod_p(poly: Polynomial, p: int) -> bool:
    for c in poly.terms.values():
        if isinstance(c, Fp):
            if c.p != p:
                raise ValueError(f"polynomial over F_{c.p}, scan requested mod {p}")
            return True
        return False
    return False


def is_singular_at(hs: Hypersurface, pt: ProjectivePoint) -> bool:
    coords = list(pt.coords)
    if not scalar_is_zero(hs.poly.evaluate(coords)):
        return False
    return all(scalar_is_zero(g.evaluate(coords)) for g in hs.poly.gradient())


def tangent_hyperplane(hs: Hypersurface, pt: ProjectivePoint) -> ProjectivePoint:
    """Gradient of the defining form at a smooth point, as a dual point."""
    coords = list(pt.coords)
    if not scalar_is_zero(hs.poly.evaluate(coords)):
        raise ValueError("point is not on the hypersurface")
    grad = [g.evaluate(coords) for g in hs.poly.gradient()]
    if all(scalar_is_zero(v) for v in grad):
        raise ValueError("singular point: gradient vanishes")
    return ProjectivePoint(grad)


def hessian_corank_at(hs: Hypersurface, pt: ProjectivePoint, cross_check: bool = True) -> int:
    """Corank of the Hessian in an affine chart at a singular point.

    The chart of the first nonvanishing coordinate is used; the corank does
    not depend on this choice, which is asserted against a second chart
    when one is available.
    """
    if not is_singular_at(hs, pt):
        raise ValueError("Hessian corank is defined at singular points only")
    charts = [i for i, c in enumerate(pt.coords) if not scalar_is_zero(c)]
    corank = _chart_corank(hs.poly, pt, charts[0])
    if cross_check and len(charts) > 1:
        other = _chart_corank(hs.poly, pt, charts[1])
        if other != corank:
            raise AssertionError(f"chart-dependent corank: {corank} vs {other}")
    return corank


def _chart_corank(poly: Polynomial, pt: ProjectivePoint, chart: int) -> int:
    n = poly.nvars
    coords = list(pt.coords)
    rows = []
    for i in range(n):
        if i == chart:
            continue
        row = []
        gi = poly.partial(i)
        for j in range(n):
            if j == chart:
                continue
            row.append(gi.partial(j).evaluate(coords))
        rows.append(row)
    hess = ExactMatrix(rows)
    return (n - 1) - hess.rank()


def contains_subspace(hs: Hypersurface, sub: LinearSubspace) -> bool:
    """True iff the pullback of the form to the subspace is identically zero."""
    if sub.ambient != hs.poly.nvars:
        raise ValueError("ambient dimension mismatch")
    params = sub.matrix.transpose()
    pulled = hs.poly.substitute_linear(params.rows)
    return pulled.is_zero()


def restrict_to_subspace(poly: Polynomial, sub: LinearSubspace) -> Polynomial:
    """Pullback of the form under the parametrization by the subspace basis."""
    if sub.ambient != poly.nvars:
        raise ValueError("ambient dimension mismatch")
    params = sub.matrix.transpose()
    return poly.substitute_linear(params.rows)


def node_projection_parametrization(hs: Hypersurface, node: ProjectivePoint, basis=None):
    """Rational parametrization of a nodal cubic by projection from the node.

    Writing f(node + t v) = t^2 q(v) + t^3 c(v) for direction vectors v in
    a complement of the node, the map v -> c(v) * node - q(v) * v lands on
    the cubic identically. Returns (component polynomials, q, c, basis
    matrix) where the components are cubics in the parameters.
    """
    if hs.degree() != 3:
        raise ValueError("node projection applies to cubic hypersurfaces")
    n = hs.poly.nvars
    node_vec = [Fraction(c) for c in node.coords]
    if basis is None:
        basis = _node_complement_basis(node_vec)
    nparams = basis.nrows
    # x = node * t0-part + v, expanded by substituting x_i = node_i * s + v_i(params);
    # we track the t-expansion by substituting node + t*v with t symbolic via degrees.
    # f(node + v) has graded pieces in v of degrees 0..3; pieces 0 and 1 vanish.
    subs_rows = []
    for i in range(n):
        subs_rows.append([basis.rows[r][i] for r in range(nparams)])
    v_forms = ExactMatrix(subs_rows)  # n x nparams, row i = coords of v_i in params
    shifted = _expand_at(hs.poly, node_vec, v_forms)
    q = shifted.get(2, Polynomial.zero(nparams))
    c = shifted.get(3, Polynomial.zero(nparams))
    if not shifted.get(0, Polynomial.zero(nparams)).is_zero() or not shifted.get(
        1, Polynomial.zero(nparams)
    ).is_zero():
        raise ValueError("projection center is not a singular point on the cubic")
    components = []
    for i in range(n):
        vi = Polynomial(nparams, {tuple(1 if r == s else 0 for s in range(nparams)): v_forms.rows[i][r] for r in range(nparams) if not scalar_is_zero(v_forms.rows[i][r])})
        components.append(c * node_vec[i] - q * vi)
    return components, q, c, basis


def _node_complement_basis(node_vec) -> ExactMatrix:
    """Integer basis of a complement of the node inside its ambient space."""
    lead = next(i for i, c in enumerate(node_vec) if c != 0)
    rows = []
    for i in range(len(node_vec)):
        if i != lead:
            rows.append([1 if j == i else 0 for j in range(len(node_vec))])
    return ExactMatrix(rows)


def _expand_at(poly: Polynomial, center, v_forms: ExactMatrix) -> dict[int, Polynomial]:
    """Graded pieces of f(center + v) as polynomials in the v-parameters."""
    nparams = v_forms.ncols
    n = poly.nvars
    # substitute x_i -> center_i * u + v_i(params) in a ring with an extra
    # homogenizing variable u, then split by u-degree complement.
    ext = nparams + 1
    subs = []
    for i in range(n):
        terms = {}
        e_u = tuple([0] * nparams + [1])
        if not scalar_is_zero(center[i]):
            terms[e_u] = center[i]
        for r in range(nparams):
            if not scalar_is_zero(v_forms.rows[i][r]):
                e = tuple(1 if s == r else 0 for s in range(nparams)) + (0,)
                terms[e] = v_forms.rows[i][r]
        subs.append(Polynomial(ext, terms))
    expanded = poly.substitute(subs)
    pieces: dict[int, Polynomial] = {}
    d = poly.degree()
    for e, coeff in expanded.terms.items():
        vdeg = d - e[-1]
        piece = pieces.setdefault(vdeg, Polynomial.zero(nparams))
        piece.terms[e[:-1]] = coeff
        piece._degree = None
    return pieces


def enumerate_projective_points(n: int, p: int):
    """Points of P^n(F_p) in stratification order, as integer tuples."""
    for k in range(n + 1):
        m = n - k
        counter = [0] * m
        while True:
            yield (0,) * k + (1,) + tuple(counter)
            j = m - 1
            while j >= 0 and counter[j] == p - 1:
                counter[j] = 0
                j -= 1
            if j < 0:
                break
            counter[j] += 1
