"""Classification of linear sections of the cubic and the quartic.

The hyperplane classifier is an exact decision tree on four features of
the traceless dual vector h: the set S of nodes paired to zero, vanishing
of the quartic at h, membership in a singular line of the quartic, and
equality with one of the fifteen triple points. Brute-force oracles over
small prime fields cross-check every classification.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .invariants import (
    SingularCurveError,
    j_invariant_cubic,
    j_invariant_quartic,
)
from .linalg import ExactMatrix, integer_primitive
from .polynomials import Polynomial, square_root_up_to_scalar, to_primitive_integer
from .projective import (
    Hypersurface,
    LinearSubspace,
    ProjectivePoint,
    hessian_corank_at,
    restrict_to_subspace,
    singular_locus_scan,
)
from .segre import (
    NVARS,
    ONES,
    SegreIgusaData,
    duality_map,
    hyperplane_section_subspace,
    is_traceless,
    rational_cubic_point,
    traceless_lift,
)

ORACLE_PRIMES = (11, 31, 101)


class BadReductionError(ValueError):
    pass


@dataclass(frozen=True)
class SectionFeatures:
    nodes_on: tuple[int, ...]
    on_quartic: bool
    on_singular_line: int | None
    is_triple_point: int | None

    def describe(self) -> str:
        return (
            f"nodes={list(self.nodes_on)} on_quartic={self.on_quartic} "
            f"line={self.on_singular_line} triple={self.is_triple_point}"
        )


@dataclass(frozen=True)
class HyperplaneSectionType:
    kind: str  # smooth | one_nodal_at_node | one_nodal_tangency | r_nodal |
    #            a2_at_node | plane_plus_quadric | three_segre_planes | unclassified
    nodes: tuple[int, ...] = ()
    label: str | None = None
    features: SectionFeatures | None = None

    def __str__(self):
        if self.kind == "r_nodal":
            return f"r_nodal(r={len(self.nodes)}, nodes={list(self.nodes)})"
        if self.kind in ("one_nodal_at_node", "a2_at_node"):
            return f"{self.kind}({self.nodes[0]})"
        if self.label is not None:
            return f"{self.kind}({self.label})"
        return self.kind


@dataclass(frozen=True)
class DualHyperplaneSectionType:
    kind: str  # generic_15_nodal | kummer_16_tangent | non_reduced_quadric |
    #            contains_singular_line | through_cr_point | unclassified
    index: int | None = None
    label: str | None = None
    features: str | None = None

    def __str__(self):
        if self.index is not None:
            return f"{self.kind}({self.index})"
        if self.label is not None:
            return f"{self.kind}({self.label})"
        return self.kind


@dataclass(frozen=True)
class DualFiberType:
    kind: str  # two_points | double_point | excess_fiber

    def __str__(self):
        return self.kind


@dataclass(frozen=True)
class DerivedFiber:
    kind: str  # empty | formal_dual_numbers
    generator_degree: int | None = None
    at_singular_point: bool = False

    def __str__(self):
        if self.kind == "empty":
            return "empty"
        flag = ", singular point" if self.at_singular_point else ""
        return f"formal_dual_numbers(|e| = {self.generator_degree}{flag})"


def _require_traceless(h: ProjectivePoint):
    if not is_traceless(h):
        raise ValueError("dual vectors must be traceless; project onto sum x_i = 0 first")


def section_features(data: SegreIgusaData, h: ProjectivePoint) -> SectionFeatures:
    _require_traceless(h)
    nodes_on = tuple(i for i, n in enumerate(data.nodes) if h.pair(n) == 0)
    on_quartic = data.igusa.poly.evaluate(list(h.coords)) == 0
    line = next((i for i, ell in enumerate(data.dual_lines) if ell.contains_point(h)), None)
    triple = next((i for i, q in enumerate(data.cr_points) if q == h), None)
    return SectionFeatures(nodes_on, on_quartic, line, triple)


def classify_hyperplane(data: SegreIgusaData, h: ProjectivePoint) -> HyperplaneSectionType:
    """Type of the cubic surface cut by the hyperplane dual to h."""
    f = section_features(data, h)
    s, g = len(f.nodes_on), f.on_quartic
    if f.on_singular_line is not None:
        if f.is_triple_point is not None:
            return HyperplaneSectionType(
                "three_segre_planes", label=data.h_labels[f.is_triple_point], features=f
            )
        return HyperplaneSectionType(
            "plane_plus_quadric", label=data.plane_labels[f.on_singular_line], features=f
        )
    if not g and s == 0:
        return HyperplaneSectionType("smooth", features=f)
    if not g and s == 1:
        return HyperplaneSectionType("one_nodal_at_node", nodes=f.nodes_on, features=f)
    if not g and 2 <= s <= 4:
        return HyperplaneSectionType("r_nodal", nodes=f.nodes_on, features=f)
    if g and s == 0:
        return HyperplaneSectionType("one_nodal_tangency", features=f)
    if g and s == 1:
        return HyperplaneSectionType("a2_at_node", nodes=f.nodes_on, features=f)
    return HyperplaneSectionType("unclassified", nodes=f.nodes_on, features=f)


def expected_singular_profile(section: HyperplaneSectionType) -> tuple[int, list[int]] | None:
    """(count, coranks) implied by the classification, None for reducible types."""
    if section.kind == "smooth":
        return 0, []
    if section.kind in ("one_nodal_at_node", "one_nodal_tangency"):
        return 1, [0]
    if section.kind == "r_nodal":
        return len(section.nodes), [0] * len(section.nodes)
    if section.kind == "a2_at_node":
        return 1, [1]
    return None


def oracle_singular_profile(data: SegreIgusaData, h: ProjectivePoint, p: int) -> tuple[int, list[int]]:
    """Singular count and Hessian coranks of the section, brute force mod p."""
    sub = hyperplane_section_subspace(h)
    rows = sub.matrix.to_integer_rows()
    reduced = [[v % p for v in r] for r in rows.rows]
    from .scalars import Fp

    mat_p = ExactMatrix([[Fp(v, p) for v in r] for r in reduced])
    if mat_p.rank() != rows.nrows:
        raise BadReductionError(f"section basis drops rank mod {p}")
    cubic = Hypersurface(to_primitive_integer(restrict_to_subspace(data.segre.poly, sub)))
    cubic_p = cubic.reduce_mod(p)
    sing = singular_locus_scan(cubic_p, p)
    coranks = sorted(hessian_corank_at(cubic_p, pt) for pt in sing)
    return len(sing), coranks


def bad_reduction_certificates(data: SegreIgusaData, h: ProjectivePoint, p: int) -> list[str]:
    """Positive witnesses that the exact configuration degenerates mod p.

    Checked: a node pairing that vanishes only mod p (the section acquires
    a node), the quartic value at h vanishing only mod p (a tangency
    appears), and two exact on-section nodes colliding mod p.
    """
    certs = []
    hi = h.integer_coords()
    on_section = []
    for i, n in enumerate(data.nodes):
        pairing = sum(a * b for a, b in zip(hi, n.integer_coords()))
        if pairing == 0:
            on_section.append(i)
        elif pairing % p == 0:
            certs.append(f"node {i} pairing {pairing} vanishes mod {p}")
    value = data.igusa.poly.evaluate([Fraction(v) for v in hi])
    if value != 0 and value.numerator % p == 0 and value.denominator % p != 0:
        certs.append(f"quartic value at h vanishes mod {p}")
    for a in range(len(on_section)):
        for b in range(a + 1, len(on_section)):
            na = data.nodes[on_section[a]].integer_coords()
            nb = data.nodes[on_section[b]].integer_coords()
            if _projectively_equal_mod(na, nb, p):
                certs.append(f"nodes {on_section[a]} and {on_section[b]} collide mod {p}")
    return certs


def _projectively_equal_mod(a, b, p: int) -> bool:
    am = [v % p for v in a]
    bm = [v % p for v in b]
    for lam in range(1, p):
        if all((lam * x - y) % p == 0 for x, y in zip(am, bm)):
            return True
    return False


def oracle_agreement(data: SegreIgusaData, h: ProjectivePoint, primes=ORACLE_PRIMES):
    """Majority vote of the oracle against the classifier's implied profile.

    Returns (agrees, flagged, details). A prime whose profile differs is
    flagged as bad reduction; the sample agrees when at least two primes
    match, or when every disagreeing prime carries a positive
    bad-reduction certificate.
    """
    section = classify_hyperplane(data, h)
    expected = expected_singular_profile(section)
    if expected is None:
        raise ValueError("oracle comparison applies to irreducible section types only")
    votes = []
    flagged = {}
    details = {}
    for p in primes:
        try:
            profile = oracle_singular_profile(data, h, p)
        except BadReductionError as err:
            flagged[p] = [str(err)]
            details[p] = str(err)
            continue
        details[p] = profile
        if profile == expected:
            votes.append(p)
        else:
            flagged[p] = bad_reduction_certificates(data, h, p)
    agrees = len(votes) >= 2 or all(flagged[p] for p in flagged)
    return agrees, flagged, details


def dual_fiber(data: SegreIgusaData, h: ProjectivePoint) -> DualFiberType:
    """Cardinality type of the double-cover fiber over the dual point."""
    _require_traceless(h)
    if data.igusa.poly.evaluate(list(h.coords)) != 0:
        return DualFiberType("two_points")
    if any(ell.contains_point(h) for ell in data.dual_lines):
        return DualFiberType("excess_fiber")
    return DualFiberType("double_point")


def classify_dual_hyperplane(data: SegreIgusaData, hp: ProjectivePoint) -> DualHyperplaneSectionType:
    """Type of the quartic surface cut by the hyperplane dual to hp."""
    _require_traceless(hp)
    node = data.node_index(hp)
    if node is not None:
        return DualHyperplaneSectionType("non_reduced_quadric", index=node)
    plane = next((i for i, pl in enumerate(data.segre_planes) if pl.contains_point(hp)), None)
    if plane is not None:
        return DualHyperplaneSectionType("contains_singular_line", label=data.plane_labels[plane])
    through = next((i for i, q in enumerate(data.cr_points) if q.pair(hp) == 0), None)
    if through is not None:
        return DualHyperplaneSectionType("through_cr_point", label=data.h_labels[through])
    on_cubic = data.segre.poly.evaluate(list(hp.coords)) == 0
    if not on_cubic:
        return DualHyperplaneSectionType("generic_15_nodal")
    grad_equal = _gradient_proportional_to_ones(data, hp)
    if not grad_equal:
        return DualHyperplaneSectionType("kummer_16_tangent")
    return DualHyperplaneSectionType("unclassified", features="singular point of the cubic")


def _gradient_proportional_to_ones(data: SegreIgusaData, pt: ProjectivePoint) -> bool:
    grads = [g.evaluate(list(pt.coords)) for g in data.segre.poly.gradient()]
    return all(v == grads[0] for v in grads)


def dual_oracle_count(data: SegreIgusaData, hp: ProjectivePoint, p: int) -> int:
    """Number of F_p-singular points of the quartic surface cut by hp."""
    sub = hyperplane_section_subspace(hp)
    quartic = Hypersurface(to_primitive_integer(restrict_to_subspace(data.igusa.poly, sub)))
    return len(singular_locus_scan(quartic.reduce_mod(p), p))


def derived_point_fiber(data: SegreIgusaData, h: ProjectivePoint, side: str = "segre") -> DerivedFiber:
    """Two-term Koszul fiber of the hypersurface structure complex at h."""
    _require_traceless(h)
    if side not in ("segre", "igusa"):
        raise ValueError("side must be 'segre' or 'igusa'")
    hs = data.segre if side == "segre" else data.igusa
    value = hs.poly.evaluate(list(h.coords))
    if value != 0:
        return DerivedFiber("empty")
    singular = (
        _gradient_proportional_to_ones(data, h)
        if side == "segre"
        else _quartic_singular_at(data, h)
    )
    return DerivedFiber("formal_dual_numbers", generator_degree=-1, at_singular_point=singular)


def _quartic_singular_at(data: SegreIgusaData, pt: ProjectivePoint) -> bool:
    grads = [g.evaluate(list(pt.coords)) for g in data.igusa.poly.gradient()]
    return all(v == grads[0] for v in grads)


# -- codimension-2 and deeper sections ------------------------------------


@dataclass
class Codim2Report:
    dim: int
    primal: str
    dual: str
    rank_split: tuple[int, int, int] | None
    generic: bool
    notes: list[str] = field(default_factory=list)


def subspace_perp(rows) -> LinearSubspace:
    """Traceless orthogonal complement under the pairing sum x_i y_i."""
    return LinearSubspace(
        ExactMatrix([ONES] + [list(r) for r in rows]).right_kernel().to_integer_rows().rows
    )


def codim2_profile(data: SegreIgusaData, sub: LinearSubspace, prime: int = 11) -> Codim2Report:
    """Generic-situation checks for a linear subspace of dimension 2, 3 or 4.

    Verifies the expected pattern on both sides: degrees and smoothness of
    the primal section and of the dual quartic section, together with the
    numerical-rank split of the section's derived category.
    """
    dim = sub.cone_dim
    if dim not in (2, 3, 4):
        raise ValueError("codimension-2 profiles apply to subspace dimensions 2, 3, 4")
    for row in sub.matrix.rows:
        if sum(row, start=Fraction(0)) != 0:
            raise ValueError("subspace must lie in the traceless hyperplane")
    perp = subspace_perp(sub.matrix.rows)
    notes = []
    if dim == 2:
        cubic_bin = restrict_to_subspace(data.segre.poly, sub)
        distinct = _separable_binary(cubic_bin, 3)
        quartic_curve = restrict_to_subspace(data.igusa.poly, perp)
        smooth = _plane_curve_smooth(quartic_curve, prime)
        generic = distinct and smooth
        if not distinct:
            notes.append("line section is not three distinct points")
        if not smooth:
            notes.append("dual plane quartic is singular")
        return Codim2Report(2, "3 points", "smooth plane quartic, double cover = degree-2 del Pezzo", (10, 7, 3), generic, notes)
    if dim == 3:
        cubic_curve = restrict_to_subspace(data.segre.poly, sub)
        quartic_bin = restrict_to_subspace(data.igusa.poly, perp)
        try:
            j1 = j_invariant_cubic(cubic_curve)
            smooth_cubic = True
        except SingularCurveError:
            smooth_cubic, j1 = False, None
        distinct4 = _separable_binary(quartic_bin, 4)
        generic = smooth_cubic and distinct4
        if not smooth_cubic:
            notes.append("plane cubic section is singular")
        if not distinct4:
            notes.append("branch points are not four distinct points")
        return Codim2Report(3, "smooth plane cubic", "4 branch points on a line, double cover of genus 1", None, generic, notes)
    cubic_surface = Hypersurface(to_primitive_integer(restrict_to_subspace(data.segre.poly, sub)))
    sing = singular_locus_scan(cubic_surface.reduce_mod(prime), prime)
    pt = ProjectivePoint(integer_primitive(perp.matrix.rows[0]))
    dual_value = data.igusa.poly.evaluate(list(pt.coords))
    generic = not sing and dual_value != 0
    if sing:
        notes.append(f"cubic surface singular mod {prime} at {len(sing)} points")
    if dual_value == 0:
        notes.append("dual point lies on the quartic")
    return Codim2Report(4, "smooth cubic surface", "empty dual section, fiber = 2 points", (9, 7, 2), generic, notes)


def _separable_binary(form: Polynomial, degree: int) -> bool:
    if form.is_zero() or form.degree() != degree:
        return False
    disc = _binary_discriminant(form)
    return disc != 0


def _binary_discriminant(form: Polynomial):
    """Resultant of f_t and f_u via the Sylvester determinant."""
    ft, fu = form.partial(0), form.partial(1)
    d = form.degree() - 1
    a = [Fraction(ft.coefficient((d - k, k))) for k in range(d + 1)]
    b = [Fraction(fu.coefficient((d - k, k))) for k in range(d + 1)]
    n = 2 * d
    rows = []
    for shift in range(d):
        rows.append([0] * shift + a + [0] * (n - d - 1 - shift))
    for shift in range(d):
        rows.append([0] * shift + b + [0] * (n - d - 1 - shift))
    return ExactMatrix(rows).det()


def _plane_curve_smooth(curve: Polynomial, prime: int) -> bool:
    hs = Hypersurface(to_primitive_integer(curve))
    return not singular_locus_scan(hs.reduce_mod(prime), prime)


def elliptic_j_match(data: SegreIgusaData, sub: LinearSubspace):
    """(j1, j2, equal): j of the plane cubic section vs j of the dual double cover."""
    if sub.cone_dim != 3:
        raise ValueError("elliptic match needs a subspace of dimension 3")
    cubic = restrict_to_subspace(data.segre.poly, sub)
    perp = subspace_perp(sub.matrix.rows)
    quartic = restrict_to_subspace(data.igusa.poly, perp)
    if not _separable_binary(quartic, 4):
        raise SingularCurveError("branch points are not four distinct points")
    j1 = j_invariant_cubic(cubic)
    j2 = j_invariant_quartic(quartic)
    return j1, j2, j1 == j2


# -- witness construction --------------------------------------------------


def random_traceless_point(rng: random.Random, bound: int = 20) -> ProjectivePoint:
    while True:
        raw = [rng.randint(-bound, bound) for _ in range(NVARS)]
        raw = [NVARS * v - sum(raw) for v in raw]
        if any(raw):
            return ProjectivePoint(integer_primitive(raw))


def random_traceless_subspace(rng: random.Random, dim: int, bound: int = 9) -> LinearSubspace:
    while True:
        rows = []
        for _ in range(dim):
            raw = [rng.randint(-bound, bound) for _ in range(NVARS)]
            rows.append([NVARS * v - sum(raw) for v in raw])
        mat = ExactMatrix(rows)
        if mat.rank() == dim:
            return LinearSubspace(mat.to_integer_rows().rows)


def tangency_witness(data: SegreIgusaData, rng: random.Random) -> tuple[ProjectivePoint, ProjectivePoint]:
    """(h, x): h the tangent hyperplane of the cubic at a smooth point x.

    x is sampled off the fifteen planes through the node parametrization,
    so that the section of the cubic by h is one-nodal exactly at x.
    """
    while True:
        params = [rng.randint(-9, 9) for _ in range(4)]
        x = rational_cubic_point(data, params)
        if x is None or data.node_index(x) is not None:
            continue
        if any(pl.contains_point(x) for pl in data.segre_planes):
            continue
        h = duality_map(data, x)
        feats = section_features(data, h)
        if feats.on_singular_line is None and not feats.nodes_on:
            return h, x


def quadric_section_witness(data: SegreIgusaData, node_index: int, rng: random.Random) -> ProjectivePoint:
    """A rational point of the non-reduced quadric inside P_i, off everything.

    Gives the tangent-at-a-node case: on the quartic, paired to zero with
    exactly one node, off the singular lines.
    """
    psub = data.p_hyperplanes[node_index]
    quartic = restrict_to_subspace(data.igusa.poly, psub)
    root_info = square_root_up_to_scalar(quartic)
    if root_info is None:
        raise AssertionError("restricted quartic is not a square; wrong hyperplane")
    quadric = root_info[0]
    base = _rational_point_on_quadric(quadric)
    nparams = quadric.nvars
    grad = [g.evaluate(base) for g in quadric.gradient()]
    while True:
        w = [Fraction(rng.randint(-9, 9)) for _ in range(nparams)]
        qw = quadric.evaluate(w)
        bw = sum((g * wi for g, wi in zip(grad, w)), start=Fraction(0))
        if qw == 0:
            continue
        t = -bw / qw
        cand = [b + t * wi for b, wi in zip(base, w)]
        if all(v == 0 for v in cand):
            continue
        lifted = _from_subspace_coords(psub, cand)
        feats = section_features(data, lifted)
        if feats.on_singular_line is None and feats.nodes_on == (node_index,) and feats.on_quartic:
            return lifted


def _rational_point_on_quadric(quadric: Polynomial) -> list[Fraction]:
    n = quadric.nvars
    bound = 3
    from itertools import product

    for cand in product(range(-bound, bound + 1), repeat=n):
        if any(cand) and quadric.evaluate([Fraction(v) for v in cand]) == 0:
            return [Fraction(v) for v in cand]
    raise AssertionError("no small rational point on the quadric")


def _from_subspace_coords(sub: LinearSubspace, coords) -> ProjectivePoint:
    vec = [Fraction(0)] * sub.ambient
    for c, row in zip(coords, sub.matrix.rows):
        for i in range(sub.ambient):
            vec[i] += c * row[i]
    return ProjectivePoint(integer_primitive(vec))


def r_nodal_witness(data: SegreIgusaData, r: int, rng: random.Random) -> ProjectivePoint:
    """A dual vector paired to zero with exactly r nodes, off the quartic."""
    node_sets = list(combinations(range(10), r))
    rng.shuffle(node_sets)
    for nodes in node_sets:
        rows = [ONES] + [list(data.nodes[i].integer_coords()) for i in nodes]
        kernel = ExactMatrix(rows).right_kernel().to_integer_rows()
        if kernel.nrows != 5 - r:
            continue
        for _ in range(60):
            coeffs = [rng.randint(-7, 7) for _ in range(kernel.nrows)]
            vec = [sum(c * kernel.rows[k][i] for k, c in enumerate(coeffs)) for i in range(NVARS)]
            if not any(vec):
                continue
            h = ProjectivePoint(integer_primitive(vec))
            feats = section_features(data, h)
            if len(feats.nodes_on) == r and not feats.on_quartic and feats.on_singular_line is None:
                return h
    raise AssertionError(f"no {r}-nodal witness found")


def smooth_witness(data: SegreIgusaData, rng: random.Random) -> ProjectivePoint:
    while True:
        h = random_traceless_point(rng)
        feats = section_features(data, h)
        if not feats.nodes_on and not feats.on_quartic and feats.on_singular_line is None:
            return h


def line_witness(data: SegreIgusaData, line_index: int = 0) -> ProjectivePoint:
    """A point of a singular line of the quartic that is not a triple point."""
    line = data.dual_lines[line_index]
    a, b = line.matrix.rows
    vec = [Fraction(av) + 2 * Fraction(bv) for av, bv in zip(a, b)]
    h = ProjectivePoint(integer_primitive(vec))
    if any(h == q for q in data.cr_points):
        vec = [Fraction(av) + 3 * Fraction(bv) for av, bv in zip(a, b)]
        h = ProjectivePoint(integer_primitive(vec))
    return h


def table_row_witnesses(data: SegreIgusaData, seed: int = 1101) -> dict[str, ProjectivePoint]:
    """One witness per hyperplane-section row, deterministically seeded."""
    rng = random.Random(seed)
    witnesses = {
        "smooth": smooth_witness(data, rng),
        "one_nodal_at_node": r_nodal_witness(data, 1, rng),
        "one_nodal_tangency": tangency_witness(data, rng)[0],
        "r_nodal_2": r_nodal_witness(data, 2, rng),
        "r_nodal_3": r_nodal_witness(data, 3, rng),
        "r_nodal_4": data.t_points[0],
        "a2_at_node": quadric_section_witness(data, 0, rng),
        "plane_plus_quadric": line_witness(data),
        "three_segre_planes": data.cr_points[0],
    }
    return witnesses
