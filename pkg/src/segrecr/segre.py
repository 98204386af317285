"""The Segre cubic, the Castelnuovo-Richmond quartic, and their named loci.

Both the cubic's ambient space and its dual are presented inside P^5 as the
traceless hyperplane sum(x_i) = 0, with the pairing <x, y> = sum(x_i y_i);
dual objects are represented by their unique traceless lifts. This keeps
the S6 symmetry of the equations manifest. The duality and section checks
in this module fail loudly under a wrong identification, which is the
validation of that convention.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .linalg import ExactMatrix, integer_primitive
from .polynomials import Polynomial, square_root_up_to_scalar, to_primitive_integer
from .projective import (
    Hypersurface,
    LinearSubspace,
    ProjectivePoint,
    hessian_corank_at,
    is_singular_at,
    node_projection_parametrization,
    restrict_to_subspace,
    singular_locus_scan,
)

NVARS = 6
ONES = [1] * NVARS


def _e(i: int) -> list[int]:
    return [1 if j == i else 0 for j in range(NVARS)]


def symmetric_power_sum(k: int) -> Polynomial:
    return Polynomial(NVARS, {tuple(k if j == i else 0 for j in range(NVARS)): 1 for i in range(NVARS)})


def segre_cubic_form() -> Polynomial:
    """sum x_i^3, cutting the Segre cubic on the traceless hyperplane."""
    return symmetric_power_sum(3)


def igusa_quartic_form() -> Polynomial:
    """(sum x_i^2)^2 - 4 sum x_i^4 on the traceless hyperplane."""
    p2 = symmetric_power_sum(2)
    p4 = symmetric_power_sum(4)
    return p2 * p2 - 4 * p4


_RESTRICT_ROWS = [[1 if j == i else 0 for j in range(5)] for i in range(5)] + [[-1] * 5]


def restrict_to_traceless(poly6: Polynomial) -> Polynomial:
    """Substitute x_5 = -(x_0 + ... + x_4), landing in 5 variables."""
    return poly6.substitute_linear(_RESTRICT_ROWS)


def traceless_lift(vector) -> ProjectivePoint:
    """The traceless representative of a dual vector modulo (1, ..., 1)."""
    fracs = [Fraction(v) for v in vector]
    mean = sum(fracs) / NVARS
    shifted = [v - mean for v in fracs]
    if all(v == 0 for v in shifted):
        raise ValueError("vector is proportional to (1, ..., 1); no traceless lift")
    return ProjectivePoint(integer_primitive(shifted))


def is_traceless(pt: ProjectivePoint) -> bool:
    return sum(pt.coords, start=Fraction(0)) == 0


def perfect_matchings() -> list[tuple[tuple[int, int], ...]]:
    """The 15 pair-partitions of {0..5}, canonically sorted."""
    out = []

    def rec(remaining: tuple[int, ...], acc):
        if not remaining:
            out.append(tuple(acc))
            return
        a = remaining[0]
        for b in remaining[1:]:
            rest = tuple(x for x in remaining if x not in (a, b))
            rec(rest, acc + [(a, b)])

    rec(tuple(range(NVARS)), [])
    return sorted(out)


def matching_label(matching) -> str:
    return "|".join(f"{a}{b}" for a, b in matching)


@dataclass
class IncidenceReport:
    left_label: str
    right_label: str
    matrix: list[list[int]]
    claimed_row_sum: int
    claimed_col_sum: int
    passing: bool = field(init=False)
    failures: list[str] = field(init=False)

    def __post_init__(self):
        self.failures = []
        for i, row in enumerate(self.matrix):
            if sum(row) != self.claimed_row_sum:
                self.failures.append(f"{self.left_label}[{i}] has {sum(row)} incidences, expected {self.claimed_row_sum}")
        ncols = len(self.matrix[0]) if self.matrix else 0
        for j in range(ncols):
            col = sum(row[j] for row in self.matrix)
            if col != self.claimed_col_sum:
                self.failures.append(f"{self.right_label}[{j}] has {col} incidences, expected {self.claimed_col_sum}")
        self.passing = not self.failures

    @property
    def signature(self) -> str:
        n_left = len(self.matrix)
        n_right = len(self.matrix[0]) if self.matrix else 0
        return f"({n_left}_{self.claimed_row_sum},{n_right}_{self.claimed_col_sum})"


@dataclass
class SegreIgusaData:
    segre: Hypersurface
    igusa: Hypersurface
    segre_restricted: Hypersurface
    igusa_restricted: Hypersurface
    nodes: list[ProjectivePoint]
    segre_planes: list[LinearSubspace]
    plane_labels: list[str]
    matchings: list[tuple[tuple[int, int], ...]]
    t_points: list[ProjectivePoint]
    t_labels: list[str]
    h_points: list[ProjectivePoint]
    h_labels: list[str]
    p_hyperplanes: list[LinearSubspace]
    dual_lines: list[LinearSubspace]
    cr_points: list[ProjectivePoint]

    def node_index(self, pt: ProjectivePoint) -> int | None:
        for i, n in enumerate(self.nodes):
            if n == pt:
                return i
        return None


def build_all() -> SegreIgusaData:
    """Construct every named object over the rationals and verify invariants."""
    segre6 = segre_cubic_form()
    igusa6 = igusa_quartic_form()
    segre = Hypersurface(segre6)
    igusa = Hypersurface(igusa6)
    segre_r = Hypersurface(restrict_to_traceless(segre6))
    igusa_r = Hypersurface(restrict_to_traceless(igusa6))

    plus_sets = [(0,) + c for c in combinations(range(1, NVARS), 2)]
    nodes = sorted(
        (ProjectivePoint([1 if i in plus else -1 for i in range(NVARS)]) for plus in plus_sets),
        key=lambda pt: pt.integer_coords(),
    )
    if len(nodes) != 10:
        raise AssertionError("expected 10 nodes")

    matchings = perfect_matchings()
    planes = []
    for m in matchings:
        rows = [[1 if j in pair else 0 for j in range(NVARS)] for pair in m]
        planes.append(LinearSubspace(ExactMatrix(rows).right_kernel().rows))
    plane_labels = [matching_label(m) for m in matchings]

    pairs = list(combinations(range(NVARS), 2))
    t_points = [ProjectivePoint([1 if k == i else (-1 if k == j else 0) for k in range(NVARS)]) for i, j in pairs]
    t_labels = [f"T{i}{j}" for i, j in pairs]
    h_points = [traceless_lift([1 if k in (i, j) else 0 for k in range(NVARS)]) for i, j in pairs]
    h_labels = [f"H{i}{j}" for i, j in pairs]

    ones_row = [ONES]
    p_hyperplanes = [
        LinearSubspace(ExactMatrix(ones_row + [list(n.integer_coords())]).right_kernel().rows) for n in nodes
    ]
    dual_lines = [
        LinearSubspace(ExactMatrix(ones_row + plane.matrix.rows).right_kernel().rows) for plane in planes
    ]
    cr_points = list(h_points)

    data = SegreIgusaData(
        segre=segre,
        igusa=igusa,
        segre_restricted=segre_r,
        igusa_restricted=igusa_r,
        nodes=nodes,
        segre_planes=planes,
        plane_labels=plane_labels,
        matchings=matchings,
        t_points=t_points,
        t_labels=t_labels,
        h_points=h_points,
        h_labels=h_labels,
        p_hyperplanes=p_hyperplanes,
        dual_lines=dual_lines,
        cr_points=cr_points,
    )
    _verify_construction(data)
    return data


def _verify_construction(data: SegreIgusaData):
    for i, n in enumerate(data.nodes):
        if not is_traceless(n):
            raise AssertionError(f"node {i} is not traceless")
    from .projective import contains_subspace

    for label, plane in zip(data.plane_labels, data.segre_planes):
        if not contains_subspace(data.segre, plane):
            raise AssertionError(f"plane {label} is not contained in the cubic")
    for i, line in enumerate(data.dual_lines):
        if not _line_in_quartic_singular_locus(data.igusa.poly, line):
            raise AssertionError(f"dual line {data.plane_labels[i]} is not singular on the quartic")
    line_point = _incidence_matrix(data.dual_lines, data.cr_points)
    for i, row in enumerate(line_point):
        if sum(row) != 3:
            raise AssertionError(f"dual line {data.plane_labels[i]} contains {sum(row)} CR points, expected 3")
    for j in range(len(data.cr_points)):
        col = sum(row[j] for row in line_point)
        if col != 3:
            raise AssertionError(f"CR point {data.h_labels[j]} lies on {col} dual lines, expected 3")


def _line_in_quartic_singular_locus(quartic6: Polynomial, line: LinearSubspace) -> bool:
    """Gradient proportional to (1,...,1) along the whole line, symbolically."""
    params = line.matrix.transpose()  # 6 x 2
    grads = [g.substitute_linear(params.rows) for g in quartic6.gradient()]
    on_surface = quartic6.substitute_linear(params.rows)
    if not on_surface.is_zero():
        return False
    return all((grads[i] - grads[0]).is_zero() for i in range(1, NVARS))


def _incidence_matrix(subspaces, points) -> list[list[int]]:
    return [[1 if sub.contains_point(pt) else 0 for pt in points] for sub in subspaces]


def verify_incidences(data: SegreIgusaData, planes=None, dual_lines=None) -> tuple[IncidenceReport, IncidenceReport]:
    """The (15_4, 10_6) planes/nodes and (15_3, 15_3) lines/points reports."""
    planes = data.segre_planes if planes is None else planes
    dual_lines = data.dual_lines if dual_lines is None else dual_lines
    report1 = IncidenceReport(
        "segre_plane", "node", _incidence_matrix(planes, data.nodes), claimed_row_sum=4, claimed_col_sum=6
    )
    report2 = IncidenceReport(
        "dual_line", "cr_point", _incidence_matrix(dual_lines, data.cr_points), claimed_row_sum=3, claimed_col_sum=3
    )
    return report1, report2


def duality_map(data: SegreIgusaData, x: ProjectivePoint) -> ProjectivePoint:
    """Tangent hyperplane of the cubic at a smooth point, tracelessly lifted.

    In the six symmetric coordinates the image is y_i = 6 x_i^2 - sum_j x_j^2.
    """
    if not is_traceless(x):
        raise ValueError("point must be traceless")
    coords = list(x.coords)
    if data.segre.poly.evaluate(coords) != 0:
        raise ValueError("point is not on the cubic")
    s2 = sum((c * c for c in coords), start=Fraction(0))
    y = [6 * c * c - s2 for c in coords]
    if all(v == 0 for v in y):
        raise ValueError("duality map undefined at a node")
    return ProjectivePoint(integer_primitive(y))


def node_parametrization(data: SegreIgusaData, node_index: int = 0):
    """Projection-from-a-node parametrization of the cubic, in 4 parameters."""
    node = data.nodes[node_index]
    basis = _traceless_complement_basis(node)
    return node_projection_parametrization(data.segre, node, basis=basis)


def _traceless_complement_basis(node: ProjectivePoint) -> ExactMatrix:
    """Integer basis of the traceless 5-space complementary to the node."""
    candidates = [[1 if k == i else (-1 if k == i + 1 else 0) for k in range(NVARS)] for i in range(NVARS - 1)]
    node_row = list(node.integer_coords())
    basis = []
    for row in candidates:
        trial = basis + [row]
        if ExactMatrix(trial + [node_row]).rank() == len(trial) + 1:
            basis.append(row)
        if len(basis) == 4:
            break
    if len(basis) != 4:
        raise AssertionError("could not complete a traceless complement basis")
    return ExactMatrix(basis)


def rational_cubic_point(data: SegreIgusaData, params, node_index: int = 0) -> ProjectivePoint | None:
    """Point of the cubic from parameter values via the node parametrization."""
    components, _, _, _ = _cached_parametrization(data, node_index)
    vals = [comp.evaluate(list(params)) for comp in components]
    if all(v == 0 for v in vals):
        return None
    return ProjectivePoint(integer_primitive(vals))


_PARAM_CACHE: dict[int, tuple] = {}


def _cached_parametrization(data: SegreIgusaData, node_index: int):
    if node_index not in _PARAM_CACHE:
        _PARAM_CACHE[node_index] = node_parametrization(data, node_index)
    return _PARAM_CACHE[node_index]


def gauss_image_polynomials(components: list[Polynomial]) -> list[Polynomial]:
    """Duality-map images of a parametrized family, as parameter polynomials."""
    nparams = components[0].nvars
    squares = [c * c for c in components]
    s2 = Polynomial.zero(nparams)
    for sq in squares:
        s2 = s2 + sq
    return [6 * sq - s2 for sq in squares]


def verify_duality_identity(data: SegreIgusaData, quartic: Polynomial | None = None) -> bool:
    """Exact polynomial proof that the Gauss image of the cubic is the quartic.

    Pulls the quartic back along the duality map composed with the node
    parametrization; true iff the pullback expands to the zero polynomial
    in the 4 parameters.
    """
    components, _, _, _ = _cached_parametrization(data, 0)
    ys = gauss_image_polynomials(components)
    quartic = data.igusa.poly if quartic is None else quartic
    pulled = quartic.substitute(ys)
    return pulled.is_zero()


@dataclass
class SpecialSectionReport:
    t_results: list[tuple[str, int, list[int]]]
    h_results: list[tuple[str, bool]]
    p_results: list[tuple[int, bool, int]]
    failures: list[str]

    @property
    def passing(self) -> bool:
        return not self.failures


def verify_special_sections(data: SegreIgusaData, prime: int = 11) -> SpecialSectionReport:
    """Checks for the three hyperplane families of the configuration.

    T family: the restricted cubic has exactly 4 singular points over F_p,
    all with Hessian corank 0 (Cayley cubic surfaces). H family: the
    restricted cubic is a scalar times the product of the three linear
    forms cutting its three Segre planes. P family: the restricted quartic
    is a perfect square of a full-rank quadric.
    """
    failures: list[str] = []
    t_results = []
    for label, t in zip(data.t_labels, data.t_points):
        sub = hyperplane_section_subspace(t)
        cubic = Hypersurface(to_primitive_integer(restrict_to_subspace(data.segre.poly, sub)))
        sing = singular_locus_scan(cubic, prime)
        coranks = sorted(hessian_corank_at(cubic.reduce_mod(prime), pt) for pt in sing)
        t_results.append((label, len(sing), coranks))
        if len(sing) != 4 or coranks != [0, 0, 0, 0]:
            failures.append(f"{label}: profile ({len(sing)}, {coranks}) is not (4, [0,0,0,0])")
    h_results = []
    for label, h, (i, j) in zip(data.h_labels, data.h_points, combinations(range(NVARS), 2)):
        sub = hyperplane_section_subspace(h)
        cubic = restrict_to_subspace(data.segre.poly, sub)
        ok = _is_product_of_contained_plane_forms(data, cubic, sub, (i, j))
        h_results.append((label, ok))
        if not ok:
            failures.append(f"{label}: restricted cubic is not the product of its three plane forms")
    p_results = []
    for idx, psub in enumerate(data.p_hyperplanes):
        quartic = restrict_to_subspace(data.igusa.poly, psub)
        found = square_root_up_to_scalar(quartic)
        rank = _quadric_rank(found[0]) if found is not None else -1
        p_results.append((idx, found is not None, rank))
        if found is None:
            failures.append(f"P{idx + 1}: restricted quartic is not a scalar times a perfect square")
        elif rank != 4:
            failures.append(f"P{idx + 1}: square root is a quadric of rank {rank}, expected 4")
    return SpecialSectionReport(t_results, h_results, p_results, failures)


def hyperplane_section_subspace(h: ProjectivePoint) -> LinearSubspace:
    """The P^3 cut on the traceless hyperplane by the dual vector h."""
    rows = ExactMatrix([ONES, list(h.integer_coords())]).right_kernel().to_integer_rows()
    return LinearSubspace(rows.rows)


def _is_product_of_contained_plane_forms(data, cubic4: Polynomial, sub: LinearSubspace, pair) -> bool:
    i, j = pair
    # the three Segre planes inside x_i + x_j = 0 come from matchings pairing i with j
    forms = []
    for m, plane in zip(data.matchings, data.segre_planes):
        if (min(pair), max(pair)) in m:
            other_pairs = [q for q in m if q != (min(pair), max(pair))]
            a, b = other_pairs[0]
            lin6 = Polynomial(NVARS, {tuple(_e(a)): 1}) + Polynomial(NVARS, {tuple(_e(b)): 1})
            forms.append(restrict_to_subspace(lin6, sub))
    if len(forms) != 3:
        return False
    product = forms[0] * forms[1] * forms[2]
    return _proportional(product, cubic4)


def _proportional(a: Polynomial, b: Polynomial) -> bool:
    if a.is_zero() or b.is_zero():
        return a.is_zero() and b.is_zero()
    ea, ca = a.sorted_terms()[0]
    eb, cb = b.sorted_terms()[0]
    if ea != eb:
        return False
    ratio = Fraction(ca) / Fraction(cb)
    return (a - b * ratio).is_zero()


def _quadric_rank(q: Polynomial) -> int:
    n = q.nvars
    rows = [[q.partial(i).partial(j).evaluate([0] * n) for j in range(n)] for i in range(n)]
    return ExactMatrix(rows).rank()


def plucker_teissier_degree(d: int, n: int, m: int) -> int:
    """Degree d(d-1)^(n-1) - 2m of the dual of a d-ic in P^n with m nodes."""
    if d < 2 or n < 2 or m < 0:
        raise ValueError("require d >= 2, n >= 2, m >= 0")
    value = d * (d - 1) ** (n - 1) - 2 * m
    if value < 0:
        raise ValueError(f"invalid input combination: dual degree {value} is negative")
    return value
