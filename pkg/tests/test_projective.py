"""Points, subspaces, scans, coranks, and the node parametrization."""

import random
from fractions import Fraction
from itertools import permutations

import pytest

from segrecr.parsing import parse_polynomial
from segrecr.projective import (
    Hypersurface,
    LinearSubspace,
    ProjectivePoint,
    contains_subspace,
    enumerate_projective_points,
    hessian_corank_at,
    is_singular_at,
    node_projection_parametrization,
    singular_locus_scan,
    tangent_hyperplane,
)
from segrecr.scalars import Fp
from segrecr.segre import build_all, rational_cubic_point

V5 = [f"x{i}" for i in range(5)]


def test_point_canonical_form_and_equality():
    a = ProjectivePoint([Fraction(2), Fraction(4), Fraction(-2)])
    b = ProjectivePoint([Fraction(1), Fraction(2), Fraction(-1)])
    assert a == b and hash(a) == hash(b)
    assert a.integer_coords() == (1, 2, -1)
    with pytest.raises(ValueError):
        ProjectivePoint([0, 0, 0])


def test_subspace_membership_and_annihilator():
    sub = LinearSubspace([[1, 0, -1, 0], [0, 1, 0, -1]])
    assert sub.contains_point(ProjectivePoint([1, 1, -1, -1]))
    assert not sub.contains_point(ProjectivePoint([1, 0, 0, 0]))
    ann = sub.annihilator()
    assert ann.cone_dim == 2
    for row in ann.matrix.rows:
        for srow in sub.matrix.rows:
            assert sum(a * b for a, b in zip(row, srow)) == 0


def test_enumeration_counts():
    pts = list(enumerate_projective_points(2, 7))
    assert len(pts) == 7 ** 2 + 7 + 1
    assert len(set(pts)) == len(pts)


def test_scan_smooth_quadric_is_empty():
    quad = parse_polynomial("x0^2+x1^2+x2^2+x3^2+x4^2", V5)
    assert singular_locus_scan(Hypersurface(quad), 7) == []


def test_scan_rejects_prime_dividing_degree():
    cubic = parse_polynomial("x0^3+x1^3+x2^3", ["x0", "x1", "x2"])
    with pytest.raises(ValueError):
        singular_locus_scan(Hypersurface(cubic), 7 if 3 % 7 == 0 else 3)


def test_scan_counts_stable_across_primes(data):
    for p, expected in ((11, 10), (31, 10)):
        assert len(singular_locus_scan(data.segre_restricted, p)) == expected
    for p in (11, 31):
        count = len(singular_locus_scan(data.igusa_restricted, p))
        assert count == 15 * (p + 1) - 30


def test_scan_output_is_node_orbit(data):
    pts = singular_locus_scan(data.segre_restricted, 11)
    expected = set()
    for node in data.nodes:
        coords = [v % 11 for v in node.integer_coords()[:5]]
        expected.add(ProjectivePoint([Fp(v, 11) for v in coords]))
    assert set(pts) == expected


def test_scan_respects_symmetry(data):
    # permuting the five restricted coordinates permutes the scan output
    pts = {tuple(c.value for c in q.coords) for q in singular_locus_scan(data.segre_restricted, 11)}
    for perm in list(permutations(range(5)))[:8]:
        rows = [[1 if j == perm[i] else 0 for j in range(5)] for i in range(5)]
        permuted = Hypersurface(data.segre_restricted.poly.substitute_linear(rows))
        pts2 = singular_locus_scan(permuted, 11)
        back = {
            tuple((q.coords[perm[i]]).value for i in range(5)) for q in pts2
        }
        normalized = set()
        for raw in back:
            lead = next(v for v in raw if v)
            inv = pow(lead, 9, 11)
            normalized.add(tuple(v * inv % 11 for v in raw))
        assert normalized == pts


def test_is_singular_at_and_tangent(data):
    node5 = ProjectivePoint(list(data.nodes[0].integer_coords())[:5])
    assert is_singular_at(data.segre_restricted, node5)
    with pytest.raises(ValueError):
        tangent_hyperplane(data.segre_restricted, node5)
    # self-duality of a quadric: the tangent dual point is the matrix image
    quad = Hypersurface(parse_polynomial("x0^2-x1^2+x2^2-x3^2", V5))
    t = tangent_hyperplane(quad, ProjectivePoint([1, 1, 1, 1, 0]))
    assert t == ProjectivePoint([1, -1, 1, -1, 0])


def test_tangent_pairs_to_zero(data):
    rng = random.Random(4)
    for _ in range(10):
        x = rational_cubic_point(data, [rng.randint(-9, 9) for _ in range(4)])
        if x is None or data.node_index(x) is not None:
            continue
        y = tangent_hyperplane(data.segre, x)
        assert x.pair(y) == 0


def test_hessian_corank_values(data):
    node5 = ProjectivePoint(list(data.nodes[0].integer_coords())[:5])
    assert hessian_corank_at(data.segre_restricted, node5) == 0
    # rank-2 quadratic part in a 3-variable chart has corank 1
    cone = Hypersurface(parse_polynomial("x0^2 + x1^2", ["x0", "x1", "x2", "x3"]))
    vertex = ProjectivePoint([0, 0, 1, 0])
    assert hessian_corank_at(cone, vertex) == 1
    small = Hypersurface(parse_polynomial("x0^2 + x1^2", ["x0", "x1", "x2"]))
    assert hessian_corank_at(small, ProjectivePoint([0, 0, 1])) == 0


def test_hessian_corank_requires_singularity(data):
    smooth = ProjectivePoint([1, 0, 0, 0, 0])
    quad = Hypersurface(parse_polynomial("x0^2+x1^2+x2^2+x3^2+x4^2", V5))
    with pytest.raises(ValueError):
        hessian_corank_at(quad, smooth)


def test_contains_subspace(data):
    for plane in data.segre_planes:
        assert contains_subspace(data.segre, plane)
    random_plane = LinearSubspace([[1, 0, 0, 0, 0, -1], [0, 1, 0, 0, -1, 0], [0, 0, 1, -1, 0, 0]])
    # this happens to be a Segre plane; tweak one row to leave the cubic
    off_plane = LinearSubspace([[1, 1, 0, 0, 0, -2], [0, 1, 0, 0, -1, 0], [0, 0, 1, -1, 0, 0]])
    assert not contains_subspace(data.segre, off_plane)
    point_on = LinearSubspace([list(data.nodes[0].integer_coords())])
    assert contains_subspace(data.segre, point_on)


def test_node_projection_symbolic_identity(data):
    components, q, c, _ = node_projection_parametrization(
        data.segre, data.nodes[0], basis=_complement_basis(data.nodes[0])
    )
    assert q.degree() == 2 and c.degree() == 3
    assert all(comp.degree() == 3 for comp in components)
    pulled = data.segre.poly.substitute(components)
    assert pulled.is_zero()


def test_node_projection_random_samples_mod_101(data):
    components, _, _, _ = node_projection_parametrization(
        data.segre, data.nodes[0], basis=_complement_basis(data.nodes[0])
    )
    comps = [comp.reduce_mod(101) for comp in components]
    cubic = data.segre.poly.reduce_mod(101)
    rng = random.Random(9)
    seen = 0
    while seen < 100:
        params = [Fp(rng.randint(0, 100), 101) for _ in range(4)]
        vals = [comp.evaluate(params) for comp in comps]
        if all(v.value == 0 for v in vals):
            continue
        assert cubic.evaluate(vals).value == 0
        seen += 1


def test_node_projection_rejects_smooth_center(data):
    x = rational_cubic_point(data, [1, 2, 3, 4])
    with pytest.raises(ValueError):
        node_projection_parametrization(data.segre, x, basis=_complement_basis(x))


def _complement_basis(point):
    from segrecr.segre import _traceless_complement_basis

    return _traceless_complement_basis(point)
