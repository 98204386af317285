"""Decision tree, oracles, dual sections, fibers, and the elliptic match."""

import random
from itertools import permutations

import pytest

from segrecr import classifier as cls
from segrecr.invariants import SingularCurveError
from segrecr.linalg import integer_primitive
from segrecr.projective import ProjectivePoint
from segrecr.segre import duality_map, rational_cubic_point, traceless_lift


def test_spec_examples(data):
    three = cls.classify_hyperplane(data, ProjectivePoint([2, 2, -1, -1, -1, -1]))
    assert three.kind == "three_segre_planes"
    cayley = cls.classify_hyperplane(data, ProjectivePoint([1, -1, 0, 0, 0, 0]))
    assert cayley.kind == "r_nodal" and len(cayley.nodes) == 4


def test_each_table_row_witnessed(data):
    witnesses = cls.table_row_witnesses(data)
    kinds = {name: cls.classify_hyperplane(data, h).kind for name, h in witnesses.items()}
    assert kinds == {
        "smooth": "smooth",
        "one_nodal_at_node": "one_nodal_at_node",
        "one_nodal_tangency": "one_nodal_tangency",
        "r_nodal_2": "r_nodal",
        "r_nodal_3": "r_nodal",
        "r_nodal_4": "r_nodal",
        "a2_at_node": "a2_at_node",
        "plane_plus_quadric": "plane_plus_quadric",
        "three_segre_planes": "three_segre_planes",
    }


def test_classifier_scale_invariance(data):
    h = ProjectivePoint([3, 1, -2, 4, -5, -1])
    scaled = ProjectivePoint([9, 3, -6, 12, -15, -3])
    assert cls.classify_hyperplane(data, h) == cls.classify_hyperplane(data, scaled)


def test_classifier_s6_equivariance(data):
    rng = random.Random(21)
    h = ProjectivePoint([7, -1, -3, 2, -5, 0])
    base = cls.classify_hyperplane(data, h)
    for perm in rng.sample(list(permutations(range(6))), 6):
        permuted = ProjectivePoint([h.coords[perm[i]] for i in range(6)])
        section = cls.classify_hyperplane(data, permuted)
        assert section.kind == base.kind
        assert len(section.nodes) == len(base.nodes)


def test_classifier_requires_traceless(data):
    with pytest.raises(ValueError):
        cls.classify_hyperplane(data, ProjectivePoint([1, 0, 0, 0, 0, 0]))


def test_oracle_profiles_for_witnesses(data):
    witnesses = cls.table_row_witnesses(data)
    expectations = {
        "smooth": (0, []),
        "one_nodal_at_node": (1, [0]),
        "one_nodal_tangency": (1, [0]),
        "a2_at_node": (1, [1]),
        "r_nodal_4": (4, [0, 0, 0, 0]),
    }
    for name, expected in expectations.items():
        agrees, _, details = cls.oracle_agreement(data, witnesses[name])
        assert agrees, (name, details)
        values = [v for v in details.values() if isinstance(v, tuple)]
        assert expected in values


def test_oracle_rejects_reducible_rows(data):
    with pytest.raises(ValueError):
        cls.oracle_agreement(data, data.cr_points[0])


def test_bad_reduction_certificates(data):
    # pairing 11 with one node: vanishes mod 11 only
    h = None
    rng = random.Random(3)
    while h is None:
        cand = cls.random_traceless_point(rng, 20)
        pairings = [sum(a * b for a, b in zip(cand.integer_coords(), n.integer_coords())) for n in data.nodes]
        if any(v != 0 and v % 11 == 0 for v in pairings) and all(v != 0 for v in pairings):
            h = cand
    certs = cls.bad_reduction_certificates(data, h, 11)
    assert any("vanishes mod 11" in c for c in certs)


def test_dual_fiber_cases(data):
    witnesses = cls.table_row_witnesses(data)
    assert cls.dual_fiber(data, witnesses["smooth"]).kind == "two_points"
    assert cls.dual_fiber(data, witnesses["one_nodal_tangency"]).kind == "double_point"
    assert cls.dual_fiber(data, data.cr_points[0]).kind == "excess_fiber"


def test_dual_fiber_matches_table_rows(data):
    witnesses = cls.table_row_witnesses(data)
    for name, h in witnesses.items():
        section = cls.classify_hyperplane(data, h)
        fiber = cls.dual_fiber(data, h)
        two_sided = section.kind in ("smooth", "one_nodal_at_node", "r_nodal")
        assert two_sided == (fiber.kind == "two_points")


def test_classify_dual_hyperplane_cases(data):
    assert cls.classify_dual_hyperplane(data, data.nodes[1]).kind == "non_reduced_quadric"
    assert cls.classify_dual_hyperplane(data, data.nodes[1]).index == 1
    # a point on a Segre plane
    plane_pt = ProjectivePoint(integer_primitive(
        [a + 2 * b for a, b in zip(data.segre_planes[0].matrix.rows[0], data.segre_planes[0].matrix.rows[1])]
    ))
    assert cls.classify_dual_hyperplane(data, plane_pt).kind == "contains_singular_line"
    generic = ProjectivePoint([14, 3, -6, 2, -5, -8])
    section = cls.classify_dual_hyperplane(data, generic)
    assert section.kind in ("generic_15_nodal", "through_cr_point")


def test_dual_tangent_is_kummer(data):
    rng = random.Random(6)
    while True:
        x = rational_cubic_point(data, [rng.randint(-9, 9) for _ in range(4)])
        if x is None or data.node_index(x) is not None:
            continue
        if any(pl.contains_point(x) for pl in data.segre_planes):
            continue
        if any(q.pair(x) == 0 for q in data.cr_points):
            continue
        assert cls.classify_dual_hyperplane(data, x).kind == "kummer_16_tangent"
        break


def test_dual_oracle_counts_small_prime(data):
    rng = random.Random(77)
    h = cls.random_traceless_point(rng)
    while cls.classify_dual_hyperplane(data, h).kind != "generic_15_nodal" or cls.dual_oracle_count(data, h, 11) != 15:
        h = cls.random_traceless_point(rng)
    assert cls.dual_oracle_count(data, h, 11) == 15


def test_derived_point_fiber(data):
    node_fiber = cls.derived_point_fiber(data, data.nodes[0], "segre")
    assert node_fiber.kind == "formal_dual_numbers"
    assert node_fiber.generator_degree == -1 and node_fiber.at_singular_point
    x = rational_cubic_point(data, [2, 1, -1, 3])
    fiber = cls.derived_point_fiber(data, x, "segre")
    assert fiber.kind == "formal_dual_numbers" and not fiber.at_singular_point
    off = ProjectivePoint([5, 1, -1, -1, -2, -2])
    assert cls.derived_point_fiber(data, off, "segre").kind == "empty"
    # tautological guard: empty iff the form value is nonzero
    assert data.segre.poly.evaluate(list(off.coords)) != 0
    # the quartic side at a CR point is a singular double point
    igusa_fiber = cls.derived_point_fiber(data, data.cr_points[0], "igusa")
    assert igusa_fiber.kind == "formal_dual_numbers" and igusa_fiber.at_singular_point


def test_codim2_profiles(data):
    rng = random.Random(12)
    seen = set()
    while len(seen) < 3:
        for dim in (2, 3, 4):
            sub = cls.random_traceless_subspace(rng, dim)
            report = cls.codim2_profile(data, sub)
            if report.generic:
                seen.add(dim)
                if dim == 2:
                    assert report.rank_split == (10, 7, 3)
                if dim == 4:
                    assert report.rank_split == (9, 7, 2)
    with pytest.raises(ValueError):
        cls.codim2_profile(data, cls.random_traceless_subspace(rng, 5))


def test_elliptic_j_match_and_invariance(data):
    rng = random.Random(99)
    matched = 0
    while matched < 5:
        sub = cls.random_traceless_subspace(rng, 3)
        try:
            j1, j2, equal = cls.elliptic_j_match(data, sub)
        except SingularCurveError:
            continue
        assert equal, (j1, j2)
        matched += 1


def test_j1_invariant_under_unimodular_parameter_change(data):
    from segrecr.invariants import j_invariant_cubic
    from segrecr.projective import restrict_to_subspace

    rng = random.Random(5)
    sub = cls.random_traceless_subspace(rng, 3)
    cubic = restrict_to_subspace(data.segre.poly, sub)
    j0 = j_invariant_cubic(cubic)
    checked = 0
    while checked < 10:
        rows = [[rng.randint(-3, 3) for _ in range(3)] for _ in range(3)]
        from fractions import Fraction

        from segrecr.linalg import ExactMatrix

        if abs(ExactMatrix([[Fraction(v) for v in r] for r in rows]).det()) != 1:
            continue
        assert j_invariant_cubic(cubic.substitute_linear(rows)) == j0
        checked += 1
