"""Construction, configurations, duality map, and special sections."""

import random
from fractions import Fraction

import pytest

from segrecr.projective import ProjectivePoint
from segrecr.segre import (
    build_all,
    duality_map,
    igusa_quartic_form,
    perfect_matchings,
    plucker_teissier_degree,
    rational_cubic_point,
    restrict_to_traceless,
    segre_cubic_form,
    traceless_lift,
    verify_duality_identity,
    verify_incidences,
    verify_special_sections,
)


def test_forms_are_the_symmetric_presentations():
    cubic = segre_cubic_form()
    assert cubic.terms == {tuple(3 if j == i else 0 for j in range(6)): 1 for i in range(6)}
    quartic = igusa_quartic_form()
    assert quartic.coefficient(tuple([4, 0, 0, 0, 0, 0])) == -3  # 1 - 4
    assert quartic.coefficient((2, 2, 0, 0, 0, 0)) == 2


def test_counts(data):
    assert len(data.nodes) == 10
    assert len(data.segre_planes) == 15
    assert len(data.dual_lines) == 15
    assert len(data.cr_points) == 15
    assert len(data.t_points) == len(data.h_points) == 15
    assert len(data.p_hyperplanes) == 10


def test_nodes_are_the_orbit_and_traceless(data):
    for node in data.nodes:
        coords = node.integer_coords()
        assert sorted(coords) == [-1, -1, -1, 1, 1, 1]
        assert sum(coords) == 0


def test_matchings_enumeration():
    ms = perfect_matchings()
    assert len(ms) == 15
    assert all(len(m) == 3 for m in ms)


def test_incidence_reports(data):
    rep1, rep2 = verify_incidences(data)
    assert rep1.passing and rep1.signature == "(15_4,10_6)"
    assert rep2.passing and rep2.signature == "(15_3,15_3)"


def test_corrupted_plane_list_fails_with_offender(data):
    bad_planes = list(data.segre_planes)
    bad_planes[3] = bad_planes[0]
    rep1, _ = verify_incidences(data, planes=bad_planes)
    assert not rep1.passing
    assert any("node" in f or "segre_plane" in f for f in rep1.failures)


def test_cr_points_are_line_intersections(data):
    # every CR point is the intersection of the 3 lines through it
    for q in data.cr_points:
        through = [ell for ell in data.dual_lines if ell.contains_point(q)]
        assert len(through) == 3
    # pairwise intersections of coplanar dual lines are CR points
    hits = set()
    for i in range(15):
        for j in range(i + 1, 15):
            common = [q for q in data.cr_points
                      if data.dual_lines[i].contains_point(q) and data.dual_lines[j].contains_point(q)]
            hits.update(map(tuple, (c.integer_coords() for c in common)))
    assert len(hits) == 15


def test_cr_points_singular_on_quartic(data):
    for q in data.cr_points:
        grads = [g.evaluate(list(q.coords)) for g in data.igusa.poly.gradient()]
        assert all(v == grads[0] for v in grads)  # gradient parallel to (1,...,1)


def test_traceless_lift():
    lifted = traceless_lift([1, 1, 0, 0, 0, 0])
    assert lifted.integer_coords() == (2, 2, -1, -1, -1, -1)
    with pytest.raises(ValueError):
        traceless_lift([1, 1, 1, 1, 1, 1])


def test_duality_map_formula_and_errors(data):
    x = rational_cubic_point(data, [1, 2, 3, 5])
    y = duality_map(data, x)
    s2 = sum(Fraction(v) ** 2 for v in x.coords)
    expected = ProjectivePoint([6 * Fraction(v) ** 2 - s2 for v in x.coords])
    assert y == expected
    with pytest.raises(ValueError):
        duality_map(data, data.nodes[0])
    with pytest.raises(ValueError):
        duality_map(data, ProjectivePoint([5, 1, -1, -1, -2, -2]))  # not on the cubic


def test_duality_map_plane_lands_on_dual_line(data):
    plane = data.segre_planes[0]
    rng = random.Random(2)
    hits = 0
    while hits < 5:
        coeffs = [rng.randint(-5, 5) for _ in range(3)]
        vec = [sum(c * plane.matrix.rows[k][i] for k, c in enumerate(coeffs)) for i in range(6)]
        if not any(vec):
            continue
        x = ProjectivePoint(vec)
        if data.node_index(x) is not None:
            continue
        y = duality_map(data, x)
        assert data.dual_lines[0].contains_point(y)
        hits += 1


def test_duality_identity_and_negative_control(data):
    assert verify_duality_identity(data)
    from segrecr.segre import symmetric_power_sum

    assert not verify_duality_identity(data, quartic=symmetric_power_sum(4))


def test_special_sections(data):
    report = verify_special_sections(data)
    assert report.passing, report.failures
    assert all(count == 4 for _, count, _ in report.t_results)
    assert all(ok for _, ok in report.h_results)
    assert all(ok and rank == 4 for _, ok, rank in report.p_results)


def test_restrict_roundtrip():
    cubic5 = restrict_to_traceless(segre_cubic_form())
    assert cubic5.nvars == 5 and cubic5.degree() == 3


@pytest.mark.parametrize(
    "d,n,m,expected", [(3, 4, 10, 4), (3, 4, 0, 24), (3, 4, 6, 12), (2, 2, 0, 2)]
)
def test_plucker_teissier(d, n, m, expected):
    assert plucker_teissier_degree(d, n, m) == expected


def test_plucker_teissier_invalid():
    with pytest.raises(ValueError):
        plucker_teissier_degree(3, 4, 13)
    with pytest.raises(ValueError):
        plucker_teissier_degree(1, 4, 0)


def test_build_all_is_idempotent(data):
    fresh = build_all()
    assert [n.integer_coords() for n in fresh.nodes] == [n.integer_coords() for n in data.nodes]
    assert fresh.plane_labels == data.plane_labels
