from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from castelnuovo.errors import CastelnuovoError, DegenerateConditionError, NonReducedPencilError
from castelnuovo.geometry import (
    QQ,
    LinearSubspace,
    PrimeField,
    incidence_form,
    line_from_plucker,
    meets,
    plucker_coordinates,
    plucker_pairing,
    plucker_relation,
    solve_four_lines,
    squarefree_split,
    try_solve_four_lines,
)
from helpers import coordinate_lines, cubic_chords, unit

JSON_KEYS = {"count", "degenerate", "discriminant", "distinct_roots", "extension", "field", "reason",
             "solutions", "verified"}


def span(*vectors, field=None):
    return LinearSubspace.span(list(vectors), 4, field)


def test_plucker_of_coordinate_line():
    assert plucker_coordinates(span(unit(0), unit(1))) == (1, 0, 0, 0, 0, 0)
    assert plucker_coordinates(span(unit(2), unit(3))) == (0, 0, 0, 0, 0, 1)


@settings(max_examples=50)
@given(st.lists(st.integers(-6, 6), min_size=16, max_size=16))
def test_pairing_detects_incidence(entries):
    a = span(entries[0:4], entries[4:8])
    b = span(entries[8:12], entries[12:16])
    if a.dim != 2 or b.dim != 2:
        return
    p, q = plucker_coordinates(a), plucker_coordinates(b)
    assert plucker_relation(p) == 0
    assert (plucker_pairing(p, q) == 0) == meets(a, b)
    w = incidence_form(b)
    assert sum(x * y for x, y in zip(w, p)) == plucker_pairing(p, q)
    assert line_from_plucker(p) == a


def test_line_from_plucker_rejects_indecomposable():
    with pytest.raises(CastelnuovoError):
        line_from_plucker((1, 0, 0, 0, 0, 1))


def test_coordinate_lines_have_two_rational_solutions():
    report = solve_four_lines(coordinate_lines())
    assert report.count_with_multiplicity == 2 and report.distinct_roots == 2
    assert report.rational_root_count == 2 and report.verified and report.generic
    # the two transversals are the remaining coordinate lines
    assert set(report.solutions) == {span(unit(0), unit(3)), span(unit(1), unit(2))}


def test_twisted_cubic_chords_are_conjugate_over_a_real_quadratic_field():
    report = solve_four_lines(cubic_chords(range(8)))
    assert report.count_with_multiplicity == 2
    assert report.discriminant == Fraction(12, 175)
    assert report.rational_root_count == 0
    assert report.extension == "QQ(sqrt(21))"
    assert len(report.conjugate_solutions) == 2 and report.verified


def test_four_lines_through_a_point():
    lines = [span(unit(0), v) for v in [(0, 1, 2, 3), (0, 5, 1, 1), (0, 0, 1, 7), (0, 2, 3, 1)]]
    with pytest.raises(DegenerateConditionError):
        solve_four_lines(lines)


def test_lines_of_one_ruling():
    with pytest.raises(DegenerateConditionError):
        solve_four_lines([span((1, l, 0, 0), (0, 0, 1, l)) for l in range(4)])


def test_non_reduced_pencil():
    # two lines through e0 and two lines in a plane through e0: the pencil of lines at e0 in that plane
    lines = [span(unit(0), (0, 1, 1, 1)), span(unit(0), (0, 2, -1, 3)),
             span(unit(1), (1, 0, 1, 0)), span(unit(2), (1, 3, 0, 0))]
    with pytest.raises(NonReducedPencilError):
        solve_four_lines(lines)
    report = try_solve_four_lines(lines)
    assert report.infinite and report.degenerate and report.to_json()["count"] == "infinite"


def test_tangent_configuration_has_zero_discriminant():
    # transversals to e0e1 and e2e3 join (a, b) to (c, d); the last two lines impose (c:d) = (a:b)
    # and (c:d) = (a+b:b), a parabolic map whose single fixed point is double
    lines = coordinate_lines()[:2] + [span((1, 0, 1, 0), (0, 1, 0, 1)), span((1, 0, 1, 0), (0, 1, 1, 1))]
    report = solve_four_lines(lines)
    assert report.discriminant == 0
    assert report.degenerate and report.distinct_roots == 1 and report.count_with_multiplicity == 2
    assert report.solutions == (span(unit(0), unit(2)),) and report.verified


def test_input_validation():
    lines = coordinate_lines()
    with pytest.raises(CastelnuovoError):
        solve_four_lines(lines[:3])
    with pytest.raises(CastelnuovoError):
        solve_four_lines(lines[:3] + [span(unit(0))])
    with pytest.raises(CastelnuovoError):
        solve_four_lines(coordinate_lines(PrimeField(2)))
    with pytest.raises(CastelnuovoError):
        solve_four_lines(lines[:3] + [coordinate_lines(PrimeField(5))[3]])


def test_json_shape():
    payload = solve_four_lines(coordinate_lines()).to_json()
    assert set(payload) == JSON_KEYS
    assert payload["count"] == "2" and payload["degenerate"] is False
    assert all(isinstance(v, str) for s in payload["solutions"] for row in s for v in row)
    flagged = try_solve_four_lines(coordinate_lines()[:2] * 2, parameters=(1, 2))
    assert flagged.degenerate and flagged.to_json()["parameters"] == ["1", "2"]


@pytest.mark.parametrize("n, split", [(12, (3, 2)), (-8, (-2, 2)), (1, (1, 1)), (21, (21, 1)), (0, (0, 1))])
def test_squarefree_split(n, split):
    core, root = squarefree_split(n)
    assert (core, root) == split
    assert core * root * root == n


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(-4, 4), min_size=32, max_size=32))
def test_solver_soundness(entries):
    lines = [span(entries[8 * i: 8 * i + 4], entries[8 * i + 4: 8 * i + 8]) for i in range(4)]
    if any(l.dim != 2 for l in lines):
        return
    report = try_solve_four_lines(lines)
    if report.degenerate and report.discriminant is None:
        return
    assert report.count_with_multiplicity == 2
    assert report.verified
    for s in report.solutions:
        assert all(meets(s, l) for l in lines)
    assert report.rational_root_count in (0, 1, 2)


@pytest.mark.parametrize("p", [5, 17])
def test_twisted_cubic_mod_p_splits(p):
    report = solve_four_lines(cubic_chords(range(8), PrimeField(p)))
    assert report.field == PrimeField(p) and report.rational_root_count == 2 and report.verified


def test_twisted_cubic_mod_p_conjugate():
    report = solve_four_lines(cubic_chords(range(8), PrimeField(11)))
    assert report.rational_root_count == 0 and report.extension == "GF(11^2)"
    assert len(report.conjugate_solutions) == 2 and report.verified


def test_rational_field_default():
    assert solve_four_lines(coordinate_lines()).field is QQ
