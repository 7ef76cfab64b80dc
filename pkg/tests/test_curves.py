from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from castelnuovo.errors import CastelnuovoError, CoincidentParameterError
from castelnuovo.geometry import (
    INFINITY,
    Chord,
    LinearSubspace,
    PrimeField,
    RationalNormalCurvePoint,
    chord_subspace,
    evaluate_form,
    imposes_identification,
    meets,
    pullback_series,
)
from helpers import incidence_case, seeded, unit


def test_curve_points():
    assert RationalNormalCurvePoint(3, 2).vector() == (1, 2, 4, 8)
    assert RationalNormalCurvePoint(3, INFINITY).vector() == (0, 0, 0, 1)
    assert RationalNormalCurvePoint(2, (2, 1)).vector() == (4, 2, 1)
    with pytest.raises(CastelnuovoError):
        RationalNormalCurvePoint(2, (0, 0))
    with pytest.raises(CastelnuovoError):
        RationalNormalCurvePoint(0, 1)


def test_chord_subspace_examples():
    assert chord_subspace(Chord(3, 0, INFINITY)) == LinearSubspace.span([unit(0), unit(3)])
    conic = chord_subspace(Chord(2, 0, 1))
    assert conic == LinearSubspace.span([(1, 0, 0), (1, 1, 1)])
    assert conic.dim == 2


def test_chord_rejects_coincident_endpoints():
    with pytest.raises(CoincidentParameterError):
        Chord(3, 2, 2)
    with pytest.raises(CoincidentParameterError):
        Chord(3, (1, 2), Fraction(2))  # the same point written twice
    with pytest.raises(CoincidentParameterError):
        Chord(3, INFINITY, (0, 5))


def test_chord_over_prime_field():
    F = PrimeField(5)
    chord = chord_subspace(Chord(3, 1, 6), F)  # 6 = 1 mod 5
    assert chord.dim == 1


def test_pullback_series_dimension():
    # a center of dimension d - r leaves an (r + 1)-dimensional series
    plane = LinearSubspace.span([unit(0)])
    series = pullback_series(plane)
    assert len(series) == 3
    for form in series:
        assert form[0] == 0


def test_pullback_series_rejects_bad_centers():
    with pytest.raises(CastelnuovoError):
        pullback_series(LinearSubspace.span([unit(i) for i in range(4)]))
    with pytest.raises(CastelnuovoError):
        pullback_series(LinearSubspace.span([unit(0), unit(1), unit(2)]))
    with pytest.raises(CastelnuovoError):
        pullback_series(LinearSubspace.span([], 4))


def test_evaluate_form():
    assert evaluate_form((1, 0, 0, 1), 2) == 9  # s^3 + t^3 at (1:2)
    assert evaluate_form((1, 0, 0, 1), INFINITY) == 1
    assert evaluate_form((0, 1, 0), (3, 2)) == 6  # s t


def test_imposes_identification_examples():
    # a center through the midpoint of the chord 0, infinity of the twisted cubic
    center = LinearSubspace.span([(1, 0, 0, 1), (0, 1, 0, 0)])
    series = pullback_series(center)
    assert imposes_identification(series, 0, INFINITY)
    assert not imposes_identification(series, 1, 2)
    with pytest.raises(CoincidentParameterError):
        imposes_identification(series, 1, 1)
    with pytest.raises(CastelnuovoError):
        imposes_identification([], 0, 1)


def test_identification_matches_meets_on_examples():
    for center_vectors, chord in [
        ([(1, 0, 0, 1), (0, 1, 0, 0)], Chord(3, 0, INFINITY)),
        ([(0, 1, 0, 0), (0, 0, 1, 0)], Chord(3, 1, -1)),
        ([(1, 1, 1, 1), (0, 1, 0, 0)], Chord(3, 2, 3)),
    ]:
        center = LinearSubspace.span(center_vectors)
        assert meets(center, chord_subspace(chord)) == imposes_identification(
            pullback_series(center), chord.p.parameter, chord.q.parameter)


def test_base_point_breaks_the_equivalence():
    # a center through an endpoint meets the chord but forces no identification
    center = LinearSubspace.span([unit(0), (0, 1, 1, 0)])
    chord = Chord(3, 0, 1)
    assert meets(center, chord_subspace(chord))
    assert not imposes_identification(pullback_series(center), 0, 1)


@settings(max_examples=80, deadline=None)
@given(st.integers(3, 6), st.integers(1, 2), st.booleans(), st.integers(0, 2**32))
def test_chord_incidence_equivalence(d, r, forced, seed):
    plane, chord = incidence_case(seeded(seed), d, r, forced)
    met = meets(plane, chord_subspace(chord))
    identified = imposes_identification(pullback_series(plane), chord.p.parameter, chord.q.parameter)
    assert met == identified
    if forced:
        assert met
