from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from castelnuovo.errors import CastelnuovoError, DegenerateConditionError, DimensionMismatchError
from castelnuovo.partitions import Partition, castelnuovo_factorial, enumerate_standard_tableaux, hook_length_count, rectangle
from castelnuovo.schubert import (
    CohomologyElement,
    GrassmannianSpec,
    SchubertProblemInstance,
    castelnuovo_problem,
    castelnuovo_schubert_count,
    horizontal_strips,
    incidence_with_line_class,
    intersection_number,
    pieri_multiply,
    schubert_power,
)

G24 = GrassmannianSpec(2, 4)


def cls(g, *shapes):
    out = CohomologyElement(g)
    for shape in shapes:
        out = out + CohomologyElement.schubert_class(g, shape)
    return out


def strip_oracle(shape, c, rows, cols):
    """Add c cells one column at a time: choose c columns, drop each new cell to the bottom of its column."""
    heights = list(Partition(shape).conjugate().parts) + [0] * cols
    heights = heights[:cols]
    out = set()
    for chosen in combinations(range(cols), c):
        new = heights[:]
        for j in chosen:
            new[j] += 1
        if any(h > rows for h in new) or any(new[j] < new[j + 1] for j in range(cols - 1)):
            continue
        out.add(Partition.from_weakly_decreasing(new).conjugate())
    return out


def test_grassmannian_validation():
    for a, N in [(0, 3), (3, 3), (4, 3)]:
        with pytest.raises(CastelnuovoError):
            GrassmannianSpec(a, N)
    assert G24.dimension == 4
    assert G24.point_class == Partition((2, 2))


def test_cohomology_element_canonical():
    x = CohomologyElement(G24, {(1,): 3, (2,): 0, (1, 1): -1})
    y = CohomologyElement(G24, {Partition((1, 1)): -1, Partition((1,)): 3})
    assert x == y and hash(x) == hash(y)
    assert Partition((2,)) not in x.terms
    assert (x - y) == CohomologyElement(G24)
    with pytest.raises(CastelnuovoError):
        CohomologyElement(G24, {(3,): 1})


@pytest.mark.parametrize("x, c, expected", [
    ([()], 1, [(1,)]),
    ([(1,)], 1, [(2,), (1, 1)]),
    ([(2, 1)], 1, [(2, 2)]),
    ([()], 2, [(2,)]),
    ([(1, 1)], 2, []),  # both new cells would sit in column 2
    ([(2, 2)], 1, []),
])
def test_pieri_multiply_examples(x, c, expected):
    assert pieri_multiply(G24, cls(G24, *x), c) == cls(G24, *expected)


def test_pieri_rejects_bad_index():
    with pytest.raises(CastelnuovoError):
        pieri_multiply(G24, CohomologyElement.unit(G24), 3)
    with pytest.raises(CastelnuovoError):
        pieri_multiply(G24, CohomologyElement.unit(G24), 0)


@pytest.mark.parametrize("rows, cols", [(2, 2), (3, 3), (2, 4), (4, 3)])
def test_horizontal_strips_match_column_oracle(rows, cols):
    shapes = [Partition(p) for p in [(), (1,), (2, 1), (cols,), (cols, 1)] if len(p) <= rows]
    for shape in shapes:
        for c in range(1, cols + 1):
            assert set(horizontal_strips(shape, c, rows, cols)) == strip_oracle(shape.parts, c, rows, cols)


@st.composite
def grassmannians(draw, max_dim=20):
    N = draw(st.integers(min_value=2, max_value=9))
    a = draw(st.integers(min_value=1, max_value=N - 1))
    if a * (N - a) > max_dim:
        a = 1
    return GrassmannianSpec(a, N)


@st.composite
def elements(draw, g):
    terms = {}
    for _ in range(draw(st.integers(min_value=0, max_value=5))):
        parts = sorted(draw(st.lists(st.integers(min_value=0, max_value=g.cols), min_size=g.rows,
                                     max_size=g.rows)), reverse=True)
        terms[Partition.from_weakly_decreasing(parts)] = draw(st.integers(min_value=-9, max_value=9))
    return CohomologyElement(g, terms)


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_pieri_is_linear(data):
    g = data.draw(grassmannians())
    x, y = data.draw(elements(g)), data.draw(elements(g))
    c = data.draw(st.integers(min_value=1, max_value=g.cols))
    s = data.draw(st.integers(min_value=-5, max_value=5))
    assert pieri_multiply(g, x + y, c) == pieri_multiply(g, x, c) + pieri_multiply(g, y, c)
    assert pieri_multiply(g, s * x, c) == s * pieri_multiply(g, x, c)


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_special_classes_commute(data):
    g = data.draw(grassmannians())
    x = data.draw(elements(g))
    c1 = data.draw(st.integers(min_value=1, max_value=g.cols))
    c2 = data.draw(st.integers(min_value=1, max_value=g.cols))
    assert (pieri_multiply(g, pieri_multiply(g, x, c1), c2)
            == pieri_multiply(g, pieri_multiply(g, x, c2), c1))


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_powers_are_homogeneous(data):
    g = data.draw(grassmannians())
    c = data.draw(st.integers(min_value=1, max_value=g.cols))
    m = data.draw(st.integers(min_value=0, max_value=6))
    for shape, _ in schubert_power(g, c, m).items():
        assert shape.size == c * m


@pytest.mark.parametrize("a, N, c, reps, expected", [
    (2, 4, 1, 4, 2),   # lines meeting four lines in P^3
    (1, 5, 4, 1, 1),
    (1, 2, 1, 1, 1),
    (3, 5, 1, 6, 5),
])
def test_intersection_number(a, N, c, reps, expected):
    assert intersection_number(SchubertProblemInstance(GrassmannianSpec(a, N), c, reps)) == expected


def test_intersection_number_frozen_values_come_from_tableaux():
    assert enumerate_standard_tableaux(rectangle(2, 2)) == 2
    assert enumerate_standard_tableaux(rectangle(2, 3)) == 5


def test_sigma1_power_counts_tableaux_of_the_box():
    # the degree of G(a, N) is the number of standard fillings of the a x (N-a) box
    for N in range(2, 8):
        for a in range(1, N):
            if a * (N - a) <= 12:
                g = GrassmannianSpec(a, N)
                problem = SchubertProblemInstance(g, 1, g.dimension)
                assert intersection_number(problem) == enumerate_standard_tableaux(rectangle(a, N - a))


def test_pruning_keeps_point_coefficient():
    g = GrassmannianSpec(3, 6)
    full = schubert_power(g, 1, 9)
    pruned = schubert_power(g, 1, 9, prune_to_point=True)
    assert full.coefficient(g.point_class) == pruned.coefficient(g.point_class) == 42


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatchError):
        intersection_number(SchubertProblemInstance(G24, 1, 3))


@pytest.mark.parametrize("a, N, expected", [(2, 4, 1), (4, 7, 2), (1, 4, 2)])
def test_incidence_with_line_class(a, N, expected):
    # meeting a b-dimensional subspace has codimension N - a - b + 1
    assert expected == N - a - 2 + 1
    assert incidence_with_line_class(GrassmannianSpec(a, N)) == expected


def test_incidence_with_line_class_degenerate():
    with pytest.raises(DegenerateConditionError):
        incidence_with_line_class(GrassmannianSpec(3, 4))


@pytest.mark.parametrize("h, k, expected", [(2, 2, 2), (2, 3, 5), (3, 2, 5)])
def test_castelnuovo_schubert_count(h, k, expected):
    assert castelnuovo_schubert_count(h, k) == expected == castelnuovo_factorial(h, k)


def test_castelnuovo_problem_shape():
    p = castelnuovo_problem(3, 2)
    assert (p.grassmannian.a, p.grassmannian.N, p.condition_codim, p.repetitions) == (4, 7, 2, 6)
    with pytest.raises(CastelnuovoError):
        castelnuovo_problem(1, 5)


def test_three_way_agreement():
    for h in (2, 3, 4):
        for k in (1, 2, 3):
            if h * k * (h - 1) <= 24:
                value = castelnuovo_schubert_count(h, k)
                assert value == castelnuovo_factorial(h, k) == hook_length_count(rectangle(h, k))


def test_duality_for_the_hyperplane_class():
    # exploratory: G(a, N) and G(N - a, N) are isomorphic and sigma_1 is self-conjugate
    for N in range(3, 9):
        for a in range(1, N):
            if a * (N - a) <= 16:
                left = SchubertProblemInstance(GrassmannianSpec(a, N), 1, a * (N - a))
                right = SchubertProblemInstance(GrassmannianSpec(N - a, N), 1, a * (N - a))
                assert intersection_number(left) == intersection_number(right)
