"""Schubert calculus on the Grassmannian of a-dimensional subspaces of an N-dimensional space.

Classes are indexed by partitions inside the a x (N - a) box. Only
multiplication by special classes is implemented (the Pieri rule), which is
all that a power of a single special class needs.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Mapping

from .errors import CastelnuovoError, DegenerateConditionError, DimensionMismatchError
from .partitions import Partition


@dataclass(frozen=True)
class GrassmannianSpec:
    """G(a, N): a-dimensional subspaces of an N-dimensional vector space."""

    a: int
    N: int

    def __post_init__(self):
        if not 1 <= self.a <= self.N - 1:
            raise CastelnuovoError(f"need 1 <= a <= N-1, got a={self.a}, N={self.N}")

    @property
    def rows(self) -> int:
        return self.a

    @property
    def cols(self) -> int:
        return self.N - self.a

    @property
    def dimension(self) -> int:
        return self.a * (self.N - self.a)

    @property
    def point_class(self) -> Partition:
        return Partition((self.cols,) * self.rows)


class CohomologyElement:
    """A finite integer combination of Schubert classes of one Grassmannian.

    Zero coefficients are dropped and terms are kept sorted by shape, so two
    elements compare equal exactly when they have the same expansion.
    """

    __slots__ = ("grassmannian", "_terms")

    def __init__(self, grassmannian: GrassmannianSpec, terms: Mapping[Partition, int] | None = None):
        self.grassmannian = grassmannian
        clean = {}
        for shape, coeff in (terms or {}).items():
            shape = shape if isinstance(shape, Partition) else Partition(shape)
            if not shape.fits_in_box(grassmannian.rows, grassmannian.cols):
                raise CastelnuovoError(f"{shape} does not fit the {grassmannian.rows}x{grassmannian.cols} box")
            if coeff:
                clean[shape] = clean.get(shape, 0) + int(coeff)
        self._terms = tuple(sorted((s, c) for s, c in clean.items() if c))

    @classmethod
    def unit(cls, grassmannian: GrassmannianSpec) -> CohomologyElement:
        return cls(grassmannian, {Partition(): 1})

    @classmethod
    def schubert_class(cls, grassmannian: GrassmannianSpec, shape) -> CohomologyElement:
        return cls(grassmannian, {Partition(shape): 1})

    @property
    def terms(self) -> dict[Partition, int]:
        return dict(self._terms)

    def items(self):
        return iter(self._terms)

    def coefficient(self, shape) -> int:
        shape = shape if isinstance(shape, Partition) else Partition(shape)
        return dict(self._terms).get(shape, 0)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def _check(self, other: CohomologyElement):
        if other.grassmannian != self.grassmannian:
            raise CastelnuovoError("cohomology elements of different Grassmannians")

    def __add__(self, other: CohomologyElement) -> CohomologyElement:
        self._check(other)
        merged = dict(self._terms)
        for shape, coeff in other._terms:
            merged[shape] = merged.get(shape, 0) + coeff
        return CohomologyElement(self.grassmannian, merged)

    def __neg__(self) -> CohomologyElement:
        return CohomologyElement(self.grassmannian, {s: -c for s, c in self._terms})

    def __sub__(self, other: CohomologyElement) -> CohomologyElement:
        return self + (-other)

    def __rmul__(self, scalar: int) -> CohomologyElement:
        return CohomologyElement(self.grassmannian, {s: scalar * c for s, c in self._terms})

    def __eq__(self, other) -> bool:
        if not isinstance(other, CohomologyElement):
            return NotImplemented
        return self.grassmannian == other.grassmannian and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.grassmannian, self._terms))

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(f"{c}*s{shape}" for shape, c in self._terms)


@dataclass(frozen=True)
class SchubertProblemInstance:
    """Count subspaces in ``grassmannian`` satisfying ``repetitions`` general copies of sigma_c."""

    grassmannian: GrassmannianSpec
    condition_codim: int
    repetitions: int

    def __post_init__(self):
        if not 1 <= self.condition_codim <= self.grassmannian.cols:
            raise CastelnuovoError(
                f"condition codimension {self.condition_codim} outside [1, {self.grassmannian.cols}]"
            )
        if self.repetitions < 1:
            raise CastelnuovoError("repetitions must be positive")

    @property
    def is_zero_dimensional(self) -> bool:
        return self.repetitions * self.condition_codim == self.grassmannian.dimension


def horizontal_strips(shape: Partition, c: int, rows: int, cols: int) -> Iterator[Partition]:
    """Yield every shape in the rows x cols box obtained by adding c boxes, no two in one column.

    mu / lambda is a horizontal strip exactly when lambda_i <= mu_i <= lambda_{i-1}
    (with lambda_0 = cols), so each row is grown independently within those bounds.
    """
    base = list(shape.parts) + [0] * (rows - len(shape))
    if len(base) > rows:
        return
    grown = [0] * rows

    def fill(i: int, remaining: int):
        if i == rows:
            if remaining == 0:
                yield Partition.from_weakly_decreasing(grown)
            return
        ceiling = cols if i == 0 else base[i - 1]
        for extra in range(min(remaining, ceiling - base[i]) + 1):
            grown[i] = base[i] + extra
            yield from fill(i + 1, remaining - extra)

    yield from fill(0, c)


def pieri_multiply(grassmannian: GrassmannianSpec, x: CohomologyElement, c: int) -> CohomologyElement:
    """Multiply ``x`` by the special class sigma_c, truncating to the box."""
    if not 1 <= c <= grassmannian.cols:
        raise CastelnuovoError(f"special class index {c} outside [1, {grassmannian.cols}]")
    if x.grassmannian != grassmannian:
        raise CastelnuovoError("element does not belong to this Grassmannian")
    out: dict[Partition, int] = {}
    for shape, coeff in x.items():
        for mu in horizontal_strips(shape, c, grassmannian.rows, grassmannian.cols):
            out[mu] = out.get(mu, 0) + coeff
    return CohomologyElement(grassmannian, out)


def _can_fill(shape: Partition, rows: int, cols: int, steps_left: int) -> bool:
    # a horizontal strip adds at most one box to each column
    heights = shape.conjugate().parts + (0,) * (cols - (shape[0] if len(shape) else 0))
    return all(rows - height <= steps_left for height in heights)


def schubert_power(grassmannian: GrassmannianSpec, c: int, repetitions: int,
                   prune_to_point: bool = False) -> CohomologyElement:
    """sigma_c ** repetitions by iterated Pieri products starting from the unit class.

    With ``prune_to_point`` set, shapes that can no longer reach the full box
    in the remaining steps are dropped; the point-class coefficient is
    unchanged but the rest of the expansion is not meaningful.
    """
    x = CohomologyElement.unit(grassmannian)
    for step in range(repetitions):
        x = pieri_multiply(grassmannian, x, c)
        if prune_to_point:
            left = repetitions - step - 1
            x = CohomologyElement(grassmannian, {
                s: k for s, k in x.items() if _can_fill(s, grassmannian.rows, grassmannian.cols, left)
            })
    return x


def intersection_number(problem: SchubertProblemInstance) -> int:
    """Coefficient of the point class in sigma_c ** repetitions."""
    if not problem.is_zero_dimensional:
        g = problem.grassmannian
        raise DimensionMismatchError(
            f"{problem.repetitions} x {problem.condition_codim} != dim G({g.a},{g.N}) = {g.dimension}"
        )
    g = problem.grassmannian
    power = schubert_power(g, problem.condition_codim, problem.repetitions, prune_to_point=True)
    return power.coefficient(g.point_class)


def incidence_with_line_class(grassmannian: GrassmannianSpec) -> int:
    """Codimension of the locus of a-planes meeting a fixed 2-dimensional subspace.

    The general dimension count for meeting a b-dimensional subspace is
    N - a - b + 1; here b = 2.
    """
    c = grassmannian.N - grassmannian.a - 1
    if c < 1:
        raise DegenerateConditionError(
            f"every {grassmannian.a}-dimensional subspace of a {grassmannian.N}-dimensional space meets every line"
        )
    return c


def castelnuovo_problem(h: int, k: int) -> SchubertProblemInstance:
    """hk lines in projective (k+1)(h-1)-space, asking for (k(h-1)-1)-planes meeting all of them."""
    if h < 2:
        raise CastelnuovoError(f"the line-incidence problem needs h >= 2, got h={h}")
    if k < 1:
        raise CastelnuovoError(f"need k >= 1, got k={k}")
    a = k * (h - 1)
    grassmannian = GrassmannianSpec(a, a + h)
    problem = SchubertProblemInstance(grassmannian, incidence_with_line_class(grassmannian), h * k)
    assert problem.is_zero_dimensional
    return problem


def castelnuovo_schubert_count(h: int, k: int) -> int:
    """The line-incidence count of :func:`castelnuovo_problem` as an intersection number."""
    return intersection_number(castelnuovo_problem(h, k))
