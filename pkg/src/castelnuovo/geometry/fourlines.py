"""Lines in 3-space meeting four given lines, solved exactly in Plücker coordinates.

Conventions, used everywhere in the package:

* coordinates are ordered p01, p02, p03, p12, p13, p23 with p_ij = u_i v_j - u_j v_i
  for a line spanned by u and v;
* the Plücker relation is p01*p23 - p02*p13 + p03*p12 = 0;
* two lines p, q meet exactly when the polarized pairing
  p01 q23 - p02 q13 + p03 q12 + p12 q03 - p13 q02 + p23 q01 vanishes.

Four incidence conditions are linear, so for lines in general position they
cut a pencil (a 2-dimensional space) out of Plücker space, and the relation
restricts to a binary quadratic on it.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field, replace
from fractions import Fraction
from typing import Sequence

from ..errors import CastelnuovoError, DegenerateConditionError, NonReducedPencilError
from .fields import QQ, PrimeField, QuadraticExtension, QuadraticNumberField
from .linalg import LinearSubspace, kernel, meets, rank

PLUCKER_INDEX = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))


def plucker_coordinates(line: LinearSubspace) -> tuple:
    if line.ambient_dim != 4 or line.dim != 2:
        raise CastelnuovoError(f"need a 2-dimensional subspace of 4-space, got {line!r}")
    u, v = line.basis
    return tuple(u[i] * v[j] - u[j] * v[i] for i, j in PLUCKER_INDEX)


def plucker_pairing(p: Sequence, q: Sequence):
    return p[0] * q[5] - p[1] * q[4] + p[2] * q[3] + p[3] * q[2] - p[4] * q[1] + p[5] * q[0]


def plucker_relation(p: Sequence):
    return p[0] * p[5] - p[1] * p[4] + p[2] * p[3]


def incidence_form(line: LinearSubspace) -> tuple:
    """Coefficients w with w . p equal to the pairing of p with ``line``."""
    q = plucker_coordinates(line)
    return (q[5], -q[4], q[3], q[2], -q[1], q[0])


def line_from_plucker(p: Sequence, field=QQ) -> LinearSubspace:
    """Recover the line from a decomposable Plücker vector.

    The antisymmetric matrix with entries p_ij is u v^T - v u^T, whose rows
    span the line.
    """
    zero = field.zero
    m = [[zero] * 4 for _ in range(4)]
    for (i, j), value in zip(PLUCKER_INDEX, p):
        m[i][j] = value
        m[j][i] = -value
    line = LinearSubspace.span(m, 4, field)
    if line.dim != 2:
        raise CastelnuovoError("Plücker vector is not decomposable")
    return line


@dataclass(frozen=True)
class PencilSolutionReport:
    """Outcome of one four-lines problem.

    ``solutions`` holds the lines defined over the field of the input.
    When the two solutions are conjugate over a quadratic extension,
    ``extension`` names it and ``conjugate_solutions`` holds the pair,
    written over that extension. ``verified`` records that every listed
    solution meets all four lines and satisfies the Plücker relation.
    """

    count_with_multiplicity: int | None
    infinite: bool
    discriminant: object
    distinct_roots: int
    solutions: tuple = ()
    conjugate_solutions: tuple = ()
    extension: str | None = None
    degenerate: bool = False
    reason: str | None = None
    verified: bool = False
    field: object = QQ
    quadratic: tuple = ()
    parameters: tuple | None = dc_field(default=None, compare=False)

    @property
    def generic(self) -> bool:
        return not self.degenerate and not self.infinite

    @property
    def rational_root_count(self) -> int:
        return len(self.solutions)

    def to_json(self) -> dict:
        count = self.count_with_multiplicity
        out = {
            "count": "infinite" if self.infinite else None if count is None else str(count),
            "degenerate": self.degenerate,
            "discriminant": None if self.discriminant is None else str(self.discriminant),
            "distinct_roots": self.distinct_roots,
            "extension": self.extension,
            "field": repr(self.field),
            "reason": self.reason,
            "solutions": [[[str(v) for v in row] for row in s.basis] for s in self.solutions],
            "verified": self.verified,
        }
        if self.parameters is not None:
            out["parameters"] = [str(v) for v in self.parameters]
        return out


def degenerate_report(reason: str, field=QQ, infinite: bool = False, parameters=None) -> PencilSolutionReport:
    return PencilSolutionReport(
        count_with_multiplicity=None, infinite=infinite, discriminant=None, distinct_roots=0,
        degenerate=True, reason=reason, field=field, parameters=parameters,
    )


def _quadratic_extension(field, disc):
    """An extension containing sqrt(disc), that square root, and a printable description."""
    if field is QQ:
        # sqrt(n/d) = sqrt(n*d)/d = f * sqrt(D) / d with n*d = f^2 * D
        disc = Fraction(disc)
        radicand, factor = squarefree_split(disc.numerator * disc.denominator)
        ext = QuadraticNumberField(radicand)
        root = ext.root * Fraction(factor, disc.denominator)
        return ext, root, f"QQ(sqrt({radicand}))"
    if isinstance(field, PrimeField) and field.p != 2:
        ext = QuadraticExtension(field)
        # disc and the extension's non-residue differ by a square
        root = ext.theta * ext(field.sqrt(disc / ext.nonresidue))
        return ext, root, f"{ext!r}"
    return None, None, f"quadratic extension of {field!r}"


def squarefree_split(n: int, bound: int = 10**4) -> tuple[int, int]:
    """Write n = f^2 * D, pulling out square factors of primes below ``bound``.

    D is square-free whenever every prime factor of n is below the bound;
    otherwise it may keep a large square factor, which is still correct.
    """
    sign, n, f = (-1 if n < 0 else 1), abs(n), 1
    p = 2
    while p < bound and p * p <= n:
        while n % (p * p) == 0:
            n //= p * p
            f *= p
        p += 1 if p == 2 else 2
    return sign * n, f


def _roots(A, B, C, disc, sqrt_disc, one):
    """Projective roots (x : y) of A x^2 + B x y + C y^2, given sqrt(disc) in a field containing it."""
    zero = one * 0
    if A != 0:
        if disc == 0:
            return [(-B / (2 * A), one)]
        return [((-B + sqrt_disc) / (2 * A), one), ((-B - sqrt_disc) / (2 * A), one)]
    if B != 0:
        return [(one, zero), (-C / B, one)]
    return [(one, zero)]


def _verify(solution: LinearSubspace, lines: Sequence[LinearSubspace]) -> bool:
    lifted = [LinearSubspace.span(l.basis, 4, solution.field) for l in lines]
    return (solution.dim == 2 and plucker_relation(plucker_coordinates(solution)) == 0
            and all(meets(solution, l) for l in lifted))


def solve_four_lines(lines: Sequence[LinearSubspace]) -> PencilSolutionReport:
    """All lines meeting four given lines of projective 3-space.

    Raises:
        DegenerateConditionError: the four incidence conditions have rank
            below 4 (for example, all four lines pass through one point).
        NonReducedPencilError: the Plücker relation vanishes on the whole
            pencil, so infinitely many lines meet all four.
    """
    if len(lines) != 4:
        raise CastelnuovoError(f"need exactly four lines, got {len(lines)}")
    field = lines[0].field
    for line in lines:
        if line.ambient_dim != 4 or line.dim != 2:
            raise CastelnuovoError(f"each condition must be a line (2-dim subspace of 4-space), got {line!r}")
        if line.field != field:
            raise CastelnuovoError("condition lines over different fields")
    if field is not QQ and field.characteristic == 2:
        raise CastelnuovoError("the quadratic formula needs characteristic other than 2")

    conditions = [incidence_form(l) for l in lines]
    r = rank(conditions, field)
    if r < 4:
        raise DegenerateConditionError(f"incidence conditions have rank {r} < 4")
    k1, k2 = kernel(conditions, 6, field)

    A = plucker_relation(k1)
    C = plucker_relation(k2)
    B = plucker_relation([a + b for a, b in zip(k1, k2)]) - A - C
    if A == 0 and B == 0 and C == 0:
        raise NonReducedPencilError("Plücker relation vanishes on the pencil: infinitely many solutions")
    disc = B * B - 4 * A * C
    distinct = 1 if disc == 0 else 2

    sqrt_disc = field.sqrt(disc)
    solutions, conjugates, extension = [], [], None
    if sqrt_disc is not None:
        for x, y in _roots(A, B, C, disc, sqrt_disc, field.one):
            solutions.append(line_from_plucker([x * a + y * b for a, b in zip(k1, k2)], field))
    else:
        ext, root, extension = _quadratic_extension(field, disc)
        if ext is not None:
            lift = [ext(v) for v in (A, B, C)]
            for x, y in _roots(*lift, ext(disc), root, ext.one):
                conjugates.append(line_from_plucker([x * a + y * b for a, b in zip(k1, k2)], ext))

    verified = all(_verify(s, lines) for s in [*solutions, *conjugates])
    return PencilSolutionReport(
        count_with_multiplicity=2,
        infinite=False,
        discriminant=disc,
        distinct_roots=distinct,
        solutions=tuple(solutions),
        conjugate_solutions=tuple(conjugates),
        extension=extension,
        degenerate=disc == 0,
        reason="zero discriminant: the two solutions coincide" if disc == 0 else None,
        verified=verified,
        field=field,
        quadratic=(A, B, C),
    )


def try_solve_four_lines(lines: Sequence[LinearSubspace], parameters=None) -> PencilSolutionReport:
    """Like :func:`solve_four_lines`, but degenerate inputs come back as flagged reports."""
    field = lines[0].field if lines else QQ
    try:
        report = solve_four_lines(lines)
    except NonReducedPencilError as exc:
        return degenerate_report(str(exc), field, infinite=True, parameters=parameters)
    except CastelnuovoError as exc:
        return degenerate_report(str(exc), field, parameters=parameters)
    return replace(report, parameters=parameters) if parameters is not None else report
