"""Linear series g^r_d on a general curve of genus g when the Brill-Noether number vanishes.

Older sources write g^(q)_m on a curve of genus p; the dictionary is
p = g, q = r, m = d, and Q = g - d + r - 1. In those letters the finiteness
condition reads m - q = (p - m + q) q, and it forces p = (q + 1)(Q + 1).
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import CastelnuovoError, DegenerateConditionError, RhoNonzeroError
from .partitions import castelnuovo_factorial
from .schubert import GrassmannianSpec, SchubertProblemInstance, incidence_with_line_class


@dataclass(frozen=True, order=True)
class BNProblem:
    g: int
    r: int
    d: int

    def __post_init__(self):
        if self.g < 0:
            raise CastelnuovoError(f"genus must be non-negative, got g={self.g}")
        if self.r < 1:
            raise CastelnuovoError(f"series dimension must be at least 1, got r={self.r}")
        if self.d < self.r:
            raise CastelnuovoError(f"need d >= r, got r={self.r}, d={self.d}")

    @property
    def h(self) -> int:
        return self.r + 1

    @property
    def k(self) -> int:
        return self.g - self.d + self.r

    @property
    def rho(self) -> int:
        return brill_noether_number(self)

    def __str__(self) -> str:
        return f"(g={self.g}, r={self.r}, d={self.d})"


@dataclass(frozen=True)
class CastelnuovoParams:
    """Rectangle sides h = r + 1 and k = g - d + r; with rho = 0 the genus is h * k."""

    h: int
    k: int

    def __post_init__(self):
        if self.h < 2 or self.k < 1:
            raise CastelnuovoError(f"need h >= 2 and k >= 1, got h={self.h}, k={self.k}")


def brill_noether_number(problem: BNProblem) -> int:
    """rho = g - (r + 1)(g - d + r), defined for every valid triple."""
    return problem.g - (problem.r + 1) * (problem.g - problem.d + problem.r)


def _require_rho_zero(problem: BNProblem):
    rho = brill_noether_number(problem)
    if rho != 0:
        raise RhoNonzeroError(rho)


def to_castelnuovo_params(problem: BNProblem) -> CastelnuovoParams:
    _require_rho_zero(problem)
    if problem.g < 1 or problem.k < 1:
        raise DegenerateConditionError(
            f"{problem} is non-special (g - d + r = {problem.k}); the count is 1 by convention"
        )
    params = CastelnuovoParams(problem.h, problem.k)
    assert params.h * params.k == problem.g
    return params


def castelnuovo_number(problem: BNProblem) -> int:
    """Number of g^r_d on a general curve of genus g, for rho = 0.

    Non-special triples (g = 0 or g - d + r = 0) have no conditions to
    impose and count as 1.
    """
    _require_rho_zero(problem)
    if problem.g == 0 or problem.k == 0:
        return 1
    params = to_castelnuovo_params(problem)
    return castelnuovo_factorial(params.h, params.k)


def to_schubert_problem(problem: BNProblem) -> SchubertProblemInstance:
    """(d-r-1)-planes in P^d meeting g chords, written as (d-r)-subspaces of a (d+1)-space."""
    to_castelnuovo_params(problem)
    grassmannian = GrassmannianSpec(problem.d - problem.r, problem.d + 1)
    instance = SchubertProblemInstance(grassmannian, incidence_with_line_class(grassmannian), problem.g)
    assert instance.condition_codim == problem.r
    assert instance.is_zero_dimensional
    return instance


def residual(problem: BNProblem) -> BNProblem:
    """The residual series (g, g - d + r - 1, 2g - 2 - d)."""
    if problem.g < 1:
        raise CastelnuovoError("residual series needs g >= 1")
    r = problem.g - problem.d + problem.r - 1
    d = 2 * problem.g - 2 - problem.d
    if r < 1 or d < r:
        raise CastelnuovoError(f"residual of {problem} is not a valid series: r'={r}, d'={d}")
    return BNProblem(problem.g, r, d)


def enumerate_rho_zero(g: int) -> list[BNProblem]:
    """Every special rho = 0 triple of genus g, one per factorization g = h * k with h >= 2."""
    if g < 1:
        raise CastelnuovoError(f"genus must be positive, got g={g}")
    out = []
    for h in range(2, g + 1):
        if g % h == 0:
            k = g // h
            r = h - 1
            out.append(BNProblem(g, r, g + r - k))
    return sorted(out, key=lambda p: (p.r, p.d))
