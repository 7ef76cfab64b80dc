"""Rational normal curves, their chords, and linear series cut out by hyperplanes.

A parameter is a homogeneous pair (s : t). An affine value x stands for
(1 : x), and :data:`INFINITY` is (0 : 1). The degree-d curve sends (s : t)
to (s^d, s^(d-1) t, ..., t^d), and a coefficient vector (a_0, ..., a_d)
is read as the binary form sum a_i s^(d-i) t^i, so a hyperplane contains a
curve point exactly when its form vanishes at the parameter.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Sequence

from ..errors import CastelnuovoError, CoincidentParameterError
from .fields import common_field
from .linalg import LinearSubspace, rank

INFINITY = (0, 1)


def as_parameter(value) -> tuple:
    """Normalize an affine value, a pair (s, t), or INFINITY to a homogeneous pair."""
    if isinstance(value, RationalNormalCurvePoint):
        return value.parameter
    if isinstance(value, tuple):
        if len(value) != 2:
            raise CastelnuovoError(f"homogeneous parameter needs two entries, got {value!r}")
        s, t = value
        if s == 0 and t == 0:
            raise CastelnuovoError("(0 : 0) is not a point of the projective line")
        return (Fraction(s), Fraction(t)) if isinstance(s, Rational) and isinstance(t, Rational) else (s, t)
    if isinstance(value, Rational):
        return (Fraction(1), Fraction(value))
    field = common_field([value])
    return (field.one, value)


def same_parameter(p, q) -> bool:
    (s1, t1), (s2, t2) = as_parameter(p), as_parameter(q)
    return s1 * t2 - s2 * t1 == 0


@dataclass(frozen=True)
class RationalNormalCurvePoint:
    d: int
    parameter: tuple

    def __init__(self, d: int, parameter):
        if d < 1:
            raise CastelnuovoError(f"curve degree must be positive, got {d}")
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "parameter", as_parameter(parameter))

    def vector(self) -> tuple:
        s, t = self.parameter
        return tuple(s ** (self.d - i) * t ** i for i in range(self.d + 1))


@dataclass(frozen=True)
class Chord:
    d: int
    p: RationalNormalCurvePoint
    q: RationalNormalCurvePoint

    def __init__(self, d: int, p, q):
        p = p if isinstance(p, RationalNormalCurvePoint) else RationalNormalCurvePoint(d, p)
        q = q if isinstance(q, RationalNormalCurvePoint) else RationalNormalCurvePoint(d, q)
        if p.d != d or q.d != d:
            raise CastelnuovoError("chord endpoints lie on curves of another degree")
        if same_parameter(p.parameter, q.parameter):
            raise CoincidentParameterError(
                f"chord endpoints coincide at {p.parameter}; tangent lines are not chords"
            )
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)


def chord_subspace(chord: Chord, field=None) -> LinearSubspace:
    """The 2-dimensional span of the two embedded endpoints."""
    return LinearSubspace.span([chord.p.vector(), chord.q.vector()], chord.d + 1, field)


def pullback_series(plane: LinearSubspace) -> list[tuple]:
    """Basis of the binary forms of degree d cut by hyperplanes containing ``plane``.

    ``plane`` lives in (d+1)-space and must have dimension d - r with
    1 <= r < d; the result then spans an (r+1)-dimensional space of forms.
    """
    d = plane.ambient_dim - 1
    if not 1 <= plane.dim <= d - 1:
        raise CastelnuovoError(
            f"a center of dimension {plane.dim} in {plane.ambient_dim}-space does not give a series with 1 <= r < d"
        )
    forms = plane.annihilator()
    assert len(forms) == d + 1 - plane.dim
    return forms


def evaluate_form(form: Sequence, parameter) -> object:
    s, t = as_parameter(parameter)
    d = len(form) - 1
    return sum((a * s ** (d - i) * t ** i for i, a in enumerate(form)), start=0 * s)


def imposes_identification(series: Sequence[Sequence], t_p, t_q) -> bool:
    """True when every divisor of the series through t_p also passes through t_q.

    With e_p the vector of values of the basis forms at t_p, the divisors
    through t_p are the combinations c with c . e_p = 0, and they all vanish
    at t_q exactly when e_q lies in the span of e_p.
    """
    if not series:
        raise CastelnuovoError("the series has no forms")
    if same_parameter(t_p, t_q):
        raise CoincidentParameterError(f"identification of {as_parameter(t_p)} with itself")
    field = common_field(v for f in series for v in f)
    e_p = [evaluate_form(f, t_p) for f in series]
    e_q = [evaluate_form(f, t_q) for f in series]
    return rank([e_p, e_q], field) == rank([e_p], field)

