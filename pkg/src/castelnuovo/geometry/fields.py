"""Exact fields: the rationals, prime fields, their quadratic extensions, and Q(sqrt D).

Rationals are plain :class:`fractions.Fraction` values. The other fields
hand out small immutable element objects that know their field, so mixing
elements of two fields is caught instead of silently computing garbage.
"""
from __future__ import annotations

from fractions import Fraction
from math import isqrt
from numbers import Rational
from typing import Iterator

from ..errors import CastelnuovoError, MixedFieldError

MAX_PRIME = 2**31


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def rational_sqrt(x: Fraction) -> Fraction | None:
    """Exact square root of a non-negative rational, or None when it is irrational."""
    x = Fraction(x)
    if x < 0:
        return None
    num, den = isqrt(x.numerator), isqrt(x.denominator)
    if num * num == x.numerator and den * den == x.denominator:
        return Fraction(num, den)
    return None


class RationalField:
    """The field of rationals; elements are Fractions (ints are accepted as input)."""

    characteristic = 0
    order = None
    zero = Fraction(0)
    one = Fraction(1)

    def __call__(self, value) -> Fraction:
        return Fraction(value)

    def is_square(self, x) -> bool:
        return rational_sqrt(x) is not None

    def sqrt(self, x) -> Fraction | None:
        return rational_sqrt(x)

    def __repr__(self) -> str:
        return "QQ"

    def __reduce__(self):
        return "QQ"


QQ = RationalField()


class _Element:
    """Shared arithmetic plumbing; subclasses supply _add, _mul, _neg, _inv and _coerce."""

    __slots__ = ()

    def __add__(self, other):
        other = self._coerce(other)
        return NotImplemented if other is None else self._add(other)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        return NotImplemented if other is None else self._add(other._neg())

    def __rsub__(self, other):
        other = self._coerce(other)
        return NotImplemented if other is None else other._add(self._neg())

    def __mul__(self, other):
        other = self._coerce(other)
        return NotImplemented if other is None else self._mul(other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        return NotImplemented if other is None else self._mul(other._inv())

    def __rtruediv__(self, other):
        other = self._coerce(other)
        return NotImplemented if other is None else other._mul(self._inv())

    def __neg__(self):
        return self._neg()

    def __pow__(self, n: int):
        result, base = self.field.one, self
        if n < 0:
            base, n = base._inv(), -n
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result


class PrimeField:
    """F_p for a prime p <= 2**31."""

    def __init__(self, p: int):
        if not (2 <= p <= MAX_PRIME and is_prime(p)):
            raise CastelnuovoError(f"{p} is not a prime in [2, 2**31]")
        self.p = p
        self.characteristic = p
        self.order = p
        self.zero = FpElement(self, 0)
        self.one = FpElement(self, 1)

    def __call__(self, value) -> FpElement:
        if isinstance(value, FpElement):
            if value.field != self:
                raise MixedFieldError(f"element of {value.field} used in {self}")
            return value
        if isinstance(value, Rational):
            value = Fraction(value)
            if value.denominator % self.p == 0:
                raise CastelnuovoError(f"{value} has a denominator divisible by {self.p}")
            return FpElement(self, value.numerator * pow(value.denominator, -1, self.p))
        raise MixedFieldError(f"cannot coerce {value!r} into {self}")

    def __eq__(self, other) -> bool:
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self) -> int:
        return hash(("GF", self.p))

    def __repr__(self) -> str:
        return f"GF({self.p})"

    def elements(self) -> Iterator[FpElement]:
        for v in range(self.p):
            yield FpElement(self, v)

    def is_square(self, x) -> bool:
        v = self(x).value
        return v == 0 or self.p == 2 or pow(v, (self.p - 1) // 2, self.p) == 1

    def sqrt(self, x) -> FpElement | None:
        """A square root by Tonelli-Shanks, or None for a non-residue."""
        v, p = self(x).value, self.p
        if not self.is_square(v):
            return None
        if v == 0 or p == 2:
            return FpElement(self, v)
        q, s = p - 1, 0
        while q % 2 == 0:
            q, s = q // 2, s + 1
        z = 2
        while pow(z, (p - 1) // 2, p) != p - 1:
            z += 1
        m, c, t, root = s, pow(z, q, p), pow(v, q, p), pow(v, (q + 1) // 2, p)
        while t != 1:
            i, t2 = 0, t
            while t2 != 1:
                t2, i = t2 * t2 % p, i + 1
            b = pow(c, 1 << (m - i - 1), p)
            m, c, t, root = i, b * b % p, t * b * b % p, root * b % p
        return FpElement(self, root)

    def first_nonresidue(self) -> int:
        if self.p == 2:
            raise CastelnuovoError("F_2 has no quadratic non-residue")
        return next(n for n in range(2, self.p) if not self.is_square(n))


class FpElement(_Element):
    __slots__ = ("field", "value")

    def __init__(self, field: PrimeField, value: int):
        self.field = field
        self.value = value % field.p

    def _coerce(self, other):
        if isinstance(other, FpElement):
            if other.field != self.field:
                raise MixedFieldError(f"{self.field} and {other.field} elements combined")
            return other
        if isinstance(other, Rational):
            return self.field(other)
        if isinstance(other, _Element):
            raise MixedFieldError(f"{self.field} and {other.field} elements combined")
        return None

    def _add(self, other):
        return FpElement(self.field, self.value + other.value)

    def _mul(self, other):
        return FpElement(self.field, self.value * other.value)

    def _neg(self):
        return FpElement(self.field, -self.value)

    def _inv(self):
        if self.value == 0:
            raise ZeroDivisionError(f"division by zero in {self.field}")
        return FpElement(self.field, pow(self.value, -1, self.field.p))

    def __eq__(self, other) -> bool:
        if isinstance(other, FpElement):
            return self.field == other.field and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.field.p
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.field.p, self.value))

    def __repr__(self) -> str:
        return str(self.value)


class QuadraticExtension:
    """F_{p^2} = F_p[theta] / (theta^2 - n) for a quadratic non-residue n mod an odd prime p."""

    def __init__(self, p: int | PrimeField, nonresidue: int | None = None):
        self.base = p if isinstance(p, PrimeField) else PrimeField(p)
        if self.base.p == 2:
            raise CastelnuovoError("quadratic extensions are only built for odd p")
        if nonresidue is None:
            nonresidue = self.base.first_nonresidue()
        # x^2 - n is irreducible over F_p exactly when n is a non-residue
        if self.base.is_square(nonresidue):
            raise CastelnuovoError(f"x^2 - {nonresidue} is reducible over {self.base}")
        self.nonresidue = self.base(nonresidue)
        self.p = self.base.p
        self.characteristic = self.p
        self.order = self.p * self.p
        self.zero = Fp2Element(self, self.base.zero, self.base.zero)
        self.one = Fp2Element(self, self.base.one, self.base.zero)
        self.theta = Fp2Element(self, self.base.zero, self.base.one)

    def __call__(self, value, imag=0) -> Fp2Element:
        if isinstance(value, Fp2Element):
            if value.field != self:
                raise MixedFieldError(f"element of {value.field} used in {self}")
            return value
        if isinstance(value, FpElement) and value.field != self.base:
            raise MixedFieldError(f"element of {value.field} used in {self}")
        return Fp2Element(self, self.base(value), self.base(imag))

    def __eq__(self, other) -> bool:
        return (isinstance(other, QuadraticExtension) and other.p == self.p
                and other.nonresidue.value == self.nonresidue.value)

    def __hash__(self) -> int:
        return hash(("GF2", self.p, self.nonresidue.value))

    def __repr__(self) -> str:
        return f"GF({self.p}^2)"

    def elements(self) -> Iterator[Fp2Element]:
        for b in self.base.elements():
            for a in self.base.elements():
                yield Fp2Element(self, a, b)

    def is_square(self, x) -> bool:
        x = self(x)
        return x == self.zero or x ** ((self.order - 1) // 2) == self.one

    def sqrt(self, x) -> Fp2Element | None:
        """Square root by search; desk-scale fields only."""
        x = self(x)
        if not self.is_square(x):
            return None
        return next(y for y in self.elements() if y * y == x)


class Fp2Element(_Element):
    __slots__ = ("field", "a", "b")

    def __init__(self, field: QuadraticExtension, a: FpElement, b: FpElement):
        self.field = field
        self.a = a
        self.b = b

    def _coerce(self, other):
        if isinstance(other, Fp2Element):
            if other.field != self.field:
                raise MixedFieldError(f"{self.field} and {other.field} elements combined")
            return other
        if isinstance(other, (Rational, FpElement)):
            return self.field(other)
        if isinstance(other, _Element):
            raise MixedFieldError(f"{self.field} and {other.field} elements combined")
        return None

    def _add(self, other):
        return Fp2Element(self.field, self.a + other.a, self.b + other.b)

    def _mul(self, other):
        n = self.field.nonresidue
        return Fp2Element(self.field, self.a * other.a + n * self.b * other.b,
                          self.a * other.b + self.b * other.a)

    def _neg(self):
        return Fp2Element(self.field, -self.a, -self.b)

    def _inv(self):
        norm = self.a * self.a - self.field.nonresidue * self.b * self.b
        if norm == 0:
            raise ZeroDivisionError(f"division by zero in {self.field}")
        inv = norm._inv()
        return Fp2Element(self.field, self.a * inv, -self.b * inv)

    def __eq__(self, other) -> bool:
        if isinstance(other, Fp2Element):
            return self.field == other.field and self.a == other.a and self.b == other.b
        if isinstance(other, int):
            return self.b.value == 0 and self.a == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.field.p, self.a.value, self.b.value))

    def __repr__(self) -> str:
        return f"{self.a.value}+{self.b.value}t"


class QuadraticNumberField:
    """Q(sqrt D) for a rational D that is not a square; used to certify irrational solutions."""

    characteristic = 0
    order = None

    def __init__(self, radicand):
        radicand = Fraction(radicand)
        if rational_sqrt(radicand) is not None:
            raise CastelnuovoError(f"{radicand} is a rational square; Q(sqrt {radicand}) = Q")
        self.radicand = radicand
        self.zero = QuadraticNumber(self, Fraction(0), Fraction(0))
        self.one = QuadraticNumber(self, Fraction(1), Fraction(0))
        self.root = QuadraticNumber(self, Fraction(0), Fraction(1))

    def __call__(self, value, irrational=0) -> QuadraticNumber:
        if isinstance(value, QuadraticNumber):
            if value.field != self:
                raise MixedFieldError(f"element of {value.field} used in {self}")
            return value
        return QuadraticNumber(self, Fraction(value), Fraction(irrational))

    def __eq__(self, other) -> bool:
        return isinstance(other, QuadraticNumberField) and other.radicand == self.radicand

    def __hash__(self) -> int:
        return hash(("QQ", self.radicand))

    def __repr__(self) -> str:
        return f"QQ(sqrt({self.radicand}))"


class QuadraticNumber(_Element):
    """a + b * sqrt(D) with rational a, b."""

    __slots__ = ("field", "a", "b")

    def __init__(self, field: QuadraticNumberField, a: Fraction, b: Fraction):
        self.field = field
        self.a = a
        self.b = b

    def _coerce(self, other):
        if isinstance(other, QuadraticNumber):
            if other.field != self.field:
                raise MixedFieldError(f"{self.field} and {other.field} elements combined")
            return other
        if isinstance(other, Rational):
            return self.field(other)
        if isinstance(other, _Element):
            raise MixedFieldError(f"{self.field} and {other.field} elements combined")
        return None

    def _add(self, other):
        return QuadraticNumber(self.field, self.a + other.a, self.b + other.b)

    def _mul(self, other):
        D = self.field.radicand
        return QuadraticNumber(self.field, self.a * other.a + D * self.b * other.b,
                               self.a * other.b + self.b * other.a)

    def _neg(self):
        return QuadraticNumber(self.field, -self.a, -self.b)

    def _inv(self):
        norm = self.a * self.a - self.field.radicand * self.b * self.b
        if norm == 0:
            raise ZeroDivisionError(f"division by zero in {self.field}")
        return QuadraticNumber(self.field, self.a / norm, -self.b / norm)

    def conjugate(self) -> QuadraticNumber:
        return QuadraticNumber(self.field, self.a, -self.b)

    def __eq__(self, other) -> bool:
        if isinstance(other, QuadraticNumber):
            return self.field == other.field and self.a == other.a and self.b == other.b
        if isinstance(other, Rational):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.a, self.b))

    def __repr__(self) -> str:
        return f"{self.a}+{self.b}*sqrt({self.field.radicand})"


def field_of(x):
    """The field an element belongs to; ints and Fractions belong to QQ."""
    if isinstance(x, _Element):
        return x.field
    if isinstance(x, Rational):
        return QQ
    raise MixedFieldError(f"{x!r} is not an element of a supported field")


def common_field(values, default=QQ):
    """The single field shared by ``values``.

    Plain rationals fit in every field, so they never decide the answer; two
    distinct non-rational fields raise :class:`MixedFieldError`.
    """
    field = None
    for v in values:
        f = field_of(v)
        if f is QQ:
            continue
        if field is None:
            field = f
        elif f != field:
            raise MixedFieldError(f"entries from {field} and {f} in one computation")
    return default if field is None else field


def parse_field(token: str):
    """Parse ``QQ``, ``GF(p)`` / ``p`` or ``GF(p^2)`` / ``p^2``."""
    t = token.strip().replace(" ", "")
    if t.upper() in ("QQ", "Q"):
        return QQ
    if t.upper().startswith("GF(") and t.endswith(")"):
        t = t[3:-1]
    if t.endswith("^2") and t[:-2].isdigit():
        return QuadraticExtension(int(t[:-2]))
    if not t.isdigit():
        raise CastelnuovoError(f"unrecognised field {token!r}")
    return PrimeField(int(t))
