"""Brute-force counting of subspaces over a finite field.

The count walks every a-dimensional subspace of F_q^N once, through its
reduced row-echelon form, and tests the incidence conditions by rank. It
uses none of the Plücker or Schubert machinery, and its arithmetic runs on
precomputed tables over integer codes rather than on :func:`.linalg.rref`.
"""
from __future__ import annotations

from itertools import combinations, product
from typing import Sequence

from ..errors import CastelnuovoError, SizeExceededError
from .fields import PrimeField, QuadraticExtension
from .linalg import LinearSubspace

DEFAULT_ENUMERATION_CAP = 10**7


def gaussian_binomial(n: int, k: int, q: int) -> int:
    """Number of k-dimensional subspaces of F_q^n, by the product formula."""
    if not 0 <= k <= n:
        return 0
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


class _Tables:
    """Addition, multiplication and inversion tables of a finite field on codes 0..q-1."""

    def __init__(self, field):
        self.field = field
        self.elements = list(field.elements())
        self.q = len(self.elements)
        code = {self._key(e): i for i, e in enumerate(self.elements)}
        self.code = code
        self.zero = code[self._key(field.zero)]
        self.one = code[self._key(field.one)]
        els = self.elements
        self.mul = [[code[self._key(a * b)] for b in els] for a in els]
        self.sub = [[code[self._key(a - b)] for b in els] for a in els]
        self.inv = [None if i == self.zero else code[self._key(self.field.one / a)] for i, a in enumerate(els)]

    @staticmethod
    def _key(e):
        return (e.value,) if hasattr(e, "value") else (e.a.value, e.b.value)

    def encode(self, e) -> int:
        return self.code[self._key(self.field(e))]

    def rank(self, rows: list[list[int]]) -> int:
        rows = [r[:] for r in rows]
        zero, mul, sub, inv = self.zero, self.mul, self.sub, self.inv
        n_cols = len(rows[0]) if rows else 0
        r = 0
        for col in range(n_cols):
            pivot = next((i for i in range(r, len(rows)) if rows[i][col] != zero), None)
            if pivot is None:
                continue
            rows[r], rows[pivot] = rows[pivot], rows[r]
            p_inv = inv[rows[r][col]]
            prow = [mul[p_inv][v] for v in rows[r]]
            rows[r] = prow
            for i in range(r + 1, len(rows)):
                f = rows[i][col]
                if f != zero:
                    mf = mul[f]
                    rows[i] = [sub[a][mf[b]] for a, b in zip(rows[i], prow)]
            r += 1
            if r == len(rows):
                break
        return r


def echelon_subspaces(tables: _Tables, a: int, N: int):
    """Yield every a x N reduced row-echelon matrix of rank a, as lists of codes."""
    zero, one = tables.zero, tables.one
    codes = range(tables.q)
    for pivots in combinations(range(N), a):
        free = [(i, j) for i, p in enumerate(pivots) for j in range(p + 1, N) if j not in pivots]
        for values in product(codes, repeat=len(free)):
            rows = [[zero] * N for _ in range(a)]
            for i, p in enumerate(pivots):
                rows[i][p] = one
            for (i, j), v in zip(free, values):
                rows[i][j] = v
            yield rows


def finite_field_count(a: int, N: int, conditions: Sequence[LinearSubspace], field=None,
                       cap: int = DEFAULT_ENUMERATION_CAP) -> int:
    """Count a-dimensional subspaces of F_q^N meeting every subspace in ``conditions``.

    ``field`` defaults to the field of the conditions; rational conditions
    are reduced into it.

    Raises:
        SizeExceededError: when the number of a-subspaces exceeds ``cap``.
    """
    if not 1 <= a <= N:
        raise CastelnuovoError(f"need 1 <= a <= N, got a={a}, N={N}")
    if field is None:
        if not conditions:
            raise CastelnuovoError("field is required when there are no conditions")
        field = conditions[0].field
    if not isinstance(field, (PrimeField, QuadraticExtension)):
        raise CastelnuovoError(f"finite_field_count needs a finite field, got {field!r}")
    total = gaussian_binomial(N, a, field.order)
    if total > cap:
        raise SizeExceededError(f"{total} subspaces of dimension {a} in {field!r}^{N} exceed the cap {cap}")
    tables = _Tables(field)
    reduced = []
    for c in conditions:
        if c.ambient_dim != N:
            raise CastelnuovoError(f"condition lives in {c.ambient_dim}-space, expected {N}")
        basis = [[tables.encode(v) for v in row] for row in c.basis]
        if tables.rank(basis) != len(basis):
            raise CastelnuovoError("condition basis is dependent over the finite field")
        reduced.append(basis)
    count = 0
    for rows in echelon_subspaces(tables, a, N):
        if all(tables.rank(rows + basis) < a + len(basis) for basis in reduced):
            count += 1
    return count
