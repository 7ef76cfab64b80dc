"""Exact row reduction and linear subspaces over any field from :mod:`.fields`."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from ..errors import CastelnuovoError, MixedFieldError
from .fields import QQ, common_field

Matrix = tuple[tuple, ...]


def _normalize(rows: Sequence[Sequence], field=None):
    rows = [list(r) for r in rows]
    if rows and any(len(r) != len(rows[0]) for r in rows):
        raise CastelnuovoError("rows of unequal length")
    found = common_field(v for r in rows for v in r)
    if field is None:
        field = found
    elif found is not QQ and found != field and found != getattr(field, "base", None):
        raise MixedFieldError(f"entries from {found} requested in {field}")
    return [[field(v) for v in r] for r in rows], field


def rref(M: Sequence[Sequence], field=None) -> tuple[Matrix, int]:
    """Reduced row-echelon form of ``M`` and its rank.

    Zero rows are kept at the bottom, so the result has the shape of ``M``.
    Integer entries are read in ``field`` (the rationals by default).
    """
    rows, field = _normalize(M, field)
    if not rows:
        return (), 0
    n_rows, n_cols = len(rows), len(rows[0])
    rank = 0
    for col in range(n_cols):
        pivot = next((i for i in range(rank, n_rows) if rows[i][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = field.one / rows[rank][col]
        rows[rank] = [v * inv for v in rows[rank]]
        for i in range(n_rows):
            if i != rank and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[rank])]
        rank += 1
        if rank == n_rows:
            break
    return tuple(tuple(r) for r in rows), rank


def rank(M: Sequence[Sequence], field=None) -> int:
    return rref(M, field)[1]


def kernel(M: Sequence[Sequence], n_cols: int | None = None, field=None) -> list[tuple]:
    """A basis of {x : M x = 0}, one vector per free column of the reduced form."""
    R, r = rref(M, field)
    if n_cols is None:
        if not R:
            raise CastelnuovoError("kernel of an empty matrix needs n_cols")
        n_cols = len(R[0])
    field = common_field((v for row in R for v in row), default=QQ if field is None else field)
    pivots = []
    for row in R[:r]:
        pivots.append(next(j for j, v in enumerate(row) if v != 0))
    basis = []
    for free in (j for j in range(n_cols) if j not in pivots):
        x = [field.zero] * n_cols
        x[free] = field.one
        for row, p in zip(R[:r], pivots):
            x[p] = -row[free]
        basis.append(tuple(x))
    return basis


@dataclass(frozen=True)
class LinearSubspace:
    """A subspace of field^ambient_dim stored by its reduced row-echelon basis.

    The stored basis is canonical, so two spans of the same subspace compare
    (and hash) equal.
    """

    ambient_dim: int
    basis: Matrix
    field: object = QQ

    @classmethod
    def span(cls, vectors: Sequence[Sequence], ambient_dim: int | None = None, field=None) -> LinearSubspace:
        vectors = [tuple(v) for v in vectors]
        if ambient_dim is None:
            if not vectors:
                raise CastelnuovoError("span of no vectors needs ambient_dim")
            ambient_dim = len(vectors[0])
        if any(len(v) != ambient_dim for v in vectors):
            raise CastelnuovoError(f"vectors must have length {ambient_dim}")
        if not vectors:
            return cls(ambient_dim, (), QQ if field is None else field)
        R, r = rref(vectors, field)
        field = common_field((v for row in R for v in row), default=QQ if field is None else field)
        return cls(ambient_dim, R[:r], field)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, vector: Sequence) -> bool:
        return rank([*self.basis, tuple(vector)], self.field) == self.dim

    def __contains__(self, vector) -> bool:
        return self.contains(vector)

    def annihilator(self) -> list[tuple]:
        """A basis of the linear forms (as coefficient vectors) vanishing on the subspace."""
        if not self.basis:
            return [tuple(self.field.one if i == j else self.field.zero for j in range(self.ambient_dim))
                    for i in range(self.ambient_dim)]
        return kernel(self.basis, self.ambient_dim, self.field)

    def __repr__(self) -> str:
        rows = "; ".join(" ".join(str(v) for v in row) for row in self.basis)
        return f"LinearSubspace(dim={self.dim} in {self.field}^{self.ambient_dim}: [{rows}])"


def meets(A: LinearSubspace, B: LinearSubspace) -> bool:
    """True when A and B share a nonzero vector."""
    if A.ambient_dim != B.ambient_dim:
        raise CastelnuovoError(f"ambient dimensions differ: {A.ambient_dim} vs {B.ambient_dim}")
    if A.field != B.field:
        raise MixedFieldError(f"subspaces over {A.field} and {B.field}")
    if not A.basis or not B.basis:
        return False
    return rank([*A.basis, *B.basis], A.field) < A.dim + B.dim
