"""Integer partitions, hook lengths and standard Young tableau counts.

Counts are plain Python ints, so they never overflow.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import factorial, prod
from typing import Iterable, Iterator

from .errors import CastelnuovoError, SizeExceededError

DEFAULT_TABLEAU_CAP = 16


@dataclass(frozen=True, order=True)
class Partition:
    """A weakly decreasing tuple of positive integers; ``Partition(())`` is the empty partition."""

    parts: tuple[int, ...] = ()

    def __init__(self, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        if any(p < 1 for p in parts):
            raise CastelnuovoError(f"partition parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise CastelnuovoError(f"partition parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def from_weakly_decreasing(cls, values: Iterable[int]) -> Partition:
        """Build a partition from a sequence that may end in zeros."""
        return cls(v for v in values if v)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __getitem__(self, i: int) -> int:
        return self.parts[i]

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"

    @property
    def size(self) -> int:
        return sum(self.parts)

    def conjugate(self) -> Partition:
        if not self.parts:
            return self
        return Partition(sum(1 for p in self.parts if p > j) for j in range(self.parts[0]))

    def hooks(self) -> Iterator[int]:
        """Yield the hook length of every cell, row by row."""
        columns = self.conjugate().parts
        for i, row in enumerate(self.parts):
            for j in range(row):
                yield (row - j - 1) + (columns[j] - i - 1) + 1

    def fits_in_box(self, rows: int, cols: int) -> bool:
        return len(self.parts) <= rows and (not self.parts or self.parts[0] <= cols)


def rectangle(h: int, k: int) -> Partition:
    """The h x k rectangle: h parts, each equal to k."""
    if h < 1 or k < 1:
        raise CastelnuovoError(f"rectangle needs h >= 1 and k >= 1, got ({h}, {k})")
    return Partition((k,) * h)


def hook_length_count(shape: Partition) -> int:
    """Number of standard Young tableaux of ``shape`` by the hook length formula."""
    numerator = factorial(shape.size)
    denominator = prod(shape.hooks())
    count, rest = divmod(numerator, denominator)
    assert rest == 0, f"hook product does not divide n! for {shape}"
    return count


def enumerate_standard_tableaux(shape: Partition, cap: int = DEFAULT_TABLEAU_CAP) -> int:
    """Count standard Young tableaux of ``shape`` by exhaustive backtracking.

    Entries 1, 2, ..., n are placed one at a time; entry m may go at the end
    of row i when the cell above it is already filled. Every complete filling
    is visited once, so the running time grows with the answer.

    Raises:
        SizeExceededError: if ``shape`` has more than ``cap`` cells.
    """
    n = shape.size
    if n > cap:
        raise SizeExceededError(f"shape {shape} has {n} cells, exhaustive cap is {cap}")
    target = list(shape.parts)
    filled = [0] * len(target)

    def extend(placed: int) -> int:
        if placed == n:
            return 1
        total = 0
        for i, length in enumerate(filled):
            if length < target[i] and (i == 0 or filled[i - 1] > length):
                filled[i] += 1
                total += extend(placed + 1)
                filled[i] -= 1
        return total

    return extend(0)


def superfactorial(n: int) -> int:
    """1! * 2! * ... * n!, with the empty product for n <= 0."""
    return prod(factorial(i) for i in range(1, n + 1))


def castelnuovo_factorial(h: int, k: int) -> int:
    """Evaluate 1!...(h-1)! * 1!...(k-1)! * (hk)! / (1!...(h+k-1)!) exactly.

    This is the number of (k(h-1)-1)-planes meeting hk general lines in
    projective space of dimension (k+1)(h-1); it equals the number of
    standard tableaux of the h x k rectangle.
    """
    if h < 1 or k < 1:
        raise CastelnuovoError(f"castelnuovo_factorial needs h, k >= 1, got ({h}, {k})")
    numerator = superfactorial(h - 1) * superfactorial(k - 1) * factorial(h * k)
    denominator = superfactorial(h + k - 1)
    count, rest = divmod(numerator, denominator)
    assert rest == 0, f"factorial expression is not an integer for h={h}, k={k}"
    return count
