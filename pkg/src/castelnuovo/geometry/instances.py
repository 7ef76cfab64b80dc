"""Plain-text instance files and canonical JSON output.

An instance file looks like::

    # lines in P^3 meeting four coordinate lines
    2 4 QQ
    1 0 0 0  0 1 0 0
    0 0 1 0  0 0 0 1
    1 0 0 0  0 0 1 0
    0 1 0 0  0 0 0 1

The header is ``a N field`` where field is ``QQ``, ``GF(p)`` or ``GF(p^2)``.
Every following row lists 2N integers, the two basis vectors of one
condition line. Blank lines and ``#`` comments are ignored. Over a finite
field the integers are reduced modulo p.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from ..errors import CastelnuovoError
from .fields import QQ, parse_field
from .linalg import LinearSubspace


@dataclass(frozen=True)
class Instance:
    a: int
    N: int
    field: object
    conditions: tuple[LinearSubspace, ...]


def _field_token(field) -> str:
    return repr(field).replace(" ", "")


def parse_instance(text: str) -> Instance:
    rows = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append(line.split())
    if not rows:
        raise CastelnuovoError("instance file is empty")
    header, *body = rows
    if len(header) != 3:
        raise CastelnuovoError(f"header must be 'a N field', got {' '.join(header)!r}")
    try:
        a, N = int(header[0]), int(header[1])
    except ValueError as exc:
        raise CastelnuovoError(f"bad header {' '.join(header)!r}") from exc
    field = parse_field(header[2])
    conditions = []
    for n, row in enumerate(body, start=2):
        if len(row) != 2 * N:
            raise CastelnuovoError(f"condition row {n} has {len(row)} entries, expected {2 * N}")
        try:
            values = [int(v) for v in row]
        except ValueError as exc:
            raise CastelnuovoError(f"condition row {n} has a non-integer entry") from exc
        line = LinearSubspace.span([values[:N], values[N:]], N, field)
        if line.dim != 2:
            raise CastelnuovoError(f"condition row {n} does not span a line over {field!r}")
        conditions.append(line)
    return Instance(a, N, field, tuple(conditions))


def load_instance(path) -> Instance:
    return parse_instance(Path(path).read_text(encoding="utf-8"))


def format_instance(instance: Instance) -> str:
    out = [f"{instance.a} {instance.N} {_field_token(instance.field)}"]
    for c in instance.conditions:
        entries = []
        for row in c.basis:
            for v in row:
                if instance.field is QQ:
                    if v.denominator != 1:
                        raise CastelnuovoError("instance files hold integer entries; scale the basis first")
                    entries.append(str(v.numerator))
                else:
                    entries.append(str(v))
        out.append(" ".join(entries))
    return "\n".join(out) + "\n"


def canonical_json(payload) -> str:
    """Sorted keys, fixed separators, UTF-8 characters kept: identical input gives identical bytes."""
    return json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False) + "\n"
