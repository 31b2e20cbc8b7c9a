"""Partitions, Young tableaux, hook lengths and standard tableau enumeration.

Partitions are plain tuples of positive integers in weakly decreasing order.
Tableaux are tuples of rows, each row a tuple of the integers it contains.
"""

from __future__ import annotations

from functools import cache
from math import factorial, prod
from typing import Iterable, Optional, Sequence

Partition = tuple[int, ...]
Tableau = tuple[tuple[int, ...], ...]


class ShapeError(ValueError):
    """Raised for malformed partitions or tableaux."""


def make_partition(parts: Iterable[int]) -> Optional[Partition]:
    """Normalise a sequence of row lengths into a partition.

    Zero parts are dropped, so ``(4, 3, 0)`` (written ``(4,3,1^0)`` in the
    exponential notation) becomes ``(4, 3)``.  Sequences that are not weakly
    decreasing after that do not describe a Young diagram; for those the
    zero marker ``None`` is returned and every dimension attached to it is 0.
    """
    parts = tuple(int(p) for p in parts)
    if any(p < 0 for p in parts):
        raise ShapeError(f"negative part in {parts}")
    nonzero = tuple(p for p in parts if p > 0)
    # a zero in the middle followed by a positive part is not a diagram
    if len(nonzero) != len(parts) and any(parts[k] == 0 and parts[k + 1] > 0 for k in range(len(parts) - 1)):
        return None
    if any(nonzero[k] < nonzero[k + 1] for k in range(len(nonzero) - 1)):
        return None
    return nonzero


def hook_shape(first: int, second: int, ones: int) -> Optional[Partition]:
    """The shape ``(first, second, 1^ones)`` or ``None`` if it is not a partition."""
    if ones < 0:
        return None
    return make_partition((first, second) + (1,) * ones)


def check_partition(p: Sequence[int]) -> Partition:
    p = tuple(p)
    if not p or any(x < 1 for x in p) or any(p[k] < p[k + 1] for k in range(len(p) - 1)):
        raise ShapeError(f"not a partition: {p}")
    return p


def conjugate(p: Sequence[int]) -> Partition:
    """Row lengths of the transposed Young diagram."""
    p = check_partition(p)
    return tuple(sum(1 for part in p if part > c) for c in range(p[0]))


def hook_lengths(p: Sequence[int]) -> tuple[tuple[int, ...], ...]:
    p = check_partition(p)
    cols = conjugate(p)
    return tuple(
        tuple((p[r] - c - 1) + (cols[c] - r - 1) + 1 for c in range(p[r]))
        for r in range(len(p))
    )


@cache
def dim_specht(p: Optional[Partition]) -> int:
    """Dimension of the Specht module by the hook formula; 0 for the zero marker."""
    if p is None:
        return 0
    p = check_partition(p)
    return factorial(sum(p)) // prod(h for row in hook_lengths(p) for h in row)


def partitions_of(n: int) -> list[Partition]:
    """All partitions of ``n`` in reverse lexicographic order."""
    out: list[Partition] = []

    def rec(remaining: int, largest: int, prefix: tuple[int, ...]) -> None:
        if remaining == 0:
            out.append(prefix)
            return
        for part in range(min(remaining, largest), 0, -1):
            rec(remaining - part, part, prefix + (part,))

    rec(n, n, ())
    return out


def shape_of(t: Tableau) -> Partition:
    return tuple(len(row) for row in t)


def make_tableau(rows: Iterable[Iterable[int]]) -> Tableau:
    """Validate and freeze a bijective filling given as a list of rows."""
    t = tuple(tuple(int(x) for x in row) for row in rows)
    shape = shape_of(t)
    check_partition(shape)
    entries = sorted(x for row in t for x in row)
    if entries != list(range(1, len(entries) + 1)):
        raise ShapeError(f"tableau entries must be 1..n exactly once: {t}")
    return t


def columns(t: Tableau) -> list[list[int]]:
    """Columns of ``t`` read top to bottom."""
    if not t:
        return []
    return [[row[c] for row in t if len(row) > c] for c in range(len(t[0]))]


def from_columns(cols: Sequence[Sequence[int]]) -> Tableau:
    height = len(cols[0]) if cols else 0
    return tuple(tuple(col[r] for col in cols if len(col) > r) for r in range(height))


def is_standard(t: Tableau) -> bool:
    rows_ok = all(row[c] < row[c + 1] for row in t for c in range(len(row) - 1))
    return rows_ok and all(col[r] < col[r + 1] for col in columns(t) for r in range(len(col) - 1))


def reading_word(t: Tableau) -> tuple[int, ...]:
    return tuple(x for row in t for x in row)


@cache
def enumerate_syt(p: Partition) -> tuple[Tableau, ...]:
    """All standard tableaux of shape ``p``, sorted by row reading word."""
    p = check_partition(p)
    n = sum(p)
    found: list[Tableau] = []
    rows: list[list[int]] = [[] for _ in p]

    def place(k: int) -> None:
        if k > n:
            found.append(tuple(tuple(r) for r in rows))
            return
        for r in range(len(p)):
            length = len(rows[r])
            if length < p[r] and (r == 0 or len(rows[r - 1]) > length):
                rows[r].append(k)
                place(k + 1)
                rows[r].pop()

    place(1)
    return tuple(sorted(found, key=reading_word))


@cache
def syt_index(p: Partition) -> dict[Tableau, int]:
    return {t: k for k, t in enumerate(enumerate_syt(p))}


def branching_dims(p: Sequence[int]) -> list[Partition]:
    """Shapes obtained by deleting one removable corner, in reverse lex order."""
    p = check_partition(p)
    if sum(p) < 2:
        raise ShapeError("branching needs n >= 2")
    out = []
    for r in range(len(p)):
        if r == len(p) - 1 or p[r] > p[r + 1]:
            q = list(p)
            q[r] -= 1
            out.append(make_partition(q))
    return sorted(out, reverse=True)


def resolution_shapes(n: int, d: int) -> list[Partition]:
    """Shapes of the free modules in the resolution of the (n-d, d) Specht ideal."""
    shapes = []
    for i in range(n - d):
        if i <= n - 2 * d:
            shapes.append(hook_shape(n - d - i, d, i))
        else:
            shapes.append(hook_shape(d - 1, n - d - i, i + 1))
    return shapes
