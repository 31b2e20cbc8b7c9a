"""Specht modules in tabloid and standard-polytabloid coordinates.

Two independent ways of writing a polytabloid ``e(t)`` in the standard basis
live here:

* :func:`straighten` runs Garnir relations recursively (the fast path);
* :func:`straighten_by_solving` expands ``e(t)`` into tabloids and solves a
  linear system against the standard polytabloids (the oracle).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cache
from itertools import combinations, permutations, product
from typing import Iterator, Mapping, Sequence

from .combinatorics import (
    Partition,
    ShapeError,
    Tableau,
    columns,
    dim_specht,
    enumerate_syt,
    from_columns,
    is_standard,
    shape_of,
    syt_index,
)
from .linalg import EchelonSolver
from .polyring import Polynomial, check_permutation

Tabloid = tuple[tuple[int, ...], ...]


def permutation_sign(seq: Sequence[int]) -> int:
    """Sign of the permutation sorting ``seq`` (entries distinct)."""
    seq = list(seq)
    sign = 1
    seen = [False] * len(seq)
    order = sorted(range(len(seq)), key=seq.__getitem__)
    for start in range(len(seq)):
        if seen[start]:
            continue
        length = 0
        k = start
        while not seen[k]:
            seen[k] = True
            k = order[k]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def tabloid(t: Tableau) -> Tabloid:
    return tuple(tuple(sorted(row)) for row in t)


def relabel(t: Tableau, sigma: Sequence[int]) -> Tableau:
    """Replace every entry ``x`` of ``t`` by ``sigma(x)``; ``sigma`` in one-line form."""
    return tuple(tuple(sigma[x - 1] for x in row) for row in t)


@dataclass(frozen=True)
class SpechtVector:
    """Element of ``V_shape`` in the standard polytabloid basis.

    ``coords`` maps a position in :func:`enumerate_syt` order to a nonzero
    rational coefficient.
    """

    shape: Partition
    coords: Mapping[int, Fraction | int] = field(default_factory=dict)

    def __post_init__(self):
        clean = {int(k): c for k, c in self.coords.items() if c}
        dim = dim_specht(self.shape)
        if any(not 0 <= k < dim for k in clean):
            raise IndexError(f"basis index out of range for shape {self.shape}")
        object.__setattr__(self, "coords", clean)

    @classmethod
    def unit(cls, shape: Partition, k: int) -> "SpechtVector":
        return cls(shape, {k: 1})

    @classmethod
    def from_tableaux(cls, shape: Partition, combo: Mapping[Tableau, Fraction | int]) -> "SpechtVector":
        idx = syt_index(shape)
        return cls(shape, {idx[t]: c for t, c in combo.items()})

    def by_tableau(self) -> dict[Tableau, Fraction | int]:
        basis = enumerate_syt(self.shape)
        return {basis[k]: c for k, c in self.coords.items()}

    def dense(self) -> list:
        out = [0] * dim_specht(self.shape)
        for k, c in self.coords.items():
            out[k] = c
        return out

    def __add__(self, other: "SpechtVector") -> "SpechtVector":
        if other.shape != self.shape:
            raise ShapeError("shape mismatch")
        out = dict(self.coords)
        for k, c in other.coords.items():
            out[k] = out.get(k, 0) + c
        return SpechtVector(self.shape, out)

    def __neg__(self) -> "SpechtVector":
        return SpechtVector(self.shape, {k: -c for k, c in self.coords.items()})

    def __sub__(self, other: "SpechtVector") -> "SpechtVector":
        return self + (-other)

    def __mul__(self, c) -> "SpechtVector":
        return SpechtVector(self.shape, {k: v * c for k, v in self.coords.items()})

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not self.coords


# --- column stabiliser and polytabloids -------------------------------------


def column_stabilizer(t: Tableau) -> Iterator[tuple[tuple[int, ...], int]]:
    """Yield ``(sigma, sgn(sigma))`` for every sigma in the column stabiliser of ``t``.

    ``sigma`` is the one-line form of a permutation of ``1..n`` that fixes
    everything outside each column set.
    """
    n = sum(len(row) for row in t)
    cols = columns(t)
    per_column = []
    for col in cols:
        options = []
        for image in permutations(col):
            options.append((dict(zip(col, image)), permutation_sign(image) * permutation_sign(col)))
        per_column.append(options)
    for choice in product(*per_column):
        sigma = list(range(1, n + 1))
        sign = 1
        for mapping, s in choice:
            sign *= s
            for a, b in mapping.items():
                sigma[a - 1] = b
        yield tuple(sigma), sign


def polytabloid(t: Tableau) -> dict[Tabloid, int]:
    """``e(t)`` as a signed sum of tabloids."""
    cols = columns(t)
    per_column = [[(img, permutation_sign(img)) for img in permutations(col)] for col in cols]
    base_sign = 1
    for col in cols:
        base_sign *= permutation_sign(col)
    height = len(t)
    out: dict[Tabloid, int] = {}
    for choice in product(*per_column):
        sign = base_sign
        rows: list[list[int]] = [[] for _ in range(height)]
        for img, s in choice:
            sign *= s
            for r, x in enumerate(img):
                rows[r].append(x)
        key = tuple(tuple(sorted(row)) for row in rows)
        c = out.get(key, 0) + sign
        if c:
            out[key] = c
        else:
            del out[key]
    return out


def tabloid_vector(combo: Mapping[Tableau, Fraction | int]) -> dict[Tabloid, Fraction | int]:
    """Expand a combination of polytabloids into tabloid coordinates."""
    out: dict = {}
    for t, c in combo.items():
        for tb, s in polytabloid(t).items():
            v = out.get(tb, 0) + c * s
            if v:
                out[tb] = v
            else:
                del out[tb]
    return out


# --- Garnir straightening ---------------------------------------------------

_STRAIGHTEN_CACHE: dict[Tableau, dict[Tableau, int]] = {}
_CACHE_ENABLED = True


def set_straighten_cache(enabled: bool) -> None:
    """Turn memoisation of the Garnir recursion on or off (and clear it)."""
    global _CACHE_ENABLED
    _CACHE_ENABLED = enabled
    _STRAIGHTEN_CACHE.clear()


def sort_columns(t: Tableau) -> tuple[Tableau, int]:
    """Column-sorted copy of ``t`` and the sign of the sorting permutation."""
    cols = columns(t)
    sign = 1
    for col in cols:
        sign *= permutation_sign(col)
    return from_columns([sorted(col) for col in cols]), sign


def _row_violation(t: Tableau) -> tuple[int, int] | None:
    """Leftmost column pair, topmost row, with ``t[r][c] > t[r][c+1]``."""
    width = len(t[0])
    for c in range(width - 1):
        for r in range(len(t)):
            row = t[r]
            if len(row) <= c + 1:
                break
            if row[c] > row[c + 1]:
                return r, c
    return None


def _garnir_terms(t: Tableau, r: int, c: int) -> Iterator[tuple[Tableau, int]]:
    """Non-identity terms ``(pi t, sgn pi)`` of the Garnir element for the
    violation at row ``r`` between columns ``c`` and ``c+1``.

    A is column ``c`` from row ``r`` down, B is column ``c+1`` from the top to
    row ``r``; pi runs over the coset representatives that refill the A and B
    boxes with increasing entries.
    """
    cols = [list(col) for col in columns(t)]
    a_part = cols[c][r:]
    b_part = cols[c + 1][: r + 1]
    pool = a_part + b_part
    size_a = len(a_part)
    a_set = set(a_part)
    for pick in combinations(range(len(pool)), size_a):
        chosen = [pool[k] for k in pick]
        if set(chosen) == a_set:
            continue
        rest = [pool[k] for k in range(len(pool)) if k not in pick]
        new_seq = sorted(chosen) + sorted(rest)
        position = {x: k for k, x in enumerate(pool)}
        sign = permutation_sign([position[x] for x in new_seq])
        new_cols = [list(col) for col in cols]
        new_cols[c][r:] = new_seq[:size_a]
        new_cols[c + 1][: r + 1] = new_seq[size_a:]
        yield from_columns(new_cols), sign


def _straighten_sorted(t: Tableau) -> dict[Tableau, int]:
    """Standard-basis coordinates of ``e(t)`` for a column-increasing ``t``."""
    if _CACHE_ENABLED:
        hit = _STRAIGHTEN_CACHE.get(t)
        if hit is not None:
            return hit
    spot = _row_violation(t)
    if spot is None:
        result = {t: 1}
    else:
        result = {}
        for u, sign in _garnir_terms(t, *spot):
            u_sorted, s2 = sort_columns(u)
            # e(t) = - sum over non-identity pi of sgn(pi) e(pi t)
            factor = -sign * s2
            for std, coeff in _straighten_sorted(u_sorted).items():
                v = result.get(std, 0) + factor * coeff
                if v:
                    result[std] = v
                else:
                    del result[std]
    if _CACHE_ENABLED:
        _STRAIGHTEN_CACHE[t] = result
    return result


def straighten_tableau(t: Tableau) -> dict[Tableau, int]:
    """``e(t)`` as ``{standard tableau: integer coefficient}`` via Garnir relations."""
    t_sorted, sign = sort_columns(t)
    base = _straighten_sorted(t_sorted)
    if sign == 1:
        return dict(base)
    return {u: -c for u, c in base.items()}


def straighten(t: Tableau) -> SpechtVector:
    return SpechtVector.from_tableaux(shape_of(t), straighten_tableau(t))


# --- the linear-solve oracle -----------------------------------------------


@cache
def _standard_solver(shape: Partition) -> EchelonSolver:
    return EchelonSolver([polytabloid(t) for t in enumerate_syt(shape)])


def straighten_by_solving(t: Tableau) -> SpechtVector:
    """Coordinates of ``e(t)`` from an exact solve in tabloid coordinates."""
    shape = shape_of(t)
    coords = _standard_solver(shape).solve(polytabloid(t))
    return SpechtVector(shape, coords)


def tabloid_coefficient(t: Tableau, s: Tableau) -> int:
    """Coefficient of the tabloid ``{s}`` in ``e(t)``, straight from the
    column group: 0 unless some column permutation of ``t`` is row-equivalent
    to ``s``, and then the sign of that (unique) permutation."""
    row_of = {x: r for r, row in enumerate(s) for x in row}
    sign = 1
    for col in columns(t):
        rows = [row_of[x] for x in col]
        if sorted(rows) != list(range(len(col))):
            return 0
        sign *= permutation_sign(rows)
    return sign


@cache
def _standard_tabloid_solver(shape: Partition) -> EchelonSolver:
    basis = enumerate_syt(shape)
    return EchelonSolver(
        [{k: c for k, s in enumerate(basis) if (c := tabloid_coefficient(t, s))} for t in basis]
    )


def straighten_by_standard_tabloids(t: Tableau) -> SpechtVector:
    """Coordinates of ``e(t)`` from its coefficients at the standard tabloids.

    Standard polytabloids restricted to standard tabloids form an invertible
    (unitriangular up to order) matrix, so these ``dim V`` coordinates
    determine the answer.  Much cheaper than :func:`straighten_by_solving`
    for shapes with long columns.
    """
    shape = shape_of(t)
    basis = enumerate_syt(shape)
    target = {k: c for k, s in enumerate(basis) if (c := tabloid_coefficient(t, s))}
    return SpechtVector(shape, _standard_tabloid_solver(shape).solve(target))


# --- Specht polynomials -----------------------------------------------------


@cache
def _vandermonde(n: int, col: tuple[int, ...]) -> Polynomial:
    result = Polynomial.constant(n, 1)
    for upper in range(len(col)):
        for lower in range(upper + 1, len(col)):
            result = result * (Polynomial.var(n, col[upper]) - Polynomial.var(n, col[lower]))
    return result


@cache
def _column_product(n: int, cols: tuple[tuple[int, ...], ...]) -> Polynomial:
    result = Polynomial.constant(n, 1)
    for col in cols:
        result = result * _vandermonde(n, col)
    return result


def specht_polynomial(t: Tableau) -> Polynomial:
    """Product of ``x_i - x_j`` over column pairs with ``i`` above ``j``.

    Columns are sorted before expanding (each swap flips the sign) so that
    tableaux sharing column sets share the cached expansion.
    """
    n = sum(len(row) for row in t)
    sign, cols = 1, []
    for col in columns(t):
        sign *= permutation_sign(col)
        cols.append(tuple(sorted(col)))
    product = _column_product(n, tuple(sorted(cols)))
    return product if sign == 1 else -product


def specht_vector_to_polynomial(v: SpechtVector) -> Polynomial:
    n = sum(v.shape)
    total = Polynomial.zero(n)
    for t, c in v.by_tableau().items():
        total = total + specht_polynomial(t) * c
    return total


# --- symmetric group action -------------------------------------------------


def act(sigma: Sequence[int], v: SpechtVector) -> SpechtVector:
    """``sigma . v``: relabel every basis tableau by ``sigma`` and straighten."""
    n = sum(v.shape)
    sigma = check_permutation(sigma, n)
    out: dict[Tableau, Fraction | int] = {}
    for t, c in v.by_tableau().items():
        for u, s in straighten_tableau(relabel(t, sigma)).items():
            val = out.get(u, 0) + c * s
            if val:
                out[u] = val
            else:
                del out[u]
    return SpechtVector.from_tableaux(v.shape, out)


# --- three-term Garnir relations -------------------------------------------


def garnir_relation_check(
    triple: Sequence[Tableau], signs: Sequence[int] = (1, -1, -1)
) -> bool:
    """Check ``sum(signs[k] * e(triple[k])) == 0`` through :func:`straighten`.

    The three tableaux must share a shape, agree outside exactly three boxes,
    and hold the same three values in those boxes in pairwise different
    arrangements.
    """
    if len(triple) != 3 or len(signs) != 3:
        raise ValueError("need exactly three tableaux and three signs")
    shapes = {shape_of(t) for t in triple}
    if len(shapes) != 1:
        raise ValueError("tableaux in a Garnir triple must share a shape")
    if len(set(triple)) != 3:
        raise ValueError("tableaux in a Garnir triple must be pairwise distinct")
    cells = [(r, c) for r, row in enumerate(triple[0]) for c in range(len(row))]
    differing = [rc for rc in cells if len({t[rc[0]][rc[1]] for t in triple}) > 1]
    if len(differing) != 3:
        raise ValueError("a Garnir triple differs in exactly three boxes")
    values = [sorted(t[r][c] for r, c in differing) for t in triple]
    if values[0] != values[1] or values[1] != values[2]:
        raise ValueError("the three boxes must carry the same values")
    total = SpechtVector(shape_of(triple[0]))
    for t, s in zip(triple, signs):
        total = total + straighten(t) * s
    return total.is_zero()


__all__ = [
    "SpechtVector",
    "Tabloid",
    "act",
    "column_stabilizer",
    "garnir_relation_check",
    "is_standard",
    "permutation_sign",
    "polytabloid",
    "relabel",
    "set_straighten_cache",
    "sort_columns",
    "specht_polynomial",
    "specht_vector_to_polynomial",
    "straighten",
    "straighten_by_solving",
    "straighten_by_standard_tabloids",
    "tabloid_coefficient",
    "straighten_tableau",
    "tabloid",
    "tabloid_vector",
]
