"""The chain complex resolving the Specht ideal of shape (n-d, d).

Module ``F_i`` is ``V_shape ⊗ R(twist)`` with basis the standard tableaux of
``shape``.  Differentials are stored as sparse polynomial matrices whose
columns are indexed by the source basis and rows by the target basis, so
``∂_i ∘ ∂_{i+1}`` is the matrix product ``D_i · D_{i+1}``.

The three families of differentials are first produced as *formal* sums of
(tableau, sign, variables); every tableau in such a sum is then straightened
into the target standard basis.  Nothing assumes the formal tableaux are
standard, and in general they are not.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Mapping, Optional, Sequence

from .combinatorics import (
    Partition,
    ShapeError,
    Tableau,
    columns,
    dim_specht,
    enumerate_syt,
    hook_shape,
    shape_of,
    syt_index,
)
from .polyring import Monomial, Polynomial
from .spechtmod import SpechtVector, specht_polynomial, straighten_tableau

log = logging.getLogger(__name__)

# (tableau, sign, 1-based variable indices whose product is the coefficient)
FormalTerm = tuple[Tableau, int, tuple[int, ...]]


class ComplexError(ValueError):
    pass


def check_nd(n: int, d: int) -> None:
    if not (isinstance(n, int) and isinstance(d, int)) or d < 1 or n < 2 * d:
        raise ComplexError(f"need n >= 2d >= 2, got n={n}, d={d}")


@dataclass(frozen=True)
class FreeModuleSpec:
    index: int
    shape: Partition
    twist: int  # R(twist), always negative here

    @property
    def rank(self) -> int:
        return dim_specht(self.shape)

    @property
    def basis(self) -> tuple[Tableau, ...]:
        return enumerate_syt(self.shape)

    @property
    def degree(self) -> int:
        """Internal degree of the generators, i.e. ``-twist``."""
        return -self.twist


@dataclass
class DifferentialMatrix:
    index: int
    rows: int
    cols: int
    source_twist: int
    target_twist: int
    entries: dict[tuple[int, int], Polynomial] = field(default_factory=dict)

    @property
    def entry_degree(self) -> int:
        return self.target_twist - self.source_twist

    def column(self, col: int) -> dict[int, Polynomial]:
        return {r: p for (r, c), p in self.entries.items() if c == col}

    def __getitem__(self, rc: tuple[int, int]) -> Polynomial:
        return self.entries.get(rc, Polynomial.zero(self.n))

    @property
    def n(self) -> int:
        for p in self.entries.values():
            return p.n
        return 0


@dataclass
class ChainComplex:
    n: int
    d: int
    modules: list[FreeModuleSpec]
    differentials: list[DifferentialMatrix]  # differentials[k] is ∂_{k+1}
    generators: list[Polynomial]

    def differential(self, i: int) -> DifferentialMatrix:
        if not 1 <= i <= len(self.differentials):
            raise IndexError(f"no differential ∂_{i} (length {len(self.differentials)})")
        return self.differentials[i - 1]

    @property
    def length(self) -> int:
        return len(self.differentials)

    def max_twist_magnitude(self) -> int:
        return max(m.degree for m in self.modules)


# --- module layout ---------------------------------------------------------


def module_spec(n: int, d: int, i: int) -> FreeModuleSpec:
    check_nd(n, d)
    if not 0 <= i <= n - d - 1:
        raise ComplexError(f"F_{i} is zero for (n, d) = ({n}, {d})")
    if i <= n - 2 * d:
        return FreeModuleSpec(i, hook_shape(n - d - i, d, i), -(d + i))
    return FreeModuleSpec(i, hook_shape(d - 1, n - d - i, i + 1), -(d + i + 1))


def module_specs(n: int, d: int) -> list[FreeModuleSpec]:
    check_nd(n, d)
    return [module_spec(n, d, i) for i in range(n - d)]


# --- formal differentials --------------------------------------------------


def _rebuild(t: Tableau, first_column: Sequence[int], extra: Mapping[int, Sequence[int]]) -> Tableau:
    """New tableau: ``first_column`` down column 1, the old rows' remaining
    boxes kept in place, and ``extra[r]`` appended to row ``r``."""
    rows = []
    for r, a in enumerate(first_column):
        rest = t[r][1:] if r < len(t) else ()
        rows.append((a,) + tuple(rest) + tuple(extra.get(r, ())))
    return tuple(rows)


def _require_shape(t: Tableau, shape: Optional[Partition], what: str) -> None:
    if shape is None or shape_of(t) != shape:
        raise ShapeError(f"{what}: tableau of shape {shape_of(t)} does not have shape {shape}")


def differential_low(t: Tableau, i: int) -> list[FormalTerm]:
    """Formal image of ``e(t)`` under the d-linear strand differential ∂_i.

    ``t`` has shape ``(n-d-i, d, 1^i)``; term ``j`` moves the ``j``-th entry
    of the first column to the end of the first row.
    """
    n = sum(len(row) for row in t)
    d = len(t[1]) if len(t) > 1 else 0
    _require_shape(t, hook_shape(n - d - i, d, i), "differential_low")
    if not 1 <= i <= n - 2 * d:
        raise ShapeError(f"differential_low needs 1 <= i <= n-2d, got i={i}")
    a = columns(t)[0]
    terms = []
    for j in range(1, i + 3):
        col = a[: j - 1] + a[j:]
        terms.append((_rebuild(t, col, {0: (a[j - 1],)}), (-1) ** (j - 1), (a[j - 1],)))
    return terms


def differential_connect(t: Tableau) -> list[FormalTerm]:
    """Formal image of ``e(t)`` under the quadratic connecting map ∂_{n-2d+1}.

    ``t`` has shape ``((d-1)^2, 1^{n-2d+2})``; for ``j < k`` the ``j``-th and
    ``k``-th first-column entries move to the ends of rows 1 and 2.
    """
    n = sum(len(row) for row in t)
    width = len(t[0])
    d = width + 1
    _require_shape(t, hook_shape(d - 1, d - 1, n - 2 * d + 2), "differential_connect")
    a = columns(t)[0]
    terms = []
    for j, k in combinations(range(1, len(a) + 1), 2):
        col = [x for pos, x in enumerate(a, 1) if pos not in (j, k)]
        u = _rebuild(t, col, {0: (a[j - 1],), 1: (a[k - 1],)})
        terms.append((u, (-1) ** (j + k - 1), (a[j - 1], a[k - 1])))
    return terms


def h_transpositions(t_j: Tableau, insert_col: int) -> list[Optional[tuple[int, int]]]:
    """The set H for the (d+1)-linear strand: the identity (``None``) plus the
    transpositions swapping the first-row entry above the new box with each
    first-row entry to its right."""
    row0 = t_j[0]
    out: list[Optional[tuple[int, int]]] = [None]
    if insert_col < len(row0):
        pivot = row0[insert_col]
        out.extend((pivot, row0[c]) for c in range(insert_col + 1, len(row0)))
    return out


def _swap(t: Tableau, a: int, b: int) -> Tableau:
    return tuple(tuple(b if x == a else a if x == b else x for x in row) for row in t)


def differential_high(t: Tableau, i: int) -> list[FormalTerm]:
    """Formal image of ``e(t)`` under the (d+1)-linear strand differential ∂_i.

    ``t`` has shape ``(d-1, n-d-i, 1^{i+1})``; term ``j`` moves the ``j``-th
    first-column entry to the end of row 2, then sums over H.
    """
    n = sum(len(row) for row in t)
    d = len(t[0]) + 1
    _require_shape(t, hook_shape(d - 1, n - d - i, i + 1), "differential_high")
    if not n - 2 * d + 2 <= i <= n - d - 1:
        raise ShapeError(f"differential_high needs n-2d+2 <= i <= n-d-1, got i={i}")
    a = columns(t)[0]
    insert_col = n - d - i  # 0-based column of the new box in row 2
    terms = []
    for j in range(1, i + 4):
        col = a[: j - 1] + a[j:]
        t_j = _rebuild(t, col, {1: (a[j - 1],)})
        sign = (-1) ** (j - 1)
        for swap in h_transpositions(t_j, insert_col):
            u = t_j if swap is None else _swap(t_j, *swap)
            terms.append((u, sign, (a[j - 1],)))
    return terms


def formal_differential(n: int, d: int, i: int, t: Tableau) -> list[FormalTerm]:
    """Dispatch to the family that defines ∂_i for the (n-d, d) complex."""
    check_nd(n, d)
    if not 1 <= i <= n - d - 1:
        raise ComplexError(f"∂_{i} does not exist for (n, d) = ({n}, {d})")
    if i <= n - 2 * d:
        return differential_low(t, i)
    if i == n - 2 * d + 1:
        return differential_connect(t)
    return differential_high(t, i)


def augmentation(t: Tableau) -> Polynomial:
    """∂_0: ``e(t) ⊗ 1 ↦ f_t``."""
    shape = shape_of(t)
    if len(shape) > 2:
        raise ShapeError(f"augmentation expects a two-row shape, got {shape}")
    return specht_polynomial(t)


# --- straightening formal sums into matrix columns ----------------------------


def _monomial(n: int, variables: Sequence[int]) -> Monomial:
    e = [0] * n
    for v in variables:
        e[v - 1] += 1
    return tuple(e)


def straighten_formal(terms: Sequence[FormalTerm], n: int) -> dict[Tableau, dict[Monomial, int]]:
    """Collect a formal sum into ``{standard tableau: {monomial: coefficient}}``."""
    out: dict[Tableau, dict[Monomial, int]] = {}
    for u, sign, variables in terms:
        mono = _monomial(n, variables)
        for std, c in straighten_tableau(u).items():
            slot = out.setdefault(std, {})
            v = slot.get(mono, 0) + sign * c
            if v:
                slot[mono] = v
            else:
                del slot[mono]
                if not slot:
                    del out[std]
    return out


def _column_job(args) -> list[tuple[int, dict[Monomial, int]]]:
    n, d, i, t, target_shape = args
    idx = syt_index(target_shape)
    image = straighten_formal(formal_differential(n, d, i, t), n)
    return sorted((idx[u], poly) for u, poly in image.items())


def build_differential(n: int, d: int, i: int, jobs: int = 1) -> DifferentialMatrix:
    source = module_spec(n, d, i)
    target = module_spec(n, d, i - 1)
    tasks = [(n, d, i, t, target.shape) for t in source.basis]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_column_job, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))
    else:
        results = [_column_job(task) for task in tasks]
    entries = {}
    for col, column in enumerate(results):
        for row, terms in column:
            entries[(row, col)] = Polynomial(n, terms)
    return DifferentialMatrix(i, target.rank, source.rank, source.twist, target.twist, entries)


def build_complex(n: int, d: int, jobs: int = 1) -> ChainComplex:
    """Assemble every module, differential and generator of the complex."""
    check_nd(n, d)
    modules = module_specs(n, d)
    log.debug("building complex for (n, d) = (%d, %d): ranks %s", n, d, [m.rank for m in modules])
    differentials = [build_differential(n, d, i, jobs) for i in range(1, n - d)]
    generators = [augmentation(t) for t in modules[0].basis]
    return ChainComplex(n, d, modules, differentials, generators)


# --- applying differentials --------------------------------------------------


def apply_differential(
    c: ChainComplex, i: int, v: SpechtVector, coefficient: Optional[Polynomial] = None
) -> list[Polynomial]:
    """Image of ``v ⊗ coefficient`` in ``F_{i-1}`` as polynomials over the target basis."""
    mat = c.differential(i)
    if v.shape != c.modules[i].shape:
        raise ShapeError(f"vector of shape {v.shape} is not in F_{i}")
    out = [Polynomial.zero(c.n) for _ in range(mat.rows)]
    for (row, col), p in mat.entries.items():
        coeff = v.coords.get(col)
        if coeff:
            out[row] = out[row] + p * coeff
    if coefficient is not None:
        out = [p * coefficient for p in out]
    return out


def apply_formal(c: ChainComplex, i: int, t: Tableau) -> list[Polynomial]:
    """Straighten the formal image of an arbitrary tableau ``t`` into ``F_{i-1}``."""
    target = c.modules[i - 1]
    idx = syt_index(target.shape)
    out = [Polynomial.zero(c.n) for _ in range(target.rank)]
    for u, terms in straighten_formal(formal_differential(c.n, c.d, i, t), c.n).items():
        out[idx[u]] = Polynomial(c.n, terms)
    return out


# --- matrix arithmetic -------------------------------------------------------


def compose(first: DifferentialMatrix, second: DifferentialMatrix) -> dict[tuple[int, int], Polynomial]:
    """Nonzero entries of ``first · second`` (apply ``second`` then ``first``)."""
    by_row: dict[int, list[tuple[int, Polynomial]]] = {}
    for (r, c), p in second.entries.items():
        by_row.setdefault(r, []).append((c, p))
    out: dict[tuple[int, int], Polynomial] = {}
    for (r, mid), p in first.entries.items():
        for c, q in by_row.get(mid, ()):
            key = (r, c)
            prod = p * q
            out[key] = out[key] + prod if key in out else prod
    return {k: v for k, v in out.items() if v}


def compose_with_generators(c: ChainComplex) -> list[Polynomial]:
    """Entries of the row vector ``∂_0 ∘ ∂_1`` (one per basis element of F_1)."""
    if not c.differentials:
        return []
    mat = c.differential(1)
    out = [Polynomial.zero(c.n) for _ in range(mat.cols)]
    for (r, col), p in mat.entries.items():
        out[col] = out[col] + c.generators[r] * p
    return out
