"""Sparse exact linear algebra.

Vectors are dicts ``{index: coefficient}`` with no zero values.  A matrix is
handed around as the list of its column vectors.  Pivoting is deterministic:
a vector is always reduced at its smallest nonzero index.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Hashable, Iterable, Mapping, Sequence

# 2^61 - 1: large enough that an accidental rank drop is vanishingly rare,
# small enough that Python int arithmetic stays in the fast path.
DEFAULT_PRIME = (1 << 61) - 1


class InconsistentSystem(ArithmeticError):
    """The target vector is not in the span of the given vectors."""


def _integral(v: Mapping) -> dict:
    """Scale a rational vector to a primitive integer vector with the same span."""
    dens = [c.denominator for c in v.values() if isinstance(c, Fraction)]
    scale = lcm(*dens) if dens else 1
    out = {k: int(c * scale) for k, c in v.items() if c}
    g = 0
    for c in out.values():
        g = gcd(g, c)
    if g > 1:
        out = {k: c // g for k, c in out.items()}
    return out


def rank_exact(vectors: Iterable[Mapping]) -> int:
    """Rank over Q by fraction-free elimination (Bareiss-style cross multiplication).

    Each incoming vector is reduced against the stored pivots and kept
    primitive by dividing out the content, so entries stay small integers.
    """
    pivots: dict = {}
    for vec in vectors:
        v = _integral(vec)
        while v:
            lead = min(v)
            piv = pivots.get(lead)
            if piv is None:
                pivots[lead] = v
                break
            a, b = piv[lead], v[lead]
            g = gcd(a, b)
            a, b = a // g, b // g
            # v <- a*v - b*piv kills the lead entry
            new = {k: a * c for k, c in v.items()}
            for k, c in piv.items():
                s = new.get(k, 0) - b * c
                if s:
                    new[k] = s
                else:
                    new.pop(k, None)
            g = 0
            for c in new.values():
                g = gcd(g, c)
                if g == 1:
                    break
            if g > 1:
                new = {k: c // g for k, c in new.items()}
            v = new
    return len(pivots)


def reduce_mod(v: Mapping, p: int) -> dict:
    out = {}
    for k, c in v.items():
        if isinstance(c, Fraction):
            c = c.numerator * pow(c.denominator, -1, p)
        c %= p
        if c:
            out[k] = c
    return out


class ModularEchelon:
    """Incremental row echelon form over GF(p); pivots are monic."""

    def __init__(self, p: int = DEFAULT_PRIME):
        self.p = p
        self.pivots: dict = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, v: dict) -> dict:
        p = self.p
        pivots = self.pivots
        while v:
            lead = min(v)
            piv = pivots.get(lead)
            if piv is None:
                return v
            f = v[lead]
            for k, c in piv.items():
                s = (v.get(k, 0) - f * c) % p
                if s:
                    v[k] = s
                else:
                    v.pop(k, None)
        return v

    def add(self, vec: Mapping, already_reduced: bool = False) -> bool:
        """Insert a vector; returns True if it raised the rank."""
        v = vec if already_reduced else reduce_mod(vec, self.p)
        v = self.reduce(v)
        if not v:
            return False
        lead = min(v)
        inv = pow(v[lead], -1, self.p)
        self.pivots[lead] = {k: (c * inv) % self.p for k, c in v.items()}
        return True


def rank_mod_p(vectors: Iterable[Mapping], p: int = DEFAULT_PRIME) -> int:
    """Rank over GF(p).  Never exceeds the rank over Q of the same integer matrix."""
    ech = ModularEchelon(p)
    for v in vectors:
        ech.add(v)
    return ech.rank


class EchelonSolver:
    """Express vectors in terms of a fixed family by exact elimination over Q.

    Built once from ``basis`` (a sequence of vectors), then ``solve(target)``
    returns ``{basis position: coefficient}`` with ``sum(c * basis[k]) == target``.
    """

    def __init__(self, basis: Sequence[Mapping]):
        self.size = len(basis)
        # lead index -> (reduced vector, combination of basis vectors giving it)
        self._pivots: dict[Hashable, tuple[dict, dict]] = {}
        self.dependent: list[int] = []
        for k, vec in enumerate(basis):
            v = {i: Fraction(c) for i, c in vec.items() if c}
            combo = {k: Fraction(1)}
            v, combo = self._reduce(v, combo)
            if not v:
                self.dependent.append(k)
                continue
            lead = min(v)
            inv = 1 / v[lead]
            self._pivots[lead] = (
                {i: c * inv for i, c in v.items()},
                {i: c * inv for i, c in combo.items()},
            )

    def _reduce(self, v: dict, combo: dict) -> tuple[dict, dict]:
        while v:
            lead = min(v)
            entry = self._pivots.get(lead)
            if entry is None:
                break
            pv, pc = entry
            f = v[lead]
            for i, c in pv.items():
                s = v.get(i, 0) - f * c
                if s:
                    v[i] = s
                else:
                    v.pop(i, None)
            for i, c in pc.items():
                s = combo.get(i, 0) - f * c
                if s:
                    combo[i] = s
                else:
                    combo.pop(i, None)
        return v, combo

    @property
    def rank(self) -> int:
        return len(self._pivots)

    def solve(self, target: Mapping) -> dict[int, Fraction]:
        v = {i: Fraction(c) for i, c in target.items() if c}
        # reducing target and tracking -combination; target - sum = residual
        combo: dict = {}
        while v:
            lead = min(v)
            entry = self._pivots.get(lead)
            if entry is None:
                raise InconsistentSystem(f"target has a component outside the span at {lead!r}")
            pv, pc = entry
            f = v[lead]
            for i, c in pv.items():
                s = v.get(i, 0) - f * c
                if s:
                    v[i] = s
                else:
                    v.pop(i, None)
            for i, c in pc.items():
                s = combo.get(i, 0) + f * c
                if s:
                    combo[i] = s
                else:
                    combo.pop(i, None)
        return combo


# --- compiled elimination for large sparse matrices ---------------------------
#
# Degreewise matrices of the complex reach ~30k columns; the dict-based
# elimination above is too slow there.  The kernel below does the same
# semi-echelon reduction (pivot at the smallest index) over GF(p) with a
# 31-bit prime so products fit in int64, using a dense accumulator.

import numpy as np
from numba import njit

KERNEL_PRIME = 2147483647  # 2^31 - 1


@njit(cache=True)
def _inv_mod(a, p):
    result = 1
    e = p - 2
    a %= p
    while e:
        if e & 1:
            result = result * a % p
        a = a * a % p
        e >>= 1
    return result


@njit(cache=True)
def _rank_kernel(indptr, indices, data, nrows, p):
    piv_start = np.full(nrows, -1, np.int64)
    piv_len = np.zeros(nrows, np.int64)
    cap = max(1024, 4 * indices.shape[0])
    buf_idx = np.empty(cap, np.int64)
    buf_val = np.empty(cap, np.int64)
    used = 0
    acc = np.zeros(nrows, np.int64)
    rank = 0
    for col in range(indptr.shape[0] - 1):
        lo = nrows
        hi = -1
        for k in range(indptr[col], indptr[col + 1]):
            r = indices[k]
            acc[r] = (acc[r] + data[k]) % p
            if r < lo:
                lo = r
            if r > hi:
                hi = r
        r = lo
        lead = -1
        while r <= hi:
            f = acc[r]
            if f != 0:
                s = piv_start[r]
                if s < 0:
                    lead = r
                    break
                for k in range(s, s + piv_len[r]):
                    c = buf_idx[k]
                    acc[c] = (acc[c] - f * buf_val[k]) % p
                    if c > hi:
                        hi = c
            r += 1
        if lead < 0:
            continue
        need = hi - lead + 1
        if used + need > cap:
            while used + need > cap:
                cap *= 2
            nb = np.empty(cap, np.int64)
            nb[:used] = buf_idx[:used]
            buf_idx = nb
            nv = np.empty(cap, np.int64)
            nv[:used] = buf_val[:used]
            buf_val = nv
        inv = _inv_mod(acc[lead], p)
        start = used
        for c in range(lead, hi + 1):
            if acc[c] != 0:
                buf_idx[used] = c
                buf_val[used] = acc[c] * inv % p
                acc[c] = 0
                used += 1
        piv_start[lead] = start
        piv_len[lead] = used - start
        rank += 1
    return rank


def rank_sparse_mod_p(columns: Sequence[Mapping[int, int]], nrows: int, p: int = KERNEL_PRIME) -> int:
    """Rank over GF(p) of the matrix with the given integer column vectors.

    Row indices must lie in ``range(nrows)``; coefficients may be any ints or
    Fractions with denominator prime to ``p``.  As with ``rank_mod_p`` the
    result is a lower bound for the rank over Q.
    """
    indptr = np.zeros(len(columns) + 1, np.int64)
    total = 0
    for k, col in enumerate(columns):
        total += len(col)
        indptr[k + 1] = total
    indices = np.empty(total, np.int64)
    data = np.empty(total, np.int64)
    pos = 0
    for col in columns:
        for r, c in col.items():
            if isinstance(c, Fraction):
                c = c.numerator * pow(c.denominator, -1, p)
            indices[pos] = r
            data[pos] = c % p
            pos += 1
    if total and (indices.min() < 0 or indices.max() >= nrows):
        raise IndexError("row index outside the matrix")
    return int(_rank_kernel(indptr, indices, data, nrows, p))
