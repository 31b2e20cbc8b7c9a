"""Sparse multivariate polynomials over the rationals.

A polynomial lives in ``Q[x_1, ..., x_n]`` and stores a dict from exponent
tuples to nonzero coefficients.  Coefficients are Python ints or
``fractions.Fraction``; nothing here ever touches a float.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cache
from itertools import combinations_with_replacement
from math import comb
from numbers import Rational
from typing import Iterable, Mapping, Sequence, Union

Monomial = tuple[int, ...]
Coefficient = Union[int, Fraction]


def _normal(c) -> Coefficient:
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def grlex_key(m: Monomial) -> tuple:
    """Sort key putting monomials in decreasing graded lex order (x_1 > ... > x_n)."""
    return (-sum(m), tuple(-e for e in m))


class AmbientMismatch(ValueError):
    pass


class Polynomial:
    """Immutable polynomial in ``n`` variables with exact coefficients."""

    __slots__ = ("n", "terms", "_hash")

    def __init__(self, n: int, terms: Mapping[Monomial, Coefficient] | None = None):
        self.n = n
        clean = {}
        if terms:
            for m, c in terms.items():
                if len(m) != n:
                    raise AmbientMismatch(f"monomial {m} does not have {n} exponents")
                if c != 0:
                    clean[tuple(m)] = _normal(c)
        self.terms: dict[Monomial, Coefficient] = clean
        self._hash = None

    # -- constructors -----------------------------------------------------
    @classmethod
    def zero(cls, n: int) -> "Polynomial":
        return cls(n)

    @classmethod
    def constant(cls, n: int, c: Coefficient) -> "Polynomial":
        return cls(n, {(0,) * n: c})

    @classmethod
    def var(cls, n: int, i: int) -> "Polynomial":
        """The variable ``x_i`` (1-based)."""
        if not 1 <= i <= n:
            raise IndexError(f"x_{i} outside 1..{n}")
        e = [0] * n
        e[i - 1] = 1
        return cls(n, {tuple(e): 1})

    @classmethod
    def monomial(cls, m: Monomial, c: Coefficient = 1) -> "Polynomial":
        return cls(len(m), {tuple(m): c})

    @classmethod
    def _raw(cls, n: int, terms: dict) -> "Polynomial":
        # terms already clean: no zeros, right length
        p = cls.__new__(cls)
        p.n = n
        p.terms = terms
        p._hash = None
        return p

    # -- basic queries ------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self.terms}) <= 1

    def constant_term(self) -> Coefficient:
        return self.terms.get((0,) * self.n, 0)

    def sorted_terms(self) -> list[tuple[Monomial, Coefficient]]:
        return sorted(self.terms.items(), key=lambda mc: grlex_key(mc[0]))

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.n == other.n and self.terms == other.terms
        if isinstance(other, (int, Rational)):
            if other == 0:
                return not self.terms
            return self.terms == {(0,) * self.n: other}
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, frozenset(self.terms.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"Polynomial({self.n}, {self})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for m, c in self.sorted_terms():
            mono = "*".join(
                f"x{i + 1}" if e == 1 else f"x{i + 1}^{e}" for i, e in enumerate(m) if e
            )
            if not mono:
                pieces.append(str(c))
            elif c == 1:
                pieces.append(mono)
            elif c == -1:
                pieces.append("-" + mono)
            else:
                pieces.append(f"{c}*{mono}")
        return " + ".join(pieces).replace("+ -", "- ")

    # -- arithmetic ---------------------------------------------------------
    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.n != self.n:
                raise AmbientMismatch(f"ambient sizes {self.n} and {other.n} differ")
            return other
        if isinstance(other, (int, Rational)):
            return Polynomial.constant(self.n, other)
        raise TypeError(f"cannot combine Polynomial with {type(other).__name__}")

    def __add__(self, other) -> "Polynomial":
        other = self._coerce(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = _normal(s)
            else:
                out.pop(m, None)
        return Polynomial._raw(self.n, out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw(self.n, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> "Polynomial":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Polynomial":
        return self._coerce(other) - self

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Rational)):
            if other == 0:
                return Polynomial._raw(self.n, {})
            return Polynomial._raw(self.n, {m: _normal(c * other) for m, c in self.terms.items()})
        other = self._coerce(other)
        out: dict[Monomial, Coefficient] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                out[m] = out.get(m, 0) + c1 * c2
        return Polynomial._raw(self.n, {m: _normal(c) for m, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Polynomial":
        if k < 0:
            raise ValueError("negative power")
        result = Polynomial.constant(self.n, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def times_monomial(self, m: Monomial, c: Coefficient = 1) -> "Polynomial":
        return Polynomial._raw(
            self.n, {tuple(a + b for a, b in zip(mm, m)): _normal(cc * c) for mm, cc in self.terms.items()}
        )

    # -- evaluation and symmetry ------------------------------------------
    def substitute(self, assignment: Mapping[int, Coefficient] | Sequence[Coefficient]) -> Coefficient:
        """Evaluate exactly; ``assignment`` maps variable index (1-based) to a value,
        or is a sequence ``(v_1, ..., v_n)``."""
        if isinstance(assignment, Mapping):
            values = [assignment[i] for i in range(1, self.n + 1)]
        else:
            values = list(assignment)
            if len(values) != self.n:
                raise AmbientMismatch(f"need {self.n} values, got {len(values)}")
        total: Coefficient = 0
        for m, c in self.terms.items():
            term = c
            for v, e in zip(values, m):
                if e:
                    term = term * v**e
            total += term
        return _normal(Fraction(total)) if isinstance(total, Fraction) else total

    def act(self, sigma: Sequence[int]) -> "Polynomial":
        """Relabel variables ``x_i -> x_{sigma(i)}``; ``sigma`` is given as the
        one-line list ``(sigma(1), ..., sigma(n))``."""
        return act_permutation(sigma, self)

    # -- serialisation ------------------------------------------------------
    def to_triples(self) -> list[dict]:
        out = []
        for m, c in self.sorted_terms():
            c = Fraction(c)
            out.append({"num": c.numerator, "den": c.denominator, "exps": list(m)})
        return out

    @classmethod
    def from_triples(cls, n: int, triples: Iterable[Mapping]) -> "Polynomial":
        return cls(n, {tuple(t["exps"]): Fraction(t["num"], t["den"]) for t in triples})


def check_permutation(sigma: Sequence[int], n: int) -> tuple[int, ...]:
    sigma = tuple(sigma)
    if sorted(sigma) != list(range(1, n + 1)):
        raise ValueError(f"{sigma} is not a permutation of 1..{n}")
    return sigma


def act_permutation(sigma: Sequence[int], p: Polynomial) -> Polynomial:
    sigma = check_permutation(sigma, p.n)
    out = {}
    for m, c in p.terms.items():
        new = [0] * p.n
        for i, e in enumerate(m):
            new[sigma[i] - 1] = e
        out[tuple(new)] = c
    return Polynomial._raw(p.n, out)


def compose(sigma: Sequence[int], tau: Sequence[int]) -> tuple[int, ...]:
    """One-line form of ``sigma o tau`` (apply ``tau`` first)."""
    return tuple(sigma[t - 1] for t in tau)


def linear_form(n: int, coeffs: Mapping[int, Coefficient]) -> Polynomial:
    return sum((Polynomial.var(n, i) * c for i, c in coeffs.items()), Polynomial.zero(n))


@cache
def graded_piece_basis(n: int, j: int) -> tuple[Monomial, ...]:
    """Monomials of total degree ``j`` in ``n`` variables, decreasing grlex."""
    if j < 0:
        return ()
    out = []
    for combo in combinations_with_replacement(range(n), j):
        e = [0] * n
        for v in combo:
            e[v] += 1
        out.append(tuple(e))
    out.sort(key=grlex_key)
    return tuple(out)


@cache
def graded_piece_index(n: int, j: int) -> dict[Monomial, int]:
    return {m: k for k, m in enumerate(graded_piece_basis(n, j))}


def dim_graded_piece(n: int, j: int) -> int:
    if j < 0:
        return 0
    if n == 0:
        return 1 if j == 0 else 0
    return comb(n + j - 1, j)
