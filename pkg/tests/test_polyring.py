from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from spechtres.polyring import (
    AmbientMismatch,
    Polynomial,
    act_permutation,
    compose,
    dim_graded_piece,
    graded_piece_basis,
    linear_form,
)

N = 3
monos = st.tuples(*[st.integers(0, 3)] * N)
coeffs = st.one_of(st.integers(-5, 5), st.fractions(max_denominator=4).filter(lambda f: abs(f) < 6))
polys = st.dictionaries(monos, coeffs, max_size=5).map(lambda t: Polynomial(N, t))
points = st.tuples(*[st.integers(-4, 4)] * N)


@settings(max_examples=80, deadline=None)
@given(polys, polys, points)
def test_arithmetic_agrees_with_evaluation(p, q, x):
    # evaluation is a ring map, so it is an oracle for +, -, *
    assert (p + q).substitute(x) == p.substitute(x) + q.substitute(x)
    assert (p - q).substitute(x) == p.substitute(x) - q.substitute(x)
    assert (p * q).substitute(x) == p.substitute(x) * q.substitute(x)


@settings(max_examples=40, deadline=None)
@given(polys, st.integers(0, 3), points)
def test_power(p, k, x):
    assert (p**k).substitute(x) == p.substitute(x) ** k


@settings(max_examples=40, deadline=None)
@given(polys)
def test_triples_round_trip(p):
    assert Polynomial.from_triples(N, p.to_triples()) == p


def test_zero_coefficients_dropped_and_normalised():
    p = Polynomial(2, {(1, 0): Fraction(4, 2), (0, 1): 0})
    assert p.terms == {(1, 0): 2}
    assert isinstance(p.terms[(1, 0)], int)
    x1, x2 = Polynomial.var(2, 1), Polynomial.var(2, 2)
    assert (x1 - x1).is_zero()
    assert str(x1 * x1 - 2 * x1 * x2 + 3) == "x1^2 - 2*x1*x2 + 3"


def test_degree_and_homogeneity():
    x1, x2 = Polynomial.var(2, 1), Polynomial.var(2, 2)
    assert (x1 * x2 + x1).degree() == 2
    assert not (x1 * x2 + x1).is_homogeneous()
    assert (x1 * x2 - x2 * x2).is_homogeneous()
    assert Polynomial.zero(2).degree() == -1


def test_ambient_mismatch():
    with pytest.raises(AmbientMismatch):
        Polynomial.var(2, 1) + Polynomial.var(3, 1)
    with pytest.raises(IndexError):
        Polynomial.var(2, 3)


def test_permutation_action():
    x = [Polynomial.var(3, i) for i in (1, 2, 3)]
    p = x[0] - x[1]
    assert act_permutation((2, 3, 1), p) == x[1] - x[2]
    sigma, tau = (2, 3, 1), (2, 1, 3)
    assert act_permutation(compose(sigma, tau), p) == act_permutation(sigma, act_permutation(tau, p))


def test_graded_pieces():
    basis = graded_piece_basis(3, 2)
    assert len(basis) == dim_graded_piece(3, 2) == 6
    assert basis[0] == (2, 0, 0) and basis[-1] == (0, 0, 2)
    assert dim_graded_piece(3, -1) == 0
    assert linear_form(2, {1: 3, 2: -1}) == 3 * Polynomial.var(2, 1) - Polynomial.var(2, 2)
