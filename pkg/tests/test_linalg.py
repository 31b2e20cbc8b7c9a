from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from spechtres.linalg import (
    EchelonSolver,
    InconsistentSystem,
    rank_exact,
    rank_mod_p,
    rank_sparse_mod_p,
)


def dense_rank(columns, nrows):
    """Textbook Gaussian elimination over Fraction on a dense copy."""
    rows = [[Fraction(col.get(r, 0)) for col in columns] for r in range(nrows)]
    rank, lead = 0, 0
    ncols = len(columns)
    for c in range(ncols):
        pivot = next((r for r in range(rank, nrows) if rows[r][c] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        for r in range(nrows):
            if r != rank and rows[r][c] != 0:
                f = rows[r][c] / rows[rank][c]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
    return rank


matrices = st.integers(1, 7).flatmap(
    lambda nrows: st.tuples(
        st.just(nrows),
        st.lists(
            st.dictionaries(st.integers(0, nrows - 1), st.integers(-3, 3).filter(bool), max_size=nrows),
            max_size=8,
        ),
    )
)


@settings(max_examples=150, deadline=None)
@given(matrices)
def test_ranks_agree_with_dense_oracle(m):
    nrows, cols = m
    expected = dense_rank(cols, nrows)
    assert rank_exact(cols) == expected
    assert rank_mod_p(cols) == expected
    assert rank_sparse_mod_p(cols, nrows) == expected


def test_modular_rank_can_only_drop():
    # det = 6 vanishes mod 2 and mod 3
    cols = [{0: 2, 1: 0}, {0: 0, 1: 3}]
    assert rank_exact(cols) == 2
    assert rank_mod_p(cols, 2) == 1
    assert rank_sparse_mod_p(cols, 2, p=3) == 1


def test_rank_with_fractions():
    cols = [{0: Fraction(1, 2), 1: Fraction(1, 3)}, {0: 3, 1: 2}]
    assert rank_exact(cols) == 1
    assert rank_sparse_mod_p(cols, 2) == 1


def test_sparse_kernel_rejects_bad_rows():
    with pytest.raises(IndexError):
        rank_sparse_mod_p([{5: 1}], 3)


def test_solver():
    basis = [{0: 1, 1: 1}, {1: 1, 2: 1}, {0: 1, 2: -1}]
    solver = EchelonSolver(basis)
    assert solver.rank == 2 and solver.dependent == [2]
    combo = solver.solve({0: 2, 1: 5, 2: 3})
    rebuilt = {}
    for k, c in combo.items():
        for i, v in basis[k].items():
            rebuilt[i] = rebuilt.get(i, 0) + c * v
    assert {i: v for i, v in rebuilt.items() if v} == {0: 2, 1: 5, 2: 3}
    with pytest.raises(InconsistentSystem):
        solver.solve({0: 1})
