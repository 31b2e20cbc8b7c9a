import pytest
from hypothesis import given, settings, strategies as st

from conftest import complex_for, fillings
from spechtres.combinatorics import ShapeError, enumerate_syt, syt_index
from spechtres.polyring import Polynomial
from spechtres.resolution import (
    ComplexError,
    apply_differential,
    apply_formal,
    augmentation,
    build_complex,
    compose,
    compose_with_generators,
    differential_connect,
    differential_high,
    differential_low,
    formal_differential,
    h_transpositions,
    module_spec,
    module_specs,
)
from spechtres.spechtmod import SpechtVector, specht_polynomial, straighten


def test_layout_for_seven_three():
    specs = module_specs(7, 3)
    assert [m.shape for m in specs] == [(4, 3), (3, 3, 1), (2, 2, 1, 1, 1), (2, 1, 1, 1, 1, 1)]
    assert [m.twist for m in specs] == [-3, -4, -6, -7]
    assert [m.rank for m in specs] == [14, 21, 14, 6]


def test_layout_for_even_split():
    # n = 2d: the connecting map is ∂_1, so the degree jumps by two straight away
    specs = module_specs(6, 3)
    assert [m.shape for m in specs] == [(3, 3), (2, 2, 1, 1), (2, 1, 1, 1, 1)]
    assert [m.twist for m in specs] == [-3, -5, -6]


def test_layout_hook_case():
    # d = 1: every module is a hook and the complex is linear
    specs = module_specs(5, 1)
    assert [m.shape for m in specs] == [(4, 1), (3, 1, 1), (2, 1, 1, 1), (1, 1, 1, 1, 1)]
    assert [m.twist for m in specs] == [-1, -2, -3, -4]


@pytest.mark.parametrize("n, d", [(3, 2), (4, 0), (1, 1)])
def test_bad_parameters(n, d):
    with pytest.raises(ComplexError):
        module_specs(n, d)


def test_module_out_of_range():
    with pytest.raises(ComplexError):
        module_spec(7, 3, 4)
    with pytest.raises(ComplexError):
        formal_differential(7, 3, 4, ((1, 2), (3,), (4,), (5,), (6,), (7,)))


def test_low_strand_terms():
    t = ((1, 2, 3), (4, 5, 6), (7,))
    assert differential_low(t, 1) == [
        (((4, 2, 3, 1), (7, 5, 6)), 1, (1,)),
        (((1, 2, 3, 4), (7, 5, 6)), -1, (4,)),
        (((1, 2, 3, 7), (4, 5, 6)), 1, (7,)),
    ]


def test_connecting_terms_are_quadratic_and_alternate():
    t = ((1, 2), (3, 4), (5,), (6,), (7,))
    terms = differential_connect(t)
    assert len(terms) == 10
    assert terms[0] == (((5, 2, 1), (6, 4, 3), (7,)), 1, (1, 3))
    assert terms[-1] == (((1, 2, 6), (3, 4, 7), (5,)), 1, (6, 7))
    assert all(len(v) == 2 for _, _, v in terms)


def test_high_strand_terms_single_element_h():
    t = ((1, 2), (3,), (4,), (5,), (6,), (7,))
    terms = differential_high(t, 3)
    assert [s for _, s, _ in terms] == [1, -1, 1, -1, 1, -1]
    assert [v for _, _, v in terms] == [(1,), (3,), (4,), (5,), (6,), (7,)]


def test_h_contains_identity_and_swaps_to_the_right():
    t_j = ((1, 2, 3, 4), (5, 6), (7,))
    assert h_transpositions(t_j, 1) == [None, (2, 3), (2, 4)]
    assert h_transpositions(t_j, 4) == [None]


def test_high_strand_uses_h():
    # (n, d) = (8, 4): F_3 has shape (3, 1^5); the new box lands in column 2 of
    # row 2, so H also swaps the first-row entries in columns 2 and 3
    t = enumerate_syt((3, 1, 1, 1, 1, 1))[0]
    terms = formal_differential(8, 4, 3, t)
    assert len(terms) == 6 * 2
    assert terms[0] == (((4, 2, 3), (5, 1), (6,), (7,), (8,)), 1, (1,))
    assert terms[1] == (((4, 3, 2), (5, 1), (6,), (7,), (8,)), 1, (1,))
    with pytest.raises(ShapeError):
        differential_high(t, 1)


def test_wrong_shape_rejected():
    with pytest.raises(ShapeError):
        differential_low(((1, 2), (3, 4)), 1)
    with pytest.raises(ShapeError):
        augmentation(((1, 2), (3,), (4,)))


def test_augmentation_is_specht_polynomial():
    t = ((1, 2, 3), (4, 5))
    assert augmentation(t) == specht_polynomial(t)


def test_matrix_shape_and_degrees():
    c = complex_for(7, 3)
    for i in range(1, c.length + 1):
        mat = c.differential(i)
        assert (mat.rows, mat.cols) == (c.modules[i - 1].rank, c.modules[i].rank)
        for p in mat.entries.values():
            assert p.is_homogeneous() and p.degree() == mat.entry_degree
    with pytest.raises(IndexError):
        c.differential(0)


@pytest.mark.parametrize("n, d", [(2, 1), (4, 1), (4, 2), (5, 2), (6, 2), (6, 3), (7, 3)])
def test_composites_vanish(n, d):
    c = complex_for(n, d)
    assert not any(compose_with_generators(c))
    for i in range(1, c.length):
        assert compose(c.differential(i), c.differential(i + 1)) == {}


def test_flipped_sign_breaks_the_complex():
    c = build_complex(5, 2)
    mat = c.differential(1)
    key = next(iter(mat.entries))
    mat.entries[key] = -mat.entries[key]
    assert any(compose_with_generators(c)) or compose(c.differential(1), c.differential(2))


def test_build_is_deterministic_across_jobs():
    serial = build_complex(6, 2, jobs=1)
    parallel = build_complex(6, 2, jobs=2)
    for a, b in zip(serial.differentials, parallel.differentials):
        assert a.entries == b.entries
    assert serial.generators == parallel.generators


@settings(max_examples=25, deadline=None)
@given(fillings((3, 3, 1)))
def test_matrix_column_agrees_with_formal_image(t):
    # straightening t first and applying the matrix equals straightening ∂(t) directly
    c = complex_for(7, 3)
    via_matrix = apply_differential(c, 1, straighten(t))
    assert via_matrix == apply_formal(c, 1, t)


def test_apply_differential_rejects_wrong_shape():
    c = complex_for(5, 2)
    with pytest.raises(ShapeError):
        apply_differential(c, 1, SpechtVector((3, 2), {0: 1}))


def test_apply_with_coefficient_scales():
    c = complex_for(5, 2)
    v = SpechtVector(c.modules[1].shape, {0: 1})
    x1 = Polynomial.var(5, 1)
    assert apply_differential(c, 1, v, x1) == [p * x1 for p in apply_differential(c, 1, v)]


def test_basis_order_matches_syt_index():
    c = complex_for(6, 2)
    for m in c.modules:
        assert syt_index(m.shape) == {t: k for k, t in enumerate(m.basis)}
