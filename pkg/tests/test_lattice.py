import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from hypothesis.extra.numpy import arrays

from cyclolog.errors import BudgetExceeded, RankDeficient, RankTooLarge
from cyclolog.lattice import (
    LatticeBasis,
    closest_vector,
    gram,
    is_lll_reduced,
    lll_reduce,
    lll_reduce_with_transform,
    shortest_vector,
    successive_minima,
)
from cyclolog.lattice.basis import gram_determinant, integer_det, numerical_rank

from _oracles import SQ3, brute_closest, brute_minima, brute_shortest, fixture_basis


def test_gram_identity():
    np.testing.assert_array_equal(gram(fixture_basis("Z3")), np.eye(3))


def test_gram_hexagonal():
    np.testing.assert_allclose(gram(fixture_basis("A2")), [[1, 0.5], [0.5, 1]], atol=1e-15)


def test_gram_rejects_dependent_rows():
    with pytest.raises(RankDeficient):
        gram(LatticeBasis([[1.0, 2.0, 3.0], [2.0, 4.0, 6.0]]))


def test_basis_rejects_too_many_rows():
    with pytest.raises(RankDeficient):
        LatticeBasis(np.eye(3)[:, :2])


def test_basis_is_read_only_copy():
    raw = np.eye(2)
    b = LatticeBasis(raw)
    raw[0, 0] = 5
    assert b.vectors[0, 0] == 1
    with pytest.raises(ValueError):
        b.vectors[0, 0] = 3
    assert raw.flags.writeable


def test_numerical_rank():
    assert numerical_rank(np.diag([1.0, 1e-3, 0.0])) == 2
    assert numerical_rank(np.diag([1.0, 1e-9])) == 1


def test_integer_det():
    assert integer_det(np.array([[2, 1], [7, 4]])) == 1
    assert integer_det(np.array([[0, 1, 0], [1, 0, 0], [0, 0, 1]])) == -1


def test_lll_skewed_basis():
    b = LatticeBasis([[1.0, 0.0], [1_000_001.0, 1.0]])
    res = lll_reduce_with_transform(b)
    assert np.all(res.basis.norms() <= math.sqrt(2) + 1e-12)
    assert abs(integer_det(res.transform)) == 1
    np.testing.assert_allclose(res.transform @ b.vectors, res.basis.vectors, atol=1e-9)
    assert gram_determinant(res.basis) == pytest.approx(gram_determinant(b), rel=1e-9)
    assert is_lll_reduced(res.basis)


def test_lll_fixed_point():
    b = lll_reduce(fixture_basis("D4"))
    again = lll_reduce_with_transform(b)
    np.testing.assert_array_equal(again.transform, np.eye(4, dtype=again.transform.dtype))


@pytest.mark.parametrize("delta", [0.25, 1.0, 0.1, 1.5])
def test_lll_delta_range(delta):
    with pytest.raises(ValueError):
        lll_reduce(fixture_basis("Z2"), delta)


@settings(max_examples=80, deadline=None)
@given(arrays(np.int64, (3, 4), elements=st.integers(-40, 40)))
def test_lll_properties_on_integer_bases(rows):
    if np.linalg.matrix_rank(rows.astype(float)) < 3:
        return
    b = LatticeBasis(rows)
    res = lll_reduce_with_transform(b, 0.75)
    assert is_lll_reduced(res.basis, 0.75)
    assert abs(integer_det(res.transform)) == 1
    np.testing.assert_allclose(res.transform @ rows, res.basis.vectors, atol=1e-8)
    # reduced basis vectors are exactly integral combinations of the input
    np.testing.assert_allclose(res.basis.vectors, np.round(res.basis.vectors), atol=1e-8)


@pytest.mark.parametrize("name, length", [("Z2", 1), ("Z4", 1), ("A2", 1), ("D4", math.sqrt(2))])
def test_shortest_vector_fixtures(name, length):
    sv = shortest_vector(fixture_basis(name))
    assert sv.length == pytest.approx(length, abs=1e-12)
    np.testing.assert_allclose(fixture_basis(name).point(sv.coeffs), sv.vector)


@pytest.mark.parametrize("name, values", [("Z3", [1, 1, 1]), ("A2", [1, 1]), ("D4", [math.sqrt(2)] * 4)])
def test_successive_minima_fixtures(name, values):
    mins = successive_minima(fixture_basis(name))
    np.testing.assert_allclose(mins.values, values, atol=1e-12)
    assert np.linalg.matrix_rank(mins.witnesses) == len(values)


def test_closest_vector_square():
    cp = closest_vector(fixture_basis("Z2"), [0.3, 0.8])
    assert cp.coeffs == (0, 1)
    assert cp.distance == pytest.approx(math.hypot(0.3, 0.2), abs=1e-14)
    assert cp.residual == 0


def test_closest_vector_tie_break_is_lexicographic():
    cp = closest_vector(fixture_basis("A2"), [0.5, SQ3 / 6])
    assert cp.distance == pytest.approx(1 / SQ3, abs=1e-12)
    assert cp.coeffs == (0, 0)


def test_closest_vector_off_span_target():
    b = LatticeBasis([[1.0, 0.0, 0.0], [0.0, 1.0, 0.0]])
    cp = closest_vector(b, [1.2, -0.9, 5.0])
    assert cp.coeffs == (1, -1)
    assert cp.residual == pytest.approx(5.0)
    assert cp.distance == pytest.approx(math.hypot(0.2, 0.1))


def test_engine_on_cyclotomic_n7_matches_brute_force():
    from cyclolog.embedding import ramachandra_basis
    from cyclolog.numtheory import make_modulus

    b = ramachandra_basis(make_modulus(7))
    assert shortest_vector(b).length == pytest.approx(brute_shortest(b.vectors, 5), rel=1e-12)
    np.testing.assert_allclose(successive_minima(b).values, brute_minima(b.vectors, 5), rtol=1e-12)
    t = np.array([0.37, -1.1, 0.73])
    assert closest_vector(b, t).distance == pytest.approx(brute_closest(b.vectors, t, 5), rel=1e-12)


def test_budget_exceeded():
    b = LatticeBasis(np.eye(8))
    with pytest.raises(BudgetExceeded):
        successive_minima(b, max_nodes=10)


def test_rank_limits():
    with pytest.raises(RankTooLarge):
        shortest_vector(LatticeBasis(np.eye(13)))
    with pytest.raises(RankTooLarge):
        closest_vector(LatticeBasis(np.eye(9)), np.zeros(9))
