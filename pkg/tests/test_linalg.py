from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import rank as oracle_rank
from qhh import QQ, Field
from qhh.errors import ValidationError
from qhh.linalg import ExactMatrix, Quotient, Subspace, axpy


def test_field_parse():
    assert Field.parse("q") == QQ
    assert Field.parse("fp:5").characteristic == 5
    assert Field.parse("rationals").characteristic == 0
    with pytest.raises(ValidationError):
        Field.parse("fp:4")
    with pytest.raises(ValidationError):
        Field.parse("reals")


def test_prime_field_coercion():
    f = Field(3)
    assert f(Fraction(1, 2)) == 2
    assert f(-1) == 2
    assert f.inv(2) == 2
    assert f.norm(7) == 1


def test_rational_coercion_is_exact():
    x = QQ(Fraction(1, 3))
    assert x * 3 == 1
    assert QQ.to_str(QQ(Fraction(-2, 6))) == "-1/3"


small = st.integers(-3, 3)
matrices = st.integers(1, 5).flatmap(
    lambda r: st.integers(1, 5).flatmap(
        lambda c: st.lists(st.lists(small, min_size=c, max_size=c), min_size=r, max_size=r)))


def _matrix(rows, field):
    n, m = len(rows), len(rows[0])
    entries = {(i, j): field(rows[i][j]) for i in range(n) for j in range(m) if rows[i][j]}
    return ExactMatrix.from_entries(n, m, field, entries)


@given(matrices, st.sampled_from([0, 2, 3]))
def test_rank_nullity_against_elimination(rows, p):
    f = Field(p)
    M = _matrix(rows, f)
    expected = oracle_rank([{j: v for j, v in enumerate(r) if v} for r in rows], p)
    assert M.rank() == expected
    K = M.kernel()
    assert K.dim == M.cols - expected
    for v in K.basis:
        assert M.apply(v) == {}


@given(matrices, matrices)
def test_intersection_dimension_formula(a, b):
    m = min(len(a[0]), len(b[0]))
    U = Subspace(m, QQ, [{j: QQ(x) for j, x in enumerate(r[:m]) if x} for r in a])
    W = Subspace(m, QQ, [{j: QQ(x) for j, x in enumerate(r[:m]) if x} for r in b])
    I = U.intersect(W)
    assert (U + W).dim == U.dim + W.dim - I.dim
    assert I.issubspace(U) and I.issubspace(W)


@given(matrices)
def test_quotient_transversal(rows):
    m = len(rows[0])
    num = Subspace(m, QQ, [{j: QQ(1)} for j in range(m)])
    den = Subspace(m, QQ, [{j: QQ(x) for j, x in enumerate(r) if x} for r in rows])
    q = Quotient(num, den)
    assert q.dim == m - den.dim
    T = q.transversal
    assert (den + Subspace(m, QQ, T)).dim == m
    for k, t in enumerate(T):
        coords = q.class_coordinates(t)
        assert coords == [1 if i == k else 0 for i in range(q.dim)]
    for v in den.basis:
        assert q.is_zero_class(v)


def test_axpy_cancels_to_empty():
    f = Field(5)
    assert axpy({0: 2, 1: 1}, 4, {0: 2, 1: 1}, f) == {}  # 1 + 4 = 0 mod 5


def test_subspace_coordinates_round_trip():
    S = Subspace(3, QQ, [{0: QQ(1), 1: QQ(2)}, {1: QQ(1), 2: QQ(1)}])
    v = {0: QQ(3), 1: QQ(7), 2: QQ(1)}
    assert v in S
    c = S.coordinates(v)
    back = {}
    for coeff, b in zip(c, S.basis):
        back = axpy(back, coeff, b, QQ)
    assert back == v
