from fractions import Fraction

import pytest
from hypothesis import given

from conftest import algebras, bouquet, fields, kronecker, make_algebra
from oracles import Data, commutator_on_arrows
from qhh import QQ, Field, LiePresentation, bracket, cochain_complex, hh1, lie_presentation
from qhh.errors import InputNotInKernel, UnsupportedField
from qhh.lie import brackets_within, pair_bracket, subspace_presentation


def _frac(c, p):
    return c % p if p else Fraction(int(c.numerator), int(c.denominator))


def _as_arrow_map(cx, v, p):
    out = {}
    for i, c in v.items():
        pp = cx.basis1[i]
        r = pp.right
        out.setdefault(pp.left.arrows[0], {})[(r.source, r.target, r.arrows)] = _frac(c, p)
    return out


@given(algebras(), fields)
def test_bracket_is_commutator_of_derivations(A, f):
    A = A.with_field(f)
    p = f.characteristic
    cx = cochain_complex(A)
    pb = pair_bracket(cx)
    K = cx.kernel1.basis[:5]
    d = Data.of(A)
    for u in K:
        for v in K:
            mine = _as_arrow_map(cx, pb(u, v), p)
            ref = commutator_on_arrows(d, _as_arrow_map(cx, u, p), _as_arrow_map(cx, v, p))
            assert mine == ref


@given(algebras(), fields)
def test_hh1_is_a_lie_algebra(A, f):
    A = A.with_field(f)
    cx = cochain_complex(A)
    lie_presentation(hh1(A), A).check_axioms()
    assert brackets_within(cx.kernel1, cx.image0, cx.image0, A)
    assert brackets_within(cx.kernel1, cx.kernel1, cx.kernel1, A)


def _gl(n):
    """gl_n on elementary matrices E_ij, index i*n + j."""
    consts = {}
    idx = lambda i, j: i * n + j
    for a in range(n * n):
        for b in range(a + 1, n * n):
            i, j = divmod(a, n)
            k, l = divmod(b, n)
            v = {}
            if j == k:
                v[idx(i, l)] = v.get(idx(i, l), 0) + 1
            if l == i:
                v[idx(k, j)] = v.get(idx(k, j), 0) - 1
            consts[(a, b)] = {x: QQ(c) for x, c in v.items() if c}
    return LiePresentation(n * n, QQ, consts)


def test_gl_n_radical_is_the_center():
    for n in (1, 2, 3):
        L = _gl(n)
        L.check_axioms()
        r = L.killing_radical()
        assert (r.dim, r.semisimple_dim) == (1, n * n - 1)


def test_heisenberg_is_nilpotent():
    L = LiePresentation(3, QQ, {(0, 1): {2: QQ(1)}})
    assert L.is_nilpotent() and L.is_solvable() and L.is_strongly_solvable()
    assert L.derived_series() == [3, 1, 0]
    assert L.killing_radical().dim == 3


def test_two_dim_nonabelian():
    L = LiePresentation(2, QQ, {(0, 1): {1: QQ(1)}})
    assert L.is_solvable() and not L.is_nilpotent()
    assert L.lower_central_series() == [2, 1, 1]
    assert L.is_strongly_solvable()


def test_notsolv_absolute_structure(notsolv):
    A = notsolv.ambient
    L = lie_presentation(hh1(A), A)
    assert L.dim == 4
    assert L.derived_series() == [4, 3, 3]
    assert not L.is_solvable()
    r = L.killing_radical()
    assert (r.dim, r.semisimple_dim) == (1, 3)
    an = L.analysis()
    assert an["radical_dim"] == 1 and an["semisimple_dim"] == 3


def test_kronecker_hh1_is_sl2():
    A = kronecker(2)
    L = lie_presentation(hh1(A), A)
    assert L.dim == 3
    assert L.killing_radical().dim == 0


def test_killing_radical_needs_characteristic_zero():
    A = kronecker(2, Field(3))
    L = lie_presentation(hh1(A), A)
    with pytest.raises(UnsupportedField):
        L.killing_radical()
    assert L.analysis()["radical_dim"] is None


def test_bracket_rejects_non_cocycles():
    A = bouquet(1)
    cx = cochain_complex(A)
    e_pair = [i for i, pp in enumerate(cx.basis1) if pp.right.is_trivial][0]
    f = cx.vector1({e_pair: QQ(1)})
    with pytest.raises(InputNotInKernel):
        bracket(f, f, A)


def test_subspace_presentation_of_kernel_in_char_2():
    A = bouquet(1, Field(2))
    cx = cochain_complex(A)
    L = subspace_presentation(cx.kernel1, A)
    assert L.dim == 2
    assert L.is_solvable() and not L.is_abelian()


def test_quotient_and_subalgebra():
    L = _gl(2)
    center = L.killing_radical().subspace
    Q = L.quotient(center)
    assert Q.dim == 3 and Q.killing_radical().dim == 0
    S = L.subalgebra(L.derived_algebra())
    assert S.dim == 3


def test_two_loops_with_mixed_relations():
    A = make_algebra(1, [("x", 1, 1), ("y", 1, 1)], [("x", "x"), ("y", "y"), ("x", "y")])
    L = lie_presentation(hh1(A), A)
    L.check_axioms()
    assert L.is_solvable()
