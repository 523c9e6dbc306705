from hypothesis import given

from conftest import algebras, fields, load_fixture, make_algebra
from oracles import Data, center_dim, hh1_dim
from qhh import QQ, Field, cochain_complex, hh0, hh1
from qhh.complex import graded_component, hh1_report, substitute


def test_notsolv_complex(notsolv):
    A = notsolv.ambient
    cx = cochain_complex(A)
    assert [str(p) for p in cx.basis1] == ["a1//a1", "a1//a2", "a2//a1", "a2//a2", "b//b"]
    assert cx.image0.dim == 1
    assert cx.kernel1.dim == 5
    assert hh1(A).dim == 4
    assert hh0(A)["dim"] == 3


def test_delta0_on_vertex(notsolv):
    A = notsolv.ambient
    cx = cochain_complex(A)
    j = [str(p) for p in cx.basis0].index("e_1//e_1")
    col = cx.vector1(cx.d0.column(j)).to_json()
    # arrows leaving 1 get +, arrows entering 1 get -
    assert col == [{"left": "a1", "right": "a1", "coeff": "1"},
                   {"left": "a2", "right": "a2", "coeff": "1"},
                   {"left": "b", "right": "b", "coeff": "-1"}]


def test_substitute_counts_each_occurrence():
    A = make_algebra(1, [("a", 1, 1), ("c", 1, 1)], [("a", "a"), ("a", "c"), ("c", "a"),
                                                      ("c", "c", "c")])
    r = A.relations[0]
    e = A.quiver.trivial(1)
    assert substitute(r, "a", e, A) == {A.quiver.path(["a"]): 2}
    B = A.with_field(Field(2))
    assert substitute(B.relations[0], "a", e, B) == {}


@given(algebras(), fields)
def test_d1_d0_vanishes(A, f):
    cochain_complex(A.with_field(f)).check()


@given(algebras(), fields)
def test_hh1_matches_derivation_oracle(A, f):
    A = A.with_field(f)
    assert hh1(A).dim == hh1_dim(Data.of(A))


@given(algebras(), fields)
def test_hh0_is_center_and_kernel_of_d0(A, f):
    A = A.with_field(f)
    cx = cochain_complex(A)
    assert hh0(A)["dim"] == center_dim(Data.of(A)) == len(cx.basis0) - cx.d0.rank()


@given(algebras())
def test_graded_dims_add_up(A):
    sq = hh1(A)
    dims = sq.graded_dims()
    assert sum(dims.values()) == sq.dim
    for d, n in dims.items():
        assert graded_component(sq, d).dim == n


def test_hh1_report_keys(notsolv):
    r = hh1_report(notsolv.ambient)
    assert r["dim_hh1"] == 4
    assert r["dim_ker_d1"] - r["rank_d0"] == r["dim_hh1"]
    assert r["graded_dims"] == {"1": 4}
    assert len(r["transversal"]) == 4


def test_fixture_oracle_small_dimensions():
    for name in ("notsolv.quiv", "example2.quiv", "loop.quiv", "kronecker.quiv",
                 "rsz_parallel.quiv", "a4.quiv"):
        obj = load_fixture(name)
        A = getattr(obj, "ambient", obj)
        for f in (QQ, Field(2)):
            B = A.with_field(f)
            assert hh1(B).dim == hh1_dim(Data.of(B)), (name, f)


def test_transversal_is_canonical(notsolv):
    first = [t.to_json() for t in hh1(notsolv.ambient).transversal]
    again = [t.to_json() for t in hh1(load_fixture("notsolv.quiv").ambient).transversal]
    assert first == again
