import pytest
from hypothesis import assume, given

from conftest import bouquet, fields, kronecker, load_fixture, pairs
from oracles import Data, hh1_dim
from qhh import Field, SubalgebraPair, embed_into_hh1, relative_hh1
from qhh.generators import complement_is_simple
from qhh.lie import subspace_presentation
from qhh.relative import relative_kernel


def test_notsolv_relative_is_one_dimensional(notsolv):
    r = relative_hh1(notsolv)
    assert (r.dim, r.absolute.dim) == (1, 4)
    assert r.lie.is_abelian()
    assert r.embedding_rank() == 1


def test_example2_relative(example2):
    r = relative_hh1(example2)
    assert r.dim == 5
    rad = r.lie.killing_radical()
    assert (rad.dim, rad.semisimple_dim) == (2, 3)
    image = [r.complex.vector1(v).to_json() for v in r.image.basis]
    assert image == [[{"left": "d1", "right": "d1", "coeff": "1"},
                      {"left": "d2", "right": "d2", "coeff": "1"}]]


def test_parallel_pair_over_a_single_arrow_loses_nothing():
    r = relative_hh1(load_fixture("rsz_parallel.quiv"))
    assert r.dim == r.absolute.dim == r.embedding_rank() == 3


def _nested(A, m):
    return SubalgebraPair.from_arrows(A, [f"a{i}" for i in range(1, m + 1)])


@pytest.mark.parametrize("family", [kronecker, bouquet])
def test_kronecker_and_bouquet_kernels(family):
    for n in range(1, 5):
        for m in range(1, n + 1):
            pair = _nested(family(n), m)
            K = relative_kernel(pair)
            assert K.dim == (n - m) * n, (family.__name__, m, n)
            if m == n - 1:
                L = subspace_presentation(K, pair.ambient)
                D = L.derived_algebra()
                assert D.dim == n - 1
                assert L.subalgebra(D).is_abelian()


def test_kronecker_kernel_is_gl_without_top_rows():
    n, m = 4, 2
    pair = _nested(kronecker(n), m)
    L = subspace_presentation(relative_kernel(pair), pair.ambient)
    # the ideal of maps into the first m arrows is abelian of dim m(n-m)
    assert L.killing_radical().dim == m * (n - m) + 1
    assert L.killing_radical().semisimple_dim == (n - m) ** 2 - 1


def test_single_loop_in_characteristic_two():
    A = bouquet(1, Field(2))
    pair = SubalgebraPair.from_arrows(A, [])
    K = relative_kernel(pair)
    assert K.dim == 2
    assert subspace_presentation(K, A).is_solvable()
    # in characteristic zero only a//a survives
    assert relative_kernel(SubalgebraPair.from_arrows(bouquet(1), [])).dim == 1


@given(pairs(), fields)
def test_relative_dim_matches_oracle(pair, f):
    A = pair.ambient.with_field(f)
    p = SubalgebraPair.from_arrows(A, pair.sub_arrow_names)
    assert relative_hh1(p, lie=False).dim == hh1_dim(Data.of(A), sorted(pair.sub_arrow_names))


@given(pairs())
def test_embedding_is_injective_lie_map(pair):
    e = embed_into_hh1(pair)
    assert e["injective"] and e["bracket_commutes"]


@given(pairs())
def test_trivial_subalgebra_gives_absolute(pair):
    p = SubalgebraPair.from_arrows(pair.ambient, [])
    r = relative_hh1(p, lie=False)
    assert r.dim == r.absolute.dim


@given(pairs())
def test_simple_complement_gives_solvable(pair):
    assume(complement_is_simple(pair))
    assert relative_hh1(pair).lie.is_solvable()


def test_report_schema(notsolv):
    rep = relative_hh1(notsolv).report()
    assert {"dim_rel", "dim_abs", "embedding_rank", "embedding_commutes", "dim_ker_rel",
            "dim_im_rel", "graded_dims", "image_rel_basis", "transversal", "lie"} <= set(rep)
