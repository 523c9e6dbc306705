import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import kronecker, load_fixture, make_algebra
from qhh import (DualExtension, compute_ji, degree_one_split, hh0, hh1, lie_presentation,
                 linear_algebra, relative_hh1, structural_checks, verify_exact_sequence)
from qhh.errors import NotDirected, VertexMismatch
from qhh.generators import random_directed_pair


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_linear_quiver_dual_extension(n):
    A = linear_algebra(n)
    de = DualExtension(A, A)
    lam = de.lam
    expected = n * (n - 1) // 2
    assert hh0(lam)["dim"] == n
    assert hh1(lam).dim == expected
    assert relative_hh1(de.pair_b, lie=False).dim == expected
    ji = compute_ji(de)
    assert ji["dim_J_over_I"] == expected
    assert lie_presentation(hh1(lam), lam).is_solvable()
    assert verify_exact_sequence(de)["ok"]
    assert degree_one_split(de)["ok"]


def test_notcong_dimensions():
    B = load_fixture("notcong_b.quiv")
    de = DualExtension(B, B)
    ji = compute_ji(de)
    assert (ji["dim_J_prime"], ji["dim_ker_rel_B"], ji["dim_I"]) == (2, 5, 1)
    assert ji["dim_J_over_I"] == 6
    assert ji["dim_hh1_rel_B"] == 5
    assert ji["dim_hh1_lambda"] == 6
    assert all(structural_checks(de).values())


def test_kronecker_with_a2_gives_notsolv(notsolv):
    de = DualExtension(kronecker(2), linear_algebra(2))
    assert de.lam.dim == notsolv.ambient.dim
    assert sorted(str(r) for r in de.lam.relations) == ["a1**a1", "a1**a2"]
    ex = verify_exact_sequence(de)
    assert (ex["dim_hh1_lambda"], ex["dim_J_over_I"], ex["dim_hh1_B"]) == (4, 1, 3)
    assert relative_hh1(de.pair_b, lie=False).dim == 1


def test_mixed_paths_follow_b_then_reversed():
    de = DualExtension(linear_algebra(3), linear_algebra(3))
    for p in de.mixed_basis():
        kinds = ["b" if a in de.b_arrows else "o" for a in p.arrows]
        assert kinds == sorted(kinds)


def test_arrow_of_a_joining_components_of_b():
    # B has no arrows; A's only arrow joins two of its components
    B = make_algebra(3, [], name="B")
    A = make_algebra(3, [("a1", 1, 2)], name="A")
    de = DualExtension(B, A)
    ex = verify_exact_sequence(de)
    assert ex["component_defect"] == 1
    assert (ex["dim_hh1_lambda"], ex["dim_J_over_I"], ex["dim_hh1_B"]) == (0, 1, 0)
    assert not ex["dimension_identity"]
    assert ex["corrected_identity"]


def test_validation():
    with pytest.raises(NotDirected):
        DualExtension(make_algebra(2, [("b", 2, 1)]), linear_algebra(2))
    with pytest.raises(VertexMismatch):
        DualExtension(linear_algebra(2), linear_algebra(3))


seeds = st.integers(0, 10 ** 6)


@settings(max_examples=30)
@given(seeds)
def test_exact_sequence_on_compatible_pairs(seed):
    B, A = random_directed_pair(random.Random(seed), within_components=True)
    de = DualExtension(B, A)
    assert de.component_defect == 0
    assert verify_exact_sequence(de)["ok"]
    assert degree_one_split(de)["ok"]


@settings(max_examples=30)
@given(seeds)
def test_corrected_identity_on_all_pairs(seed):
    ex = verify_exact_sequence(DualExtension(*random_directed_pair(random.Random(seed))))
    assert ex["corrected_identity"] and ex["J_is_ideal"]
