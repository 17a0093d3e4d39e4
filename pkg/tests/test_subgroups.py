import pytest

from sclab import (
    NotASubgroup,
    NotNormal,
    are_isomorphic,
    conjugacy_classes,
    cosets,
    double_coset,
    enumerate_subgroups,
    is_normal,
    quotient,
)
from sclab.subgroups import normality_witness, require_subgroup, subgroup_generated

from conftest import idx


def test_generated(z6, s3):
    assert subgroup_generated(z6, [z6.index("a2")]) == idx(z6, "e a2 a4")
    assert subgroup_generated(s3, []) == (0,)
    assert subgroup_generated(s3, idx(s3, "A B")) == tuple(range(6))


def test_z6_subgroups(z6):
    subs = enumerate_subgroups(z6)
    assert [s.elems for s in subs] == [
        idx(z6, "e"), idx(z6, "e a3"), idx(z6, "e a2 a4"), tuple(range(6))]
    assert [s.subgroup_id for s in subs] == [0, 1, 2, 3]


def test_s3_subgroups_in_stable_id_order(s3):
    subs = enumerate_subgroups(s3)
    assert [s.elems for s in subs] == [
        idx(s3, "E"), idx(s3, "E A"), idx(s3, "E C"), idx(s3, "E K"),
        idx(s3, "E B D"), tuple(range(6))]
    assert [s.is_abelian for s in subs] == [True] * 5 + [False]
    assert [s.is_normal for s in subs] == [True, False, False, False, True, True]


def test_q8_subgroups(q8):
    subs = enumerate_subgroups(q8)
    assert [s.order for s in subs] == [1, 2, 4, 4, 4, 8]
    assert subs[1].elems == idx(q8, "1 -1") and subs[1].is_central


def test_counts_against_brute_force(d4):
    assert len(enumerate_subgroups(d4)) == 10


def test_cosets_and_normality(z6, s3):
    assert cosets(z6, idx(z6, "e a2 a4")) == [idx(z6, "e a2 a4"), idx(z6, "a a3 a5")]
    assert is_normal(s3, idx(s3, "E B D"))
    assert not is_normal(s3, idx(s3, "E A"))
    x, n, c = normality_witness(s3, idx(s3, "E A"))
    assert c not in idx(s3, "E A")


def test_left_and_right_cosets_differ_for_non_normal(s3):
    h = idx(s3, "E A")
    assert sorted(cosets(s3, h, "left")) != sorted(cosets(s3, h, "right"))


def test_quotients(z6, s3):
    assert quotient(z6, idx(z6, "e a2 a4")).group.order == 2
    assert quotient(s3, idx(s3, "E B D")).group.order == 2
    assert are_isomorphic(quotient(s3, (0,)).group, s3) is not None
    with pytest.raises(NotNormal):
        quotient(s3, idx(s3, "E A"))


def test_require_subgroup(s3):
    with pytest.raises(NotASubgroup):
        require_subgroup(s3, idx(s3, "E A C"))


def test_double_cosets(z6, s3):
    h = idx(s3, "E A")
    assert double_coset(s3, h, s3.index("C"), h) == idx(s3, "B C D K")
    assert double_coset(s3, (0,), 3, (0,)) == (3,)
    k = idx(z6, "e a3")
    assert double_coset(z6, k, z6.index("a"), k) == idx(z6, "a a4")


def test_conjugacy_classes(z6, s3, d4):
    assert sorted(conjugacy_classes(s3)) == sorted([idx(s3, "E"), idx(s3, "A C K"), idx(s3, "B D")])
    assert all(len(c) == 1 for c in conjugacy_classes(z6))
    assert sorted(len(c) for c in conjugacy_classes(d4)) == [1, 1, 2, 2, 2]


def test_enumeration_is_memoized_and_stable(s3):
    assert enumerate_subgroups(s3) == enumerate_subgroups(s3)
