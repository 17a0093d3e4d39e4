import numpy as np
import pytest

from sclab import BudgetExceeded, Budget, are_isomorphic, group_from_expr
from sclab.iso import invariants, is_homomorphism


def test_cyclic_six_vs_product():
    g, h = group_from_expr("Z6"), group_from_expr("Z2 x Z3")
    m = are_isomorphic(g, h)
    assert m is not None and is_homomorphism(g, h, m)
    assert sorted(m.tolist()) == list(range(6))


@pytest.mark.parametrize("a, b", [("Z4", "Z2 x Z2"), ("S3", "Z6"), ("D4", "Q8"), ("Z2 x Z4", "Z8")])
def test_not_isomorphic(a, b):
    assert are_isomorphic(group_from_expr(a), group_from_expr(b)) is None


@pytest.mark.parametrize("a, b", [("D3", "S3"), ("D6", "S3 x Z2"), ("Dic2", "Q8"), ("A3", "Z3")])
def test_isomorphic_pairs(a, b):
    g, h = group_from_expr(a), group_from_expr(b)
    m = are_isomorphic(g, h)
    assert m is not None and is_homomorphism(g, h, m)


def test_invariants_separate_d4_q8():
    assert invariants(group_from_expr("D4")) != invariants(group_from_expr("Q8"))


def test_shuffled_copy_is_found():
    g = group_from_expr("A4")
    rng = np.random.default_rng(3)
    p = np.concatenate([[0], 1 + rng.permutation(11)])
    q = np.argsort(p)
    from sclab import Group
    h = Group(p[g.table[np.ix_(q, q)]], tuple(g.names[i] for i in q))
    m = are_isomorphic(g, h)
    assert m is not None and is_homomorphism(g, h, m)


def test_expired_budget_raises():
    g, h = group_from_expr("S4"), group_from_expr("S4")
    with pytest.raises(BudgetExceeded):
        are_isomorphic(g, h, Budget(-1))
