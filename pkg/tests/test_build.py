import pytest

from sclab import (
    InvalidParameter,
    OrderCapExceeded,
    ParseError,
    are_isomorphic,
    builtin_group,
    direct_product,
    from_permutation_generators,
    parse_cycles,
    validate_table,
)
from sclab.build import cycle_string, cycles_to_perm


def test_cyclic_six_names():
    g = builtin_group("cyclic", 6)
    assert g.order == 6 and g.names == ("e", "a", "a2", "a3", "a4", "a5")


def test_symmetric_three_is_nonabelian_in_fixed_order():
    g = builtin_group("symmetric", 3)
    assert g.order == 6 and not g.is_abelian
    assert g.names == ("()", "(1 2)", "(1 2 3)", "(1 3)", "(1 3 2)", "(2 3)")


def test_trivial_group():
    g = builtin_group("cyclic", 1)
    assert g.table.tolist() == [[0]]


@pytest.mark.parametrize("family, n, order", [
    ("dihedral", 4, 8), ("dihedral", 1, 2), ("alternating", 4, 12), ("alternating", 1, 1),
    ("quaternion", None, 8), ("dicyclic", 3, 12), ("symmetric", 4, 24),
])
def test_family_orders(family, n, order):
    g = builtin_group(family, n)
    assert g.order == order
    validate_table(g.table)


@pytest.mark.parametrize("family, n", [("cyclic", 0), ("symmetric", 8), ("dicyclic", 1), ("klein", 4)])
def test_bad_parameters(family, n):
    with pytest.raises(InvalidParameter):
        builtin_group(family, n)


def test_order_cap():
    with pytest.raises(OrderCapExceeded):
        builtin_group("cyclic", 50, cap=10)


def test_direct_products():
    z2, z3 = builtin_group("cyclic", 2), builtin_group("cyclic", 3)
    assert are_isomorphic(direct_product(z2, z3), builtin_group("cyclic", 6)) is not None
    s3 = builtin_group("symmetric", 3)
    assert are_isomorphic(direct_product(builtin_group("cyclic", 1), s3), s3) is not None
    p = direct_product(s3, z2)
    assert p.order == 12 and not p.is_abelian


def test_permutation_generators():
    s3 = from_permutation_generators([parse_cycles("(1 2)"), parse_cycles("(1 2 3)")])
    assert are_isomorphic(s3, builtin_group("symmetric", 3)) is not None
    d4 = from_permutation_generators([parse_cycles("(1 2 3 4)"), parse_cycles("(1 3)")])
    assert are_isomorphic(d4, builtin_group("dihedral", 4)) is not None
    assert from_permutation_generators([]).order == 1


def test_permutation_cap():
    with pytest.raises(OrderCapExceeded):
        from_permutation_generators([parse_cycles("(1 2 3 4 5)"), parse_cycles("(1 2)")], cap=100)


@pytest.mark.parametrize("text", ["(1 1 2)", "(1 2", "(0 1)", "(a b)", "(1 2)(2 3)"])
def test_bad_cycles(text):
    with pytest.raises(ParseError):
        parse_cycles(text)


def test_cycle_round_trip():
    p = cycles_to_perm(parse_cycles("(1 3)(2 4 5)"), 5)
    assert cycle_string(p) == "(1 3)(2 4 5)"
    assert cycle_string(cycles_to_perm(parse_cycles("()"), 3)) == "()"
