import pytest

from sclab import (
    InvalidParameter,
    OrderCapExceeded,
    ParseError,
    are_isomorphic,
    builtin_group,
    group_from_expr,
    parse_cayley_file,
    parse_group_expr,
    parse_perm_gens,
)
from sclab.parse import Family, Product, expr_order

Z6_ROWS = ["0 1 2 3 4 5", "1 2 3 4 5 0", "2 3 4 5 0 1",
           "3 4 5 0 1 2", "4 5 0 1 2 3", "5 0 1 2 3 4"]


def test_family_node():
    node = parse_group_expr("S3")
    assert node == Family("symmetric", 3) and expr_order(node) == 6


def test_product_is_cyclic_six():
    node = parse_group_expr("Z2 x Z3")
    assert node == Product(Family("cyclic", 2), Family("cyclic", 3))
    assert are_isomorphic(group_from_expr("Z2 x Z3"), builtin_group("cyclic", 6)) is not None


def test_nested_lowercase_product():
    node = parse_group_expr("z2 X (d4 x q8)")
    assert isinstance(node.right, Product)
    assert expr_order(node) == 128


def test_left_associative():
    assert parse_group_expr("Z2 x Z3 x Z4") == parse_group_expr("(Z2 x Z3) x Z4")
    assert parse_group_expr("Z2 x Z3 x Z4") != parse_group_expr("Z2 x (Z3 x Z4)")


def test_synonyms():
    assert parse_group_expr("C4 × Dic3") == parse_group_expr("Z4 x Dic3")


@pytest.mark.parametrize("text, offset", [
    ("Z", 1), ("", 0), ("S3 x", 4), ("(Z2 x Z3", 8), ("Z2 Z3", 3), ("Q7", 2), ("× ?", 0),
])
def test_syntax_errors_carry_offsets(text, offset):
    with pytest.raises(ParseError) as exc:
        parse_group_expr(text)
    assert exc.value.offset == offset
    assert exc.value.expected


def test_offsets_count_utf8_bytes():
    with pytest.raises(ParseError) as exc:
        parse_group_expr("Z2 × ?")
    assert exc.value.offset == len("Z2 × ".encode("utf-8"))


@pytest.mark.parametrize("text", ["Z0", "S9", "Dic1"])
def test_out_of_range_parameters(text):
    with pytest.raises(InvalidParameter):
        parse_group_expr(text)


def test_cap_applies_to_products():
    with pytest.raises(OrderCapExceeded):
        group_from_expr("S7 x Z2")


def test_label_is_canonical_expression():
    assert group_from_expr("z2 x (c3×s3)").label == "Z2 x (Z3 x S3)"


def test_cayley_file_round_trip():
    g = parse_cayley_file("# cyclic\norder 6\n" + "\n".join(Z6_ROWS) + "\n")
    assert g.order == 6 and g.names[0] == "g0"


def test_cayley_file_names_and_identity_elsewhere():
    # Z2 x Z2 with the identity stored as element 3
    text = "order 4\nnames p q r e\n3 2 1 0\n2 3 0 1\n1 0 3 2\n0 1 2 3\n"
    g = parse_cayley_file(text)
    assert g.names[0] == "e"
    assert all(g.mul(a, a) == 0 for a in range(4))


def test_row_count_error_names_a_line():
    text = "order 6\n" + "\n".join(Z6_ROWS[:5]) + "\n"
    with pytest.raises(ParseError) as exc:
        parse_cayley_file(text)
    assert exc.value.line == 6


@pytest.mark.parametrize("text, line", [
    ("", 1),
    ("size 2\n0 1\n1 0\n", 1),
    ("order 2\n0 1\n1 x\n", 3),
    ("order 2\n0 1\n1 0 1\n", 3),
    ("order 2\nnames e\n0 1\n1 0\n", 2),
    ("order 3\n0 1 2\n1 2 0\n2 0 0\n", 4),
])
def test_cayley_file_errors(text, line):
    with pytest.raises(ParseError) as exc:
        parse_cayley_file(text)
    assert exc.value.line == line


def test_perm_file():
    g = parse_perm_gens(b"(1 2)\n(1 2 3)\n")
    assert are_isomorphic(g, builtin_group("symmetric", 3)) is not None
    assert parse_perm_gens("()").order == 1


def test_perm_file_error_line():
    with pytest.raises(ParseError) as exc:
        parse_perm_gens("# gens\n(1 2)\n(1 1 2)\n")
    assert exc.value.line == 3
