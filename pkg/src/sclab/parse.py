"""Group expressions and the two text input formats.

Expression grammar (family letters are case-insensitive, whitespace is
ignored, ``×`` may replace ``x``)::

    expr   := term (('x' | '×') term)*        left-associative
    term   := family | '(' expr ')'
    family := ('Z' | 'C') int | 'D' int | 'S' int | 'A' int | 'Q8' | 'Dic' int
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

import numpy as np

from .budget import CONSTRUCTION_CAP
from .build import builtin_group, direct_product, family_order, from_permutation_generators, parse_cycles
from .errors import GroupValidationError, InvalidParameter, OrderCapExceeded, ParseError
from .group import Group, from_table


@dataclass(frozen=True)
class Family:
    kind: str
    param: int | None = None

    def __str__(self) -> str:
        prefix = {"cyclic": "Z", "dihedral": "D", "symmetric": "S",
                  "alternating": "A", "dicyclic": "Dic"}
        if self.kind == "quaternion":
            return "Q8"
        return f"{prefix[self.kind]}{self.param}"


@dataclass(frozen=True)
class Product:
    left: "GroupExpr"
    right: "GroupExpr"

    def __str__(self) -> str:
        right = f"({self.right})" if isinstance(self.right, Product) else str(self.right)
        return f"{self.left} x {right}"


GroupExpr = Union[Family, Product]

_FAMILY_START = frozenset({"Z", "C", "D", "S", "A", "Q8", "Dic", "("})


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.i = 0

    def offset(self) -> int:
        return len(self.text[:self.i].encode("utf-8"))

    def fail(self, msg: str, expected=frozenset()) -> ParseError:
        return ParseError(msg, offset=self.offset(), expected=frozenset(expected))

    def skip_ws(self) -> None:
        while self.i < len(self.text) and self.text[self.i].isspace():
            self.i += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.i] if self.i < len(self.text) else ""

    def integer(self) -> int:
        self.skip_ws()
        start = self.i
        while self.i < len(self.text) and self.text[self.i] in "0123456789":
            self.i += 1
        if start == self.i:
            raise self.fail("expected an integer parameter", {"<int>"})
        return int(self.text[start:self.i])

    def expr(self) -> GroupExpr:
        node = self.term()
        while self.peek() in ("x", "X", "×"):
            self.i += 1
            node = Product(node, self.term())
        return node

    def term(self) -> GroupExpr:
        c = self.peek()
        if c == "(":
            self.i += 1
            inner = self.expr()
            if self.peek() != ")":
                raise self.fail("unbalanced parenthesis", {")", "x"})
            self.i += 1
            return inner
        up = c.upper()
        if up in ("Z", "C"):
            self.i += 1
            return Family("cyclic", self.integer())
        if up == "D":
            self.i += 1
            if self.text[self.i:self.i + 2].lower() == "ic":
                self.i += 2
                return Family("dicyclic", self.integer())
            return Family("dihedral", self.integer())
        if up == "S":
            self.i += 1
            return Family("symmetric", self.integer())
        if up == "A":
            self.i += 1
            return Family("alternating", self.integer())
        if up == "Q":
            self.i += 1
            if self.integer() != 8:
                raise self.fail("only Q8 is supported", {"8"})
            return Family("quaternion")
        raise self.fail("expected a group" if c else "unexpected end of input", _FAMILY_START)


def parse_group_expr(text: str) -> GroupExpr:
    p = _Parser(text)
    node = p.expr()
    if p.peek():
        raise p.fail(f"unexpected character {p.peek()!r}", {"x", "<end>"})
    _check_params(node)
    return node


def _check_params(node: GroupExpr) -> None:
    if isinstance(node, Product):
        _check_params(node.left)
        _check_params(node.right)
    else:
        family_order(node.kind, node.param)


def expr_order(node: GroupExpr) -> int:
    if isinstance(node, Product):
        return expr_order(node.left) * expr_order(node.right)
    return family_order(node.kind, node.param)


def evaluate(node: GroupExpr, cap: int = CONSTRUCTION_CAP) -> Group:
    order = expr_order(node)
    if order > cap:
        raise OrderCapExceeded(order, cap)
    if isinstance(node, Product):
        g = direct_product(evaluate(node.left, cap), evaluate(node.right, cap), cap)
    else:
        g = builtin_group(node.kind, node.param, cap)
    return Group(g.table, g.names, str(node))


def group_from_expr(text: str, cap: int = CONSTRUCTION_CAP) -> Group:
    return evaluate(parse_group_expr(text), cap)


# --- files --------------------------------------------------------------------

def _text_lines(data: bytes | str) -> list[tuple[int, str]]:
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"not UTF-8: {exc}") from None
    out = []
    for no, raw in enumerate(data.splitlines(), start=1):
        s = raw.strip()
        if s and not s.startswith("#"):
            out.append((no, s))
    return out


def parse_cayley_file(data: bytes | str, label: str = "") -> Group:
    lines = _text_lines(data)
    if not lines:
        raise ParseError("empty file: missing 'order <n>' line", line=1)
    no, head = lines[0]
    parts = head.split()
    if len(parts) != 2 or parts[0] != "order":
        raise ParseError("malformed header, expected 'order <n>'", line=no)
    try:
        n = int(parts[1])
    except ValueError:
        raise ParseError(f"non-integer order {parts[1]!r}", line=no) from None
    if n < 1:
        raise ParseError("order must be positive", line=no)
    rest = lines[1:]
    names = None
    if rest and rest[0][1].split()[0] == "names":
        no, s = rest[0]
        names = s.split()[1:]
        if len(names) != n:
            raise ParseError(f"names line has {len(names)} names, expected {n}", line=no)
        if len(set(names)) != n:
            raise ParseError("names must be distinct", line=no)
        rest = rest[1:]
    if len(rest) != n:
        last = rest[-1][0] if rest else no
        raise ParseError(f"expected {n} table rows, found {len(rest)}", line=last)
    rows = []
    row_lines = []
    for no, s in rest:
        toks = s.split()
        if len(toks) != n:
            raise ParseError(f"row has {len(toks)} entries, expected {n}", line=no)
        try:
            rows.append([int(t) for t in toks])
        except ValueError:
            bad = next(t for t in toks if not t.lstrip("-").isdigit())
            raise ParseError(f"non-integer token {bad!r}", line=no) from None
        row_lines.append(no)
    try:
        return from_table(np.array(rows, dtype=np.int64), names, label)
    except GroupValidationError as exc:
        where = row_lines[exc.row] if exc.row is not None else row_lines[0]
        raise ParseError(f"{exc.kind}: {exc}", line=where) from exc
    except InvalidParameter as exc:
        raise ParseError(str(exc), line=no) from exc


def parse_perm_gens(data: bytes | str, cap: int = CONSTRUCTION_CAP, label: str = "") -> Group:
    gens = []
    for no, s in _text_lines(data):
        try:
            gens.append(parse_cycles(s))
        except ParseError as exc:
            raise ParseError(str(exc), line=no) from None
    return from_permutation_generators(gens, cap=cap, label=label)
