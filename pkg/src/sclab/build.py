"""Constructors for the builtin families, direct products and permutation groups."""

from __future__ import annotations

import re
from itertools import permutations
from typing import Iterable, Sequence

import numpy as np

from .budget import CONSTRUCTION_CAP
from .errors import InvalidParameter, OrderCapExceeded, ParseError
from .group import Group, validate_table

FAMILIES = ("cyclic", "dihedral", "symmetric", "alternating", "quaternion", "dicyclic")
MAX_PERM_DEGREE = 7


def family_order(family: str, n: int | None = None) -> int:
    """Order of a builtin family member, checking parameter bounds."""
    if family == "cyclic":
        if n is None or n < 1:
            raise InvalidParameter(f"cyclic group needs n >= 1, got {n}")
        return n
    if family == "dihedral":
        if n is None or n < 1:
            raise InvalidParameter(f"dihedral group needs n >= 1, got {n}")
        return 2 * n
    if family in ("symmetric", "alternating"):
        if n is None or not 1 <= n <= MAX_PERM_DEGREE:
            raise InvalidParameter(f"{family} group needs 1 <= n <= {MAX_PERM_DEGREE}, got {n}")
        fact = 1
        for k in range(2, n + 1):
            fact *= k
        return fact if family == "symmetric" or n < 2 else fact // 2
    if family == "quaternion":
        return 8
    if family == "dicyclic":
        if n is None or n < 2:
            raise InvalidParameter(f"dicyclic group needs m >= 2, got {n}")
        return 4 * n
    raise InvalidParameter(f"unknown family {family!r}")


def _power_name(base: str, k: int) -> str:
    if k == 0:
        return ""
    return base if k == 1 else f"{base}{k}"


def cyclic(n: int) -> Group:
    idx = np.arange(n)
    table = (idx[:, None] + idx[None, :]) % n
    names = ["e"] + [_power_name("a", k) for k in range(1, n)]
    return Group(table, tuple(names), f"Z{n}")


def dihedral(n: int) -> Group:
    """Symmetries of the n-gon, order 2n; index k is r^k, index n+k is r^k s."""
    k = np.arange(2 * n)
    rot, refl = k % n, k // n
    # r^i s^a * r^j s^b = r^(i + (-1)^a j) s^(a+b)
    sign = np.where(refl == 1, -1, 1)
    r = (rot[:, None] + sign[:, None] * rot[None, :]) % n
    s = (refl[:, None] + refl[None, :]) % 2
    table = r + n * s
    names = ["e"] + [_power_name("r", i) for i in range(1, n)]
    names += [_power_name("r", i) + "s" for i in range(n)]
    return Group(table, tuple(names), f"D{n}")


def dicyclic(m: int) -> Group:
    """Dic_m of order 4m: a^(2m) = 1, x^2 = a^m, x a x^-1 = a^-1.

    Index k is a^k, index 2m+k is a^k x.
    """
    two_m = 2 * m
    k = np.arange(2 * two_m)
    pw, xb = k % two_m, k // two_m
    sign = np.where(xb == 1, -1, 1)
    e = pw[:, None] + sign[:, None] * pw[None, :]
    both = (xb[:, None] == 1) & (xb[None, :] == 1)
    e = (e + m * both) % two_m
    x = (xb[:, None] + xb[None, :]) % 2
    table = e + two_m * x
    names = ["e"] + [_power_name("a", i) for i in range(1, two_m)]
    names += [_power_name("a", i) + "x" for i in range(two_m)]
    return Group(table, tuple(names), f"Dic{m}")


def _quat_mul(p, q):
    a1, b1, c1, d1 = p
    a2, b2, c2, d2 = q
    return (
        a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
        a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
        a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
        a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
    )


def quaternion() -> Group:
    names = ("1", "-1", "i", "-i", "j", "-j", "k", "-k")
    units = []
    for axis in range(4):
        for sign in (1, -1):
            q = [0, 0, 0, 0]
            q[axis] = sign
            units.append(tuple(q))
    pos = {u: i for i, u in enumerate(units)}
    table = [[pos[_quat_mul(p, q)] for q in units] for p in units]
    return Group(np.array(table), names, "Q8")


# --- permutations -----------------------------------------------------------

def cycles_of(perm: Sequence[int]) -> tuple[tuple[int, ...], ...]:
    """Nontrivial cycles (1-based, each starting at its least point) of a 0-based image tuple."""
    seen = [False] * len(perm)
    out = []
    for start in range(len(perm)):
        if seen[start] or perm[start] == start:
            seen[start] = True
            continue
        cyc = []
        i = start
        while not seen[i]:
            seen[i] = True
            cyc.append(i + 1)
            i = perm[i]
        out.append(tuple(cyc))
    return tuple(out)


def cycle_string(perm: Sequence[int]) -> str:
    """Cycle notation, identity is ``()``."""
    return "".join("(" + " ".join(map(str, c)) + ")" for c in cycles_of(perm)) or "()"


def _perm_table(perms: np.ndarray) -> np.ndarray:
    """Cayley table for a list of permutations; product p*q applies p first."""
    count, m = perms.shape
    base = m ** np.arange(m)[::-1]
    codes = perms @ base
    order = np.argsort(codes)
    sorted_codes = codes[order]
    table = np.empty((count, count), dtype=np.int64)
    for j in range(count):
        comp = perms[j][perms]  # row i: q[p_i[x]]
        c = comp @ base
        loc = np.searchsorted(sorted_codes, c)
        table[:, j] = order[loc]
    return table


def _perm_group(perms: list[tuple[int, ...]], label: str) -> Group:
    arr = np.array(perms, dtype=np.int64).reshape(len(perms), -1)
    if arr.shape[1] == 0:
        return Group(np.zeros((1, 1), dtype=np.int64), ("()",), label)
    return Group(_perm_table(arr), tuple(cycle_string(p) for p in perms), label)


def _parity(p: Sequence[int]) -> int:
    seen = [False] * len(p)
    swaps = 0
    for i in range(len(p)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        swaps += length - 1
    return swaps % 2


def symmetric(n: int, *, even_only: bool = False) -> Group:
    """S_n (or A_n); elements ordered by their cycle lists, so S3 reads
    (), (1 2), (1 2 3), (1 3), (1 3 2), (2 3)."""
    perms = [p for p in permutations(range(n)) if not even_only or _parity(p) == 0]
    perms.sort(key=cycles_of)
    return _perm_group(perms, f"{'A' if even_only else 'S'}{n}")


def alternating(n: int) -> Group:
    return symmetric(n, even_only=True)


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str) -> list[tuple[int, ...]]:
    """Parse ``(1 2)(3 4)`` into a list of 1-based cycles; ``()`` is the identity."""
    s = text.strip()
    cycles = []
    pos = 0
    for m in _CYCLE_RE.finditer(s):
        if s[pos:m.start()].strip():
            raise ParseError(f"malformed cycle notation {text!r}")
        pos = m.end()
        body = m.group(1).replace(",", " ").split()
        pts = []
        for tok in body:
            try:
                v = int(tok)
            except ValueError:
                raise ParseError(f"non-integer point {tok!r} in {text!r}") from None
            if v <= 0:
                raise ParseError(f"point {v} must be >= 1 in {text!r}")
            pts.append(v)
        cycles.append(tuple(pts))
    if pos != len(s) or not s:
        raise ParseError(f"malformed cycle notation {text!r}")
    seen: set[int] = set()
    for c in cycles:
        for v in c:
            if v in seen:
                raise ParseError(f"point {v} repeated in {text!r}")
            seen.add(v)
    return cycles


def cycles_to_perm(cycles: Iterable[Sequence[int]], m: int) -> tuple[int, ...]:
    img = list(range(m))
    for c in cycles:
        for a, b in zip(c, c[1:] + c[:1]):
            img[a - 1] = b - 1
    return tuple(img)


def from_permutation_generators(gens: Sequence[Sequence[Sequence[int]] | Sequence[int]],
                                degree: int | None = None,
                                cap: int = CONSTRUCTION_CAP,
                                label: str = "") -> Group:
    """Breadth-first closure of permutation generators.

    Each generator is either a list of 1-based cycles (``[(1, 2), (3, 4)]``)
    or a cycle-notation string.  Elements appear in discovery order with the
    identity ``()`` first.
    """
    cyc_gens = [parse_cycles(g) if isinstance(g, str) else [tuple(c) for c in g] for g in gens]
    m = max([max(c) for g in cyc_gens for c in g if c] + [degree or 0, 0])
    for g in cyc_gens:
        seen: set[int] = set()
        for c in g:
            if any(v <= 0 for v in c):
                raise InvalidParameter(f"points must be >= 1: {c}")
            if seen.intersection(c) or len(set(c)) != len(c):
                raise InvalidParameter(f"generator {g} is not a bijection (repeated point)")
            seen.update(c)
    perms = [cycles_to_perm(g, m) for g in cyc_gens]
    ident = tuple(range(m))
    found = {ident: 0}
    elems = [ident]
    frontier = [ident]
    while frontier:
        nxt = []
        for u in frontier:
            for p in perms:
                v = tuple(p[u[i]] for i in range(m))
                if v not in found:
                    found[v] = len(elems)
                    elems.append(v)
                    nxt.append(v)
                    if len(elems) > cap:
                        raise OrderCapExceeded(len(elems), cap)
        frontier = nxt
    return _perm_group(elems, label)


# --- combinators ------------------------------------------------------------

def direct_product(g1: Group, g2: Group, cap: int = CONSTRUCTION_CAP) -> Group:
    n1, n2 = g1.order, g2.order
    if n1 * n2 > cap:
        raise OrderCapExceeded(n1 * n2, cap)
    i = np.arange(n1 * n2)
    a, b = i // n2, i % n2
    table = g1.table[a[:, None], a[None, :]] * n2 + g2.table[b[:, None], b[None, :]]
    names = tuple(f"{g1.names[x]}|{g2.names[y]}" for x, y in zip(a, b))
    label = ""
    if g1.label and g2.label:
        label = f"{g1.label} x {g2.label}"
    return Group(table, names, label)


def builtin_group(family: str, n: int | None = None, cap: int = CONSTRUCTION_CAP,
                  validate: bool = False) -> Group:
    """Construct a member of a builtin family.

    >>> builtin_group("cyclic", 6).names
    ('e', 'a', 'a2', 'a3', 'a4', 'a5')
    """
    order = family_order(family, n)
    if order > cap:
        raise OrderCapExceeded(order, cap)
    if family == "cyclic":
        g = cyclic(n)
    elif family == "dihedral":
        g = dihedral(n)
    elif family == "symmetric":
        g = symmetric(n)
    elif family == "alternating":
        g = alternating(n)
    elif family == "quaternion":
        g = quaternion()
    else:
        g = dicyclic(n)
    if validate:
        validate_table(g.table)
    return g
