"""Finite groups stored as Cayley tables over element indices.

Element ``i`` of a :class:`Group` is the integer ``i``; ``table[i, j]`` is the
index of ``i*j``.  The identity always sits at index 0.  Subsets of a group
(subgroups, cosets, class blocks) are plain sorted tuples of indices, see
:func:`elset`.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .errors import GroupValidationError, InvalidParameter

ElementSet = tuple[int, ...]


def elset(items: Iterable[int]) -> ElementSet:
    """Canonical form of a subset: strictly increasing tuple of ints."""
    return tuple(sorted({int(i) for i in items}))


@dataclass(frozen=True, eq=False)
class Group:
    table: np.ndarray
    names: tuple[str, ...]
    label: str = ""

    def __post_init__(self):
        t = np.ascontiguousarray(self.table, dtype=np.int64)
        t.setflags(write=False)
        object.__setattr__(self, "table", t)
        object.__setattr__(self, "names", tuple(self.names))
        if t.ndim != 2 or t.shape[0] != t.shape[1] or t.shape[0] != len(self.names):
            raise InvalidParameter("table must be n x n with n names")

    @property
    def order(self) -> int:
        return len(self.names)

    @property
    def identity(self) -> int:
        return 0

    def __len__(self) -> int:
        return self.order

    def __repr__(self) -> str:
        label = self.label or "Group"
        return f"<{label} of order {self.order}>"

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def inv(self, a: int) -> int:
        return int(self.inverses[a])

    def index(self, name: str) -> int:
        try:
            return self._name_index[name]
        except KeyError:
            raise KeyError(f"no element named {name!r} in {self!r}") from None

    def name_set(self, s: Iterable[int]) -> list[str]:
        return [self.names[i] for i in s]

    def with_names(self, names: Sequence[str] | str, label: str | None = None) -> "Group":
        """Same table, new display names (a whitespace-separated string is split)."""
        if isinstance(names, str):
            names = names.split()
        return Group(self.table, tuple(names), self.label if label is None else label)

    @cached_property
    def _name_index(self) -> dict[str, int]:
        return {nm: i for i, nm in enumerate(self.names)}

    @cached_property
    def inverses(self) -> np.ndarray:
        rows, cols = np.nonzero(self.table == 0)
        inv = np.empty(self.order, dtype=np.int64)
        inv[rows] = cols
        inv.setflags(write=False)
        return inv

    @cached_property
    def orders(self) -> np.ndarray:
        n = self.order
        out = np.zeros(n, dtype=np.int64)
        power = np.arange(n)
        k = 1
        todo = np.ones(n, dtype=bool)
        while todo.any():
            hit = todo & (power == 0)
            out[hit] = k
            todo &= ~hit
            power = self.table[power, np.arange(n)]
            k += 1
        out[0] = 1
        out.setflags(write=False)
        return out

    @cached_property
    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.table, self.table.T))

    @cached_property
    def center(self) -> ElementSet:
        comm = self.table == self.table.T
        return tuple(int(i) for i in np.flatnonzero(comm.all(axis=1)))


def elem_order(g: Group, a: int) -> int:
    return int(g.orders[a])


def is_abelian(g: Group) -> bool:
    return g.is_abelian


def center(g: Group) -> ElementSet:
    return g.center


def centralizer(g: Group, s: Iterable[int]) -> ElementSet:
    s = list(s)
    if not s:
        return tuple(range(g.order))
    t = g.table
    ok = (t[:, s] == t[s, :].T).all(axis=1)
    return tuple(int(i) for i in np.flatnonzero(ok))


def commute_witness(g: Group, xs: Iterable[int], ys: Iterable[int]) -> tuple[int, int] | None:
    """First pair (x, y) with xy != yx, or None."""
    xs, ys = list(xs), list(ys)
    if not xs or not ys:
        return None
    t = g.table
    bad = np.argwhere(t[np.ix_(xs, ys)] != t[np.ix_(ys, xs)].T)
    if bad.size == 0:
        return None
    i, j = bad[0]
    return xs[i], ys[j]


def is_abelian_set(g: Group, s: Iterable[int]) -> bool:
    s = list(s)
    return commute_witness(g, s, s) is None


# --- validation -------------------------------------------------------------

def find_identity(table: np.ndarray) -> int:
    n = table.shape[0]
    ar = np.arange(n)
    rows = (table == ar[None, :]).all(axis=1)
    cols = (table == ar[:, None]).all(axis=0)
    both = np.flatnonzero(rows & cols)
    if both.size == 0:
        raise GroupValidationError("NoIdentity", (), "no two-sided identity element")
    return int(both[0])


def _check_associative(table: np.ndarray) -> None:
    # Light's test: elements a with (xa)y = x(ay) for all x, y are closed under
    # product, so checking a set of elements that generates everything suffices.
    n = table.shape[0]
    covered = np.zeros(n, dtype=bool)
    gens: list[int] = []
    while not covered.all():
        a = int(np.flatnonzero(~covered)[0])
        lhs = table[table[:, a], :]
        rhs = table[:, table[a, :]]
        bad = np.argwhere(lhs != rhs)
        if bad.size:
            x, y = (int(v) for v in bad[0])
            raise GroupValidationError(
                "NotAssociative", (x, a, y), f"({x}*{a})*{y} != {x}*({a}*{y})"
            )
        gens.append(a)
        covered[:] = False
        covered[gens] = True
        frontier = np.array(gens)
        while frontier.size:
            prods = table[np.ix_(frontier, gens)].ravel()
            fresh = np.unique(prods[~covered[prods]])
            covered[fresh] = True
            frontier = fresh


def validate_table(raw) -> int:
    """Check every group axiom; return the identity index.

    Raises :class:`GroupValidationError` with a witness tuple on the first
    violated axiom, checked in the order closure, Latin square, identity,
    inverses, associativity.
    """
    table = np.asarray(raw)
    if table.ndim != 2 or table.shape[0] != table.shape[1] or table.shape[0] == 0:
        raise GroupValidationError("NotClosed", (), "table must be a non-empty square array")
    n = table.shape[0]
    if not np.issubdtype(table.dtype, np.integer):
        raise GroupValidationError("NotClosed", (), "table entries must be integers")
    out = np.argwhere((table < 0) | (table >= n))
    if out.size:
        i, j = (int(v) for v in out[0])
        raise GroupValidationError("NotClosed", (i, j, int(table[i, j])),
                                   f"product {i}*{j} = {table[i, j]} outside 0..{n - 1}")
    for axis, what in ((1, "row"), (0, "column")):
        srt = np.sort(table, axis=axis)
        ok = (srt == np.arange(n)[None, :]) if axis == 1 else (srt == np.arange(n)[:, None])
        bad = np.argwhere(~ok)
        if bad.size:
            line = int(bad[0][0] if axis == 1 else bad[0][1])
            vec = table[line, :] if axis == 1 else table[:, line]
            vals, counts = np.unique(vec, return_counts=True)
            dup = int(vals[counts > 1][0])
            j1, j2 = (int(v) for v in np.flatnonzero(vec == dup)[:2])
            raise GroupValidationError(
                "NotLatin", (line, j1, j2),
                f"{what} {line} repeats entry {dup} at positions {j1} and {j2}",
                row=line if axis == 1 else j1,
            )
    e = find_identity(table)
    for a in range(n):
        b = int(np.flatnonzero(table[a] == e)[0])
        if table[b, a] != e:
            raise GroupValidationError("NoInverse", (a, b, int(table[b, a])),
                                       f"element {a} has no two-sided inverse")
    _check_associative(table)
    return e


def from_table(raw, names: Sequence[str] | None = None, label: str = "") -> Group:
    """Validate a Cayley table and relabel it so the identity is index 0."""
    table = np.asarray(raw)
    if table.dtype == object or not np.issubdtype(table.dtype, np.integer):
        try:
            table = table.astype(np.int64)
        except (TypeError, ValueError):
            raise GroupValidationError("NotClosed", (), "table entries must be integers") from None
    e = validate_table(table)
    n = table.shape[0]
    if names is None:
        names = [f"g{i}" for i in range(n)]
    names = list(names)
    if len(names) != n or len(set(names)) != n or not all(names):
        raise InvalidParameter("names must be n distinct non-empty strings")
    if e != 0:
        perm = np.array([e] + [i for i in range(n) if i != e])
        pos = np.empty(n, dtype=np.int64)
        pos[perm] = np.arange(n)
        table = pos[table[np.ix_(perm, perm)]]
        names = [names[i] for i in perm]
    return Group(table, tuple(names), label)


def relabel_map(raw_identity: int, n: int) -> np.ndarray:
    """Old index -> new index used by :func:`from_table`."""
    perm = [raw_identity] + [i for i in range(n) if i != raw_identity]
    pos = np.empty(n, dtype=np.int64)
    pos[perm] = np.arange(n)
    return pos
