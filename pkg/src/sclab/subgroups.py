"""Subgroups, cosets, quotients, double cosets and conjugacy classes."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Literal

import numpy as np

from .budget import SUBGROUP_CAP, Budget, as_budget
from .errors import NotASubgroup, NotNormal, OrderCapExceeded
from .group import ElementSet, Group, elset, is_abelian_set


@dataclass(frozen=True)
class SubgroupInfo:
    elems: ElementSet
    is_abelian: bool
    is_normal: bool
    is_central: bool
    subgroup_id: int

    @property
    def order(self) -> int:
        return len(self.elems)


def _mask(n: int, s: Iterable[int]) -> np.ndarray:
    m = np.zeros(n, dtype=bool)
    m[list(s)] = True
    return m


def subgroup_generated(g: Group, seed: Iterable[int]) -> ElementSet:
    """Smallest subgroup containing ``seed``.

    Closing {e} under right multiplication by the seed is enough in a
    finite group, inverses being positive powers.
    """
    gens = sorted({int(s) for s in seed} - {0})
    inside = np.zeros(g.order, dtype=bool)
    inside[0] = True
    if not gens:
        return (0,)
    frontier = np.array([0])
    while frontier.size:
        prods = g.table[np.ix_(frontier, gens)].ravel()
        fresh = np.unique(prods[~inside[prods]])
        inside[fresh] = True
        frontier = fresh
    return tuple(int(i) for i in np.flatnonzero(inside))


def is_subgroup(g: Group, s: Iterable[int]) -> bool:
    s = list(s)
    if not s or 0 not in s:
        return False
    m = _mask(g.order, s)
    return bool(m[g.table[np.ix_(s, s)]].all())


def require_subgroup(g: Group, s: Iterable[int]) -> ElementSet:
    s = elset(s)
    if any(i < 0 or i >= g.order for i in s):
        raise NotASubgroup(s, "(index out of range)")
    if not is_subgroup(g, s):
        raise NotASubgroup(s)
    return s


def normality_witness(g: Group, h: Iterable[int]) -> tuple[int, int, int] | None:
    """(x, n, x^-1 n x) with the conjugate outside ``h``, or None when normal."""
    h = list(h)
    m = _mask(g.order, h)
    t, inv = g.table, g.inverses
    # conj[x, k] = x^-1 * h[k] * x
    conj = t[t[inv][:, h], np.arange(g.order)[:, None]]
    bad = np.argwhere(~m[conj])
    if bad.size == 0:
        return None
    x, k = (int(v) for v in bad[0])
    return x, h[k], int(conj[x, k])


def cosets(g: Group, h: Iterable[int], side: Literal["left", "right"] = "left") -> list[ElementSet]:
    """Cosets aH (left) or Ha (right), sorted lexicographically."""
    h = require_subgroup(g, h)
    hs = list(h)
    seen = np.zeros(g.order, dtype=bool)
    out = []
    for a in range(g.order):
        if seen[a]:
            continue
        block = g.table[a, hs] if side == "left" else g.table[hs, a]
        seen[block] = True
        out.append(elset(block))
    return sorted(out)


def is_normal(g: Group, h: Iterable[int]) -> bool:
    h = require_subgroup(g, h)
    return set(cosets(g, h, "left")) == set(cosets(g, h, "right"))


def enumerate_subgroups(g: Group, budget: Budget | int | None = None,
                        cap: int = SUBGROUP_CAP) -> list[SubgroupInfo]:
    """Every subgroup of ``g``, ordered by (size, element list).

    Starts from the cyclic subgroups and joins each subgroup with each cyclic
    subgroup until nothing new appears; every subgroup is a join of cyclic
    ones, so this reaches them all.
    """
    if g.order > cap:
        raise OrderCapExceeded(g.order, cap)
    cached = g.__dict__.get("_subgroups")
    if cached is not None:
        return list(cached)
    budget = as_budget(budget)
    n = g.order
    cyclic: dict[ElementSet, int] = {}
    for a in range(n):
        c = subgroup_generated(g, [a])
        cyclic.setdefault(c, a)
    cyc_items = sorted(cyclic.items(), key=lambda kv: (len(kv[0]), kv[0]))
    cyc_masks = [(_mask(n, c), gen) for c, gen in cyc_items]

    # subgroup -> generator list
    found: dict[ElementSet, list[int]] = {c: ([gen] if gen else []) for c, gen in cyc_items}
    queue = list(found)
    while queue:
        budget.check("subgroup enumeration")
        s = queue.pop()
        smask = _mask(n, s)
        sgens = found[s]
        for _, gen in cyc_masks:
            if smask[gen]:
                continue
            j = subgroup_generated(g, sgens + [gen])
            if j not in found:
                found[j] = sgens + [gen]
                queue.append(j)
    subs = sorted(found, key=lambda s: (len(s), s))
    z = set(g.center)
    out = []
    for i, s in enumerate(subs):
        out.append(SubgroupInfo(
            elems=s,
            is_abelian=is_abelian_set(g, s),
            is_normal=normality_witness(g, s) is None,
            is_central=set(s) <= z,
            subgroup_id=i,
        ))
    # memoized on the instance like a cached_property; Group is otherwise immutable
    g.__dict__["_subgroups"] = tuple(out)
    return out


def normal_subgroups(g: Group, budget: Budget | int | None = None) -> list[SubgroupInfo]:
    return [s for s in enumerate_subgroups(g, budget) if s.is_normal]


def subgroup_as_group(g: Group, h: Iterable[int]) -> Group:
    """The subgroup ``h`` as a standalone Group (element k is ``h[k]``)."""
    h = require_subgroup(g, h)
    pos = np.full(g.order, -1, dtype=np.int64)
    pos[list(h)] = np.arange(len(h))
    table = pos[g.table[np.ix_(h, h)]]
    return Group(table, tuple(g.names[i] for i in h), "")


@dataclass(frozen=True)
class Quotient:
    group: Group
    projection: np.ndarray  # element of the parent -> coset index
    cosets: tuple[ElementSet, ...]


def quotient(g: Group, n: Iterable[int]) -> Quotient:
    """G/N over the left cosets of N, ordered by least element (N itself is 0)."""
    n = require_subgroup(g, n)
    w = normality_witness(g, n)
    if w is not None:
        raise NotNormal(w)
    blocks = cosets(g, n, "left")
    proj = np.empty(g.order, dtype=np.int64)
    for k, b in enumerate(blocks):
        proj[list(b)] = k
    reps = np.array([b[0] for b in blocks])
    table = proj[g.table[np.ix_(reps, reps)]]
    if len(n) == 1:
        names = tuple(g.names[b[0]] for b in blocks)
    else:
        names = tuple("{" + ",".join(g.names[i] for i in b) + "}" for b in blocks)
    proj.setflags(write=False)
    return Quotient(Group(table, names, ""), proj, tuple(blocks))


def double_coset(g: Group, h: Iterable[int], a: int, k: Iterable[int]) -> ElementSet:
    h = require_subgroup(g, h)
    k = require_subgroup(g, k)
    ha = g.table[list(h), a]
    return elset(g.table[np.ix_(ha, k)].ravel())


def conjugacy_classes(g: Group) -> list[ElementSet]:
    """Orbits under conjugation, sorted by least element."""
    t, inv = g.table, g.inverses
    allx = np.arange(g.order)
    seen = np.zeros(g.order, dtype=bool)
    out = []
    for a in range(g.order):
        if seen[a]:
            continue
        orbit = t[t[inv, a], allx]
        seen[orbit] = True
        out.append(elset(orbit))
    return out


def set_product(g: Group, a: Iterable[int], b: Iterable[int]) -> ElementSet:
    a, b = list(a), list(b)
    if not a or not b:
        return ()
    return elset(g.table[np.ix_(a, b)].ravel())


__all__ = [
    "SubgroupInfo", "Quotient",
    "subgroup_generated", "is_subgroup", "require_subgroup", "normality_witness",
    "cosets", "is_normal", "enumerate_subgroups", "normal_subgroups",
    "subgroup_as_group", "quotient", "double_coset", "conjugacy_classes", "set_product",
]
