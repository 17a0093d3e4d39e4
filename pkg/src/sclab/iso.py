"""Isomorphism search between Cayley-table groups.

Cheap invariants reject most non-isomorphic pairs.  The rest goes to a
backtracking search: pick a generating set of the first group, try images
with matching element signatures, and extend each partial assignment along
the Cayley graph until it either conflicts or covers the whole group.
"""

from __future__ import annotations

from collections import Counter

import numpy as np

from .budget import Budget, as_budget
from .group import Group
from .subgroups import conjugacy_classes, subgroup_generated


def element_signatures(g: Group) -> np.ndarray:
    """Per-element (order, conjugacy class size, number of square roots) rows."""
    cls_size = np.empty(g.order, dtype=np.int64)
    for c in conjugacy_classes(g):
        cls_size[list(c)] = len(c)
    roots = np.bincount(np.diagonal(g.table), minlength=g.order)
    return np.stack([g.orders, cls_size, roots], axis=1)


def invariants(g: Group) -> tuple:
    sig = element_signatures(g)
    return (
        g.order,
        g.is_abelian,
        len(g.center),
        tuple(sorted(Counter(map(tuple, sig.tolist())).items())),
    )


def is_homomorphism(g1: Group, g2: Group, mapping) -> bool:
    phi = np.asarray(mapping)
    return bool(np.array_equal(phi[g1.table], g2.table[phi[:, None], phi[None, :]]))


def _generators(g: Group, candidates: dict[int, np.ndarray]) -> list[int]:
    # greedy: each step take the element outside the current subgroup with the
    # fewest candidate images, larger order breaking ties
    gens: list[int] = []
    inside = {0}
    while len(inside) < g.order:
        best = min(
            (a for a in range(g.order) if a not in inside),
            key=lambda a: (len(candidates[a]), -int(g.orders[a]), a),
        )
        gens.append(best)
        inside = set(subgroup_generated(g, gens))
    return gens


def _extend(g1: Group, g2: Group, gens: list[int], images: list[int]) -> np.ndarray | None:
    """Homomorphism on <gens> sending gens[i] -> images[i], or None on conflict."""
    n1 = g1.order
    phi = np.full(n1, -1, dtype=np.int64)
    used = np.zeros(g2.order, dtype=bool)
    phi[0] = 0
    used[0] = True
    frontier = [0]
    t1, t2 = g1.table, g2.table
    while frontier:
        nxt = []
        for u in frontier:
            pu = phi[u]
            for gen, img in zip(gens, images):
                v = t1[u, gen]
                w = t2[pu, img]
                if phi[v] == -1:
                    if used[w]:
                        return None
                    phi[v] = w
                    used[w] = True
                    nxt.append(v)
                elif phi[v] != w:
                    return None
        frontier = nxt
    return phi


def are_isomorphic(g1: Group, g2: Group, budget: Budget | int | None = None) -> np.ndarray | None:
    """Return an isomorphism g1 -> g2 as an index array, or None if none exists.

    Raises :class:`~sclab.errors.BudgetExceeded` when the search runs out of
    time, which is not the same as a negative answer.
    """
    budget = as_budget(budget)
    if g1.order != g2.order:
        return None
    if invariants(g1) != invariants(g2):
        return None
    s1, s2 = element_signatures(g1), element_signatures(g2)
    by_sig: dict[tuple, list[int]] = {}
    for b, row in enumerate(map(tuple, s2.tolist())):
        by_sig.setdefault(row, []).append(b)
    candidates = {a: np.array(by_sig.get(tuple(s1[a].tolist()), []), dtype=np.int64)
                  for a in range(g1.order)}
    gens = _generators(g1, candidates)
    if not gens:
        return np.zeros(1, dtype=np.int64)

    images: list[int] = []

    def search(depth: int) -> np.ndarray | None:
        budget.check("isomorphism search")
        if depth == len(gens):
            phi = _extend(g1, g2, gens, images)
            if phi is not None and (phi >= 0).all():
                return phi
            return None
        for img in candidates[gens[depth]]:
            images.append(int(img))
            phi = _extend(g1, g2, gens[:depth + 1], images)
            if phi is not None:
                found = search(depth + 1)
                if found is not None:
                    return found
            images.pop()
        return None

    phi = search(0)
    if phi is None:
        return None
    if not is_homomorphism(g1, g2, phi):  # defensive; _extend already guarantees it
        return None
    return phi
