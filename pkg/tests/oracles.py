"""Brute-force reference computations on concrete group elements.

Nothing here touches Cayley tables or the ``sclab`` package: elements are
plain Python values (permutation tuples, quaternion 4-tuples, residues) and
every set is computed by direct enumeration.  The frozen values in the test
suite were produced with these helpers.
"""

from __future__ import annotations

from itertools import permutations, product


def perm_mul(p, q):
    """Apply p first, then q (0-based image tuples)."""
    return tuple(q[p[i]] for i in range(len(p)))


def perm_inv(p):
    out = [0] * len(p)
    for i, v in enumerate(p):
        out[v] = i
    return tuple(out)


def perm_closure(gens, m):
    ident = tuple(range(m))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for u in frontier:
            for g in gens:
                v = perm_mul(u, g)
                if v not in seen:
                    seen.add(v)
                    nxt.append(v)
        frontier = nxt
    return seen


def quat_mul(p, q):
    a1, b1, c1, d1 = p
    a2, b2, c2, d2 = q
    return (
        a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
        a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
        a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
        a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
    )


class Concrete:
    """A finite group given by an element list and a multiplication callable."""

    def __init__(self, elements, mul, identity):
        self.elements = list(elements)
        self.mul = mul
        self.e = identity

    def inv(self, a):
        return next(b for b in self.elements if self.mul(a, b) == self.e)

    def order(self, a):
        k, x = 1, a
        while x != self.e:
            x = self.mul(x, a)
            k += 1
        return k

    def sandwich(self, a, H):
        return frozenset(self.mul(self.mul(x, a), x) for x in H)

    def conj(self, a, H):
        return frozenset(self.mul(self.mul(self.inv(x), a), x) for x in H)

    def family(self, H, conj=False):
        f = self.conj if conj else self.sandwich
        return {f(a, H) for a in self.elements}

    def setprod(self, A, B):
        return frozenset(self.mul(c, d) for c in A for d in B)

    def family_group_order(self, H, conj=False):
        """Number of blocks if the family forms a group under setwise product, else None."""
        blocks = self.family(H, conj)
        if sum(len(b) for b in blocks) != len(self.elements):
            return None
        for A in blocks:
            for B in blocks:
                if self.setprod(A, B) not in blocks:
                    return None
        # closed, associative (setwise product of subsets is associative);
        # look for identity and inverses
        ident = [I for I in blocks if all(self.setprod(I, B) == B == self.setprod(B, I) for B in blocks)]
        if len(ident) != 1:
            return None
        I = ident[0]
        for A in blocks:
            if not any(self.setprod(A, B) == I for B in blocks):
                return None
        return len(blocks)

    def center(self):
        return frozenset(
            z for z in self.elements if all(self.mul(z, x) == self.mul(x, z) for x in self.elements)
        )

    def conjugacy_classes(self):
        return self.family(self.elements, conj=True)

    def is_abelian_set(self, S):
        return all(self.mul(x, y) == self.mul(y, x) for x in S for y in S)

    def subgroups(self):
        """All subgroups by closing every subset of size <= 2 generators (enough for order <= 8)."""
        els = self.elements
        subs = set()
        for a, b in product(els, repeat=2):
            seen = {self.e}
            frontier = [self.e]
            while frontier:
                nxt = []
                for u in frontier:
                    for g in (a, b):
                        v = self.mul(u, g)
                        if v not in seen:
                            seen.add(v)
                            nxt.append(v)
                frontier = nxt
            subs.add(frozenset(seen))
        return subs


def cyclic(n):
    return Concrete(range(n), lambda a, b: (a + b) % n, 0)


def symmetric(m):
    return Concrete(permutations(range(m)), perm_mul, tuple(range(m)))


def dihedral_square():
    # symmetries of a square acting on its vertices 0..3
    r = (1, 2, 3, 0)
    s = (0, 3, 2, 1)
    return Concrete(perm_closure([r, s], 4), perm_mul, (0, 1, 2, 3))


def quaternion():
    units = []
    for axis in range(4):
        for sign in (1, -1):
            q = [0, 0, 0, 0]
            q[axis] = sign
            units.append(tuple(q))
    return Concrete(units, quat_mul, (1, 0, 0, 0))


def direct(g1, g2):
    els = list(product(g1.elements, g2.elements))
    return Concrete(
        els, lambda a, b: (g1.mul(a[0], b[0]), g2.mul(a[1], b[1])), (g1.e, g2.e)
    )
