"""
Self-classes and the class group
================================

g(a) = {x a x : x in H}.  Over an abelian H these classes partition G, and
sometimes the blocks multiply like a group.
"""

from sclab import class_family, family_group, g_identity, group_from_expr, setwise_product

z6 = group_from_expr("Z6")
H = [z6.index(n) for n in ("e", "a3")]
K = [z6.index(n) for n in ("e", "a2", "a4")]

# over H every class is a single element
print(class_family(z6, H, "self").named_blocks())

# over K two blocks remain; the identity class is the set of squares of K
fam = class_family(z6, K, "self")
print(fam.named_blocks(), "g(e) =", z6.name_set(g_identity(z6, K)))

# block times block is again a block, so the family is a group of order 2
odd = fam.block_of(z6.index("a"))
print(z6.name_set(setwise_product(z6, odd, odd)))
cg = family_group(z6, fam)
print("class group order:", cg.order)
print(cg.as_group().names)
print(cg.table)

# conjugacy self-classes over an abelian group never merge anything
print(class_family(z6, K, "conj").named_blocks())
