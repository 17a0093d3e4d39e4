"""
Groups as Cayley tables
=======================

Build a few small groups, look at their tables and list their subgroups.
"""

import numpy as np

from sclab import builtin_group, conjugacy_classes, enumerate_subgroups, group_from_expr

# cyclic group of order 6: element k is a^k, the table is addition mod 6
z6 = group_from_expr("Z6")
print(z6, z6.names)
print(z6.table)

# S3 from the builtin family, relabeled with single letters
s3 = builtin_group("symmetric", 3).with_names("E A B C D K", label="S3")
print(s3.names, "abelian:", s3.is_abelian, "centre:", s3.name_set(s3.center))

# element orders come straight from the table
print(dict(zip(s3.names, s3.orders.tolist())))

# every subgroup gets a stable id, smallest first
for s in enumerate_subgroups(s3):
    print(s.subgroup_id, s3.name_set(s.elems), "normal" if s.is_normal else "")

# conjugacy classes, sizes divide the order
print([s3.name_set(c) for c in conjugacy_classes(s3)])

# products and permutation groups use the same representation
g = group_from_expr("S3 x Z2")
print(g.order, g.is_abelian, np.count_nonzero(g.orders == 2), "involutions")
