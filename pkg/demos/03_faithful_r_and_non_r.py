"""
Faithful subgroups, R-groups and Non-R groups
=============================================
"""

from sclab import builtin_group, faithful_subgroups, group_from_expr, is_non_r_group, is_r_group

s3 = builtin_group("symmetric", 3).with_names("E A B C D K", label="S3")

# which abelian subgroups give a self-class family that forms a group?
for v in faithful_subgroups(s3):
    why = "" if v.faithful else f"refused: {v.refusal.detail}"
    print(s3.name_set(v.subgroup.elems), v.faithful, why)

# Z6 is an R-group: the class group over {e,a2,a4} matches the one over Z6 itself
z6 = group_from_expr("Z6")
r = is_r_group(z6)
print("R-group:", r.is_r_group, z6.name_set(r.subgroup.elems), r.class_group.order, r.whole.order)

# S3 is a Non-R group: the sandwich classes over all of S3 form a group of order 2
nr = is_non_r_group(s3)
print("Non-R:", nr.is_non_r, nr.class_group.family.named_blocks())

# the same happens for D4 and Q8, with class groups of order 4
for name in ("D4", "Q8", "A4"):
    g = group_from_expr(name)
    v = is_non_r_group(g)
    print(name, v.is_non_r, v.class_group.order if v.is_non_r else "-")
