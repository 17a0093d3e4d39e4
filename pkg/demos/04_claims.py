"""
Checking claims mechanically
============================

Each checker returns a report with a status and, for failures, a witness
that can be replayed independently.
"""

from sclab import group_from_expr, replay, run_all_claims
from sclab.claims import check_order_lemma
from sclab.classes import compare_classes

z6 = group_from_expr("Z6")
H = [z6.index("e"), z6.index("a3")]

# the order-preservation statement, under the reading recorded in the notes
rep = check_order_lemma(z6, H)
print(rep.status, rep.lhs, rep.rhs, rep.witness)
print(rep.notes)
print("replays:", replay(z6, rep))

# all claims over all subgroups of a group, tallied by status
tally = {}
for r in run_all_claims(group_from_expr("D4")):
    tally.setdefault(r.claim_id, {}).setdefault(r.status, 0)
    tally[r.claim_id][r.status] += 1
for cid, counts in tally.items():
    print(cid, counts)

# sandwich classes are not double cosets
s3 = group_from_expr("S3").with_names("E A B C D K")
c = compare_classes(s3, [0, s3.index("A")], s3.index("C"))
print(s3.name_set(c.sandwich), s3.name_set(c.double_coset), c.equal)
