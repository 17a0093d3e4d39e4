"""
Scanning the catalog
====================

Generate every catalog group up to a bound, look for Non-R groups and
write the findings as JSON Lines.
"""

import tempfile
from pathlib import Path

from sclab import build_catalog, load_report, persist_report, scan

catalog = build_catalog(16)
print(len(catalog), "groups;", [e.name for e in catalog if e.order == 12])

rep = scan(catalog, claims=["L3.9", "C1-doublecoset"])
for f in rep.non_r_groups():
    print(f"{f.group:>16}  order {f.order:>2}  class group {f.class_group_order}")
print(len(rep.counterexamples), "claim counterexamples")
print(rep.claim_summary)

# the report survives a round trip through disk unchanged
with tempfile.TemporaryDirectory() as d:
    path = Path(d) / "scan.jsonl"
    persist_report(rep, path)
    print(path.read_text().splitlines()[0])
    assert load_report(path) == rep
