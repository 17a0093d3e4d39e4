"""A deterministic catalog of small groups and scans over it.

The catalog is generated from families (cyclic, symmetric, alternating, Q8,
dihedral, dicyclic) plus binary direct products of earlier entries, then
deduplicated up to isomorphism.  It does not contain every group of a given
order: for instance only some of the 14 groups of order 16 can be reached
this way.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from math import factorial
from pathlib import Path
from typing import Iterable

from .budget import SUBGROUP_CAP, Budget, default_budget_ms
from .claims import CLAIM_IDS, FAILS, STATUSES, run_all_claims
from .classes import is_non_r_group
from .errors import BudgetExceeded, InvalidParameter, ParseError
from .group import Group
from .iso import are_isomorphic, invariants
from .parse import Family, GroupExpr, Product, evaluate

CATALOG_CAP = 200
DEDUP_BUDGET_MS = 5_000
FORMAT_VERSION = 1
CATALOG_DESCRIPTION = (
    "family-generated: cyclic, symmetric, alternating, Q8, dihedral, dicyclic and binary "
    "direct products of smaller entries, deduplicated up to isomorphism; not exhaustive"
)


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    expr: GroupExpr
    order: int
    dedup: str = "unique"  # "unverified" when an isomorphism test ran out of budget
    group: Group | None = field(default=None, compare=False, repr=False)

    def build(self) -> Group:
        return self.group if self.group is not None else evaluate(self.expr)


def _family_candidates(n: int) -> list[tuple[int, Family]]:
    """(priority, expr) for the families of order n; lower priority wins a dedup tie."""
    out = [(0, Family("cyclic", n))]
    for k in range(3, 8):
        if factorial(k) == n:
            out.append((1, Family("symmetric", k)))
        if k >= 4 and factorial(k) // 2 == n:
            out.append((2, Family("alternating", k)))
    if n == 8:
        out.append((3, Family("quaternion")))
    if n % 2 == 0 and n // 2 >= 3:
        out.append((4, Family("dihedral", n // 2)))
    if n % 4 == 0 and n // 4 >= 2:
        out.append((5, Family("dicyclic", n // 4)))
    # degenerate members, isomorphic to something above or to a product
    if n in (2, 4):
        out.append((7, Family("dihedral", n // 2)))
    for k in (1, 2):
        if factorial(k) == n:
            out.append((7, Family("symmetric", k)))
    for k in (1, 2, 3):
        if max(factorial(k) // 2, 1) == n:
            out.append((7, Family("alternating", k)))
    return out


def build_catalog(max_order: int, dedup_budget_ms: int = DEDUP_BUDGET_MS) -> list[CatalogEntry]:
    """Catalog entries of order <= max_order sorted by (order, name)."""
    if not 1 <= max_order <= CATALOG_CAP:
        raise InvalidParameter(f"max_order must be in 1..{CATALOG_CAP}, got {max_order}")
    entries: list[CatalogEntry] = []
    for n in range(1, max_order + 1):
        cands: list[tuple[int, GroupExpr]] = list(_family_candidates(n))
        smaller = [e for e in entries if 2 <= e.order and n % e.order == 0]
        for i, a in enumerate(smaller):
            for b in smaller[i:]:
                if a.order * b.order == n:
                    cands.append((6, Product(a.expr, b.expr)))
        cands.sort(key=lambda c: c[0])
        kept: list[tuple[CatalogEntry, tuple]] = []
        for _, expr in cands:
            g = evaluate(expr)
            inv = invariants(g)
            flag = "unique"
            duplicate = False
            for other, oinv in kept:
                if oinv != inv:
                    continue
                try:
                    if are_isomorphic(g, other.group, Budget(dedup_budget_ms)) is not None:
                        duplicate = True
                        break
                except BudgetExceeded:
                    flag = "unverified"
            if not duplicate:
                kept.append((CatalogEntry(str(expr), expr, n, flag, g), inv))
        entries.extend(sorted((e for e, _ in kept), key=lambda e: e.name))
    return entries


# --- scan reports -------------------------------------------------------------------

FINDING_KEYS = ("group", "order", "kind", "verdict", "witness_subgroup",
                "class_group_order", "claim_id", "status", "notes")


@dataclass(frozen=True)
class Finding:
    group: str
    order: int
    kind: str  # "non_r_scan" | "claim"
    verdict: str
    witness_subgroup: tuple[str, ...] = ()
    class_group_order: int | None = None
    claim_id: str | None = None
    status: str = "ok"
    notes: str = ""

    def to_dict(self) -> dict:
        d = {k: getattr(self, k) for k in FINDING_KEYS}
        d["witness_subgroup"] = list(self.witness_subgroup)
        return d


@dataclass(frozen=True)
class ScanReport:
    max_order: int
    budgets: dict
    catalog_size: int
    findings: tuple[Finding, ...] = ()
    claim_summary: dict = field(default_factory=dict)
    catalog: str = CATALOG_DESCRIPTION

    @property
    def counterexamples(self) -> list[Finding]:
        return [f for f in self.findings if f.kind == "claim" and f.status == FAILS]

    def non_r_groups(self) -> list[Finding]:
        return [f for f in self.findings if f.kind == "non_r_scan" and f.verdict == "non-r"]


def _compact(obj) -> str:
    return json.dumps(obj, ensure_ascii=False, separators=(",", ":"))


def _non_r_finding(entry: CatalogEntry, budget_ms: int | None) -> Finding:
    g = entry.build()
    if g.is_abelian:
        return Finding(entry.name, entry.order, "non_r_scan", "not-applicable",
                       notes="abelian: no nonabelian subgroup")
    if g.order > SUBGROUP_CAP:
        return Finding(entry.name, entry.order, "non_r_scan", "skipped", status="skipped",
                       notes=f"order above subgroup enumeration cap {SUBGROUP_CAP}")
    try:
        v = is_non_r_group(g, Budget(budget_ms))
    except BudgetExceeded as exc:
        return Finding(entry.name, entry.order, "non_r_scan", "budget-exceeded",
                       status="budget-exceeded", notes=str(exc))
    notes = (f"witness_partition={'true' if v.is_non_r else 'n/a'}; "
             f"whole_group_partition={str(v.whole_partition).lower()}; "
             f"whole_group_forms_group={str(v.whole_forms_group).lower()}")
    if not v.is_non_r:
        return Finding(entry.name, entry.order, "non_r_scan", "not-non-r", notes=notes)
    return Finding(entry.name, entry.order, "non_r_scan", "non-r",
                   witness_subgroup=tuple(g.names[i] for i in v.subgroup.elems),
                   class_group_order=v.class_group.order, notes=notes)


def scan(catalog: Iterable[CatalogEntry], *, max_order: int | None = None,
         non_r: bool = True, claims: Iterable[str] | None = (),
         budget_ms: int | None = None, pair_cap: int = 16) -> ScanReport:
    """Run the Non-R scan and/or the claim checkers on every catalog entry.

    ``claims=None`` runs every claim, an empty iterable runs none.  Each entry
    gets its own budget so one expensive group cannot stall the scan.
    """
    catalog = list(catalog)
    budget_ms = default_budget_ms() if budget_ms is None else budget_ms
    claim_ids = list(CLAIM_IDS) if claims is None else [c for c in CLAIM_IDS if c in set(claims)]
    if claims is not None:
        unknown = set(claims) - set(CLAIM_IDS)
        if unknown:
            raise ValueError(f"unknown claim ids: {sorted(unknown)}")
    summary = {cid: {s: 0 for s in STATUSES} for cid in claim_ids}
    findings: list[Finding] = []
    for entry in catalog:
        if non_r:
            findings.append(_non_r_finding(entry, budget_ms))
        if not claim_ids:
            continue
        g = entry.build()
        if g.order > SUBGROUP_CAP:
            continue
        for rep in run_all_claims(g, Budget(budget_ms), claim_ids, pair_cap):
            summary[rep.claim_id][rep.status] += 1
            if rep.status in (FAILS, "budget-exceeded"):
                findings.append(Finding(
                    entry.name, entry.order, "claim",
                    "counterexample" if rep.status == FAILS else "incomplete",
                    witness_subgroup=rep.subgroups[0] if rep.subgroups else (),
                    claim_id=rep.claim_id, status=rep.status,
                    notes=_compact({"subgroups": [list(s) for s in rep.subgroups],
                                    "lhs": rep.lhs, "rhs": rep.rhs,
                                    "witness": rep.witness, "notes": rep.notes}),
                ))
    findings.sort(key=lambda f: (f.order, f.group))
    if max_order is None:
        max_order = max((e.order for e in catalog), default=0)
    budgets = {"entry_budget_ms": budget_ms, "pair_cap": pair_cap}
    return ScanReport(max_order, budgets, len(catalog), tuple(findings), summary)


def scan_non_selfclass(catalog: Iterable[CatalogEntry], budget_ms: int | None = None,
                       max_order: int | None = None) -> ScanReport:
    return scan(catalog, max_order=max_order, non_r=True, claims=(), budget_ms=budget_ms)


def scan_claims(catalog: Iterable[CatalogEntry], claim_ids: Iterable[str] | None = None,
                budget_ms: int | None = None, max_order: int | None = None) -> ScanReport:
    return scan(catalog, max_order=max_order, non_r=False, claims=claim_ids, budget_ms=budget_ms)


# --- persistence --------------------------------------------------------------------

def dumps_report(report: ScanReport) -> str:
    header = {
        "format_version": FORMAT_VERSION,
        "max_order": report.max_order,
        "budgets": report.budgets,
        "catalog_size": report.catalog_size,
        "claim_summary": report.claim_summary,
        "catalog": report.catalog,
    }
    lines = [_compact(header)] + [_compact(f.to_dict()) for f in report.findings]
    return "\n".join(lines) + "\n"


def persist_report(report: ScanReport, path: str | Path) -> None:
    Path(path).write_text(dumps_report(report), encoding="utf-8")


def loads_report(text: str) -> ScanReport:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise ParseError("empty report", line=1)

    def obj(no: int, raw: str) -> dict:
        try:
            d = json.loads(raw)
        except json.JSONDecodeError as exc:
            raise ParseError(f"malformed JSON: {exc.msg}", line=no) from None
        if not isinstance(d, dict):
            raise ParseError("expected a JSON object", line=no)
        return d

    head = obj(1, lines[0])
    for key in ("format_version", "max_order", "budgets", "catalog_size"):
        if key not in head:
            raise ParseError(f"header missing key {key!r}", line=1)
    if head["format_version"] != FORMAT_VERSION:
        raise ParseError(f"unsupported format_version {head['format_version']!r}", line=1)
    findings = []
    for no, raw in enumerate(lines[1:], start=2):
        d = obj(no, raw)
        if tuple(d) != FINDING_KEYS:
            raise ParseError(f"finding keys {list(d)} differ from {list(FINDING_KEYS)}", line=no)
        d["witness_subgroup"] = tuple(d["witness_subgroup"])
        findings.append(Finding(**d))
    return ScanReport(head["max_order"], head["budgets"], head["catalog_size"],
                      tuple(findings), head.get("claim_summary", {}),
                      head.get("catalog", CATALOG_DESCRIPTION))


def load_report(path: str | Path) -> ScanReport:
    return loads_report(Path(path).read_text(encoding="utf-8"))
