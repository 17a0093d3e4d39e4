"""Command-line front end: ``sclab <command> --group EXPR ...``.

Exit codes: 0 success, 1 usage error, 2 parse error, 3 budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .budget import CONSTRUCTION_CAP, Budget, default_budget_ms
from .catalog import CATALOG_CAP, build_catalog, dumps_report, scan
from .claims import CLAIM_IDS, run_all_claims
from .classes import (
    ClassGroup,
    ClassKind,
    class_family,
    compare_classes,
    faithful_subgroups,
    family_group,
    is_non_r_group,
    is_r_group,
)
from .errors import (
    BudgetExceeded,
    GroupValidationError,
    InvalidParameter,
    OrderCapExceeded,
    ParseError,
    SelfClassOverNonabelianH,
)
from .group import Group
from .parse import group_from_expr, parse_cayley_file, parse_perm_gens
from .subgroups import enumerate_subgroups

EXIT_OK, EXIT_USAGE, EXIT_PARSE, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


# --- output helpers -------------------------------------------------------------

def _fmt_set(g: Group, s) -> str:
    return "{" + ", ".join(g.names[i] for i in s) + "}"


def _table(headers: list[str], rows: list[list]) -> str:
    cells = [[str(c) for c in r] for r in rows]
    widths = [max([len(h)] + [len(r[i]) for r in cells]) for i, h in enumerate(headers)]
    out = ["  ".join(h.ljust(w) for h, w in zip(headers, widths)).rstrip()]
    out.append("  ".join("-" * w for w in widths))
    for r in cells:
        out.append("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip())
    return "\n".join(out)


def _yn(flag: bool) -> str:
    return "yes" if flag else "no"


def _emit_json(obj) -> None:
    sys.stdout.write(json.dumps(obj, ensure_ascii=False, indent=2) + "\n")


# --- group resolution -------------------------------------------------------------

def _resolve_group(args) -> Group:
    cap = args.max_order or CONSTRUCTION_CAP
    if args.group is not None:
        return group_from_expr(args.group, cap)
    if args.table is not None:
        return parse_cayley_file(Path(args.table).read_bytes(), label=Path(args.table).name)
    return parse_perm_gens(Path(args.perms).read_bytes(), cap=cap, label=Path(args.perms).name)


def _subgroup(g: Group, args, budget):
    subs = enumerate_subgroups(g, budget)
    if args.subgroup_id is None:
        raise UsageError("--subgroup-id is required (see the 'subgroups' command)")
    if not 0 <= args.subgroup_id < len(subs):
        raise UsageError(f"subgroup id {args.subgroup_id} out of range 0..{len(subs) - 1}")
    return subs[args.subgroup_id]


def _element(g: Group, token: str) -> int:
    if token in g.names:
        return g.index(token)
    try:
        a = int(token)
    except ValueError:
        raise UsageError(f"no element named {token!r}") from None
    if not 0 <= a < g.order:
        raise UsageError(f"element index {a} out of range")
    return a


# --- commands -----------------------------------------------------------------------

def cmd_subgroups(args) -> int:
    g = _resolve_group(args)
    subs = enumerate_subgroups(g, Budget(args.budget_ms))
    if args.abelian_only:
        subs = [s for s in subs if s.is_abelian]
    if args.json:
        _emit_json({"group": g.label, "order": g.order, "subgroups": [
            {"id": s.subgroup_id, "order": s.order, "elements": g.name_set(s.elems),
             "abelian": s.is_abelian, "normal": s.is_normal, "central": s.is_central}
            for s in subs]})
    else:
        print(f"{g.label or 'group'} (order {g.order}): {len(subs)} subgroups")
        print(_table(["id", "order", "abelian", "normal", "central", "elements"],
                     [[s.subgroup_id, s.order, _yn(s.is_abelian), _yn(s.is_normal),
                       _yn(s.is_central), _fmt_set(g, s.elems)] for s in subs]))
    return EXIT_OK


def cmd_classes(args) -> int:
    g = _resolve_group(args)
    sub = _subgroup(g, args, Budget(args.budget_ms))
    try:
        fam = class_family(g, sub.elems, ClassKind.parse(args.kind))
    except SelfClassOverNonabelianH as exc:
        raise UsageError(f"--kind self needs an abelian subgroup: {exc}") from None
    res = family_group(g, fam)
    formed = isinstance(res, ClassGroup)
    if args.json:
        _emit_json({
            "group": g.label, "subgroup_id": sub.subgroup_id,
            "subgroup": g.name_set(sub.elems), "kind": fam.kind.value,
            "blocks": fam.named_blocks(), "block_sizes": [len(b) for b in fam.blocks],
            "class_of": {g.names[a]: fam.class_of[a] for a in range(g.order)},
            "is_partition": fam.is_partition,
            "overlap_witness": None if fam.overlap_witness is None else
            [g.names[fam.overlap_witness[0]], fam.overlap_witness[1], fam.overlap_witness[2]],
            "forms_group": formed,
            "class_group_order": res.order if formed else None,
        })
        return EXIT_OK
    print(f"{fam.kind.value} classes of {g.label or 'group'} over H = {_fmt_set(g, sub.elems)}")
    print(_table(["block", "size", "elements"],
                 [[i, len(b), _fmt_set(g, b)] for i, b in enumerate(fam.blocks)]))
    print(f"partition: {_yn(fam.is_partition)}")
    if formed:
        print(f"forms a group: yes (order {res.order})")
    else:
        print(f"forms a group: no ({res.detail})")
    return EXIT_OK


def cmd_classify(args) -> int:
    g = _resolve_group(args)
    budget = Budget(args.budget_ms)
    out: dict = {"group": g.label, "order": g.order, "complete": True}
    lines = []
    try:
        subs = enumerate_subgroups(g, budget)
        fv = faithful_subgroups(g, budget, subs)
        out["faithful"] = [
            {"id": v.subgroup.subgroup_id, "subgroup": g.name_set(v.subgroup.elems),
             "faithful": v.faithful,
             "class_group_order": v.class_group.order if v.faithful else None,
             "refusal": None if v.faithful else v.refusal.detail}
            for v in fv]
        lines.append("faithful subgroups (self-class family forms a group; "
                     "G is a self-class group over each 'yes'):")
        lines.append(_table(["id", "subgroup", "faithful", "class group", "refusal"], [
            [v.subgroup.subgroup_id, _fmt_set(g, v.subgroup.elems), _yn(v.faithful),
             v.class_group.order if v.faithful else "-",
             "-" if v.faithful else _refusal_text(g, v)] for v in fv]))
        r = is_r_group(g, budget, subs)
        whole = r.whole.order if isinstance(r.whole, ClassGroup) else None
        out["r_group"] = {
            "verdict": r.is_r_group,
            "whole_group_class_group_order": whole,
            "witness_subgroup": g.name_set(r.subgroup.elems) if r.is_r_group else None,
            "class_group_order": r.class_group.order if r.is_r_group else None,
        }
        if r.is_r_group:
            lines.append(f"R-group: yes, witness H = {_fmt_set(g, r.subgroup.elems)} "
                         f"(class groups of order {r.class_group.order})")
        elif whole is None:
            lines.append("R-group: no (sandwich classes over G do not form a group)")
        else:
            lines.append(f"R-group: no (no abelian H matches the order-{whole} class group over G)")
        nr = is_non_r_group(g, budget, subs)
        out["non_r"] = {
            "verdict": nr.is_non_r,
            "witness_subgroup": g.name_set(nr.subgroup.elems) if nr.is_non_r else None,
            "blocks": nr.class_group.family.named_blocks() if nr.is_non_r else None,
            "class_group_order": nr.class_group.order if nr.is_non_r else None,
        }
        if nr.is_non_r:
            blocks = ", ".join(_fmt_set(g, b) for b in nr.class_group.family.blocks)
            lines.append(f"Non-R: yes, H = {_fmt_set(g, nr.subgroup.elems)}, blocks {blocks}, "
                         f"class group of order {nr.class_group.order}")
        else:
            lines.append("Non-R: no")
        code = EXIT_OK
    except BudgetExceeded as exc:
        out["complete"] = False
        lines.append(f"PARTIAL: {exc}")
        code = EXIT_BUDGET
    if args.json:
        _emit_json(out)
    else:
        print(f"{g.label or 'group'} (order {g.order})")
        print("\n".join(lines))
    return code


def _refusal_text(g: Group, v) -> str:
    ref = v.refusal
    if ref.reason == "product":
        return f"block pair {ref.pair} -> {_fmt_set(g, ref.product)} not a block"
    return ref.detail


def _claims_arg(text: str | None):
    if text is None:
        return None
    ids = [c.strip() for c in text.split(",") if c.strip()]
    bad = [c for c in ids if c not in CLAIM_IDS]
    if bad:
        raise UsageError(f"unknown claim ids {bad}; known: {', '.join(CLAIM_IDS)}")
    return ids


def cmd_verify(args) -> int:
    g = _resolve_group(args)
    reps = run_all_claims(g, Budget(args.budget_ms), _claims_arg(args.claims), args.pair_cap)
    code = EXIT_BUDGET if any(r.status == "budget-exceeded" for r in reps) else EXIT_OK
    if args.json:
        _emit_json({"group": g.label, "reports": [r.to_dict() for r in reps]})
        return code
    print(_table(["claim", "status", "lhs", "rhs", "subgroups", "witness"], [
        [r.claim_id, r.status, "-" if r.lhs is None else r.lhs, "-" if r.rhs is None else r.rhs,
         " ".join("{" + ",".join(s) + "}" for s in r.subgroups),
         json.dumps(r.witness, ensure_ascii=False) if r.status != "holds" else ""]
        for r in reps]))
    notes = sorted({r.notes for r in reps if r.claim_id == "L3.9"})
    for n in notes:
        print(f"L3.9 {n}")
    return code


def cmd_scan(args) -> int:
    max_order = args.max_order or 8
    if max_order > CATALOG_CAP:
        raise UsageError(f"--max-order for scan is at most {CATALOG_CAP}")
    cat = build_catalog(max_order)
    rep = scan(cat, max_order=max_order, claims=_claims_arg(args.claims),
               budget_ms=args.budget_ms, pair_cap=args.pair_cap)
    text = dumps_report(rep)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    code = EXIT_OK
    if any(f.status == "budget-exceeded" for f in rep.findings):
        code = EXIT_BUDGET
    if args.json:
        sys.stdout.write(text)
        return code
    nr = rep.non_r_groups()
    print(f"catalog up to order {max_order}: {rep.catalog_size} groups")
    print(_table(["group", "order", "witness H", "class group"],
                 [[f.group, f.order, "{" + ",".join(f.witness_subgroup) + "}",
                   f.class_group_order] for f in nr]))
    print(f"counterexamples to claims: {len(rep.counterexamples)}")
    for cid, counts in rep.claim_summary.items():
        print(f"  {cid}: " + ", ".join(f"{k}={v}" for k, v in counts.items() if v))
    if args.out:
        print(f"report written to {args.out}")
    return code


def cmd_compare(args) -> int:
    g = _resolve_group(args)
    sub = _subgroup(g, args, Budget(args.budget_ms))
    if args.elem is None:
        raise UsageError("--elem is required")
    a = _element(g, args.elem)
    c = compare_classes(g, sub.elems, a)
    rows = [("sandwich class", c.sandwich), ("conjugacy self-class", c.conj_self),
            ("double coset HaH", c.double_coset), ("conjugacy class", c.conjugacy_class)]
    if args.json:
        _emit_json({"group": g.label, "subgroup": g.name_set(sub.elems), "element": g.names[a],
                    "sandwich": g.name_set(c.sandwich), "conj_self": g.name_set(c.conj_self),
                    "double_coset": g.name_set(c.double_coset),
                    "conjugacy_class": g.name_set(c.conjugacy_class), "equal": c.equal})
        return EXIT_OK
    print(f"a = {g.names[a]}, H = {_fmt_set(g, sub.elems)}")
    print(_table(["set", "size", "elements"], [[n, len(s), _fmt_set(g, s)] for n, s in rows]))
    print(_table(["comparison", "equal"], [[k, _yn(v)] for k, v in c.equal.items()]))
    return EXIT_OK


# --- argument parsing -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--budget-ms", type=int, default=default_budget_ms(),
                        help="time budget for searches (default: $SCLAB_BUDGET_MS or 30000)")
    common.add_argument("--max-order", type=int, default=None,
                        help="order cap for construction; catalog bound for 'scan'")
    common.add_argument("--pair-cap", type=int, default=16,
                        help="max (H, K) pairs per group for L3.7/L3.8")

    source = argparse.ArgumentParser(add_help=False)
    src = source.add_mutually_exclusive_group(required=True)
    src.add_argument("--group", help="group expression, e.g. 'S3' or 'Z2 x D4'")
    src.add_argument("--table", help="Cayley table file")
    src.add_argument("--perms", help="permutation generator file")

    p = _Parser(prog="sclab", description="Self-classes of finite groups.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("subgroups", parents=[common, source], help="list subgroups with stable ids")
    s.add_argument("--abelian-only", action="store_true")
    s.set_defaults(func=cmd_subgroups)

    s = sub.add_parser("classes", parents=[common, source], help="class family over a subgroup")
    s.add_argument("--subgroup-id", type=int)
    s.add_argument("--kind", choices=[k.value for k in ClassKind], default="self")
    s.set_defaults(func=cmd_classes)

    s = sub.add_parser("classify", parents=[common, source],
                       help="faithful subgroups, R-group and Non-R verdicts")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("verify", parents=[common, source], help="run the claim checkers")
    s.add_argument("--claims", help=f"comma-separated subset of {','.join(CLAIM_IDS)}")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("scan", parents=[common], help="scan the catalog and write a report")
    s.add_argument("--out", help="JSON Lines report path")
    s.add_argument("--claims", help="comma-separated claim ids (default: all)")
    s.set_defaults(func=cmd_scan)

    s = sub.add_parser("compare", parents=[common, source],
                       help="sandwich class vs conjugacy self-class vs double coset")
    s.add_argument("--subgroup-id", type=int)
    s.add_argument("--elem", help="element name or index")
    s.set_defaults(func=cmd_compare)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"sclab: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ParseError, InvalidParameter, GroupValidationError, OrderCapExceeded) as exc:
        print(f"sclab: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(f"sclab: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        print(f"sclab: budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
