"""Self-classes, conjugacy self-classes and the groups they form.

For a subgroup H of G the *sandwich class* of ``a`` is {x a x : x in H}.
With H abelian it is called a self-class and the classes partition G; with H
nonabelian it is a non-self-class, which may overlap.  The *conjugacy
self-class* is the orbit {x^-1 a x : x in H}.  A family of classes forms a
group when it partitions G and the setwise product of any two classes is
again a class.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from .budget import Budget, as_budget
from .errors import EmptyBlock, GroupValidationError, SelfClassOverNonabelianH
from .group import ElementSet, Group, commute_witness, elset, validate_table
from .iso import are_isomorphic
from .subgroups import (
    SubgroupInfo,
    conjugacy_classes,
    double_coset,
    enumerate_subgroups,
    require_subgroup,
)


class ClassKind(enum.Enum):
    SELF = "self"          # x a x, H must be abelian
    SANDWICH = "sandwich"  # x a x, any H
    CONJ = "conj"          # x^-1 a x

    @classmethod
    def parse(cls, value: "ClassKind | str") -> "ClassKind":
        if isinstance(value, ClassKind):
            return value
        return cls(value.lower())


def _sandwich_matrix(g: Group, h: ElementSet) -> np.ndarray:
    """m[k, a] = h[k] * a * h[k] for every element a."""
    hs = np.array(h)
    xa = g.table[hs, :]
    return g.table[xa, hs[:, None]]


def _conj_matrix(g: Group, h: ElementSet) -> np.ndarray:
    hs = np.array(h)
    xa = g.table[g.inverses[hs], :]
    return g.table[xa, hs[:, None]]


def sandwich_class(g: Group, h: Iterable[int], a: int) -> ElementSet:
    h = require_subgroup(g, h)
    hs = list(h)
    return elset(g.table[g.table[hs, a], hs])


def conj_self_class(g: Group, h: Iterable[int], a: int) -> ElementSet:
    h = require_subgroup(g, h)
    hs = list(h)
    return elset(g.table[g.table[g.inverses[hs], a], hs])


def g_identity(g: Group, h: Iterable[int]) -> ElementSet:
    """Class of the identity over H, i.e. the set of squares of H."""
    h = require_subgroup(g, h)
    return elset(np.diagonal(g.table)[list(h)])


def setwise_product(g: Group, b1: Iterable[int], b2: Iterable[int]) -> ElementSet:
    b1, b2 = list(b1), list(b2)
    if not b1 or not b2:
        raise EmptyBlock("setwise product of an empty set")
    return elset(g.table[np.ix_(b1, b2)].ravel())


@dataclass(frozen=True, eq=False)
class ClassFamily:
    group: Group
    subgroup: ElementSet
    kind: ClassKind
    blocks: tuple[ElementSet, ...]
    class_of: tuple[int, ...]
    is_partition: bool
    overlap_witness: tuple[int, int, int] | None = None

    def block_of(self, a: int) -> ElementSet:
        return self.blocks[self.class_of[a]]

    def named_blocks(self) -> list[list[str]]:
        return [self.group.name_set(b) for b in self.blocks]


def class_family(g: Group, h: Iterable[int], kind: ClassKind | str) -> ClassFamily:
    kind = ClassKind.parse(kind)
    h = require_subgroup(g, h)
    if kind is ClassKind.SELF:
        w = commute_witness(g, h, h)
        if w is not None:
            raise SelfClassOverNonabelianH(w)
    m = _conj_matrix(g, h) if kind is ClassKind.CONJ else _sandwich_matrix(g, h)
    per_elem = [elset(m[:, a]) for a in range(g.order)]
    blocks = tuple(sorted(set(per_elem)))
    ordinal = {b: i for i, b in enumerate(blocks)}
    class_of = tuple(ordinal[b] for b in per_elem)
    owner = np.full(g.order, -1, dtype=np.int64)
    witness = None
    for i, b in enumerate(blocks):
        for x in b:
            if owner[x] >= 0 and witness is None:
                witness = (x, int(owner[x]), i)
            owner[x] = i
    return ClassFamily(g, h, kind, blocks, class_of, witness is None, witness)


@dataclass(frozen=True, eq=False)
class ClassGroup:
    """The group formed by a class family.

    ``table[i][j]`` is the ordinal of the block equal to blocks[i] * blocks[j];
    every entry was checked as an exact set equality.
    """

    family: ClassFamily
    table: np.ndarray
    identity_block: int = 0

    @property
    def order(self) -> int:
        return len(self.family.blocks)

    def as_group(self) -> Group:
        g = self.family.group
        names = tuple("{" + ",".join(g.names[i] for i in b) + "}" for b in self.family.blocks)
        return Group(self.table, names, "")

    def witness(self, i: int, j: int) -> tuple[ElementSet, ElementSet, ElementSet]:
        """(block_i, block_j, product) for replaying table entry (i, j)."""
        b = self.family.blocks
        return b[i], b[j], setwise_product(self.family.group, b[i], b[j])


@dataclass(frozen=True)
class Refusal:
    """Why a class family does not form a group."""

    reason: str  # "overlap" | "product" | "axioms"
    pair: tuple[int, int] | None = None
    product: ElementSet | None = None
    overlap: tuple[int, int, int] | None = None
    detail: str = ""


def family_group(g: Group, fam: ClassFamily) -> ClassGroup | Refusal:
    if not fam.is_partition:
        return Refusal("overlap", overlap=fam.overlap_witness,
                       detail="classes are not pairwise disjoint")
    blocks = fam.blocks
    ordinal = {b: i for i, b in enumerate(blocks)}
    k = len(blocks)
    table = np.empty((k, k), dtype=np.int64)
    for i in range(k):
        for j in range(k):
            p = setwise_product(g, blocks[i], blocks[j])
            o = ordinal.get(p)
            if o is None:
                return Refusal("product", pair=(i, j), product=p,
                               detail="setwise product is not a class")
            table[i, j] = o
    try:
        ident = validate_table(table)
    except GroupValidationError as exc:
        return Refusal("axioms", detail=str(exc))
    return ClassGroup(fam, table, ident)


# --- classification -----------------------------------------------------------

@dataclass(frozen=True)
class FaithfulVerdict:
    subgroup: SubgroupInfo
    faithful: bool
    class_group: ClassGroup | None = None
    refusal: Refusal | None = None


def faithful_subgroups(g: Group, budget: Budget | int | None = None,
                       subgroups: list[SubgroupInfo] | None = None) -> list[FaithfulVerdict]:
    """Faithfulness verdict for every abelian subgroup, in subgroup-id order."""
    budget = as_budget(budget)
    subs = subgroups if subgroups is not None else enumerate_subgroups(g, budget)
    out = []
    for s in subs:
        if not s.is_abelian:
            continue
        budget.check("faithful subgroup scan")
        res = family_group(g, class_family(g, s.elems, ClassKind.SELF))
        if isinstance(res, ClassGroup):
            out.append(FaithfulVerdict(s, True, class_group=res))
        else:
            out.append(FaithfulVerdict(s, False, refusal=res))
    return out


def is_rohit_selfclass_group(g: Group, h: Iterable[int]) -> tuple[bool, ClassGroup | None]:
    res = family_group(g, class_family(g, h, ClassKind.SELF))
    if isinstance(res, ClassGroup):
        return True, res
    return False, None


@dataclass(frozen=True)
class RGroupVerdict:
    is_r_group: bool
    whole: ClassGroup | Refusal  # sandwich family over H = G
    subgroup: SubgroupInfo | None = None
    class_group: ClassGroup | None = None
    mapping: np.ndarray | None = field(default=None, compare=False)


def is_r_group(g: Group, budget: Budget | int | None = None,
               subgroups: list[SubgroupInfo] | None = None) -> RGroupVerdict:
    """Search abelian subgroups H whose self-class group is isomorphic to the
    sandwich-class group over G itself; first hit in subgroup-id order wins."""
    budget = as_budget(budget)
    whole = family_group(g, class_family(g, range(g.order), ClassKind.SANDWICH))
    if not isinstance(whole, ClassGroup):
        return RGroupVerdict(False, whole)
    target = whole.as_group()
    subs = subgroups if subgroups is not None else enumerate_subgroups(g, budget)
    for s in subs:
        if not s.is_abelian:
            continue
        budget.check("R-group search")
        res = family_group(g, class_family(g, s.elems, ClassKind.SELF))
        if not isinstance(res, ClassGroup) or res.order != whole.order:
            continue
        phi = are_isomorphic(res.as_group(), target, budget)
        if phi is not None:
            return RGroupVerdict(True, whole, s, res, phi)
    return RGroupVerdict(False, whole)


@dataclass(frozen=True)
class NonRVerdict:
    is_non_r: bool
    subgroup: SubgroupInfo | None = None
    class_group: ClassGroup | None = None
    # sandwich family over H = G, recorded whatever the verdict
    whole_partition: bool | None = None
    whole_forms_group: bool | None = None


def is_non_r_group(g: Group, budget: Budget | int | None = None,
                   subgroups: list[SubgroupInfo] | None = None) -> NonRVerdict:
    budget = as_budget(budget)
    whole_fam = class_family(g, range(g.order), ClassKind.SANDWICH)
    whole_ok = isinstance(family_group(g, whole_fam), ClassGroup)
    subs = subgroups if subgroups is not None else enumerate_subgroups(g, budget)
    for s in subs:
        if s.is_abelian:
            continue
        budget.check("Non-R search")
        res = family_group(g, class_family(g, s.elems, ClassKind.SANDWICH))
        if isinstance(res, ClassGroup):
            return NonRVerdict(True, s, res, whole_fam.is_partition, whole_ok)
    return NonRVerdict(False, None, None, whole_fam.is_partition, whole_ok)


@dataclass(frozen=True)
class Comparison:
    sandwich: ElementSet
    conj_self: ElementSet
    double_coset: ElementSet
    conjugacy_class: ElementSet
    equal: dict[str, bool]


def compare_classes(g: Group, h: Iterable[int], a: int) -> Comparison:
    h = require_subgroup(g, h)
    sets = {
        "sandwich": sandwich_class(g, h, a),
        "conj_self": conj_self_class(g, h, a),
        "double_coset": double_coset(g, h, a, h),
        "conjugacy_class": next(c for c in conjugacy_classes(g) if a in c),
    }
    keys = list(sets)
    equal = {f"{p}=={q}": sets[p] == sets[q]
             for i, p in enumerate(keys) for q in keys[i + 1:]}
    return Comparison(equal=equal, **sets)
