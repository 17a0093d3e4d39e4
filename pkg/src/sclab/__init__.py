"""sclab: self-classes, sandwich classes and their class groups for finite groups."""

from .budget import Budget
from .build import (
    alternating,
    builtin_group,
    cyclic,
    dicyclic,
    dihedral,
    direct_product,
    from_permutation_generators,
    parse_cycles,
    quaternion,
    symmetric,
)
from .catalog import (
    CatalogEntry,
    Finding,
    ScanReport,
    build_catalog,
    load_report,
    loads_report,
    persist_report,
    scan,
    scan_claims,
    scan_non_selfclass,
)
from .claims import ClaimReport, replay, run_all_claims
from .classes import (
    ClassFamily,
    ClassGroup,
    ClassKind,
    Refusal,
    class_family,
    compare_classes,
    conj_self_class,
    faithful_subgroups,
    family_group,
    g_identity,
    is_non_r_group,
    is_r_group,
    is_rohit_selfclass_group,
    sandwich_class,
    setwise_product,
)
from .errors import (
    BudgetExceeded,
    EmptyBlock,
    GroupValidationError,
    InvalidParameter,
    NotASubgroup,
    NotNormal,
    OrderCapExceeded,
    ParseError,
    SclabError,
    SelfClassOverNonabelianH,
)
from .group import Group, center, elem_order, from_table, is_abelian, validate_table
from .iso import are_isomorphic
from .parse import group_from_expr, parse_cayley_file, parse_group_expr, parse_perm_gens
from .subgroups import (
    SubgroupInfo,
    conjugacy_classes,
    cosets,
    double_coset,
    enumerate_subgroups,
    is_normal,
    quotient,
)

__version__ = "0.1.0"
