"""Order-distance and CP-class computations on small finite groups."""

from .core import (
    CapExceededError,
    FiniteGroup,
    OrderTable,
    SubgroupSet,
    direct_product,
    from_cayley,
    from_permutation_set,
    generate_group,
)
from .perm import Permutation, parse_cycles, perm_compose, perm_order
from .catalog import (
    FieldTable,
    ProjectivePoint,
    alternating,
    catalog_entries,
    catalog_iter,
    cyclic,
    dicyclic,
    dihedral,
    elementary_abelian,
    group_from_spec,
    make_field,
    psl2,
    symmetric,
)
from .metric import (
    ClassReport,
    MetricAxioms,
    Witness,
    check_metric_axioms,
    classify,
    distance,
    distance_matrix,
    involution_product_witness,
    is_cp,
    is_cp2,
    is_cp3,
    layer_check,
    render_witness,
    scan_pair_order_condition,
    triangle_audit,
    write_distance_csv,
)
from .subgroups import (
    abelian_subgroup_scan,
    all_subgroups,
    hereditary_check,
    quotient_scan,
    write_subgroup_list,
)
from .verify import run_verify

__all__ = [
    "CapExceededError",
    "ClassReport",
    "FieldTable",
    "FiniteGroup",
    "MetricAxioms",
    "OrderTable",
    "Permutation",
    "ProjectivePoint",
    "SubgroupSet",
    "Witness",
    "abelian_subgroup_scan",
    "all_subgroups",
    "alternating",
    "catalog_entries",
    "catalog_iter",
    "check_metric_axioms",
    "classify",
    "cyclic",
    "dicyclic",
    "dihedral",
    "direct_product",
    "distance",
    "distance_matrix",
    "elementary_abelian",
    "from_cayley",
    "from_permutation_set",
    "generate_group",
    "group_from_spec",
    "hereditary_check",
    "involution_product_witness",
    "is_cp",
    "is_cp2",
    "is_cp3",
    "layer_check",
    "make_field",
    "parse_cycles",
    "perm_compose",
    "perm_order",
    "psl2",
    "quotient_scan",
    "render_witness",
    "run_verify",
    "scan_pair_order_condition",
    "symmetric",
    "triangle_audit",
    "write_distance_csv",
    "write_subgroup_list",
]

__version__ = "0.1.0"
