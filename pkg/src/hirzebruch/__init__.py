"""Exact computations in the numerical Grothendieck group of Hirzebruch surfaces."""

from .collection import (
    Collection4,
    GroupElement,
    apply_group_element,
    gram,
    is_exceptional_collection,
    mutate,
    orbit_search,
    sigma23_square_check,
    standard_collection,
)
from .errors import (
    DomainError,
    Mismatch,
    NonIntegral,
    NonpositiveRank,
    NotExceptional,
    NotExceptionalCollection,
    NotFound,
    ParityViolation,
    ZeroRank,
)
from .k0 import (
    K0Class,
    bundle_representative,
    enumerate_exceptional_classes,
    euler_form,
    exceptional_class_from_slope,
    is_numerically_exceptional,
    line_bundle_class,
    serre_twist,
    structure_sheaf,
    tensor_line_bundle,
    torsion_class_OC,
)
from .surface import (
    C,
    F,
    CohomologyDims,
    DivisorClass,
    SurfaceParams,
    canonical_class,
    euler_char_line_bundle,
    intersect,
    line_bundle_cohomology,
)
from .tower import (
    classify_sheaves_sharing_class,
    check_table_consistency,
    ext_table,
    f0_class,
    f_i_class,
    restriction_profile,
    tower_entry,
)
from .twist import compose_adjacent_twists, inverse_twist_class, twist_class

__version__ = "0.1.0"
