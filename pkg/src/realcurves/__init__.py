"""Real curve schemes on surfaces and their congruence filters."""

from .classify import (
    ClassificationResult,
    EnumerationSpec,
    M55Result,
    classify_cubic_degree2,
    classify_ellipsoid,
    classify_m55,
    enumerate_forests,
    run_filters,
)
from .congruence import (
    CongruenceReport,
    Hypothesis,
    ProjectiveHypotheses,
    deficiency_filter,
    ash_signature,
    cover_separation,
    disjoint_cubic_filter,
    ellipsoid_check,
    fiedler_check,
    guillou_marin_check,
    hyperboloid_chi_check,
    hyperboloid_orientation_check,
    plane_orientation_check,
    projective_check,
    surface_congruence,
    separation_congruence,
    viro_loop_value,
    viro_path_value,
)
from .models import (
    CurveClass,
    SurfaceModel,
    cubic_disjoint_model,
    curve_class_for,
    ellipsoid_model,
    harnack_bound,
    hyperboloid_model,
    plane_double_cover_model,
)
from .regions import (
    IndexFunction,
    IndexUndefinedError,
    Region,
    RegionDecomposition,
    TwoColoring,
    decompose,
    disorienting_count_check,
    euler_integral_sq,
    index_function,
    two_coloring,
)
from .scheme import (
    Oval,
    RealScheme,
    SchemeComponent,
    SchemeError,
    SchemeSyntaxError,
    UnorientedSchemeError,
    parse_scheme,
    print_scheme,
)
from .zform import (
    BrownValue,
    FormError,
    Z4Form,
    brown_invariant,
    direct_sum,
    evaluate,
    gauss_sum,
    is_even,
    klein_bottle_form,
    restrict,
)

__version__ = "0.1.0"
