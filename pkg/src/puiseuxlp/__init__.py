"""Exact linear programming and convex hulls over the ordered field of
Puiseux fractions, with a tropical dual convex hull solver on top."""

from .ratpoly import ExpPoly, RatFun, poly_gcd
from .puiseux import (
    IntervalApprox,
    Orientation,
    OrientationError,
    ParseError,
    PoleError,
    PuiseuxFraction,
    T_LARGE,
    T_SMALL,
    pf,
    pf_format,
    pf_parse,
)
from .polyhedral import (
    ConeDescription,
    Tau0Result,
    combinatorial_equal,
    evaluate_matrix,
    evaluate_vector,
    homogenize,
    homogenize_point,
    incidence,
    lineality_space,
    sign_table,
    tau0,
)
from .simplex import LinearProgram, LPSolution, Phase1Result, phase1, solve
from .hull import HullResult, Triangulation, enumerate_rays, hull_facets, volume
from .tropical import (
    GenericityError,
    GenericityReport,
    NEG_INF,
    TropGenerators,
    TropNum,
    TropicalSystem,
    dual_hull_witness,
    is_sign_generic,
    lift,
    matrix_val,
    tdet,
    term_sign,
    trop,
    trop_dual_hull,
    trop_member,
)
from .instances import (
    GoldfarbSitSpec,
    LongWindingSpec,
    ParameterError,
    goldfarb_sit,
    long_and_winding,
    param_polygon,
)

__version__ = "0.1.0"
