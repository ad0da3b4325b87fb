"""Exact intersection-theory thresholds for algebraic hyperbolicity.

Schubert calculus on Grassmannians, Chern classes of symmetric powers of
the dual tautological bundle, degree thresholds for hypersurfaces in
homogeneous varieties, and exact-rational genus-bound certificates.
"""

from .chern import FanoClassReport, chern_factors, fano_class, line_count, paired_rearrangement, top_chern_sym
from .genus import (
    CaseBound,
    CurveDegrees,
    GenusBoundReport,
    SurjectionProfile,
    basic_bound,
    degree_genus_relation,
    hyperbolicity_certificate,
    method1_certificate,
    mukai_degree_bound,
    scroll_case_bounds,
    scroll_intersection_numbers,
)
from .grassmann import (
    ChowElement,
    Partition,
    RingContext,
    complement,
    dual_class_vanishes,
    integrate,
    make_class,
    multiply,
    pieri,
    pieri_vertical,
    transpose_dual,
    unit,
    zero,
)
from .schur import schur_oracle_multiply
from .sections import MonomialSpace, SectionDominationResult, check_product, check_projective_space
from .varieties import (
    Classification,
    VarietyDescriptor,
    classify,
    fano_lines_dimension,
    flag,
    grassmannian,
    hyperbolicity_threshold,
    known_counterexamples,
    lines_threshold,
    orthogonal,
    product,
    projective_space,
    symplectic,
)

__version__ = "0.1.0"
