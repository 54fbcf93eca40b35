"""solidcount: exact solid-angle sums and lattice counts of rational polygons.

The package computes, for a simple polygon P with rational vertices and any
nonzero rational dilation t, the solid-angle weighted lattice sum (each
lattice point of t*P weighted by the fraction of a small disk around it that
lies inside t*P) and the plain lattice-point count, both in exact arithmetic.
Closed forms for axis right triangles combine with a signed fan and
unimodular cone decomposition for general polygons; a brute-force oracle and
a floating-point spectral verifier provide independent cross-checks.
"""

from .angles import AngleValue, angle_between, atom_value, turns_of_direction
from .bernoulli import (
    b1_periodic,
    b1_star,
    b2_periodic,
    dedekind_rademacher,
    dedekind_rademacher_star,
    dedekind_sum,
    dedekind_sum_fast,
)
from .oracle import (
    PointClass,
    brute_force_A,
    brute_force_L,
    brute_force_popoviciu,
    classify_point,
    scan_dilated,
)
from .polygon import (
    PointedTriangle,
    RationalPolygon,
    UnimodularPiece,
    ehrhart_polygon,
    fan_decompose,
    load_polygon,
    parse_polygon,
    segment_lattice_count,
    solid_angle_sum_polygon,
    transport,
    unimodularize_cone,
)
from .rational import (
    LatticeVector,
    Rational,
    RationalPoint,
    floor_frac,
    gcd,
    mod_inverse,
    parse_rational,
    primitive,
)
from .spectral import (
    ChainWeightSpec,
    SpectralConfig,
    a1_truncated,
    b_sums_truncated,
    c3_truncated,
    chain_weight,
    convergence_report,
    twisted_transform_check,
)
from .triangle import (
    CTerms,
    FaceCounts,
    QuasiCoefficients,
    SimplePointedTriangle,
    c_terms,
    edge_counts,
    ehrhart_at_breakpoint,
    ehrhart_triangle,
    ehrhart_triangle_expanded,
    face_counts,
    popoviciu,
    quasi_coefficients,
    solid_angle_sum_triangle,
)

__version__ = "0.1.0"
