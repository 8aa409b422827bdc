"""Exact combinatorics for the inner cohomology of GL_n at prime rank."""

from .dirichlet import (
    DirichletCharacter,
    UnitGroupStructure,
    conductor,
    enumerate_characters,
    evaluate,
    nth_roots,
    primitive_character,
    unit_group_structure,
)
from .intervals import (
    DegreeProfile,
    cusp_bounds,
    degree_profile,
    dim_symmetric_space,
    s0_cusp_overlap,
    table_row,
)
from .lie_cohomology import (
    GeneratorDegrees,
    PoincarePolynomial,
    betti,
    generator_degrees,
    oracle_betti,
    poincare_polynomial,
)
from .spectral import (
    CohomologyReport,
    DomainError,
    ParabolicShape,
    ResidualDescriptor,
    Verdict,
    VerdictKind,
    classify,
    duality_pairing_check,
    residual_spectrum,
    standard_parabolic_shapes,
    xi0_shapes,
)
from .weights import (
    FundamentalView,
    Weight,
    WeightError,
    central_exponent,
    from_fundamental,
    from_standard,
    fundamental_view,
    is_constant_coefficient,
    is_dominant,
    is_integral,
    sheaf_is_nonzero,
)

__version__ = "0.1.0"
