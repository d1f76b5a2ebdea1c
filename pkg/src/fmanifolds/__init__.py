"""Exact symbolic toolkit for multiplications on the tangent sheaf.

Decides whether a multiplication is an F-manifold structure by two
independent routes (the structure identity on basis quadruples and
Poisson stability of the spectral-cover ideal), and analyzes the
resulting covers: radical presentations, fiber algebras, semisimplicity,
idempotents, Euler fields, and super-Frobenius pairing checks.  All
arithmetic is exact over the rationals.
"""

from .poly import (
    Monomial,
    ParseError,
    Polynomial,
    Rational,
    VariableSet,
    evaluate_base,
    parse_poly,
    partial_derivative,
    poly_arith,
    to_string,
)
from .groebner import (
    BudgetExceededError,
    DEFAULT_BUDGET,
    GroebnerBasis,
    IdealPresentation,
    MonomialOrder,
    buchberger,
    degrevlex,
    ideal,
    ideal_contains,
    ideal_equals,
    is_groebner_basis,
    lex,
    normal_form,
    radical_contains,
    s_polynomial,
    verify_radical_presentation,
    y_block,
)
from .poisson import (
    BracketWitness,
    StabilityResult,
    ideal_poisson_stable,
    poisson_bracket,
    poisson_tensor,
)
from .fstructure import (
    FMultiplication,
    FVerdict,
    RankCheckResult,
    ReconstructionError,
    VectorField,
    e_compatibility_defect,
    family1,
    family1_radical,
    family2,
    family2_radical,
    family2_rho,
    identity_defect,
    is_f_manifold,
    lie_bracket,
    multiplication_from_ideal,
    multiply_fields,
    sample_points,
    semisimple_model,
    spectral_cover_ideal,
    spectral_cover_rank_check,
    structure_identity_defect,
)
from .point_algebra import (
    IdempotentReport,
    NilradicalReport,
    PointAlgebra,
    fiber_algebra,
    is_semisimple,
    nilpotency_profile,
    nilradical,
    orthogonal_idempotents,
    trace_form,
)
from .euler import (
    EulerField,
    EulerFieldsReport,
    GradingData,
    euler_fields,
    field_commutator,
    fields_proportional,
    grading_data,
)
from .super_frobenius import (
    InvarianceReport,
    OddNilpotentWitness,
    SuperFrobeniusAlgebra,
    exterior_two_odd,
    frobenius_invariance_check,
    odd_nilpotent_witness,
)
from .corpus import CorpusEntry, build_corpus, dim2_multiplication, square_zero_multiplication

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
