"""Exact-arithmetic calculus for elementary operators on matrix algebras.

Dense linear algebra over the Gaussian rationals, elementary operators
X -> sum_i A_i X B_i as first-class values, exact nilpotency decisions via
superoperators, structural nilpotency criteria as executable checks, and
deterministic instance generators and sweeps.
"""

from .errors import IntegrityError, ParseError, PreconditionError, ShapeError
from .scalars import (
    IMAG,
    ONE,
    ZERO,
    GaussianRational,
    as_scalar,
    format_scalar,
    parse_scalar,
)
from .matrix import (
    Matrix,
    basis_matrix,
    column_vector,
    kron,
    matrix_poly,
    rank_one,
    row_vector,
    unvec,
    vec,
)
from .nilpotency import EntryWitness, NilpotencyReport, char_poly, is_nilpotent
from .operators import (
    ElementaryOperator,
    identity_operator,
    make_generalized_derivation,
    make_inner_derivation,
    make_multiplication,
    make_v_operator,
    op_equal,
    op_is_nilpotent,
    zero_operator,
)
from .criteria import (
    ProofReplay,
    ReplayStep,
    ShiftCheckResult,
    ShiftWitness,
    TheoremCheckResult,
    eq1_identity_residual,
    fong_sourour_check,
    scalar_shift_witness,
    thm21_criterion,
    thm21_proof_replay,
    thm22_check,
    thm23_check,
)
from .lab import (
    ExampleRecord,
    GeneratorConfig,
    SweepReport,
    example_3_1,
    example_3_2,
    gen_commuting_tuple,
    gen_nilpotent,
    search_converse_failures,
    sweep_fong_sourour_exhaustive,
    sweep_thm,
    sweep_thm21_exhaustive,
)

__version__ = "0.1.0"

__all__ = [
    "IntegrityError",
    "ParseError",
    "PreconditionError",
    "ShapeError",
    "GaussianRational",
    "IMAG",
    "ONE",
    "ZERO",
    "as_scalar",
    "format_scalar",
    "parse_scalar",
    "Matrix",
    "basis_matrix",
    "column_vector",
    "kron",
    "matrix_poly",
    "rank_one",
    "row_vector",
    "unvec",
    "vec",
    "EntryWitness",
    "NilpotencyReport",
    "char_poly",
    "is_nilpotent",
    "ElementaryOperator",
    "identity_operator",
    "make_generalized_derivation",
    "make_inner_derivation",
    "make_multiplication",
    "make_v_operator",
    "op_equal",
    "op_is_nilpotent",
    "zero_operator",
    "ProofReplay",
    "ReplayStep",
    "ShiftCheckResult",
    "ShiftWitness",
    "TheoremCheckResult",
    "eq1_identity_residual",
    "fong_sourour_check",
    "scalar_shift_witness",
    "thm21_criterion",
    "thm21_proof_replay",
    "thm22_check",
    "thm23_check",
    "ExampleRecord",
    "GeneratorConfig",
    "SweepReport",
    "example_3_1",
    "example_3_2",
    "gen_commuting_tuple",
    "gen_nilpotent",
    "search_converse_failures",
    "sweep_fong_sourour_exhaustive",
    "sweep_thm",
    "sweep_thm21_exhaustive",
]
