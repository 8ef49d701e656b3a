"""Exact Horadam / generalized Fibonacci arithmetic and the 3x3 matrix
systems whose powers are written in terms of those sequences."""

from .errors import (
    DegenerateEigenbasisError,
    DomainError,
    HoradamError,
    PatternNotSupportedError,
    SingularMatrixError,
)
from .exact import QuadElem, as_fraction, rat_normalize, rational_sqrt
from .sequences import (
    RecurrenceParams,
    SeqValue,
    binet_eval,
    fast_gen_fib,
    gen_fib,
    horadam_eval,
    horadam_range,
    linear_approx_check,
    roots,
)
from .matrices import (
    Matrix,
    companion,
    companion_decomposition_check,
    companion_power_form,
)
from .derivation import (
    ClassicSystem,
    DerivedSystem,
    KernelPattern,
    VARIANT_PATTERNS,
    classic_for,
    classic_systems,
    closed_power,
    derive,
    power_form,
    preset_matrix,
    reference_power,
)
from .identities import (
    FirstFailure,
    IdentityReport,
    check_binet,
    check_cassini,
    check_closed_power,
    check_companion_decomposition,
    check_companion_power,
    check_cubic,
    check_linear_approximation,
    check_power_det_zero,
    check_power_form,
    check_projector_algebra,
    check_reference_matrix,
    check_reference_power,
    default_grid,
    matrix_mismatches,
    run_suite,
)
from .registry import BUILTIN_ENTRIES, RegistryEntry, load_registry, parse_fraction

__version__ = "0.1.0"

__all__ = [
    "BUILTIN_ENTRIES",
    "ClassicSystem",
    "DegenerateEigenbasisError",
    "DerivedSystem",
    "DomainError",
    "FirstFailure",
    "HoradamError",
    "IdentityReport",
    "KernelPattern",
    "Matrix",
    "PatternNotSupportedError",
    "QuadElem",
    "RecurrenceParams",
    "RegistryEntry",
    "SeqValue",
    "SingularMatrixError",
    "VARIANT_PATTERNS",
    "as_fraction",
    "binet_eval",
    "check_binet",
    "check_cassini",
    "check_closed_power",
    "check_companion_decomposition",
    "check_companion_power",
    "check_cubic",
    "check_linear_approximation",
    "check_power_det_zero",
    "check_power_form",
    "check_projector_algebra",
    "check_reference_matrix",
    "check_reference_power",
    "classic_for",
    "classic_systems",
    "closed_power",
    "companion",
    "companion_decomposition_check",
    "companion_power_form",
    "default_grid",
    "derive",
    "fast_gen_fib",
    "gen_fib",
    "horadam_eval",
    "horadam_range",
    "linear_approx_check",
    "load_registry",
    "matrix_mismatches",
    "parse_fraction",
    "power_form",
    "preset_matrix",
    "rat_normalize",
    "rational_sqrt",
    "reference_power",
    "roots",
    "run_suite",
]
