"""Census of genus-4 superspecial hyperelliptic curves with quaternion automorphisms."""

from .cartier import (
    CartierContext,
    CartierManinMatrix,
    GcdAllResult,
    cartier_matrix,
    coefficient_table_naive,
    gcdall_poly,
    is_superspecial,
    matrix_entry_polys,
    matrix_entry_polys_naive,
    superspecial_parameters,
)
from .enumeration import (
    EnumerationRecord,
    ExpectedCounts,
    RepresentativeSet,
    enumerate_prime,
    expected_counts,
    iter_sweep,
    representatives,
)
from .errors import (
    BothZero,
    ExactDivisionFailed,
    NotSquarefree,
    SingularCurve,
    StarViolated,
    ZeroInput,
    ZeroInverse,
)
from .fields import (
    Fp2,
    PrimeContext,
    format_fp2,
    fp2_inv,
    fp2_sqrt,
    is_prime,
    legendre_symbol,
    parse_fp2,
    primes_in_range,
    sqrt_mod_p,
)
from .orbits import AutClass, Orbit, aut_class, isomorphic, orbit

__version__ = "0.1.0"

__all__ = [
    "AutClass",
    "BothZero",
    "CartierContext",
    "CartierManinMatrix",
    "EnumerationRecord",
    "ExactDivisionFailed",
    "ExpectedCounts",
    "Fp2",
    "GcdAllResult",
    "NotSquarefree",
    "Orbit",
    "PrimeContext",
    "RepresentativeSet",
    "SingularCurve",
    "StarViolated",
    "ZeroInput",
    "ZeroInverse",
    "aut_class",
    "cartier_matrix",
    "coefficient_table_naive",
    "enumerate_prime",
    "expected_counts",
    "format_fp2",
    "fp2_inv",
    "fp2_sqrt",
    "gcdall_poly",
    "is_prime",
    "is_superspecial",
    "isomorphic",
    "iter_sweep",
    "legendre_symbol",
    "matrix_entry_polys",
    "matrix_entry_polys_naive",
    "orbit",
    "parse_fp2",
    "primes_in_range",
    "representatives",
    "sqrt_mod_p",
    "superspecial_parameters",
]
