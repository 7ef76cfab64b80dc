"""Counting linear series on a general curve when the Brill-Noether number is zero.

Three independent routes give the same integers: a closed factorial
formula, an intersection number on a Grassmannian, and direct enumeration
of standard Young tableaux. The :mod:`castelnuovo.geometry` subpackage
checks the nodal degeneration behind the count with exact linear algebra.
"""
__version__ = "0.1.0"

from .brillnoether import (
    BNProblem,
    CastelnuovoParams,
    brill_noether_number,
    castelnuovo_number,
    enumerate_rho_zero,
    residual,
    to_castelnuovo_params,
    to_schubert_problem,
)
from .errors import (
    CastelnuovoError,
    CoincidentParameterError,
    DegenerateConditionError,
    DimensionMismatchError,
    MixedFieldError,
    NonReducedPencilError,
    RhoNonzeroError,
    SizeExceededError,
)
from .partitions import (
    Partition,
    castelnuovo_factorial,
    enumerate_standard_tableaux,
    hook_length_count,
    rectangle,
)
from .schubert import (
    CohomologyElement,
    GrassmannianSpec,
    SchubertProblemInstance,
    castelnuovo_problem,
    castelnuovo_schubert_count,
    incidence_with_line_class,
    intersection_number,
    pieri_multiply,
    schubert_power,
)
