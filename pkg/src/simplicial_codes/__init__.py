"""Codes over Z2[u]/(u^3-u) from simplicial complexes, their Lee weight
distributions, and properties of their binary Gray images."""

__version__ = "0.1.0"

from .ring import RingElement, RingVector, ELEMENTS, UNITS, ZERO, ONE, U, U2  # noqa: F401
from .simplicial import ComplexSpec, GeneralComplex, char_sum, chi, count  # noqa: F401
from .construction import (  # noqa: F401
    BudgetExceeded,
    Code,
    DefiningSetSpec,
    InvalidSpecError,
)
from .spectra import (  # noqa: F401
    WeightDistribution,
    brute_force_distribution,
    charsum_distribution,
    enumerator,
    l_weight_count,
    table_distribution,
)
from .analysis import (  # noqa: F401
    AnalysisReport,
    BinaryCode,
    analyze,
    ashikhmin_barg,
    code_params,
    exact_minimality,
    self_orthogonality,
    table9_condition,
)
