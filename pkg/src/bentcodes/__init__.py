"""bentcodes: linear codes from bent vectorial functions, with exact
certification of their weight distributions and the 2-designs they hold.

The layers, bottom up:

- ``gf2e``     arithmetic in GF(2^n), n <= 16
- ``boolfun``  truth tables, ANF, Walsh spectra, bentness
- ``bentvec``  vectorial functions and the three bent families
- ``lincode``  packed linear codes, weight enumeration, MacWilliams
- ``designs``  block designs from weight classes and their verification
- ``amcheck``  the Assmus-Mattson condition
- ``cli``      the ``bentcodes`` command

Heavy loops live in ``_kernels`` with a numba backend by default and a
pure-numpy fallback selected by the env var BENTCODES_NO_NUMBA=1.
"""

from .amcheck import AmReport, assmus_mattson
from .bentvec import (
    VectorialFunction,
    gold_basis_family,
    gold_trace_family,
    is_bent_vectorial,
    kasami_trace_family,
    select_components,
    vectorial_function,
)
from .boolfun import (
    AnfExpression,
    TruthTable,
    WalshSpectrum,
    enumerate_bent_functions,
    is_bent,
    parse_anf,
    truth_table_from_anf,
    univariate_truth_table,
    walsh_transform,
)
from .designs import (
    Design,
    DesignParams,
    IntersectionSpectrum,
    complement_design,
    derived_design,
    design,
    design_from_codewords,
    fingerprint,
    intersection_spectrum,
    min_weight_design,
    sdp_check,
    verify_2_design,
    verify_t_design,
)
from .errors import (
    BentcodesError,
    BudgetExceeded,
    DimensionMismatch,
    DimensionTooLarge,
    DivisionByZero,
    EmptyWeightClass,
    FieldMismatch,
    IndexOutOfRange,
    InvalidBasis,
    InvalidDesign,
    InvalidStrength,
    InvalidSubfield,
    NonIntegerResult,
    NotA2Design,
    NotACodeword,
    NotADivisor,
    NotAGenerator,
    OddDimension,
    PreconditionViolated,
    ReducibleModulus,
    SchemeMismatch,
    UnsupportedDimension,
    WrongSourceDesign,
)
from .gf2e import (
    FieldElement,
    GF2Field,
    SubfieldBasis,
    enumerate_field,
    make_field,
    parse_poly_spec,
    poly_divide,
    subfield_basis,
    trace,
)
from .lincode import (
    BitMatrix,
    LinearCode,
    WeightDistribution,
    bent_enumerator,
    build_code,
    census_16_7_6,
    check_bent_enumerator,
    cyclic_code,
    extend_code,
    linear_code,
    macwilliams_dual,
    min_weight_codewords,
    rm1_generator,
    rm1_tuple_generator,
    span_equals,
    weight_distribution,
)

__version__ = "0.1.0"

__all__ = [
    "AmReport",
    "AnfExpression",
    "BentcodesError",
    "BitMatrix",
    "BudgetExceeded",
    "Design",
    "DesignParams",
    "DimensionMismatch",
    "DimensionTooLarge",
    "DivisionByZero",
    "EmptyWeightClass",
    "FieldElement",
    "FieldMismatch",
    "GF2Field",
    "IndexOutOfRange",
    "IntersectionSpectrum",
    "InvalidBasis",
    "InvalidDesign",
    "InvalidStrength",
    "InvalidSubfield",
    "LinearCode",
    "NonIntegerResult",
    "NotA2Design",
    "NotACodeword",
    "NotADivisor",
    "NotAGenerator",
    "OddDimension",
    "PreconditionViolated",
    "ReducibleModulus",
    "SchemeMismatch",
    "SubfieldBasis",
    "TruthTable",
    "UnsupportedDimension",
    "VectorialFunction",
    "WalshSpectrum",
    "WeightDistribution",
    "WrongSourceDesign",
    "assmus_mattson",
    "bent_enumerator",
    "build_code",
    "census_16_7_6",
    "check_bent_enumerator",
    "complement_design",
    "cyclic_code",
    "derived_design",
    "design",
    "design_from_codewords",
    "enumerate_bent_functions",
    "enumerate_field",
    "extend_code",
    "fingerprint",
    "gold_basis_family",
    "gold_trace_family",
    "intersection_spectrum",
    "is_bent",
    "is_bent_vectorial",
    "kasami_trace_family",
    "linear_code",
    "macwilliams_dual",
    "make_field",
    "min_weight_codewords",
    "min_weight_design",
    "parse_anf",
    "parse_poly_spec",
    "poly_divide",
    "rm1_generator",
    "rm1_tuple_generator",
    "sdp_check",
    "select_components",
    "span_equals",
    "subfield_basis",
    "trace",
    "truth_table_from_anf",
    "univariate_truth_table",
    "vectorial_function",
    "verify_2_design",
    "verify_t_design",
    "walsh_transform",
    "weight_distribution",
]
