"""Array erasure codes over polynomial quotient rings of GF(2^w).

Two companion codecs share one Vandermonde parity structure: the expanded
form stores p*tau symbols per column with local in-column parities, the
compact form stores alpha symbols per column over F[x]/h(x). The package
also classifies parameter recoverability with verified witnesses and an
exhaustive small-instance oracle, and ships a CLI plus chunk container
format for file pipelines.
"""

from .errors import GebrError
from .field import GF, gf
from .params import (
    CodeParams,
    check_membership,
    derive_params,
    local_encode_column,
    local_repair,
)
from .ring import CrtMap, Modulus, RingElement, crt_join, crt_split
from .linalg import (
    RingMatrix,
    determinant,
    lift_with_known_coeffs,
    solve_unique_mod_h,
    solve_vandermonde,
)
from .gebr_codec import (
    GebrArray,
    LineErasure,
    decode_columns,
    encode,
    line_inverse_exponent,
    recover_lines,
)
from .gbr_codec import (
    GbrArray,
    gbr_decode_columns,
    gbr_encode,
    gbr_recover_lines,
    to_gebr,
)
from .recoverability import (
    ConditionVerdict,
    classify,
    classify_gbr,
    construct_witness,
    is_two_primitive_mod_p,
    oracle_classify,
)

__version__ = "0.1.0"

__all__ = [
    "GF",
    "gf",
    "GebrError",
    "CodeParams",
    "derive_params",
    "check_membership",
    "local_encode_column",
    "local_repair",
    "Modulus",
    "RingElement",
    "CrtMap",
    "crt_split",
    "crt_join",
    "RingMatrix",
    "determinant",
    "solve_unique_mod_h",
    "lift_with_known_coeffs",
    "solve_vandermonde",
    "GebrArray",
    "LineErasure",
    "encode",
    "decode_columns",
    "recover_lines",
    "line_inverse_exponent",
    "GbrArray",
    "gbr_encode",
    "gbr_decode_columns",
    "gbr_recover_lines",
    "to_gebr",
    "ConditionVerdict",
    "classify",
    "classify_gbr",
    "construct_witness",
    "oracle_classify",
    "is_two_primitive_mod_p",
    "__version__",
]
