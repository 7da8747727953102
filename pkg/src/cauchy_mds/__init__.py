"""Cauchy MDS array codes over the binary cyclic ring F2[x]/(1+x^p).

Encoding and decoding use only XORs and cyclic shifts; erasures are repaired
with an LU-factorized Cauchy solver.
"""

from .cauchy import CauchySystem, determinant, is_invertible, lu_solve
from .codec import (
    CodeParams,
    Codeword,
    DecodePlan,
    ErasureError,
    ErasurePattern,
    decode,
    decode_array,
    encode,
    encode_array,
    mds_check,
    plan_decode,
)
from .counter import XorCounter
from .ring import BinomialExp, RingElement

__all__ = [
    "BinomialExp",
    "CauchySystem",
    "CodeParams",
    "Codeword",
    "DecodePlan",
    "ErasureError",
    "ErasurePattern",
    "RingElement",
    "XorCounter",
    "decode",
    "decode_array",
    "determinant",
    "encode",
    "encode_array",
    "is_invertible",
    "lu_solve",
    "mds_check",
    "plan_decode",
]
