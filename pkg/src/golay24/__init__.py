"""Construction, verification and decoding of the (24,12,8) Golay code built
as the direct sum of two product array codes."""

from golay24.builder import GolayCode, direct_sum, verify_golay
from golay24.component import Code844, G78Choices, ParitySubmatrix
from golay24.gf2 import BitMatrix, BitVector

__all__ = [
    "BitMatrix",
    "BitVector",
    "Code844",
    "G78Choices",
    "GolayCode",
    "ParitySubmatrix",
    "direct_sum",
    "verify_golay",
]
