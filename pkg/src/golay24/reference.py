"""Published generator matrices used as fixed inputs and cross-checks."""

from __future__ import annotations

from golay24.component import G78Choices, ParitySubmatrix
from golay24.gf2 import BitMatrix

# Worked example: seed parity rows and the choices for the two
# non-systematic companions.
EXAMPLE_PARITY = ParitySubmatrix.parse("1101,0111,1110,1011")
EXAMPLE_CHOICES = G78Choices.parse("0101,0011,0110,0011,0101,1001")

EXAMPLE_G1 = BitMatrix.from_rows(["10001101", "01000111", "00101110", "00011011"])
EXAMPLE_G7 = BitMatrix.from_rows(["01010110", "00110011", "00001111", "11111111"])
EXAMPLE_G8 = BitMatrix.from_rows(["01010101", "00111001", "00001111", "11111111"])

# Permuted parity submatrices P^(1)..P^(6) of the worked example.
EXAMPLE_PERMUTED_PARITY = tuple(
    ParitySubmatrix.parse(s)
    for s in (
        "1110,1101,1011,0111",
        "1011,1101,0111,1110",
        "0111,1011,1101,1110",
        "1011,1110,1101,0111",
        "0111,1110,1011,1101",
        "1110,1011,0111,1101",
    )
)

# Turyn: extended (7,4,3) cyclic Hamming code and its companion.
TURYN_G = BitMatrix.from_rows(["00011011", "00110101", "01101001", "11010001"])
TURYN_G_PRIME = BitMatrix.from_rows(["10110001", "01011001", "00101101", "00010111"])

# Forney: systematic first-order Reed-Muller seed. The published seed matrix
# has nine symbols per row; each row here drops one symbol from the parity
# part, the only choice that keeps (I4 | P) with P a permutation of the
# weight-3 tuples. The textbook form 10000111/01001011/00101101/00011110 does
# not give a Golay code with FORNEY_G7 (it has 18 weight-4 words).
FORNEY_G1 = BitMatrix.from_rows(["10000111", "01001101", "00101110", "00011011"])
FORNEY_PARITY = ParitySubmatrix.parse("0111,1101,1110,1011")
FORNEY_G7 = BitMatrix.from_rows(["10101010", "11001100", "11110000", "11111111"])
