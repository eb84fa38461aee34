"""Direct sum of two array codes: the (24,12,8) construction.

The (24,8,8) code is the product of an (8,4,4) seed with the (3,2,2)
single-parity-check code; the (24,4,12) code is the product of a companion
(8,4,4) code with the (3,1,3) repetition code. Stacking their generators
gives a 12x24 generator whose codewords read ``|a+x|b+x|a+b+x|`` with
``a, b`` in the seed and ``x`` in the companion.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import asdict, dataclass, field

from golay24.component import (
    Code844,
    ConstructionError,
    G78Choices,
    ParitySubmatrix,
    all_parity_orderings,
    build_systematic,
    check_weight4_distinct,
    companion_codes,
    REFERENCE_PERMUTATIONS,
    PermutationIndex,
    apply_permutation,
    enumerate_valid_permutations,
    validate_companion_rows,
)
from golay24.gf2 import BitMatrix, BitVector, codebook_ints, kronecker, rank, row_space_equal
from golay24 import reference

SPC_GENERATOR = BitMatrix.from_rows(["101", "011"])
REPETITION_GENERATOR = BitMatrix.from_rows(["111"])
GOLAY_WEIGHTS = {0: 1, 8: 759, 12: 2576, 16: 759, 24: 1}


class NotDisjointError(ConstructionError):
    """The two array codes share a nonzero codeword."""


@dataclass(frozen=True)
class GolayCode:
    generator: BitMatrix
    seed: Code844
    companion: Code844
    # by_message[m] is the codeword of message m (bit i of m selects row i)
    by_message: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "by_message", tuple(codebook_ints(self.generator.ints())))

    @property
    def codebook(self) -> list[int]:
        return sorted(self.by_message)

    @property
    def n(self) -> int:
        return self.generator.n_cols

    @property
    def k(self) -> int:
        return self.generator.n_rows


@dataclass(frozen=True)
class ConstructionReport:
    n: int
    k: int
    d: int
    weight_dist: dict[int, int]
    self_dual: bool
    doubly_even: bool
    disjoint: bool
    lemma2_ok: bool

    @property
    def is_golay(self) -> bool:
        return (
            (self.n, self.k, self.d) == (24, 12, 8)
            and self.weight_dist == GOLAY_WEIGHTS
            and self.self_dual
            and self.doubly_even
            and self.disjoint
        )

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        doc = self.to_dict()
        doc["weight_dist"] = {str(w): c for w, c in self.weight_dist.items()}
        return json.dumps(doc, indent=2)

    def to_text(self) -> str:
        dist = " ".join(f"{w}:{c}" for w, c in self.weight_dist.items())
        lines = [
            f"n: {self.n}",
            f"k: {self.k}",
            f"d: {self.d}",
            f"weight_dist: {dist}",
            f"self_dual: {str(self.self_dual).lower()}",
            f"doubly_even: {str(self.doubly_even).lower()}",
            f"disjoint: {str(self.disjoint).lower()}",
            f"lemma2_ok: {str(self.lemma2_ok).lower()}",
        ]
        return "\n".join(lines) + "\n"


def build_array_C(c1: Code844) -> BitMatrix:
    """8x24 generator ``[G1 0 G1; 0 G1 G1]`` of the (24,8,8) product code."""
    return kronecker(SPC_GENERATOR, c1.generator)


def build_array_Cprime(c1p: Code844) -> BitMatrix:
    """4x24 generator ``(G1' G1' G1')`` of the (24,4,12) product code."""
    return kronecker(REPETITION_GENERATOR, c1p.generator)


def stack_direct_sum(g: BitMatrix, g_prime: BitMatrix) -> BitMatrix:
    """Stack two generators, raising if their row spaces intersect nontrivially."""
    stacked = g.vstack(g_prime)
    r = rank(stacked)
    if r != rank(g) + rank(g_prime) or r != stacked.n_rows:
        raise NotDisjointError(f"not disjoint: stacked rank {r} < {stacked.n_rows} rows")
    return stacked


def direct_sum(c1: Code844, c1p: Code844) -> GolayCode:
    generator = stack_direct_sum(build_array_C(c1), build_array_Cprime(c1p))
    return GolayCode(generator, c1, c1p)


def verify_golay(g: GolayCode) -> ConstructionReport:
    words = g.by_message
    weights = Counter(w.bit_count() for w in set(words))
    nonzero = [w for w in weights if w]
    gram = g.generator @ g.generator.transpose()
    k = rank(g.generator)
    return ConstructionReport(
        n=g.n,
        k=k,
        d=min(nonzero) if nonzero else 0,
        weight_dist=dict(sorted(weights.items())),
        self_dual=gram.is_zero() and 2 * k == g.n,
        doubly_even=all(w % 4 == 0 for w in weights),
        disjoint=k == g.generator.n_rows,
        lemma2_ok=check_weight4_distinct(g.seed, g.companion),
    )


def codeword_blocks(a: BitVector, b: BitVector, x: BitVector) -> BitVector:
    """The 24-bit word ``|a+x|b+x|a+b+x|``."""
    return (a + x).concat(b + x, a + b + x)


def golay_family(p: ParitySubmatrix, ch: G78Choices) -> list[GolayCode]:
    """The eight (24,12,8) codes from one seed, companions in reference order."""
    seed = build_systematic(p)
    return [direct_sum(seed, c) for c in companion_codes(p, ch)]


def systematic_sweep() -> list[tuple[ParitySubmatrix, str, ConstructionReport]]:
    """Every parity ordering with each of its valid permutations (24 x 6 codes)."""
    out = []
    for p in all_parity_orderings():
        seed = build_systematic(p)
        for perm in enumerate_valid_permutations(p):
            report = verify_golay(direct_sum(seed, apply_permutation(p, perm)))
            out.append((p, str(perm), report))
    return out


def check_turyn_equivalence() -> bool:
    g4 = apply_permutation(reference.EXAMPLE_PARITY, PermutationIndex(REFERENCE_PERMUTATIONS[3])).generator
    return row_space_equal(reference.EXAMPLE_G1, reference.TURYN_G) and row_space_equal(
        g4, reference.TURYN_G_PRIME
    )


def check_forney_equivalence() -> bool:
    """Forney's seed and companion satisfy the rules and give the Golay code."""
    seed = build_systematic(reference.FORNEY_PARITY)
    if not row_space_equal(seed.generator, reference.FORNEY_G1):
        return False
    rows = reference.FORNEY_G7.rows
    (x, r1), (y, r2) = rows[0].split(4), rows[1].split(4)
    if not validate_companion_rows(reference.FORNEY_PARITY, x, y, r1, r2):
        return False
    if rows[3].weight != 8 or rows[2].value not in (0xF0, 0x0F):
        return False
    companion = Code844(reference.FORNEY_G7, systematic=False)
    report = verify_golay(direct_sum(seed, companion))
    return report.is_golay and report.lemma2_ok

