"""The (8,4,4) component codes.

A systematic seed code has generator ``(I4 | P)`` where the rows of ``P`` are
the four weight-3 4-tuples in some order. From a seed we derive eight
companion codes: six by permuting the rows of ``P`` and two non-systematic
ones that contain ``00001111`` and ``11110000``.

4-tuples follow the same packing as :class:`~golay24.gf2.BitVector`: the
leftmost printed symbol is bit 0.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations, product
from typing import Iterable

from golay24.gf2 import (
    BitMatrix,
    BitVector,
    GF2Error,
    enumerate_codebook,
    rank,
    row_space_key,
    weight_distribution,
)

WEIGHT3 = frozenset(BitVector.from_string(s) for s in ("1110", "1101", "1011", "0111"))
WEIGHT2 = tuple(sorted(BitVector(4, v) for v in range(16) if v.bit_count() == 2))
COMPONENT_WEIGHTS = {0: 1, 4: 14, 8: 1}

ALL_ONES = BitVector.ones(8)
# (00001111); (11110000) = G_H + ALL_ONES spans the same code
G_H = BitVector.from_string("00001111")
LEFT_HALF = BitVector.from_string("11110000")

# Companion numbering used for variants 1..6, in the order the construction
# is usually tabulated. enumerate_valid_permutations() returns the same six
# in lexicographic order.
REFERENCE_PERMUTATIONS = ((3, 1, 4, 2), (4, 1, 2, 3), (2, 4, 1, 3), (4, 3, 1, 2), (2, 3, 4, 1), (3, 4, 2, 1))


class ConstructionError(ValueError):
    """An input violates the construction criteria or rules."""


@dataclass(frozen=True)
class ParitySubmatrix:
    rows: tuple[BitVector, BitVector, BitVector, BitVector]

    def __post_init__(self) -> None:
        if len(self.rows) != 4:
            raise ConstructionError(f"parity submatrix needs 4 rows, got {len(self.rows)}")
        bad = [str(r) for r in self.rows if r not in WEIGHT3]
        if bad:
            raise ConstructionError(f"parity rows must be weight-3 4-tuples: {', '.join(bad)}")
        if len(set(self.rows)) != 4:
            raise ConstructionError("parity rows must be distinct")

    @classmethod
    def parse(cls, text: str) -> ParitySubmatrix:
        """Parse ``"1101,0111,1110,1011"``."""
        try:
            rows = tuple(BitVector.from_string(s.strip()) for s in text.split(","))
        except GF2Error as exc:
            raise ConstructionError(str(exc)) from None
        if any(r.length != 4 for r in rows):
            raise ConstructionError(f"parity rows must have 4 symbols: {text!r}")
        return cls(rows)  # type: ignore[arg-type]

    def __getitem__(self, i: int) -> BitVector:
        """1-based row access, P[1]..P[4]."""
        if not 1 <= i <= 4:
            raise IndexError(i)
        return self.rows[i - 1]

    def __str__(self) -> str:
        return ",".join(str(r) for r in self.rows)

    def pair_sum(self, i: int, j: int) -> BitVector:
        return self[i] + self[j]

    def as_matrix(self) -> BitMatrix:
        return BitMatrix(self.rows, 4)


@dataclass(frozen=True)
class PermutationIndex:
    """Row permutation with gather semantics: row i of P' is row mapping[i] of P."""

    mapping: tuple[int, int, int, int]

    def __post_init__(self) -> None:
        if sorted(self.mapping) != [1, 2, 3, 4]:
            raise ConstructionError(f"not a permutation of 1..4: {self.mapping}")

    def apply(self, p: ParitySubmatrix) -> ParitySubmatrix:
        return ParitySubmatrix(tuple(p[k] for k in self.mapping))  # type: ignore[arg-type]

    def fixed_points(self) -> list[int]:
        return [i for i, k in enumerate(self.mapping, start=1) if i == k]

    def __str__(self) -> str:
        return "{" + ", ".join(map(str, self.mapping)) + "}"


@dataclass(frozen=True)
class G78Choices:
    """Left halves ``x``, ``y`` and right halves of the non-systematic generators.

    ``r71``/``r72`` are the right halves of the first/second row of G'(7),
    ``r81``/``r82`` those of G'(8).
    """

    x: BitVector
    y: BitVector
    r71: BitVector
    r72: BitVector
    r81: BitVector
    r82: BitVector

    def __post_init__(self) -> None:
        for name in ("x", "y", "r71", "r72", "r81", "r82"):
            v = getattr(self, name)
            if v.length != 4 or v.weight != 2:
                raise ConstructionError(f"{name} must be a weight-2 4-tuple, got {v}")

    @classmethod
    def parse(cls, text: str) -> G78Choices:
        """Parse six comma-separated 4-tuples in the order x, y, r71, r72, r81, r82."""
        parts = [s.strip() for s in text.split(",")]
        if len(parts) != 6:
            raise ConstructionError(f"expected 6 comma-separated 4-tuples, got {len(parts)}")
        try:
            return cls(*(BitVector.from_string(s) for s in parts))
        except GF2Error as exc:
            raise ConstructionError(str(exc)) from None

    def __str__(self) -> str:
        return ",".join(str(v) for v in (self.x, self.y, self.r71, self.r72, self.r81, self.r82))


@dataclass(frozen=True)
class Code844:
    generator: BitMatrix
    systematic: bool
    parity: ParitySubmatrix | None = None
    codebook: tuple[BitVector, ...] = field(init=False, repr=False, compare=False)
    weight4: tuple[BitVector, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        g = self.generator
        if g.shape != (4, 8):
            raise ConstructionError(f"generator must be 4x8, got {g.shape[0]}x{g.shape[1]}")
        if rank(g) != 4:
            raise ConstructionError("generator rows are linearly dependent")
        if self.systematic != (self.parity is not None):
            raise ConstructionError("parity submatrix is given iff the code is systematic")
        dist = weight_distribution(g)
        if dist != COMPONENT_WEIGHTS:
            raise ConstructionError(f"not an (8,4,4) code with the expected weights: {dist}")
        book = enumerate_codebook(g)
        object.__setattr__(self, "codebook", book)
        object.__setattr__(self, "weight4", tuple(w for w in book if w.weight == 4))

    def __contains__(self, v: BitVector) -> bool:
        return v in self.codebook

    def same_subspace(self, other: Code844) -> bool:
        return row_space_key(self.generator) == row_space_key(other.generator)


def build_systematic(p: ParitySubmatrix) -> Code844:
    identity = BitMatrix.identity(4)
    return Code844(identity.hstack(p.as_matrix()), systematic=True, parity=p)


def all_parity_orderings() -> list[ParitySubmatrix]:
    """The 24 orderings of the weight-3 tuples, lexicographic by printed rows."""
    rows = sorted(WEIGHT3, key=str)
    return [ParitySubmatrix(perm) for perm in permutations(rows)]


def check_permutation_criteria(p: ParitySubmatrix, perm: PermutationIndex) -> bool:
    """No row stays put, and no pair of rows maps onto itself as a set.

    ``p`` is accepted for symmetry with the construction; its rows are
    distinct, so the criteria reduce to properties of the index mapping.
    """
    permuted = perm.apply(p)
    if any(permuted[i] == p[i] for i in range(1, 5)):
        return False
    for i in range(1, 5):
        for j in range(i + 1, 5):
            if {permuted[i], permuted[j]} == {p[i], p[j]}:
                return False
    return True


def enumerate_valid_permutations(p: ParitySubmatrix | None = None) -> list[PermutationIndex]:
    if p is None:
        p = ParitySubmatrix(tuple(sorted(WEIGHT3, key=str)))  # type: ignore[arg-type]
    candidates = (PermutationIndex(m) for m in permutations((1, 2, 3, 4)))
    return [perm for perm in candidates if check_permutation_criteria(p, perm)]


def apply_permutation(p: ParitySubmatrix, perm: PermutationIndex) -> Code844:
    if not check_permutation_criteria(p, perm):
        raise ConstructionError(f"permutation {perm} violates the permutation criteria")
    return build_systematic(perm.apply(p))


def _equal_or_complement(a: BitVector, b: BitVector) -> bool:
    return a == b or a == b.complement()


def validate_companion_rows(
    p: ParitySubmatrix, x: BitVector, y: BitVector, right1: BitVector, right2: BitVector
) -> bool:
    """Rules for a single non-systematic generator with rows ``x|right1``, ``y|right2``."""
    if x == y or x == y.complement():
        return False
    if _equal_or_complement(right1, right2):
        return False
    i, j = (k + 1 for k in x.support)
    if _equal_or_complement(right1, p.pair_sum(i, j)):
        return False
    i, j = (k + 1 for k in y.support)
    if _equal_or_complement(right2, p.pair_sum(i, j)):
        return False
    return True


def validate_g78_choices(p: ParitySubmatrix, ch: G78Choices) -> bool:
    """Check the three construction rules for the G'(7)/G'(8) pair.

    Every "not equal" condition between right halves (and against the pair
    sums of parity rows) is read as "neither equal nor complementary".
    """
    if _equal_or_complement(ch.r71, ch.r81) or _equal_or_complement(ch.r72, ch.r82):
        return False
    return validate_companion_rows(p, ch.x, ch.y, ch.r71, ch.r72) and validate_companion_rows(
        p, ch.x, ch.y, ch.r81, ch.r82
    )


def nonsystematic_generator(x: BitVector, y: BitVector, right1: BitVector, right2: BitVector) -> BitMatrix:
    return BitMatrix((x.concat(right1), y.concat(right2), G_H, ALL_ONES), 8)


def build_g7_g8(p: ParitySubmatrix, ch: G78Choices) -> tuple[Code844, Code844]:
    if not validate_g78_choices(p, ch):
        raise ConstructionError(f"choices {ch} violate the construction rules for P = {p}")
    g7 = nonsystematic_generator(ch.x, ch.y, ch.r71, ch.r72)
    g8 = nonsystematic_generator(ch.x, ch.y, ch.r81, ch.r82)
    return Code844(g7, systematic=False), Code844(g8, systematic=False)


def weight4_codewords(c: Code844) -> tuple[BitVector, ...]:
    return c.weight4


def check_weight4_distinct(a: Code844, b: Code844) -> bool:
    return not set(a.weight4) & set(b.weight4)


def is_two_and_two(v: BitVector) -> bool:
    left, right = v.split(4)
    return left.weight == 2 and right.weight == 2


def iter_g78_candidates() -> Iterable[G78Choices]:
    for fields in product(WEIGHT2, repeat=6):
        yield G78Choices(*fields)


def enumerate_nonsystematic_companions(p: ParitySubmatrix) -> list[BitMatrix]:
    """Distinct row spaces reachable by any rule-valid choice, one canonical generator each.

    Each returned generator is the reduced echelon basis of the subspace; the
    list is ordered by the sorted decimal values of the subspaces' weight-4 words.
    """
    seen: dict[tuple[int, ...], BitMatrix] = {}
    for ch in iter_g78_candidates():
        if not validate_g78_choices(p, ch):
            continue
        for right1, right2 in ((ch.r71, ch.r72), (ch.r81, ch.r82)):
            g = nonsystematic_generator(ch.x, ch.y, right1, right2)
            seen.setdefault(row_space_key(g), g)
    codes = [Code844(BitMatrix.from_ints(key, 8), systematic=False) for key in seen]
    codes.sort(key=lambda c: [w.value for w in c.weight4])
    return [c.generator for c in codes]


def companion_codes(p: ParitySubmatrix, ch: G78Choices) -> list[Code844]:
    """All eight companions C'(1)..C'(8) in reference numbering."""
    perms = [PermutationIndex(m) for m in REFERENCE_PERMUTATIONS]
    out = [apply_permutation(p, perm) for perm in perms]
    out.extend(build_g7_g8(p, ch))
    return out


def companion(p: ParitySubmatrix, variant: int, ch: G78Choices) -> Code844:
    if not 1 <= variant <= 8:
        raise ConstructionError(f"variant must be in 1..8, got {variant}")
    if variant <= 6:
        return apply_permutation(p, PermutationIndex(REFERENCE_PERMUTATIONS[variant - 1]))
    return build_g7_g8(p, ch)[variant - 7]

