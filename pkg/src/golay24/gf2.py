"""Bit vectors and bit matrices over GF(2).

Vectors are packed into Python ints. Symbol ``i`` (counting from the left of
the printed word) lives at bit ``i`` of the int, so the leftmost symbol is
the least significant bit. With that packing the integer value of an 8-bit
word is exactly its decimal rendering in the weight-4 tables.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

MAX_ENUMERATION_ROWS = 20


class GF2Error(ValueError):
    """Raised for malformed vectors or matrices and shape mismatches."""


@dataclass(frozen=True, order=True)
class BitVector:
    length: int
    value: int

    def __post_init__(self) -> None:
        if self.length <= 0:
            raise GF2Error(f"length must be positive, got {self.length}")
        if self.value < 0 or self.value >> self.length:
            raise GF2Error(f"value {self.value} does not fit in {self.length} bits")

    @classmethod
    def from_bits(cls, bits: Iterable[int]) -> BitVector:
        value = 0
        n = 0
        for n, b in enumerate(bits, start=1):
            if b not in (0, 1):
                raise GF2Error(f"symbol {b!r} is not a bit")
            value |= b << (n - 1)
        return cls(n, value)

    @classmethod
    def from_string(cls, text: str) -> BitVector:
        """Parse ``"1011 0001"`` style text; spaces are ignored."""
        symbols = text.replace(" ", "")
        if not symbols or set(symbols) - {"0", "1"}:
            raise GF2Error(f"not a 0/1 string: {text!r}")
        return cls.from_bits(int(c) for c in symbols)

    @classmethod
    def zeros(cls, length: int) -> BitVector:
        return cls(length, 0)

    @classmethod
    def ones(cls, length: int) -> BitVector:
        return cls(length, (1 << length) - 1)

    def __len__(self) -> int:
        return self.length

    def __getitem__(self, i: int) -> int:
        if not -self.length <= i < self.length:
            raise IndexError(i)
        return (self.value >> (i % self.length)) & 1

    def __iter__(self) -> Iterator[int]:
        return (self.value >> i & 1 for i in range(self.length))

    def __add__(self, other: BitVector) -> BitVector:
        if self.length != other.length:
            raise GF2Error(f"length mismatch: {self.length} vs {other.length}")
        return BitVector(self.length, self.value ^ other.value)

    __xor__ = __add__

    def __str__(self) -> str:
        return "".join("1" if b else "0" for b in self)

    @property
    def weight(self) -> int:
        return self.value.bit_count()

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.length) if self.value >> i & 1)

    def complement(self) -> BitVector:
        return BitVector(self.length, self.value ^ ((1 << self.length) - 1))

    def concat(self, *others: BitVector) -> BitVector:
        value, length = self.value, self.length
        for o in others:
            value |= o.value << length
            length += o.length
        return BitVector(length, value)

    def split(self, size: int) -> list[BitVector]:
        if self.length % size:
            raise GF2Error(f"cannot split length {self.length} into blocks of {size}")
        mask = (1 << size) - 1
        return [BitVector(size, (self.value >> s) & mask) for s in range(0, self.length, size)]


def hamming_distance(a: BitVector, b: BitVector) -> int:
    return (a + b).weight


@dataclass(frozen=True)
class BitMatrix:
    rows: tuple[BitVector, ...]
    n_cols: int

    def __post_init__(self) -> None:
        for r in self.rows:
            if r.length != self.n_cols:
                raise GF2Error(f"row of length {r.length} in a matrix with {self.n_cols} columns")

    @classmethod
    def from_rows(cls, rows: Iterable[BitVector | str]) -> BitMatrix:
        vecs = tuple(BitVector.from_string(r) if isinstance(r, str) else r for r in rows)
        if not vecs:
            raise GF2Error("matrix needs at least one row")
        return cls(vecs, vecs[0].length)

    @classmethod
    def from_ints(cls, values: Iterable[int], n_cols: int) -> BitMatrix:
        return cls(tuple(BitVector(n_cols, v) for v in values), n_cols)

    @classmethod
    def identity(cls, n: int) -> BitMatrix:
        return cls.from_ints((1 << i for i in range(n)), n)

    @classmethod
    def parse(cls, text: str) -> BitMatrix:
        """Read the line-oriented matrix text format ('#' lines are comments)."""
        rows = [
            line.strip()
            for line in text.splitlines()
            if line.strip() and not line.lstrip().startswith("#")
        ]
        for line in rows:
            # at most one space between symbols
            if "  " in line or set(line) - {"0", "1", " "}:
                raise GF2Error(f"malformed matrix row: {line!r}")
        return cls.from_rows(rows)

    def format(self, spaced: bool = False) -> str:
        sep = " " if spaced else ""
        return "\n".join(sep.join(str(r)) for r in self.rows) + "\n"

    @property
    def n_rows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return self.n_rows, self.n_cols

    def ints(self) -> list[int]:
        return [r.value for r in self.rows]

    def __getitem__(self, i: int) -> BitVector:
        return self.rows[i]

    def __iter__(self) -> Iterator[BitVector]:
        return iter(self.rows)

    def __len__(self) -> int:
        return len(self.rows)

    def __str__(self) -> str:
        return self.format(spaced=True).rstrip("\n")

    def vstack(self, other: BitMatrix) -> BitMatrix:
        if other.n_cols != self.n_cols:
            raise GF2Error(f"column mismatch: {self.n_cols} vs {other.n_cols}")
        return BitMatrix(self.rows + other.rows, self.n_cols)

    def hstack(self, *others: BitMatrix) -> BitMatrix:
        for o in others:
            if o.n_rows != self.n_rows:
                raise GF2Error(f"row mismatch: {self.n_rows} vs {o.n_rows}")
        rows = tuple(r.concat(*(o.rows[i] for o in others)) for i, r in enumerate(self.rows))
        return BitMatrix(rows, rows[0].length)

    def transpose(self) -> BitMatrix:
        return BitMatrix.from_ints(
            (sum(((r.value >> j) & 1) << i for i, r in enumerate(self.rows)) for j in range(self.n_cols)),
            self.n_rows,
        )

    def __matmul__(self, other: BitMatrix) -> BitMatrix:
        if self.n_cols != other.n_rows:
            raise GF2Error(f"cannot multiply {self.shape} by {other.shape}")
        return BitMatrix.from_ints((combine(other.ints(), r.value) for r in self.rows), other.n_cols)

    def is_zero(self) -> bool:
        return all(r.value == 0 for r in self.rows)


def combine(rows: Sequence[int], coeffs: int) -> int:
    """XOR together the rows selected by the bits of ``coeffs``."""
    acc = 0
    i = 0
    while coeffs:
        if coeffs & 1:
            acc ^= rows[i]
        coeffs >>= 1
        i += 1
    return acc


def kronecker(a: BitMatrix, b: BitMatrix) -> BitMatrix:
    """Kronecker product ``a ⊗ b``: block (i, j) is ``a[i, j] * b``."""
    if not a.rows or not b.rows:
        raise GF2Error("kronecker product of an empty matrix")
    rows = []
    for ra in a.rows:
        for rb in b.rows:
            value = 0
            for j in range(a.n_cols):
                if ra.value >> j & 1:
                    value |= rb.value << (j * b.n_cols)
            rows.append(value)
    return BitMatrix.from_ints(rows, a.n_cols * b.n_cols)


def echelon_basis(rows: Iterable[int]) -> list[int]:
    """Reduced row echelon basis of the span of ``rows``.

    The pivot of each basis vector is its lowest set bit and every other basis
    vector is zero at that position, so the result is a canonical description
    of the row space (sorted ascending).
    """
    basis: list[int] = []
    for v in rows:
        for b in basis:
            if v & (b & -b):
                v ^= b
        if v:
            pivot = v & -v
            basis = [b ^ v if b & pivot else b for b in basis]
            basis.append(v)
    return sorted(basis)


def rank(m: BitMatrix) -> int:
    return len(echelon_basis(m.ints()))


def row_space_key(m: BitMatrix) -> tuple[int, ...]:
    """Hashable canonical form of the row space."""
    return tuple(echelon_basis(m.ints()))


def row_space_equal(a: BitMatrix, b: BitMatrix) -> bool:
    if a.n_cols != b.n_cols:
        raise GF2Error(f"column mismatch: {a.n_cols} vs {b.n_cols}")
    return row_space_key(a) == row_space_key(b)


def in_row_space(m: BitMatrix, v: BitVector) -> bool:
    return rank(m) == len(echelon_basis(m.ints() + [v.value]))


def codebook_ints(rows: Sequence[int]) -> list[int]:
    """All 2**len(rows) combinations, built by doubling (duplicates kept)."""
    if len(rows) > MAX_ENUMERATION_ROWS:
        raise GF2Error(f"refusing to enumerate {len(rows)} rows (limit {MAX_ENUMERATION_ROWS})")
    words = [0]
    for r in rows:
        words += [w ^ r for w in words]
    return words


def enumerate_codebook(g: BitMatrix) -> tuple[BitVector, ...]:
    """Distinct codewords spanned by the rows of ``g``, in ascending value order."""
    return tuple(BitVector(g.n_cols, w) for w in sorted(set(codebook_ints(g.ints()))))


def weight_distribution(g: BitMatrix) -> dict[int, int]:
    counts = Counter(w.bit_count() for w in set(codebook_ints(g.ints())))
    return dict(sorted(counts.items()))


def min_distance(g: BitMatrix) -> int:
    weights = [w.bit_count() for w in codebook_ints(g.ints()) if w]
    if not weights:
        raise GF2Error("minimum distance of the zero code is undefined")
    return min(weights)
