"""Weight-4 codeword tables, their intersection properties and the block design.

An 8-tuple is rendered as the integer whose low-order bit is the leftmost
symbol, so ``10111000`` is 29. Complementary words sum to 255.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from golay24.component import Code844, G78Choices, ParitySubmatrix, build_systematic, companion_codes
from golay24.gf2 import BitMatrix, BitVector, GF2Error

ROW_LABELS = ("C1",) + tuple(f"C'({i})" for i in range(1, 9))


def to_decimal(v: BitVector) -> int:
    if v.length != 8:
        raise GF2Error(f"decimal rendering needs an 8-tuple, got length {v.length}")
    return v.value


def from_decimal(n: int) -> BitVector:
    return BitVector(8, n)


@dataclass(frozen=True)
class Weight4Table:
    labels: tuple[str, ...]
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if len(self.labels) != len(self.rows):
            raise ValueError("one label per row")
        for label, row in zip(self.labels, self.rows):
            if len(row) != 14 or len(set(row)) != 14:
                raise ValueError(f"row {label} must hold 14 distinct values")
            if any(not 0 <= n <= 255 or n.bit_count() != 4 for n in row):
                raise ValueError(f"row {label} has a value that is not a weight-4 8-tuple")

    @property
    def seed_row(self) -> frozenset[int]:
        return frozenset(self.rows[0])

    @property
    def companion_rows(self) -> list[frozenset[int]]:
        return [frozenset(r) for r in self.rows[1:]]

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        for label, row in zip(self.labels, self.rows):
            writer.writerow([label, *row])
        return buf.getvalue()

    def to_text(self) -> str:
        width = max(len(label) for label in self.labels)
        lines = [f"{'Code':<{width}}  Weight-4 codewords (in decimal)"]
        for label, row in zip(self.labels, self.rows):
            lines.append(f"{label:<{width}}  " + " ".join(f"{n:3d}" for n in row))
        return "\n".join(lines) + "\n"


def table_from_codes(codes: Sequence[Code844]) -> Weight4Table:
    """Seed first, then the companions in order."""
    rows = tuple(tuple(sorted(to_decimal(w) for w in c.weight4)) for c in codes)
    return Weight4Table(ROW_LABELS[: len(rows)], rows)


def table1(p: ParitySubmatrix, ch: G78Choices) -> Weight4Table:
    return table_from_codes([build_systematic(p), *companion_codes(p, ch)])


@dataclass(frozen=True)
class PropertyReport:
    sizes_ok: bool
    seed_disjoint: bool
    pairwise_two: bool
    pairs_complementary: bool
    union_companions: int
    union_all: int

    @property
    def ok(self) -> bool:
        return (
            self.sizes_ok
            and self.seed_disjoint
            and self.pairwise_two
            and self.pairs_complementary
            and self.union_companions == 56
            and self.union_all == 70
        )

    def to_text(self) -> str:
        return "".join(
            f"{k}: {str(v).lower() if isinstance(v, bool) else v}\n"
            for k, v in (
                ("sizes_14", self.sizes_ok),
                ("seed_disjoint", self.seed_disjoint),
                ("pairwise_intersection_2", self.pairwise_two),
                ("intersections_complementary", self.pairs_complementary),
                ("union_companions", self.union_companions),
                ("union_all", self.union_all),
            )
        )


def pairwise_intersections(t: Weight4Table) -> dict[tuple[int, int], frozenset[int]]:
    """Intersections between companion rows, keyed by 1-based companion numbers."""
    comp = t.companion_rows
    return {(i + 1, j + 1): comp[i] & comp[j] for i, j in combinations(range(len(comp)), 2)}


def verify_properties(t: Weight4Table) -> PropertyReport:
    seed, comp = t.seed_row, t.companion_rows
    inter = pairwise_intersections(t).values()
    union_comp = frozenset().union(*comp)
    return PropertyReport(
        sizes_ok=all(len(r) == 14 for r in t.rows),
        seed_disjoint=all(not seed & r for r in comp),
        pairwise_two=all(len(s) == 2 for s in inter),
        pairs_complementary=all(len(s) == 2 and sum(s) == 255 for s in inter),
        union_companions=len(union_comp),
        union_all=len(union_comp | seed),
    )


@dataclass(frozen=True)
class IncidenceMatrix:
    entries: tuple[tuple[int, ...], ...]
    columns: tuple[int, ...]

    @property
    def v(self) -> int:
        return len(self.entries)

    @property
    def b(self) -> int:
        return len(self.columns)

    def row_sums(self) -> list[int]:
        return [sum(r) for r in self.entries]

    def column_sums(self) -> list[int]:
        return [sum(col) for col in zip(*self.entries)]

    def inner_products(self) -> list[int]:
        return [sum(a & b for a, b in zip(r, s)) for r, s in combinations(self.entries, 2)]

    @property
    def params(self) -> tuple[int, int, int | None, int | None, int | None]:
        """``(v, b, r', k', lambda)``; a slot is None when it is not constant."""

        def const(xs: list[int]) -> int | None:
            return xs[0] if xs and len(set(xs)) == 1 else None

        return self.v, self.b, const(self.row_sums()), const(self.column_sums()), const(self.inner_products())

    def as_bitmatrix(self) -> BitMatrix:
        return BitMatrix.from_rows(BitVector.from_bits(r) for r in self.entries)


def incidence_matrix(t: Weight4Table) -> IncidenceMatrix:
    """Rows are companion weight-4 sets, columns their union in ascending order."""
    comp = t.companion_rows
    columns = tuple(sorted(frozenset().union(*comp)))
    entries = tuple(tuple(int(c in row) for c in columns) for row in comp)
    return IncidenceMatrix(entries, columns)
