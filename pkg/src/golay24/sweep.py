"""Exhaustive verification over every seed ordering."""

from __future__ import annotations

from dataclasses import dataclass, field

from golay24 import reference
from golay24.analysis import incidence_matrix, table_from_codes, verify_properties
from golay24.builder import check_forney_equivalence, check_turyn_equivalence, direct_sum, verify_golay
from golay24.component import (
    REFERENCE_PERMUTATIONS,
    Code844,
    all_parity_orderings,
    apply_permutation,
    build_systematic,
    enumerate_nonsystematic_companions,
    enumerate_valid_permutations,
)

BIBD_PARAMS = (8, 56, 14, 2, 2)


@dataclass
class SweepResult:
    checks: dict[str, bool] = field(default_factory=dict)
    codes_checked: int = 0

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def record(self, name: str, passed: bool) -> None:
        self.checks[name] = self.checks.get(name, True) and bool(passed)

    def to_text(self) -> str:
        lines = [f"{name}: {'pass' if ok else 'FAIL'}" for name, ok in self.checks.items()]
        lines.append(f"codes_checked: {self.codes_checked}")
        lines.append(f"result: {'pass' if self.ok else 'FAIL'}")
        return "\n".join(lines) + "\n"

    def to_dict(self) -> dict:
        return {"checks": dict(self.checks), "codes_checked": self.codes_checked, "ok": self.ok}


def full_sweep() -> SweepResult:
    result = SweepResult()
    for p in all_parity_orderings():
        seed = build_systematic(p)
        perms = enumerate_valid_permutations(p)
        result.record("six_valid_permutations", len(perms) == 6)
        result.record("permutations_are_4_cycles", all(not perm.fixed_points() for perm in perms))
        nonsys = enumerate_nonsystematic_companions(p)
        result.record("two_nonsystematic_subspaces", len(nonsys) == 2)

        companions = [apply_permutation(p, perm) for perm in perms]
        companions += [Code844(g, systematic=False) for g in nonsys]
        for c in companions:
            report = verify_golay(direct_sum(seed, c))
            result.record("golay_parameters", report.is_golay)
            result.record("weight4_distinct_from_seed", report.lemma2_ok)
            result.codes_checked += 1

        table = table_from_codes([seed, *companions])
        props = verify_properties(table)
        result.record("weight4_properties", props.ok)
        result.record("bibd_parameters", props.ok and incidence_matrix(table).params == BIBD_PARAMS)

    example_perms = {perm.mapping for perm in enumerate_valid_permutations(reference.EXAMPLE_PARITY)}
    result.record("reference_permutations", example_perms == set(REFERENCE_PERMUTATIONS))
    result.record("turyn_equivalence", check_turyn_equivalence())
    result.record("forney_equivalence", check_forney_equivalence())
    return result
