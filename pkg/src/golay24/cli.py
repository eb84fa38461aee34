"""Command-line interface.

Exit status: 0 on success, 1 on usage or validation errors, 2 when a
verification check fails.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from golay24 import reference
from golay24.analysis import incidence_matrix, table1, verify_properties
from golay24.builder import direct_sum, verify_golay
from golay24.codec import (
    build_trellis,
    decode_ml,
    decode_trellis,
    encode,
    simulate_bsc,
)
from golay24.component import (
    ConstructionError,
    G78Choices,
    ParitySubmatrix,
    build_systematic,
    companion,
)
from golay24.gf2 import BitVector, GF2Error

EXIT_OK, EXIT_USAGE, EXIT_FAILED = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(message)


@dataclass(frozen=True)
class CliConfig:
    subcommand: str
    parity: ParitySubmatrix
    variant: int | None
    g78: G78Choices
    out: Path | None
    format: str
    figure: Path | None = None
    words: tuple[str, ...] = ()
    decoder: str = "trellis"
    p_flip: float = 0.0
    trials: int = 0
    seed: int = 0
    csv: Path | None = None
    q_out: Path | None = None


def _build_parser() -> _Parser:
    shared = _Parser(add_help=False)
    shared.add_argument("--p", dest="parity", default=str(reference.EXAMPLE_PARITY),
                        help="seed parity rows, e.g. 1101,0111,1110,1011")
    shared.add_argument("--variant", type=int, help="companion code 1..8")
    shared.add_argument("--g78", default=str(reference.EXAMPLE_CHOICES),
                        help="x,y,r71,r72,r81,r82 as 4-bit strings")
    shared.add_argument("--out", type=Path, help="write output here instead of stdout")
    shared.add_argument("--format", choices=("text", "machine"), default="text")

    parser = _Parser(prog="golay24", description="(24,12,8) Golay code from two array codes")
    sub = parser.add_subparsers(dest="subcommand")

    sub.add_parser("construct", parents=[shared], help="print the 12x24 generator")
    p = sub.add_parser("verify", parents=[shared], help="check one construction or run the full sweep")
    p.add_argument("--figure", type=Path, help="weight distribution plot (single variant only)")
    p = sub.add_parser("table", parents=[shared], help="weight-4 codeword table")
    p.add_argument("--csv", type=Path, help="also write the table as CSV")
    p.add_argument("--q-out", type=Path, help="write the incidence matrix in matrix text format")
    p.add_argument("--figure", type=Path, help="incidence matrix plot")
    p = sub.add_parser("encode", parents=[shared], help="encode 12-bit messages")
    p.add_argument("words", nargs="*", help="0/1 strings; read from stdin when omitted")
    p = sub.add_parser("decode", parents=[shared], help="decode 24-bit received words")
    p.add_argument("words", nargs="*", help="0/1 strings; read from stdin when omitted")
    p.add_argument("--decoder", choices=("trellis", "ml"), default="trellis")
    p = sub.add_parser("simulate", parents=[shared], help="binary symmetric channel simulation")
    p.add_argument("--p-flip", type=float, required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--figure", type=Path, help="word error rate plot")
    return parser


def parse_and_validate(argv: Sequence[str]) -> CliConfig:
    parser = _build_parser()
    if not argv:
        raise UsageError(parser.format_usage().strip())
    ns = parser.parse_args(list(argv))
    if ns.subcommand is None:
        raise UsageError(parser.format_usage().strip())
    if ns.variant is not None and not 1 <= ns.variant <= 8:
        raise UsageError(f"--variant must be in 1..8, got {ns.variant}")
    try:
        parity = ParitySubmatrix.parse(ns.parity)
        g78 = G78Choices.parse(ns.g78)
    except ConstructionError as exc:
        raise UsageError(str(exc)) from None
    extra = {}
    if ns.subcommand == "simulate":
        if not 0.0 <= ns.p_flip <= 1.0:
            raise UsageError(f"--p-flip must lie in [0, 1], got {ns.p_flip}")
        if ns.trials <= 0:
            raise UsageError(f"--trials must be positive, got {ns.trials}")
        extra = dict(p_flip=ns.p_flip, trials=ns.trials, seed=ns.seed)
    if ns.subcommand in ("encode", "decode"):
        extra["words"] = tuple(ns.words)
    if ns.subcommand == "decode":
        extra["decoder"] = ns.decoder
    if ns.subcommand == "table":
        extra.update(csv=ns.csv, q_out=ns.q_out)
    return CliConfig(
        subcommand=ns.subcommand,
        parity=parity,
        variant=ns.variant,
        g78=g78,
        out=ns.out,
        format=ns.format,
        figure=getattr(ns, "figure", None),
        **extra,
    )


def _golay(cfg: CliConfig):
    variant = cfg.variant or 1
    return direct_sum(build_systematic(cfg.parity), companion(cfg.parity, variant, cfg.g78))


def _read_words(cfg: CliConfig, length: int) -> list[BitVector]:
    lines = cfg.words or tuple(line for line in sys.stdin.read().split() if line)
    out = []
    for text in lines:
        v = BitVector.from_string(text)
        if v.length != length:
            raise GF2Error(f"expected {length} symbols, got {v.length}: {text!r}")
        out.append(v)
    return out


def _construct(cfg: CliConfig) -> tuple[str, int]:
    g = _golay(cfg)
    if cfg.format == "machine":
        doc = {
            "parity": str(cfg.parity),
            "variant": cfg.variant or 1,
            "generator": [str(r) for r in g.generator],
        }
        return json.dumps(doc, indent=2) + "\n", EXIT_OK
    return g.generator.format(), EXIT_OK


def _verify(cfg: CliConfig) -> tuple[str, int]:
    if cfg.variant is None:
        from golay24.sweep import full_sweep

        result = full_sweep()
        body = json.dumps(result.to_dict(), indent=2) + "\n" if cfg.format == "machine" else result.to_text()
        return body, EXIT_OK if result.ok else EXIT_FAILED
    report = verify_golay(_golay(cfg))
    if cfg.figure:
        from golay24.plotting import plot_weight_distribution

        plot_weight_distribution(report.weight_dist, cfg.figure, f"variant {cfg.variant}")
    body = report.to_json() + "\n" if cfg.format == "machine" else report.to_text()
    return body, EXIT_OK if report.is_golay and report.lemma2_ok else EXIT_FAILED


def _table(cfg: CliConfig) -> tuple[str, int]:
    t = table1(cfg.parity, cfg.g78)
    props = verify_properties(t)
    q = incidence_matrix(t) if props.ok else None
    if cfg.csv:
        cfg.csv.write_text(t.to_csv())
    if cfg.q_out and q is not None:
        cfg.q_out.write_text(q.as_bitmatrix().format())
    if cfg.figure and q is not None:
        from golay24.plotting import plot_incidence

        plot_incidence(q, cfg.figure)
    if cfg.format == "machine":
        doc = {
            "rows": {label: list(row) for label, row in zip(t.labels, t.rows)},
            "properties_ok": props.ok,
            "union_companions": props.union_companions,
            "union_all": props.union_all,
            "bibd": list(q.params) if q else None,
        }
        body = json.dumps(doc, indent=2) + "\n"
    else:
        body = t.to_text() + "\n" + props.to_text()
        if q is not None:
            body += "bibd: ({}, {}, {}, {}, {})\n".format(*q.params)
    return body, EXIT_OK if props.ok else EXIT_FAILED


def _encode(cfg: CliConfig) -> tuple[str, int]:
    g = _golay(cfg)
    pairs = [(m, encode(m, g)) for m in _read_words(cfg, g.k)]
    if cfg.format == "machine":
        doc = [{"message": str(m), "codeword": str(c)} for m, c in pairs]
        return json.dumps(doc, indent=2) + "\n", EXIT_OK
    return "".join(f"{c}\n" for _, c in pairs), EXIT_OK


def _decode(cfg: CliConfig) -> tuple[str, int]:
    g = _golay(cfg)
    words = _read_words(cfg, g.n)
    if cfg.decoder == "ml":
        results = [decode_ml(r, g) for r in words]
    else:
        t = build_trellis(g)
        results = [decode_trellis(r, t, g) for r in words]
    if cfg.format == "machine":
        doc = [
            {"received": str(r), "codeword": str(d.codeword), "message": str(d.message),
             "distance": d.distance, "tie": d.tie}
            for r, d in zip(words, results)
        ]
        return json.dumps(doc, indent=2) + "\n", EXIT_OK
    lines = [f"{d.codeword} {d.message} {d.distance} {str(d.tie).lower()}\n" for d in results]
    return "".join(lines), EXIT_OK


def _simulate(cfg: CliConfig) -> tuple[str, int]:
    stats = simulate_bsc(_golay(cfg), cfg.p_flip, cfg.trials, cfg.seed)
    if cfg.figure:
        from golay24.plotting import plot_simulation

        plot_simulation(stats, cfg.figure)
    body = stats.to_json() + "\n" if cfg.format == "machine" else stats.to_text()
    return body, EXIT_OK


_HANDLERS = {
    "construct": _construct,
    "verify": _verify,
    "table": _table,
    "encode": _encode,
    "decode": _decode,
    "simulate": _simulate,
}


def run(cfg: CliConfig) -> int:
    body, status = _HANDLERS[cfg.subcommand](cfg)
    if cfg.out:
        cfg.out.write_text(body)
    else:
        sys.stdout.write(body)
    return status


def main(argv: Sequence[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        return run(parse_and_validate(argv))
    except UsageError as exc:
        print(f"golay24: error: {' '.join(str(exc).split())}", file=sys.stderr)
        return EXIT_USAGE
    except (ConstructionError, GF2Error, ValueError, OSError) as exc:
        print(f"golay24: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
