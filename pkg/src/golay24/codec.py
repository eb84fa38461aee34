"""Encoding, hard-decision decoding and binary symmetric channel simulation.

Words are handled as 24-bit integers in the library's packing (symbol 0 is
bit 0). Both decoders break ties between equally distant codewords the same
way: the smallest integer wins. That makes the trellis decoder bit-exact
against the exhaustive one, not just distance-exact.
"""

from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass
from functools import lru_cache

import numpy as np

from golay24.builder import GolayCode
from golay24.gf2 import BitVector, GF2Error

SECTION = 8
_VALUE_BITS = 24
_CHUNK = 4096


@dataclass(frozen=True)
class DecodeResult:
    codeword: BitVector
    message: BitVector
    distance: int
    tie: bool


@dataclass(frozen=True)
class _Tables:
    codebook: np.ndarray  # sorted ascending, uint32
    messages: np.ndarray  # messages[i] encodes to codebook[i]
    by_message: np.ndarray


@lru_cache(maxsize=32)
def _tables(g: GolayCode) -> _Tables:
    by_message = np.array(g.by_message, dtype=np.uint32)
    order = np.argsort(by_message, kind="stable")
    return _Tables(by_message[order], order.astype(np.uint32), by_message)


def _check_length(v: BitVector, n: int, what: str) -> None:
    if v.length != n:
        raise GF2Error(f"{what} must have length {n}, got {v.length}")


def encode(msg: BitVector, g: GolayCode) -> BitVector:
    _check_length(msg, g.k, "message")
    return BitVector(g.n, g.by_message[msg.value])


def message_of(codeword: int, g: GolayCode) -> int:
    t = _tables(g)
    i = int(np.searchsorted(t.codebook, codeword))
    if i == len(t.codebook) or t.codebook[i] != codeword:
        raise GF2Error(f"{codeword:#x} is not a codeword")
    return int(t.messages[i])


def decode_ml_many(words: np.ndarray, g: GolayCode) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Exhaustive nearest-codeword search.

    Returns ``(codewords, distances, ties)`` arrays aligned with ``words``.
    """
    words = np.asarray(words, dtype=np.uint32).ravel()
    book = _tables(g).codebook
    out_cw = np.empty(len(words), dtype=np.uint32)
    out_d = np.empty(len(words), dtype=np.int64)
    out_tie = np.empty(len(words), dtype=bool)
    step = max(1, (1 << 22) // len(book))
    for s in range(0, len(words), step):
        dist = np.bitwise_count(words[s : s + step, None] ^ book[None, :])
        best = dist.argmin(axis=1)  # first minimum = smallest codeword
        dmin = dist[np.arange(len(best)), best]
        out_cw[s : s + step] = book[best]
        out_d[s : s + step] = dmin
        out_tie[s : s + step] = (dist == dmin[:, None]).sum(axis=1) > 1
    return out_cw, out_d, out_tie


def _result(cw: int, d: int, tie: bool, g: GolayCode) -> DecodeResult:
    return DecodeResult(BitVector(g.n, cw), BitVector(g.k, message_of(cw, g)), d, tie)


def decode_ml(r: BitVector, g: GolayCode) -> DecodeResult:
    _check_length(r, g.n, "received word")
    cw, d, tie = decode_ml_many(np.array([r.value]), g)
    return _result(int(cw[0]), int(d[0]), bool(tie[0]), g)


@dataclass(frozen=True)
class TrellisSection:
    """Branches of one section, sorted by destination state.

    ``starts[s]`` is the first branch entering state ``s``.
    """

    offset: int
    src: np.ndarray
    dst: np.ndarray
    labels: np.ndarray
    starts: np.ndarray


@dataclass(frozen=True)
class Trellis:
    n: int
    boundaries: tuple[int, ...]
    states: tuple[tuple[int, ...], ...]  # canonical past-coset label of each state
    sections: tuple[TrellisSection, ...]

    @property
    def boundary_profile(self) -> list[int]:
        return [len(s) for s in self.states]

    @property
    def edges(self) -> list[list[tuple[int, int, int]]]:
        return [
            list(zip(sec.src.tolist(), sec.dst.tolist(), sec.labels.tolist())) for sec in self.sections
        ]

    def path_count(self) -> int:
        counts = [1]
        for sec, nxt in zip(self.sections, self.states[1:]):
            new = [0] * len(nxt)
            for a, b in zip(sec.src.tolist(), sec.dst.tolist()):
                new[b] += counts[a]
            counts = new
        return sum(counts)

    def paths(self) -> list[int]:
        """Every start-to-end path, spelled as a 24-bit word."""
        partial = {0: [0]}
        for sec in self.sections:
            nxt: dict[int, list[int]] = {}
            for a, b, lab in zip(sec.src.tolist(), sec.dst.tolist(), sec.labels.tolist()):
                for w in partial.get(a, ()):
                    nxt.setdefault(b, []).append(w | lab << sec.offset)
            partial = nxt
        return [w for ws in partial.values() for w in ws]


def _past_subcode(words: list[int], mask: int) -> list[int]:
    return [w for w in words if not w & ~mask]


def build_trellis(g: GolayCode, section: int = SECTION) -> Trellis:
    """Minimal sectionalized trellis.

    The state of a codeword at boundary ``t`` is its first ``t`` symbols
    reduced modulo the codewords supported entirely before ``t``.
    """
    n = g.n
    if n % section:
        raise GF2Error(f"length {n} is not a multiple of the section length {section}")
    words = list(g.by_message)
    boundaries = tuple(range(0, n + 1, section))
    state_of: list[dict[int, int]] = []
    labels_per_boundary = []
    for t in boundaries:
        if t == n:
            label = dict.fromkeys(words, 0)
        else:
            mask = (1 << t) - 1
            sub = _past_subcode(words, mask)
            label = {w: min((w & mask) ^ s for s in sub) for w in words}
        distinct = sorted(set(label.values()))
        index = {lab: i for i, lab in enumerate(distinct)}
        state_of.append({w: index[label[w]] for w in words})
        labels_per_boundary.append(tuple(distinct))

    sections = []
    smask = (1 << section) - 1
    for k, t in enumerate(boundaries[:-1]):
        branches = sorted(
            {(state_of[k + 1][w], state_of[k][w], (w >> t) & smask) for w in words}
        )
        dst, src, lab = (np.array(col, dtype=np.int64) for col in zip(*branches))
        n_states = len(labels_per_boundary[k + 1])
        starts = np.searchsorted(dst, np.arange(n_states))
        sections.append(TrellisSection(t, src, dst, lab.astype(np.uint32), starts))
    return Trellis(n, boundaries, tuple(labels_per_boundary), tuple(sections))


def viterbi_many(words: np.ndarray, t: Trellis) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Hard-decision Viterbi over a batch; same outputs as :func:`decode_ml_many`.

    Survivors are ranked by the key ``distance << 24 | partial word`` so that
    among equally distant paths entering a state the one with the smaller
    prefix survives; ties are detected by counting minimum-distance paths.
    """
    words = np.asarray(words, dtype=np.int64).ravel()
    out_cw = np.empty(len(words), dtype=np.uint32)
    out_d = np.empty(len(words), dtype=np.int64)
    out_tie = np.empty(len(words), dtype=bool)
    for s in range(0, len(words), _CHUNK):
        batch = words[s : s + _CHUNK]
        key = np.zeros((len(batch), 1), dtype=np.int64)
        count = np.ones((len(batch), 1), dtype=np.int64)
        for sec in t.sections:
            piece = (batch >> sec.offset) & ((1 << SECTION) - 1)
            metric = np.bitwise_count(piece[:, None] ^ sec.labels[None, :].astype(np.int64)).astype(np.int64)
            cand = key[:, sec.src] + (metric << _VALUE_BITS) + (sec.labels.astype(np.int64) << sec.offset)
            key = np.minimum.reduceat(cand, sec.starts, axis=1)
            best = key >> _VALUE_BITS
            hit = (cand >> _VALUE_BITS) == best[:, sec.dst]
            count = np.add.reduceat(np.where(hit, count[:, sec.src], 0), sec.starts, axis=1)
        out_cw[s : s + _CHUNK] = key[:, 0] & ((1 << _VALUE_BITS) - 1)
        out_d[s : s + _CHUNK] = key[:, 0] >> _VALUE_BITS
        out_tie[s : s + _CHUNK] = count[:, 0] > 1
    return out_cw, out_d, out_tie


def decode_trellis(r: BitVector, t: Trellis, g: GolayCode) -> DecodeResult:
    _check_length(r, t.n, "received word")
    cw, d, tie = viterbi_many(np.array([r.value]), t)
    return _result(int(cw[0]), int(d[0]), bool(tie[0]), g)


def binomial_tail(n: int, p: float, at_least: int) -> float:
    """P(X >= at_least) for X ~ Binomial(n, p)."""
    return sum(math.comb(n, k) * p**k * (1 - p) ** (n - k) for k in range(at_least, n + 1))


@dataclass(frozen=True)
class SimulationStats:
    p: float
    trials: int
    seed: int
    word_errors: int
    wer: float
    channel_ber: float

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_text(self) -> str:
        return "".join(f"{k}: {v}\n" for k, v in self.to_dict().items())


def simulate_bsc(
    g: GolayCode, p: float, trials: int, seed: int, trellis: Trellis | None = None
) -> SimulationStats:
    """Send uniformly random codewords over a BSC and decode with the trellis.

    Each fixed-size block of trials draws from a stream seeded by
    ``(seed, first trial index)``.
    """
    if not 0.0 <= p <= 1.0 or math.isnan(p):
        raise ValueError(f"flip probability must lie in [0, 1], got {p}")
    if trials <= 0:
        raise ValueError(f"trials must be positive, got {trials}")
    trellis = trellis or build_trellis(g)
    by_message = _tables(g).by_message
    weights = np.uint32(1) << np.arange(g.n, dtype=np.uint32)
    word_errors = 0
    bit_flips = 0
    for s in range(0, trials, _CHUNK):
        n = min(_CHUNK, trials - s)
        rng = np.random.default_rng([seed, s])
        msgs = rng.integers(0, 1 << g.k, size=n)
        flips = rng.random((n, g.n)) < p
        errors = (flips * weights).sum(axis=1, dtype=np.uint32)
        sent = by_message[msgs]
        decoded, _, _ = viterbi_many(sent ^ errors, trellis)
        word_errors += int((decoded != sent).sum())
        bit_flips += int(flips.sum())
    return SimulationStats(
        p=p,
        trials=trials,
        seed=seed,
        word_errors=word_errors,
        wer=word_errors / trials,
        channel_ber=bit_flips / (trials * g.n),
    )
