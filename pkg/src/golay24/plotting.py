"""Report figures written next to the text/CSV outputs."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from golay24.analysis import IncidenceMatrix
from golay24.codec import SimulationStats, binomial_tail


def _save(fig, path) -> None:
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def plot_incidence(q: IncidenceMatrix, path) -> None:
    fig, ax = plt.subplots(figsize=(10, 2.4))
    ax.imshow(np.array(q.entries), cmap="Greys", aspect="auto", interpolation="nearest")
    ax.set_yticks(range(q.v), [f"S({i})" for i in range(1, q.v + 1)])
    step = 7
    ax.set_xticks(range(0, q.b, step), [str(c) for c in q.columns[::step]])
    ax.set_xlabel("weight-4 codeword (decimal)")
    v, b, r, k, lam = q.params
    ax.set_title(f"incidence matrix, (v, b, r', k', lambda) = ({v}, {b}, {r}, {k}, {lam})")
    _save(fig, path)


def plot_weight_distribution(weight_dist: dict[int, int], path, title: str = "weight distribution") -> None:
    fig, ax = plt.subplots(figsize=(5, 3.2))
    weights = sorted(weight_dist)
    counts = [weight_dist[w] for w in weights]
    ax.bar([str(w) for w in weights], counts, color="0.35")
    ax.set_yscale("log")
    for i, c in enumerate(counts):
        ax.annotate(str(c), (i, c), ha="center", va="bottom", fontsize=8)
    ax.set_xlabel("Hamming weight")
    ax.set_ylabel("codewords")
    ax.set_title(title)
    _save(fig, path)


def plot_simulation(stats: SimulationStats, path, n: int = 24) -> None:
    """Measured word error rate against the P(>= 4 flips) curve."""
    fig, ax = plt.subplots(figsize=(5, 3.5))
    ps = np.logspace(-4, -0.5, 60)
    ax.loglog(ps, [binomial_tail(n, p, 4) for p in ps], "k-", lw=1, label="P(>= 4 flips)")
    if stats.word_errors and stats.p > 0:
        sigma = np.sqrt(stats.wer * (1 - stats.wer) / stats.trials)
        ax.errorbar([stats.p], [stats.wer], yerr=[[min(2 * sigma, stats.wer * 0.999)], [2 * sigma]],
                    fmt="o", color="C3", label=f"measured ({stats.trials} trials)")
    ax.set_xlabel("channel flip probability")
    ax.set_ylabel("word error rate")
    ax.legend(fontsize=8)
    _save(fig, path)
