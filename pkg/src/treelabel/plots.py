"""Static figures rendered from benchmark rows, written next to the CSV.

All plots aggregate trials by median; wall-clock axes are logarithmic.
"""

from __future__ import annotations

import statistics
from collections import defaultdict
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .bench import BenchRow  # noqa: E402

SCHEME_STYLE = {"optimal": "o-", "classic": "s--"}


def _median_by(rows, key_fn, value_fn):
    groups = defaultdict(list)
    for row in rows:
        groups[key_fn(row)].append(value_fn(row))
    return {k: statistics.median(v) for k, v in groups.items()}


def plot_label_bits(rows: list[BenchRow], path: Path) -> None:
    fig, ax = plt.subplots(figsize=(6, 4))
    for scheme in ("optimal", "classic"):
        med = _median_by(
            [r for r in rows if r.scheme == scheme],
            lambda r: r.family_size_n,
            lambda r: r.max_label_bits,
        )
        if not med:
            continue
        xs = sorted(med)
        ax.plot(xs, [med[x] for x in xs], SCHEME_STYLE[scheme], label=scheme)
    ax.set_xscale("log", base=2)
    ax.set_xlabel("family size n")
    ax.set_ylabel("label width (bits)")
    ax.set_title("Label width by family size")
    ax.legend()
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def plot_mark_time(rows: list[BenchRow], path: Path) -> None:
    fig, ax = plt.subplots(figsize=(6, 4))
    families = sorted({r.family for r in rows})
    for family in families:
        for scheme in ("optimal", "classic"):
            sel = [r for r in rows if r.family == family and r.scheme == scheme]
            med = _median_by(sel, lambda r: r.node_count, lambda r: r.mark_wall_time_ns)
            if len(med) < 1:
                continue
            xs = sorted(med)
            ax.plot(
                xs,
                [med[x] / 1e6 for x in xs],
                SCHEME_STYLE[scheme],
                label=f"{family} ({scheme})",
            )
    ax.set_xscale("log", base=2)
    ax.set_yscale("log")
    ax.set_xlabel("node count")
    ax.set_ylabel("marking time (ms, median)")
    ax.set_title("Marking time by tree size")
    ax.legend(fontsize=8)
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def plot_query_time(rows: list[BenchRow], path: Path) -> None:
    fig, ax = plt.subplots(figsize=(6, 4))
    for scheme in ("optimal", "classic"):
        med = _median_by(
            [r for r in rows if r.scheme == scheme],
            lambda r: r.family_size_n,
            lambda r: r.mean_query_ns,
        )
        if not med:
            continue
        xs = sorted(med)
        ax.plot(xs, [med[x] for x in xs], SCHEME_STYLE[scheme], label=scheme)
    ax.set_xscale("log", base=2)
    ax.set_xlabel("family size n")
    ax.set_ylabel("mean query latency (ns, median of trials)")
    ax.set_title("Query latency by family size")
    ax.legend()
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def render_all(rows: list[BenchRow], out_dir: Path) -> list[Path]:
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    written = []
    for name, fn in (
        ("label_bits.png", plot_label_bits),
        ("mark_time.png", plot_mark_time),
        ("query_time.png", plot_query_time),
    ):
        target = out_dir / name
        fn(rows, target)
        written.append(target)
    return written
