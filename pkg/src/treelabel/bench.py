"""Benchmark harness quantifying the two performance claims: linear-time
marking and constant-time (size-independent) queries.

Timing uses a monotonic clock around batched operations with one warmup
pass; consumers take medians across trials.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from typing import Optional

from . import classic as classic_mod
from .codec import LabelLayout, decide_ancestry, mark
from .families import TreeFamilySpec, generate_tree
from .intervals import SchemeParams

MIN_QUERY_BATCH = 10_000

BENCH_COLUMNS = (
    "family",
    "node_count",
    "family_size_n",
    "scheme",
    "trial",
    "max_label_bits",
    "mark_wall_time_ns",
    "mean_query_ns",
    "queries_measured",
)


@dataclass
class BenchConfig:
    families: list[TreeFamilySpec]
    trials: int = 3
    seed: int = 0
    schemes: tuple[str, ...] = ("optimal", "classic")
    family_size_overrides: Optional[list[int]] = None
    query_batch: int = MIN_QUERY_BATCH

    def validate(self) -> None:
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if self.query_batch < MIN_QUERY_BATCH:
            raise ValueError(f"query batch must be >= {MIN_QUERY_BATCH}")
        for scheme in self.schemes:
            if scheme not in ("optimal", "classic"):
                raise ValueError(f"unknown scheme {scheme!r}")
        if self.family_size_overrides is not None:
            for spec, n in zip(self.families, self.family_size_overrides):
                if spec.size > n:
                    raise ValueError(
                        f"{spec.family} size {spec.size} exceeds family size {n}"
                    )


@dataclass
class BenchRow:
    family: str
    node_count: int
    family_size_n: int
    scheme: str
    trial: int
    max_label_bits: int
    mark_wall_time_ns: int
    mean_query_ns: float
    queries_measured: int

    def as_tuple(self):
        return (
            self.family,
            self.node_count,
            self.family_size_n,
            self.scheme,
            self.trial,
            self.max_label_bits,
            self.mark_wall_time_ns,
            round(self.mean_query_ns, 1),
            self.queries_measured,
        )


def run_bench(config: BenchConfig) -> list[BenchRow]:
    config.validate()
    rows: list[BenchRow] = []
    overrides = config.family_size_overrides
    for idx, template in enumerate(config.families):
        family_n = overrides[idx] if overrides else template.size
        for scheme in config.schemes:
            for trial in range(config.trials):
                spec = TreeFamilySpec(
                    template.family,
                    template.size,
                    seed=template.seed + trial,
                    path_count=template.path_count,
                    path_length=template.path_length,
                )
                rows.append(
                    _bench_one(spec, scheme, family_n, trial, config)
                )
    return rows


def _bench_one(spec, scheme, family_n, trial, config) -> BenchRow:
    tree = generate_tree(spec)
    n = tree.node_count
    if scheme == "optimal":
        params = SchemeParams.for_family_size(family_n)
        layout = LabelLayout.from_params(params)
        mark(tree, params)  # warmup
        start = time.perf_counter_ns()
        labels = mark(tree, params)
        mark_ns = time.perf_counter_ns() - start
        bits = layout.total_bits
        decide = lambda lu, lv: decide_ancestry(params, lu, lv, layout)
    else:
        classic_mod.classic_mark(tree, family_n)
        start = time.perf_counter_ns()
        labels = classic_mod.classic_mark(tree, family_n)
        mark_ns = time.perf_counter_ns() - start
        bits = classic_mod.classic_bits(family_n)
        decide = classic_mod.classic_decide

    rng = random.Random(f"{config.seed}:{spec.family}:{family_n}:{scheme}:{trial}")
    batch = [
        (labels[rng.randrange(n)], labels[rng.randrange(n)])
        for _ in range(config.query_batch)
    ]
    for lu, lv in batch[:1000]:  # warmup
        decide(lu, lv)
    start = time.perf_counter_ns()
    for lu, lv in batch:
        decide(lu, lv)
    elapsed = time.perf_counter_ns() - start
    return BenchRow(
        family=spec.family,
        node_count=n,
        family_size_n=family_n,
        scheme=scheme,
        trial=trial,
        max_label_bits=bits,
        mark_wall_time_ns=mark_ns,
        mean_query_ns=elapsed / len(batch),
        queries_measured=len(batch),
    )


def rows_to_csv(rows: list[BenchRow]) -> str:
    lines = [",".join(BENCH_COLUMNS)]
    for row in rows:
        lines.append(",".join(str(x) for x in row.as_tuple()))
    return "\n".join(lines) + "\n"
