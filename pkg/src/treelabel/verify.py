"""Executable correctness checks: local partial order conditions,
containment of descendants under light nodes, decoder-vs-oracle
equivalence, and label budget audits.

All checkers are pure and deterministic given their seeds; failures are
report entries carrying a concrete counterexample, never exceptions.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from . import classic as classic_mod
from .codec import Label, LabelLayout, decide_ancestry, mark, observed_t
from .decorate import DecoratedTree, decorate, local_quasi_ancestors
from .intervals import (
    DyadicInterval,
    SchemeParams,
    endpoints,
    precedes,
    strictly_contains,
)
from .tree import RootedTree, oracle_is_ancestor

EXHAUSTIVE_PAIR_THRESHOLD = 512
DEFAULT_PAIR_BUDGET = 100_000
LPO2_ELEMENT_BUDGET = 500_000


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class VerificationReport:
    tree_id: str
    checks: list[CheckResult] = field(default_factory=list)
    stats: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name: str, passed: bool, detail: str = "") -> None:
        self.checks.append(CheckResult(name, passed, detail))

    def to_text(self) -> str:
        lines = [f"verification report: {self.tree_id}"]
        for c in self.checks:
            status = "PASS" if c.passed else "FAIL"
            suffix = f" ({c.detail})" if c.detail else ""
            lines.append(f"  [{status}] {c.name}{suffix}")
        for key in sorted(self.stats):
            lines.append(f"  stat {key} = {self.stats[key]}")
        return "\n".join(lines)

    def csv_rows(self) -> list[tuple[str, str, str]]:
        return [
            (c.name, "pass" if c.passed else "fail", c.detail) for c in self.checks
        ]


def check_lpo(
    d: DecoratedTree,
    mapping: dict[int, DyadicInterval],
    params: SchemeParams,
    *,
    lpo2_budget: int = LPO2_ELEMENT_BUDGET,
    seed: int = 0,
) -> VerificationReport:
    """Verify one-to-one-ness, the LPO conditions, descendant containment
    under light nodes, and the universe bound.

    LPO2 is exhaustive while the total quasi-ancestor set size stays
    within `lpo2_budget`; beyond that, nodes are sampled (each sampled
    node is still checked against its full set).
    """
    report = VerificationReport(tree_id=f"tree(n={d.node_count})")
    tree = d.tree
    n = d.node_count

    ends: dict[int, tuple[int, int]] = {}
    bounds_bad = None
    for u in range(n):
        try:
            ends[u] = endpoints(params, mapping[u])
        except (KeyError, ValueError) as exc:
            bounds_bad = f"node {u}: {exc}"
            break
    report.add("universe-and-parameter-bounds", bounds_bad is None, bounds_bad or "")
    if bounds_bad is not None:
        return report

    seen: dict[tuple[int, int], int] = {}
    dup = None
    for u in range(n):
        if ends[u] in seen:
            dup = f"nodes {seen[ends[u]]} and {u} share interval {ends[u]}"
            break
        seen[ends[u]] = u
    report.add("one-to-one", dup is None, dup or "")

    lpo1_bad = None
    for u in range(n):
        if u == tree.root:
            continue
        sp_u = ends[d.supervisor[u]]
        sp_p = ends[d.supervisor[tree.parent[u]]]
        lo, hi = ends[u]
        if not (max(sp_u[0], sp_p[0]) <= lo and hi <= min(sp_u[1], sp_p[1])):
            lpo1_bad = (
                f"node {u}: {ends[u]} not within "
                f"I(sp(u))={sp_u} and I(sp(parent(u)))={sp_p}"
            )
            break
    report.add("lpo1-nesting", lpo1_bad is None, lpo1_bad or "")

    rng = random.Random(seed)
    nodes = list(range(n))
    rng.shuffle(nodes)
    examined = 0
    lpo2_bad = None
    checked_nodes = 0
    for u in nodes:
        if examined >= lpo2_budget:
            break
        checked_nodes += 1
        for x in local_quasi_ancestors(d, u):
            examined += 1
            if not precedes(ends[x], ends[u]):
                lpo2_bad = (
                    f"quasi-ancestor {x} with {ends[x]} does not precede "
                    f"node {u} with {ends[u]}"
                )
                break
        if lpo2_bad:
            break
    mode = "exhaustive" if checked_nodes == n else f"sampled {checked_nodes}/{n} nodes"
    report.add("lpo2-precedence", lpo2_bad is None, lpo2_bad or mode)

    claim_bad = _check_light_containment(d, ends)
    report.add("light-descendant-containment", claim_bad is None, claim_bad or "")

    report.stats["max_endpoint"] = max(hi for _, hi in ends.values())
    report.stats["universe"] = params.universe
    return report


def _check_light_containment(d, ends):
    """Every light node's interval strictly contains all descendant
    intervals.  O(n) via subtree endpoint aggregates; distinctness is
    checked separately so containment here may share endpoints."""
    tree = d.tree
    n = d.node_count
    order = [tree.root]
    for v in order:
        order.extend(tree.children[v])
    min_lo = [ends[v][0] for v in range(n)]
    max_hi = [ends[v][1] for v in range(n)]
    for v in reversed(order):
        p = tree.parent[v]
        if p != -1:
            min_lo[p] = min(min_lo[p], min_lo[v])
            max_hi[p] = max(max_hi[p], max_hi[v])
    for u in range(n):
        if d.heavy[u] or d.weight[u] == 1:
            continue
        lo, hi = ends[u]
        if min_lo[u] < lo or max_hi[u] > hi:
            # Walk down to a concrete violating descendant.
            v = u
            while True:
                for c in tree.children[v]:
                    if min_lo[c] < lo or max_hi[c] > hi:
                        v = c
                        break
                else:
                    break
            return (
                f"light node {u} with {ends[u]} does not contain "
                f"descendant {v} with {ends[v]}"
            )
    return None


def _jump_tables(tree: RootedTree) -> tuple[list[list[int]], list[int]]:
    """Binary-lifting ancestor pointers built from the parent array alone
    (independent of the labeling machinery)."""
    n = tree.node_count
    depth = [0] * n
    order = [tree.root]
    for v in order:
        for c in tree.children[v]:
            depth[c] = depth[v] + 1
            order.append(c)
    up = [list(tree.parent)]
    level = 0
    while (1 << (level + 1)) <= max(depth, default=0):
        prev = up[level]
        up.append([prev[prev[v]] if prev[v] != -1 else -1 for v in range(n)])
        level += 1
    return up, depth


def _lift_is_ancestor(up, depth, u: int, v: int) -> bool:
    if u == v:
        return False
    diff = depth[v] - depth[u]
    if diff <= 0:
        return False
    level = 0
    while diff and v != -1:
        if diff & 1:
            v = up[level][v]
        diff >>= 1
        level += 1
    return v == u


def check_scheme_vs_oracle(
    tree: RootedTree,
    scheme: str,
    params: SchemeParams,
    pair_budget: int = DEFAULT_PAIR_BUDGET,
    *,
    chain_budget: int | None = None,
    seed: int = 0,
    exhaustive: bool | None = None,
    labels=None,
) -> VerificationReport:
    """Compare the scheme's decoder against the parent-walking oracle.

    Small trees are checked on all ordered pairs; large ones on
    `pair_budget` uniform pairs plus parent-chain ancestor pairs (chains
    of randomly chosen nodes, up to `chain_budget` pairs).  Ground truth
    for sampled pairs comes from binary lifting over the parent array,
    itself spot-checked against oracle_is_ancestor.
    """
    n = tree.node_count
    if exhaustive is None:
        exhaustive = n <= EXHAUSTIVE_PAIR_THRESHOLD
    if chain_budget is None:
        chain_budget = pair_budget
    report = VerificationReport(tree_id=f"tree(n={n},scheme={scheme})")

    if labels is None:
        if scheme == "optimal":
            labels = mark(tree, params)
        elif scheme == "classic":
            labels = classic_mod.classic_mark(tree, params.n)
        else:
            raise ValueError(f"unknown scheme {scheme!r}")
    if scheme == "optimal":
        layout = LabelLayout.from_params(params)

        def decide(u, v):
            return decide_ancestry(params, labels[u], labels[v], layout)

    else:
        def decide(u, v):
            return classic_mod.classic_decide(labels[u], labels[v])

    tested = 0
    mismatch = None
    if exhaustive:
        truth = set()
        for v in range(n):
            w = tree.parent[v]
            while w != -1:
                truth.add((w, v))
                w = tree.parent[w]
        for u in range(n):
            for v in range(n):
                tested += 1
                if decide(u, v) != ((u, v) in truth):
                    mismatch = (u, v, (u, v) in truth)
                    break
            if mismatch:
                break
    else:
        up, depth = _jump_tables(tree)
        rng = random.Random(seed)
        spot = 0
        for _ in range(pair_budget):
            u = rng.randrange(n)
            v = rng.randrange(n)
            expected = _lift_is_ancestor(up, depth, u, v)
            if spot < 16:
                spot += 1
                if expected != oracle_is_ancestor(tree, u, v):
                    mismatch = (u, v, "lifting oracle disagrees with parent walk")
                    break
            tested += 1
            if decide(u, v) != expected:
                mismatch = (u, v, expected)
                break
        if mismatch is None:
            nodes = list(range(n))
            rng.shuffle(nodes)
            chain_tested = 0
            for v in nodes:
                if chain_tested >= chain_budget:
                    break
                w = tree.parent[v]
                while w != -1:
                    chain_tested += 1
                    tested += 1
                    if not decide(w, v):
                        mismatch = (w, v, True)
                        break
                    w = tree.parent[w]
                if mismatch:
                    break

    if mismatch is None:
        report.add("decoder-vs-oracle", True, f"{tested} pairs agree")
    else:
        u, v, expected = mismatch
        detail = f"pair ({u},{v}): decoder says {decide(u, v)}, oracle says {expected}"
        if labels is not None and n <= 64 and scheme in ("optimal", "classic"):
            detail += _shrink_note(tree, scheme, params, u, v)
        report.add("decoder-vs-oracle", False, detail)
    report.stats["pairs_tested"] = tested
    return report


def _shrink_note(tree: RootedTree, scheme: str, params: SchemeParams, u: int, v: int) -> str:
    """Shrink a failing tree by deleting leaves while the freshly marked
    scheme still disagrees with the oracle on some pair."""

    def find_mismatch(t: RootedTree):
        if scheme == "optimal":
            labels = mark(t, params)
            layout = LabelLayout.from_params(params)
            dec = lambda a, b: decide_ancestry(params, labels[a], labels[b], layout)
        else:
            labels = classic_mod.classic_mark(t, params.n)
            dec = lambda a, b: classic_mod.classic_decide(labels[a], labels[b])
        for a in range(t.node_count):
            for b in range(t.node_count):
                if dec(a, b) != oracle_is_ancestor(t, a, b):
                    return (a, b)
        return None

    current = tree
    changed = True
    while changed and current.node_count > 2:
        changed = False
        for leaf in range(current.node_count):
            if current.children[leaf]:
                continue
            parents = [p for i, p in enumerate(current.parent) if i != leaf]
            remap = lambda x: x - (1 if x > leaf else 0)
            smaller = RootedTree.from_parents(
                [-1 if p == -1 else remap(p) for p in parents]
            )
            try:
                if find_mismatch(smaller) is not None:
                    current = smaller
                    changed = True
                    break
            except Exception:
                continue
    pair = find_mismatch(current)
    if current.node_count < tree.node_count and pair is not None:
        return (
            f"; shrunk to {current.node_count}-node tree "
            f"{list(current.parent)} failing at pair {pair}"
        )
    return ""


def check_label_budget(
    labels: dict[int, Label],
    params: SchemeParams,
    layout: LabelLayout | None = None,
) -> VerificationReport:
    """Audit widths and the supervisor-offset field against the layout."""
    if layout is None:
        layout = LabelLayout.from_params(params)
    report = VerificationReport(tree_id=f"labels(n={params.n})")
    over = [u for u, lab in labels.items() if lab.bits >> layout.total_bits]
    report.add(
        "label-width",
        not over,
        f"all {len(labels)} labels fit {layout.total_bits} bits"
        if not over
        else f"nodes {over[:5]} exceed {layout.total_bits} bits",
    )
    distinct = len({lab.bits for lab in labels.values()}) == len(labels)
    report.add("labels-distinct", distinct)
    max_t = max(observed_t(lab, layout) for lab in labels.values())
    tight_ok = max_t <= 4 * params.ell - 1
    report.stats["max_observed_t"] = max_t
    report.stats["t_field_limit"] = (1 << layout.widths[5]) - 1
    report.stats["tight_constant_possible"] = tight_ok
    report.add(
        "t-within-field",
        max_t < (1 << layout.widths[5]),
        f"max t {max_t}; tight layout (one bit fewer) "
        + ("would suffice" if tight_ok else "would NOT suffice"),
    )
    return report
