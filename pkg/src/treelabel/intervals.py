"""Dyadic interval arithmetic and the recursive interval assignment.

Every node receives an interval I_{i,a,b} = [2^i*a, 2^i*(a+b)] drawn from
a universe of size 4*n*log2(n), nested and ordered so that a local
containment/precedence test decides ancestry.  The assignment recurses
along a heavy-path decomposition: the root of a subtree takes an aligned
interval spanning (almost) the whole window, and the pieces hanging off
its heavy path get consecutive sub-windows in DFS order.
"""

from __future__ import annotations

from dataclasses import dataclass

from .decorate import DecoratedTree


class WindowBudgetError(RuntimeError):
    """An assigned interval escaped its window; indicates a bug, never clamp."""


@dataclass(frozen=True)
class SchemeParams:
    """Family-size parameters: n = 2^ell, lam = ceil(log2 ell) (min 1),
    universe [1, 4*n*ell]."""

    n: int
    ell: int
    lam: int
    universe: int

    @classmethod
    def for_family_size(cls, requested: int) -> "SchemeParams":
        """Round the requested family size up to a power of two (min 2)."""
        if requested < 1:
            raise ValueError(f"family size must be positive, got {requested}")
        n = 1 << max(1, (requested - 1).bit_length())
        ell = n.bit_length() - 1
        lam = max(1, (ell - 1).bit_length())
        return cls(n=n, ell=ell, lam=lam, universe=4 * n * ell)


@dataclass(frozen=True)
class DyadicInterval:
    i: int
    a: int
    b: int

    @property
    def lo(self) -> int:
        return self.a << self.i

    @property
    def hi(self) -> int:
        return (self.a + self.b) << self.i


def endpoints(params: SchemeParams, iv: DyadicInterval) -> tuple[int, int]:
    """Validated endpoints of iv under params (shift/add arithmetic)."""
    if not 1 <= iv.i <= params.ell:
        raise ValueError(f"scale {iv.i} outside [1, {params.ell}]")
    if iv.a < 1:
        raise ValueError(f"offset {iv.a} must be >= 1")
    if not 1 <= iv.b <= 4 * params.ell:
        raise ValueError(f"length {iv.b} outside [1, {4 * params.ell}]")
    lo = iv.a << iv.i
    hi = (iv.a + iv.b) << iv.i
    if hi > params.universe:
        raise ValueError(f"interval [{lo}, {hi}] escapes universe {params.universe}")
    return lo, hi


def precedes(left: tuple[int, int], right: tuple[int, int]) -> bool:
    """Whole-interval precedence: left ends before right begins."""
    return left[1] < right[0]


def strictly_contains(outer: tuple[int, int], inner: tuple[int, int]) -> bool:
    """inner is a proper subset of outer (shared endpoints allowed)."""
    return outer[0] <= inner[0] and inner[1] <= outer[1] and outer != inner


def heavy_path_decompose(
    d: DecoratedTree, root: int
) -> list[tuple[int, int]]:
    """Split the subtree at `root` into the pieces hanging off its heavy path.

    Returns (piece_root, piece_size) pairs: every heavy-path node below
    `root` as a singleton, every light child as its whole subtree, ordered
    by increasing DFS number of the piece roots.  Sizes sum to
    weight(root) - 1.  Heavy marks are the global ones; they are never
    recomputed on subtrees.
    """
    children = d.tree.children
    pieces: list[tuple[int, int]] = []
    v = root
    while True:
        hchild = -1
        for c in children[v]:
            if d.heavy[c]:
                hchild = c
            else:
                pieces.append((c, d.weight[c]))
        if hchild == -1:
            return pieces
        # The light-first DFS numbers v's light subtrees before hchild, so
        # appending the heavy singleton after them keeps DFS order.
        pieces.append((hchild, 1))
        v = hchild


def assign_intervals(
    d: DecoratedTree, params: SchemeParams, *, return_steps: bool = False
):
    """Map every node to a dyadic interval satisfying the local partial
    order conditions.  Linear in the node count (see the step counter).
    """
    if d.node_count > params.n:
        raise ValueError(
            f"tree has {d.node_count} nodes, family size is {params.n}"
        )
    mapping: dict[int, DyadicInterval] = {}
    steps = 0

    # (piece_root, piece_size, level, window_start); size 1 means "map only
    # this node", otherwise the piece is the full subtree at piece_root.
    stack = [(d.tree.root, d.node_count, params.ell, 1)]
    while stack:
        root, size, k, alpha = stack.pop()
        steps += 1
        # Drop to the lowest level whose capacity 2^k still fits the piece,
        # keeping the window prefix of span 4*k*size.
        k = min(k, max(1, (size - 1).bit_length() if size > 1 else 1))
        if k == 1:
            a0 = (alpha + 1) >> 1
            if size == 1:
                mapping[root] = DyadicInterval(1, a0, 1)
            else:  # size == 2: the root plus its single (heavy) child
                mapping[root] = DyadicInterval(1, a0, 3)
                mapping[d.tree.children[root][0]] = DyadicInterval(1, a0 + 1, 1)
            continue
        a = (alpha + (1 << k) - 1) >> k
        b = (4 * (k - 1) * size + (1 << k) - 1) >> k
        hi = (a + b) << k
        if hi > alpha + 4 * k * size - 1:
            raise WindowBudgetError(
                f"interval [{a << k}, {hi}] escapes window "
                f"[{alpha}, {alpha + 4 * k * size - 1}] at level {k}"
            )
        mapping[root] = DyadicInterval(k, a, b)
        start = a << k
        for piece_root, piece_size in heavy_path_decompose(d, root):
            stack.append((piece_root, piece_size, k - 1, start))
            start += 4 * (k - 1) * piece_size
        if start > hi + 1:
            raise WindowBudgetError(
                f"piece windows overrun the parent interval at node {root}"
            )
    if return_steps:
        return mapping, steps
    return mapping


def intervals_csv(params: SchemeParams, mapping: dict[int, DyadicInterval]) -> str:
    """Debug dump: node_id,i,a,b,lo,hi."""
    lines = ["node_id,i,a,b,lo,hi"]
    for node in sorted(mapping):
        iv = mapping[node]
        lo, hi = endpoints(params, iv)
        lines.append(f"{node},{iv.i},{iv.a},{iv.b},{lo},{hi}")
    return "\n".join(lines) + "\n"
