"""Structural decorations on a rooted tree: subtree weights, heavy/light
marks, light-first DFS numbers, supervisors, depths, and the local
quasi-ancestor sets consumed by the interval verifier.

Conventions (fixed for reproducibility):
  * among equally heavy children the smallest node id is marked heavy;
  * the DFS visits children in increasing id, light children before the
    heavy child.
"""

from __future__ import annotations

from dataclasses import dataclass

from .tree import RootedTree


@dataclass(frozen=True)
class DecoratedTree:
    tree: RootedTree
    weight: tuple[int, ...]      # subtree size including self
    heavy: tuple[bool, ...]      # exactly one heavy child per internal node
    dfs: tuple[int, ...]         # light-first preorder number, root = 0
    supervisor: tuple[int, ...]  # deepest light ancestor-or-self
    depth: tuple[int, ...]

    @property
    def node_count(self) -> int:
        return self.tree.node_count


def decorate(tree: RootedTree) -> DecoratedTree:
    """Compute all decorations in O(n)."""
    n = tree.node_count
    parent = tree.parent
    children = tree.children
    root = tree.root

    # Top-down order (BFS) gives depths; its reverse accumulates weights.
    order = [root]
    depth = [0] * n
    for v in order:
        for c in children[v]:
            depth[c] = depth[v] + 1
            order.append(c)

    weight = [1] * n
    for v in reversed(order):
        p = parent[v]
        if p != -1:
            weight[p] += weight[v]

    # Heavy child: maximal weight, smallest id on ties (children are
    # stored in increasing id, so the first strict maximum wins).
    heavy = [False] * n
    for v in range(n):
        best = -1
        best_w = 0
        for c in children[v]:
            if weight[c] > best_w:
                best_w = weight[c]
                best = c
        if best != -1:
            heavy[best] = True

    # Light-first preorder.  Stack holds nodes in reverse visit order.
    dfs = [0] * n
    visit_order = []
    stack = [root]
    while stack:
        v = stack.pop()
        dfs[v] = len(visit_order)
        visit_order.append(v)
        lights = [c for c in children[v] if not heavy[c]]
        heavies = [c for c in children[v] if heavy[c]]
        for c in reversed(lights + heavies):
            stack.append(c)

    supervisor = [0] * n
    for v in order:  # parents before children
        p = parent[v]
        supervisor[v] = v if not heavy[v] else supervisor[p]

    return DecoratedTree(
        tree,
        tuple(weight),
        tuple(heavy),
        tuple(dfs),
        tuple(supervisor),
        tuple(depth),
    )


def local_quasi_ancestors(d: DecoratedTree, u: int) -> set[int]:
    """The nodes whose intervals must wholly precede u's.

    Path from parent(u) up to supervisor(parent(u)) inclusive, plus the
    light children of those path nodes, minus u and the supervisor
    endpoint, restricted to DFS numbers below u's.  Empty for the root.
    """
    tree = d.tree
    if u == tree.root:
        return set()
    p = tree.parent[u]
    stop = d.supervisor[p]
    out: set[int] = set()
    v = p
    while True:
        out.add(v)
        for c in tree.children[v]:
            if not d.heavy[c]:
                out.add(c)
        if v == stop:
            break
        v = tree.parent[v]
    out.discard(u)
    out.discard(stop)
    return {x for x in out if d.dfs[x] < d.dfs[u]}
