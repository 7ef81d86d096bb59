"""The classic 2*ceil(log n)-bit DFS interval scheme, used as the
correctness cross-check and size/speed baseline.

Each node stores [own DFS number, largest DFS number in its subtree];
u is an ancestor of v iff v's interval sits strictly inside u's.
"""

from __future__ import annotations

from typing import NamedTuple

from .intervals import strictly_contains
from .tree import RootedTree


class ClassicLabel(NamedTuple):
    dfs_lo: int
    dfs_hi: int


def classic_field_bits(n: int) -> int:
    return max(1, (n - 1).bit_length())


def classic_bits(n: int) -> int:
    """Total label width: two DFS numbers of ceil(log2 n) bits each."""
    return 2 * classic_field_bits(n)


def classic_mark(tree: RootedTree, n: int) -> dict[int, ClassicLabel]:
    """Plain preorder DFS in child-id order; O(node_count)."""
    if tree.node_count > n:
        raise ValueError(f"tree has {tree.node_count} nodes, family size is {n}")
    dfs = [0] * tree.node_count
    sub_hi = [0] * tree.node_count
    counter = 0
    order = []
    stack = [tree.root]
    while stack:
        v = stack.pop()
        dfs[v] = counter
        counter += 1
        order.append(v)
        for c in reversed(tree.children[v]):
            stack.append(c)
    for v in reversed(order):
        sub_hi[v] = max([dfs[v]] + [sub_hi[c] for c in tree.children[v]])
    return {v: ClassicLabel(dfs[v], sub_hi[v]) for v in range(tree.node_count)}


def classic_decide(label_u: ClassicLabel, label_v: ClassicLabel) -> bool:
    return strictly_contains(tuple(label_u), tuple(label_v))


def classic_to_hex(label: ClassicLabel, n: int) -> str:
    w = classic_field_bits(n)
    padded = -(-2 * w // 16) * 16
    return format((label.dfs_lo << w) | label.dfs_hi, f"0{padded // 4}x")


def classic_from_hex(text: str, n: int) -> ClassicLabel:
    w = classic_field_bits(n)
    value = int(text, 16)
    return ClassicLabel(value >> w, value - ((value >> w) << w))
