"""Rooted tree representation, the parent-array text format, and the
brute-force ancestry oracle.

A tree is stored as a parent array: ``parent[v]`` is the node id of v's
parent, with -1 marking the root.  Node ids are 0..n-1.  Trees are
immutable after construction and safe to share across threads.
"""

from __future__ import annotations

from dataclasses import dataclass


class TreeFormatError(ValueError):
    """Malformed tree text or parent array (bad token, cycle, bad root, ...)."""


@dataclass(frozen=True)
class RootedTree:
    parent: tuple[int, ...]
    root: int
    children: tuple[tuple[int, ...], ...]

    @property
    def node_count(self) -> int:
        return len(self.parent)

    @classmethod
    def from_parents(cls, parent) -> "RootedTree":
        parent = tuple(parent)
        n = len(parent)
        if n == 0:
            raise TreeFormatError("empty parent array")
        root = -1
        kids: list[list[int]] = [[] for _ in range(n)]
        for v, p in enumerate(parent):
            if p == -1:
                if root != -1:
                    raise TreeFormatError(
                        f"multiple roots: nodes {root} and {v} both have parent -1"
                    )
                root = v
            elif 0 <= p < n:
                kids[p].append(v)
            else:
                raise TreeFormatError(f"parent id {p} out of range at position {v}")
        if root == -1:
            raise TreeFormatError("no root: no node has parent -1")
        _check_acyclic(parent, root)
        return cls(parent, root, tuple(tuple(c) for c in kids))


def _check_acyclic(parent: tuple[int, ...], root: int) -> None:
    # Color walk: 0 unseen, 1 on current chain, 2 known-good.
    state = [0] * len(parent)
    state[root] = 2
    for v in range(len(parent)):
        chain = []
        u = v
        while state[u] == 0:
            state[u] = 1
            chain.append(u)
            u = parent[u]
        if state[u] == 1:
            raise TreeFormatError(f"cycle detected through node {u}")
        for w in chain:
            state[w] = 2


def parse_parent_array(text: str) -> RootedTree:
    """Parse the external tree format: a count line, then the parent ids.

    Raises TreeFormatError with the offending position on malformed input.
    """
    tokens = text.split()
    if not tokens:
        raise TreeFormatError("empty input")
    try:
        n = int(tokens[0])
    except ValueError:
        raise TreeFormatError(f"malformed node count {tokens[0]!r}") from None
    if n <= 0:
        raise TreeFormatError(f"node count must be positive, got {n}")
    if len(tokens) - 1 != n:
        raise TreeFormatError(
            f"expected {n} parent ids, found {len(tokens) - 1}"
        )
    parent = []
    for pos, tok in enumerate(tokens[1:]):
        try:
            parent.append(int(tok))
        except ValueError:
            raise TreeFormatError(
                f"malformed integer {tok!r} at position {pos}"
            ) from None
    return RootedTree.from_parents(parent)


def serialize_parent_array(tree: RootedTree) -> str:
    """Inverse of parse_parent_array (no trailing newline)."""
    return f"{tree.node_count}\n{' '.join(str(p) for p in tree.parent)}"


def oracle_is_ancestor(tree: RootedTree, u: int, v: int) -> bool:
    """Ground-truth ancestry test: walk v's parent chain looking for u.

    Deliberately does no preprocessing; everything else is checked
    against this.  u is never its own ancestor.
    """
    if u == v:
        return False
    parent = tree.parent
    w = parent[v]
    while w != -1:
        if w == u:
            return True
        w = parent[w]
    return False
