"""Deterministic tree generators and the exhaustive rooted-tree enumerator.

Families: path, star, caterpillar, complete-binary, broom (equal-length
paths hanging from the root, the lower-bound instance family), and
random-recursive (node i attaches to a uniform earlier node).
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Iterator, Optional

from .tree import RootedTree

FAMILIES = (
    "path",
    "star",
    "caterpillar",
    "complete-binary",
    "broom",
    "random-recursive",
)

ENUMERATION_CAP = 9


@dataclass(frozen=True)
class TreeFamilySpec:
    family: str
    size: int
    seed: int = 0
    path_count: Optional[int] = None
    path_length: Optional[int] = None


def generate_tree(spec: TreeFamilySpec) -> RootedTree:
    """Build the requested family member; deterministic given the spec."""
    if spec.family not in FAMILIES:
        raise ValueError(f"unknown family {spec.family!r}")
    n = spec.size
    if n <= 0:
        raise ValueError(f"size must be positive, got {n}")
    if spec.family == "path":
        parent = [i - 1 for i in range(n)]
    elif spec.family == "star":
        parent = [-1] + [0] * (n - 1)
    elif spec.family == "caterpillar":
        # Spine of ceil(n/2) nodes; leg j hangs from spine node j.
        spine = (n + 1) // 2
        parent = [i - 1 for i in range(spine)]
        parent += [j for j in range(n - spine)]
    elif spec.family == "complete-binary":
        parent = [(i - 1) // 2 for i in range(n)]
        parent[0] = -1
    elif spec.family == "broom":
        parent = _broom_parents(spec)
    else:  # random-recursive
        rng = random.Random(spec.seed)
        parent = [-1] + [rng.randrange(i) for i in range(1, n)]
    return RootedTree.from_parents(parent)


def _broom_parents(spec: TreeFamilySpec) -> list[int]:
    n = spec.size
    if spec.path_count is not None or spec.path_length is not None:
        if spec.path_count is None or spec.path_length is None:
            raise ValueError("broom needs both path_count and path_length")
        if spec.path_count * spec.path_length + 1 != n:
            raise ValueError(
                f"broom parameters inconsistent with size: "
                f"{spec.path_count}*{spec.path_length}+1 != {n}"
            )
        lengths = [spec.path_length] * spec.path_count
    else:
        # Default parameterization: about sqrt(n-1) paths, node count kept
        # exact by letting lengths differ by at most one.
        if n == 1:
            return [-1]
        count = max(1, math.isqrt(n - 1))
        base, extra = divmod(n - 1, count)
        lengths = [base + (1 if i < extra else 0) for i in range(count)]
    parent = [-1]
    for length in lengths:
        start = len(parent)
        for q in range(length):
            parent.append(0 if q == 0 else start + q - 1)
    return parent


def enumerate_rooted_trees(size: int, cap: int = ENUMERATION_CAP) -> Iterator[RootedTree]:
    """Yield every unlabeled rooted tree with `size` nodes exactly once.

    Beyer-Hedetniemi level-sequence successor walk; node ids follow the
    canonical preorder, so parent ids are always smaller than child ids.
    """
    if size > cap:
        raise ValueError(f"size {size} above enumeration cap {cap}")
    if size <= 0:
        raise ValueError(f"size must be positive, got {size}")
    levels = list(range(1, size + 1))
    while True:
        yield _levels_to_tree(levels)
        p = -1
        for i in range(size - 1, -1, -1):
            if levels[i] > 2:
                p = i
                break
        if p == -1:
            return
        q = -1
        for i in range(p - 1, -1, -1):
            if levels[i] == levels[p] - 1:
                q = i
                break
        for i in range(p, size):
            levels[i] = levels[i - (p - q)]


def _levels_to_tree(levels: list[int]) -> RootedTree:
    parent = [-1] * len(levels)
    last_at_level = {1: 0}
    for i in range(1, len(levels)):
        parent[i] = last_at_level[levels[i] - 1]
        last_at_level[levels[i]] = i
    return RootedTree.from_parents(parent)
