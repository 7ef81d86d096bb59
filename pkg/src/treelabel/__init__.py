"""Compact ancestry labels for rooted trees.

Two labeling schemes for answering "is u an ancestor of v?" from two node
labels alone: an interval scheme with labels of log2(n) + O(log log n)
bits assigned in linear time and decoded in constant time, and the
classic 2*log2(n) DFS interval scheme as a baseline.  Ships with
verification oracles, deterministic tree generators, and a benchmark
harness with plots.
"""

from .classic import ClassicLabel, classic_bits, classic_decide, classic_mark
from .codec import (
    FieldRangeError,
    Label,
    LabelLayout,
    decide_ancestry,
    decide_ancestry_counted,
    mark,
    mark_details,
    pack,
    unpack,
)
from .decorate import DecoratedTree, decorate, local_quasi_ancestors
from .families import TreeFamilySpec, enumerate_rooted_trees, generate_tree
from .intervals import (
    DyadicInterval,
    SchemeParams,
    WindowBudgetError,
    assign_intervals,
    endpoints,
    heavy_path_decompose,
    precedes,
    strictly_contains,
)
from .tree import (
    RootedTree,
    TreeFormatError,
    oracle_is_ancestor,
    parse_parent_array,
    serialize_parent_array,
)
from .verify import (
    VerificationReport,
    check_label_budget,
    check_lpo,
    check_scheme_vs_oracle,
)

__all__ = [
    "ClassicLabel",
    "DecoratedTree",
    "DyadicInterval",
    "FieldRangeError",
    "Label",
    "LabelLayout",
    "RootedTree",
    "SchemeParams",
    "TreeFamilySpec",
    "TreeFormatError",
    "VerificationReport",
    "WindowBudgetError",
    "assign_intervals",
    "check_label_budget",
    "check_lpo",
    "check_scheme_vs_oracle",
    "classic_bits",
    "classic_decide",
    "classic_mark",
    "decide_ancestry",
    "decide_ancestry_counted",
    "decorate",
    "endpoints",
    "enumerate_rooted_trees",
    "generate_tree",
    "heavy_path_decompose",
    "local_quasi_ancestors",
    "mark",
    "mark_details",
    "oracle_is_ancestor",
    "pack",
    "parse_parent_array",
    "precedes",
    "serialize_parent_array",
    "strictly_contains",
    "unpack",
]

__version__ = "0.1.0"
