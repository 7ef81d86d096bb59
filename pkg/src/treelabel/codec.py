"""Fixed-width label packing and the constant-time ancestry decoder.

A label stores the node's own interval I_{i,a,b} explicitly and the
supervisor's interval compressed to (i', b', t), where t is the offset
between the supervisor's alignment a' and the largest aligned point a''
at or below the node's left endpoint.  Decoding needs only additions,
subtractions, shifts and comparisons.

Bit layout, least significant first:
    i-1   : lam bits
    b-1   : lam+2 bits
    a-1   : ell+lam+1 bits
    i'-1  : lam bits
    b'-1  : lam+2 bits
    t     : lam+3 bits (lam+2 with the tight layout)
Total ell + 6*lam + 8 bits (ell + 6*lam + 7 tight).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .decorate import decorate
from .intervals import DyadicInterval, SchemeParams, assign_intervals
from .tree import RootedTree


class FieldRangeError(ValueError):
    """A label field fell outside its declared range."""


@dataclass(frozen=True)
class LabelLayout:
    """Field widths and offsets derived from the scheme parameters."""

    ell: int
    lam: int
    tight: bool
    widths: tuple[int, ...]   # (i-1, b-1, a-1, i'-1, b'-1, t)
    offsets: tuple[int, ...]
    total_bits: int
    hex_chars: int            # zero-padded to a 16-bit multiple

    @classmethod
    def from_params(cls, params: SchemeParams, tight: bool = False) -> "LabelLayout":
        return _layout(params.ell, params.lam, tight)


@lru_cache(maxsize=None)
def _layout(ell: int, lam: int, tight: bool) -> LabelLayout:
    t_width = lam + 2 if tight else lam + 3
    widths = (lam, lam + 2, ell + lam + 1, lam, lam + 2, t_width)
    offsets = []
    off = 0
    for w in widths:
        offsets.append(off)
        off += w
    padded = -(-off // 16) * 16
    return LabelLayout(ell, lam, tight, widths, tuple(offsets), off, padded // 4)


@dataclass(frozen=True)
class Label:
    bits: int

    def to_hex(self, layout: LabelLayout) -> str:
        return format(self.bits, f"0{layout.hex_chars}x")

    @classmethod
    def from_hex(cls, text: str) -> "Label":
        return cls(int(text, 16))


def pack(
    params: SchemeParams,
    own: DyadicInterval,
    sup: DyadicInterval,
    layout: LabelLayout | None = None,
) -> Label:
    """Pack a node's interval and its supervisor's interval into one label."""
    if layout is None:
        layout = LabelLayout.from_params(params)
    alpha = own.a << own.i
    if not (sup.a << sup.i) <= alpha or not own.hi <= sup.hi:
        raise ValueError("own interval must be contained in the supervisor's")
    a2 = alpha >> sup.i           # largest a'' with 2^i' * a'' <= alpha
    t = a2 - sup.a
    fields = (own.i - 1, own.b - 1, own.a - 1, sup.i - 1, sup.b - 1, t)
    bits = 0
    for value, width, offset in zip(fields, layout.widths, layout.offsets):
        if not 0 <= value < (1 << width):
            raise FieldRangeError(
                f"field value {value} does not fit in {width} bits "
                f"(fields i-1,b-1,a-1,i'-1,b'-1,t = {fields})"
            )
        bits |= value << offset
    return Label(bits)


def _field(bits: int, offset: int, width: int) -> int:
    # Extraction via two shifts and a subtraction; no masking needed.
    return (bits >> offset) - ((bits >> (offset + width)) << width)


def unpack(
    params: SchemeParams, label: Label, layout: LabelLayout | None = None
) -> tuple[tuple[int, int], tuple[int, int]]:
    """Recover ((lo, hi), (sup_lo, sup_hi)) using shifts and adds only."""
    if layout is None:
        layout = LabelLayout.from_params(params)
    bits = label.bits
    w = layout.widths
    o = layout.offsets
    if bits < 0 or bits >> layout.total_bits:
        raise FieldRangeError(f"label value {bits} wider than {layout.total_bits} bits")
    i = _field(bits, o[0], w[0]) + 1
    b = _field(bits, o[1], w[1]) + 1
    a = _field(bits, o[2], w[2]) + 1
    ip = _field(bits, o[3], w[3]) + 1
    bp = _field(bits, o[4], w[4]) + 1
    t = _field(bits, o[5], w[5])
    lo = a << i
    hi = (a + b) << i
    ap = (lo >> ip) - t
    return (lo, hi), (ap << ip, (ap + bp) << ip)


def decide_ancestry(
    params: SchemeParams,
    label_u: Label,
    label_v: Label,
    layout: LabelLayout | None = None,
) -> bool:
    """True iff u is a strict ancestor of v, from the two labels alone.

    Labels must come from one tree marked under the same params; output on
    anything else is unspecified.  Identical labels mean the same node.
    """
    if label_u.bits == label_v.bits:
        return False
    (ulo, uhi), (slo, shi) = unpack(params, label_u, layout)
    (vlo, vhi), _ = unpack(params, label_v, layout)
    # D1: I(v) strictly inside I(sp(u)); D2: I(u) precedes I(v) or u is
    # its own supervisor.
    d1 = slo <= vlo and vhi <= shi and not (slo == vlo and shi == vhi)
    d2 = uhi < vlo or (ulo == slo and uhi == shi)
    return d1 and d2


def decide_ancestry_counted(
    params: SchemeParams, label_u: Label, label_v: Label
) -> tuple[bool, int]:
    """decide_ancestry with a primitive-operation counter (debug audit).

    Counts every shift, add/subtract and comparison; the count must not
    depend on the family size.
    """
    layout = LabelLayout.from_params(params)
    ops = 0

    def field(bits: int, offset: int, width: int) -> int:
        nonlocal ops
        ops += 4  # two shifts, one shift, one subtraction
        return (bits >> offset) - ((bits >> (offset + width)) << width)

    def decode(bits: int):
        nonlocal ops
        w, o = layout.widths, layout.offsets
        i = field(bits, o[0], w[0]) + 1
        b = field(bits, o[1], w[1]) + 1
        a = field(bits, o[2], w[2]) + 1
        ip = field(bits, o[3], w[3]) + 1
        bp = field(bits, o[4], w[4]) + 1
        t = field(bits, o[5], w[5])
        ops += 5  # the +1 adjustments
        lo = a << i
        hi = (a + b) << i
        ap = (lo >> ip) - t
        slo = ap << ip
        shi = (ap + bp) << ip
        ops += 9  # shifts and adds above
        return lo, hi, slo, shi

    ops += 1
    if label_u.bits == label_v.bits:
        return False, ops
    ulo, uhi, slo, shi = decode(label_u.bits)
    vlo, vhi, _, _ = decode(label_v.bits)
    ops += 8  # the comparisons below
    d1 = slo <= vlo and vhi <= shi and not (slo == vlo and shi == vhi)
    d2 = uhi < vlo or (ulo == slo and uhi == shi)
    return d1 and d2, ops


@dataclass(frozen=True)
class MarkResult:
    labels: dict[int, Label]
    intervals: dict[int, DyadicInterval]
    layout: LabelLayout
    decorated: object  # DecoratedTree; kept loose to avoid a cycle in reprs


def mark_details(
    tree: RootedTree, params: SchemeParams, tight: bool = False
) -> MarkResult:
    """Full marking pipeline: decorate, assign intervals, pack labels."""
    if tree.node_count > params.n:
        raise ValueError(
            f"tree has {tree.node_count} nodes, family size is {params.n}"
        )
    d = decorate(tree)
    mapping = assign_intervals(d, params)
    layout = LabelLayout.from_params(params, tight)
    labels = {
        u: pack(params, mapping[u], mapping[d.supervisor[u]], layout)
        for u in range(tree.node_count)
    }
    return MarkResult(labels, mapping, layout, d)


def mark(tree: RootedTree, params: SchemeParams) -> dict[int, Label]:
    return mark_details(tree, params).labels


def observed_t(label: Label, layout: LabelLayout) -> int:
    """The supervisor-offset field of a label (for budget reporting)."""
    return _field(label.bits, layout.offsets[5], layout.widths[5])
