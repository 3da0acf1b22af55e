"""Crossing elements of the deck group acting on the universal-cover tree.

Points of the cover tree are reduced words from the base vertex ``x`` (the
start of ``alpha``), and a closed reduced word ``g`` acts by
``w -> reduce(g + w)``. The axis of ``alpha`` is the bi-infinite path through
``x`` obtained by repeating ``alpha`` in both directions; ``V(s)`` is its
vertex ``s`` darts from ``x``.

Every intersection pair between ``alpha`` and ``alpha^-1`` corresponds to one
element ``g`` whose translate of the axis meets the axis along a bounded
segment. The side of the axis on which ``g`` sends the points ``alpha . x``
and ``alpha^-1 . x`` tells whether that intersection is stable, and its sign.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import StringSum
from .complex import GraphError, RibbonGraph, Word
from .linked import LinkedPair, pairs_between
from .words import StringClass, canonical_string, invert, is_cyclically_reduced, reduce

PRESERVING, REVERSING, BOTH = "preserving", "reversing", "both"


@dataclass(frozen=True)
class Axis:
    """The periodic line through the base point carried by ``word``."""

    word: Word
    graph: RibbonGraph = field(compare=False, repr=False)

    @property
    def period(self) -> int:
        return len(self.word)

    def dart(self, s: int) -> int:
        """Dart from ``V(s)`` to ``V(s+1)``."""
        return self.word[s % len(self.word)]

    def segment(self, s0: int, s1: int) -> Word:
        """Darts from ``V(s0)`` to ``V(s1)`` along the axis (``s0 <= s1``)."""
        return tuple(self.dart(s) for s in range(s0, s1))

    def vertex(self, s: int) -> Word:
        """Anchor word of ``V(s)``."""
        if s >= 0:
            return self.segment(0, s)
        return invert(self.segment(s, 0))

    def locate(self, w: Word) -> int | None:
        """Axis coordinate of the tree vertex ``w``, or None if off the axis."""
        f = self._forward_prefix(w)
        if f == len(w):
            return f
        b = self._backward_prefix(w)
        if b == len(w):
            return -b
        return None

    def _forward_prefix(self, w: Word) -> int:
        f = 0
        while f < len(w) and w[f] == self.dart(f):
            f += 1
        return f

    def _backward_prefix(self, w: Word) -> int:
        b = 0
        while b < len(w) and w[b] == self.dart(-b - 1) ^ 1:
            b += 1
        return b

    def side(self, w: Word) -> int:
        """+1 if the tree vertex ``w`` lies left of the axis, -1 if right.

        The point's path from the axis leaves it at ``V(s)`` along ``w[f]``;
        the side is read off the cyclic order there.
        """
        f = self._forward_prefix(w)
        if f:
            s = f
        else:
            f = self._backward_prefix(w)
            s = -f
        if f == len(w):
            raise ValueError("point lies on the axis")
        leave, arrive = self.dart(s), self.dart(s - 1) ^ 1
        return self.graph.orient(leave, w[f], arrive)


def axis_of(alpha: Word, graph: RibbonGraph) -> Axis:
    alpha = tuple(alpha)
    if not alpha:
        raise ValueError("axis of the trivial word is undefined")
    if not is_cyclically_reduced(alpha) or not graph.is_closed(alpha):
        raise GraphError("axis needs a closed cyclically reduced word")
    return Axis(alpha, graph)


@dataclass(frozen=True)
class CrossingElement:
    """Deck element ``g`` with ``g . a_seg = b_seg`` on the axis.

    Segments are pairs of axis coordinates ``(start, end)``; ``a_seg`` is
    written in the direction that ``g`` carries onto ``b_seg``'s direction.
    ``sign`` is filled in only for stable crossings.
    """

    g: Word
    a_seg: tuple[int, int]
    b_seg: tuple[int, int]
    t: Word
    gamma: Word
    orientation: str
    pair: LinkedPair = field(compare=False, repr=False)
    sign: int | None = None

    @property
    def linked(self) -> bool:
        return self.sign is not None


def _normalize(lo: int, k: int, p: int) -> int:
    """Shift a segment ``[lo, lo+k]`` by periods so its top lies in ``[0, p)``."""
    return (lo + k) % p - k


def t1_elements(alpha: Word, graph: RibbonGraph) -> list[CrossingElement]:
    """One element per intersection pair of ``alpha`` with ``alpha^-1``."""
    ax = axis_of(alpha, graph)
    p = ax.period
    out = []
    for pair in pairs_between(graph, ax.word, invert(ax.word), linked_only=False):
        k = pair.P.core_darts
        i = _normalize(pair.P.offset, k, p)
        # Q's core in alpha^-1 covers alpha's darts [u, u+k), read backwards
        u = _normalize(-pair.Q.offset - k, k, p)
        if pair.kind == 2:
            g = reduce(ax.vertex(i) + invert(ax.vertex(u + k)))
            a_seg, orientation = (u + k, u), REVERSING
        else:
            g = reduce(ax.vertex(i) + invert(ax.vertex(u)))
            a_seg, orientation = (u, u + k), PRESERVING if k else BOTH
        out.append(CrossingElement(
            g=g, a_seg=a_seg, b_seg=(i, i + k), t=ax.segment(i, i + k),
            gamma=ax.segment(0, i + k), orientation=orientation, pair=pair,
        ))
    return out


def orientation_class(e: CrossingElement, alpha: Word, graph: RibbonGraph) -> str:
    """Orientation of ``g`` on the overlap of the axis with its translate,
    found by pushing axis vertices through ``g``."""
    ax = axis_of(alpha, graph)
    p = ax.period
    hits = []
    for s in range(-2 * p, 2 * p + 1):
        image = ax.locate(reduce(e.g + ax.vertex(s)))
        if image is not None:
            hits.append(image)
    if len(hits) == 1:
        return BOTH
    if not hits:
        raise ValueError("translate does not meet the axis")
    return PRESERVING if hits[1] > hits[0] else REVERSING


def crossing_side_signs(e: CrossingElement, alpha: Word, graph: RibbonGraph) -> tuple[int, int]:
    """Sides of the axis containing ``g alpha . x`` and ``g alpha^-1 . x``."""
    ax = axis_of(alpha, graph)
    forward = reduce(e.g + ax.word)
    backward = reduce(e.g + invert(ax.word))
    return ax.side(forward), ax.side(backward)


def t0_elements(alpha: Word, graph: RibbonGraph) -> list[CrossingElement]:
    """Crossing elements whose translate separates ``alpha . x`` from
    ``alpha^-1 . x``, with their signs."""
    out = []
    for e in t1_elements(alpha, graph):
        fwd, bwd = crossing_side_signs(e, alpha, graph)
        if fwd != bwd:
            # +1 when alpha^-1 . x is carried to the left of the axis
            out.append(_with_sign(e, bwd))
    return out


def _with_sign(e: CrossingElement, sign: int) -> CrossingElement:
    return CrossingElement(e.g, e.a_seg, e.b_seg, e.t, e.gamma, e.orientation, e.pair, sign)


def c_curves(e: CrossingElement, alpha: Word, graph: RibbonGraph) -> tuple[Word, Word, Word, Word]:
    """``(c1, c2, gamma, t)``: the two loops into which the commutator
    ``alpha g alpha^-1 g^-1`` splits, conjugated by ``gamma``."""
    ax = axis_of(alpha, graph)
    p = ax.period
    end_b = e.b_seg[1]
    end_a = e.a_seg[1]
    alpha_g = ax.segment(end_b, end_b + p)
    beta_g = invert(ax.segment(end_a - p, end_a))
    if e.orientation == REVERSING:
        c1, c2 = alpha_g, beta_g
    else:
        c1, c2 = reduce(alpha_g + invert(e.t)), reduce(e.t + beta_g)
    return c1, c2, e.gamma, e.t


def commutator(e: CrossingElement, alpha: Word) -> Word:
    return reduce(tuple(alpha) + e.g + invert(alpha) + invert(e.g))


def check_formula2(e: CrossingElement, alpha: Word, graph: RibbonGraph) -> bool:
    c1, c2, gamma, _ = c_curves(e, alpha, graph)
    return commutator(e, alpha) == reduce(gamma + c1 + c2 + invert(gamma))


def bracket_self_inverse_via_cover(X: StringClass, graph: RibbonGraph | None = None) -> StringSum:
    """``[X, X^-1]`` as the signed sum of commutator strings over stable crossings."""
    g = graph or X.graph
    if not X:
        return StringSum()
    alpha = X.canon
    return StringSum((canonical_string(commutator(e, alpha), g), e.sign)
                     for e in t0_elements(alpha, g))
