"""Intersection pairs and linked pairs between cyclically reduced closed words.

A pair of factorizations meets along a common core (kind 2), an inverse
core (kind 3) or a single vertex (kind 1). It is an intersection pair when
the flanking darts separate at both ends of the core, and a linked pair when
the crossing is stable, i.e. the two ends see the second strand pass from
one side of the first strand to the other.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple

from .complex import GraphError, RibbonGraph, Word, sign_of_branch
from .words import StringClass, canonical_string, invert, is_cyclically_reduced


class Status(Enum):
    NOT_INTERSECTING = "not_intersecting"
    INTERSECTION = "intersection"
    LINKED = "linked"


class Classification(NamedTuple):
    status: Status
    kind: int | None = None
    sign: int | None = None


@dataclass(frozen=True)
class CyclicFactorization:
    """Core of ``core_darts`` darts starting at ``offset`` in ``word``.

    ``offset`` is taken modulo ``len(word)``; the core itself lives on the
    periodic word and may wrap around several times.
    """

    word: Word
    power: int
    offset: int
    core_darts: int

    @property
    def base(self) -> StringClass:
        return canonical_string(self.word)

    def core(self) -> Word:
        p = len(self.word)
        return tuple(self.word[(self.offset + k) % p] for k in range(self.core_darts))


@dataclass(frozen=True)
class LinkedPair:
    """An intersection pair ``(P, Q)``; ``linked`` tells whether it is stable.

    ``core`` is P's core ``eta``; Q's core is ``eta`` (kind 2), its inverse
    (kind 3), or empty (kind 1). ``flanks`` are the darts ``(a, b, c, d)``
    before and after the cores of P and Q.
    """

    P: CyclicFactorization
    Q: CyclicFactorization
    kind: int
    sign: int
    linked: bool
    core: Word
    core_length: int
    flanks: tuple[int, int, int, int]

    @property
    def powers(self) -> tuple[int, int]:
        return self.P.power, self.Q.power

    def sort_key(self) -> tuple[int, int, int, int]:
        return self.core_length, self.P.offset, self.Q.offset, self.kind


def classify_pair(
    g: RibbonGraph,
    A: tuple[int, Word, int],
    B: tuple[int, Word, int],
) -> Classification:
    """Decide whether local configurations ``A = (a, eta, b)`` and
    ``B = (c, xi, d)`` form an intersection pair, and if so whether it is linked.

    Flanks are single darts: ``a`` arrives at the start of ``eta``, ``b``
    leaves its end, and likewise ``c``, ``d`` around ``xi``.
    """
    a, eta, b = A
    c, xi, d = B
    eta, xi = tuple(eta), tuple(xi)
    if not eta and not xi:
        if g.head(a) != g.at(b) or g.head(c) != g.at(d) or g.at(b) != g.at(d):
            raise GraphError("kind-1 configuration must meet at one vertex")
        if len({a ^ 1, b, c ^ 1, d}) < 4:
            return Classification(Status.NOT_INTERSECTING)
        s_d = sign_of_branch(g, (a ^ 1, b), d, "outgoing")
        s_c = sign_of_branch(g, (a ^ 1, b), c ^ 1, "incoming")
        kind, sign, other = 1, s_d, s_c
    elif eta and eta == xi:
        g1, g2 = eta[0], eta[-1]
        if len({a ^ 1, g1, c ^ 1}) < 3 or len({g2 ^ 1, b, d}) < 3:
            return Classification(Status.NOT_INTERSECTING)
        s_end = sign_of_branch(g, (g2 ^ 1, b), d, "outgoing")
        s_start = sign_of_branch(g, (a ^ 1, g1), c ^ 1, "incoming")
        kind, sign, other = 2, s_end, s_start
    elif eta and eta == invert(xi):
        g1, g2 = eta[0], eta[-1]
        if len({g2 ^ 1, b, c ^ 1}) < 3 or len({g1, a ^ 1, d}) < 3:
            return Classification(Status.NOT_INTERSECTING)
        s_start = sign_of_branch(g, (a ^ 1, g1), d, "outgoing")
        s_end = sign_of_branch(g, (g2 ^ 1, b), c ^ 1, "incoming")
        kind, sign, other = 3, s_start, s_end
    else:
        raise GraphError("cores must be both empty, equal, or mutually inverse")
    if sign == other:
        return Classification(Status.LINKED, kind, sign)
    return Classification(Status.INTERSECTION, kind, sign)


def pairs_between(
    g: RibbonGraph, x: Word, y: Word, *, linked_only: bool = True
) -> list[LinkedPair]:
    """Intersection pairs between cyclic words ``x`` and ``y`` (each taken with
    the power its length window requires), sorted deterministically.

    Offsets run over one period of each word. A common stretch of ``len(x) +
    len(y)`` darts would force a common period, so such candidates lie on a
    shared axis and are skipped.
    """
    x, y = tuple(x), tuple(y)
    if not x or not y:
        return []
    for w in (x, y):
        if not is_cyclically_reduced(w) or not g.is_closed(w):
            raise GraphError("words must be closed and cyclically reduced")
    p, q = len(x), len(y)
    lx, ly = g.word_length(x), g.word_length(y)
    cap = p + q
    out: list[LinkedPair] = []

    def emit(i: int, j: int, k: int, flanks: tuple[int, int, int, int], xi: Word) -> None:
        a, b, c, d = flanks
        eta = tuple(x[(i + t) % p] for t in range(k))
        cls = classify_pair(g, (a, eta, b), (c, xi, d))
        if cls.status is Status.NOT_INTERSECTING:
            return
        if linked_only and cls.status is not Status.LINKED:
            return
        L = g.word_length(eta)
        out.append(LinkedPair(
            P=CyclicFactorization(x, L // lx + 1, i, k),
            Q=CyclicFactorization(y, L // ly + 1, j, k),
            kind=cls.kind, sign=cls.sign, linked=cls.status is Status.LINKED,
            core=eta, core_length=L, flanks=flanks,
        ))

    for i in range(p):
        xa, xb = x[i - 1], x[i]
        for j in range(q):
            yc, yd = y[j - 1], y[j]
            # kind 1: meeting at the vertex before x[i] and y[j]
            if g.at(xb) == g.at(yd):
                emit(i, j, 0, (xa, xb, yc, yd), ())
            # kind 2: maximal common stretch starting at x[i], y[j]
            if xb == yd and xa != yc:
                k = 1
                while k < cap and x[(i + k) % p] == y[(j + k) % q]:
                    k += 1
                if k < cap:
                    xi = tuple(y[(j + t) % q] for t in range(k))
                    emit(i, j, k, (xa, x[(i + k) % p], yc, y[(j + k) % q]), xi)
            # kind 3: x runs forward from x[i] while y runs backward from y[j]
            if yd == xb ^ 1 and y[(j + 1) % q] != xa ^ 1:
                k = 1
                while k < cap and x[(i + k) % p] == y[(j - k) % q] ^ 1:
                    k += 1
                if k < cap:
                    j0 = (j - k + 1) % q
                    xi = tuple(y[(j0 + t) % q] for t in range(k))
                    flanks = (xa, x[(i + k) % p], y[(j - k) % q], y[(j + 1) % q])
                    emit(i, j0, k, flanks, xi)
    out.sort(key=LinkedPair.sort_key)
    return out


def lp2(X: StringClass, Y: StringClass, graph: RibbonGraph | None = None) -> list[LinkedPair]:
    """Linked pairs between the strings ``X`` and ``Y`` (with powers)."""
    g = graph or X.graph or Y.graph
    if not X or not Y:
        return []
    return pairs_between(g, X.canon, Y.canon)


def lp1(X: StringClass, graph: RibbonGraph | None = None) -> list[LinkedPair]:
    """Linked pairs of ``X`` with itself."""
    return lp2(X, X, graph)


def intersection_pairs(X: StringClass, Y: StringClass, graph: RibbonGraph | None = None) -> list[LinkedPair]:
    g = graph or X.graph or Y.graph
    if not X or not Y:
        return []
    return pairs_between(g, X.canon, Y.canon, linked_only=False)
