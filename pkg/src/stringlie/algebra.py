"""The free abelian group on strings, the dot product and the bracket."""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Mapping
from functools import lru_cache

from .complex import RibbonGraph
from .linked import LinkedPair, lp1, lp2
from .words import StringClass, canonical_string, is_primitive, rotate


class InternalConsistencyError(RuntimeError):
    """Two computations that must agree did not."""


class StringSum(Mapping[StringClass, int]):
    """Finitely supported integer combination of strings. Zero terms are dropped."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[StringClass, int] | Iterable[tuple[StringClass, int]] = ()):
        acc: dict[StringClass, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for x, c in items:
            acc[x] = acc.get(x, 0) + c
        self._terms = {x: c for x, c in acc.items() if c}

    @classmethod
    def single(cls, x: StringClass, coefficient: int = 1) -> StringSum:
        return cls({x: coefficient})

    def __getitem__(self, x: StringClass) -> int:
        return self._terms.get(x, 0)

    def __iter__(self) -> Iterator[StringClass]:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __add__(self, other: StringSum) -> StringSum:
        return StringSum(list(self._terms.items()) + list(other._terms.items()))

    def __neg__(self) -> StringSum:
        return StringSum({x: -c for x, c in self._terms.items()})

    def __sub__(self, other: StringSum) -> StringSum:
        return self + (-other)

    def __mul__(self, k: int) -> StringSum:
        return StringSum({x: k * c for x, c in self._terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if isinstance(other, StringSum):
            return self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def sorted_terms(self) -> list[tuple[StringClass, int]]:
        return sorted(self._terms.items(), key=lambda t: t[0].canon)

    def render(self) -> str:
        """One ``<signed int>\\t<word>`` line per term; empty for zero."""
        return "".join(f"{c:+d}\t{x.format()}\n" for x, c in self.sorted_terms())

    def __repr__(self) -> str:
        inner = ", ".join(f"{c:+d}*<{x.format()}>" for x, c in self.sorted_terms())
        return f"StringSum({inner})"


def dot_product(X: StringClass, Y: StringClass, pq: LinkedPair, graph: RibbonGraph | None = None) -> StringClass:
    """String of the product of the representatives of ``X`` and ``Y``
    rebased at the end of the core (kind 1, 2) or, for ``Y`` in kind 3,
    at the start of its core."""
    g = graph or X.graph or Y.graph
    x, y = pq.P.word, pq.Q.word
    if canonical_string(x) != X or canonical_string(y) != Y:
        raise ValueError("linked pair does not belong to these strings")
    k = pq.P.core_darts
    alpha = rotate(x, pq.P.offset + k)
    beta = rotate(y, pq.Q.offset) if pq.kind == 3 else rotate(y, pq.Q.offset + k)
    return canonical_string(alpha + beta, g)


@lru_cache(maxsize=1 << 16)
def _bracket(g: RibbonGraph, X: StringClass, Y: StringClass) -> StringSum:
    terms = [(dot_product(X, Y, pq, g), pq.sign) for pq in lp2(X, Y, g)]
    return StringSum(terms)


def bracket(X: StringClass | StringSum, Y: StringClass | StringSum, graph: RibbonGraph | None = None) -> StringSum:
    """Signed sum of dot products over all linked pairs; bilinear on sums."""
    if isinstance(X, StringSum) or isinstance(Y, StringSum):
        xs = X if isinstance(X, StringSum) else StringSum.single(X)
        ys = Y if isinstance(Y, StringSum) else StringSum.single(Y)
        total = StringSum()
        for x, cx in xs.items():
            for y, cy in ys.items():
                total = total + (cx * cy) * bracket(x, y, graph)
        return total
    g = graph or X.graph or Y.graph
    if not X or not Y:
        return StringSum()
    return _bracket(g, X, Y)


def jacobi_residual(X: StringClass, Y: StringClass, Z: StringClass, graph: RibbonGraph | None = None) -> StringSum:
    return (bracket(X, bracket(Y, Z, graph), graph)
            + bracket(Y, bracket(Z, X, graph), graph)
            + bracket(Z, bracket(X, Y, graph), graph))


def self_linked_count(X: StringClass, graph: RibbonGraph | None = None) -> int:
    return len(lp1(X, graph)) if X else 0


def is_simple(X: StringClass, graph: RibbonGraph | None = None) -> bool:
    """Whether the primitive string ``X`` has no linked pairs, checked
    against ``[X, X^-1] = 0``."""
    if not is_primitive(X):
        raise ValueError(f"string {X.format()!r} is not primitive")
    simple = self_linked_count(X, graph) == 0
    vanishes = not bracket(X, X.inverse(), graph)
    if simple != vanishes:
        raise InternalConsistencyError(
            f"lp1 empty is {simple} but [X, X^-1] = 0 is {vanishes} for {X.format()!r}")
    return simple
