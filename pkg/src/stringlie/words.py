"""Dart-word algebra: free reduction, cyclic reduction, strings (rotation
classes of cyclically reduced closed words), primitivity and lengths.

Words are tuples of dart ids. Functions that only need the involution
``d ^ 1`` take no graph; the rest take the :class:`RibbonGraph` the word
lives on.
"""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from dataclasses import dataclass, field

from .complex import GraphError, RibbonGraph, Word


def reduce(word: Sequence[int], graph: RibbonGraph | None = None) -> Word:
    """Cancel every backtrack ``d d^-1``.

    >>> reduce((0, 1, 2))
    (2,)
    """
    if graph is not None and not graph.is_composable(word):
        raise GraphError("word is not composable")
    out: list[int] = []
    for d in word:
        if out and out[-1] == d ^ 1:
            out.pop()
        else:
            out.append(d)
    return tuple(out)


def is_reduced(word: Sequence[int]) -> bool:
    return all(a != b ^ 1 for a, b in zip(word, word[1:]))


def is_cyclically_reduced(word: Sequence[int]) -> bool:
    return is_reduced(word) and (len(word) < 2 or word[-1] != word[0] ^ 1)


def invert(word: Sequence[int]) -> Word:
    return tuple(d ^ 1 for d in reversed(word))


def concat(*words: Sequence[int], graph: RibbonGraph | None = None) -> Word:
    if graph is not None:
        nonempty = [w for w in words if w]
        for u, v in zip(nonempty, nonempty[1:]):
            if graph.head(u[-1]) != graph.at(v[0]):
                raise GraphError("endpoint mismatch in concatenation")
    return reduce(tuple(d for w in words for d in w))


def power(word: Sequence[int], n: int) -> Word:
    if n < 0:
        raise ValueError("power must be nonnegative")
    return reduce(tuple(word) * n)


def cyclic_reduce(word: Sequence[int]) -> tuple[Word, Word]:
    """Split a reduced closed word as ``conjugator . core . conjugator^-1``
    with the longest possible conjugator.

    >>> cyclic_reduce((0, 0, 2, 1))
    ((0, 2), (0,))
    """
    w = reduce(word)
    k = 0
    while 2 * k + 1 < len(w) and w[k] == w[len(w) - 1 - k] ^ 1:
        k += 1
    return w[k:len(w) - k], w[:k]


def rotate(word: Sequence[int], s: int) -> Word:
    if not word:
        return ()
    s %= len(word)
    return tuple(word[s:]) + tuple(word[:s])


def least_rotation(word: Sequence[int]) -> int:
    """Booth's algorithm: start index of the lexicographically least rotation."""
    s = list(word) * 2
    n = len(s)
    fail = [-1] * n
    k = 0
    for j in range(1, n):
        c = s[j]
        i = fail[j - k - 1]
        while i != -1 and c != s[k + i + 1]:
            if c < s[k + i + 1]:
                k = j - i - 1
            i = fail[i]
        if c != s[k + i + 1]:
            if c < s[k]:
                k = j
            fail[j - k] = -1
        else:
            fail[j - k] = i + 1
    return k % max(len(word), 1)


def smallest_period(word: Sequence[int]) -> int:
    """Smallest ``r > 0`` with ``rotate(word, r) == word`` (``len(word)`` if primitive)."""
    n = len(word)
    fail = [0] * n
    k = 0
    for i in range(1, n):
        while k and word[i] != word[k]:
            k = fail[k - 1]
        if word[i] == word[k]:
            k += 1
        fail[i] = k
    r = n - (fail[-1] if n else 0)
    return r if n % r == 0 else n


@dataclass(frozen=True, order=True)
class StringClass:
    """A string: the rotation class of a cyclically reduced closed word,
    keyed by its least rotation."""

    canon: Word
    graph: RibbonGraph | None = field(default=None, compare=False, hash=False, repr=False)

    def __len__(self) -> int:
        return len(self.canon)

    def __bool__(self) -> bool:
        return bool(self.canon)

    @property
    def length(self) -> int:
        if self.graph is None:
            return len(self.canon)
        return self.graph.word_length(self.canon)

    def inverse(self) -> StringClass:
        return canonical_string(invert(self.canon), self.graph)

    def format(self) -> str:
        if self.graph is None:
            return " ".join(map(str, self.canon))
        return self.graph.format_word(self.canon)

    def __str__(self) -> str:
        return self.format()


def canonical_string(word: Sequence[int], graph: RibbonGraph | None = None) -> StringClass:
    if graph is not None and not graph.is_closed(word):
        raise GraphError("word is not closed")
    core, _ = cyclic_reduce(word)
    return StringClass(rotate(core, least_rotation(core)), graph)


def is_primitive(x: StringClass | Sequence[int]) -> bool:
    canon = x.canon if isinstance(x, StringClass) else tuple(x)
    if not canon:
        raise ValueError("primitivity of the trivial string is undefined")
    return smallest_period(canon) == len(canon)


def length(x: StringClass | Sequence[int], graph: RibbonGraph | None = None) -> int:
    if isinstance(x, StringClass):
        return x.length
    if graph is None:
        return len(x)
    return graph.word_length(x)


def parse_string(graph: RibbonGraph, text: str) -> StringClass:
    word = graph.parse_word(text)
    if not graph.is_closed(word):
        raise GraphError(f"word {text.strip()!r} is not closed")
    return canonical_string(word, graph)


def closed_reduced_words(graph: RibbonGraph, n: int) -> Iterator[Word]:
    """All cyclically reduced closed words with exactly ``n`` darts."""
    if n == 0:
        return
    darts = range(graph.n_darts)
    succ = {d: [e for e in darts if graph.at(e) == graph.head(d) and e != d ^ 1] for d in darts}

    def extend(prefix: list[int]) -> Iterator[Word]:
        if len(prefix) == n:
            if graph.head(prefix[-1]) == graph.at(prefix[0]) and (n < 2 or prefix[-1] != prefix[0] ^ 1):
                yield tuple(prefix)
            return
        for e in succ[prefix[-1]]:
            prefix.append(e)
            yield from extend(prefix)
            prefix.pop()

    for d in darts:
        if n == 1:
            if graph.head(d) == graph.at(d):
                yield (d,)
        else:
            yield from extend([d])


def enumerate_strings(graph: RibbonGraph, max_len: int, *, min_len: int = 1) -> list[StringClass]:
    """Every nontrivial string with at most ``max_len`` darts, sorted by (size, canon)."""
    seen: set[Word] = set()
    out = []
    for n in range(min_len, max_len + 1):
        for w in closed_reduced_words(graph, n):
            if w == rotate(w, least_rotation(w)) and w not in seen:
                seen.add(w)
                out.append(StringClass(w, graph))
    return out

