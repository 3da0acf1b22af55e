"""Verification suites: exact identity checks swept over many strings."""

from __future__ import annotations

import random
from collections import defaultdict
from dataclasses import dataclass, field
from functools import lru_cache

from .algebra import bracket, jacobi_residual
from .complex import RibbonGraph, carried_subgraph, trivalent_resolution
from .cover import (
    REVERSING,
    bracket_self_inverse_via_cover,
    c_curves,
    check_formula2,
    commutator,
    t0_elements,
    t1_elements,
)
from .linked import lp1
from .words import (
    StringClass,
    canonical_string,
    closed_reduced_words,
    enumerate_strings,
    is_primitive,
)


@dataclass
class SuiteResult:
    name: str
    passed: int = 0
    total: int = 0
    failures: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.passed == self.total

    def record(self, ok: bool, what: str) -> None:
        self.total += 1
        if ok:
            self.passed += 1
        else:
            self.failures.append(what)

    def summary(self) -> str:
        return f"{'ok' if self.ok else 'FAIL'} {self.passed}/{self.total}"


@lru_cache(maxsize=None)
def _words_of_length(g: RibbonGraph, n: int) -> tuple[tuple[int, ...], ...]:
    return tuple(closed_reduced_words(g, n))


def random_string(g: RibbonGraph, rng: random.Random, max_len: int) -> StringClass:
    """Uniform length in ``1..max_len``, then a uniform cyclically reduced
    closed word of that length (lengths with no words are redrawn)."""
    while True:
        words = _words_of_length(g, rng.randint(1, max_len))
        if words:
            return canonical_string(rng.choice(words), g)


def jacobi(g: RibbonGraph, *, seed: int = 0, trials: int = 200, max_len: int = 6) -> SuiteResult:
    rng = random.Random(seed)
    res = SuiteResult("jacobi")
    for _ in range(trials):
        X, Y, Z = (random_string(g, rng, max_len) for _ in range(3))
        res.record(not jacobi_residual(X, Y, Z, g), f"{X} | {Y} | {Z}")
    return res


def antisym(g: RibbonGraph, *, seed: int = 0, trials: int = 200, max_len: int = 6) -> SuiteResult:
    rng = random.Random(seed)
    res = SuiteResult("antisym")
    for _ in range(trials):
        X, Y = (random_string(g, rng, max_len) for _ in range(2))
        res.record(not (bracket(X, Y, g) + bracket(Y, X, g)), f"{X} | {Y}")
    return res


def simple_thm(g: RibbonGraph, *, max_len: int = 6) -> SuiteResult:
    res = SuiteResult("simple-thm")
    for X in enumerate_strings(g, max_len):
        if is_primitive(X):
            vanishes = not bracket(X, X.inverse(), g)
            res.record(vanishes == (not lp1(X, g)), str(X))
    return res


def cross_oracle(g: RibbonGraph, *, max_len: int = 5) -> SuiteResult:
    res = SuiteResult("cross-oracle")
    for X in enumerate_strings(g, max_len):
        res.record(bracket(X, X.inverse(), g) == bracket_self_inverse_via_cover(X, g), str(X))
    return res


def formula2(g: RibbonGraph, *, max_len: int = 5) -> SuiteResult:
    res = SuiteResult("formula2")
    for X in enumerate_strings(g, max_len):
        for e in t1_elements(X.canon, g):
            res.record(check_formula2(e, X.canon, g), f"{X} g={g.format_word(e.g)}")
    return res


def length_laws(g: RibbonGraph, *, max_len: int = 5) -> SuiteResult:
    res = SuiteResult("length-laws")
    for X in enumerate_strings(g, max_len):
        la = g.word_length(X.canon)
        for e in t1_elements(X.canon, g):
            c1, c2, _, t = c_curves(e, X.canon, g)
            lc, lt = g.word_length(c1 + c2), g.word_length(t)
            if e.orientation == REVERSING:
                ok = lc == 2 * la and 2 * lt < la
            else:
                ok = lc == 2 * la - 2 * lt
            res.record(ok, f"{X} g={g.format_word(e.g)} ({e.orientation})")
    return res


def resolution(g: RibbonGraph, *, max_len: int = 5) -> SuiteResult:
    """Linked-pair count and signs survive spreading valence-4+ vertices."""
    res = SuiteResult("resolution")
    for X in enumerate_strings(g, max_len):
        sub, word = carried_subgraph(g, X.canon)
        if max(sub.valence(v) for v in sub.vertices) < 4:
            continue
        h, w = trivalent_resolution(sub, word)
        Y = canonical_string(w, h)
        ok = (max(h.valence(v) for v in h.vertices) <= 3
              and sorted(p.sign for p in lp1(X, g)) == sorted(p.sign for p in lp1(Y, h)))
        res.record(ok, str(X))
    return res


def rigidity(g: RibbonGraph, *, max_len: int = 6) -> SuiteResult:
    """Crossing elements with conjugate commutators share c-curves and signs;
    reversing ones coincide."""
    res = SuiteResult("rigidity")
    coincidences = {True: 0, False: 0}
    for X in enumerate_strings(g, max_len):
        alpha = X.canon
        signs = {e.g: e.sign for e in t0_elements(alpha, g)}
        groups = defaultdict(list)
        for e in t1_elements(alpha, g):
            groups[canonical_string(commutator(e, alpha))].append(e)
        for es in groups.values():
            for e in es:
                for h in es:
                    if e is h:
                        continue
                    coincidences[is_primitive(X)] += 1
                    ok = c_curves(e, alpha, g)[:2] == c_curves(h, alpha, g)[:2]
                    if e.g in signs and h.g in signs:
                        ok = ok and signs[e.g] == signs[h.g]
                    if e.orientation == h.orientation == REVERSING:
                        ok = ok and e.g == h.g
                    res.record(ok, f"{X} g={g.format_word(e.g)} h={g.format_word(h.g)}")
    res.notes.append(f"conjugate commutators from distinct elements: {coincidences[True]} ordered pairs "
                     f"for primitive words, {coincidences[False]} for non-primitive words")
    return res


SUITES = {
    "jacobi": jacobi,
    "antisym": antisym,
    "simple-thm": simple_thm,
    "cross-oracle": cross_oracle,
    "formula2": formula2,
    "resolution": resolution,
}
RANDOMIZED = {"jacobi", "antisym"}
