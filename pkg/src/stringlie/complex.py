"""Ribbon graphs: the combinatorial stand-in for a piecewise-geodesic complex
on an oriented surface.

Darts are plain integers. Edge number ``e`` owns the forward dart ``2*e`` and
the backward dart ``2*e + 1``, so reversal is ``d ^ 1`` and the integer order
is the total dart order of the graph (edges in declaration order, ``+`` before
``-``). A dart is attached to the vertex it points away from.
"""

from __future__ import annotations

import re
from collections.abc import Mapping, Sequence

Dart = int
Word = tuple[int, ...]

FORWARD, BACKWARD = "+", "-"


class GraphError(ValueError):
    """Structural problem with a ribbon graph or with a word on it."""


class GraphParseError(GraphError):
    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


def reversal(d: Dart) -> Dart:
    return d ^ 1


class RibbonGraph:
    """A connected graph with a positive cyclic order of darts at each vertex.

    ``edges`` is a sequence of ``(name, length)`` pairs (a bare name means
    length 1); ``rotation`` maps each vertex name to its darts in
    counterclockwise order, using dart names ``<edge>+`` / ``<edge>-``.

    Construction with ``check=False`` keeps malformed input around so that
    :func:`validate_graph` can report on it.
    """

    def __init__(
        self,
        edges: Sequence[tuple[str, int] | str],
        rotation: Mapping[str, Sequence[str]],
        *,
        check: bool = True,
    ):
        names: list[str] = []
        lengths: list[int] = []
        for item in edges:
            name, length = (item, 1) if isinstance(item, str) else item
            names.append(name)
            lengths.append(length)
        self.edges: tuple[str, ...] = tuple(names)
        self.lengths: tuple[int, ...] = tuple(lengths)
        self._edge_index = {name: i for i, name in enumerate(names)}
        self._duplicate_edges = sorted({n for n in names if names.count(n) > 1})

        self.vertices: tuple[str, ...] = tuple(rotation)
        self._rotation: dict[str, tuple[int, ...]] = {}
        self._placements: dict[int, list[str]] = {}
        for v, darts in rotation.items():
            ids = tuple(self.dart(name) for name in darts)
            self._rotation[v] = ids
            for d in ids:
                self._placements.setdefault(d, []).append(v)

        self._at: dict[int, str] = {d: vs[0] for d, vs in self._placements.items()}
        self._pos: dict[int, int] = {}
        for v, ids in self._rotation.items():
            for k, d in enumerate(ids):
                self._pos.setdefault(d, k)
        self.n_darts = 2 * len(names)

        if check:
            problems = validate_graph(self)
            if problems:
                raise GraphError("; ".join(problems))

    # -- darts -------------------------------------------------------------

    def dart(self, name: str) -> Dart:
        if len(name) < 2 or name[-1] not in "+-" or name[:-1] not in self._edge_index:
            raise GraphError(f"unknown dart {name!r}")
        return 2 * self._edge_index[name[:-1]] + (name[-1] == BACKWARD)

    def dart_name(self, d: Dart) -> str:
        return self.edges[d >> 1] + (BACKWARD if d & 1 else FORWARD)

    def edge_of(self, d: Dart) -> str:
        return self.edges[d >> 1]

    def length(self, d: Dart) -> int:
        return self.lengths[d >> 1]

    def at(self, d: Dart) -> str:
        """Vertex the dart points away from."""
        return self._at[d]

    def head(self, d: Dart) -> str:
        """Vertex the dart points to."""
        return self._at[d ^ 1]

    def rotation(self, v: str) -> tuple[int, ...]:
        return self._rotation[v]

    def valence(self, v: str) -> int:
        return len(self._rotation[v])

    def orient(self, d1: Dart, d2: Dart, d3: Dart) -> int:
        """Unchecked :func:`cyclic_order` for darts known to share a vertex."""
        n = len(self._rotation[self._at[d1]])
        p1 = self._pos[d1]
        return 1 if (self._pos[d2] - p1) % n < (self._pos[d3] - p1) % n else -1

    # -- words -------------------------------------------------------------

    def parse_word(self, text: str) -> Word:
        """Parse whitespace-separated edge letters.

        ``a`` is the forward dart of edge ``a``; ``A`` (single letters only)
        or ``~a`` is its reversal; explicit dart names ``a+``/``a-`` work too.
        """
        out = []
        for m in re.finditer(r"\S+", text):
            tok = m.group()
            d = self._token_dart(tok)
            if d is None:
                raise GraphParseError(f"unknown letter {tok!r}", 1, m.start() + 1)
            out.append(d)
        return tuple(out)

    def _token_dart(self, tok: str) -> Dart | None:
        idx = self._edge_index
        if tok.startswith("~") and tok[1:] in idx:
            return 2 * idx[tok[1:]] + 1
        if tok in idx:
            return 2 * idx[tok]
        if len(tok) == 1 and tok.isupper() and tok.lower() in idx:
            return 2 * idx[tok.lower()] + 1
        if len(tok) >= 2 and tok[-1] in "+-" and tok[:-1] in idx:
            return 2 * idx[tok[:-1]] + (tok[-1] == BACKWARD)
        return None

    def letter(self, d: Dart) -> str:
        name = self.edges[d >> 1]
        if not d & 1:
            return name
        if len(name) == 1 and name.islower():
            return name.upper()
        return "~" + name

    def format_word(self, word: Sequence[Dart]) -> str:
        return " ".join(self.letter(d) for d in word)

    def is_composable(self, word: Sequence[Dart]) -> bool:
        return all(self.head(a) == self.at(b) for a, b in zip(word, word[1:]))

    def is_closed(self, word: Sequence[Dart]) -> bool:
        return not word or (self.is_composable(word) and self.head(word[-1]) == self.at(word[0]))

    def word_length(self, word: Sequence[Dart]) -> int:
        return sum(self.lengths[d >> 1] for d in word)

    # -- derived graphs ----------------------------------------------------

    def mirror(self) -> RibbonGraph:
        """Same graph with every cyclic order reversed (opposite orientation)."""
        rot = {v: [self.dart_name(d) for d in reversed(ds)] for v, ds in self._rotation.items()}
        return RibbonGraph(list(zip(self.edges, self.lengths)), rot)

    def subgraph(self, edge_names: set[str]) -> RibbonGraph:
        """Ribbon subgraph spanned by the given edges, with induced cyclic orders."""
        keep = [(e, ln) for e, ln in zip(self.edges, self.lengths) if e in edge_names]
        rot = {}
        for v, ds in self._rotation.items():
            kept = [self.dart_name(d) for d in ds if self.edges[d >> 1] in edge_names]
            if kept:
                rot[v] = kept
        return RibbonGraph(keep, rot)

    def to_text(self) -> str:
        lines = [f"vertex {v}: " + " ".join(self.dart_name(d) for d in ds)
                 for v, ds in self._rotation.items()]
        lines += [f"edge {e}: {e}+ {e}- length {ln}" for e, ln in zip(self.edges, self.lengths)]
        return "\n".join(lines) + "\n"

    def __repr__(self) -> str:
        return f"RibbonGraph(vertices={len(self.vertices)}, edges={len(self.edges)})"


def validate_graph(g: RibbonGraph) -> list[str]:
    """One diagnostic string per violated ribbon-graph invariant; empty if valid."""
    problems = [f"duplicate edge {e}" for e in g._duplicate_edges]
    for d in range(g.n_darts):
        places = g._placements.get(d, [])
        if not places:
            problems.append(f"dart {g.dart_name(d)} not placed at any vertex")
        elif len(places) > 1:
            problems.append(f"dart {g.dart_name(d)} multiply placed at {', '.join(places)}")
    for e, ln in zip(g.edges, g.lengths):
        if not isinstance(ln, int) or ln <= 0:
            problems.append(f"edge {e} has nonpositive length {ln}")
    for v in g.vertices:
        if g.valence(v) < 2:
            problems.append(f"vertex {v} has valence {g.valence(v)} < 2")
    if problems:
        return problems

    if g.vertices:
        seen = {g.vertices[0]}
        stack = [g.vertices[0]]
        while stack:
            v = stack.pop()
            for d in g.rotation(v):
                w = g.head(d)
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        missing = [v for v in g.vertices if v not in seen]
        if missing:
            problems.append("graph is not connected: unreachable " + ", ".join(missing))
    return problems


def cyclic_order(g: RibbonGraph, v: str, d1: Dart, d2: Dart, d3: Dart) -> int:
    """+1 iff, walking the cyclic order of ``v`` positively from ``d1``,
    ``d2`` comes strictly before ``d3``; -1 otherwise."""
    if len({d1, d2, d3}) != 3:
        raise GraphError("cyclic_order needs three distinct darts")
    for d in (d1, d2, d3):
        if g.at(d) != v:
            raise GraphError(f"dart {g.dart_name(d)} is not at vertex {v}")
    return g.orient(d1, d2, d3)


def sign_of_branch(
    g: RibbonGraph,
    through: tuple[Dart, Dart],
    probe: Dart,
    probe_mode: str = "outgoing",
) -> int:
    """Side on which a branch meets a strand passing through a vertex.

    ``through = (arrival, departure)``: ``arrival`` is the dart at the vertex
    along which the strand came in (the reversal of its last dart),
    ``departure`` the dart it leaves along. ``probe`` is the branch's dart at
    the vertex. Outgoing branches leaving to the left and incoming branches
    arriving from the right give +1.
    """
    arrival, departure = through
    if len({arrival, departure, probe}) != 3:
        raise GraphError("non-transversal configuration: coincident darts at a branch")
    v = g.at(departure)
    if probe_mode == "outgoing":
        return cyclic_order(g, v, departure, probe, arrival)
    if probe_mode == "incoming":
        return cyclic_order(g, v, departure, arrival, probe)
    raise ValueError(f"probe_mode must be 'outgoing' or 'incoming', not {probe_mode!r}")


# -- text format -----------------------------------------------------------

_VERTEX_RE = re.compile(r"vertex\s+(\S+?)\s*:(.*)$")
_EDGE_RE = re.compile(r"edge\s+(\S+?)\s*:\s*(\S+)\s+(\S+)(?:\s+length\s+(\S+))?\s*$")


def parse_graph(text: str, *, check: bool = True) -> RibbonGraph:
    """Read the line-oriented ribbon-graph format.

    ::

        vertex v: a+ b+ a- b-
        edge a: a+ a- length 1
    """
    rotation: dict[str, list[str]] = {}
    edges: list[tuple[str, int]] = []
    edge_names: set[str] = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        col = raw.index(line[0]) + 1
        if m := _VERTEX_RE.match(line):
            v = m.group(1)
            if v in rotation:
                raise GraphParseError(f"duplicate vertex {v}", lineno, col)
            rotation[v] = m.group(2).split()
        elif m := _EDGE_RE.match(line):
            e, plus, minus, length = m.groups()
            if e in edge_names:
                raise GraphParseError(f"duplicate edge {e}", lineno, col)
            if (plus, minus) != (e + "+", e + "-"):
                raise GraphParseError(f"edge {e} must list darts {e}+ {e}-", lineno, col)
            try:
                ln = int(length) if length is not None else 1
            except ValueError:
                raise GraphParseError(f"length {length!r} is not an integer", lineno, col) from None
            edges.append((e, ln))
            edge_names.add(e)
        else:
            raise GraphParseError(f"cannot parse {line!r}", lineno, col)

    for v, darts in rotation.items():
        for name in darts:
            if name[:-1] not in edge_names or name[-1:] not in ("+", "-"):
                raise GraphError(f"vertex {v} lists unknown dart {name!r}")
    return RibbonGraph(edges, rotation, check=check)


def format_graph(g: RibbonGraph) -> str:
    return g.to_text()


# -- valence-3 resolution ----------------------------------------------------

def _fresh(base: str, taken: set[str]) -> str:
    k = 1
    while f"{base}_{k}" in taken:
        k += 1
    name = f"{base}_{k}"
    taken.add(name)
    return name


def _rebuild(edges: list[tuple[str, int]], rot: dict[str, list[str]]) -> RibbonGraph:
    return RibbonGraph(edges, rot)


def _subdivide(g: RibbonGraph, carrier: Word) -> tuple[RibbonGraph, Word]:
    """Split the edge of ``carrier[0]`` at its midpoint (lengths must be even)."""
    e = g.edge_of(carrier[0])
    taken = set(g.edges) | set(g.vertices)
    e2 = _fresh(e, taken)
    mid = _fresh("m", taken)
    half = g.lengths[g.edges.index(e)] // 2
    edges = []
    for name, ln in zip(g.edges, g.lengths):
        if name == e:
            edges += [(e, half), (e2, half)]
        else:
            edges.append((name, ln))
    rot = {v: [g.dart_name(d) if d != g.dart(e + "-") else e2 + "-" for d in ds]
           for v, ds in ((v, g.rotation(v)) for v in g.vertices)}
    rot[mid] = [e + "-", e2 + "+"]
    h = _rebuild(edges, rot)
    fwd, bwd = g.dart(e + "+"), g.dart(e + "-")
    new: list[int] = []
    for d in carrier:
        if d == fwd:
            new += [h.dart(e + "+"), h.dart(e2 + "+")]
        elif d == bwd:
            new += [h.dart(e2 + "-"), h.dart(e + "-")]
        else:
            new.append(h.dart(g.dart_name(d)))
    # start at the midpoint
    k = next(i for i, d in enumerate(new) if h.at(d) == mid)
    return h, tuple(new[k:] + new[:k])


def _resolve_vertex(g: RibbonGraph, carrier: Word, p: str) -> tuple[RibbonGraph, Word]:
    n = len(carrier)
    t = next(i for i in range(n) if g.at(carrier[i]) == p)
    h_in, h_out = carrier[t - 1] ^ 1, carrier[t]
    ring = g.rotation(p)
    k0 = ring.index(h_in)
    ring = ring[k0:] + ring[:k0]
    k_out = ring.index(h_out)
    right = list(ring[1:k_out])
    left = list(ring[k_out + 1:])
    others = right + left[::-1]
    is_right = {d: True for d in right} | {d: False for d in left}
    m = len(others)

    taken = set(g.edges) | set(g.vertices)
    chain_vertices = [_fresh(p, taken) for _ in range(m)]
    chain_edges = [_fresh(f"{p}c", taken) for _ in range(m - 1)]
    slot = {h_in: 0, h_out: m - 1} | {d: j for j, d in enumerate(others)}

    rot: dict[str, list[str]] = {}
    for v in g.vertices:
        if v != p:
            rot[v] = [g.dart_name(d) for d in g.rotation(v)]
    for j, w in enumerate(chain_vertices):
        west = g.dart_name(h_in) if j == 0 else chain_edges[j - 1] + "-"
        east = g.dart_name(h_out) if j == m - 1 else chain_edges[j] + "+"
        o = g.dart_name(others[j])
        rot[w] = [west, o, east] if is_right[others[j]] else [west, east, o]
    edges = list(zip(g.edges, g.lengths)) + [(c, 1) for c in chain_edges]
    h = _rebuild(edges, rot)

    new: list[int] = []
    for i in range(n):
        d = carrier[i]
        new.append(h.dart(g.dart_name(d)))
        nxt = carrier[(i + 1) % n]
        if g.head(d) != p:
            continue
        a, b = slot[d ^ 1], slot[nxt]
        if a < b:
            new += [h.dart(chain_edges[j] + "+") for j in range(a, b)]
        else:
            new += [h.dart(chain_edges[j] + "-") for j in range(a - 1, b - 1, -1)]
    return h, tuple(new)


def trivalent_resolution(
    g: RibbonGraph, carrier: Sequence[Dart], *, subdivide: bool = True
) -> tuple[RibbonGraph, Word]:
    """Spread every vertex of valence > 3 into a chain of valence-3 vertices.

    At each such vertex the carrier's first passage is kept as the through
    strand; the other darts are re-attached along it on the side they occupied
    in the cyclic order, and every other passage of the carrier is rerouted
    along the chain. Lengths are doubled first; chain edges get length 1.

    The carrier is rotated to start at a valence-2 vertex. If there is none,
    the carrier's first edge is split at its midpoint (``subdivide=True``) or
    a :class:`GraphError` is raised.
    """
    carrier = tuple(carrier)
    if max(g.valence(v) for v in g.vertices) <= 3:
        return g, carrier
    from .words import is_cyclically_reduced

    if not carrier or not g.is_closed(carrier) or not is_cyclically_reduced(carrier):
        raise GraphError("carrier must be a nonempty cyclically reduced closed word")
    missed = set(g.edges) - {g.edge_of(d) for d in carrier}
    if missed:
        raise GraphError("carrier does not visit edges " + ", ".join(sorted(missed)))

    h = RibbonGraph([(e, 2 * ln) for e, ln in zip(g.edges, g.lengths)],
                    {v: [g.dart_name(d) for d in g.rotation(v)] for v in g.vertices})
    word = carrier
    regular = [i for i, d in enumerate(word) if h.valence(h.at(d)) == 2]
    if regular:
        word = word[regular[0]:] + word[:regular[0]]
    elif subdivide:
        h, word = _subdivide(h, word)
    else:
        raise GraphError("carrier passes through no regular point and subdivision is disabled")

    order: list[str] = []
    for d in word:
        v = h.at(d)
        if h.valence(v) > 3 and v not in order:
            order.append(v)
    for p in order:
        h, word = _resolve_vertex(h, word, p)
    return h, word


def carried_subgraph(g: RibbonGraph, word: Sequence[Dart]) -> tuple[RibbonGraph, Word]:
    """The ribbon subgraph traced out by ``word``, with the word moved onto it."""
    used = {g.edge_of(d) for d in word}
    h = g.subgraph(used)
    return h, tuple(h.dart(g.dart_name(d)) for d in word)
