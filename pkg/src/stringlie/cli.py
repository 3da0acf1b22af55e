"""Command-line front end.

Exit status: 0 on success, 1 when a verification or consistency check
fails, 2 on unreadable input.
"""

from __future__ import annotations

import argparse
import sys
from collections.abc import Sequence
from pathlib import Path

from . import verify
from .algebra import InternalConsistencyError, bracket, dot_product, is_simple, self_linked_count
from .complex import GraphError, RibbonGraph, carried_subgraph, parse_graph, trivalent_resolution
from .cover import bracket_self_inverse_via_cover, c_curves, t0_elements, t1_elements
from .graphs import BUILTIN, builtin
from .linked import LinkedPair, lp1, lp2
from .words import StringClass, canonical_string, is_primitive, reduce

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2

SINGLE = {"reduce", "canon", "primitive", "lp1", "simple", "selfcount", "t1", "t0",
          "cover-bracket", "resolve3"}
PAIRED = {"lp2", "bracket", "dot"}


class InputError(Exception):
    pass


def load_graph(source: str) -> RibbonGraph:
    path = Path(source)
    if path.is_file():
        try:
            return parse_graph(path.read_text(encoding="utf-8"))
        except GraphError as exc:
            raise InputError(f"{source}: {exc}") from None
    if source in BUILTIN:
        return builtin(source)
    raise InputError(f"graph file {source!r} not found")


def split_words(tokens: Sequence[str]) -> tuple[str, str]:
    """Two words are separated by a lone ``,`` or given as two single tokens."""
    if "," in tokens:
        k = tokens.index(",")
        return " ".join(tokens[:k]), " ".join(tokens[k + 1:])
    if len(tokens) == 2:
        return tokens[0], tokens[1]
    raise InputError("give two words separated by ',' (or exactly two one-letter words)")


def parse_closed(g: RibbonGraph, text: str) -> StringClass:
    try:
        word = g.parse_word(text)
    except GraphError as exc:
        raise InputError(f"word {text!r}: {exc}") from None
    if not g.is_closed(word):
        raise InputError(f"word {text!r} is not a closed path")
    return canonical_string(word, g)


def format_pair(g: RibbonGraph, pq: LinkedPair) -> str:
    state = "linked" if pq.linked else "unlinked"
    n, m = pq.powers
    return (f"kind={pq.kind}\tsign={pq.sign:+d}\t{state}\tcore={g.format_word(pq.core)}"
            f"\tlength={pq.core_length}\tpowers={n},{m}\tP={pq.P.offset}\tQ={pq.Q.offset}")


def format_element(g: RibbonGraph, e, alpha) -> str:
    c1, c2, gamma, t = c_curves(e, alpha, g)
    sign = f"{e.sign:+d}" if e.sign is not None else "."
    return (f"g={g.format_word(e.g)}\t{e.orientation}\tsign={sign}\tt={g.format_word(t)}"
            f"\tc1={g.format_word(c1)}\tc2={g.format_word(c2)}\tgamma={g.format_word(gamma)}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="stringlie", description="String bracket on ribbon graphs")
    parser.add_argument("command", choices=sorted(SINGLE | PAIRED | {"verify"}))
    parser.add_argument("words", nargs="*", help="word tokens, e.g. a b A; separate two words with ','")
    parser.add_argument("--graph", required=True, help="ribbon graph file (or builtin: tor, plan, theta)")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--trials", type=int, default=200)
    parser.add_argument("--max-len", type=int, default=None)
    parser.add_argument("--pair", type=int, default=0, help="index of the linked pair for 'dot'")
    for name in verify.SUITES:
        parser.add_argument(f"--{name}", action="store_true", help=f"run the {name} suite")
    return parser


def run_verify(g: RibbonGraph, args: argparse.Namespace, out) -> int:
    chosen = [n for n in verify.SUITES if getattr(args, n.replace("-", "_"))]
    if not chosen:
        raise InputError("verify needs at least one suite flag")
    status = EXIT_OK
    for name in chosen:
        kwargs = {}
        if args.max_len is not None:
            kwargs["max_len"] = args.max_len
        if name in verify.RANDOMIZED:
            kwargs.update(seed=args.seed, trials=args.trials)
        res = verify.SUITES[name](g, **kwargs)
        prefix = f"{name}\t" if len(chosen) > 1 else ""
        out.write(f"{prefix}{res.summary()}\n")
        for f in res.failures:
            out.write(f"  failed: {f}\n")
        if not res.ok:
            status = EXIT_FAIL
    return status


def run(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_intermixed_args(argv)
    try:
        g = load_graph(args.graph)
        if args.command == "verify":
            return run_verify(g, args, out)
        if args.command in PAIRED:
            x_text, y_text = split_words(args.words)
            return run_paired(g, args, parse_closed(g, x_text), parse_closed(g, y_text), out)
        text = " ".join(args.words)
        if args.command == "reduce":
            try:
                word = g.parse_word(text)
                out.write(g.format_word(reduce(word, g)) + "\n")
            except GraphError as exc:
                raise InputError(f"word {text!r}: {exc}") from None
            return EXIT_OK
        return run_single(g, args, parse_closed(g, text), out)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except InternalConsistencyError as exc:
        print(f"inconsistent: {exc}", file=sys.stderr)
        return EXIT_FAIL


def run_single(g: RibbonGraph, args: argparse.Namespace, X: StringClass, out) -> int:
    cmd = args.command
    if cmd == "canon":
        out.write(X.format() + "\n")
    elif cmd == "primitive":
        if not X:
            raise InputError("primitivity of the trivial string is undefined")
        out.write(f"{str(is_primitive(X)).lower()}\n")
    elif cmd == "lp1":
        for pq in lp1(X, g):
            out.write(format_pair(g, pq) + "\n")
    elif cmd == "selfcount":
        out.write(f"{self_linked_count(X, g)}\n")
    elif cmd == "simple":
        if not X or not is_primitive(X):
            raise InputError(f"string {X.format()!r} is not primitive")
        simple = is_simple(X, g)
        out.write(f"{str(simple).lower()}\n")
        for pq in lp1(X, g):
            out.write(format_pair(g, pq) + "\n")
    elif cmd in ("t1", "t0"):
        if not X:
            return EXIT_OK
        elements = t1_elements(X.canon, g) if cmd == "t1" else t0_elements(X.canon, g)
        for e in elements:
            out.write(format_element(g, e, X.canon) + "\n")
    elif cmd == "cover-bracket":
        out.write(bracket_self_inverse_via_cover(X, g).render())
    elif cmd == "resolve3":
        if not X:
            raise InputError("cannot resolve along the trivial string")
        sub, word = carried_subgraph(g, X.canon)
        try:
            h, w = trivalent_resolution(sub, word)
        except GraphError as exc:
            raise InputError(str(exc)) from None
        out.write(h.to_text())
        out.write(f"# carrier\n# {h.format_word(w)}\n")
    return EXIT_OK


def run_paired(g: RibbonGraph, args: argparse.Namespace, X: StringClass, Y: StringClass, out) -> int:
    if args.command == "lp2":
        for pq in lp2(X, Y, g):
            out.write(format_pair(g, pq) + "\n")
    elif args.command == "bracket":
        out.write(bracket(X, Y, g).render())
    elif args.command == "dot":
        pairs = lp2(X, Y, g)
        if not 0 <= args.pair < len(pairs):
            raise InputError(f"pair index {args.pair} out of range (there are {len(pairs)})")
        out.write(dot_product(X, Y, pairs[args.pair], g).format() + "\n")
    return EXIT_OK


def main() -> None:
    sys.exit(run())
