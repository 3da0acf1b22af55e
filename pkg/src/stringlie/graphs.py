"""Small ribbon graphs used throughout the tests and the verification suites."""

from __future__ import annotations

from functools import cache

from .complex import RibbonGraph, parse_graph

TORUS = """\
vertex v: a+ b+ a- b-
edge a: a+ a- length 1
edge b: b+ b- length 1
"""

PLANAR = """\
vertex v: a+ a- b+ b-
edge a: a+ a- length 1
edge b: b+ b- length 1
"""

THETA = """\
vertex u: a+ b+ c+
vertex w: a- b- c-
edge a: a+ a- length 1
edge b: b+ b- length 1
edge c: c+ c- length 1
"""

BUILTIN = {"tor": TORUS, "plan": PLANAR, "theta": THETA}


@cache
def builtin(name: str) -> RibbonGraph:
    return parse_graph(BUILTIN[name])


def torus() -> RibbonGraph:
    return builtin("tor")


def planar() -> RibbonGraph:
    return builtin("plan")


def theta() -> RibbonGraph:
    return builtin("theta")
