import pytest

from stringlie.complex import RibbonGraph
from stringlie.graphs import planar, theta, torus
from stringlie.words import StringClass, parse_string


@pytest.fixture
def tor() -> RibbonGraph:
    return torus()


@pytest.fixture
def plan() -> RibbonGraph:
    return planar()


@pytest.fixture
def th() -> RibbonGraph:
    return theta()


def S(g: RibbonGraph, text: str) -> StringClass:
    return parse_string(g, text)


def W(g: RibbonGraph, text: str) -> tuple[int, ...]:
    return g.parse_word(text)
