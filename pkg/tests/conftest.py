import functools

import pytest

from topogen import corpus
from topogen.approximation import build_space
from topogen.multiaddress import compute_family

ALL = corpus.names()
STRICT = [n for n in ALL if n != "weak_axiom4"]


@functools.lru_cache(maxsize=None)
def family(name):
    return compute_family(corpus.load(name))


@functools.lru_cache(maxsize=None)
def space(name, level):
    return build_space(family(name), level)


@pytest.fixture
def binary():
    return corpus.load("binary")


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod and mod.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in mod.RESULTS:
            terminalreporter.write_line(line)
