import os
import random
import sys

import pytest

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from lib.terms import (
    Letter, Var, NegVar, ConvVar, ConvNegVar, Id, NegId, Bot, Top, Comp, Union, Inter, Conv, Compl,
    I_LETTER, NEG_I_LETTER,
)
from lib.nfa import Nfa


A        = Letter('a')
NEG_A    = Letter('a', True)
CONV_A   = Letter('a', False, True)
CONV_NEG_A = Letter('a', True, True)



def pytest_addoption(parser):
    parser.addoption('--slow', action='store_true', default=False,
                     help='Also run the large randomized grids')


def pytest_configure(config):
    config.addinivalue_line('markers', 'slow: large randomized grid, runs with --slow')


def pytest_collection_modifyitems(config, items):
    if config.getoption('--slow'):
        return
    skip = pytest.mark.skip(reason='needs --slow')
    for item in items:
        if 'slow' in item.keywords:
            item.add_marker(skip)



@pytest.fixture
def merging_nfa():
    """Reads -1 then a^ then -a^, with epsilon moves between the last two
       states both ways; refuted by a;-a on a structure that merges the path
       ends
    """
    return Nfa(4, [
        (0, NEG_I_LETTER, 1),
        (1, CONV_A, 2),
        (2, CONV_NEG_A, 3),
        (1, I_LETTER, 3),
        (3, I_LETTER, 1),
    ], 0, 3)


@pytest.fixture
def misleading_nfa():
    """Accepts a;-1 and -1;-a. A state set search that ignores I- accepts
       the word a b -a, although no structure refutes it
    """
    return Nfa(4, [
        (0, A, 1),
        (1, NEG_I_LETTER, 3),
        (0, NEG_I_LETTER, 2),
        (2, NEG_A, 3),
    ], 0, 3, ('a', 'b'))



_LEAVES = (
    lambda a: Var(a), lambda a: NegVar(a), lambda a: ConvVar(a), lambda a: ConvNegVar(a),
    lambda a: Id(), lambda a: NegId(), lambda a: Top(), lambda a: Bot(),
)

_NODES = (Comp, Union, Inter)


def random_term(rng: random.Random, sigma, leaves: int):
    """A random star-free term with the given number of leaves"""

    if leaves <= 1:
        return rng.choice(_LEAVES)(rng.choice(sigma))

    split = rng.randint(1, leaves - 1)
    node = rng.choice(_NODES)
    return node(random_term(rng, sigma, split), random_term(rng, sigma, leaves - split))


@pytest.fixture
def term_source():
    rng = random.Random(20191)

    def draw(sigma, leaves):
        return random_term(rng, sigma, leaves)

    return draw



_GENERAL_LEAVES = _LEAVES + (lambda a: Compl(Top()), lambda a: Compl(Bot()))


def random_general_term(rng: random.Random, sigma, leaves: int):
    """A random star-free general term: converses may wrap any subterm and
       the constants may be complemented
    """

    if leaves <= 1:
        t = rng.choice(_GENERAL_LEAVES)(rng.choice(sigma))
    else:
        split = rng.randint(1, leaves - 1)
        node = rng.choice(_NODES)
        t = node(random_general_term(rng, sigma, split), random_general_term(rng, sigma, leaves - split))

    return Conv(t) if rng.random() < 0.3 else t


@pytest.fixture
def general_term_source():
    rng = random.Random(20192)

    def draw(sigma, leaves):
        return random_general_term(rng, sigma, leaves)

    return draw

