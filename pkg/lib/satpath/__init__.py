"""Saturable paths and the searches built on them, for terms without
intersection

A saturable path is a word, an I-saturation of its path graph and one state
set of the right-hand automaton per vertex; one exists exactly when some
structure refutes word <= automaton.

Classes:
    SaturablePath
        the word, graph and state sets

Functions:
    con(a, x, u, v):
        the transition compatibility of two state sets
    is_saturable_path(p, a), saturate_from_path(p, a):
        checks a path, and completes it to a saturation
    canonical_sets(structure, classes, a):
        the state sets a refuting structure induces
    nu(a, u), xi(a, u, quad), phi(a, quads, u), pairwise_saturated(a, sets):
        the pairwise and the pointwise saturation conditions
    as_accepts(a, word):
        the state set search along one word
    fragment_emptiness(a1, a2):
        the exact search for the two fragments without I- on the right or
        without complemented atoms on the left
    full_exka_search(a1, a2, len_cap):
        the word by word search for the whole fragment
    saturable_paths(word, a):
        every saturable path of a word
"""

from .path import (
    SaturablePath, StateSet, con, con_mask, is_saturable_path, saturate_from_path,
    canonical_sets, i_saturation,
)
from .formula import nu, xi, phi, pairwise_saturated, pointwise_saturated
from .search import (
    MAX_LEN_CAP, as_accepts, fragment_emptiness, full_exka_search, saturable_paths,
    nfa_judge, refuting_saturation,
)
