"""Validity of equations and inequations, routed by fragment

Classes:
    Options
        budgets, the forced engine and the worker count
    Query
        lhs <= rhs or lhs = rhs over an alphabet, in converse normal form

Functions:
    decide(q):
        picks the engine from the fragment of both sides
    decide_starfree(q), graph_characterization_check(q):
        two independent exact procedures for star-free queries
    decide_intersection_free(q):
        the automata procedures for queries without intersection
    semidecide_ecorstar(q, budget):
        the refutation semi-procedure for everything else
    first_hit(items, check, threads):
        the first non-None check result in item order, optionally threaded
"""

from .options import Options, PROCEDURES
from .query import Query, RELATIONS
from .procedures import (
    decide, decide_starfree, graph_characterization_check, decide_intersection_free,
    semidecide_ecorstar, first_hit,
)
