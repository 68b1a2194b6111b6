"""Finite relational models and model checking

Relations are boolean numpy matrices. Evaluation works on stacks of them, so
the brute-force oracle checks thousands of small structures per numpy call.

Classes:
    Structure
        a finite model: a vertex count and a base relation per atom
    PointedStructure
        a structure with designated source and target vertices

Functions:
    evaluate(m, t):
        the relation a term denotes in a structure
    evaluate_with(t, interp):
        evaluation under an explicit (possibly batched or partial) labelling
    holds(p, t):
        whether (source, target) is in the denotation
    models_equation(m, lhs, rhs):
        whether both sides denote the same relation
    enumerate_structures(sigma, max_n):
        every structure up to max_n vertices in a fixed order
    brute_force_refute(lhs, rhs, max_n):
        the first counterexample in enumeration order
"""

from .structure import (
    Relation, Structure, PointedStructure, relation_from_pairs, pairs_of, load_structure,
)
from .evaluation import (
    compose, converse, reflexive_transitive_closure, evaluate, evaluate_with,
    holds, models_equation, models_inequation, refutes,
)
from .oracle import enumerate_structures, structure_batches, brute_force_refute
