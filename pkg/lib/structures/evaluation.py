from typing import Dict, Mapping

import numpy as np

from ..errors import UnknownAtomError
from ..terms import (
    Term, Var, NegVar, ConvVar, ConvNegVar, Id, NegId, Bot, Top,
    Comp, Union, Inter, Star, Conv, Compl, Letter, I_LETTER, NEG_I_LETTER,
)
from .structure import Relation, Structure, PointedStructure


Interpretation = Mapping[Letter, Relation]



def compose(r: Relation, s: Relation) -> Relation:
    """Relational composition of two (batched) boolean matrices"""

    return np.matmul(r.astype(np.int32), s.astype(np.int32)) > 0


def converse(r: Relation) -> Relation:
    return np.swapaxes(r, -1, -2)


def identity_like(r: Relation) -> Relation:
    n = r.shape[-1]
    return np.broadcast_to(np.eye(n, dtype=bool), r.shape)


def reflexive_transitive_closure(r: Relation) -> Relation:
    """Closes a (batched) relation under reflexivity and transitivity by
       repeated squaring

    After k squarings every path of length up to 2^k is covered, so at most
    log2(n)+1 rounds are needed before the matrix stops changing.
    """

    closure = identity_like(r) | r
    while True:
        squared = closure | compose(closure, closure)
        if np.array_equal(squared, closure):
            return closure
        closure = squared



def _lookup(interp: Interpretation, letter: Letter) -> Relation:
    try:
        return interp[letter]
    except KeyError:
        raise UnknownAtomError(letter.atom)


def evaluate_with(t: Term, interp: Interpretation) -> Relation:
    """Evaluates a term under an interpretation of the graph labels

    The interpretation maps a, a-, I and I- (as Letters) to boolean arrays of
    shape (..., n, n); leading axes are evaluated in parallel. The labels need
    not be coherent (a- need not be the complement of a), which is what the
    partial structures of the saturation search rely on.

    Parameters:
        t (Term): a general or restricted term
        interp (dict): Letter -> Relation, must contain I

    Returns:
        Relation: the denotation, same shape as the entries of interp

    Raises:
        UnknownAtomError: if an atom of t has no relation
    """

    shape = interp[I_LETTER].shape

    if isinstance(t, Var):
        return _lookup(interp, Letter(t.name))
    if isinstance(t, NegVar):
        return _lookup(interp, Letter(t.name, True))
    if isinstance(t, ConvVar):
        return converse(_lookup(interp, Letter(t.name)))
    if isinstance(t, ConvNegVar):
        return converse(_lookup(interp, Letter(t.name, True)))
    if isinstance(t, Id):
        return interp[I_LETTER]
    if isinstance(t, NegId):
        return interp[NEG_I_LETTER]
    if isinstance(t, Bot):
        return np.zeros(shape, dtype=bool)
    if isinstance(t, Top):
        return np.ones(shape, dtype=bool)
    if isinstance(t, Compl):
        # only the complemented constants are well formed
        return np.ones(shape, dtype=bool) if isinstance(t.body, Bot) else np.zeros(shape, dtype=bool)
    if isinstance(t, Comp):
        return compose(evaluate_with(t.left, interp), evaluate_with(t.right, interp))
    if isinstance(t, Union):
        return evaluate_with(t.left, interp) | evaluate_with(t.right, interp)
    if isinstance(t, Inter):
        return evaluate_with(t.left, interp) & evaluate_with(t.right, interp)
    if isinstance(t, Star):
        return reflexive_transitive_closure(evaluate_with(t.body, interp))
    if isinstance(t, Conv):
        return converse(evaluate_with(t.body, interp))

    raise TypeError('not a term: {!r}'.format(t))



def evaluate(m: Structure, t: Term) -> Relation:
    """The relation a term denotes in a structure

    Parameters:
        m (Structure): the model
        t (Term): the term, its atoms must belong to the alphabet of m

    Returns:
        Relation: an n x n boolean array

    Raises:
        UnknownAtomError: if t uses an atom m does not interpret
    """
    return evaluate_with(t, m.interpretation())


def holds(p: PointedStructure, t: Term) -> bool:
    """Whether the pair (source, target) belongs to the denotation of t"""
    return bool(evaluate(p.base, t)[p.source, p.target])


def models_equation(m: Structure, lhs: Term, rhs: Term) -> bool:
    return bool(np.array_equal(evaluate(m, lhs), evaluate(m, rhs)))


def models_inequation(m: Structure, lhs: Term, rhs: Term) -> bool:
    return not bool(np.any(evaluate(m, lhs) & ~evaluate(m, rhs)))


def refutes(p: PointedStructure, lhs: Term, rhs: Term, direction: str = '<=') -> bool:
    """Whether the pointed structure violates lhs <= rhs (direction '<=') or
       rhs <= lhs (direction '>=')
    """

    assert direction in ('<=', '>=')

    left, right = holds(p, lhs), holds(p, rhs)
    if direction == '<=':
        return left and not right
    return right and not left
