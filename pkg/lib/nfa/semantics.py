from typing import Dict, Optional

import numpy as np

from ..errors import UnknownAtomError
from ..terms import Letter, I_LETTER
from ..structures import Relation, Structure, compose, converse
from .automaton import Nfa



def letter_relation(interp: Dict[Letter, Relation], x: Letter) -> Relation:
    """The relation a signed letter denotes under a label interpretation"""

    try:
        rel = interp[x.base()]
    except KeyError:
        raise UnknownAtomError(x.atom)
    return converse(rel) if x.converse else rel



def eval_nfa(m: Structure, a: Nfa, max_len: Optional[int] = None) -> Relation:
    """The union of the relations of the words an automaton accepts

    Every state q collects the pairs (x, y) such that some word leading from
    the initial state to q relates x to y. Layer k covers the words with at
    most k letters; without max_len the layers run to their fixpoint, which is
    the exact relation of the automaton.

    Parameters:
        m (Structure): the model
        a (Nfa): the automaton
        max_len (int, optional): the longest word to take into account

    Returns:
        Relation: an n x n boolean array
    """

    return eval_nfa_with(m.interpretation(), a, max_len)


def eval_nfa_with(interp: Dict[Letter, Relation], a: Nfa, max_len: Optional[int] = None) -> Relation:
    """eval_nfa under an explicit label interpretation, which need not be
       coherent (see evaluate_with)
    """

    n = interp[I_LETTER].shape[-1]

    moves = []
    epsilon = []
    for p, x, q in a.all_transitions():
        if x.is_epsilon():
            epsilon.append((p, q))
        else:
            moves.append((p, letter_relation(interp, x), q))

    reached = np.zeros((a.n_states, n, n), dtype=bool)
    reached[a.initial] = np.eye(n, dtype=bool)
    _propagate(reached, epsilon)

    length = 0
    while max_len is None or length < max_len:
        grown = reached.copy()
        for p, rel, q in moves:
            if reached[p].any():
                grown[q] |= compose(reached[p], rel)
        _propagate(grown, epsilon)

        if np.array_equal(grown, reached):
            break
        reached = grown
        length += 1

    return reached[a.final].copy()


def _propagate(reached: np.ndarray, epsilon):

    changed = True
    while changed:
        changed = False
        for p, q in epsilon:
            fresh = reached[p] & ~reached[q]
            if fresh.any():
                reached[q] |= fresh
                changed = True
