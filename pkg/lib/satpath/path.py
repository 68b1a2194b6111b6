import logging
from dataclasses import dataclass
from typing import FrozenSet, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from ..errors import NotSaturatedError
from ..terms import Letter, I_LETTER, NEG_I_LETTER
from ..structures import PointedStructure
from ..graphs import Graph, graph_of_word, is_consistent, equivalence_closure
from ..nfa import Nfa, letter_relation
from ..nfa.automaton import mask_of


logger = logging.getLogger(__name__)


StateSet = FrozenSet[int]



@dataclass(frozen=True)
class SaturablePath:
    """A word, an I-saturation of its path graph and one automaton state set
       per vertex
    """

    word: Tuple[Letter, ...]
    graph: Graph
    sets: Tuple[StateSet, ...]


    def __post_init__(self):
        assert len(self.sets) == self.graph.n == len(self.word) + 1


    def partition(self) -> List[List[int]]:
        """The I classes, each sorted, ordered by smallest member"""

        identity = self.graph.label(I_LETTER)
        classes = []
        for i in range(self.graph.n):
            if not any(i in c for c in classes):
                classes.append([int(j) for j in np.flatnonzero(identity[i])])
        return classes


    def to_json(self, structure: Optional[PointedStructure] = None) -> dict:
        doc = {
            'word': [x.encode() for x in self.word],
            'I_partition': self.partition(),
            'U': [sorted(u) for u in self.sets],
        }
        if structure is not None:
            doc['structure'] = structure.to_json()
        return doc



def read_mask(a: Nfa, mask: int, x: Letter) -> int:
    # reading the identity letter means taking the epsilon closure
    if x.is_epsilon():
        return a.closure_mask(mask)
    return a.delta_mask(mask, x)


def con_mask(a: Nfa, x: Letter, u: int, v: int) -> bool:
    return (read_mask(a, u, x) & ~v) == 0 and (read_mask(a, v, x.breve()) & ~u) == 0


def con(a: Nfa, x: Letter, u: Iterable[int], v: Iterable[int]) -> bool:
    """Whether the x moves from u stay in v and the converse moves from v stay
       in u

    Parameters:
        a (Nfa): the automaton
        x (Letter): any signed letter, the identity included
        u, v (set of int): state sets
    """

    return con_mask(a, x, mask_of(u), mask_of(v))


def saturation_letters(sigma: Sequence[str]) -> Tuple[Letter, ...]:
    """The positive letters the saturation condition ranges over: the atoms
       and I
    """
    return tuple(Letter(b) for b in sigma) + (I_LETTER,)


def sat_pair_mask(a: Nfa, sigma: Sequence[str], u: int, v: int) -> bool:
    return all(con_mask(a, x, u, v) or con_mask(a, x.bar(), u, v) for x in saturation_letters(sigma))



def i_saturation(word: Sequence[Letter], sigma: Sequence[str], classes: Sequence[int]) -> Graph:
    """The I-saturation of the path graph of a word whose I classes are given
       per vertex
    """

    path = graph_of_word(word, sigma)
    classes = np.asarray(classes)
    same = classes[:, None] == classes[None, :]

    return path.with_labels({I_LETTER: same, NEG_I_LETTER: ~same})


def _is_i_saturation(p: SaturablePath) -> bool:

    g = p.graph
    path = graph_of_word(p.word, g.sigma)

    for b in g.sigma:
        for x in (Letter(b), Letter(b, True)):
            if not np.array_equal(g.label(x), path.label(x)):
                return False

    identity = g.label(I_LETTER)
    if not np.array_equal(identity, equivalence_closure(identity)):
        return False
    if not np.array_equal(g.label(NEG_I_LETTER), ~identity):
        return False

    return is_consistent(g)


def is_saturable_path(p: SaturablePath, a: Nfa) -> bool:
    """Checks the saturable path conditions for refuting word <= a

    The graph must be an I-saturation of the path graph, the initial state must
    lie in the source set and the final state outside the target set, every
    labelled edge must satisfy Con, and every pair of sets must satisfy Con for
    each atom and I or for its complement.
    """

    if not _is_i_saturation(p):
        logger.debug('not an I-saturation of the path graph')
        return False

    g = p.graph
    masks = [mask_of(u) for u in p.sets]

    if not (masks[g.source] >> a.initial & 1) or (masks[g.target] >> a.final & 1):
        return False

    for i, x, j in g.edges():
        if not con_mask(a, x, masks[i], masks[j]):
            logger.debug('Con fails on edge %d -%s-> %d', i, x, j)
            return False

    for i in range(g.n):
        for j in range(g.n):
            if not sat_pair_mask(a, g.sigma, masks[i], masks[j]):
                logger.debug('saturation condition fails on (%d, %d)', i, j)
                return False

    return True



def saturate_from_path(p: SaturablePath, a: Nfa) -> Graph:
    """Completes a saturable path to a saturation of its graph on which Con
       holds along every edge

    First every label is closed under the I classes. Then, for each ordered
    pair of vertices and each atom, in that order, an unlabelled pair receives
    a if Con_a holds and a- otherwise. Labels are added class block by class
    block, which keeps them closed.

    Raises:
        NotSaturatedError: if p is not a saturable path for a
    """

    if not is_saturable_path(p, a):
        raise NotSaturatedError('not a saturable path for this automaton')

    g = p.graph
    same = g.label(I_LETTER).astype(np.int32)

    labels = {x: (same @ rel.astype(np.int32) @ same) > 0 for x, rel in g.labels().items()}
    labels[I_LETTER] = g.label(I_LETTER).copy()
    labels[NEG_I_LETTER] = g.label(NEG_I_LETTER).copy()

    block = g.label(I_LETTER)
    for i in range(g.n):
        for j in range(g.n):
            for b in g.sigma:
                x, xbar = Letter(b), Letter(b, True)
                if labels[x][i, j] or labels[xbar][i, j]:
                    continue
                chosen = x if con(a, x, p.sets[i], p.sets[j]) else xbar
                labels[chosen] |= np.outer(block[i], block[j])

    h = Graph(g.sigma, g.n, labels, g.source, g.target)
    logger.debug('saturated path graph on %d vertices', h.n)

    return h



def canonical_sets(structure: PointedStructure, classes: Sequence[int], a: Nfa) -> Tuple[StateSet, ...]:
    """The state sets a refuting structure induces on a path

    W_q collects the vertices from which some word accepted from state q leads
    to the target; vertex i of the path receives the states q whose W_q misses
    its image.

    Parameters:
        structure (PointedStructure): the structure, refuting the automaton
        classes (sequence of int): the image of every path vertex
        a (Nfa): the automaton

    Returns:
        tuple of frozenset: one state set per path vertex
    """

    m = structure.base
    interp = m.interpretation()

    reach = np.zeros((a.n_states, m.n), dtype=bool)
    reach[a.final, structure.target] = True

    moves = [(p, letter_relation(interp, x), q) for p, x, q in a.all_transitions()]

    changed = True
    while changed:
        changed = False
        for p, rel, q in moves:
            fresh = (rel.astype(np.int32) @ reach[q].astype(np.int32)) > 0
            fresh &= ~reach[p]
            if fresh.any():
                reach[p] |= fresh
                changed = True

    return tuple(frozenset(int(q) for q in np.flatnonzero(~reach[:, v])) for v in classes)
