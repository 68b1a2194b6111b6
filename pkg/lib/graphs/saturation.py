import logging
from collections import Counter
from dataclasses import dataclass
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from ..errors import NotSaturatedError
from ..terms import Term, Letter, I_LETTER, NEG_I_LETTER, label_letters
from ..structures import (
    Relation, Structure, PointedStructure, evaluate_with, reflexive_transitive_closure,
)
from .graph import Graph, graph_of_structure
from .homomorphism import homomorphism_exists
from .language import glang


logger = logging.getLogger(__name__)


# judge(lower, upper, source, target): False prunes the branch, True accepts
# every completion, None asks for more decisions
Judge = Callable[[Dict[Letter, Relation], Dict[Letter, Relation], int, int], Optional[bool]]
ClassMap = Tuple[int, ...]



def equivalence_closure(r: Relation, n: Optional[int] = None) -> Relation:
    """The least equivalence relation containing r"""

    r = np.asarray(r, dtype=bool)
    if n is not None:
        assert r.shape == (n, n)
    return reflexive_transitive_closure(r | r.T)


def _classes_of(equivalence: Relation) -> ClassMap:
    """Numbers the classes of an equivalence by their smallest member"""

    first = np.argmax(equivalence, axis=1)
    order = {v: i for i, v in enumerate(sorted(set(int(f) for f in first)))}
    return tuple(order[int(f)] for f in first)


def _membership(classes: ClassMap) -> np.ndarray:
    k = max(classes) + 1
    member = np.zeros((len(classes), k), dtype=np.int32)
    member[np.arange(len(classes)), list(classes)] = 1
    return member


def _collapse(rel: Relation, member: np.ndarray) -> Relation:
    return (member.T @ rel.astype(np.int32) @ member) > 0


def _expand(rel: Relation, member: np.ndarray) -> Relation:
    return (member @ rel.astype(np.int32) @ member.T) > 0



def quotient_map(g: Graph) -> Tuple[Graph, ClassMap]:
    """The quotient by the equivalence closure of I, with the class of every
       vertex
    """

    classes = _classes_of(equivalence_closure(g.label(I_LETTER)))
    member = _membership(classes)
    labels = {x: _collapse(rel, member) for x, rel in g.labels().items()}

    q = Graph(g.sigma, member.shape[1], labels, classes[g.source], classes[g.target])
    return q, classes


def quotient(g: Graph) -> Graph:
    return quotient_map(g)[0]



def is_consistent(g: Graph) -> bool:
    """No closed x-edge meets a closed x- edge, for every atom and for I"""

    closure = equivalence_closure(g.label(I_LETTER)).astype(np.int32)

    def closed(rel):
        return (closure @ rel.astype(np.int32) @ closure) > 0

    for a in tuple(g.sigma) + (I_LETTER.atom,):
        x = Letter(a)
        if np.any(closed(g.label(x)) & closed(g.label(x.bar()))):
            return False

    return True


def is_edge_saturated(g: Graph) -> bool:
    """Consistent, every x | x- total, and I an equivalence"""

    if not is_consistent(g):
        return False

    for a in tuple(g.sigma) + (I_LETTER.atom,):
        x = Letter(a)
        if not np.all(g.label(x) | g.label(x.bar())):
            return False

    identity = g.label(I_LETTER)
    return bool(np.array_equal(identity, equivalence_closure(identity)))



def structure_of(g: Graph) -> PointedStructure:
    """Reads a pointed structure off an edge-saturated graph

    Raises:
        NotSaturatedError: if g is not edge-saturated
    """

    if not is_edge_saturated(g):
        raise NotSaturatedError('the graph is not edge-saturated')

    q = quotient(g)
    base = Structure(g.sigma, q.n, {a: q.label(Letter(a)) for a in g.sigma})

    return PointedStructure(base, q.source, q.target)



@dataclass(frozen=True)
class _Frame:
    depth: int
    forced: np.ndarray     # (|sigma|, k, k): pairs that carry a
    excluded: np.ndarray   # (|sigma|, k, k): pairs that carry a-



class _PartitionSearch:
    """Enumerates the partitions of the vertices that can serve as I in a
       saturation

       The blocks of the closure of I^g are merged into coarser classes along
       restricted growth strings, so the coarsest partition comes first. Two
       blocks joined by an I- edge are never merged.
    """

    def __init__(self, g: Graph):
        self.__blocks = _classes_of(equivalence_closure(g.label(I_LETTER)))
        member = _membership(self.__blocks)
        self.__apart = _collapse(g.label(NEG_I_LETTER), member)
        self.__apart = self.__apart | self.__apart.T
        self.__m = member.shape[1]


    def __iter__(self) -> Iterator[ClassMap]:
        if np.any(np.diag(self.__apart)):
            return
        for growth in self.__grow([]):
            yield tuple(growth[b] for b in self.__blocks)


    def __grow(self, prefix: List[int]) -> Iterator[List[int]]:

        c = len(prefix)
        if c == self.__m:
            yield list(prefix)
            return

        for block in range(max(prefix, default=-1) + 2):
            if any(prefix[d] == block and self.__apart[c, d] for d in range(c)):
                continue
            prefix.append(block)
            yield from self.__grow(prefix)
            prefix.pop()



def _interpretations(sigma: Sequence[str], forced: np.ndarray, excluded: np.ndarray):

    k = forced.shape[-1]
    eye = np.eye(k, dtype=bool)
    lower = {I_LETTER: eye, NEG_I_LETTER: ~eye}
    upper = {I_LETTER: eye, NEG_I_LETTER: ~eye}

    for i, a in enumerate(sigma):
        lower[Letter(a)]       = forced[i]
        lower[Letter(a, True)] = excluded[i]
        upper[Letter(a)]       = ~excluded[i]
        upper[Letter(a, True)] = ~forced[i]

    return lower, upper


def _completion(sigma: Sequence[str], forced: np.ndarray, k: int, s: int, t: int) -> PointedStructure:
    base = Structure(sigma, k, {a: forced[i].copy() for i, a in enumerate(sigma)})
    return PointedStructure(base, s, t)



def search_quotient_saturations(g: Graph, judge: Optional[Judge] = None,
                                exhaustive: bool = False) -> Iterator[Tuple[PointedStructure, ClassMap]]:
    """Enumerates the quotients of the saturations of g as pointed structures

    The I classes are fixed first (see _PartitionSearch). Every atom then
    decides, for each pair of classes, between a and a-; pairs already labelled
    in g are forced. The decisions run depth first with a- tried before a, and
    the judge inspects every partial labelling through its least (lower) and
    greatest (upper) completion.

    Parameters:
        g (Graph): the graph to saturate
        judge (callable, optional): prunes (False) or accepts (True) partial
            labellings; without a judge every saturation is produced
        exhaustive (bool): keep branching below accepted labellings, so every
            accepted saturation is produced instead of one per subtree

    Returns:
        iterator of (PointedStructure, class map): the quotient structure and
            the class of every vertex of g
    """

    sigma = g.sigma
    visited = 0

    for classes in _PartitionSearch(g):
        member = _membership(classes)
        k = member.shape[1]
        s, t = classes[g.source], classes[g.target]

        forced   = np.stack([_collapse(g.label(Letter(a)), member) for a in sigma])
        excluded = np.stack([_collapse(g.label(Letter(a, True)), member) for a in sigma])

        if np.any(forced & excluded):
            continue

        undecided = ~(forced | excluded)
        free = [(a, i, j) for a in range(len(sigma)) for i in range(k) for j in range(k) if undecided[a, i, j]]

        stack = [_Frame(0, forced, excluded)]
        while stack:
            frame = stack.pop()
            visited += 1

            verdict = None
            if judge is not None:
                lower, upper = _interpretations(sigma, frame.forced, frame.excluded)
                verdict = judge(lower, upper, s, t)

            if verdict is False:
                continue

            if frame.depth == len(free) or (verdict is True and not exhaustive):
                yield _completion(sigma, frame.forced, k, s, t), classes
                continue

            a, i, j = free[frame.depth]

            chosen = frame.forced.copy()
            chosen[a, i, j] = True
            stack.append(_Frame(frame.depth + 1, chosen, frame.excluded))

            rejected = frame.excluded.copy()
            rejected[a, i, j] = True
            stack.append(_Frame(frame.depth + 1, frame.forced, rejected))

    logger.debug('saturation search visited %d partial labellings', visited)


def find_quotient_saturation(g: Graph, judge: Judge) -> Optional[Tuple[PointedStructure, ClassMap]]:
    """The first saturation quotient the judge accepts, or None"""

    for found in search_quotient_saturations(g, judge):
        return found
    return None



def lift(g: Graph, p: PointedStructure, classes: ClassMap) -> Graph:
    """The saturation of g whose quotient is p"""

    member = _membership(classes)
    same = _expand(np.eye(p.base.n, dtype=bool), member)

    labels = {I_LETTER: same, NEG_I_LETTER: ~same}
    for a in g.sigma:
        rel = _expand(p.base.relation(a), member)
        labels[Letter(a)] = rel
        labels[Letter(a, True)] = ~rel

    return Graph(g.sigma, g.n, labels, g.source, g.target)


def saturations(g: Graph) -> Iterator[Graph]:
    """Every edge-saturated graph on the vertices of g that contains g

    Inconsistent graphs have none.
    """

    for p, classes in search_quotient_saturations(g):
        yield lift(g, p, classes)


def qs(g: Graph) -> Iterator[Graph]:
    """The quotients of the saturations of g, one per isomorphism class"""

    seen = set()
    for p, _ in search_quotient_saturations(g):
        h = graph_of_structure(p)
        key = h.canonical_key()
        if key not in seen:
            seen.add(key)
            yield h


def census(t: Term, budget: int, sigma: Optional[Sequence[str]] = None) -> Dict[int, int]:
    """Counts the saturation quotients of the graphs of t (up to the vertex
       budget) per number of vertices, one per isomorphism class

    Returns:
        dict: vertex count -> number of quotients, sorted by vertex count
    """

    seen = set()
    counts = Counter()

    graphs = list(glang(t, budget, sigma))
    for g in graphs:
        for h in qs(g):
            key = h.canonical_key()
            if key not in seen:
                seen.add(key)
                counts[h.n] += 1

    logger.info('census over %d graphs: %d quotients', len(graphs), len(seen))
    return dict(sorted(counts.items()))



def term_judge(rhs: Term) -> Judge:
    """Accepts labellings on which rhs fails at (source, target)

    Restricted terms are monotone in every label, so rhs holding on the lower
    completion rules out the branch and rhs failing on the upper completion
    settles it.
    """

    def judge(lower, upper, s, t):
        if evaluate_with(rhs, lower)[s, t]:
            return False
        if not evaluate_with(rhs, upper)[s, t]:
            return True
        return None

    return judge


def homomorphism_judge(sigma: Sequence[str], rhs_graphs: Sequence[Graph]) -> Judge:
    """Accepts labellings that no graph of rhs_graphs maps into"""

    letters = label_letters(sigma)

    def judge(lower, upper, s, t):
        k = lower[I_LETTER].shape[0]
        low = Graph(sigma, k, {x: lower[x] for x in letters}, s, t)
        if any(homomorphism_exists(h, low) is not None for h in rhs_graphs):
            return False

        high = Graph(sigma, k, {x: upper[x] for x in letters}, s, t)
        if all(homomorphism_exists(h, high) is None for h in rhs_graphs):
            return True
        return None

    return judge
