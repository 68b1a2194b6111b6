import functools
import logging
from typing import Iterator, Optional, Sequence, Tuple

from ..terms import (
    Term, Var, NegVar, ConvVar, ConvNegVar, Id, NegId, Bot, Top,
    Comp, Union, Inter, Star, Letter, atoms, letter_of, size,
)
from ..errors import FragmentError
from .graph import Graph, edge_graph, point_graph, top_graph, series, parallel


logger = logging.getLogger(__name__)



def _sigma_for(t: Term, sigma: Optional[Sequence[str]]) -> Tuple[str, ...]:
    if sigma is not None:
        return tuple(sigma)
    return atoms(t) or ('a',)


def glang(t: Term, budget: int, sigma: Optional[Sequence[str]] = None) -> Iterator[Graph]:
    """The graphs of the graph language of a term with at most budget vertices

    Every member up to isomorphism is produced once. For a star-free term the
    budget 1 + size(t) yields the whole (finite) language; for a starred term
    the stream grows with the budget.

    Parameters:
        t (Term): a restricted term
        budget (int): the vertex bound
        sigma (sequence of str, optional): the graph alphabet, defaults to the
            atoms of t

    Returns:
        iterator of Graph
    """

    return iter(_glang(t, budget, _sigma_for(t, sigma)))


class _Collector:
    """Keeps the first graph of every isomorphism class, in insertion order"""

    def __init__(self):
        self.__seen   = set()
        self.__graphs = []


    def add(self, g: Graph) -> bool:
        key = g.canonical_key()
        if key in self.__seen:
            return False
        self.__seen.add(key)
        self.__graphs.append(g)
        return True


    def graphs(self) -> Tuple[Graph, ...]:
        return tuple(self.__graphs)



@functools.lru_cache(maxsize=4096)
def _glang(t: Term, budget: int, sigma: Tuple[str, ...]) -> Tuple[Graph, ...]:

    if budget < 1:
        return ()

    if isinstance(t, (Var, NegVar, ConvVar, ConvNegVar, NegId)):
        return (edge_graph(sigma, letter_of(t)),) if budget >= 2 else ()
    if isinstance(t, Id):
        return (point_graph(sigma),)
    if isinstance(t, Bot):
        return ()
    if isinstance(t, Top):
        return (top_graph(sigma),) if budget >= 2 else ()

    out = _Collector()

    if isinstance(t, Union):
        for g in _glang(t.left, budget, sigma) + _glang(t.right, budget, sigma):
            out.add(g)

    elif isinstance(t, Comp):
        right = _glang(t.right, budget, sigma)
        for g in _glang(t.left, budget, sigma):
            for h in right:
                if g.n + h.n - 1 <= budget:
                    out.add(series(g, h))

    elif isinstance(t, Inter):
        # gluing may merge the endpoints of one side, so each side may be
        # one vertex larger than the result
        right = _glang(t.right, budget + 1, sigma)
        for g in _glang(t.left, budget + 1, sigma):
            for h in right:
                glued = parallel(g, h)
                if glued.n <= budget:
                    out.add(glued)

    elif isinstance(t, Star):
        body = _glang(t.body, budget, sigma)
        start = point_graph(sigma)
        out.add(start)
        frontier = [start]
        while frontier:
            grown = []
            for g in frontier:
                for h in body:
                    if g.n + h.n - 1 <= budget:
                        s = series(g, h)
                        if out.add(s):
                            grown.append(s)
            frontier = grown

    else:
        raise FragmentError('graph languages need restricted terms, got {!r}'.format(t))

    graphs = out.graphs()
    logger.debug('graph language of size %d at budget %d: %d graphs', size(t), budget, len(graphs))
    return graphs



def graph_of_word(w: Sequence[Letter], sigma: Optional[Sequence[str]] = None) -> Graph:
    """The path graph of a word

    Vertex i-1 and i are joined by the i-th letter: forwards for plain and
    complemented atoms and for I-, backwards for conversed letters.

    Parameters:
        w (sequence of Letter): the word, without the identity letter
        sigma (sequence of str, optional): defaults to the atoms of the word
    """

    if sigma is None:
        sigma = tuple(sorted({x.atom for x in w if not x.is_identity()})) or ('a',)

    edges = {}
    for i, x in enumerate(w, start=1):
        assert not x.is_epsilon(), 'words never contain the identity letter'
        pair = (i, i - 1) if x.converse else (i - 1, i)
        edges.setdefault(x.base(), []).append(pair)

    return Graph(sigma, len(w) + 1, edges, 0, len(w))
