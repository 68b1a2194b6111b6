import itertools
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

import numpy as np

from ..errors import StructureError
from ..terms import Letter, label_letters, check_alphabet
from ..structures import Relation, PointedStructure, relation_from_pairs, pairs_of


# graphs up to this size are deduplicated by exhaustive relabelling
CANONICAL_LIMIT = 8

PairList = Iterable[Sequence[int]]



class Graph:
    """A finite 2-pointed graph whose edges carry the labels a, a-, I and I-

       Graphs are immutable. Every label of the alphabet is stored as an n x n
       boolean matrix, missing labels are empty.

       ...

       Methods:
            label(x)
                the edge relation of label x
            labels()
                all label relations as a dict
            edges()
                the edges as (source, label, target) triples
            with_labels(updates)
                a copy with some label relations replaced
            relabel(order)
                the graph with vertex order[i] renamed to i
            canonical_key()
                a key equal for isomorphic graphs (up to CANONICAL_LIMIT vertices)
            to_json() / from_json(doc)
                the JSON graph format
            to_dot(name)
                a DOT digraph for debugging
    """


    def __init__(self, sigma: Sequence[str], n: int, labels: Mapping[Letter, Union[Relation, PairList]],
                 source: int, target: int):

        self.__sigma  = check_alphabet(sigma, strict=False)
        self.__n      = n
        self.__source = source
        self.__target = target

        if n < 1:
            raise StructureError('a graph needs at least one vertex')
        if not (0 <= source < n and 0 <= target < n):
            raise StructureError('endpoints ({}, {}) out of bounds for {} vertices'.format(source, target, n))

        known = label_letters(self.__sigma)
        unknown = set(labels) - set(known)
        if unknown:
            raise StructureError('labels outside the alphabet: {}'.format(sorted(x.encode() for x in unknown)))

        self.__labels = {}
        for x in known:
            rel = labels.get(x, ())
            if isinstance(rel, np.ndarray):
                assert rel.shape == (n, n)
                rel = np.array(rel, dtype=bool)
            else:
                rel = relation_from_pairs(rel, n)
            rel.flags.writeable = False
            self.__labels[x] = rel


    @property
    def sigma(self) -> Tuple[str, ...]:
        return self.__sigma

    @property
    def n(self) -> int:
        return self.__n

    @property
    def source(self) -> int:
        return self.__source

    @property
    def target(self) -> int:
        return self.__target


    def label(self, x: Letter) -> Relation:
        return self.__labels[x]


    def labels(self) -> Dict[Letter, Relation]:
        return dict(self.__labels)


    def edges(self) -> List[Tuple[int, Letter, int]]:
        return [(i, x, j) for x, rel in self.__labels.items() for i, j in pairs_of(rel)]


    def with_labels(self, updates: Mapping[Letter, Relation]) -> 'Graph':
        labels = self.labels()
        labels.update(updates)
        return Graph(self.__sigma, self.__n, labels, self.__source, self.__target)


    def relabel(self, order: Sequence[int]) -> 'Graph':
        """Renames vertex order[i] to i

        Parameters:
            order (sequence of int): a permutation of the vertices
        """

        order = list(order)
        position = {v: i for i, v in enumerate(order)}
        labels = {x: rel[np.ix_(order, order)] for x, rel in self.__labels.items()}

        return Graph(self.__sigma, self.__n, labels, position[self.__source], position[self.__target])


    def raw_key(self) -> tuple:
        stack = np.stack([self.__labels[x] for x in label_letters(self.__sigma)])
        return (self.__n, self.__source, self.__target, np.packbits(stack).tobytes())


    def canonical_key(self) -> tuple:
        """A hashable key shared by isomorphic graphs

        The endpoints are moved to the front and every order of the remaining
        vertices is tried; the smallest packed adjacency encoding wins. Larger
        graphs than CANONICAL_LIMIT fall back to their raw encoding.
        """

        if self.__n > CANONICAL_LIMIT:
            return self.raw_key()

        ends = [self.__source] if self.__source == self.__target else [self.__source, self.__target]
        others = [v for v in range(self.__n) if v not in ends]
        stack = np.stack([self.__labels[x] for x in label_letters(self.__sigma)])

        best = None
        for perm in itertools.permutations(others):
            order = ends + list(perm)
            key = np.packbits(stack[:, order][:, :, order]).tobytes()
            if best is None or key < best:
                best = key

        return (self.__n, len(ends), best)


    def to_json(self) -> dict:
        return {
            'n': self.__n,
            'labels': {x.encode(): [list(p) for p in pairs_of(rel)] for x, rel in self.__labels.items()},
            'source': self.__source,
            'target': self.__target,
        }


    @classmethod
    def from_json(cls, doc: dict, sigma: Optional[Sequence[str]] = None) -> 'Graph':

        try:
            labels = {Letter.decode(k): v for k, v in doc.get('labels', {}).items()}
            n, source, target = int(doc['n']), int(doc['source']), int(doc['target'])
        except (KeyError, TypeError, ValueError) as error:
            raise StructureError('malformed graph document: {}'.format(error))

        if sigma is None:
            sigma = tuple(sorted({x.atom for x in labels if not x.is_identity()})) or ('a',)

        return cls(sigma, n, labels, source, target)


    def to_dot(self, name: str = 'G') -> str:

        lines = ['digraph {} {{'.format(name), '  rankdir=LR;']
        lines.append('  in [shape=point]; out [shape=point];')
        for v in range(self.__n):
            lines.append('  {} [label="{}"];'.format(v, v))
        lines.append('  in -> {};'.format(self.__source))
        lines.append('  {} -> out;'.format(self.__target))
        for i, x, j in self.edges():
            lines.append('  {} -> {} [label="{}"];'.format(i, j, x.encode()))
        lines.append('}')

        return '\n'.join(lines)


    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.__sigma == other.sigma and self.raw_key() == other.raw_key()


    def __hash__(self):
        return hash((self.__sigma, self.raw_key()))


    def __repr__(self):
        edges = ', '.join('{}-{}->{}'.format(i, x.encode(), j) for i, x, j in self.edges())
        return 'Graph(n={}, s={}, t={}, [{}])'.format(self.__n, self.__source, self.__target, edges)



def isomorphic(g: Graph, h: Graph) -> bool:
    """Isomorphism of 2-pointed graphs, for graphs up to CANONICAL_LIMIT vertices"""

    assert max(g.n, h.n) <= CANONICAL_LIMIT
    return g.sigma == h.sigma and g.canonical_key() == h.canonical_key()



def point_graph(sigma: Sequence[str]) -> Graph:
    """The single vertex graph, source and target coincide"""
    return Graph(sigma, 1, {}, 0, 0)


def top_graph(sigma: Sequence[str]) -> Graph:
    """Two vertices, no edges"""
    return Graph(sigma, 2, {}, 0, 1)


def edge_graph(sigma: Sequence[str], x: Letter) -> Graph:
    """The graph of a single letter: an edge from source to target, or from
       target to source for a conversed letter
    """

    if x.converse:
        return Graph(sigma, 2, {x.base(): [(1, 0)]}, 0, 1)
    return Graph(sigma, 2, {x: [(0, 1)]}, 0, 1)



def _glue(g: Graph, h: Graph, pairs: Sequence[Tuple[int, int]], source: int, target: int) -> Graph:
    """Disjoint union of g and h (h shifted by g.n) with the given vertex pairs
       identified

    The merged vertices are renumbered in order of their first member.
    source and target refer to vertices of the disjoint union.
    """

    total = g.n + h.n
    parent = list(range(total))

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for x, y in pairs:
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[max(rx, ry)] = min(rx, ry)

    roots = sorted({find(v) for v in range(total)})
    index = {r: i for i, r in enumerate(roots)}
    classes = np.array([index[find(v)] for v in range(total)])

    k = len(roots)
    member = np.zeros((total, k), dtype=np.int32)
    member[np.arange(total), classes] = 1

    labels = {}
    for x in label_letters(g.sigma):
        union = np.zeros((total, total), dtype=np.int32)
        union[:g.n, :g.n] = g.label(x)
        union[g.n:, g.n:] = h.label(x)
        labels[x] = (member.T @ union @ member) > 0

    return Graph(g.sigma, k, labels, int(classes[source]), int(classes[target]))


def series(g: Graph, h: Graph) -> Graph:
    """Series composition: the target of g is glued to the source of h"""

    assert g.sigma == h.sigma
    return _glue(g, h, [(g.target, g.n + h.source)], g.source, g.n + h.target)


def parallel(g: Graph, h: Graph) -> Graph:
    """Parallel composition: sources are glued, and so are targets"""

    assert g.sigma == h.sigma
    return _glue(g, h, [(g.source, g.n + h.source), (g.target, g.n + h.target)], g.source, g.target)


def converse(g: Graph) -> Graph:
    """The same graph with source and target swapped"""
    return Graph(g.sigma, g.n, g.labels(), g.target, g.source)



def graph_of_structure(p: PointedStructure) -> Graph:
    """The fully labelled graph of a pointed structure"""

    return Graph(p.base.sigma, p.base.n, p.base.interpretation(), p.source, p.target)
