import json
from dataclasses import dataclass
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

import numpy as np

from ..config import max_vertices
from ..errors import StructureError
from ..terms import Letter, I_LETTER, NEG_I_LETTER, check_alphabet


# relations are square boolean numpy arrays, possibly with leading batch axes
Relation = np.ndarray

PairList = Iterable[Sequence[int]]



def relation_from_pairs(pairs: PairList, n: int) -> Relation:
    """Builds an n x n boolean matrix from a list of pairs

    Raises:
        StructureError: if a pair is out of bounds
    """

    rel = np.zeros((n, n), dtype=bool)
    for pair in pairs:
        try:
            if len(pair) != 2:
                raise StructureError('a pair needs two entries, got {!r}'.format(pair))
            i, j = int(pair[0]), int(pair[1])
        except (TypeError, ValueError):
            raise StructureError('a pair needs two vertex indices, got {!r}'.format(pair)) from None
        if not (0 <= i < n and 0 <= j < n):
            raise StructureError('pair ({}, {}) is out of bounds for {} vertices'.format(i, j, n))
        rel[i, j] = True

    return rel


def pairs_of(rel: Relation) -> List[Tuple[int, int]]:
    """The pairs of a relation in row-major order"""

    return [(int(i), int(j)) for i, j in np.argwhere(rel)]


def _frozen(array: np.ndarray) -> np.ndarray:
    array = np.array(array, dtype=bool)
    array.flags.writeable = False
    return array



class Structure:
    """A finite relational model over an alphabet

       Only the base relation of every atom is stored. The identity, its
       complement and the complement of every atom are derived on request.

       ...

       Methods:
            relation(a)
                the base relation of atom a
            interpretation()
                maps every graph label (a, a-, I, I-) to its relation
            to_json(source, target)
                the JSON document, optionally with designated vertices
            from_json(doc, sigma)
                builds a structure (and endpoints) from a JSON document
    """


    def __init__(self, sigma: Sequence[str], n: int, relations: Mapping[str, Union[Relation, PairList]]):
        """
        Parameters:
            sigma (sequence of str): the alphabet
            n (int): the number of vertices
            relations (dict): per atom either an n x n boolean array or a list
                of pairs; missing atoms are empty

        Raises:
            StructureError: on size or shape problems and unknown atoms
        """

        self.__sigma = check_alphabet(sigma, strict=False)

        if n < 1:
            raise StructureError('a structure needs at least one vertex')
        if n > max_vertices():
            raise StructureError('{} vertices exceed the cap of {}'.format(n, max_vertices()))
        self.__n = n

        unknown = set(relations) - set(self.__sigma)
        if unknown:
            raise StructureError('relations for atoms outside the alphabet: {}'.format(sorted(unknown)))

        self.__relations = {}
        for a in self.__sigma:
            rel = relations.get(a, ())
            if isinstance(rel, np.ndarray):
                if rel.shape != (n, n):
                    raise StructureError('relation {} has shape {}, expected {}'.format(a, rel.shape, (n, n)))
                self.__relations[a] = _frozen(rel)
            else:
                self.__relations[a] = _frozen(relation_from_pairs(rel, n))


    @property
    def sigma(self) -> Tuple[str, ...]:
        return self.__sigma


    @property
    def n(self) -> int:
        return self.__n


    def relation(self, a: str) -> Relation:
        return self.__relations[a]


    def interpretation(self) -> Dict[Letter, Relation]:
        """Maps every graph label to its relation

        Returns:
            dict: Letter -> n x n boolean array for a and a- per atom, I and I-
        """

        eye = np.eye(self.__n, dtype=bool)
        interp = {I_LETTER: eye, NEG_I_LETTER: ~eye}
        for a, rel in self.__relations.items():
            interp[Letter(a)] = rel
            interp[Letter(a, True)] = ~rel

        return interp


    def to_json(self, source: Optional[int] = None, target: Optional[int] = None) -> dict:

        doc = {
            'n': self.__n,
            'relations': {a: [list(p) for p in pairs_of(rel)] for a, rel in self.__relations.items()},
        }
        if source is not None:
            doc['source'] = source
        if target is not None:
            doc['target'] = target

        return doc


    @classmethod
    def from_json(cls, doc: dict, sigma: Optional[Sequence[str]] = None) -> Tuple['Structure', Optional[int], Optional[int]]:
        """Reads the JSON structure format

        Parameters:
            doc (dict): the decoded document
            sigma (sequence of str, optional): the alphabet; defaults to the
                atoms listed under "relations", sorted

        Returns:
            tuple: the structure, the source (or None) and the target (or None)

        Raises:
            StructureError: when the document is malformed
        """

        try:
            n = int(doc['n'])
            relations = dict(doc.get('relations', {}))
        except (KeyError, TypeError, ValueError) as error:
            raise StructureError('malformed structure document: {}'.format(error))

        if sigma is None:
            sigma = tuple(sorted(relations))
        structure = cls(sigma, n, relations)

        source, target = doc.get('source'), doc.get('target')
        if (source is None) != (target is None):
            raise StructureError('source and target must be given together')

        return structure, source, target


    def __eq__(self, other) -> bool:
        if not isinstance(other, Structure):
            return NotImplemented
        return (self.__sigma == other.sigma and self.__n == other.n
                and all(np.array_equal(self.__relations[a], other.relation(a)) for a in self.__sigma))


    def __hash__(self):
        return hash((self.__sigma, self.__n, tuple(self.__relations[a].tobytes() for a in self.__sigma)))


    def __repr__(self):
        rels = ', '.join('{}={}'.format(a, pairs_of(r)) for a, r in self.__relations.items())
        return 'Structure(n={}, {})'.format(self.__n, rels)



@dataclass(frozen=True)
class PointedStructure:
    """A structure with a designated source and target vertex"""

    base: Structure
    source: int
    target: int


    def __post_init__(self):
        if not (0 <= self.source < self.base.n and 0 <= self.target < self.base.n):
            raise StructureError('source {} or target {} out of bounds for {} vertices'.format(
                self.source, self.target, self.base.n))


    def to_json(self) -> dict:
        return self.base.to_json(self.source, self.target)


    @classmethod
    def from_json(cls, doc: dict, sigma: Optional[Sequence[str]] = None) -> 'PointedStructure':

        structure, source, target = Structure.from_json(doc, sigma)
        if source is None:
            raise StructureError('a pointed structure needs a source and a target')

        return cls(structure, int(source), int(target))



def load_structure(path: str, sigma: Optional[Sequence[str]] = None) -> Tuple[Structure, Optional[int], Optional[int]]:
    """Reads a structure JSON file"""

    with open(path, 'r') as handle:
        try:
            doc = json.load(handle)
        except json.JSONDecodeError as error:
            raise StructureError('{} is not valid JSON: {}'.format(path, error))

    return Structure.from_json(doc, sigma)
