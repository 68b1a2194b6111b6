"""The outcome of a validity query

Classes:
    Verdict
        valid, refuted (with a counterexample) or unknown (with the bound that
        was reached)
"""

from dataclasses import dataclass, field, replace
from typing import Any, Dict, Optional, Sequence

from .structures import PointedStructure
from .terms import Letter


VALID   = 'valid'
REFUTED = 'refuted'
UNKNOWN = 'unknown'

KINDS = (VALID, REFUTED, UNKNOWN)



@dataclass(frozen=True)
class Verdict:
    """A verdict on lhs <= rhs or lhs = rhs

       ...

       Attributes:
            kind (str): 'valid', 'refuted' or 'unknown'
            direction (str): for refuted verdicts, the violated inclusion
                ('<=' for lhs <= rhs, '>=' for rhs <= lhs)
            counterexample (PointedStructure): for refuted verdicts
            word (tuple of Letter): the word of a saturable path witness
            witness (dict): the saturable path in its JSON form
            bound (int): the budget or length cap an unknown verdict stopped at
            procedure (str): the engine that produced the verdict
    """

    kind: str
    direction: Optional[str] = None
    counterexample: Optional[PointedStructure] = None
    word: Optional[Sequence[Letter]] = None
    witness: Optional[Dict[str, Any]] = field(default=None, compare=False)
    bound: Optional[int] = None
    procedure: Optional[str] = None


    def __post_init__(self):
        assert self.kind in KINDS
        if self.kind == REFUTED:
            assert self.counterexample is not None and self.direction in ('<=', '>=')


    @classmethod
    def valid(cls, procedure: Optional[str] = None) -> 'Verdict':
        return cls(VALID, procedure=procedure)


    @classmethod
    def unknown(cls, bound: int, procedure: Optional[str] = None) -> 'Verdict':
        return cls(UNKNOWN, bound=bound, procedure=procedure)


    @classmethod
    def refuted(cls, counterexample: PointedStructure, direction: str = '<=', **extra) -> 'Verdict':
        return cls(REFUTED, direction=direction, counterexample=counterexample, **extra)


    @property
    def is_valid(self) -> bool:
        return self.kind == VALID

    @property
    def is_refuted(self) -> bool:
        return self.kind == REFUTED

    @property
    def is_unknown(self) -> bool:
        return self.kind == UNKNOWN


    def flipped(self) -> 'Verdict':
        """The same verdict read for the swapped inclusion"""
        if self.direction is None:
            return self
        return replace(self, direction='>=' if self.direction == '<=' else '<=')


    def with_procedure(self, procedure: str) -> 'Verdict':
        return replace(self, procedure=procedure)


    def to_json(self) -> dict:

        doc = {'verdict': self.kind}
        if self.direction is not None:
            doc['direction'] = self.direction
        if self.counterexample is not None:
            doc['counterexample'] = self.counterexample.to_json()
        if self.word is not None:
            doc['word'] = [x.encode() for x in self.word]
        if self.witness is not None:
            doc['witness'] = self.witness
        if self.bound is not None:
            doc['bound'] = self.bound
        if self.procedure is not None:
            doc['procedure'] = self.procedure

        return doc
