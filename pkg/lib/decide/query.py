from dataclasses import dataclass, field
from typing import Optional, Sequence, Tuple

from ..errors import EcorError
from ..terms import (
    Term, Alphabet, atoms, check_alphabet, parse, render, converse_normal_form,
    fragment_of, FragmentDescriptor,
)
from .options import Options


RELATIONS = ('<=', '=', '>=')



@dataclass(frozen=True)
class Query:
    """lhs <= rhs or lhs = rhs over an alphabet

    Both sides are kept in converse normal form. A '>=' query is stored with
    its sides swapped. Without an explicit alphabet the atoms of both sides
    are used, sorted, or the single atom 'a' when there are none.
    """

    lhs: Term
    rhs: Term
    relation: str = '<='
    sigma: Optional[Alphabet] = None
    options: Options = field(default_factory=Options)


    def __post_init__(self):

        if self.relation not in RELATIONS:
            raise EcorError('unknown relation {!r}'.format(self.relation))

        lhs, rhs = converse_normal_form(self.lhs), converse_normal_form(self.rhs)
        if self.relation == '>=':
            lhs, rhs = rhs, lhs
            object.__setattr__(self, 'relation', '<=')
        object.__setattr__(self, 'lhs', lhs)
        object.__setattr__(self, 'rhs', rhs)

        used = set(atoms(lhs)) | set(atoms(rhs))
        if self.sigma is None:
            sigma = tuple(sorted(used)) or ('a',)
        else:
            sigma = check_alphabet(self.sigma)
            missing = used - set(sigma)
            if missing:
                raise EcorError('atoms outside the alphabet: {}'.format(', '.join(sorted(missing))))
        object.__setattr__(self, 'sigma', sigma)


    @classmethod
    def parse(cls, lhs: str, relation: str, rhs: str, sigma: Optional[Sequence[str]] = None,
              options: Optional[Options] = None) -> 'Query':

        alphabet = 'infer' if sigma is None else tuple(sigma)
        return cls(parse(lhs, alphabet), parse(rhs, alphabet), relation,
                   None if sigma is None else tuple(sigma), options or Options())


    def fragment(self) -> FragmentDescriptor:
        return fragment_of(self.lhs).merge(fragment_of(self.rhs))


    def inclusions(self) -> Tuple[Tuple[Term, Term, str], ...]:
        """The inclusions to check, in order, with the direction each one
           stands for
        """

        if self.relation == '<=':
            return ((self.lhs, self.rhs, '<='),)
        return ((self.lhs, self.rhs, '<='), (self.rhs, self.lhs, '>='))


    def __str__(self):
        return '{} {} {}'.format(render(self.lhs), self.relation, render(self.rhs))
