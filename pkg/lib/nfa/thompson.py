import logging
from typing import List, Optional, Sequence, Tuple

from ..errors import FragmentError
from ..terms import (
    Term, Var, NegVar, ConvVar, ConvNegVar, Id, NegId, Bot, Top,
    Comp, Union, Inter, Star, Letter, I_LETTER, atoms, letter_of,
    is_restricted, converse_normal_form,
)
from .automaton import Nfa, Transition


logger = logging.getLogger(__name__)



class _Builder:
    """Allocates states densely while the schemata are laid out

       Every schema first builds its sub-automata and then takes its own fresh
       states, so children always carry the smaller numbers.
    """

    def __init__(self, top_atom: str):
        self.__count = 0
        self.__top_atom = top_atom
        self.transitions: List[Transition] = []


    @property
    def count(self) -> int:
        return self.__count


    def fresh(self) -> int:
        self.__count += 1
        return self.__count - 1


    def edge(self, p: int, x: Letter, q: int):
        self.transitions.append((p, x, q))


    def build(self, t: Term) -> Tuple[int, int]:

        if isinstance(t, (Var, NegVar, ConvVar, ConvNegVar, Id, NegId)):
            s, f = self.fresh(), self.fresh()
            self.edge(s, letter_of(t), f)
            return s, f

        if isinstance(t, Bot):
            return self.fresh(), self.fresh()

        if isinstance(t, Top):
            return self.build(Union(Var(self.__top_atom), NegVar(self.__top_atom)))

        if isinstance(t, Union):
            s2, t2 = self.build(t.left)
            s3, t3 = self.build(t.right)
            s1, t1 = self.fresh(), self.fresh()
            self.edge(s1, I_LETTER, s2)
            self.edge(s1, I_LETTER, s3)
            self.edge(t2, I_LETTER, t1)
            self.edge(t3, I_LETTER, t1)
            return s1, t1

        if isinstance(t, Comp):
            s1, c1 = self.build(t.left)
            c2, t1 = self.build(t.right)
            self.edge(c1, I_LETTER, c2)
            return s1, t1

        if isinstance(t, Star):
            c1, c2 = self.build(t.body)
            s1, t1 = self.fresh(), self.fresh()
            self.edge(s1, I_LETTER, c1)
            self.edge(c2, I_LETTER, t1)
            self.edge(c2, I_LETTER, c1)
            self.edge(s1, I_LETTER, t1)
            return s1, t1

        if isinstance(t, Inter):
            raise FragmentError('intersection has no automaton')

        raise FragmentError('no automaton for {!r}'.format(t))



def thompson(t: Term, sigma: Optional[Sequence[str]] = None) -> Nfa:
    """The automaton of an intersection-free term

    Converses are pushed to the atoms first. Top becomes a | -a for the first
    atom of the alphabet. No states are merged, so the automaton follows the
    construction schema by schema.

    Parameters:
        t (Term): the term
        sigma (sequence of str, optional): the alphabet, defaults to the atoms
            of t (or a single atom 'a')

    Returns:
        Nfa

    Raises:
        FragmentError: if t contains an intersection
    """

    if not is_restricted(t):
        t = converse_normal_form(t)

    if sigma is None:
        sigma = atoms(t) or ('a',)
    sigma = tuple(sigma)

    builder = _Builder(sigma[0])
    initial, final = builder.build(t)

    m = Nfa(builder.count, builder.transitions, initial, final, sigma)
    logger.debug('automaton with %d states and %d transitions', m.n_states, len(builder.transitions))

    return m
