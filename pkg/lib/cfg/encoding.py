import logging
from dataclasses import dataclass
from functools import reduce
from typing import Dict, Optional, Sequence, Tuple

import numpy as np

from ..errors import EcorError
from ..terms import Term, Var, NegVar, Id, Top, Comp, Union, Inter, Star, replace_top
from ..structures import Structure, PointedStructure, Relation
from ..decide import Options, Query
from .grammar import Cfg, atom_of


logger = logging.getLogger(__name__)



@dataclass(frozen=True)
class Hypothesis:
    """w <= x for a rule x <- w"""

    lhs: Term
    rhs: Term



def word_term(symbols: Sequence[str]) -> Term:
    """The composition of the atoms of the symbols, or 1 for the empty word"""

    if not symbols:
        return Id()
    return reduce(Comp, [Var(atom_of(s)) for s in symbols])



def _body_relation(body: Sequence[str], relations: Dict[str, Relation], n: int) -> Relation:

    rel = np.eye(n, dtype=bool)
    for symbol in body:
        rel = (rel.astype(np.int32) @ relations[symbol].astype(np.int32)) > 0
    return rel


def _closure(c: Cfg, word: Sequence[str]) -> Dict[str, Relation]:
    """Every terminal relation of the word's path and the least nonterminal
       relations closed under the rules
    """

    n = len(word) + 1
    relations: Dict[str, Relation] = {}

    for b in c.terminals:
        rel = np.zeros((n, n), dtype=bool)
        for i, letter in enumerate(word):
            if letter == b:
                rel[i, i + 1] = True
        relations[b] = rel

    for x in c.nonterminals:
        relations[x] = np.zeros((n, n), dtype=bool)

    rounds = 0
    changed = True
    while changed:
        changed = False
        rounds += 1
        for head, body in c.rules:
            grown = relations[head] | _body_relation(body, relations, n)
            if not np.array_equal(grown, relations[head]):
                relations[head] = grown
                changed = True

    logger.debug('canonical model of a word of length %d after %d rounds', len(word), rounds)
    return relations


def canonical_model(c: Cfg, word: Sequence[str]) -> PointedStructure:
    """The path of the word with every nonterminal interpreted as the least
       relation closed under its rules, pointed at both ends

    The vertices are the positions 0..|word|; terminal b relates i to i+1 when
    the i-th letter is b. A rule x <- w adds (i, j) to x whenever the symbols
    of w connect i to j. The atoms are named by atom_of.
    """

    for b in word:
        if b not in c.terminals:
            raise EcorError('{!r} is not a terminal'.format(b))

    relations = _closure(c, word)
    structure = Structure(c.sigma, len(word) + 1, {atom_of(s): rel for s, rel in relations.items()})

    return PointedStructure(structure, 0, len(word))


def derives(c: Cfg, x: str, word: Sequence[str]) -> bool:
    """Whether x derives the word, read off the canonical model"""

    model = canonical_model(c, word)
    return bool(model.base.relation(atom_of(x))[model.source, model.target])



def build_gamma(c: Cfg) -> Tuple[Hypothesis, ...]:
    """The hypotheses w <= x, one per rule x <- w"""

    return tuple(Hypothesis(word_term(body), Var(atom_of(head))) for head, body in c.rules)


def _fold(facts: Sequence[Term], rhs: Term) -> Term:
    return reduce(lambda acc, u: Union(acc, Comp(Comp(Top(), u), Top())), facts, rhs)


def hoare_encode(facts: Sequence[Term], lhs: Term, rhs: Term, sigma: Optional[Sequence[str]] = None,
                 options: Optional[Options] = None) -> Query:
    """Moves hypotheses u = 0 into the conclusion: they entail lhs <= rhs
       exactly when lhs <= rhs | T;u;T holds outright (one summand per u)
    """

    return Query(lhs, _fold(facts, rhs), '<=', None if sigma is None else tuple(sigma), options or Options())


def reduce_universality(c: Cfg, options: Optional[Options] = None) -> Query:
    """The inequation that holds exactly when the grammar derives every word

    The hypotheses w <= x become w & -x = 0 and are folded into the right side
    of A* <= s; top is then spelled a|-a with the first terminal a.

    Raises:
        EcorError: when the grammar has no terminals
    """

    if not c.terminals:
        raise EcorError('the grammar has no terminals')

    letters = reduce(Union, [Var(atom_of(b)) for b in c.terminals])
    facts = [Inter(h.lhs, NegVar(h.rhs.name)) for h in build_gamma(c)]

    encoded = hoare_encode(facts, Star(letters), Var(atom_of(c.start)), c.sigma, options)
    q = Query(encoded.lhs, replace_top(encoded.rhs, atom_of(c.terminals[0])), '<=', c.sigma, encoded.options)

    logger.info('reduced a grammar with %d rules to %s', len(c.rules), q)
    return q


def counterexample_from_word(c: Cfg, word: Sequence[str]) -> Tuple[PointedStructure, bool]:
    """The canonical model of a word, with whether it refutes the reduced
       inequation (it does exactly when the start symbol fails to derive the
       word)
    """

    model = canonical_model(c, word)
    expected = not bool(model.base.relation(atom_of(c.start))[model.source, model.target])

    return model, expected
