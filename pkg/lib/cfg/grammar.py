import logging
import os
import re
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from ..errors import GrammarError


logger = logging.getLogger(__name__)


TERMINAL    = re.compile(r'[a-z][a-z0-9_]*$')
NONTERMINAL = re.compile(r'[A-Z][A-Za-z0-9_]*$')

EPSILON = 'eps'

# nonterminal X becomes the atom n_x in the reduced terms
NONTERMINAL_PREFIX = 'n_'

Rule = Tuple[str, Tuple[str, ...]]



def atom_of(symbol: str) -> str:
    """The atom standing for a grammar symbol in terms and structures"""

    if NONTERMINAL.match(symbol):
        return NONTERMINAL_PREFIX + symbol.lower()
    return symbol



@dataclass(frozen=True)
class Cfg:
    """A context-free grammar: terminals, nonterminals, rules x <- w and a
       start symbol

       Terminals are lowercase and nonterminals uppercase identifiers; both
       turn into atoms (see atom_of), so their atoms have to be distinct.
    """

    terminals: Tuple[str, ...]
    nonterminals: Tuple[str, ...]
    rules: Tuple[Rule, ...]
    start: str


    def __post_init__(self):

        for b in self.terminals:
            if not TERMINAL.match(b) or b == EPSILON:
                raise GrammarError('bad terminal {!r}'.format(b), 0)
        for x in self.nonterminals:
            if not NONTERMINAL.match(x):
                raise GrammarError('bad nonterminal {!r}'.format(x), 0)

        names = [atom_of(s) for s in self.terminals + self.nonterminals]
        if len(set(names)) != len(names):
            raise GrammarError('two symbols share the atom name', 0)

        if self.start not in self.nonterminals:
            raise GrammarError('start symbol {!r} is not a nonterminal'.format(self.start), 0)

        known = set(self.terminals) | set(self.nonterminals)
        for head, body in self.rules:
            if head not in self.nonterminals:
                raise GrammarError('rule head {!r} is not a nonterminal'.format(head), 0)
            for symbol in body:
                if symbol not in known:
                    raise GrammarError('undeclared symbol {!r}'.format(symbol), 0)


    @property
    def sigma(self) -> Tuple[str, ...]:
        """The atoms of terminals, then of nonterminals"""
        return tuple(atom_of(s) for s in self.terminals + self.nonterminals)


    def rules_of(self, x: str) -> List[Tuple[str, ...]]:
        return [body for head, body in self.rules if head == x]


    def __str__(self):
        lines = ['start: {}'.format(self.start)]
        for head, body in self.rules:
            lines.append('{} -> {}'.format(head, ' '.join(body) if body else EPSILON))
        return '\n'.join(lines)



def parse_grammar(text: str) -> Cfg:
    """Reads a grammar, one rule per line

    A line 'X -> alpha | beta' adds one rule per alternative, with the symbols
    of an alternative separated by whitespace and 'eps' for the empty word.
    The head of the first rule is the start symbol unless a 'start: X' line
    says otherwise; a 'terminals: a b' line declares terminals no rule uses.
    Everything after '#' is a comment.

    Raises:
        GrammarError: on malformed lines, with the line number
    """

    rules: List[Rule] = []
    terminals: Dict[str, None] = {}
    nonterminals: Dict[str, None] = {}
    start: Optional[str] = None

    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split('#', 1)[0].strip()
        if not line:
            continue

        if line.startswith('start:'):
            start = line[len('start:'):].strip()
            if not NONTERMINAL.match(start):
                raise GrammarError('bad start symbol {!r}'.format(start), number)
            continue

        if line.startswith('terminals:'):
            for b in line[len('terminals:'):].split():
                if not TERMINAL.match(b) or b == EPSILON:
                    raise GrammarError('bad terminal {!r}'.format(b), number)
                terminals[b] = None
            continue

        if '->' not in line:
            raise GrammarError('expected "X -> alpha"', number)

        head, alternatives = (part.strip() for part in line.split('->', 1))
        if not NONTERMINAL.match(head):
            raise GrammarError('rule head {!r} is not a nonterminal'.format(head), number)
        nonterminals[head] = None

        for alternative in alternatives.split('|'):
            symbols = alternative.split()
            if not symbols:
                raise GrammarError('empty alternative, write eps for the empty word', number)

            if symbols == [EPSILON]:
                rules.append((head, ()))
                continue

            for symbol in symbols:
                if NONTERMINAL.match(symbol):
                    nonterminals[symbol] = None
                elif TERMINAL.match(symbol) and symbol != EPSILON:
                    terminals[symbol] = None
                else:
                    raise GrammarError('bad symbol {!r}'.format(symbol), number)
            rules.append((head, tuple(symbols)))

    if not rules:
        raise GrammarError('no rules', 0)

    start = start or rules[0][0]
    nonterminals[start] = None

    undefined = [x for x in nonterminals if x != start and not any(h == x for h, _ in rules)]
    if undefined:
        logger.warning('nonterminals without rules: %s', ', '.join(undefined))

    return Cfg(tuple(terminals), tuple(nonterminals), tuple(rules), start)


def load_grammar(path: str) -> Cfg:

    path = os.path.abspath(path)
    if not os.path.isfile(path):
        raise GrammarError('No grammar at {}'.format(path), 0)

    with open(path) as f:
        return parse_grammar(f.read())


def parse_word(text: str, c: Cfg) -> Tuple[str, ...]:
    """Splits a whitespace separated word (or 'eps') into terminals

    Raises:
        GrammarError: on symbols that are not terminals of c
    """

    symbols = text.split()
    if symbols == [EPSILON]:
        return ()

    for b in symbols:
        if b not in c.terminals:
            raise GrammarError('{!r} is not a terminal'.format(b), 0)
    return tuple(symbols)


def words_over(terminals: Sequence[str], max_len: int):
    """Every word over the terminals up to max_len, shortest first"""

    layer = [()]
    for _ in range(max_len + 1):
        yield from layer
        layer = [w + (b,) for w in layer for b in terminals]
