import logging
import re
from typing import List, Optional, Sequence, Tuple, Union as UnionType

from ..errors import TermSyntaxError, UnknownAtomError
from .ast import (
    Term, Var, NegVar, ConvVar, ConvNegVar, Id, NegId, Bot, Top,
    Comp, Union, Inter, Star, Conv, Compl, atoms,
)


logger = logging.getLogger(__name__)


_TOKEN = re.compile(r'\s*(?:([a-z][a-z0-9_]*)|([10T();&|*^-])|(\S))')


# precedence levels used by render, loosest first
_UNION, _INTER, _COMP, _PREFIX, _POSTFIX = 1, 2, 3, 4, 5



def _tokenize(text: str) -> List[Tuple[str, int]]:

    tokens = []
    pos = 0
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if match is None:
            # only trailing whitespace is left
            break
        name, symbol, junk = match.groups()
        start = match.start(1) if name else match.start(2) if symbol else match.start(3)
        if junk is not None:
            raise TermSyntaxError('unexpected character {!r}'.format(junk), start)
        tokens.append((name or symbol, start))
        pos = match.end()

    tokens.append(('', len(text)))
    return tokens



class _Parser:
    """Recursive descent over the token list, one method per precedence level"""

    def __init__(self, text: str):
        self.__tokens = _tokenize(text)
        self.__index  = 0


    def peek(self) -> Tuple[str, int]:
        return self.__tokens[self.__index]


    def advance(self) -> Tuple[str, int]:
        token = self.__tokens[self.__index]
        self.__index += 1
        return token


    def parse(self) -> Term:
        term = self.union()
        token, pos = self.peek()
        if token != '':
            raise TermSyntaxError('unexpected {!r}'.format(token), pos)
        return term


    def union(self) -> Term:
        term = self.inter()
        while self.peek()[0] == '|':
            self.advance()
            term = Union(term, self.inter())
        return term


    def inter(self) -> Term:
        term = self.comp()
        while self.peek()[0] == '&':
            self.advance()
            term = Inter(term, self.comp())
        return term


    def comp(self) -> Term:
        term = self.prefix()
        while self.peek()[0] == ';':
            self.advance()
            term = Comp(term, self.prefix())
        return term


    def prefix(self) -> Term:
        token, pos = self.peek()
        if token != '-':
            return self.postfix()

        self.advance()
        return _complement(self.prefix(), pos)


    def postfix(self) -> Term:
        term = self.primary()
        while self.peek()[0] in ('*', '^'):
            token, _ = self.advance()
            term = Star(term) if token == '*' else _converse(term)
        return term


    def primary(self) -> Term:
        token, pos = self.advance()

        if token == '(':
            term = self.union()
            closing, cpos = self.advance()
            if closing != ')':
                raise TermSyntaxError('expected ")"', cpos)
            return term
        if token == '1':
            return Id()
        if token == '0':
            return Bot()
        if token == 'T':
            return Top()
        if token and token[0].isalpha() and token[0].islower():
            return Var(token)
        if token == '':
            raise TermSyntaxError('unexpected end of input', pos)

        raise TermSyntaxError('unexpected {!r}'.format(token), pos)



def _complement(term: Term, pos: int) -> Term:

    if isinstance(term, Var):
        return NegVar(term.name)
    if isinstance(term, NegVar):
        return Var(term.name)
    if isinstance(term, ConvVar):
        return ConvNegVar(term.name)
    if isinstance(term, ConvNegVar):
        return ConvVar(term.name)
    if isinstance(term, Id):
        return NegId()
    if isinstance(term, NegId):
        return Id()
    if isinstance(term, (Bot, Top)):
        return Compl(term)
    if isinstance(term, Compl):
        return term.body

    raise TermSyntaxError('complement applies only to atoms, 1, 0 and T', pos)


def _converse(term: Term) -> Term:

    if isinstance(term, Var):
        return ConvVar(term.name)
    if isinstance(term, NegVar):
        return ConvNegVar(term.name)
    if isinstance(term, ConvVar):
        return Var(term.name)
    if isinstance(term, ConvNegVar):
        return NegVar(term.name)

    return Conv(term)



def parse(text: str, sigma: UnionType[Sequence[str], str] = 'infer') -> Term:
    """Parses a term in the ASCII syntax

    Postfix `*` and `^` bind tightest, then prefix `-`, then `;`, `&` and `|`.
    All binary operators associate to the left. The result may be a general
    term (converse on compound subterms, `-0`, `-T`).

    Parameters:
        text (str): the source text
        sigma (sequence of str or 'infer'): the alphabet atoms must belong to,
            or 'infer' to accept any atom

    Returns:
        Term: the syntax tree

    Raises:
        TermSyntaxError: when the text does not follow the grammar
        UnknownAtomError: when an atom is outside an explicit alphabet
    """

    term = _Parser(text).parse()

    if not isinstance(sigma, str):
        allowed = set(sigma)
        for name in atoms(term):
            if name not in allowed:
                raise UnknownAtomError(name)

    logger.debug('parsed %r', text)
    return term



def render(t: Term) -> str:
    """Renders a term back to the ASCII syntax, with parentheses only where
       the precedence rules need them
    """
    return _render(t, _UNION)


def _render(t: Term, context: int) -> str:

    text, level = _render_node(t)
    if level < context:
        return '({})'.format(text)
    return text


def _render_node(t: Term) -> Tuple[str, int]:

    if isinstance(t, Var):
        return t.name, _POSTFIX
    if isinstance(t, NegVar):
        return '-' + t.name, _PREFIX
    if isinstance(t, ConvVar):
        return t.name + '^', _POSTFIX
    if isinstance(t, ConvNegVar):
        return '-{}^'.format(t.name), _PREFIX
    if isinstance(t, Id):
        return '1', _POSTFIX
    if isinstance(t, NegId):
        return '-1', _PREFIX
    if isinstance(t, Bot):
        return '0', _POSTFIX
    if isinstance(t, Top):
        return 'T', _POSTFIX
    if isinstance(t, Compl):
        return '-' + _render(t.body, _POSTFIX), _PREFIX
    if isinstance(t, Star):
        return _render(t.body, _POSTFIX) + '*', _POSTFIX
    if isinstance(t, Conv):
        return _render(t.body, _POSTFIX) + '^', _POSTFIX
    if isinstance(t, Comp):
        return '{};{}'.format(_render(t.left, _COMP), _render(t.right, _PREFIX)), _COMP
    if isinstance(t, Inter):
        return '{}&{}'.format(_render(t.left, _INTER), _render(t.right, _COMP)), _INTER
    if isinstance(t, Union):
        return '{}|{}'.format(_render(t.left, _UNION), _render(t.right, _INTER)), _UNION

    raise TypeError('not a term: {!r}'.format(t))
