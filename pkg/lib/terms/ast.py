import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Tuple

from ..errors import EcorError


# atoms are lowercase identifiers, the constants use their own symbols
ATOM_PATTERN = re.compile(r'[a-z][a-z0-9_]*')


Alphabet = Tuple[str, ...]


class Term:
    """Base class of every term node

    Restricted terms only use the node classes up to Star. General terms may
    additionally contain Conv on any subterm and Compl on Bot and Top, both
    of which are removed by converse_normal_form.
    """

    __slots__ = ()


@dataclass(frozen=True)
class Var(Term):
    name: str


@dataclass(frozen=True)
class NegVar(Term):
    name: str


@dataclass(frozen=True)
class ConvVar(Term):
    name: str


@dataclass(frozen=True)
class ConvNegVar(Term):
    name: str


@dataclass(frozen=True)
class Id(Term):
    pass


@dataclass(frozen=True)
class NegId(Term):
    pass


@dataclass(frozen=True)
class Bot(Term):
    pass


@dataclass(frozen=True)
class Top(Term):
    pass


@dataclass(frozen=True)
class Comp(Term):
    left: Term
    right: Term


@dataclass(frozen=True)
class Union(Term):
    left: Term
    right: Term


@dataclass(frozen=True)
class Inter(Term):
    left: Term
    right: Term


@dataclass(frozen=True)
class Star(Term):
    body: Term


@dataclass(frozen=True)
class Conv(Term):
    body: Term


@dataclass(frozen=True)
class Compl(Term):
    body: Term


ATOM_NODES  = (Var, NegVar, ConvVar, ConvNegVar)
CONSTANTS   = (Id, NegId, Bot, Top)
BINARY      = (Comp, Union, Inter)



def children(t: Term) -> Tuple[Term, ...]:
    """Returns the direct subterms of a node, left to right"""

    if isinstance(t, BINARY):
        return (t.left, t.right)
    if isinstance(t, (Star, Conv, Compl)):
        return (t.body,)
    return ()


def subterms(t: Term) -> Iterator[Term]:
    """Yields every node of the term in pre-order"""

    stack = [t]
    while stack:
        node = stack.pop()
        yield node
        stack.extend(reversed(children(node)))


def atoms(t: Term) -> Alphabet:
    """Returns the atom names occurring in the term, sorted"""

    return tuple(sorted({n.name for n in subterms(t) if isinstance(n, ATOM_NODES)}))


def is_restricted(t: Term) -> bool:
    """Whether the term avoids general converse and complemented constants"""

    return not any(isinstance(n, (Conv, Compl)) for n in subterms(t))


def check_alphabet(names: Iterable[str], strict: bool = True) -> Alphabet:
    """Validates an alphabet and returns it as a tuple in the given order

    Parameters:
        names (iterable of str): the atom names
        strict (bool): whether names must be atom-shaped; grammar
            alphabets may use other symbols

    Returns:
        tuple: the alphabet

    Raises:
        EcorError: if the names are empty, repeated or (when strict) not atom-shaped
    """

    sigma = tuple(names)

    if not sigma:
        raise EcorError('the alphabet must not be empty')
    if len(set(sigma)) != len(sigma):
        raise EcorError('the alphabet repeats an atom: {}'.format(','.join(sigma)))
    for name in sigma:
        if strict and not ATOM_PATTERN.fullmatch(name):
            raise EcorError('{!r} is not a valid atom name'.format(name))

    return sigma
