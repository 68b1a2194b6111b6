from typing import FrozenSet, Sequence

from ..errors import FragmentError
from ..terms import (
    Term, Var, NegVar, ConvVar, ConvNegVar, Id, NegId, Bot, Top,
    Comp, Union, Inter, Star, Letter, is_restricted, converse_normal_form, letter_of,
)



def matches(t: Term, word: Sequence[Letter]) -> bool:
    """Whether a word belongs to the language of t read as a regular expression
       over signed letters

    Independent of the automata, used to cross-check them.

    Raises:
        FragmentError: for top and intersection, which have no letter language
    """

    if not is_restricted(t):
        t = converse_normal_form(t)
    word = tuple(word)

    return len(word) in _ends(t, word, 0)


def _ends(t: Term, word: Sequence[Letter], i: int) -> FrozenSet[int]:
    """The positions j such that word[i:j] matches t"""

    if isinstance(t, Id):
        return frozenset([i])
    if isinstance(t, (Var, NegVar, ConvVar, ConvNegVar, NegId)):
        return frozenset([i + 1]) if i < len(word) and word[i] == letter_of(t) else frozenset()
    if isinstance(t, Bot):
        return frozenset()
    if isinstance(t, Union):
        return _ends(t.left, word, i) | _ends(t.right, word, i)
    if isinstance(t, Comp):
        out = set()
        for j in _ends(t.left, word, i):
            out |= _ends(t.right, word, j)
        return frozenset(out)
    if isinstance(t, Star):
        out, frontier = {i}, [i]
        while frontier:
            j = frontier.pop()
            for k in _ends(t.body, word, j):
                if k not in out:
                    out.add(k)
                    frontier.append(k)
        return frozenset(out)
    if isinstance(t, (Top, Inter)):
        raise FragmentError('{} has no word language'.format(type(t).__name__))

    raise FragmentError('cannot match {!r}'.format(t))
