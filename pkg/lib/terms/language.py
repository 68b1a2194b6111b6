from typing import FrozenSet, Tuple

from ..errors import FragmentError
from .ast import Term, Var, Id, Bot, Comp, Union, Star


Word = Tuple[str, ...]



def word_language(t: Term, max_len: int) -> FrozenSet[Word]:
    """The words of length at most max_len in the language of a Kleene
       algebra term

    Only atoms, I, bottom, composition, union and star are allowed. For such
    terms relational validity of t <= s is the same as inclusion of the word
    languages, which makes this a cheap independent oracle.

    Parameters:
        t (Term): a Kleene algebra term
        max_len (int): the longest word to produce

    Returns:
        frozenset: words as tuples of atom names

    Raises:
        FragmentError: when the term uses anything outside Kleene algebra
    """

    assert max_len >= 0

    if isinstance(t, Var):
        return frozenset([(t.name,)]) if max_len >= 1 else frozenset()
    if isinstance(t, Id):
        return frozenset([()])
    if isinstance(t, Bot):
        return frozenset()
    if isinstance(t, Union):
        return word_language(t.left, max_len) | word_language(t.right, max_len)
    if isinstance(t, Comp):
        left  = word_language(t.left, max_len)
        right = word_language(t.right, max_len)
        return frozenset(u + v for u in left for v in right if len(u) + len(v) <= max_len)
    if isinstance(t, Star):
        body = word_language(t.body, max_len)
        words = {()}
        frontier = {()}
        # the iteration stops since the set of short words is finite
        while frontier:
            grown = {u + v for u in frontier for v in body if len(u) + len(v) <= max_len}
            frontier = grown - words
            words |= frontier
        return frozenset(words)

    raise FragmentError('word languages are defined for Kleene algebra terms only')


def language_inclusion(lhs: Term, rhs: Term, max_len: int) -> bool:
    """Whether every word of lhs up to max_len is a word of rhs"""

    return word_language(lhs, max_len) <= word_language(rhs, max_len)
