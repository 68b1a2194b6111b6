from dataclasses import dataclass
from typing import List, Sequence, Tuple

from ..errors import EcorError
from .ast import ATOM_PATTERN, Term, Var, NegVar, ConvVar, ConvNegVar, Id, NegId


IDENTITY = '1'


@dataclass(frozen=True, order=True)
class Letter:
    """A signed letter: an atom or the identity, optionally complemented and,
       for atoms, optionally conversed

       The text form is the one used in NFA dumps and witness files:
       `a`, `!a`, `a^`, `!a^`, `1` and `!1`.

       ...

       Methods:
            is_identity()
                whether the letter is I or its complement
            breve()
                the converse dual, fixing I and its complement
            bar()
                the complement dual
            base()
                the same letter without converse
            encode()
                the text form
            decode(text)
                parses the text form (classmethod)
    """

    atom: str
    negated: bool = False
    converse: bool = False


    def __post_init__(self):
        assert not (self.atom == IDENTITY and self.converse)


    def is_identity(self) -> bool:
        return self.atom == IDENTITY


    def is_epsilon(self) -> bool:
        """The plain identity letter, which NFAs read as an epsilon move"""
        return self.atom == IDENTITY and not self.negated


    def breve(self) -> 'Letter':
        if self.is_identity():
            return self
        return Letter(self.atom, self.negated, not self.converse)


    def bar(self) -> 'Letter':
        return Letter(self.atom, not self.negated, self.converse)


    def base(self) -> 'Letter':
        return Letter(self.atom, self.negated)


    def encode(self) -> str:
        return '{}{}{}'.format('!' if self.negated else '', self.atom, '^' if self.converse else '')


    @classmethod
    def decode(cls, text: str) -> 'Letter':
        """Parses the text form of a letter

        Raises:
            EcorError: on anything that is not a letter
        """
        body = text.strip()
        negated = body.startswith('!')
        if negated:
            body = body[1:]
        converse = body.endswith('^')
        if converse:
            body = body[:-1]

        if body == IDENTITY and not converse:
            return cls(IDENTITY, negated)
        if ATOM_PATTERN.fullmatch(body):
            return cls(body, negated, converse)

        raise EcorError('{!r} is not a letter'.format(text))


    def __str__(self):
        return self.encode()


I_LETTER     = Letter(IDENTITY)
NEG_I_LETTER = Letter(IDENTITY, True)



def label_letters(sigma: Sequence[str]) -> Tuple[Letter, ...]:
    """The labels a graph carries: a and its complement per atom, then I and
       its complement
    """

    letters = []
    for a in sigma:
        letters.append(Letter(a))
        letters.append(Letter(a, True))
    letters.append(I_LETTER)
    letters.append(NEG_I_LETTER)

    return tuple(letters)


def word_letters(sigma: Sequence[str]) -> Tuple[Letter, ...]:
    """Every letter a word may contain: signed atoms, their converses and the
       complemented identity (never the identity itself)
    """

    letters = []
    for a in sigma:
        for negated in (False, True):
            for converse in (False, True):
                letters.append(Letter(a, negated, converse))
    letters.append(NEG_I_LETTER)

    return tuple(sorted(letters))


def letter_of(t: Term) -> Letter:
    """Maps a leaf term to its letter

    Raises:
        EcorError: for nodes that are not signed atoms or identity constants
    """

    if isinstance(t, Var):
        return Letter(t.name)
    if isinstance(t, NegVar):
        return Letter(t.name, True)
    if isinstance(t, ConvVar):
        return Letter(t.name, False, True)
    if isinstance(t, ConvNegVar):
        return Letter(t.name, True, True)
    if isinstance(t, Id):
        return I_LETTER
    if isinstance(t, NegId):
        return NEG_I_LETTER

    raise EcorError('{!r} is not a letter'.format(t))


def encode_word(word: Sequence[Letter]) -> List[str]:
    return [x.encode() for x in word]


def decode_word(texts: Sequence[str]) -> Tuple[Letter, ...]:
    word = tuple(Letter.decode(t) for t in texts)
    if any(x.is_epsilon() for x in word):
        raise EcorError('words never contain the identity letter')
    return word
