"""Terms of the calculus of relations with complemented atoms and star

This package parses, renders, normalizes and classifies terms. A term is a
tree of frozen dataclass nodes; general terms may carry a converse on any
subterm and complemented bottom/top, restricted terms only on atoms.

Classes:
    Term, Var, NegVar, ConvVar, ConvNegVar, Id, NegId, Bot, Top, Comp, Union,
    Inter, Star, Conv, Compl
        the syntax tree nodes
    FragmentDescriptor
        which operators a term uses
    Letter
        a signed (and possibly conversed) letter, the alphabet of NFAs and
        words

Functions:
    parse(text, sigma):
        parses the ASCII syntax
    render(t):
        renders a term back to text
    converse_normal_form(t):
        pushes converse to the atoms and removes complemented constants
    size(t):
        the number of symbols of a term
    fragment_of(t):
        the FragmentDescriptor of a term
    bar_dual(x):
        the complement dual of a signed atom
    replace_top(t, a):
        replaces top by a|-a
    word_language(t, max_len):
        the short words of a Kleene algebra term
"""

from .ast import (
    Term, Var, NegVar, ConvVar, ConvNegVar, Id, NegId, Bot, Top,
    Comp, Union, Inter, Star, Conv, Compl,
    Alphabet, ATOM_NODES, atoms, children, subterms, is_restricted, check_alphabet,
)
from .letters import (
    Letter, IDENTITY, I_LETTER, NEG_I_LETTER,
    label_letters, word_letters, letter_of, encode_word, decode_word,
)
from .parser import parse, render
from .normalize import (
    converse_normal_form, size, equation_size, FragmentDescriptor, fragment_of,
    bar_dual, replace_top,
)
from .language import word_language, language_inclusion
