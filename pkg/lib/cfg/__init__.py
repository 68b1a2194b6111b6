"""Context-free grammars as relational hypotheses

A grammar derives a word exactly when its canonical model (the word's path
with the least nonterminal relations closed under the rules) relates the two
ends by the start symbol. Folding the rules into an inequation turns grammar
universality into validity.

Classes:
    Cfg
        terminals, nonterminals, rules and start symbol
    Hypothesis
        w <= x for a rule x <- w

Functions:
    parse_grammar(text), load_grammar(path), parse_word(text, c):
        read grammars and words
    canonical_model(c, w):
        the pointed structure of a word
    derives(c, x, w):
        derivability read off the canonical model
    cyk_derives(c, x, w):
        the same by a CYK table, as an independent check
    build_gamma(c):
        the hypotheses of the rules
    hoare_encode(facts, lhs, rhs):
        folds hypotheses u = 0 into the right side
    reduce_universality(c):
        the inequation valid exactly for universal grammars
    counterexample_from_word(c, w):
        the canonical model as a candidate refutation
"""

from .grammar import Cfg, atom_of, parse_grammar, load_grammar, parse_word, words_over
from .encoding import (
    Hypothesis, word_term, canonical_model, derives, build_gamma, hoare_encode,
    reduce_universality, counterexample_from_word,
)
from .cyk import cyk_derives
