"""Automata over signed letters, with the identity letter as epsilon

Classes:
    Nfa
        an immutable automaton with one initial and one final state

Functions:
    thompson(t):
        the automaton of an intersection-free term
    eps_closure(m, states), delta(m, states, x), accepts(m, word):
        the word semantics
    breve(x):
        the converse dual of a letter
    eval_nfa(m, a, max_len):
        the relation an automaton denotes in a structure
    matches(t, word):
        direct regular expression matching, independent of the automata
"""

from .automaton import Nfa, State, StateSet, mask_of, states_of, eps_closure, delta, accepts, breve
from .thompson import thompson
from .semantics import eval_nfa, eval_nfa_with, letter_relation
from .matcher import matches
