import pytest

from lib.errors import EcorError, GrammarError
from lib.terms import Var, NegVar, Id, Comp, Union, Inter, Star
from lib.structures import refutes, pairs_of
from lib.cfg import (
    Cfg, atom_of, parse_grammar, load_grammar, parse_word, words_over, word_term, canonical_model,
    derives, build_gamma, hoare_encode, reduce_universality, counterexample_from_word, cyk_derives,
)


DYCK = '''
# balanced brackets
S -> l S r S | eps
'''

UNITS = '''
start: S
S -> A | a S b
A -> eps | c
terminals: d
'''

SINGLE = 'S -> a'

ALL_AS = 'S -> a S | eps'


def balanced(word):
    depth = 0
    for b in word:
        depth += 1 if b == 'l' else -1
        if depth < 0:
            return False
    return depth == 0



def test_parse_grammar():
    c = parse_grammar(DYCK)
    assert c.start == 'S'
    assert c.terminals == ('l', 'r')
    assert c.nonterminals == ('S',)
    assert c.rules == (('S', ('l', 'S', 'r', 'S')), ('S', ()))
    assert c.sigma == ('l', 'r', 'n_s')


def test_headers():
    c = parse_grammar(UNITS)
    assert c.terminals == ('a', 'b', 'c', 'd')
    assert c.rules_of('A') == [(), ('c',)]
    assert str(parse_grammar(str(c))) == str(c)


@pytest.mark.parametrize('text, line', [
    ('S -> a\nS a', 2),
    ('s -> a', 1),
    ('S -> a |', 1),
    ('S -> a\nS -> a+b', 2),
    ('start: x\nS -> a', 1),
    ('# nothing', 0),
])
def test_grammar_errors(text, line):
    with pytest.raises(GrammarError) as error:
        parse_grammar(text)
    assert error.value.line == line


def test_grammar_validation():
    with pytest.raises(GrammarError):
        Cfg(('a',), ('S',), (('S', ('b',)),), 'S')
    with pytest.raises(GrammarError):
        Cfg(('n_s',), ('S',), (), 'S')


def test_load_grammar(tmp_path):
    path = tmp_path / 'dyck.cfg'
    path.write_text(DYCK)
    assert load_grammar(str(path)) == parse_grammar(DYCK)


def test_words():
    c = parse_grammar(DYCK)
    assert parse_word('l r', c) == ('l', 'r')
    assert parse_word('eps', c) == ()
    with pytest.raises(GrammarError):
        parse_word('l x', c)

    assert list(words_over(('l', 'r'), 1)) == [(), ('l',), ('r',)]
    assert atom_of('S') == 'n_s' and atom_of('l') == 'l'



def test_canonical_model():
    c = parse_grammar(DYCK)
    p = canonical_model(c, ('l', 'l', 'r', 'l', 'r', 'r'))
    assert (p.base.n, p.source, p.target) == (7, 0, 6)

    loops = [(i, i) for i in range(7)]
    assert sorted(pairs_of(p.base.relation('n_s'))) == sorted(loops + [(0, 6), (1, 3), (1, 5), (3, 5)])
    assert pairs_of(p.base.relation('r')) == [(2, 3), (4, 5), (5, 6)]

    with pytest.raises(EcorError):
        canonical_model(c, ('x',))


@pytest.mark.parametrize('grammar, max_len', [(DYCK, 6), (UNITS, 4), (SINGLE, 3), (ALL_AS, 4)])
def test_derivation_agrees_with_cyk(grammar, max_len):
    c = parse_grammar(grammar)
    for word in words_over(c.terminals, max_len):
        for x in c.nonterminals:
            assert derives(c, x, word) == cyk_derives(c, x, word), (x, word)


def test_dyck_words():
    c = parse_grammar(DYCK)
    for word in words_over(c.terminals, 6):
        assert derives(c, 'S', word) == balanced(word)



def test_build_gamma():
    gamma = build_gamma(parse_grammar(DYCK))
    assert [(h.lhs, h.rhs) for h in gamma] == [
        (Comp(Comp(Comp(Var('l'), Var('n_s')), Var('r')), Var('n_s')), Var('n_s')),
        (Id(), Var('n_s')),
    ]
    assert word_term(()) == Id()


def test_hoare_encode():
    q = hoare_encode([Var('b')], Var('a'), Var('c'))
    assert q.relation == '<='
    assert q.sigma == ('a', 'b', 'c')
    assert str(q) == 'a <= c|T;b;T'


def test_reduce_universality_shape():
    q = reduce_universality(parse_grammar(SINGLE))
    top = Union(Var('a'), NegVar('a'))
    fact = Inter(Var('a'), NegVar('n_s'))

    assert q.lhs == Star(Var('a'))
    assert q.rhs == Union(Var('n_s'), Comp(Comp(top, fact), top))
    assert q.sigma == ('a', 'n_s')


def test_reduce_universality_needs_terminals():
    c = Cfg((), ('S',), (('S', ()),), 'S')
    with pytest.raises(EcorError):
        reduce_universality(c)


@pytest.mark.parametrize('grammar, max_len', [(DYCK, 4), (UNITS, 3), (SINGLE, 3), (ALL_AS, 3)])
def test_canonical_models_refute_exactly_the_missing_words(grammar, max_len):
    c = parse_grammar(grammar)
    q = reduce_universality(c)

    for word in words_over(c.terminals, max_len):
        model, expected = counterexample_from_word(c, word)
        assert expected == (not derives(c, c.start, word))
        assert refutes(model, q.lhs, q.rhs) == expected, word
