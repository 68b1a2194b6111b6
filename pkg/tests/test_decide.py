import pytest

from lib.errors import EcorError, FragmentError
from lib.terms import Letter, parse, equation_size
from lib.structures import Structure, PointedStructure, refutes, brute_force_refute
from lib.graphs import isomorphic, graph_of_structure
from lib.verdict import Verdict
from lib.decide import (
    Options, Query, decide, decide_starfree, graph_characterization_check, decide_intersection_free,
    semidecide_ecorstar, first_hit,
)


NEG_A = Letter('a', True)



@pytest.mark.parametrize('lhs, relation, rhs', [
    ('T', '=', 'a|-a'),
    ('a;b;-a', '<=', '(-1;-a)|(a;-1)'),
    ('a', '<=', '-1|a;a'),
    ('a^;-a', '<=', '-1'),
    ('T;a;T;b;T', '=', 'T;b;T;a;T'),
    ('a&b', '<=', 'a&(T;b)'),
    ('(a;b)^', '=', 'b^;a^'),
    ('a;(b|c)', '=', 'a;b|a;c'),
    ('1&(a;T)', '<=', 'a;a^'),
])
def test_valid_star_free(lhs, relation, rhs):
    q = Query.parse(lhs, relation, rhs)
    verdict = decide(q)
    assert verdict.is_valid
    assert verdict.procedure == 'starfree'
    assert graph_characterization_check(q).is_valid


@pytest.mark.parametrize('lhs, relation, rhs', [
    ('a', '<=', 'a;a'),
    ('a;a^', '<=', '1'),
    ('a&b', '=', 'a'),
    ('T', '<=', 'a|-1'),
    ('a;-a', '<=', '-1'),
])
def test_refuted_star_free(lhs, relation, rhs):
    q = Query.parse(lhs, relation, rhs)
    verdict = decide(q)
    assert verdict.is_refuted
    assert refutes(verdict.counterexample, q.lhs, q.rhs, verdict.direction)
    assert graph_characterization_check(q).is_refuted


def test_equation_reports_the_failing_direction():
    verdict = decide(Query.parse('a&b', '=', 'a'))
    assert verdict.direction == '>='

    verdict = decide(Query.parse('a', '=', 'a&b'))
    assert verdict.direction == '<='


def test_reversed_inclusion():
    q = Query.parse('a', '>=', 'a;a')
    assert q.relation == '<=' and q.lhs == parse('a;a')
    assert decide(q).is_refuted
    assert decide(Query.parse('a;a', '>=', 'a;a')).is_valid


def test_threads_do_not_change_verdicts():
    q = Query.parse('a;b', '<=', 'b;a', options=Options(threads=3))
    verdict = decide(q)
    assert verdict.is_refuted
    assert verdict == decide(Query.parse('a;b', '<=', 'b;a'))



def test_agreement_with_the_oracle(term_source):
    """Left sides with two leaves have graphs on at most three vertices, so
       the oracle up to three vertices is complete for them
    """

    sigma = ('a', 'b')
    for _ in range(20):
        q = Query(term_source(sigma, 2), term_source(sigma, 3), '<=', sigma)

        verdict = decide_starfree(q)
        assert verdict.kind == graph_characterization_check(q).kind

        found = brute_force_refute(q.lhs, q.rhs, 3, '<=', sigma)
        assert verdict.is_valid == (found is None), str(q)
        if verdict.is_refuted:
            assert refutes(verdict.counterexample, q.lhs, q.rhs)


@pytest.mark.slow
def test_agreement_with_the_oracle_on_a_large_grid(term_source):
    """Queries of size at most six; the oracle is complete when the left side
       has at most two leaves and sound otherwise
    """

    sigma = ('a', 'b')
    checked = 0
    while checked < 500:
        left = 1 + checked % 3
        q = Query(term_source(sigma, left), term_source(sigma, 1 + checked % 2), '<=', sigma)
        if equation_size(q.lhs, q.rhs) > 6:
            continue
        checked += 1

        verdict = decide_starfree(q)
        assert verdict.kind == graph_characterization_check(q).kind, str(q)

        found = brute_force_refute(q.lhs, q.rhs, 3, '<=', sigma)
        if found is not None:
            assert verdict.is_refuted, str(q)
        elif left <= 2:
            assert verdict.is_valid, str(q)
        if verdict.is_refuted:
            assert refutes(verdict.counterexample, q.lhs, q.rhs)


def test_equations_are_two_inclusions(term_source):
    sigma = ('a',)
    for _ in range(10):
        lhs, rhs = term_source(sigma, 2), term_source(sigma, 2)
        both = decide(Query(lhs, rhs, '=', sigma)).is_valid
        forward = decide(Query(lhs, rhs, '<=', sigma)).is_valid
        backward = decide(Query(rhs, lhs, '<=', sigma)).is_valid
        assert both == (forward and backward)



def test_intersection_free_refutation():
    q = Query.parse('-a', '<=', '(-a);-a;(-a)*')
    verdict = decide(q)

    assert verdict.is_refuted and verdict.procedure == 'fragment'
    assert verdict.word == (NEG_A,)
    assert verdict.witness['word'] == ['!a']

    expected = PointedStructure(Structure(('a',), 2, {'a': [(0, 0), (1, 0), (1, 1)]}), 0, 1)
    assert isomorphic(graph_of_structure(verdict.counterexample), graph_of_structure(expected))


@pytest.mark.parametrize('lhs, rhs', [
    ('a*;a', 'a;a*'),
    ('a;b;a', '(a|b)*'),
    ('a;a^;a', 'a;(a^;a)*'),
    ('a*', '1|a;a*'),
])
def test_intersection_free_valid(lhs, rhs):
    verdict = decide(Query.parse(lhs, '<=', rhs))
    assert verdict.is_valid and verdict.procedure == 'fragment'


def test_word_by_word_search():
    # -1 on the right and -a on the left leave both exact fragments
    verdict = decide_intersection_free(Query.parse('a;b;-a', '<=', '(-1;-a)|(a;-1)'))
    assert verdict.is_valid and verdict.procedure == 'full'

    verdict = decide(Query.parse('(-a)*', '<=', '(-1)*', options=Options(len_cap=3)))
    assert verdict.is_unknown and verdict.bound == 3 and verdict.procedure == 'full'



def test_semi_procedure():
    verdict = semidecide_ecorstar(Query.parse('a*', '<=', 'b'), budget=2)
    assert verdict.is_refuted and verdict.procedure == 'semi'
    assert verdict.counterexample.base.n == 1

    verdict = semidecide_ecorstar(Query.parse('(a&b)*', '<=', '(b&a)*'), budget=4)
    assert verdict.is_unknown and verdict.bound == 4


def test_routing_to_the_semi_procedure():
    q = Query.parse('(a&b)*', '<=', 'a*', options=Options(budget=3))
    assert decide(q).is_unknown

    q = Query.parse('(a&-1)*', '<=', 'a', options=Options(budget=3))
    verdict = decide(q)
    assert verdict.is_refuted and refutes(verdict.counterexample, q.lhs, q.rhs)



def test_forced_procedures():
    q = Query.parse('a^;-a', '<=', '-1', options=Options(procedure='graphchar'))
    assert decide(q).procedure == 'graphchar'

    with pytest.raises(FragmentError):
        decide(Query.parse('a*', '<=', 'a', options=Options(procedure='starfree')))
    with pytest.raises(FragmentError):
        decide(Query.parse('(-a)', '<=', '-1|a', options=Options(procedure='fragment')))
    with pytest.raises(FragmentError):
        decide_intersection_free(Query.parse('a&b', '<=', 'a'))



def test_query():
    q = Query.parse('a;b^', '<=', '(b;a^)^')
    assert q.sigma == ('a', 'b')
    assert str(q) == 'a;b^ <= a;b^'
    assert Query.parse('1', '<=', 'T').sigma == ('a',)

    with pytest.raises(EcorError):
        Query.parse('a;c', '<=', 'a', sigma=('a', 'b'))
    with pytest.raises(EcorError):
        Query(parse('a'), parse('a'), '<')


def test_options(monkeypatch):
    monkeypatch.setenv('ECOR_THREADS', '3')
    options = Options.from_env(budget=7, procedure=None)
    assert (options.budget, options.threads, options.procedure) == (7, 3, None)

    monkeypatch.setenv('ECOR_THREADS', 'many')
    assert Options.from_env().threads == 1

    with pytest.raises(AssertionError):
        Options(procedure='guess')


def test_verdict_json():
    assert Verdict.valid('starfree').to_json() == {'verdict': 'valid', 'procedure': 'starfree'}
    assert Verdict.unknown(4, 'semi').to_json() == {'verdict': 'unknown', 'bound': 4, 'procedure': 'semi'}

    p = PointedStructure(Structure(('a',), 1, {}), 0, 0)
    doc = Verdict.refuted(p, '>=', word=(NEG_A,)).to_json()
    assert doc['direction'] == '>=' and doc['word'] == ['!a']
    assert doc['counterexample'] == {'n': 1, 'relations': {'a': []}, 'source': 0, 'target': 0}


def test_first_hit():
    items = list(range(40))

    def check(x):
        return x if x % 7 == 6 else None

    assert first_hit(items, check) == 6
    assert first_hit(items, check, threads=4) == 6
    assert first_hit(items, lambda x: None, threads=2) is None
