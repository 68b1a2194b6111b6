import itertools

import pytest

from lib.errors import FragmentError, NotSaturatedError
from lib.terms import Letter, I_LETTER, NEG_I_LETTER, parse
from lib.structures import Structure, PointedStructure, holds, refutes, brute_force_refute
from lib.graphs import isomorphic, graph_of_structure, structure_of
from lib.nfa import Nfa, thompson, eval_nfa
from lib.satpath import (
    SaturablePath, con, i_saturation, is_saturable_path, saturate_from_path, canonical_sets,
    nu, xi, phi, pairwise_saturated, pointwise_saturated,
    as_accepts, fragment_emptiness, full_exka_search, saturable_paths, refuting_saturation,
)


A, NEG_A, B = Letter('a'), Letter('a', True), Letter('b')


@pytest.fixture
def long_negations():
    return thompson(parse('-a;-a;(-a)*'))


@pytest.fixture
def two_vertex_refutation():
    # the only refutation of -a <= -a;-a;(-a)* up to isomorphism
    return PointedStructure(Structure(('a',), 2, {'a': [(0, 0), (1, 0), (1, 1)]}), 0, 1)



def test_con():
    m = thompson(parse('a;b'))
    start = m.closure([m.initial])
    after = m.delta(start, A)

    assert con(m, A, start, after)
    assert not con(m, A, start, start - after)
    assert con(m, B, start, set())



def test_single_saturable_path(long_negations, two_vertex_refutation):
    word = (NEG_A,)
    paths = list(saturable_paths(word, long_negations))
    assert len(paths) == 1

    path = paths[0]
    assert is_saturable_path(path, long_negations)
    assert path.partition() == [[0], [1]]

    refutation = structure_of(saturate_from_path(path, long_negations))
    assert isomorphic(graph_of_structure(refutation), graph_of_structure(two_vertex_refutation))
    assert not eval_nfa(two_vertex_refutation.base, long_negations)[0, 1]


def test_canonical_sets(long_negations, two_vertex_refutation):
    sets = canonical_sets(two_vertex_refutation, (0, 1), long_negations)
    path = SaturablePath((NEG_A,), i_saturation((NEG_A,), ('a',), (0, 1)), sets)

    assert long_negations.initial in sets[0]
    assert long_negations.final not in sets[1]
    assert is_saturable_path(path, long_negations)


def test_merging_path(merging_nfa):
    word = (A, NEG_A)
    graph = i_saturation(word, ('a',), (0, 1, 0))
    path = SaturablePath(word, graph, (frozenset({0, 2}), frozenset({1, 3}), frozenset({0, 2})))

    assert path.partition() == [[0, 2], [1]]
    assert is_saturable_path(path, merging_nfa)

    p = structure_of(saturate_from_path(path, merging_nfa))
    assert p.base.n == 2 and p.source == p.target == 0
    assert p.base.relation('a').tolist() == [[True, True], [False, False]]
    assert holds(p, parse('a;-a'))
    assert not eval_nfa(p.base, merging_nfa)[p.source, p.target]


def test_broken_paths_are_rejected(merging_nfa):
    word = (A, NEG_A)
    graph = i_saturation(word, ('a',), (0, 1, 2))

    # the final state sits in the target set
    path = SaturablePath(word, graph, (frozenset({0}), frozenset({1}), frozenset({3})))
    assert not is_saturable_path(path, merging_nfa)
    with pytest.raises(NotSaturatedError):
        saturate_from_path(path, merging_nfa)

    # a and -a would meet once the ends are merged with the middle vertex
    inconsistent = SaturablePath(word, i_saturation(word, ('a',), (0, 0, 0)),
                                 (frozenset({0, 2}),) * 3)
    assert not is_saturable_path(inconsistent, merging_nfa)



def test_witness_search_without_saturation(misleading_nfa):
    word = (A, B, NEG_A)

    sets = as_accepts(misleading_nfa, word, ('a', 'b'))
    assert sets is not None and len(sets) == 4
    assert misleading_nfa.initial in sets[0] and misleading_nfa.final not in sets[-1]

    # merging the vertices the witness asks for puts a and -a on one pair
    assert refuting_saturation(word, misleading_nfa, ('a', 'b')) is None
    assert list(saturable_paths(word, misleading_nfa, ('a', 'b'))) == []


def test_as_accepts_respects_acceptance():
    top = thompson(parse('a|-a'))
    assert as_accepts(top, (A,)) is None
    assert as_accepts(top, (B,), ('a', 'b')) is None

    sets = as_accepts(thompson(parse('a'), ('a', 'b')), (B,))
    assert sets is not None and 0 in sets[0] and 1 not in sets[1]



def _automata_over_a():
    """Every two-state automaton over a with at most two transitions"""

    letters = (A, NEG_A, Letter('a', False, True), Letter('a', True, True), I_LETTER, NEG_I_LETTER)
    pool = [(p, x, q) for p in range(2) for x in letters for q in range(2)]
    for k in range(3):
        for transitions in itertools.combinations(pool, k):
            yield Nfa(2, transitions, 0, 1, ('a',))


def test_pairwise_and_pointwise_saturation_agree():
    subsets = (frozenset(), frozenset({0}), frozenset({1}), frozenset({0, 1}))
    sequences = [seq for length in range(1, 4) for seq in itertools.product(subsets, repeat=length)]

    for m in _automata_over_a():
        for sets in sequences:
            assert pairwise_saturated(m, sets) == pointwise_saturated(m, sets)


def test_nu_xi_phi():
    m = Nfa(2, [(0, A, 1)], 0, 1, ('a',))
    assert nu(m, {0}) == {(0, 1, 0, 1)}
    assert nu(m, {0, 1}) == frozenset()

    # a leaves {0}, -a never moves
    assert xi(m, {0}, (0, 1, 0, 1))
    assert phi(m, nu(m, {0}), {0})
    assert not phi(m, frozenset(), {0})



def test_tuple_set_misses_the_trivial_sets():
    """nu is empty for the empty set and for all states, so phi alone accepts
       a sequence that the pairwise condition rejects
    """

    m = Nfa(2, [(0, NEG_I_LETTER, 1)], 0, 1, ('a',))
    sets = (frozenset({0, 1}), frozenset())
    quads = nu(m, sets[0]) | nu(m, sets[1])

    assert quads == frozenset()
    assert all(phi(m, quads, u) for u in sets)
    assert not pairwise_saturated(m, sets)
    assert not pointwise_saturated(m, sets)



def test_emptiness_finds_the_shortest_refutation(long_negations):
    found = fragment_emptiness(thompson(parse('-a')), long_negations)
    assert found is not None

    word, path = found
    assert word == (NEG_A,)
    assert is_saturable_path(path, long_negations)


def test_emptiness_on_valid_inclusions():
    assert fragment_emptiness(thompson(parse('a*;a')), thompson(parse('a;a*'))) is None
    assert fragment_emptiness(thompson(parse('a;a^;a')), thompson(parse('a;(a^;a)*'))) is None
    assert fragment_emptiness(thompson(parse('a')), thompson(parse('a|-1'), ('a',))) is None


def test_emptiness_with_converse():
    found = fragment_emptiness(thompson(parse('a;a^')), thompson(parse('1'), ('a',)))
    assert found is not None

    word, path = found
    p = structure_of(saturate_from_path(path, thompson(parse('1'), ('a',))))
    assert refutes(p, parse('a;a^'), parse('1'))


def test_emptiness_outside_its_fragments():
    with pytest.raises(FragmentError):
        fragment_emptiness(thompson(parse('-a')), thompson(parse('-1'), ('a',)))



def test_full_search():
    verdict = full_exka_search(thompson(parse('a;b;-a')), thompson(parse('(-1;-a)|(a;-1)')))
    assert verdict.is_valid

    verdict = full_exka_search(thompson(parse('-a')), thompson(parse('-a;-a;(-a)*')))
    assert verdict.is_refuted and verdict.word == (NEG_A,)
    assert refutes(verdict.counterexample, parse('-a'), parse('-a;-a;(-a)*'))
    assert verdict.witness['word'] == ['!a']


def test_full_search_stops_at_the_cap():
    verdict = full_exka_search(thompson(parse('(-1)*')), thompson(parse('(-1)*'), ('a',)), len_cap=3)
    assert verdict.is_unknown and verdict.bound == 3


@pytest.mark.parametrize('lhs, rhs, sigma', [
    ('-a', '-a;-a;(-a)*', ('a',)),
    ('a', 'b', ('a', 'b')),
    ('a;a^', '1', ('a',)),
    ('(-a)*', 'a', ('a',)),
])
def test_full_search_witness_rebuilds_the_counterexample(lhs, rhs, sigma):
    a1, a2 = thompson(parse(lhs), sigma), thompson(parse(rhs), sigma)
    verdict = full_exka_search(a1, a2)
    assert verdict.is_refuted

    witness = verdict.witness
    word = verdict.word
    classes = [0] * (len(word) + 1)
    for k, block in enumerate(witness['I_partition']):
        for i in block:
            classes[i] = k

    path = SaturablePath(word, i_saturation(word, sigma, classes), tuple(frozenset(u) for u in witness['U']))
    assert is_saturable_path(path, a2)

    p = structure_of(saturate_from_path(path, a2))
    assert eval_nfa(p.base, a1)[p.source, p.target]
    assert not eval_nfa(p.base, a2)[p.source, p.target]
    assert refutes(p, parse(lhs), parse(rhs))



def test_state_sets_without_a_saturable_path():
    """The automaton of a;-1 | -1;-a has state sets along a b -a, but every
       saturation of the path graph is accepted
    """

    sigma = ('a', 'b')
    m = thompson(parse('a;-1|-1;-a'), sigma)
    word = (A, B, NEG_A)

    sets = as_accepts(m, word, sigma)
    assert sets is not None
    assert m.initial in sets[0] and m.final not in sets[-1]
    assert all(con(m, x, u, v) for x, u, v in zip(word, sets, sets[1:]))
    assert pairwise_saturated(m, sets)

    assert list(saturable_paths(word, m, sigma)) == []
    assert refuting_saturation(word, m, sigma) is None

    verdict = full_exka_search(thompson(parse('a;b;-a'), sigma), m, len_cap=6)
    assert verdict.is_valid
    assert brute_force_refute(parse('a;b;-a'), parse('a;-1|-1;-a'), 3, '<=') is None


def test_saturable_path_merging_the_ends():
    """a -a refutes -1;(a^;-a^)* only on structures that merge both ends of
       the path
    """

    m = thompson(parse('-1;(a^;-a^)*'), ('a',))
    word = (A, NEG_A)
    paths = list(saturable_paths(word, m))
    assert paths

    merged = [path for path in paths if path.partition() == [[0, 2], [1]]]
    assert merged

    for path in paths:
        assert is_saturable_path(path, m)
        p = structure_of(saturate_from_path(path, m))
        assert holds(p, parse('a;-a'))
        assert not eval_nfa(p.base, m)[p.source, p.target]

    p = structure_of(saturate_from_path(merged[0], m))
    assert p.base.n == 2 and p.source == p.target


def test_valid_inclusions_without_word_inclusion():
    sigma = ('a', 'b')
    for lhs, rhs in [('a', 'a;a^;a'), ('a;b;-a', '(-1;-a)|(a;-1)')]:
        a1, a2 = thompson(parse(lhs), sigma), thompson(parse(rhs), sigma)
        accepted = set(a2.words(4))
        assert any(word not in accepted for word in a1.words(4))
        assert full_exka_search(a1, a2).is_valid
        assert brute_force_refute(parse(lhs), parse(rhs), 3, '<=', sigma) is None
