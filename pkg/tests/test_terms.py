import pytest

from lib.errors import EcorError, FragmentError, TermSyntaxError, UnknownAtomError
from lib.terms import (
    Var, NegVar, ConvVar, ConvNegVar, Id, NegId, Bot, Top, Comp, Union, Inter, Star, Conv, Compl,
    Letter, parse, render, converse_normal_form, size, fragment_of, bar_dual, replace_top,
    word_language, language_inclusion, atoms, decode_word, word_letters,
)
from lib.structures import brute_force_refute


a, b, c = Var('a'), Var('b'), Var('c')



def test_precedence():
    assert parse('a;b|c') == Union(Comp(a, b), c)
    assert parse('a|b&c') == Union(a, Inter(b, c))
    assert parse('a&b;c') == Inter(a, Comp(b, c))
    assert parse('a;b*') == Comp(a, Star(b))
    assert parse('a;b;c') == Comp(Comp(a, b), c)


def test_signed_atoms():
    assert parse('-a') == NegVar('a')
    assert parse('a^') == ConvVar('a')
    assert parse('-a^') == ConvNegVar('a')
    assert parse('--a') == a
    assert parse('-1') == NegId()
    assert parse('1;0;T') == Comp(Comp(Id(), Bot()), Top())


def test_general_terms():
    assert parse('(a;b)^') == Conv(Comp(a, b))
    assert parse('-T') == Compl(Top())
    assert parse('-(-0)') == Bot()


@pytest.mark.parametrize('text, position', [
    ('a;;b', 2),
    ('(a|b', 4),
    ('a # b', 2),
    ('', 0),
])
def test_syntax_errors(text, position):
    with pytest.raises(TermSyntaxError) as error:
        parse(text)
    assert error.value.position == position


def test_complement_of_compound_is_rejected():
    with pytest.raises(TermSyntaxError):
        parse('-(a;b)')


def test_explicit_alphabet():
    assert parse('a;b', ('a', 'b')) == Comp(a, b)
    with pytest.raises(UnknownAtomError):
        parse('a;c', ('a', 'b'))



def test_converse_normal_form():
    assert converse_normal_form(parse('(a;-b)^')) == Comp(ConvNegVar('b'), ConvVar('a'))
    assert converse_normal_form(parse('(a*|1)^')) == Union(Star(ConvVar('a')), Id())
    assert converse_normal_form(parse('(a^)^')) == a
    assert converse_normal_form(parse('-T|-0')) == Union(Bot(), Top())
    assert converse_normal_form(parse('(-1&T)^')) == Inter(NegId(), Top())


def _small_general_terms(draw, count, max_size=8):
    terms = []
    while len(terms) < count:
        t = draw(('a', 'b'), 1 + len(terms) % 4)
        if size(t) <= max_size:
            terms.append(t)
    return terms


def test_converse_normal_form_keeps_the_denotation(general_term_source):
    """Small general terms and their normal forms agree on every structure
       with up to three vertices
    """
    for t in _small_general_terms(general_term_source, 15):
        assert brute_force_refute(t, converse_normal_form(t), 3, '=', ('a', 'b')) is None, t


@pytest.mark.slow
def test_converse_normal_form_keeps_the_denotation_on_a_large_grid(general_term_source):
    for t in _small_general_terms(general_term_source, 300):
        assert brute_force_refute(t, converse_normal_form(t), 3, '=', ('a', 'b')) is None, t


def test_size():
    assert size(parse('a')) == 1
    assert size(parse('-a')) == 2
    assert size(parse('-a^')) == 3
    assert size(parse('a;-b')) == 4
    assert size(parse('(a|1)*')) == 4


def test_fragment_of():
    assert fragment_of(parse('a*&-1')).flags() == ('has_star', 'has_inter', 'has_negid')
    assert fragment_of(parse('a;b')).flags() == ()

    left, right = fragment_of(parse('-a')), fragment_of(parse('T;a^'))
    merged = left.merge(right)
    assert merged.has_negvar and merged.has_top and merged.has_conv
    assert merged.is_star_free and merged.is_intersection_free


def test_bar_dual():
    assert bar_dual(a) == NegVar('a')
    assert bar_dual(ConvNegVar('a')) == ConvVar('a')
    assert bar_dual(Id()) == NegId()
    assert bar_dual(Top()) == Bot()
    with pytest.raises(EcorError):
        bar_dual(Comp(a, b))


def test_replace_top():
    assert replace_top(parse('T;a'), 'a') == Comp(Union(a, NegVar('a')), a)
    assert replace_top(parse('a*&b'), 'a') == parse('a*&b')
    with pytest.raises(EcorError):
        replace_top(Top(), '')


@pytest.mark.parametrize('text', [
    'a;b|c', '(a|b);c', 'a&(b|c)', '-a;(-a)*', 'a^;-b^', '(a;b)^*', '-T|0', 'a;(b;c)', '-1&(1|T)',
])
def test_render_parses_back(text):
    t = parse(text)
    assert parse(render(t)) == t


def test_atoms():
    assert atoms(parse('c;-a^|b*')) == ('a', 'b', 'c')
    assert atoms(parse('1;T')) == ()



def test_word_language():
    assert word_language(parse('a;(b|1)'), 2) == {('a',), ('a', 'b')}
    assert word_language(parse('a*'), 2) == {(), ('a',), ('a', 'a')}
    assert word_language(parse('(a;b)*'), 3) == {(), ('a', 'b')}
    assert word_language(parse('0|1'), 4) == {()}


def test_word_language_rejects_complements():
    with pytest.raises(FragmentError):
        word_language(parse('-a'), 2)


def test_language_inclusion():
    assert language_inclusion(parse('a;a*'), parse('a*;a'), 5)
    assert not language_inclusion(parse('a*'), parse('a;a*'), 5)



def test_letters():
    assert Letter.decode('!a^') == Letter('a', True, True)
    assert Letter.decode('!1').encode() == '!1'
    assert Letter('a').breve() == Letter('a', False, True)
    assert Letter('1', True).breve() == Letter('1', True)
    assert Letter('a', True).bar() == Letter('a')

    with pytest.raises(EcorError):
        Letter.decode('1^')
    with pytest.raises(EcorError):
        decode_word(['a', '1'])

    assert len(word_letters(('a', 'b'))) == 9
