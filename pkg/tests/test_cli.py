import json

import pytest

import ecor


def _run(capsys, *argv):
    status = ecor.run(list(argv))
    out, err = capsys.readouterr()
    return status, out, err



def test_decide_valid(capsys):
    status, out, _ = _run(capsys, 'decide', 'T', '<=', 'a|-a')
    assert status == ecor.EXIT_VALID
    assert json.loads(out) == {'verdict': 'valid', 'procedure': 'starfree'}


def test_decide_refuted(capsys, tmp_path):
    target = tmp_path / 'verdict.json'
    status, out, err = _run(capsys, 'decide', '(-a)', '<=', '(-a);-a;(-a)*', '--output', str(target))
    assert status == ecor.EXIT_REFUTED
    assert 'Saved output to' in err

    doc = json.loads(out)
    assert doc['verdict'] == 'refuted' and doc['word'] == ['!a']
    assert doc['counterexample']['n'] == 2
    assert json.loads(target.read_text()) == doc


def test_decide_forced_procedure(capsys):
    status, out, _ = _run(capsys, 'decide', 'a^;(-a)', '<=', '(-1)', '--procedure', 'graphchar')
    assert status == ecor.EXIT_VALID
    assert json.loads(out)['procedure'] == 'graphchar'


def test_refute(capsys):
    status, out, _ = _run(capsys, 'refute', 'a*', '<=', 'b', '--budget', '2')
    assert status == ecor.EXIT_REFUTED
    assert json.loads(out)['procedure'] == 'semi'

    status, out, _ = _run(capsys, 'refute', '(a&b)*', '<=', '(b&a)*', '-b', '2')
    assert status == ecor.EXIT_UNKNOWN
    assert json.loads(out)['bound'] == 2


def test_heatmap(capsys, tmp_path):
    pytest.importorskip('seaborn')
    status, _, _ = _run(capsys, 'decide', 'a', '<=', 'a;a', '--heatmap-plot', str(tmp_path))
    assert status == ecor.EXIT_REFUTED
    assert (tmp_path / 'counterexample.png').exists()



def test_oracle(capsys):
    status, out, _ = _run(capsys, 'oracle', 'a;b;(-a)', '<=', '(-1;-a)|(a;-1)')
    assert status == ecor.EXIT_VALID
    assert 'no counterexample' in out

    status, out, _ = _run(capsys, 'oracle', 'a', '=', 'b', '--json', '--max-n', '1')
    assert status == ecor.EXIT_REFUTED
    assert json.loads(out)['counterexample']['n'] == 1


def test_check_model(capsys, tmp_path):
    path = tmp_path / 'h.json'
    path.write_text(json.dumps({'n': 2, 'relations': {'a': [[0, 0], [1, 0], [1, 1]]}, 'source': 0, 'target': 1}))

    status, out, _ = _run(capsys, 'check-model', str(path), '(-a)', '<=', '(-a);-a;(-a)*', '--json')
    assert status == ecor.EXIT_REFUTED
    assert json.loads(out) == {'query': '-a <= -a;-a;(-a)*', 'pointed': True, 'satisfied': False}

    path.write_text(json.dumps({'n': 2, 'relations': {'a': [[0, 1]]}}))
    status, out, _ = _run(capsys, 'check-model', str(path), 'T', '=', 'a|(-a)')
    assert status == ecor.EXIT_VALID
    assert out.startswith('satisfies')

    path.write_text(json.dumps({'n': 2, 'relations': {'a': [[0, 0], [1, 0], [1, 1]]}, 'source': 0, 'target': 1}))
    status, out, _ = _run(capsys, 'check-model', str(path), '-a', '<=', '-a;-a;(-a)*')
    assert status == ecor.EXIT_REFUTED
    assert out.startswith('violates')



def test_cfg_reduce(capsys, tmp_path):
    path = tmp_path / 'dyck.cfg'
    path.write_text('S -> l S r S | eps\n')

    status, out, _ = _run(capsys, 'cfg-reduce', str(path))
    assert status == ecor.EXIT_VALID
    assert out.strip().startswith('(l|r)* <= n_s|')

    status, out, _ = _run(capsys, 'cfg-reduce', str(path), '--word', 'l r', '--json')
    assert status == ecor.EXIT_VALID
    assert json.loads(out)['derives'] is True

    status, out, _ = _run(capsys, 'cfg-reduce', str(path), '--word', 'l', '--json')
    assert status == ecor.EXIT_REFUTED
    doc = json.loads(out)
    assert doc['derives'] is False and doc['counterexample']['n'] == 2



def test_dumps(capsys, tmp_path):
    status, out, _ = _run(capsys, 'nfa-dump', 'a;b', '--dot')
    assert status == ecor.EXIT_VALID
    assert out.startswith('digraph A {')

    status, out, _ = _run(capsys, 'nfa-dump', 'a*')
    assert json.loads(out)['states'] == 4

    status, out, _ = _run(capsys, 'glang-dump', 'a*', '--budget', '3')
    assert [g['n'] for g in json.loads(out)] == [1, 2, 3]

    target = tmp_path / 'g.dot'
    status, out, _ = _run(capsys, 'glang-dump', 'a|b', '--dot', '--output', str(target))
    assert target.read_text().count('digraph') == 2




@pytest.mark.parametrize('argv', [
    ['decide', '-a', '<=', '-a;-a;(-a)*'],
    ['decide', '-a', '<=', '-a;-a;(-a)*', '-b', '3'],
    ['decide', '-b', '3', '-a', '<=', '-a;-a;(-a)*'],
    ['refute', '-a', '<=', '-a;-a;(-a)*'],
])
def test_sides_starting_with_complement(capsys, argv):
    status, out, _ = _run(capsys, *argv)
    assert status == ecor.EXIT_REFUTED
    doc = json.loads(out)
    assert doc['verdict'] == 'refuted'
    assert doc['counterexample']['n'] <= 3


def test_protect_sides():
    assert ecor.protect_sides(['decide', '-a', '>=', 'b']) == ['decide', '(-a)', '>=', 'b']
    assert ecor.protect_sides(['oracle', 'a', '=', '-1']) == ['oracle', 'a', '=', '(-1)']
    assert ecor.protect_sides(['nfa-dump', '-a']) == ['nfa-dump', '-a']
    assert ecor.protect_sides(['decide', '--', '-a', '<=', 'b']) == ['decide', '--', '-a', '<=', 'b']


def test_oracle_bare_complement(capsys):
    status, out, _ = _run(capsys, 'oracle', '-a', '<=', '-a;-a;(-a)*', '--max-n', '2')
    assert status == ecor.EXIT_REFUTED
    assert 'counterexample to -a <= -a;-a;(-a)*' in out

@pytest.mark.parametrize('argv', [
    ['decide', 'a;;b', '<=', 'a'],
    ['decide', 'a', '<', 'b'],
    ['decide', 'a'],
    ['decide', 'a*', '<=', 'a', '--procedure', 'starfree'],
    ['nfa-dump', 'a&b'],
    ['check-model', 'missing.json', 'a', '<=', 'a'],
    ['decide', 'a', '<=', 'b', '--budget', '0'],
    ['refute', 'a', '<=', 'b', '--len-cap', 'x'],
    ['oracle', 'a', '<=', 'b', '-n', '0'],
    ['oracle', 'a', '<=', 'b', '-n', '8'],
    ['glang-dump', 'a', '--budget', '-1'],
    ['decide', 'a', '<=', 'b', '--heatmap-plot', 'missing-dir'],
    ['cfg-reduce', 'missing.cfg'],
])
def test_errors(capsys, argv):
    assert ecor.run(argv) == ecor.EXIT_ERROR


def test_error_message(capsys):
    ecor.run(['decide', 'a;;b', '<=', 'a'])
    assert 'ecor: error:' in capsys.readouterr().err


def test_internal_failures_propagate(monkeypatch):

    def broken(q):
        raise AssertionError('broken invariant')

    monkeypatch.setattr(ecor.decide, 'decide', broken)
    with pytest.raises(AssertionError):
        ecor.run(['decide', 'a', '<=', 'b'])
