"""Decides equations and inequations between relation terms and reports
counterexamples

Terms use the ASCII syntax: atoms are lowercase identifiers, 1 is the identity,
0 the empty relation and T the full one, -x complements an atom or 1, x^ takes
the converse, ; composes, & intersects, | unites and x* is the reflexive
transitive closure. A query is LHS REL RHS with REL one of <=, = and >=.
A side that starts with - is read as a term, not as an option, e.g.
`python ecor.py decide -a "<=" "-a;-a;(-a)*"`. After a -- separator no side is
rewritten.

The following subcommands are available
    decide
        decides the query with the engine its fragment calls for and prints
        the verdict as JSON
    refute
        only searches for counterexamples, with growing vertex budgets
    oracle
        tries every structure up to a vertex count
    check-model
        checks the query on a structure read from a JSON file
    cfg-reduce
        prints the inequation that is valid exactly when a grammar derives
        every word
    nfa-dump
        prints the automaton of a term without intersection
    glang-dump
        prints the graphs of a term up to a vertex budget

Exit status
    0: valid (or the model satisfies the query), 1: refuted, 2: unknown,
    3: usage, syntax or fragment errors

...

Parameters
    Command (str):
        which subcommand to run

    ----- The following parameters depend on the chosen subcommand -----

    decide / refute:
        LHS, REL, RHS (str):
            the query
        sigma (str, optional):
            comma separated alphabet, default: the atoms of the query
        budget (int, optional):
            vertex budget of the refutation search, default: 5
        len-cap (int, optional):
            longest word the word by word search may try, default: 20
        procedure (str, optional):
            forces one of starfree, graphchar, fragment, full or semi (decide only)
        output (str, optional):
            also write the verdict JSON to this file
        heatmap-plot (str, optional):
            directory to save a heatmap of a counterexample to

    oracle:
        LHS, REL, RHS (str):
            the query
        max-n (int, optional):
            largest vertex count to try, default: 3
        sigma, json:
            as above

    check-model:
        Structure (str):
            path to a structure JSON file {"n", "relations", "source", "target"};
            without source and target the query is checked on all pairs
        LHS, REL, RHS (str):
            the query
        json (flag):
            print JSON instead of text

    cfg-reduce:
        Grammar (str):
            path to a grammar file, one rule "X -> alpha | beta" per line
        word (str, optional):
            whitespace separated terminals; also checks the canonical model of
            the word against the reduced inequation

    nfa-dump / glang-dump:
        Term (str):
            the term
        dot (flag):
            print Graphviz DOT instead of JSON
        budget (int, optional):
            vertex budget of glang-dump, default: 1 + the size of the term
        sigma, output:
            as above

Environment
    ECOR_THREADS caps the worker threads, ECOR_MAX_VERTICES the structure size
"""


import argparse
import json
import logging
import os
import sys

import lib.decide as decide
import lib.structures as structures
import lib.terms as terms
from lib.errors import EcorError


EXIT_VALID   = 0
EXIT_REFUTED = 1
EXIT_UNKNOWN = 2
EXIT_ERROR   = 3

EXIT_OF = {'valid': EXIT_VALID, 'refuted': EXIT_REFUTED, 'unknown': EXIT_UNKNOWN}

QUERY_COMMANDS = ('decide', 'refute', 'oracle', 'check-model')



def positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError('{!r} is not an integer'.format(text))
    if value < 1:
        raise argparse.ArgumentTypeError('{} is not positive'.format(value))
    return value


def _add_query(p: argparse.ArgumentParser):
    p.add_argument('LHS', help='The left side')
    p.add_argument('REL', choices=decide.RELATIONS, help='<=, = or >=')
    p.add_argument('RHS', help='The right side')
    p.add_argument('--sigma', '-s',
                    help='Comma separated alphabet, default: the atoms of the query')


def _add_verbose(p: argparse.ArgumentParser):
    p.add_argument('--verbose', '-v', action='count', default=0,
                    help='-v logs progress, -vv logs search details')


def build_parser() -> argparse.ArgumentParser:

    parser = argparse.ArgumentParser(prog='ecor')
    subparser = parser.add_subparsers(dest='Command')
    subparser.required = True


    for name in ('decide', 'refute'):
        dec = subparser.add_parser(name)
        _add_query(dec)
        _add_verbose(dec)
        dec.add_argument('--budget', '-b', type=positive_int,
                          help='Vertex budget of the refutation search')
        dec.add_argument('--len-cap', type=positive_int,
                          help='Longest word the word by word search may try')
        if name == 'decide':
            dec.add_argument('--procedure', '-p', choices=decide.PROCEDURES,
                              help='Force one engine')
        dec.add_argument('--json', action='store_true',
                          help='Accepted for symmetry, the verdict is always JSON')
        dec.add_argument('--output', '-o',
                          help='Also write the verdict JSON to this file')
        dec.add_argument('--heatmap-plot', '-hmp',
                          help='Where to save the heatmap of a counterexample')


    oracle = subparser.add_parser('oracle')
    _add_query(oracle)
    _add_verbose(oracle)
    oracle.add_argument('--max-n', '-n', type=positive_int, default=3,
                         help='Largest vertex count to try')
    oracle.add_argument('--json', action='store_true',
                         help='Print JSON instead of text')


    check = subparser.add_parser('check-model')
    check.add_argument('Structure',
                        help='Structure JSON file')
    _add_query(check)
    _add_verbose(check)
    check.add_argument('--json', action='store_true',
                        help='Print JSON instead of text')


    cfg = subparser.add_parser('cfg-reduce')
    cfg.add_argument('Grammar',
                      help='Grammar file')
    _add_verbose(cfg)
    cfg.add_argument('--word', '-w',
                      help='Whitespace separated terminals to check the reduction on')
    cfg.add_argument('--json', action='store_true',
                      help='Print JSON instead of text')


    for name in ('nfa-dump', 'glang-dump'):
        dump = subparser.add_parser(name)
        dump.add_argument('Term', help='The term')
        dump.add_argument('--sigma', '-s',
                           help='Comma separated alphabet, default: the atoms of the term')
        _add_verbose(dump)
        dump.add_argument('--dot', action='store_true',
                           help='Print Graphviz DOT instead of JSON')
        dump.add_argument('--output', '-o',
                           help='Write to this file instead of standard output')
        if name == 'glang-dump':
            dump.add_argument('--budget', '-b', type=positive_int,
                               help='Vertex budget, default: 1 + the size of the term')

    return parser



def _sigma(text):
    return None if not text else tuple(a.strip() for a in text.split(',') if a.strip())


def _emit(text: str, output=None):
    if output:
        out_file = os.path.abspath(output)
        with open(out_file, 'w') as f:
            f.write(text + '\n')
        print('Saved output to {}'.format(out_file), file=sys.stderr)
    else:
        print(text)


def _configure_logging(verbose: int):
    level = logging.WARNING if verbose == 0 else logging.INFO if verbose == 1 else logging.DEBUG
    logging.basicConfig(level=level, stream=sys.stderr,
                        format='%(asctime)s %(levelname)s %(name)s: %(message)s')



def _decide(args) -> int:

    options = decide.Options.from_env(
        budget=args.budget,
        len_cap=args.len_cap,
        procedure='semi' if args.Command == 'refute' else args.procedure,
    )
    q = decide.Query.parse(args.LHS, args.REL, args.RHS, _sigma(args.sigma), options)

    if args.heatmap_plot and not os.path.isdir(args.heatmap_plot):
        raise EcorError('No directory at {}'.format(os.path.abspath(args.heatmap_plot)))

    verdict = decide.decide(q)

    text = json.dumps(verdict.to_json())
    print(text)
    if args.output:
        _emit(text, args.output)

    if verdict.is_refuted and args.heatmap_plot:
        import matplotlib.pyplot as plt
        import lib.plot as plot

        p = verdict.counterexample
        fig = plot.relation_heatmap(p.base, p.source, p.target)
        out_file = os.path.join(os.path.abspath(args.heatmap_plot), 'counterexample.png')
        fig.savefig(out_file)
        plt.close(fig)
        print('Saved output to {}'.format(out_file), file=sys.stderr)

    return EXIT_OF[verdict.kind]


def _oracle(args) -> int:

    q = decide.Query.parse(args.LHS, args.REL, args.RHS, _sigma(args.sigma))
    found = structures.brute_force_refute(q.lhs, q.rhs, args.max_n, q.relation, q.sigma)

    if args.json:
        doc = {'max_n': args.max_n, 'counterexample': None}
        if found is not None:
            doc['counterexample'] = found[0].to_json()
            doc['direction'] = found[1]
        print(json.dumps(doc))
    elif found is None:
        print('no counterexample with at most {} vertices'.format(args.max_n))
    else:
        print('counterexample to {} {} {}:'.format(terms.render(q.lhs), found[1], terms.render(q.rhs)))
        print(json.dumps(found[0].to_json()))

    return EXIT_VALID if found is None else EXIT_REFUTED


def _check_model(args) -> int:

    path = os.path.abspath(args.Structure)
    if not os.path.isfile(path):
        raise EcorError('No structure at {}'.format(path))

    structure, source, target = structures.load_structure(path, _sigma(args.sigma))
    q = decide.Query.parse(args.LHS, args.REL, args.RHS, structure.sigma)

    if source is None:
        check = structures.models_equation if q.relation == '=' else structures.models_inequation
        satisfied = check(structure, q.lhs, q.rhs)
    else:
        p = structures.PointedStructure(structure, source, target)
        satisfied = not any(structures.refutes(p, lhs, rhs) for lhs, rhs, _ in q.inclusions())

    if args.json:
        print(json.dumps({'query': str(q), 'pointed': source is not None, 'satisfied': satisfied}))
    else:
        print('{} {}'.format('satisfies' if satisfied else 'violates', q))

    return EXIT_VALID if satisfied else EXIT_REFUTED


def _cfg_reduce(args) -> int:
    import lib.cfg as cfg

    grammar = cfg.load_grammar(args.Grammar)
    q = cfg.reduce_universality(grammar)

    if args.word is None:
        print(json.dumps({'query': str(q), 'sigma': list(q.sigma)}) if args.json else str(q))
        return EXIT_VALID

    word = cfg.parse_word(args.word, grammar)
    model, expected = cfg.counterexample_from_word(grammar, word)
    violated = structures.refutes(model, q.lhs, q.rhs)
    if violated != expected:
        raise EcorError('the canonical model disagrees with derivability on {!r}'.format(args.word))

    if args.json:
        print(json.dumps({'query': str(q), 'word': list(word), 'derives': not expected,
                          'counterexample': model.to_json() if violated else None}))
    else:
        print(str(q))
        print('{} {} the word'.format(grammar.start, 'does not derive' if expected else 'derives'))

    return EXIT_REFUTED if violated else EXIT_VALID


def _dump(args) -> int:
    import lib.graphs as graphs
    import lib.nfa as nfa

    sigma = _sigma(args.sigma)
    t = terms.converse_normal_form(terms.parse(args.Term, sigma or 'infer'))
    sigma = sigma or terms.atoms(t) or ('a',)

    if args.Command == 'nfa-dump':
        automaton = nfa.thompson(t, sigma)
        text = automaton.to_dot() if args.dot else json.dumps(automaton.to_json())
    else:
        budget = args.budget or 1 + terms.size(t)
        members = list(graphs.glang(t, budget, sigma))
        if args.dot:
            text = '\n'.join(g.to_dot('G{}'.format(i)) for i, g in enumerate(members))
        else:
            text = json.dumps([g.to_json() for g in members])

    _emit(text, args.output)
    return EXIT_VALID



COMMANDS = {
    'decide': _decide,
    'refute': _decide,
    'oracle': _oracle,
    'check-model': _check_model,
    'cfg-reduce': _cfg_reduce,
    'nfa-dump': _dump,
    'glang-dump': _dump,
}


def protect_sides(argv):
    """Puts the sides of a query that start with - in parentheses

    argparse reads such sides as options. The first REL token after the
    subcommand marks the query. Arguments holding a -- separator stay as they
    are.
    """

    argv = list(argv)
    if not argv or argv[0] not in QUERY_COMMANDS or '--' in argv:
        return argv

    for i in range(2, len(argv) - 1):
        if argv[i] in decide.RELATIONS:
            for k in (i - 1, i + 1):
                if argv[k].startswith('-'):
                    argv[k] = '({})'.format(argv[k])
            break

    return argv


def run(argv=None) -> int:
    """Runs one subcommand and returns its exit status"""

    argv = protect_sides(sys.argv[1:] if argv is None else argv)

    try:
        args = build_parser().parse_args(argv)
    except SystemExit as stop:
        return EXIT_VALID if stop.code in (0, None) else EXIT_ERROR

    _configure_logging(args.verbose)

    try:
        return COMMANDS[args.Command](args)
    except EcorError as error:
        print('ecor: error: {}'.format(error), file=sys.stderr)
        return EXIT_ERROR



if __name__ == '__main__':
    sys.exit(run())
