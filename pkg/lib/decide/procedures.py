import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import replace
from typing import Callable, List, Optional, Sequence, TypeVar

from ..errors import EcorError, FragmentError
from ..terms import Term, size
from ..structures import refutes
from ..graphs import (
    Graph, Judge, glang, find_quotient_saturation, structure_of, term_judge, homomorphism_judge,
)
from ..nfa import Nfa, thompson
from ..satpath import fragment_emptiness, full_exka_search, saturate_from_path
from ..verdict import Verdict
from .query import Query


logger = logging.getLogger(__name__)


T = TypeVar('T')
R = TypeVar('R')

# candidates handed to the workers per round
CHUNK_PER_THREAD = 4

Inclusion = Callable[[Term, Term, Query], Verdict]



def first_hit(items: Sequence[T], check: Callable[[T], Optional[R]], threads: int = 1) -> Optional[R]:
    """The result of the first item (in order) whose check is not None

    With several threads the items are checked chunk by chunk and the results
    read in submission order, so the answer does not depend on scheduling.
    """

    if threads <= 1:
        for item in items:
            found = check(item)
            if found is not None:
                return found
        return None

    chunk = threads * CHUNK_PER_THREAD
    with ThreadPoolExecutor(max_workers=threads) as pool:
        for start in range(0, len(items), chunk):
            for found in pool.map(check, items[start:start + chunk]):
                if found is not None:
                    return found

    return None



def _require_star_free(q: Query, name: str):
    if not q.fragment().is_star_free:
        raise FragmentError('the {} procedure needs star-free terms'.format(name))


def _saturation_refuter(judge: Judge):

    def check(g: Graph):
        found = find_quotient_saturation(g, judge)
        return None if found is None else found[0]

    return check


def _graph_search(lhs: Term, q: Query, judge: Judge, name: str) -> Verdict:

    graphs = list(glang(lhs, 1 + size(lhs), q.sigma))
    logger.info('%s: %d graphs on the left', name, len(graphs))

    found = first_hit(graphs, _saturation_refuter(judge), q.options.threads)
    if found is not None:
        return Verdict.refuted(found, '<=', procedure=name)
    return Verdict.valid(name)


def starfree_inclusion(lhs: Term, rhs: Term, q: Query) -> Verdict:
    """lhs <= rhs for star-free terms by model checking the saturations of
       every graph of lhs
    """

    _require_star_free(q, 'starfree')
    return _graph_search(lhs, q, term_judge(rhs), 'starfree')


def graphchar_inclusion(lhs: Term, rhs: Term, q: Query) -> Verdict:
    """lhs <= rhs for star-free terms by homomorphisms from the graphs of rhs
       into the saturations of every graph of lhs
    """

    _require_star_free(q, 'graphchar')
    rhs_graphs = list(glang(rhs, 1 + size(rhs), q.sigma))
    return _graph_search(lhs, q, homomorphism_judge(q.sigma, rhs_graphs), 'graphchar')



def _automata(lhs: Term, rhs: Term, q: Query):
    if not q.fragment().is_intersection_free:
        raise FragmentError('automata need intersection-free terms')
    return thompson(lhs, q.sigma), thompson(rhs, q.sigma)


def _emptiness(a1: Nfa, a2: Nfa) -> Verdict:

    found = fragment_emptiness(a1, a2)
    if found is None:
        return Verdict.valid('fragment')

    word, path = found
    structure = structure_of(saturate_from_path(path, a2))

    return Verdict.refuted(structure, '<=', word=word, witness=path.to_json(structure), procedure='fragment')


def _in_fragment(a1: Nfa, a2: Nfa) -> bool:
    """a2 never reads I- or a1 never reads a complemented atom"""

    reads_neg_i = a2.has_letter(lambda x: x.is_identity() and x.negated)
    reads_neg_atom = a1.has_letter(lambda x: x.negated and not x.is_identity())

    return not reads_neg_i or not reads_neg_atom


def fragment_inclusion(lhs: Term, rhs: Term, q: Query) -> Verdict:
    """lhs <= rhs by the emptiness search

    Raises:
        FragmentError: when rhs reads I- and lhs reads complemented atoms
    """
    return _emptiness(*_automata(lhs, rhs, q))


def full_inclusion(lhs: Term, rhs: Term, q: Query) -> Verdict:
    a1, a2 = _automata(lhs, rhs, q)
    return full_exka_search(a1, a2, q.options.len_cap)


def intersection_free_inclusion(lhs: Term, rhs: Term, q: Query) -> Verdict:
    """The exact emptiness search inside its two fragments, the capped word by
       word search outside them
    """

    a1, a2 = _automata(lhs, rhs, q)
    exact = _in_fragment(a1, a2)
    logger.info('intersection-free inclusion, %s search', 'emptiness' if exact else 'word by word')

    if exact:
        return _emptiness(a1, a2)
    return full_exka_search(a1, a2, q.options.len_cap)


def semi_inclusion(lhs: Term, rhs: Term, q: Query) -> Verdict:
    """Searches counterexamples among the saturations of the graphs of lhs
       with growing vertex counts; never answers valid
    """

    judge = term_judge(rhs)
    check = _saturation_refuter(judge)

    for level in range(1, q.options.budget + 1):
        graphs = [g for g in glang(lhs, level, q.sigma) if g.n == level]
        logger.debug('semi-procedure: %d graphs with %d vertices', len(graphs), level)

        found = first_hit(graphs, check, q.options.threads)
        if found is not None:
            return Verdict.refuted(found, '<=', procedure='semi')

    return Verdict.unknown(q.options.budget, 'semi')



_ENGINES = {
    'starfree': starfree_inclusion,
    'graphchar': graphchar_inclusion,
    'fragment': fragment_inclusion,
    'full': full_inclusion,
    'semi': semi_inclusion,
}


def _route(q: Query) -> str:
    fragment = q.fragment()
    if fragment.is_star_free:
        return 'starfree'
    if fragment.is_intersection_free:
        return 'intersection-free'
    return 'semi'


def _engine(name: str) -> Inclusion:
    if name == 'intersection-free':
        return intersection_free_inclusion
    return _ENGINES[name]


def _verified(verdict: Verdict, q: Query) -> Verdict:
    if verdict.is_refuted and not refutes(verdict.counterexample, q.lhs, q.rhs, verdict.direction):
        raise EcorError('the {} procedure returned a structure that does not refute {}'.format(
            verdict.procedure, q))
    return verdict


def _run(q: Query, engine: Inclusion) -> Verdict:
    """Checks the inclusions of a query in order; an equation is valid when
       both are
    """

    verdicts: List[Verdict] = []
    for lhs, rhs, direction in q.inclusions():
        verdict = engine(lhs, rhs, q)
        if direction == '>=':
            verdict = verdict.flipped()
        if verdict.is_refuted:
            return _verified(verdict, q)
        verdicts.append(verdict)

    unknown = [v for v in verdicts if v.is_unknown]
    if unknown:
        return unknown[0]
    return verdicts[-1]



def decide_starfree(q: Query) -> Verdict:
    """Decides a star-free query exactly

    Raises:
        FragmentError: when a side contains a star
    """
    return _run(q, starfree_inclusion)


def graph_characterization_check(q: Query) -> Verdict:
    """Decides a star-free query through graph homomorphisms, independently of
       decide_starfree
    """
    return _run(q, graphchar_inclusion)


def decide_intersection_free(q: Query) -> Verdict:
    return _run(q, intersection_free_inclusion)


def semidecide_ecorstar(q: Query, budget: Optional[int] = None) -> Verdict:
    """Refutes a query of any fragment or gives up at the vertex budget
       (Options.budget unless given)
    """

    if budget is not None:
        q = replace(q, options=replace(q.options, budget=budget))
    return _run(q, semi_inclusion)


def decide(q: Query) -> Verdict:
    """Decides (or semi-decides) a query with the engine its fragment calls for

    Star-free queries are decided exactly, intersection-free ones by the
    automata searches, and everything else by the refutation semi-procedure.
    Options.procedure forces one engine. Every refutation is checked against
    the query before it is returned.

    Returns:
        Verdict

    Raises:
        FragmentError: when a forced engine does not apply to the query
        EcorError: when a refutation fails its check
    """

    name = q.options.procedure or _route(q)
    logger.info('deciding %s with the %s procedure', q, name)

    verdict = _run(q, _engine(name))
    logger.info('verdict: %s', verdict.kind)

    return verdict
