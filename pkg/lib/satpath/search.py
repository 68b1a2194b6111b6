import logging
from collections import deque
from typing import Dict, FrozenSet, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from ..errors import EcorError, FragmentError
from ..terms import Letter, NEG_I_LETTER
from ..graphs import Judge, graph_of_word, equivalence_closure, search_quotient_saturations
from ..nfa import Nfa, eval_nfa_with, states_of
from ..verdict import Verdict
from .path import (
    SaturablePath, StateSet, con_mask, sat_pair_mask, i_saturation, is_saturable_path, canonical_sets,
)


logger = logging.getLogger(__name__)


# the exhaustive search never looks at words of this length or longer
MAX_LEN_CAP = 20

# state sets are enumerated over at most this many relevant states
MAX_CORE_STATES = 18



def _joint_sigma(*automata: Nfa) -> Tuple[str, ...]:
    return tuple(sorted(set().union(*(m.sigma for m in automata))))


class _StateSets:
    """The state sets a search may put on a path vertex, with a memo of which
       pairs of them satisfy the saturation condition both ways

       Only states touched by some transition (and the initial and final
       state) matter; the sets are closed under epsilon moves and satisfy the
       saturation condition against themselves.
    """

    def __init__(self, a: Nfa, sigma: Sequence[str]):

        self.__a = a
        self.__sigma = tuple(sigma)

        core = {a.initial, a.final}
        for p, _, q in a.all_transitions():
            core.update((p, q))
        core = sorted(core)

        if len(core) > MAX_CORE_STATES:
            raise EcorError('{} relevant states, the state set search is limited to {}'.format(
                len(core), MAX_CORE_STATES))

        self.masks: List[int] = []
        for bits in range(1 << len(core)):
            mask = 0
            for k, q in enumerate(core):
                if bits >> k & 1:
                    mask |= 1 << q
            if a.closure_mask(mask) == mask and sat_pair_mask(a, self.__sigma, mask, mask):
                self.masks.append(mask)

        self.__compatible: Dict[Tuple[int, int], bool] = {}
        logger.debug('%d admissible state sets over %d states', len(self.masks), len(core))


    def compatible(self, u: int, v: int) -> bool:
        key = (u, v) if u <= v else (v, u)
        if key not in self.__compatible:
            self.__compatible[key] = (sat_pair_mask(self.__a, self.__sigma, u, v)
                                      and sat_pair_mask(self.__a, self.__sigma, v, u))
        return self.__compatible[key]



def as_accepts(a: Nfa, word: Sequence[Letter], sigma: Optional[Sequence[str]] = None) -> Optional[Tuple[StateSet, ...]]:
    """Searches state sets U_0..U_n along a word as the saturable path
       automaton of a would

    The sets must be closed under epsilon moves, the first must hold the
    initial state and the last must miss the final state, consecutive sets
    must satisfy Con for the letter between them, and every pair of sets must
    satisfy the saturation condition. The identity is always taken as I, so an
    answer does not guarantee a saturable path when a reads I- and the word
    reads complemented atoms.

    Returns:
        tuple of frozenset or None: the sets, or None when there are none
    """

    word = tuple(word)
    sets = _StateSets(a, sigma if sigma is not None else a.sigma)
    n = len(word)

    def extend(chosen: List[int], allowed: List[int]) -> Optional[List[int]]:

        i = len(chosen)
        if i == n + 1:
            return list(chosen)

        for u in allowed:
            if i == 0 and not u >> a.initial & 1:
                continue
            if i > 0 and not con_mask(a, word[i - 1], chosen[-1], u):
                continue
            if i == n and u >> a.final & 1:
                continue

            narrowed = [v for v in allowed if sets.compatible(u, v)]
            if i < n and not narrowed:
                continue

            chosen.append(u)
            found = extend(chosen, narrowed)
            if found is not None:
                return found
            chosen.pop()

        return None

    found = extend([], sets.masks)
    return None if found is None else tuple(states_of(u) for u in found)



def _identity_classes(a2: Nfa, sets: Sequence[int], use_identity: bool) -> Tuple[int, ...]:

    n = len(sets)
    if use_identity:
        return tuple(range(n))

    related = np.array([[i == j or not con_mask(a2, NEG_I_LETTER, sets[i], sets[j]) for j in range(n)]
                        for i in range(n)], dtype=bool)
    closure = equivalence_closure(related)
    if not np.array_equal(closure, related):
        raise EcorError('the identity relation read off the state sets is not an equivalence')

    first = np.argmax(closure, axis=1)
    order = {v: k for k, v in enumerate(sorted(set(int(f) for f in first)))}
    return tuple(order[int(f)] for f in first)


def _negates_atoms(x: Letter) -> bool:
    return x.negated and not x.is_identity()


def fragment_emptiness(a1: Nfa, a2: Nfa) -> Optional[Tuple[Tuple[Letter, ...], SaturablePath]]:
    """Searches a word accepted by a1 that carries a saturable path for a2

    The product of a1 with the saturable path automaton of a2 is explored
    breadth first, one letter per layer. The tuple set of that automaton is
    never built: a search state keeps the state sets seen so far instead and
    admits a new set only if it is compatible with all of them. Per a1 state
    and current set only the search states with minimal seen sets are kept.
    When a2 reads no complemented letter every two sets are compatible and
    the seen sets are not tracked.

    The answer is exact when a2 never reads I- or a1 never reads a
    complemented atom.

    Returns:
        tuple or None: the shortest such word with its saturable path, or None
            when the intersection is empty

    Raises:
        FragmentError: outside both fragments
    """

    identity_only = not a2.has_letter(lambda x: x == NEG_I_LETTER)
    if not identity_only and a1.has_letter(_negates_atoms):
        raise FragmentError('the right automaton reads I- and the left one reads complemented atoms')

    sigma = _joint_sigma(a1, a2)
    sets = _StateSets(a2, sigma)
    letters = a1.letters()
    tracked = a2.has_letter(lambda x: x.negated)

    Node = Tuple[int, int, FrozenSet[int]]
    parents: Dict[Node, Optional[Tuple[Node, Letter]]] = {}
    minimal: Dict[Tuple[int, int], List[FrozenSet[int]]] = {}

    def admit(node: Node, parent) -> bool:
        q, u, seen = node
        kept = minimal.setdefault((q, u), [])
        if any(old <= seen for old in kept):
            return False
        kept[:] = [old for old in kept if not seen <= old]
        kept.append(seen)
        parents[node] = parent
        return True

    layer = deque()
    for q in sorted(a1.closure([a1.initial])):
        for u in sets.masks:
            if u >> a2.initial & 1:
                node = (q, u, frozenset([u]) if tracked else frozenset())
                if admit(node, None):
                    layer.append(node)

    length = 0
    while layer:
        logger.debug('emptiness search: %d states at length %d', len(layer), length)

        for node in layer:
            q, u, _ = node
            if q == a1.final and not u >> a2.final & 1:
                return _witness(node, parents, a2, sigma, identity_only)

        grown = deque()
        for node in layer:
            q, u, seen = node
            for x in letters:
                for q2 in sorted(a1.closure(a1.step([q], x))):
                    for v in sets.masks:
                        if not con_mask(a2, x, u, v):
                            continue
                        if tracked and v not in seen and not all(sets.compatible(v, w) for w in seen):
                            continue
                        child = (q2, v, seen | {v} if tracked else seen)
                        if child not in parents and admit(child, (node, x)):
                            grown.append(child)

        layer = grown
        length += 1

    return None


def _witness(node, parents, a2: Nfa, sigma, identity_only: bool):

    word, masks = [], []
    while node is not None:
        masks.append(node[1])
        step = parents[node]
        if step is None:
            break
        node, x = step
        word.append(x)

    word.reverse()
    masks.reverse()

    classes = _identity_classes(a2, masks, identity_only)
    path = SaturablePath(tuple(word), i_saturation(word, sigma, classes), tuple(states_of(u) for u in masks))

    if not is_saturable_path(path, a2):
        raise EcorError('the emptiness search produced an invalid saturable path')

    return tuple(word), path



def nfa_judge(a: Nfa) -> Judge:
    """Accepts partial labellings on which the automaton fails at (source,
       target); see term_judge
    """

    def judge(lower, upper, s, t):
        if eval_nfa_with(lower, a)[s, t]:
            return False
        if not eval_nfa_with(upper, a)[s, t]:
            return True
        return None

    return judge


def refuting_saturation(word: Sequence[Letter], a: Nfa, sigma: Sequence[str]):
    """The first saturation of the path graph of word whose quotient refutes a"""

    for found in search_quotient_saturations(graph_of_word(word, sigma), nfa_judge(a)):
        return found
    return None


def saturable_paths(word: Sequence[Letter], a: Nfa, sigma: Optional[Sequence[str]] = None) -> Iterator[SaturablePath]:
    """Every saturable path for refuting word <= a, one per distinct I
       partition and state sets
    """

    word = tuple(word)
    sigma = tuple(sigma) if sigma is not None else _joint_sigma(a)
    seen = set()

    for structure, classes in search_quotient_saturations(graph_of_word(word, sigma), nfa_judge(a), exhaustive=True):
        sets = canonical_sets(structure, classes, a)
        key = (classes, sets)
        if key in seen:
            continue
        seen.add(key)
        yield SaturablePath(word, i_saturation(word, sigma, classes), sets)



def full_exka_search(a1: Nfa, a2: Nfa, len_cap: int = MAX_LEN_CAP) -> Verdict:
    """Decides a1 <= a2 word by word up to a length cap

    Every word of a1 shorter than the cap is tested by searching the
    saturations of its path graph for one whose quotient refutes a2. A
    counterexample, if any exists, has a word shorter than
    |a1| * 2^|a2|; when the cap reaches that bound, or the language of a1 is
    finite and below the cap, an empty search proves validity.

    Returns:
        Verdict: refuted with the structure, word and saturable path; valid;
            or unknown with the cap
    """

    sigma = _joint_sigma(a1, a2)
    bound = a1.n_states * 2 ** a2.n_states
    cap = min(bound, len_cap, MAX_LEN_CAP)

    tried = 0
    for word in a1.words(cap - 1):
        tried += 1
        found = refuting_saturation(word, a2, sigma)
        if found is None:
            continue

        structure, classes = found
        sets = canonical_sets(structure, classes, a2)
        path = SaturablePath(word, i_saturation(word, sigma, classes), sets)
        if not is_saturable_path(path, a2):
            raise EcorError('the word search produced an invalid saturable path')
        logger.info('refuting word of length %d after %d words', len(word), tried)

        return Verdict.refuted(structure, '<=', word=word, witness=path.to_json(structure), procedure='full')

    longest = a1.max_word_length()
    logger.info('no refuting word among %d words below length %d', tried, cap)

    if cap >= bound or (longest is not None and longest < cap):
        return Verdict.valid('full')
    return Verdict.unknown(cap, 'full')
