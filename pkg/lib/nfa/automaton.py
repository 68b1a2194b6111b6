import logging
from collections import deque
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple

from ..errors import EcorError
from ..terms import Letter, I_LETTER, check_alphabet


logger = logging.getLogger(__name__)


State = int
StateSet = FrozenSet[State]
Transition = Tuple[State, Letter, State]



def states_of(mask: int) -> StateSet:
    states, q = [], 0
    while mask:
        if mask & 1:
            states.append(q)
        mask >>= 1
        q += 1
    return frozenset(states)


def mask_of(states: Iterable[State]) -> int:
    mask = 0
    for q in states:
        mask |= 1 << q
    return mask



class Nfa:
    """A finite automaton over signed letters that reads the identity letter as
       an epsilon move

       States are 0..n_states-1, with one initial and one final state.
       State sets are handled internally as integer bitmasks and handed out as
       frozensets. Epsilon closures are computed once, at construction.

       ...

       Methods:
            transitions(x)
                the (p, q) pairs of letter x
            letters()
                the non-epsilon letters on some transition, sorted
            closure(states)
                the epsilon closure of a state set
            step(states, x)
                one x move without closures
            delta(states, x)
                closure, then an x move, then closure
            run(word)
                the states reached from the initial state by a word
            accepts(word)
                whether the final state is reached
            max_word_length()
                the longest accepted word, None for infinite languages
            words(max_len)
                the accepted words up to a length, shortest first
            to_json() / from_json(doc)
                the JSON automaton format
            to_dot(name)
                a DOT digraph
    """


    def __init__(self, n_states: int, transitions: Iterable[Transition], initial: State, final: State,
                 sigma: Optional[Sequence[str]] = None):

        if n_states < 1:
            raise EcorError('an automaton needs at least one state')
        if not (0 <= initial < n_states and 0 <= final < n_states):
            raise EcorError('initial or final state out of range')

        self.__n       = n_states
        self.__initial = initial
        self.__final   = final

        self.__edges: Dict[Letter, List[Tuple[State, State]]] = {}
        for p, x, q in transitions:
            if not (0 <= p < n_states and 0 <= q < n_states):
                raise EcorError('transition {} -{}-> {} out of range'.format(p, x, q))
            pairs = self.__edges.setdefault(x, [])
            if (p, q) not in pairs:
                pairs.append((p, q))

        if sigma is None:
            sigma = sorted({x.atom for x in self.__edges if not x.is_identity()}) or ('a',)
        self.__sigma = check_alphabet(sigma, strict=False)

        self.__successors: Dict[Letter, List[int]] = {}
        for x, pairs in self.__edges.items():
            row = [0] * n_states
            for p, q in pairs:
                row[p] |= 1 << q
            self.__successors[x] = row

        self.__closures = self.__compute_closures()


    def __compute_closures(self) -> List[int]:

        moves = self.__successors.get(I_LETTER, [0] * self.__n)
        closures = []
        for q in range(self.__n):
            reached, queue = 1 << q, deque([q])
            while queue:
                p = queue.popleft()
                fresh = moves[p] & ~reached
                reached |= fresh
                queue.extend(states_of(fresh))
            closures.append(reached)

        return closures


    @property
    def n_states(self) -> int:
        return self.__n

    @property
    def initial(self) -> State:
        return self.__initial

    @property
    def final(self) -> State:
        return self.__final

    @property
    def sigma(self) -> Tuple[str, ...]:
        return self.__sigma


    def transitions(self, x: Letter) -> Tuple[Tuple[State, State], ...]:
        return tuple(self.__edges.get(x, ()))


    def all_transitions(self) -> List[Transition]:
        return [(p, x, q) for x in sorted(self.__edges) for p, q in self.__edges[x]]


    def letters(self) -> Tuple[Letter, ...]:
        return tuple(sorted(x for x, pairs in self.__edges.items() if pairs and not x.is_epsilon()))


    def has_letter(self, predicate) -> bool:
        return any(predicate(x) for x, pairs in self.__edges.items() if pairs)


    # bitmask level, used by the searches

    def closure_mask(self, mask: int) -> int:
        out, q = 0, 0
        while mask:
            if mask & 1:
                out |= self.__closures[q]
            mask >>= 1
            q += 1
        return out


    def step_mask(self, mask: int, x: Letter) -> int:
        row = self.__successors.get(x)
        if row is None:
            return 0
        out, q = 0, 0
        while mask:
            if mask & 1:
                out |= row[q]
            mask >>= 1
            q += 1
        return out


    def delta_mask(self, mask: int, x: Letter) -> int:
        return self.closure_mask(self.step_mask(self.closure_mask(mask), x))


    # state set level

    def closure(self, states: Iterable[State]) -> StateSet:
        return states_of(self.closure_mask(mask_of(states)))


    def step(self, states: Iterable[State], x: Letter) -> StateSet:
        return states_of(self.step_mask(mask_of(states), x))


    def delta(self, states: Iterable[State], x: Letter) -> StateSet:
        """The states reached from a set by x, with epsilon moves before and after

        Raises:
            EcorError: for the epsilon letter itself
        """

        if x.is_epsilon():
            raise EcorError('the identity letter is not readable')
        return states_of(self.delta_mask(mask_of(states), x))


    def run(self, word: Sequence[Letter]) -> StateSet:

        mask = self.closure_mask(1 << self.__initial)
        for x in word:
            if x.is_epsilon():
                return frozenset()
            mask = self.delta_mask(mask, x)
            if not mask:
                break

        return states_of(mask)


    def accepts(self, word: Sequence[Letter]) -> bool:
        return self.__final in self.run(word)



    def __useful(self) -> int:
        """States on some path from the initial to the final state"""

        forward = [0] * self.__n
        backward = [0] * self.__n
        for pairs in self.__edges.values():
            for p, q in pairs:
                forward[p] |= 1 << q
                backward[q] |= 1 << p

        def reach(start, moves):
            seen, queue = 1 << start, deque([start])
            while queue:
                p = queue.popleft()
                fresh = moves[p] & ~seen
                seen |= fresh
                queue.extend(states_of(fresh))
            return seen

        return reach(self.__initial, forward) & reach(self.__final, backward)


    def max_word_length(self) -> Optional[int]:
        """The length of the longest accepted word

        Returns:
            int or None: None when the language is infinite, -1 when it is empty
        """

        useful = self.__useful()
        if not useful >> self.__final & 1:
            return -1

        inside = [q for q in range(self.__n) if useful >> q & 1]
        moves = [(p, x, q) for p, x, q in self.all_transitions() if useful >> p & 1 and useful >> q & 1]

        reach = {q: self.__reach_within(q, moves) for q in inside}
        for p, x, q in moves:
            if not x.is_epsilon() and reach[q] >> p & 1:
                return None

        longest = {q: -1 for q in inside}
        longest[self.__initial] = 0
        for _ in range(len(inside)):
            changed = False
            for p, x, q in moves:
                if longest[p] < 0:
                    continue
                length = longest[p] + (0 if x.is_epsilon() else 1)
                if length > longest[q]:
                    longest[q] = length
                    changed = True
            if not changed:
                break

        return longest[self.__final]


    def __reach_within(self, start: State, moves: Sequence[Transition]) -> int:
        seen, changed = 1 << start, True
        while changed:
            changed = False
            for p, _, q in moves:
                if seen >> p & 1 and not seen >> q & 1:
                    seen |= 1 << q
                    changed = True
        return seen


    def words(self, max_len: int) -> Iterator[Tuple[Letter, ...]]:
        """The accepted words of length at most max_len, shortest first and
           in letter order within a length
        """

        letters = self.letters()
        layer = [((), self.closure_mask(1 << self.__initial))]

        for length in range(max_len + 1):
            for word, mask in layer:
                if mask >> self.__final & 1:
                    yield word
            if length == max_len:
                break

            grown = []
            for word, mask in layer:
                for x in letters:
                    nxt = self.delta_mask(mask, x)
                    if nxt:
                        grown.append((word + (x,), nxt))
            layer = grown
            if not layer:
                break



    def to_json(self) -> dict:
        return {
            'states': self.__n,
            'initial': self.__initial,
            'final': self.__final,
            'sigma': list(self.__sigma),
            'transitions': [[p, x.encode(), q] for p, x, q in self.all_transitions()],
        }


    @classmethod
    def from_json(cls, doc: dict) -> 'Nfa':
        try:
            transitions = [(int(p), Letter.decode(x), int(q)) for p, x, q in doc['transitions']]
            return cls(int(doc['states']), transitions, int(doc['initial']), int(doc['final']), doc.get('sigma'))
        except (KeyError, TypeError, ValueError) as error:
            raise EcorError('malformed automaton document: {}'.format(error))


    def to_dot(self, name: str = 'A') -> str:

        lines = ['digraph {} {{'.format(name), '  rankdir=LR;', '  start [shape=point];']
        for q in range(self.__n):
            shape = 'doublecircle' if q == self.__final else 'circle'
            lines.append('  {} [shape={}];'.format(q, shape))
        lines.append('  start -> {};'.format(self.__initial))
        for p, x, q in self.all_transitions():
            lines.append('  {} -> {} [label="{}"];'.format(p, q, x.encode()))
        lines.append('}')

        return '\n'.join(lines)


    def __repr__(self):
        return 'Nfa(states={}, initial={}, final={}, transitions={})'.format(
            self.__n, self.__initial, self.__final, len(self.all_transitions()))



def eps_closure(m: Nfa, states: Iterable[State]) -> StateSet:
    return m.closure(states)


def delta(m: Nfa, states: Iterable[State], x: Letter) -> StateSet:
    return m.delta(states, x)


def accepts(m: Nfa, word: Sequence[Letter]) -> bool:
    return m.accepts(word)


def breve(x: Letter) -> Letter:
    """The converse dual of a letter; identity letters are fixed"""
    return x.breve()
