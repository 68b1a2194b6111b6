import itertools
from typing import FrozenSet, Iterable, Sequence, Tuple

from ..nfa import Nfa
from ..nfa.automaton import mask_of
from .path import con_mask, saturation_letters, read_mask


Quad = Tuple[int, int, int, int]



def nu(a: Nfa, u: Iterable[int]) -> FrozenSet[Quad]:
    """U x (Q minus U) x U x (Q minus U) over the states Q of a"""

    inside = sorted(set(u))
    outside = [q for q in range(a.n_states) if q not in set(inside)]

    return frozenset(itertools.product(inside, outside, inside, outside))


def xi(a: Nfa, u: Iterable[int], quad: Quad) -> bool:
    """The pointwise form of the saturation condition for one state set

    For every atom and for I, either the x moves of t1 stay in U and t2 is no
    converse x move away from U, or the same holds for the complement letter
    with t3 and t4.
    """

    mask = mask_of(u)
    t1, t2, t3, t4 = quad

    def side(x, p, q):
        return (read_mask(a, 1 << p, x) & ~mask) == 0 and not (read_mask(a, mask, x.breve()) >> q & 1)

    return all(side(x, t1, t2) or side(x.bar(), t3, t4) for x in saturation_letters(a.sigma))


def phi(a: Nfa, quads: Iterable[Quad], u: Iterable[int]) -> bool:
    """nu(U) is part of the tuple set and xi holds for U at every tuple"""

    quads = frozenset(quads)
    u = frozenset(u)

    return nu(a, u) <= quads and all(xi(a, u, quad) for quad in quads)



def pairwise_saturated(a: Nfa, sets: Sequence[Iterable[int]]) -> bool:
    """The saturation condition on every ordered pair of state sets, the pair
       of a set with itself included
    """

    masks = [mask_of(u) for u in sets]
    letters = saturation_letters(a.sigma)

    return all(con_mask(a, x, u, v) or con_mask(a, x.bar(), u, v)
               for u in masks for v in masks for x in letters)


def pointwise_saturated(a: Nfa, sets: Sequence[Iterable[int]]) -> bool:
    """phi for every set, with the tuple set taken as the union of the nu sets

    nu is empty for the empty set and for the set of all states, so the tuple
    set carries no constraint for pairs that start at such a set. phi alone
    then accepts sequences like (all states, empty set) that the pairwise
    condition rejects. Pairs starting at one of these two sets are checked
    with Con directly, which makes the result equal to pairwise_saturated for
    all sequences.
    """

    quads = frozenset().union(*(nu(a, u) for u in sets)) if sets else frozenset()
    if not all(phi(a, quads, u) for u in sets):
        return False

    full = (1 << a.n_states) - 1
    masks = [mask_of(u) for u in sets]
    letters = saturation_letters(a.sigma)

    return all(con_mask(a, x, u, v) or con_mask(a, x.bar(), u, v)
               for u in masks if u in (0, full) for v in masks for x in letters)
