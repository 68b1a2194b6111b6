from typing import List, Optional, Tuple

import numpy as np

from ..terms import label_letters
from .graph import Graph


Mapping = Tuple[int, ...]



def homomorphism_exists(src: Graph, dst: Graph) -> Optional[Mapping]:
    """Searches for a homomorphism of 2-pointed graphs

    A homomorphism maps source to source and target to target and sends every
    x-labelled edge of src onto an x-labelled edge of dst. The search is
    complete: vertices with the fewest candidates are assigned first and each
    assignment narrows the candidates of the neighbours (forward checking).

    Parameters:
        src (Graph): the graph to map
        dst (Graph): the graph to map into, over the same alphabet

    Returns:
        tuple of int or None: the image of every src vertex, or None if no
            homomorphism exists
    """

    assert src.sigma == dst.sigma, 'graphs over different alphabets'

    letters = [x for x in label_letters(src.sigma) if src.label(x).any()]
    pattern = [(src.label(x), dst.label(x)) for x in letters]

    domains = np.ones((src.n, dst.n), dtype=bool)

    # self loops can only land on self loops
    for edges, image in pattern:
        loops = np.diag(edges)
        domains[loops] &= np.diag(image)

    domains[src.source] &= np.arange(dst.n) == dst.source
    domains[src.target] &= np.arange(dst.n) == dst.target

    if not domains.any(axis=1).all():
        return None

    assignment = [-1] * src.n
    found = _extend(pattern, domains, assignment)

    return None if found is None else tuple(found)



def _narrow(pattern, domains: np.ndarray, u: int, w: int) -> np.ndarray:

    narrowed = domains.copy()
    narrowed[u] = False
    narrowed[u, w] = True

    for edges, image in pattern:
        narrowed[edges[u]] &= image[w]
        narrowed[edges[:, u]] &= image[:, w]

    return narrowed


def _extend(pattern, domains: np.ndarray, assignment: List[int]) -> Optional[List[int]]:

    free = [v for v, w in enumerate(assignment) if w < 0]
    if not free:
        return list(assignment)

    counts = domains.sum(axis=1)
    u = min(free, key=lambda v: (counts[v], v))

    for w in np.flatnonzero(domains[u]):
        narrowed = _narrow(pattern, domains, u, int(w))
        if not narrowed.any(axis=1).all():
            continue

        assignment[u] = int(w)
        found = _extend(pattern, narrowed, assignment)
        if found is not None:
            return found
        assignment[u] = -1

    return None



def is_homomorphism(src: Graph, dst: Graph, mapping: Mapping) -> bool:
    """Checks a candidate map edge by edge"""

    if len(mapping) != src.n or any(not 0 <= w < dst.n for w in mapping):
        return False
    if mapping[src.source] != dst.source or mapping[src.target] != dst.target:
        return False

    return all(dst.label(x)[mapping[i], mapping[j]] for i, x, j in src.edges())
