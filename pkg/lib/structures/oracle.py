import logging
from typing import Iterator, Optional, Sequence, Tuple

import numpy as np

from ..errors import EcorError
from ..terms import Term, Letter, I_LETTER, NEG_I_LETTER, atoms, check_alphabet
from .evaluation import evaluate_with
from .structure import Structure, PointedStructure


logger = logging.getLogger(__name__)


# structures evaluated per numpy batch
CHUNK = 1 << 14

# structures are numbered by int64 indices
MAX_INDEX_BITS = 62



def _index_bits(k: int, n: int) -> int:

    bits = k * n * n
    if bits > MAX_INDEX_BITS:
        raise EcorError('enumerating structures with {} vertices over {} atoms is infeasible'.format(n, k))
    return bits


def structure_batches(sigma: Sequence[str], n: int, chunk: int = CHUNK) -> Iterator[Tuple[int, np.ndarray]]:
    """Yields every structure on n vertices as stacked relation arrays

    Structures are numbered by reading the relations of sigma, in order and
    row-major, as one bitstring with the most significant bit first.

    Parameters:
        sigma (sequence of str): the alphabet
        n (int): the vertex count
        chunk (int): the number of structures per batch

    Returns:
        iterator of (first index, bool array of shape (batch, |sigma|, n, n))
    """

    k = len(sigma)
    bits = _index_bits(k, n)
    total = 1 << bits
    shifts = np.arange(bits - 1, -1, -1, dtype=np.int64)

    for start in range(0, total, chunk):
        index = np.arange(start, min(start + chunk, total), dtype=np.int64)
        flat = ((index[:, None] >> shifts[None, :]) & 1).astype(bool)
        yield start, flat.reshape(len(index), k, n, n)


def enumerate_structures(sigma: Sequence[str], max_n: int) -> Iterator[Structure]:
    """Every structure with 1..max_n vertices over sigma, exactly once

    The order is by vertex count, then lexicographic over the concatenated
    relation bitstrings.
    """

    assert max_n >= 1
    sigma = check_alphabet(sigma, strict=False)
    _index_bits(len(sigma), max_n)

    for n in range(1, max_n + 1):
        for _, batch in structure_batches(sigma, n):
            for rels in batch:
                yield Structure(sigma, n, {a: rels[i] for i, a in enumerate(sigma)})



def _batch_interpretation(sigma: Sequence[str], batch: np.ndarray) -> dict:

    size, _, n, _ = batch.shape
    eye = np.broadcast_to(np.eye(n, dtype=bool), (size, n, n))
    interp = {I_LETTER: eye, NEG_I_LETTER: ~eye}
    for i, a in enumerate(sigma):
        interp[Letter(a)] = batch[:, i]
        interp[Letter(a, True)] = ~batch[:, i]

    return interp


def brute_force_refute(lhs: Term, rhs: Term, max_n: int, relation: str = '=',
                       sigma: Optional[Sequence[str]] = None) -> Optional[Tuple[PointedStructure, str]]:
    """Searches all small structures for a counterexample

    Parameters:
        lhs, rhs (Term): the two sides
        max_n (int): the largest vertex count to try
        relation (str): '<=' checks lhs <= rhs only, '=' checks both inclusions
        sigma (sequence of str, optional): the alphabet, defaults to the atoms
            of both sides (or a single atom when there are none)

    Returns:
        tuple or None: the first violating pointed structure in enumeration
            order (pairs row-major within a structure) with the violated
            direction, or None when no structure up to max_n violates the query
    """

    assert relation in ('<=', '=')

    if sigma is None:
        sigma = tuple(sorted(set(atoms(lhs)) | set(atoms(rhs)))) or ('a',)
    sigma = check_alphabet(sigma, strict=False)
    _index_bits(len(sigma), max_n)

    for n in range(1, max_n + 1):
        logger.debug('oracle: %d vertices, %d structures', n, 1 << (len(sigma) * n * n))

        for start, batch in structure_batches(sigma, n):
            interp = _batch_interpretation(sigma, batch)
            left  = evaluate_with(lhs, interp)
            right = evaluate_with(rhs, interp)

            forward = left & ~right
            violation = forward if relation == '<=' else forward | (right & ~left)

            hit = violation.reshape(len(batch), -1).any(axis=1)
            if not hit.any():
                continue

            first = int(np.argmax(hit))
            i, j = (int(v) for v in np.argwhere(violation[first])[0])
            direction = '<=' if forward[first, i, j] else '>='

            structure = Structure(sigma, n, {a: batch[first, k] for k, a in enumerate(sigma)})
            logger.info('oracle: counterexample number %d on %d vertices', start + first, n)

            return PointedStructure(structure, i, j), direction

    return None
