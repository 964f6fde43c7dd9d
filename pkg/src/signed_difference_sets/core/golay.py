"""The (243, 22, 1, 2) partial difference set from the ternary Golay code.

The cyclic [11, 6] ternary Golay code is generated by a degree-5 factor of
x^11 - 1 over Z_3. Its dual is a projective [11, 5] two-weight code with
weights 6 and 9; the 22 nonzero multiples of the dual generator columns form
a regular PDS in Z_3^5.
"""

import itertools

import galois
import numpy as np

from ..logging_config import StructuredLogger
from ..utils.errors import InternalDefectError
from .groups import AbelianGroup, group_make

logger = StructuredLogger("core.golay")

P = 3
LENGTH = 11
DIMENSION = 6
DUAL_WEIGHTS = frozenset({6, 9})


def golay_generator_polynomial() -> galois.Poly:
    """Smallest monic degree-5 factor of x^11 - 1 over Z_3, in galois's integer order."""
    GF = galois.GF(P)
    factors, _ = galois.Poly.Degrees([LENGTH, 0], [1, P - 1], field=GF).factors()
    quintics = [g for g in factors if g.degree == LENGTH - DIMENSION]
    if not quintics:
        raise InternalDefectError("x^11 - 1 has no degree-5 factor over Z_3")
    return min(quintics, key=int)


def golay_generator_matrix(g: galois.Poly) -> np.ndarray:
    """6 x 11 generator matrix whose rows are the cyclic shifts x^i g(x), ascending coefficients."""
    ascending = g.coeffs[::-1].view(np.ndarray).astype(np.int64)
    rows = np.zeros((DIMENSION, LENGTH), dtype=np.int64)
    for i in range(DIMENSION):
        rows[i, i : i + ascending.size] = ascending
    return rows


def codeword_weights(basis: np.ndarray, p: int = P) -> set[int]:
    """Hamming weights of all nonzero codewords spanned by the rows of basis."""
    weights: set[int] = set()
    for combo in itertools.product(range(p), repeat=basis.shape[0]):
        if any(combo):
            word = (np.array(combo, dtype=np.int64) @ basis) % p
            weights.add(int(np.count_nonzero(word)))
    return weights


def is_projective(basis: np.ndarray, p: int = P) -> bool:
    """No zero column and no two columns proportional."""
    seen: set[tuple[int, ...]] = set()
    for column in basis.T:
        if not column.any():
            return False
        multiples = {tuple(int(x) for x in (alpha * column) % p) for alpha in range(1, p)}
        if seen & multiples:
            return False
        seen |= multiples
    return True


def golay_pds() -> tuple[frozenset[int], AbelianGroup]:
    """
    Build the regular (243, 22, 1, 2) PDS in Z_3^5.

    Returns:
        Element indices of D = {alpha c : c a dual generator column, alpha in {1, 2}}
        and the group Z_3^5.

    Raises:
        InternalDefectError: When factoring, the weight set, projectivity or
            the size of D come out wrong.
    """
    g = golay_generator_polynomial()
    generator = golay_generator_matrix(g)
    dual = galois.GF(P)(generator).null_space().view(np.ndarray).astype(np.int64)
    if dual.shape != (LENGTH - DIMENSION, LENGTH):
        raise InternalDefectError("dual code has the wrong dimension", {"shape": dual.shape})

    weights = codeword_weights(dual)
    if weights != DUAL_WEIGHTS:
        raise InternalDefectError("dual code is not a (6, 9) two-weight code", {"weights": sorted(weights)})
    if not is_projective(dual):
        raise InternalDefectError("dual generator columns are not pairwise independent")

    G = group_make([P] * (LENGTH - DIMENSION))
    D = frozenset(G.index(tuple(int(x) for x in (alpha * column) % P)) for column in dual.T for alpha in (1, 2))
    if len(D) != 2 * LENGTH:
        raise InternalDefectError("PDS has the wrong size", {"size": len(D)})
    logger.info("Golay PDS built", generator=str(g), size=len(D))
    return D, G
