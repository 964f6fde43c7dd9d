"""Ternary sequences and group-invariant weighing matrices from signed sets.

Over Z_v the signed set D = P - N is read as the period-v sequence with
s_i = +1, -1, 0 for i in P, N or neither. Its periodic autocorrelation at
shift tau is the tau coefficient of D D^(-1), so the sequence is two-level
exactly when D is an SDS with lambda = -1.
"""

from dataclasses import dataclass, field

import numpy as np

from ..config import get_settings
from ..logging_config import StructuredLogger
from ..utils.errors import InternalDefectError, SequenceError
from .designs import verify_sds
from .groups import AbelianGroup
from .groupring import SignedSet, to_ring

logger = StructuredLogger("core.sequences")

_SYMBOLS = {1: "+", 0: "0", -1: "-"}


@dataclass(frozen=True)
class TernarySequence:
    """One period s_0 .. s_(v-1) over {-1, 0, +1}."""

    symbols: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.symbols:
            raise SequenceError("a sequence needs a positive period")
        bad = [s for s in self.symbols if s not in _SYMBOLS]
        if bad:
            raise SequenceError("symbols must lie in {-1, 0, 1}", {"symbol": bad[0]})

    @property
    def period(self) -> int:
        return len(self.symbols)

    def __str__(self) -> str:
        return "".join(_SYMBOLS[s] for s in self.symbols)


def sequence_from_sds(D: SignedSet) -> TernarySequence:
    """S_D for a signed set over a cyclic group Z_v, indexed by residue."""
    if not D.group.is_cyclic_presentation:
        raise SequenceError("sequences need a cyclic group", {"group": str(D.group)})
    return TernarySequence(tuple(int(c) for c in to_ring(D).coeffs))


def autocorrelation(S: TernarySequence, tau: int) -> int:
    """C_S(tau) = sum_i s_(i+tau) s_i with indices mod v."""
    if not 0 <= tau < S.period:
        raise SequenceError("shift out of range", {"tau": tau, "period": S.period})
    s = np.array(S.symbols, dtype=np.int64)
    return int(np.dot(np.roll(s, -tau), s))


def autocorrelations(S: TernarySequence) -> list[int]:
    """C_S(tau) for every tau in [0, v)."""
    return [autocorrelation(S, tau) for tau in range(S.period)]


def is_two_level(S: TernarySequence) -> bool:
    """True when every out-of-phase autocorrelation equals -1."""
    return all(autocorrelation(S, tau) == -1 for tau in range(1, S.period))


@dataclass(frozen=True)
class WeighingMatrix:
    """G-invariant W(v, k); entry (g, h) is the first-row value at h - g."""

    group: AbelianGroup
    k: int
    first_row: tuple[int, ...]
    matrix: np.ndarray | None = field(default=None, repr=False, compare=False)
    checked_pairs: int = 0

    @property
    def v(self) -> int:
        return self.group.v

    def row_text(self) -> str:
        return " ".join(str(x) for x in self.first_row)


def _difference_indices(G: AbelianGroup, rows: np.ndarray) -> np.ndarray:
    """Index of h - g for each g in rows (axis 0) and every h (axis 1)."""
    coords = G.coords_array
    orders = np.array(G.orders, dtype=np.int64)
    diff = (coords[None, :, :] - coords[rows][:, None, :]) % orders
    return np.ravel_multi_index(tuple(np.moveaxis(diff, -1, 0)), G.orders)


def weighing_from_sds(D: SignedSet, seed: int | None = None) -> WeighingMatrix:
    """
    Expand a (v, k, 0) SDS into a G-invariant weighing matrix.

    Args:
        D: Signed set whose difference function has lambda = 0.
        seed: Seed for the sampled row-pair check used above the full-matrix limit.

    Returns:
        W with W W^T = k I checked exactly, on the full matrix when it is
        materialized and on sampled row pairs otherwise.
    """
    params = verify_sds(D, strict=True)
    if params.lam != 0:
        raise SequenceError("weighing matrices need lambda = 0", {"params": str(params)})

    settings = get_settings()
    G = D.group
    row = to_ring(D).coeffs
    k = params.k

    if G.v <= settings.full_matrix_max_order:
        W = row[_difference_indices(G, np.arange(G.v))]
        gram = W @ W.T
        if not np.array_equal(gram, k * np.eye(G.v, dtype=np.int64)):
            raise InternalDefectError("W W^T differs from k I", {"v": G.v, "k": k})
        logger.info("Weighing matrix expanded", v=G.v, k=k)
        return WeighingMatrix(G, k, tuple(int(x) for x in row), W, checked_pairs=G.v * G.v)

    rng = np.random.default_rng(settings.seed if seed is None else seed)
    pairs = rng.integers(0, G.v, size=(settings.weighing_sample_pairs, 2))
    rows = _difference_indices(G, np.unique(pairs))
    lookup = {int(g): r for g, r in zip(np.unique(pairs), row[rows], strict=True)}
    for g, h in pairs:
        inner = int(np.dot(lookup[int(g)], lookup[int(h)]))
        if inner != (k if g == h else 0):
            raise InternalDefectError("sampled rows of W are not orthogonal", {"rows": (int(g), int(h)), "inner": inner})
    logger.info("Weighing matrix row pairs checked", v=G.v, k=k, pairs=len(pairs))
    return WeighingMatrix(G, k, tuple(int(x) for x in row), None, checked_pairs=len(pairs))
