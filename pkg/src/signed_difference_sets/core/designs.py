"""Verification of signed, partial and ordinary difference sets.

Also holds the constructions built directly on partial difference sets:
the Paley PDS of a finite field and its lift to a (v, v-1, lambda) SDS.
"""

import itertools
from collections.abc import Callable, Iterable
from dataclasses import dataclass, field

import numpy as np

from ..logging_config import StructuredLogger
from ..utils.errors import ConstructionError, InternalDefectError, PreconditionError, StrictnessError, VerificationError
from ..utils.number_theory import exact_root, exact_sqrt, is_prime, prime_power
from .cyclotomic_integer import norm_squared
from .finite_field import FiniteField
from .groups import AbelianGroup, additive_group, all_char_sums, group_make
from .groupring import GroupRingElement, SignedSet, difference_function, involution, to_ring

logger = StructuredLogger("core.designs")


@dataclass(frozen=True)
class SdsParams:
    """(v, k, lambda) of a signed difference set; n = k - lambda."""

    v: int
    k: int
    lam: int

    @property
    def n(self) -> int:
        return self.k - self.lam

    def __str__(self) -> str:
        return f"({self.v},{self.k},{self.lam})"


@dataclass(frozen=True)
class PdsParams:
    """(v, k, lambda, mu) of a partial difference set."""

    v: int
    k: int
    lam: int
    mu: int
    regular: bool = field(default=False, compare=False)

    def __str__(self) -> str:
        return f"({self.v},{self.k},{self.lam},{self.mu})"


@dataclass(frozen=True)
class Feasibility:
    """Outcome of the perfect-square test; root certifies acceptance."""

    accepted: bool
    root: int | None
    reason: str


@dataclass(frozen=True)
class PaleyExistence:
    v: int
    exists: bool
    branches: tuple[str, ...]
    constructive: bool
    cyclic: bool
    reason: str


@dataclass(frozen=True)
class LiftedSds:
    """Signed set P - N built from a PDS P, with its predicted parameters."""

    signed_set: SignedSet
    params: SdsParams
    pds: PdsParams


def _as_ring(D: GroupRingElement | SignedSet) -> GroupRingElement:
    return to_ring(D) if isinstance(D, SignedSet) else D


def _coords(G: AbelianGroup, index: int) -> tuple[int, ...]:
    return G.element(int(index)).coords


def verify_sds(D: GroupRingElement | SignedSet, strict: bool = False) -> SdsParams:
    """
    Check D D^(-1) = lambda G + n 0_G.

    Args:
        D: Signed set or arbitrary integer group ring element.
        strict: Also require every coefficient of D to lie in {-1, 0, 1}.

    Returns:
        (v, k, lambda) with k the sum of squared coefficients.

    Raises:
        StrictnessError: strict is set and a coefficient has magnitude above one.
        VerificationError: off-identity coefficients of D D^(-1) differ.
    """
    A = _as_ring(D)
    G = A.group
    if strict:
        bad = A.strictness_violations()
        if bad.size:
            raise StrictnessError(
                "coefficient outside {-1, 0, 1}",
                {"element": _coords(G, bad[0]), "coefficient": A.coefficient(int(bad[0])), "violations": int(bad.size)},
            )

    E = difference_function(A).coeffs
    k = A.weight
    lam = int(E[1]) if G.v > 1 else 0
    if G.v > 1:
        off = np.nonzero(E[1:] != lam)[0]
        if off.size:
            g = int(off[0]) + 1
            raise VerificationError(
                "off-identity coefficients of D D^(-1) differ",
                {"g": _coords(G, 1), "h": _coords(G, g), "values": (lam, int(E[g]))},
            )
    if int(E[0]) != k:
        raise InternalDefectError("identity coefficient differs from the weight", {"identity": int(E[0]), "k": k})

    params = SdsParams(G.v, k, lam)
    logger.debug("SDS verified", params=str(params), strict=strict)
    return params


def verify_pds(D: Iterable[int], G: AbelianGroup) -> PdsParams:
    """
    Check D D^(-1) = lambda D + mu (G - D - 0_G) + k 0_G for a subset D.

    Args:
        D: Element indices of the subset; 0_G must not belong to it.
        G: Ambient group.

    Returns:
        (v, k, lambda, mu) with the regularity flag. Empty slots report 0.
    """
    indices = sorted(set(int(i) for i in D))
    if 0 in indices:
        raise VerificationError("identity element lies in D", {"element": G.zero.coords})
    A = GroupRingElement.indicator(G, indices)
    E = difference_function(A).coeffs

    inside = np.zeros(G.v, dtype=bool)
    inside[indices] = True
    outside = ~inside
    outside[0] = False

    def _common(mask: np.ndarray, label: str) -> int:
        values = E[mask]
        if values.size == 0:
            return 0
        positions = np.nonzero(mask)[0]
        bad = np.nonzero(values != values[0])[0]
        if bad.size:
            raise VerificationError(
                f"{label} coefficients of D D^(-1) differ",
                {"g": _coords(G, positions[0]), "h": _coords(G, positions[bad[0]]), "values": (int(values[0]), int(values[bad[0]]))},
            )
        return int(values[0])

    lam = _common(inside, "in-set")
    mu = _common(outside, "out-of-set")
    k = len(indices)
    if int(E[0]) != k:
        raise InternalDefectError("identity coefficient differs from |D|", {"identity": int(E[0]), "k": k})

    regular = set(G.neg_index[indices].tolist()) == set(indices)
    params = PdsParams(G.v, k, lam, mu, regular=regular)
    logger.debug("PDS verified", params=str(params), regular=regular)
    return params


def verify_ds(D: Iterable[int], G: AbelianGroup) -> SdsParams:
    """Difference-set check; 0_G may belong to D."""
    return verify_sds(GroupRingElement.indicator(G, sorted(set(int(i) for i in D))), strict=True)


def character_criterion(D: GroupRingElement | SignedSet) -> SdsParams:
    """
    Verify an SDS through its character values.

    D is an SDS iff |chi(D)|^2 takes one rational value n on every non-principal
    character; then lambda = k - n and chi_0(D)^2 = lambda v + n.

    Raises:
        VerificationError: with the first failing character parameter.
    """
    A = _as_ring(D)
    G = A.group
    sums = all_char_sums(A)
    n: int | None = None
    for index, value in enumerate(sums[1:], start=1):
        norm = norm_squared(value).as_integer()
        if norm is None:
            raise VerificationError("|chi(D)|^2 is not rational", {"a": _coords(G, index)})
        if n is None:
            n = norm
        elif norm != n:
            raise VerificationError("|chi(D)|^2 differs between characters", {"a": _coords(G, index), "values": (n, norm)})

    k = A.weight
    principal = sums[0].as_integer()
    if n is None:
        n = k
    lam = k - n
    if principal is None or principal * principal != lam * G.v + n:
        raise VerificationError("principal character value is inconsistent", {"chi0": principal, "n": n, "k": k})
    params = SdsParams(G.v, k, lam)
    logger.debug("Character criterion holds", params=str(params), characters=G.v - 1)
    return params


def feasible(v: int, k: int, lam: int, sizes: tuple[int, int] | None = None) -> Feasibility:
    """
    Necessary condition (|P|-|N|)^2 = k + lambda (v - 1) with lambda >= -1.

    Args:
        v: Group order, at least 2.
        k: Size |P| + |N|.
        lam: lambda.
        sizes: Optional (|P|, |N|) to check against the square root.

    Returns:
        Acceptance with the square root as certificate, or a rejection reason.
    """
    if v < 2:
        raise PreconditionError("feasibility needs v >= 2", {"v": v})
    if lam < -1:
        return Feasibility(False, None, f"lambda={lam} is below -1")
    value = k + lam * (v - 1)
    root = exact_sqrt(value)
    if root is None:
        return Feasibility(False, None, f"k + lambda(v-1) = {value} is not a perfect square")
    if sizes is not None:
        size_p, size_n = sizes
        if size_p + size_n != k:
            return Feasibility(False, root, f"|P|+|N| = {size_p + size_n} differs from k = {k}")
        if abs(size_p - size_n) != root:
            return Feasibility(False, root, f"||P|-|N|| = {abs(size_p - size_n)} differs from root {root}")
    return Feasibility(True, root, f"k + lambda(v-1) = {value} = {root}^2")


def paley_pds(F: FiniteField) -> frozenset[int]:
    """Nonzero squares of F as element indices of its additive group."""
    if F.q % 4 != 1:
        raise ConstructionError("Paley PDS needs q = 1 mod 4", {"q": F.q})
    squares = F.nonzero_squares()
    logger.debug("Paley PDS built", q=F.q, size=len(squares))
    return squares


def sds_from_pds(Dprime: Iterable[int], G: AbelianGroup) -> LiftedSds:
    """
    Lift a regular PDS with lambda - mu = -1 to the SDS P = D', N = G - D' - 0_G.

    Returns:
        The signed set with predicted parameters (v, v-1, v-4k+4mu-2), already
        re-verified by convolution.
    """
    members = frozenset(int(i) for i in Dprime)
    pds = verify_pds(members, G)
    if not pds.regular:
        raise ConstructionError("PDS must be regular (D = -D)", {"params": str(pds)})
    if pds.lam - pds.mu != -1:
        raise ConstructionError("PDS must satisfy lambda - mu = -1", {"params": str(pds)})

    predicted = SdsParams(G.v, G.v - 1, G.v - 4 * pds.k + 4 * pds.mu - 2)
    D = SignedSet(G, members, frozenset(range(1, G.v)) - members)
    actual = verify_sds(D, strict=True)
    if actual != predicted:
        raise InternalDefectError("lifted SDS parameters differ from prediction", {"predicted": str(predicted), "actual": str(actual)})
    logger.info("PDS lifted to SDS", pds=str(pds), sds=str(actual))
    return LiftedSds(D, predicted, pds)


def lift_identity_check(Dprime: Iterable[int], G: AbelianGroup) -> bool:
    """Check (2D' - G + 0)(2D' - G + 0)^(-1) = (v-4k-2)G + 4D'D'^(-1) + 2D' + 2D'^(-1) + 0_G."""
    members = sorted(set(int(i) for i in Dprime))
    Dp = GroupRingElement.indicator(G, members)
    whole = GroupRingElement.full(G)
    zero = GroupRingElement.identity(G)
    D = 2 * Dp - whole + zero
    lhs = difference_function(D)
    rhs = (G.v - 4 * len(members) - 2) * whole + 4 * difference_function(Dp) + 2 * Dp + 2 * involution(Dp) + zero
    return lhs == rhs


def case1_identity_check(P: Iterable[int], G: AbelianGroup) -> bool:
    """
    For N = G - P check D D^(-1) = (|G| - 4|P|) G + 4 P P^(-1), and that D is
    an SDS exactly when P is a difference set.
    """
    members = sorted(set(int(i) for i in P))
    Pe = GroupRingElement.indicator(G, members)
    whole = GroupRingElement.full(G)
    D = 2 * Pe - whole
    identity_holds = difference_function(D) == (G.v - 4 * len(members)) * whole + 4 * difference_function(Pe)

    def _passes(check: Callable[[], object]) -> bool:
        try:
            check()
        except VerificationError:
            return False
        return True

    is_sds = _passes(lambda: verify_sds(D, strict=True))
    is_ds = _passes(lambda: verify_ds(members, G))
    return identity_holds and is_sds == is_ds


def paley_exists(v: int) -> PaleyExistence:
    """
    Existence of a Paley PDS in abelian groups of order v.

    Holds iff v is a prime power = 1 mod 4, or v = n^4 or 9 n^4 with n > 1 odd.
    Only the prime-power branch has a constructive witness here. In cyclic
    groups a Paley PDS exists only for prime v (the squares or the non-squares).
    """
    if v <= 1 or v % 2 == 0:
        raise PreconditionError("Paley existence is defined for odd v > 1", {"v": v})
    branches: list[str] = []
    if prime_power(v) is not None and v % 4 == 1:
        branches.append("prime-power")
    n = exact_root(v, 4)
    if n is not None and n > 1 and n % 2 == 1:
        branches.append(f"fourth-power:{n}")
    if v % 9 == 0:
        n = exact_root(v // 9, 4)
        if n is not None and n > 1 and n % 2 == 1:
            branches.append(f"nine-fourth-power:{n}")

    exists = bool(branches)
    cyclic = is_prime(v) and v % 4 == 1
    if exists:
        reason = "holds via " + ", ".join(branches)
    else:
        reason = "v is neither a prime power = 1 mod 4 nor of the form n^4 or 9n^4 with n > 1 odd"
    return PaleyExistence(v, exists, tuple(branches), "prime-power" in branches, cyclic, reason)


def search_cyclic_paley(v: int) -> list[frozenset[int]]:
    """
    Exhaustively find every symmetric Paley PDS in Z_v.

    Candidates are unions of (v-1)/4 inverse pairs {x, -x}; each is checked
    with verify_pds against the Paley parameters.
    """
    if v % 4 != 1:
        return []
    G = group_make([v])
    target = (v, (v - 1) // 2, (v - 5) // 4, (v - 1) // 4)
    pairs = [(x, v - x) for x in range(1, (v - 1) // 2 + 1)]
    found: list[frozenset[int]] = []
    for chosen in itertools.combinations(pairs, (v - 1) // 4):
        candidate = frozenset(x for pair in chosen for x in pair)
        try:
            params = verify_pds(candidate, G)
        except VerificationError:
            continue
        if (params.v, params.k, params.lam, params.mu) == target:
            found.append(candidate)
    logger.debug("Cyclic Paley search finished", v=v, found=len(found))
    return sorted(found, key=sorted)


def paley_field_sds(F: FiniteField) -> LiftedSds:
    """Quadratic-residue SDS (q, q-1, -1) of GF(q)."""
    return sds_from_pds(paley_pds(F), additive_group(F))
