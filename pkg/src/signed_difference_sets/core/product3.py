"""Product construction of (3^(2m+1), 3^(2m)+1, 1) signed difference sets.

G = G_0 x G_1 x G_1 with G_0 = Z_3 and G_1 = Z_3^m; coordinates are laid out
as (x_0 | first G_1 block | second G_1 block). The element is the formal sum
(x0, 0, G_1) + (0, G_1, x1) + (0, D', D') where D' is a (3^m, 3^m - 1, -1) SDS.
"""

from collections import Counter
from dataclasses import dataclass, field

import numpy as np

from ..config import get_settings
from ..logging_config import StructuredLogger
from ..utils.errors import ConstructionError, InternalDefectError, VerificationError
from .cyclotomic_integer import norm_squared
from .designs import SdsParams, paley_field_sds, verify_sds
from .finite_field import field_make
from .groups import AbelianGroup, all_char_sums, group_make
from .groupring import GroupRingElement, SignedSet, to_ring

logger = StructuredLogger("core.product3")

# Proof cases by character parameter (a, b1, b2).
CASE_B2_ONLY = 1
CASE_B1_ONLY = 2
CASE_A_ONLY = 3
CASE_BOTH = 4


@dataclass(frozen=True)
class Product3Spec:
    """Inputs of the product construction."""

    m: int
    x0: int
    x1: tuple[int, ...]
    dprime: SignedSet = field(repr=False)

    @property
    def inner_group(self) -> AbelianGroup:
        return group_make([3] * self.m)

    @property
    def group(self) -> AbelianGroup:
        return group_make([3] * (2 * self.m + 1))

    @property
    def expected(self) -> SdsParams:
        return SdsParams(3 ** (2 * self.m + 1), 3 ** (2 * self.m) + 1, 1)

    def validate(self) -> None:
        """Check m, x0, x1 and that D' is a (3^m, 3^m - 1, -1) SDS."""
        if self.m < 2 or self.m % 2:
            raise ConstructionError("m must be an even integer >= 2", {"m": self.m})
        if self.x0 % 3 == 0:
            raise ConstructionError("x0 must be a nonzero element of Z_3", {"x0": self.x0})
        G1 = self.inner_group
        if not G1.contains(self.x1):
            raise ConstructionError("x1 must lie in Z_3^m", {"x1": self.x1, "m": self.m})
        if self.dprime.group != G1:
            raise ConstructionError("D' must live in Z_3^m", {"group": str(self.dprime.group)})
        target = SdsParams(3**self.m, 3**self.m - 1, -1)
        try:
            params = verify_sds(self.dprime, strict=True)
        except VerificationError as e:
            raise ConstructionError("D' is not an SDS", e.witness) from e
        if params != target:
            raise ConstructionError("D' has the wrong parameters", {"params": str(params), "expected": str(target)})


@dataclass(frozen=True)
class Product3CharReport:
    """Per-case character counts; every non-principal |chi(D)|^2 equals n."""

    m: int
    n: int
    principal: int
    case_counts: dict[int, int]

    @property
    def checked(self) -> int:
        return sum(self.case_counts.values())


def default_dprime(m: int) -> SignedSet:
    """Quadratic-residue SDS of GF(3^m) on Z_3^m."""
    return paley_field_sds(field_make(3, m)).signed_set


def product3_spec(m: int, x0: int = 1, x1: tuple[int, ...] | None = None, dprime: SignedSet | None = None) -> Product3Spec:
    """Product3Spec with defaults x1 = 0 and D' from the squares of GF(3^m)."""
    if m < 2 or m % 2:
        raise ConstructionError("m must be an even integer >= 2", {"m": m})
    return Product3Spec(
        m=m,
        x0=x0,
        x1=tuple(x1) if x1 is not None else (0,) * m,
        dprime=dprime if dprime is not None else default_dprime(m),
    )


def relaxed_example() -> Product3Spec:
    """m = 2 with P' = {(1,1),(2,1),(1,2),(2,2)}, x0 = 1 and x1 = (1, 0).

    x1 lies in N', so the formal sum has coefficient 2 at (0, d, x1) for d in N'.
    """
    G1 = group_make([3, 3])
    positive = frozenset(G1.index(c) for c in [(1, 1), (2, 1), (1, 2), (2, 2)])
    negative = frozenset(range(1, G1.v)) - positive
    return Product3Spec(m=2, x0=1, x1=(1, 0), dprime=SignedSet(G1, positive, negative))


def product3_construct(spec: Product3Spec, allow_large: bool = False) -> GroupRingElement:
    """
    Form (x0, 0, G_1) + (0, G_1, x1) + (0, D', D') and re-verify it.

    Args:
        spec: Construction inputs.
        allow_large: Permit m above the convolution limit; verification then
            uses characters only.

    Returns:
        Element of Z[Z_3^(2m+1)] with parameters (3^(2m+1), 3^(2m)+1, 1).
    """
    settings = get_settings()
    if spec.m > settings.product3_max_m:
        raise ConstructionError("m exceeds the configured limit", {"m": spec.m, "limit": settings.product3_max_m})
    if spec.m > settings.product3_convolution_max_m and not allow_large:
        raise ConstructionError("large m requires allow_large", {"m": spec.m})
    spec.validate()

    G1 = spec.inner_group
    size = G1.v
    s = to_ring(spec.dprime).coeffs
    block = np.zeros((3, size, size), dtype=np.int64)
    block[spec.x0 % 3, 0, :] += 1
    block[0, :, G1.index(spec.x1)] += 1
    block[0] += np.outer(s, s)
    D = GroupRingElement(spec.group, block.reshape(-1))

    logger.info("Product element built", m=spec.m, x1=spec.x1, strict=D.is_signed())
    if spec.m <= settings.product3_convolution_max_m:
        params = verify_sds(D, strict=False)
        if params != spec.expected:
            raise InternalDefectError("product element has the wrong parameters", {"params": str(params), "expected": str(spec.expected)})
    else:
        report = product3_char_verify(D, spec.m)
        if D.weight != spec.expected.k or report.n != 3 ** (2 * spec.m):
            raise InternalDefectError("product element failed character verification", {"k": D.weight, "n": report.n})
    return D


def proof_case(a: tuple[int, ...], m: int) -> int:
    """Case of a non-principal character parameter (a, b1, b2)."""
    b1_zero = not any(a[1 : m + 1])
    b2_zero = not any(a[m + 1 :])
    if b1_zero and not b2_zero:
        return CASE_B2_ONLY
    if b2_zero and not b1_zero:
        return CASE_B1_ONLY
    if b1_zero and b2_zero:
        return CASE_A_ONLY
    return CASE_BOTH


def product3_char_verify(D: GroupRingElement, m: int) -> Product3CharReport:
    """
    Check |chi(D)|^2 = 3^(2m) for every non-principal character, case by case.

    Raises:
        VerificationError: With the first failing character parameter.
    """
    G = group_make([3] * (2 * m + 1))
    if D.group != G:
        raise ConstructionError("element does not live in Z_3^(2m+1)", {"group": str(D.group), "m": m})
    n = 3 ** (2 * m)
    sums = all_char_sums(D)
    counts: Counter[int] = Counter()
    for index, value in enumerate(sums[1:], start=1):
        a = G.element(index).coords
        norm = norm_squared(value).as_integer()
        if norm != n:
            raise VerificationError("character identity fails", {"a": a, "norm": str(norm_squared(value)), "expected": n})
        counts[proof_case(a, m)] += 1

    principal = sums[0].as_integer()
    if principal is None:
        raise InternalDefectError("principal character value is not rational")
    report = Product3CharReport(m, n, principal, {case: counts.get(case, 0) for case in range(1, 5)})
    logger.info("Product character check passed", m=m, cases=report.case_counts, principal=principal)
    return report
