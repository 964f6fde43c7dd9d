"""Fourth-order cyclotomy of GF(q) and the cyclotomic signed difference sets.

Classes C_i = w^i <w^4> are stored as sets of element indices of the additive
group of the field. Quartic parameters (s, t) give closed forms for the
cyclotomic numbers (i, j) = |(C_i + 1) & C_j|, and those in turn decide which
unions of classes (with or without 0) are signed difference sets.
"""

import math
from collections.abc import Iterator, Sequence
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import cached_property

import numpy as np

from ..logging_config import StructuredLogger
from ..utils.errors import ClassificationDisagreement, CyclotomyError, InternalDefectError, VerificationError
from ..utils.number_theory import exact_sqrt
from .designs import SdsParams, feasible, verify_ds, verify_pds, verify_sds
from .finite_field import FieldElement, FiniteField, discrete_log_table
from .groups import AbelianGroup, additive_group
from .groupring import GroupRingElement, SignedSet, convolve

logger = StructuredLogger("core.cyclotomy")

E = 4


def cyclotomic_classes(F: FiniteField, e: int, w: FieldElement | None = None) -> tuple[frozenset[int], ...]:
    """Classes C_i = w^i <w^e>, i < e, as element indices; e must divide q - 1."""
    if e < 1 or (F.q - 1) % e:
        raise CyclotomyError("e must divide q - 1", {"e": e, "q": F.q})
    table = discrete_log_table(F, w)
    buckets: list[set[int]] = [set() for _ in range(e)]
    for x, k in table.items():
        buckets[k % e].add(F.index(x))
    return tuple(frozenset(b) for b in buckets)


@dataclass(frozen=True)
class CyclotomicSystem:
    """Order-4 cyclotomic classes of GF(q) for a fixed primitive element."""

    field: FiniteField
    w: FieldElement
    classes: tuple[frozenset[int], ...]
    class_index: np.ndarray = field(repr=False, compare=False)

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def e(self) -> int:
        return E

    @property
    def f(self) -> int:
        return (self.q - 1) // E

    @cached_property
    def group(self) -> AbelianGroup:
        return additive_group(self.field)

    def class_of(self, x: FieldElement | int) -> int:
        """Class number of a nonzero element (element or index)."""
        index = x if isinstance(x, int) else self.field.index(x)
        c = int(self.class_index[index])
        if c < 0:
            raise CyclotomyError("zero belongs to no cyclotomic class")
        return c

    def union(self, *which: int) -> frozenset[int]:
        out: frozenset[int] = frozenset()
        for i in which:
            out |= self.classes[i % E]
        return out

    @cached_property
    def nonzero(self) -> frozenset[int]:
        return frozenset(range(1, self.q))

    @cached_property
    def cyclotomic_numbers(self) -> np.ndarray:
        """4 x 4 matrix of (i, j) counted directly."""
        gf = self.field.gf
        plus_one = (gf.elements + gf(1)).view(np.ndarray).astype(np.int64)
        source = self.class_index
        target = self.class_index[plus_one]
        mask = (source >= 0) & (target >= 0)
        counts = np.zeros((E, E), dtype=np.int64)
        np.add.at(counts, (source[mask], target[mask]), 1)
        return counts


def cyclotomic_system(F: FiniteField, w: FieldElement | Sequence[int] | int | None = None) -> CyclotomicSystem:
    """
    Build C_0..C_3 of GF(q) from discrete logarithms to base w.

    Args:
        F: Field with q = 1 mod 4.
        w: Optional primitive element overriding F.w.

    Returns:
        The cyclotomic system; deterministic given (F, w).
    """
    if F.q % E != 1:
        raise CyclotomyError("order-4 cyclotomy needs q = 1 mod 4", {"q": F.q})
    base = F.w if w is None else F.coerce(w)
    if not F.is_primitive(base):
        raise CyclotomyError("w is not a primitive element", {"w": base.coords, "q": F.q})
    classes = cyclotomic_classes(F, E, base)
    class_index = np.full(F.q, -1, dtype=np.int64)
    for i, members in enumerate(classes):
        class_index[sorted(members)] = i
    class_index.setflags(write=False)
    logger.debug("Cyclotomic classes built", q=F.q, w=base.coords)
    return CyclotomicSystem(F, base, classes, class_index)


def cyclo_number_oracle(sys: CyclotomicSystem, i: int, j: int) -> int:
    """(i, j) = |(C_i + 1) & C_j| by direct count; indices are taken mod 4."""
    return int(sys.cyclotomic_numbers[i % E, j % E])


@dataclass(frozen=True)
class QuarticParams:
    """q = s^2 + t^2 with s = 1 mod 4, or ((-p)^(n/2), 0) when p = 3 mod 4."""

    s: int
    t: int

    def negated(self) -> "QuarticParams":
        """Parameters after replacing w by w^-1 (t changes sign)."""
        return QuarticParams(self.s, -self.t)


def quartic_params(sys: CyclotomicSystem) -> QuarticParams:
    """
    Determine (s, t) for the system's field and primitive element.

    For p = 1 mod 4 the sign of t is fixed by w^((q-1)/4) = s / t in Z_p.
    """
    F = sys.field
    p, n, q = F.p, F.n, F.q
    if p % 4 == 3:
        if n % 2:
            raise CyclotomyError("p = 3 mod 4 needs an even extension degree", {"p": p, "n": n})
        return QuarticParams((-p) ** (n // 2), 0)

    bound = math.isqrt(q)
    candidates = []
    for s in range(-bound, bound + 1):
        if s % 4 != 1 or s % p == 0:
            continue
        t0 = exact_sqrt(q - s * s)
        if t0 is not None:
            candidates.append((s, t0))
    if len(candidates) != 1:
        raise InternalDefectError("s is not uniquely determined", {"q": q, "candidates": candidates})
    s, t0 = candidates[0]

    g = F.prime_subfield_value(F.pow(sys.w, (q - 1) // 4))
    if g is None:
        raise InternalDefectError("w^((q-1)/4) is outside the prime field", {"q": q})
    for t in (t0, -t0):
        if (s - g * t) % p == 0:
            return QuarticParams(s, t)
    raise InternalDefectError("no sign of t matches w^((q-1)/4)", {"q": q, "s": s, "t": t0})


# Letter layouts of the cyclotomic-number tables, rows i, columns j.
_LAYOUT_F_EVEN = ("ABCD", "BDEE", "CECE", "DEEB")
_LAYOUT_F_ODD = ("ABCD", "EEDB", "AEAE", "EDBE")


def _letter_numerators(params: QuarticParams, q: int, f_even: bool) -> dict[str, int]:
    s, t = params.s, params.t
    if f_even:
        return {
            "A": q - 11 - 6 * s,
            "B": q - 3 + 2 * s + 4 * t,
            "C": q - 3 + 2 * s,
            "D": q - 3 + 2 * s - 4 * t,
            "E": q + 1 - 2 * s,
        }
    return {
        "A": q - 7 + 2 * s,
        "B": q + 1 + 2 * s - 4 * t,
        "C": q + 1 - 6 * s,
        "D": q + 1 + 2 * s + 4 * t,
        "E": q - 3 - 2 * s,
    }


def cyclo_number_table(params: QuarticParams, q: int, i: int, j: int) -> int:
    """
    Closed-form cyclotomic number (i, j) of order 4.

    Args:
        params: Quartic parameters of the field and primitive element.
        q: Field order, q = 1 mod 4.
        i: Row index.
        j: Column index.

    Returns:
        The nonnegative integer value of the table entry.
    """
    if q % E != 1:
        raise CyclotomyError("order-4 cyclotomy needs q = 1 mod 4", {"q": q})
    f_even = ((q - 1) // E) % 2 == 0
    layout = _LAYOUT_F_EVEN if f_even else _LAYOUT_F_ODD
    letter = layout[i % E][j % E]
    numerator = _letter_numerators(params, q, f_even)[letter]
    if numerator % 16 or numerator < 0:
        raise CyclotomyError("table value is not a nonnegative integer", {"q": q, "entry": (i, j), "letter": letter, "value": Fraction(numerator, 16)})
    return numerator // 16


def table_oracle_mismatches(sys: CyclotomicSystem, params: QuarticParams | None = None) -> list[tuple[int, int, int, int]]:
    """(i, j, table, oracle) for every entry where the closed form and the count differ."""
    params = params or quartic_params(sys)
    mismatches = []
    for i in range(E):
        for j in range(E):
            oracle = cyclo_number_oracle(sys, i, j)
            try:
                value = cyclo_number_table(params, sys.q, i, j)
            except CyclotomyError:
                value = -1
            if value != oracle:
                mismatches.append((i, j, value, oracle))
    return mismatches


@dataclass(frozen=True)
class SchurProduct:
    """C_i C_j = sum_m class_coeffs[m] C_m + zero_coeff 0_G."""

    class_coeffs: tuple[int, int, int, int]
    zero_coeff: int


def schur_product(sys: CyclotomicSystem, i: int, j: int) -> SchurProduct:
    """
    C_i C_j in the Schur ring spanned by the classes and 0_G.

    The coefficient of C_(k+i) is (j-i, k) and that of 0_G is |C_0 & -C_(j-i)|.
    The expansion is checked against a direct convolution.
    """
    coeffs = tuple(cyclo_number_oracle(sys, j - i, m - i) for m in range(E))
    minus_one_class = 0 if sys.f % 2 == 0 else 2
    zero_coeff = sys.f if (j - i + minus_one_class) % E == 0 else 0
    product = SchurProduct(coeffs, zero_coeff)  # type: ignore[arg-type]

    G = sys.group
    expected = np.zeros(G.v, dtype=np.int64)
    for m, c in enumerate(coeffs):
        expected[sorted(sys.classes[m])] = c
    expected[0] = zero_coeff
    actual = convolve(GroupRingElement.indicator(G, sys.classes[i % E]), GroupRingElement.indicator(G, sys.classes[j % E]))
    if not np.array_equal(actual.coeffs, expected):
        raise InternalDefectError("Schur ring expansion disagrees with convolution", {"q": sys.q, "i": i, "j": j})
    return product


def _is_odd_square(x: Fraction | int) -> bool:
    if isinstance(x, Fraction) and x.denominator != 1:
        return False
    root = exact_sqrt(int(x))
    return root is not None and root % 2 == 1


@dataclass(frozen=True)
class QuarticDsReport:
    """Whether C_0 and C_0 + 0_G are difference sets, predicted and verified."""

    q: int
    c0_predicted: bool
    c0_verified: bool
    c0_params: SdsParams | None
    c0_zero_predicted: bool
    c0_zero_verified: bool
    c0_zero_params: SdsParams | None

    @property
    def agrees(self) -> bool:
        return self.c0_predicted == self.c0_verified and self.c0_zero_predicted == self.c0_zero_verified


def quartic_ds_test(sys: CyclotomicSystem) -> QuarticDsReport:
    """
    C_0 is a (q, (q-1)/4, (q-5)/16) DS iff q = 4t^2 + 1 with t odd;
    C_0 + 0_G is a (q, (q+3)/4, (q+3)/16) DS iff q = 4t^2 + 9 with t odd.
    Both are decided by formula and by brute force.
    """
    q, G = sys.q, sys.group
    c0_predicted = _is_odd_square(Fraction(q - 1, 4))
    c0_zero_predicted = q > 9 and _is_odd_square(Fraction(q - 9, 4))

    c0_params: SdsParams | None = None
    try:
        pds = verify_pds(sys.classes[0], G)
        if pds.lam == pds.mu:
            c0_params = SdsParams(pds.v, pds.k, pds.lam)
    except VerificationError:
        pass

    c0_zero_params: SdsParams | None
    try:
        c0_zero_params = verify_ds(sys.classes[0] | {0}, G)
    except VerificationError:
        c0_zero_params = None

    report = QuarticDsReport(
        q,
        c0_predicted,
        c0_params is not None,
        c0_params,
        c0_zero_predicted,
        c0_zero_params is not None,
        c0_zero_params,
    )
    if c0_params is not None and c0_params != SdsParams(q, (q - 1) // 4, (q - 5) // 16):
        raise ClassificationDisagreement("C_0 difference set has unexpected parameters", {"q": q, "params": str(c0_params)})
    if c0_zero_params is not None and c0_zero_params != SdsParams(q, (q + 3) // 4, (q + 3) // 16):
        raise ClassificationDisagreement("C_0 + 0 difference set has unexpected parameters", {"q": q, "params": str(c0_zero_params)})
    if not report.agrees:
        raise ClassificationDisagreement("difference set criterion disagrees with brute force", {"q": q})
    return report


class CyclotomicCase(str, Enum):
    """Shapes of cyclotomic signed sets D = P - N."""

    WHOLE_MINUS_ZERO = "1a"
    WHOLE_ONE_CLASS_AND_ZERO = "1b"
    WHOLE_TWO_CLASSES = "1c"
    WHOLE_ONE_CLASS = "1d"
    NONZERO_ONE_CLASS = "2a"
    NONZERO_TWO_CLASSES = "2b"
    THREE_CLASSES_AND_ZERO_POSITIVE_CLASS = "3a"
    THREE_CLASSES_AND_ZERO_NEGATIVE_CLASS = "3b"
    THREE_CLASSES_AND_ZERO_NEGATIVE_ZERO = "3c"
    THREE_CLASSES = "4"
    ONE_CLASS_AND_ZERO = "5"
    TWO_CLASSES_AND_ZERO = "6a"
    TWO_CLASSES = "6b"


class IndexMode(str, Enum):
    NONE = "none"
    SINGLE = "single"
    PAIR = "pair"
    ORDERED = "ordered"


@dataclass(frozen=True)
class CaseRule:
    """Shape, index convention, predicted parameters and existence rule of a case."""

    case: CyclotomicCase
    shape: str
    mode: IndexMode
    never: str | None = None


RULES: dict[CyclotomicCase, CaseRule] = {
    rule.case: rule
    for rule in (
        CaseRule(CyclotomicCase.WHOLE_MINUS_ZERO, "P=G-0, N=0", IndexMode.NONE),
        CaseRule(CyclotomicCase.WHOLE_ONE_CLASS_AND_ZERO, "P=G-C_i-0, N=C_i+0", IndexMode.SINGLE),
        CaseRule(
            CyclotomicCase.WHOLE_TWO_CLASSES,
            "P=C_i+C_j, N=G-C_i-C_j",
            IndexMode.PAIR,
            never="P would have to be a difference set; the order-4 cyclotomic numbers rule this out",
        ),
        CaseRule(CyclotomicCase.WHOLE_ONE_CLASS, "P=C_i, N=G-C_i", IndexMode.SINGLE),
        CaseRule(
            CyclotomicCase.NONZERO_ONE_CLASS,
            "P=G-C_i-0, N=C_i",
            IndexMode.SINGLE,
            never="equal class coefficients force s=-1 (f odd) or q=9 with f=1 (f even)",
        ),
        CaseRule(CyclotomicCase.NONZERO_TWO_CLASSES, "P=C_i+C_j, N=G-C_i-C_j-0", IndexMode.PAIR),
        CaseRule(CyclotomicCase.THREE_CLASSES_AND_ZERO_POSITIVE_CLASS, "P=C_i, N=G-C_i-C_j", IndexMode.ORDERED),
        CaseRule(CyclotomicCase.THREE_CLASSES_AND_ZERO_NEGATIVE_CLASS, "P=G-C_i-C_j-0, N=C_i+0", IndexMode.ORDERED),
        CaseRule(CyclotomicCase.THREE_CLASSES_AND_ZERO_NEGATIVE_ZERO, "P=G-C_i-0, N=0", IndexMode.SINGLE),
        CaseRule(CyclotomicCase.THREE_CLASSES, "P=C_i, N=G-C_i-C_j-0", IndexMode.ORDERED),
        CaseRule(CyclotomicCase.ONE_CLASS_AND_ZERO, "P=C_i, N=0", IndexMode.SINGLE),
        CaseRule(CyclotomicCase.TWO_CLASSES_AND_ZERO, "P=C_i, N=C_j+0", IndexMode.ORDERED, never="lambda=-1/2"),
        CaseRule(CyclotomicCase.TWO_CLASSES, "P=C_i, N=C_j", IndexMode.ORDERED, never="lambda=-1/2"),
    )
}

# The existence statement for this family lists k = q - 1 but |P| + |N| = f + 1.
ONE_CLASS_AND_ZERO_NOTE = "existence statement lists k=q-1; constructed sets have k=f+1"


def admissible_indices(case: CyclotomicCase) -> list[tuple[int | None, int | None]]:
    """(i, j) pairs a case is evaluated at, ascending."""
    mode = RULES[case].mode
    if mode is IndexMode.NONE:
        return [(None, None)]
    if mode is IndexMode.SINGLE:
        return [(i, None) for i in range(E)]
    if mode is IndexMode.PAIR:
        return [(i, j) for i in range(E) for j in range(i + 1, E)]
    return [(i, j) for i in range(E) for j in range(E) if i != j]


def _check_indices(case: CyclotomicCase, i: int | None, j: int | None) -> None:
    mode = RULES[case].mode
    valid = range(E)
    if mode is IndexMode.NONE:
        return
    if i is None or i not in valid:
        raise CyclotomyError("case needs a class index i in [0, 3]", {"case": case.value, "i": i})
    if mode is IndexMode.SINGLE:
        return
    if j is None or j not in valid or j == i:
        raise CyclotomyError("case needs a second class index j != i in [0, 3]", {"case": case.value, "i": i, "j": j})


def _shape(sys: CyclotomicSystem, case: CyclotomicCase, i: int | None, j: int | None) -> tuple[frozenset[int], frozenset[int]]:
    everything = frozenset(range(sys.q))
    zero = frozenset({0})
    nonzero = sys.nonzero
    ci = sys.classes[i] if i is not None else frozenset()
    cj = sys.classes[j] if j is not None else frozenset()
    match case:
        case CyclotomicCase.WHOLE_MINUS_ZERO:
            return nonzero, zero
        case CyclotomicCase.WHOLE_ONE_CLASS_AND_ZERO:
            return nonzero - ci, ci | zero
        case CyclotomicCase.WHOLE_TWO_CLASSES:
            return ci | cj, everything - ci - cj
        case CyclotomicCase.WHOLE_ONE_CLASS:
            return ci, everything - ci
        case CyclotomicCase.NONZERO_ONE_CLASS:
            return nonzero - ci, ci
        case CyclotomicCase.NONZERO_TWO_CLASSES:
            return ci | cj, nonzero - ci - cj
        case CyclotomicCase.THREE_CLASSES_AND_ZERO_POSITIVE_CLASS:
            return ci, everything - ci - cj
        case CyclotomicCase.THREE_CLASSES_AND_ZERO_NEGATIVE_CLASS:
            return nonzero - ci - cj, ci | zero
        case CyclotomicCase.THREE_CLASSES_AND_ZERO_NEGATIVE_ZERO:
            return nonzero - ci, zero
        case CyclotomicCase.THREE_CLASSES:
            return ci, nonzero - ci - cj
        case CyclotomicCase.ONE_CLASS_AND_ZERO:
            return ci, zero
        case CyclotomicCase.TWO_CLASSES_AND_ZERO:
            return ci, cj | zero
        case CyclotomicCase.TWO_CLASSES:
            return ci, cj
    raise CyclotomyError("unknown case", {"case": case})


def predicted_params(case: CyclotomicCase, q: int) -> tuple[int, Fraction] | None:
    """Table values (k, lambda); None for families that never exist."""
    f = (q - 1) // E
    table: dict[CyclotomicCase, tuple[int, Fraction]] = {
        CyclotomicCase.WHOLE_MINUS_ZERO: (q, Fraction(q - 4)),
        CyclotomicCase.WHOLE_ONE_CLASS_AND_ZERO: (q, Fraction(q - 9, 4)),
        CyclotomicCase.WHOLE_ONE_CLASS: (q, Fraction(q - 1, 4)),
        CyclotomicCase.NONZERO_TWO_CLASSES: (q - 1, Fraction(-1)),
        CyclotomicCase.THREE_CLASSES_AND_ZERO_POSITIVE_CLASS: (3 * f + 1, Fraction(f - 1, 4)),
        CyclotomicCase.THREE_CLASSES_AND_ZERO_NEGATIVE_CLASS: (3 * f + 1, Fraction(f - 5, 4)),
        CyclotomicCase.THREE_CLASSES_AND_ZERO_NEGATIVE_ZERO: (3 * f + 1, Fraction(9 * f - 9, 4)),
        CyclotomicCase.THREE_CLASSES: (3 * f, Fraction(f - 3, 4)),
        CyclotomicCase.ONE_CLASS_AND_ZERO: (f + 1, Fraction(f - 3, 4)),
    }
    return table.get(case)


def case_condition(case: CyclotomicCase, params: QuarticParams, q: int, p: int, i: int | None, j: int | None) -> bool:
    """Closed-form existence condition of a case at (i, j)."""
    if RULES[case].never is not None:
        return False
    predicted = predicted_params(case, q)
    if predicted is None or predicted[1].denominator != 1:
        return False
    f = (q - 1) // E
    s, t = params.s, params.t
    delta = (i - j) % E if i is not None and j is not None else None
    match case:
        case CyclotomicCase.WHOLE_MINUS_ZERO:
            return True
        case CyclotomicCase.WHOLE_ONE_CLASS_AND_ZERO:
            return q > 9 and _is_odd_square(Fraction(q - 9, 4))
        case CyclotomicCase.WHOLE_ONE_CLASS:
            return _is_odd_square(Fraction(q - 1, 4))
        case CyclotomicCase.NONZERO_TWO_CLASSES:
            return delta == 2 or p % 4 == 3
        case CyclotomicCase.THREE_CLASSES_AND_ZERO_POSITIVE_CLASS:
            return f % 4 == 1 and (
                (delta == 1 and 4 * t + 3 * s == 3) or (delta == 2 and s == 9) or (delta == 3 and 3 * s - 4 * t == 3)
            )
        case CyclotomicCase.THREE_CLASSES_AND_ZERO_NEGATIVE_CLASS:
            return f % 4 == 1 and (
                (delta == 1 and 3 * s + 4 * t == -5) or (delta == 2 and s == -15) or (delta == 3 and 4 * t - 3 * s == 5)
            )
        case CyclotomicCase.THREE_CLASSES_AND_ZERO_NEGATIVE_ZERO:
            return f % 4 == 1 and s == -7
        case CyclotomicCase.THREE_CLASSES:
            return f % 4 == 3 and (
                (delta == 1 and 3 * s + 4 * t == -1) or (delta == 2 and s == -3) or (delta == 3 and 3 * s - 4 * t == -1)
            )
        case CyclotomicCase.ONE_CLASS_AND_ZERO:
            return f % 4 == 3 and s == 5
    return False


@dataclass(frozen=True)
class CyclotomicCandidate:
    """A constructed cyclotomic signed set with its closed-form verdict."""

    q: int
    case: CyclotomicCase
    i: int | None
    j: int | None
    signed_set: SignedSet
    predicted: SdsParams | None
    condition: bool
    reason: str


def cyclotomic_construct(
    sys: CyclotomicSystem,
    case: CyclotomicCase | str,
    i: int | None = None,
    j: int | None = None,
    params: QuarticParams | None = None,
) -> CyclotomicCandidate:
    """
    Build the signed set of a case and attach its predicted parameters.

    Args:
        sys: Cyclotomic system.
        case: Case identifier such as "4" or "2b".
        i: First class index where the case needs one.
        j: Second class index where the case needs one.
        params: Quartic parameters; computed from sys when omitted.

    Returns:
        The candidate; families that never exist carry the reason.
    """
    try:
        case = CyclotomicCase(case)
    except ValueError as e:
        raise CyclotomyError("unknown cyclotomic case", {"case": case}) from e
    _check_indices(case, i, j)
    if RULES[case].mode is IndexMode.NONE:
        i = j = None
    elif RULES[case].mode is IndexMode.SINGLE:
        j = None
    params = params or quartic_params(sys)

    positive, negative = _shape(sys, case, i, j)
    D = SignedSet(sys.group, positive, negative)
    rule = RULES[case]
    holds = case_condition(case, params, sys.q, sys.field.p, i, j)
    table = predicted_params(case, sys.q)
    predicted = SdsParams(sys.q, table[0], int(table[1])) if table is not None and table[1].denominator == 1 else None

    if rule.never is not None:
        reason = f"never exists: {rule.never}"
    elif table is not None and table[1].denominator != 1:
        reason = f"lambda={table[1]} is not an integer"
    elif holds:
        reason = "condition holds"
    else:
        reason = "condition fails"
    return CyclotomicCandidate(sys.q, case, i, j, D, predicted, holds, reason)


@dataclass(frozen=True)
class ClassificationRow:
    """One classified candidate."""

    q: int
    case: CyclotomicCase
    i: int | None
    j: int | None
    predicted: SdsParams | None
    condition: bool
    verified: bool
    actual: SdsParams | None
    root: int | None
    reason: str
    note: str = ""

    @property
    def agrees(self) -> bool:
        if self.condition != self.verified:
            return False
        return not self.verified or self.actual == self.predicted


@dataclass(frozen=True)
class FamilySummary:
    """Existence of one case family, quantified over (i, j)."""

    case: CyclotomicCase
    exists: bool
    predicted: bool
    predicted_some_primitive: bool


@dataclass(frozen=True)
class ClassificationReport:
    """Classification of every case at one q."""

    q: int
    s: int
    t: int
    w: tuple[int, ...]
    rows: tuple[ClassificationRow, ...]
    families: tuple[FamilySummary, ...]
    quartic_ds: QuarticDsReport | None = field(default=None)
    table_mismatches: tuple[tuple[int, int, int, int], ...] = ()

    @property
    def disagreements(self) -> list[ClassificationRow]:
        return [row for row in self.rows if not row.agrees]

    @property
    def consistent(self) -> bool:
        return not self.disagreements and not self.table_mismatches

    def existing(self) -> Iterator[ClassificationRow]:
        return (row for row in self.rows if row.verified)


def _verify_candidate(candidate: CyclotomicCandidate) -> tuple[SdsParams | None, int | None]:
    try:
        actual = verify_sds(candidate.signed_set, strict=True)
    except VerificationError:
        return None, None
    D = candidate.signed_set
    certificate = feasible(actual.v, actual.k, actual.lam, (len(D.positive), len(D.negative)))
    if not certificate.accepted:
        raise InternalDefectError("verified SDS fails the feasibility test", {"params": str(actual), "reason": certificate.reason})
    return actual, certificate.root


def cyclotomic_classify(F: FiniteField, w: FieldElement | Sequence[int] | int | None = None) -> ClassificationReport:
    """
    Evaluate every case at every admissible (i, j) by formula and by brute force.

    Disagreements are kept in the report (see ClassificationReport.disagreements);
    callers decide how to surface them.
    """
    sys = cyclotomic_system(F, w)
    params = quartic_params(sys)
    flipped = params.negated()
    rows: list[ClassificationRow] = []
    families: list[FamilySummary] = []
    for case in CyclotomicCase:
        case_rows = []
        some_primitive = False
        for i, j in admissible_indices(case):
            candidate = cyclotomic_construct(sys, case, i, j, params)
            actual, root = _verify_candidate(candidate)
            note = ONE_CLASS_AND_ZERO_NOTE if case is CyclotomicCase.ONE_CLASS_AND_ZERO else ""
            row = ClassificationRow(
                sys.q, case, i, j, candidate.predicted, candidate.condition, actual is not None, actual, root, candidate.reason, note
            )
            case_rows.append(row)
            some_primitive = some_primitive or candidate.condition or case_condition(case, flipped, sys.q, F.p, i, j)
        rows.extend(case_rows)
        families.append(
            FamilySummary(
                case,
                exists=any(r.verified for r in case_rows),
                predicted=any(r.condition for r in case_rows),
                predicted_some_primitive=some_primitive,
            )
        )

    report = ClassificationReport(
        sys.q,
        params.s,
        params.t,
        sys.w.coords,
        tuple(rows),
        tuple(families),
        quartic_ds_test(sys),
        tuple(table_oracle_mismatches(sys, params)),
    )
    if not report.consistent:
        logger.warning(
            "Cyclotomic classification disagreements found", q=sys.q, rows=len(report.disagreements), table=len(report.table_mismatches)
        )
    else:
        logger.info("Cyclotomic classification complete", q=sys.q, existing=sum(1 for _ in report.existing()))
    return report
