"""Integer group ring Z[G] and signed sets.

A GroupRingElement is a dense int64 coefficient vector indexed by element
index. Convolution reshapes to the group's factor orders and accumulates
rolled copies, one per support element of the left operand.
"""

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field

import numpy as np

from ..utils.errors import GroupError, StrictnessError, SupportOverlapError
from .groups import AbelianGroup


class GroupRingElement:
    """Element sum_g a_g g of Z[G]; coefficients are read-only."""

    __slots__ = ("group", "coeffs")

    def __init__(self, group: AbelianGroup, coeffs: Sequence[int] | np.ndarray) -> None:
        array = np.array(coeffs, dtype=np.int64)
        if array.shape != (group.v,):
            raise GroupError("coefficient vector length must equal the group order", {"length": array.size, "v": group.v})
        array.setflags(write=False)
        self.group = group
        self.coeffs = array

    @classmethod
    def zero(cls, group: AbelianGroup) -> "GroupRingElement":
        return cls(group, np.zeros(group.v, dtype=np.int64))

    @classmethod
    def indicator(cls, group: AbelianGroup, indices: Iterable[int]) -> "GroupRingElement":
        """Sum of the listed elements, each with coefficient one."""
        coeffs = np.zeros(group.v, dtype=np.int64)
        for i in indices:
            coeffs[i] += 1
        return cls(group, coeffs)

    @classmethod
    def identity(cls, group: AbelianGroup) -> "GroupRingElement":
        return cls.indicator(group, [0])

    @classmethod
    def full(cls, group: AbelianGroup) -> "GroupRingElement":
        return cls(group, np.ones(group.v, dtype=np.int64))

    def coefficient(self, index: int) -> int:
        return int(self.coeffs[index])

    @property
    def support(self) -> np.ndarray:
        return np.nonzero(self.coeffs)[0]

    @property
    def weight(self) -> int:
        """Generalized size k = sum of squared coefficients."""
        return int(np.dot(self.coeffs, self.coeffs))

    @property
    def augmentation(self) -> int:
        """Sum of coefficients (the principal character value)."""
        return int(self.coeffs.sum())

    def is_signed(self) -> bool:
        """True when every coefficient lies in {-1, 0, 1}."""
        return bool(np.all(np.abs(self.coeffs) <= 1))

    def strictness_violations(self) -> np.ndarray:
        """Indices whose coefficient lies outside {-1, 0, 1}."""
        return np.nonzero(np.abs(self.coeffs) > 1)[0]

    def __add__(self, other: "GroupRingElement") -> "GroupRingElement":
        return ring_sum([self, other])

    def __sub__(self, other: "GroupRingElement") -> "GroupRingElement":
        return ring_sum([self, -other])

    def __neg__(self) -> "GroupRingElement":
        return GroupRingElement(self.group, -self.coeffs)

    def __mul__(self, other: "GroupRingElement | int") -> "GroupRingElement":
        if isinstance(other, int):
            return GroupRingElement(self.group, self.coeffs * other)
        return convolve(self, other)

    def __rmul__(self, other: int) -> "GroupRingElement":
        return GroupRingElement(self.group, self.coeffs * other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        return self.group == other.group and bool(np.array_equal(self.coeffs, other.coeffs))

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"GroupRingElement({self.group}, support={self.support.size}, weight={self.weight})"


@dataclass(frozen=True)
class SignedSet:
    """D = P - N with disjoint positive and negative supports."""

    group: AbelianGroup
    positive: frozenset[int] = field(default_factory=frozenset)
    negative: frozenset[int] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        object.__setattr__(self, "positive", frozenset(int(i) for i in self.positive))
        object.__setattr__(self, "negative", frozenset(int(i) for i in self.negative))
        overlap = self.positive & self.negative
        if overlap:
            g = self.group.element(min(overlap))
            raise SupportOverlapError("positive and negative supports overlap", {"element": g.coords, "count": len(overlap)})
        for i in self.positive | self.negative:
            if not 0 <= i < self.group.v:
                raise GroupError("element index out of range", {"index": i, "v": self.group.v})

    @property
    def k(self) -> int:
        return len(self.positive) + len(self.negative)

    @property
    def imbalance(self) -> int:
        """|P| - |N|."""
        return len(self.positive) - len(self.negative)

    @classmethod
    def from_ring(cls, A: GroupRingElement) -> "SignedSet":
        """Signed set of a {-1, 0, 1}-valued element."""
        bad = A.strictness_violations()
        if bad.size:
            g = A.group.element(int(bad[0]))
            raise StrictnessError(
                "coefficient outside {-1, 0, 1}",
                {"element": g.coords, "coefficient": A.coefficient(int(bad[0])), "violations": int(bad.size)},
            )
        return cls(A.group, frozenset(np.nonzero(A.coeffs == 1)[0].tolist()), frozenset(np.nonzero(A.coeffs == -1)[0].tolist()))


def to_ring(D: SignedSet) -> GroupRingElement:
    """+1 on P, -1 on N, 0 elsewhere."""
    coeffs = np.zeros(D.group.v, dtype=np.int64)
    coeffs[list(D.positive)] = 1
    coeffs[list(D.negative)] = -1
    return GroupRingElement(D.group, coeffs)


def negate(D: SignedSet) -> SignedSet:
    """-D = N - P."""
    return SignedSet(D.group, D.negative, D.positive)


def _same_group(parts: Sequence[GroupRingElement]) -> AbelianGroup:
    group = parts[0].group
    for part in parts[1:]:
        if part.group != group:
            raise GroupError("group ring elements belong to different groups", {"left": str(group), "right": str(part.group)})
    return group


def ring_sum(parts: Sequence[GroupRingElement]) -> GroupRingElement:
    """Coefficientwise sum; no magnitude restriction."""
    if not parts:
        raise GroupError("ring_sum needs at least one summand")
    group = _same_group(parts)
    total = np.zeros(group.v, dtype=np.int64)
    for part in parts:
        total += part.coeffs
    return GroupRingElement(group, total)


def involution(A: GroupRingElement) -> GroupRingElement:
    """A^(-1): the coefficient at g becomes the input coefficient at -g."""
    x = A.coeffs.reshape(A.group.orders)
    for axis in range(x.ndim):
        x = np.roll(np.flip(x, axis), 1, axis)
    return GroupRingElement(A.group, x.reshape(-1))


def convolve(A: GroupRingElement, B: GroupRingElement) -> GroupRingElement:
    """(A B)_g = sum_h A_h B_(g-h), exact."""
    group = _same_group([A, B])
    axes = tuple(range(group.rank))
    b = B.coeffs.reshape(group.orders)
    result = np.zeros(group.orders, dtype=np.int64)
    support = A.support
    coords = group.coords_array[support]
    for h, shift in zip(support, coords, strict=True):
        result += A.coeffs[h] * np.roll(b, tuple(int(s) for s in shift), axis=axes)
    return GroupRingElement(group, result.reshape(-1))


def difference_function(A: GroupRingElement) -> GroupRingElement:
    """A A^(-1)."""
    return convolve(A, involution(A))
