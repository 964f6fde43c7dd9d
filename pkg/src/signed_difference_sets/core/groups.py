"""Finite abelian groups in direct-product form and their characters.

Elements of Z_{d_1} x ... x Z_{d_r} are indexed in mixed radix with the first
coordinate most significant (numpy C order), so a length-v coefficient vector
reshapes to an array of shape `orders`. Characters are indexed the same way by
their parameter tuple a.
"""

import math
from collections.abc import Iterator, Mapping, Sequence
from dataclasses import dataclass
from functools import cached_property
from typing import TYPE_CHECKING

import numpy as np

from ..logging_config import StructuredLogger
from ..utils.errors import GroupError
from .cyclotomic_integer import CyclotomicInteger, reduce_buckets

if TYPE_CHECKING:
    from .finite_field import FiniteField
    from .groupring import GroupRingElement

logger = StructuredLogger("core.groups")

# Characters processed per block when evaluating all character sums.
_CHARACTER_BLOCK = 256


@dataclass(frozen=True, slots=True)
class GroupElement:
    """Coordinate tuple with coords[i] in [0, d_i)."""

    coords: tuple[int, ...]


@dataclass(frozen=True)
class AbelianGroup:
    """Direct product of cyclic groups of the given orders."""

    orders: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.orders:
            raise GroupError("a group needs at least one cyclic factor")
        if any(d < 1 for d in self.orders):
            raise GroupError("cyclic factor orders must be positive", {"orders": self.orders})

    @property
    def v(self) -> int:
        return math.prod(self.orders)

    @property
    def exponent(self) -> int:
        return math.lcm(*self.orders)

    @property
    def rank(self) -> int:
        return len(self.orders)

    @property
    def is_cyclic_presentation(self) -> bool:
        return len(self.orders) == 1

    @property
    def zero(self) -> GroupElement:
        return GroupElement((0,) * self.rank)

    @cached_property
    def coords_array(self) -> np.ndarray:
        """(v, r) array whose row g holds the coordinates of element g."""
        return np.indices(self.orders).reshape(self.rank, -1).T.astype(np.int64)

    @cached_property
    def neg_index(self) -> np.ndarray:
        """Permutation g -> index of -g."""
        neg = (-self.coords_array) % np.array(self.orders, dtype=np.int64)
        return np.ravel_multi_index(tuple(neg.T), self.orders).astype(np.int64)

    def index(self, x: GroupElement | Sequence[int]) -> int:
        coords = x.coords if isinstance(x, GroupElement) else tuple(x)
        self._check(coords)
        value = 0
        for c, d in zip(coords, self.orders, strict=True):
            value = value * d + c
        return value

    def element(self, index: int) -> GroupElement:
        if not 0 <= index < self.v:
            raise GroupError("element index out of range", {"index": index, "v": self.v})
        return GroupElement(tuple(int(c) for c in np.unravel_index(index, self.orders)))

    def elements(self) -> Iterator[GroupElement]:
        for i in range(self.v):
            yield self.element(i)

    def add(self, x: GroupElement, y: GroupElement) -> GroupElement:
        return GroupElement(tuple((a + b) % d for a, b, d in zip(x.coords, y.coords, self.orders, strict=True)))

    def neg(self, x: GroupElement) -> GroupElement:
        return GroupElement(tuple(-a % d for a, d in zip(x.coords, self.orders, strict=True)))

    def sub(self, x: GroupElement, y: GroupElement) -> GroupElement:
        return self.add(x, self.neg(y))

    def contains(self, coords: Sequence[int]) -> bool:
        return len(coords) == self.rank and all(0 <= c < d for c, d in zip(coords, self.orders, strict=True))

    def _check(self, coords: Sequence[int]) -> None:
        if not self.contains(coords):
            raise GroupError("coordinates outside the group", {"coords": tuple(coords), "orders": self.orders})

    def __str__(self) -> str:
        return " x ".join(f"Z_{d}" for d in self.orders)


def group_make(orders: Sequence[int]) -> AbelianGroup:
    """Group Z_{d_1} x ... x Z_{d_r} with deterministic element indexing."""
    return AbelianGroup(tuple(int(d) for d in orders))


def additive_group(F: "FiniteField") -> AbelianGroup:
    """(F, +) as Z_p^n; field coordinates are group coordinates."""
    return AbelianGroup((F.p,) * F.n)


@dataclass(frozen=True)
class Character:
    """chi_a(x) = zeta_m^(sum_i (m/d_i) a_i x_i) with m the group exponent."""

    group: AbelianGroup
    a: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.group.contains(self.a):
            raise GroupError("character parameter outside the group", {"a": self.a, "orders": self.group.orders})

    @property
    def m(self) -> int:
        return self.group.exponent

    @property
    def is_principal(self) -> bool:
        return not any(self.a)

    @cached_property
    def weights(self) -> np.ndarray:
        """Per-coordinate multipliers (m/d_i) * a_i."""
        m = self.m
        return np.array([(m // d) * ai for ai, d in zip(self.a, self.group.orders, strict=True)], dtype=np.int64)

    def exponents(self) -> np.ndarray:
        """Exponent of chi at every element, in index order."""
        return (self.group.coords_array @ self.weights) % self.m

    def exponent_at(self, x: GroupElement) -> int:
        return int(np.dot(self.weights, np.array(x.coords, dtype=np.int64)) % self.m)


def character(G: AbelianGroup, a: Sequence[int]) -> Character:
    return Character(G, tuple(int(c) for c in a))


def characters(G: AbelianGroup) -> Iterator[Character]:
    """All characters of G in the mixed-radix order of their parameters."""
    for index in range(G.v):
        yield Character(G, G.element(index).coords)


def char_eval(chi: Character, x: GroupElement) -> CyclotomicInteger:
    """chi(x) as a root of unity in Z[zeta_m]."""
    if len(x.coords) != chi.group.rank:
        raise GroupError("element and character belong to different groups")
    return CyclotomicInteger.root(chi.m, chi.exponent_at(x))


def _check_group(chi_group: AbelianGroup, A: "GroupRingElement") -> None:
    if A.group != chi_group:
        raise GroupError("character and element belong to different groups", {"character": str(chi_group), "element": str(A.group)})


def char_sum(chi: Character, A: "GroupRingElement") -> CyclotomicInteger:
    """chi(A) = sum_g A_g chi(g), exact."""
    _check_group(chi.group, A)
    support = np.nonzero(A.coeffs)[0]
    buckets = np.zeros(chi.m, dtype=np.int64)
    exps = (chi.group.coords_array[support] @ chi.weights) % chi.m
    np.add.at(buckets, exps, A.coeffs[support])
    return CyclotomicInteger.from_buckets(chi.m, buckets)


def all_char_sums(A: "GroupRingElement") -> list[CyclotomicInteger]:
    """chi_a(A) for every character, in character index order.

    Works on the support of A and processes characters in blocks, so groups
    of order near 2*10^4 stay within memory.
    """
    G = A.group
    m = G.exponent
    support = np.nonzero(A.coeffs)[0]
    # Support columns grouped by coefficient value, so bucket counts stay integral.
    by_value = [(int(c), support[A.coeffs[support] == c]) for c in np.unique(A.coeffs[support])]
    scale = np.array([m // d for d in G.orders], dtype=np.int64)

    sums: list[CyclotomicInteger] = []
    for start in range(0, G.v, _CHARACTER_BLOCK):
        block = G.coords_array[start : start + _CHARACTER_BLOCK] * scale
        rows = block.shape[0]
        offsets = np.arange(rows, dtype=np.int64)[:, None] * m
        buckets = np.zeros(rows * m, dtype=np.int64)
        for value, columns in by_value:
            exps = (block @ G.coords_array[columns].T) % m
            buckets += value * np.bincount((offsets + exps).ravel(), minlength=rows * m)
        sums.extend(CyclotomicInteger.from_buckets(m, row) for row in buckets.reshape(rows, m))
    return sums


def coefficients_from_characters(sums: Mapping[Character, CyclotomicInteger], G: AbelianGroup) -> "GroupRingElement":
    """
    Recover A from its character sums via a_g = (1/|G|) sum_chi chi(A) chi(-g).

    Args:
        sums: chi(A) for every character chi of G.
        G: The group.

    Returns:
        The group ring element A.

    Raises:
        GroupError: When a character is missing or a recovered coefficient is
            not a rational integer.
    """
    from .groupring import GroupRingElement

    m = G.exponent
    ordered = []
    for chi in characters(G):
        if chi not in sums:
            raise GroupError("character sum missing", {"a": chi.a})
        value = sums[chi]
        if value.m != m:
            raise GroupError("character sum has the wrong cyclotomic order", {"a": chi.a, "m": value.m})
        ordered.append(value.buckets())
    S = np.array(ordered, dtype=np.int64)

    scale = np.array([m // d for d in G.orders], dtype=np.int64)
    exponent_table = ((G.coords_array * scale) @ G.coords_array.T) % m
    rows = np.arange(G.v)[:, None]
    shifts = np.arange(m)[None, :]

    coeffs = np.zeros(G.v, dtype=np.int64)
    for g in range(G.v):
        # sum_chi S_chi * zeta^(-e_chi(g)): bucket j collects S_chi[j + e_chi(g)].
        gathered = S[rows, (shifts + exponent_table[:, g][:, None]) % m].sum(axis=0)
        total = reduce_buckets(m, gathered)
        if any(total[1:]) or total[0] % G.v:
            raise GroupError("character sums are inconsistent", {"element": G.element(g).coords})
        coeffs[g] = total[0] // G.v
    return GroupRingElement(G, coeffs)
