"""Exact arithmetic in the ring of cyclotomic integers Z[zeta_m].

Values are stored on the power basis {1, zeta, ..., zeta^(d-1)} with
d = deg Phi_m. Anything expressed in exponent buckets (a length-m vector
whose entry e counts zeta^e) is reduced modulo Phi_m on the way in.
"""

from collections.abc import Sequence
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from ..utils.errors import GroupError
from ..utils.number_theory import divisors


def _exact_divide(num: list[int], den: tuple[int, ...]) -> list[int]:
    """Divide integer polynomials (ascending) when den is monic and divides num."""
    rem = list(num)
    quot = [0] * (len(num) - len(den) + 1)
    for shift in range(len(quot) - 1, -1, -1):
        c = rem[shift + len(den) - 1]
        if c:
            quot[shift] = c
            for j, y in enumerate(den):
                rem[shift + j] -= c * y
    if any(rem):
        raise ArithmeticError("inexact polynomial division")
    return quot


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Coefficients of Phi_m in ascending degree order.

    Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d.
    """
    if m < 1:
        raise GroupError("root-of-unity order must be positive", {"m": m})
    num = [-1] + [0] * (m - 1) + [1]
    for d in divisors(m):
        if d < m:
            num = _exact_divide(num, cyclotomic_polynomial(d))
    return tuple(num)


def _phi_degree(m: int) -> int:
    return len(cyclotomic_polynomial(m)) - 1


def reduce_buckets(m: int, buckets: np.ndarray) -> np.ndarray:
    """Reduce an integer coefficient vector in powers of zeta_m modulo Phi_m."""
    phi = np.array(cyclotomic_polynomial(m), dtype=np.int64)
    d = len(phi) - 1
    c = np.array(buckets, dtype=np.int64)
    if c.size < d:
        c = np.concatenate([c, np.zeros(d - c.size, dtype=np.int64)])
    for top in range(c.size - 1, d - 1, -1):
        lead = c[top]
        if lead:
            c[top - d : top + 1] -= lead * phi
    return c[:d].copy()


@dataclass(frozen=True, slots=True)
class CyclotomicInteger:
    """Element of Z[zeta_m] on the reduced power basis."""

    m: int
    coeffs: tuple[int, ...]

    @classmethod
    def from_buckets(cls, m: int, buckets: np.ndarray | Sequence[int]) -> "CyclotomicInteger":
        """Build from exponent buckets of any length (entry e multiplies zeta^e)."""
        reduced = reduce_buckets(m, np.asarray(buckets, dtype=np.int64))
        return cls(m, tuple(int(x) for x in reduced))

    @classmethod
    def integer(cls, m: int, value: int) -> "CyclotomicInteger":
        d = _phi_degree(m)
        return cls(m, (int(value),) + (0,) * (d - 1))

    @classmethod
    def root(cls, m: int, exponent: int) -> "CyclotomicInteger":
        """zeta_m ** exponent."""
        buckets = np.zeros(m, dtype=np.int64)
        buckets[exponent % m] = 1
        return cls.from_buckets(m, buckets)

    def buckets(self) -> np.ndarray:
        """Length-m exponent vector representing this value."""
        out = np.zeros(self.m, dtype=np.int64)
        out[: len(self.coeffs)] = self.coeffs
        return out

    def is_integer(self) -> bool:
        return not any(self.coeffs[1:])

    def as_integer(self) -> int | None:
        """The rational integer value, or None when not rational."""
        return self.coeffs[0] if self.is_integer() else None

    def rotate(self, exponent: int) -> "CyclotomicInteger":
        """Multiply by zeta_m ** exponent."""
        return CyclotomicInteger.from_buckets(self.m, np.roll(self.buckets(), exponent))

    def __add__(self, other: "CyclotomicInteger") -> "CyclotomicInteger":
        return ci_add(self, other)

    def __sub__(self, other: "CyclotomicInteger") -> "CyclotomicInteger":
        return ci_add(self, -other)

    def __neg__(self) -> "CyclotomicInteger":
        return CyclotomicInteger(self.m, tuple(-c for c in self.coeffs))

    def __mul__(self, other: "CyclotomicInteger") -> "CyclotomicInteger":
        return ci_mul(self, other)

    def __str__(self) -> str:
        terms = []
        for e, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}" if e == 0 else f"{c}*z{self.m}^{e}")
        return " + ".join(terms) if terms else "0"


def _same_order(x: CyclotomicInteger, y: CyclotomicInteger) -> None:
    if x.m != y.m:
        raise GroupError("cyclotomic orders differ", {"left": x.m, "right": y.m})


def ci_add(x: CyclotomicInteger, y: CyclotomicInteger) -> CyclotomicInteger:
    _same_order(x, y)
    return CyclotomicInteger(x.m, tuple(a + b for a, b in zip(x.coeffs, y.coeffs, strict=True)))


def ci_mul(x: CyclotomicInteger, y: CyclotomicInteger) -> CyclotomicInteger:
    _same_order(x, y)
    product = np.convolve(np.array(x.coeffs, dtype=np.int64), np.array(y.coeffs, dtype=np.int64))
    return CyclotomicInteger.from_buckets(x.m, product)


def ci_conj(x: CyclotomicInteger) -> CyclotomicInteger:
    """Complex conjugate: zeta -> zeta^(m-1)."""
    conj = np.zeros(x.m, dtype=np.int64)
    for e, c in enumerate(x.coeffs):
        conj[-e % x.m] += c
    return CyclotomicInteger.from_buckets(x.m, conj)


def ci_is_integer(x: CyclotomicInteger) -> bool:
    return x.is_integer()


def norm_squared(x: CyclotomicInteger) -> CyclotomicInteger:
    """x * conj(x), i.e. |x|^2 as an element of Z[zeta_m]."""
    return ci_mul(x, ci_conj(x))
