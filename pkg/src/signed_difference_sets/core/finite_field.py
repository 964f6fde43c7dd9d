"""Finite fields GF(p^n) backed by galois.

Elements are coordinate tuples over Z_p with the highest power of x first,
the order of ``FieldArray.vector()``. The integer index of an element reads
those coordinates as base-p digits, first coordinate most significant, which
is galois's integer representation and the mixed-radix order the groups
module uses. The index of a field element therefore equals the index of the
matching element of its additive group.

The modulus is stored as ascending coefficients (c_0, ..., c_n).
"""

from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from functools import cached_property, lru_cache

import galois
import numpy as np

from ..config import get_settings
from ..logging_config import StructuredLogger
from ..utils.errors import FieldError
from ..utils.number_theory import is_prime

logger = StructuredLogger("core.finite_field")

Modulus = tuple[int, ...]


@dataclass(frozen=True, slots=True)
class FieldElement:
    """Element of GF(p^n) as its coordinate vector, highest degree first."""

    coords: tuple[int, ...]


def modulus_poly(modulus: Sequence[int], p: int) -> galois.Poly:
    """Ascending coefficients as a galois polynomial over GF(p)."""
    return galois.Poly([int(c) % p for c in reversed(modulus)], field=galois.GF(p))


def poly_modulus(f: galois.Poly) -> Modulus:
    """Ascending coefficients of a galois polynomial."""
    return tuple(int(c) for c in reversed(f.coeffs))


def check_modulus(p: int, n: int, modulus: Sequence[int]) -> Modulus:
    """Validate a monic irreducible modulus of degree n, ascending coefficients."""
    f = tuple(int(c) for c in modulus)
    if len(f) != n + 1 or f[-1] != 1 or any(not 0 <= c < p for c in f):
        raise FieldError("modulus must be monic of degree n", {"modulus": f, "n": n})
    if not modulus_poly(f, p).is_irreducible():
        raise FieldError("modulus is reducible", {"modulus": f, "p": p})
    return f


@lru_cache(maxsize=64)
def _field_class(p: int, n: int, modulus: Modulus) -> type[galois.FieldArray]:
    if n == 1:
        return galois.GF(p)
    return galois.GF(p**n, irreducible_poly=modulus_poly(modulus, p))


@dataclass(frozen=True)
class FiniteField:
    """GF(p^n) with a fixed irreducible modulus and primitive element w."""

    p: int
    n: int
    modulus: Modulus
    w: FieldElement

    def __post_init__(self) -> None:
        if not is_prime(self.p):
            raise FieldError("characteristic must be prime", {"p": self.p})
        if self.n < 1:
            raise FieldError("extension degree must be at least 1", {"n": self.n})
        modulus = check_modulus(self.p, self.n, self.modulus)
        object.__setattr__(self, "modulus", modulus)
        self._check(self.w)
        if not self.is_primitive(self.w):
            raise FieldError("w is not a primitive element", {"w": self.w.coords, "q": self.q})

    @property
    def q(self) -> int:
        return self.p**self.n

    @cached_property
    def gf(self) -> type[galois.FieldArray]:
        """The galois field class carrying this modulus."""
        return _field_class(self.p, self.n, self.modulus)

    @property
    def zero(self) -> FieldElement:
        return FieldElement((0,) * self.n)

    @property
    def one(self) -> FieldElement:
        return FieldElement((0,) * (self.n - 1) + (1,))

    # -- encoding -----------------------------------------------------------

    def element(self, index: int) -> FieldElement:
        """Field element with the given index in [0, q)."""
        if not 0 <= index < self.q:
            raise FieldError("element index out of range", {"index": index, "q": self.q})
        return FieldElement(_digits(index, self.p, self.n))

    def index(self, x: FieldElement) -> int:
        """Index of x (first coordinate most significant)."""
        value = 0
        for c in x.coords:
            value = value * self.p + c
        return value

    def elements(self) -> Iterator[FieldElement]:
        """All q elements in index order."""
        for i in range(self.q):
            yield self.element(i)

    def from_int(self, c: int) -> FieldElement:
        """Embed c mod p into the prime subfield."""
        return FieldElement((0,) * (self.n - 1) + (c % self.p,))

    def coerce(self, value: FieldElement | Sequence[int] | int) -> FieldElement:
        """Accept an element, a coordinate sequence or a prime-subfield integer."""
        if isinstance(value, FieldElement):
            x = value
        elif isinstance(value, int):
            x = self.from_int(value)
        else:
            x = FieldElement(tuple(int(c) for c in value))
        self._check(x)
        return x

    def prime_subfield_value(self, x: FieldElement) -> int | None:
        """Integer in [0, p) when x lies in Z_p, else None."""
        if any(x.coords[:-1]):
            return None
        return x.coords[-1]

    def _check(self, x: FieldElement) -> None:
        if len(x.coords) != self.n or any(not 0 <= c < self.p for c in x.coords):
            raise FieldError("element does not belong to the field", {"coords": x.coords, "q": self.q})

    def array(self, x: FieldElement) -> galois.FieldArray:
        return self.gf(self.index(x))

    def _wrap(self, a: galois.FieldArray) -> FieldElement:
        return self.element(int(a))

    # -- arithmetic ---------------------------------------------------------

    def add(self, x: FieldElement, y: FieldElement) -> FieldElement:
        return self._wrap(self.array(x) + self.array(y))

    def neg(self, x: FieldElement) -> FieldElement:
        return self._wrap(-self.array(x))

    def sub(self, x: FieldElement, y: FieldElement) -> FieldElement:
        return self._wrap(self.array(x) - self.array(y))

    def mul(self, x: FieldElement, y: FieldElement) -> FieldElement:
        return self._wrap(self.array(x) * self.array(y))

    def pow(self, x: FieldElement, exponent: int) -> FieldElement:
        """x**exponent; negative exponents invert first."""
        if exponent < 0:
            return self.pow(self.inv(x), -exponent)
        return self._wrap(self.array(x) ** exponent)

    def inv(self, x: FieldElement) -> FieldElement:
        if x == self.zero:
            raise FieldError("inversion of zero", {"q": self.q})
        return self._wrap(self.array(x) ** -1)

    def order(self, x: FieldElement) -> int:
        """Multiplicative order of a nonzero element."""
        if x == self.zero:
            raise FieldError("zero has no multiplicative order", {"q": self.q})
        return int(self.array(x).multiplicative_order())

    def is_primitive(self, x: FieldElement) -> bool:
        """True iff x generates the multiplicative group."""
        return x != self.zero and self.order(x) == self.q - 1

    def primitive_elements(self) -> Iterator[FieldElement]:
        """All primitive elements in index order."""
        for index in sorted(int(a) for a in self.gf.primitive_elements):
            yield self.element(index)

    def nonzero_squares(self) -> frozenset[int]:
        """Indices of the nonzero squares."""
        nonzero = self.gf.elements[1:]
        return frozenset(int(a) for a in np.unique((nonzero**2).view(np.ndarray)))

    def with_primitive(self, w: FieldElement | Sequence[int] | int) -> "FiniteField":
        """Same field and modulus with another primitive element."""
        return FiniteField(self.p, self.n, self.modulus, self.coerce(w))

    def __str__(self) -> str:
        return f"GF({self.q})"


@lru_cache(maxsize=64)
def smallest_irreducible(p: int, n: int) -> Modulus:
    """Smallest monic irreducible of degree n over Z_p in galois's integer order."""
    if n == 1:
        return (0, 1)
    return poly_modulus(galois.irreducible_poly(p, n, method="min"))


@lru_cache(maxsize=64)
def _smallest_primitive(p: int, n: int, modulus: Modulus) -> int:
    if n == 1:
        return int(galois.primitive_root(p, method="min"))
    return int(galois.primitive_element(modulus_poly(modulus, p), method="min"))


def field_make(
    p: int,
    n: int = 1,
    w: FieldElement | Sequence[int] | int | None = None,
    modulus: Sequence[int] | None = None,
) -> FiniteField:
    """
    Build GF(p^n) deterministically.

    Args:
        p: Prime characteristic.
        n: Extension degree, at least 1.
        w: Optional primitive element override (element, coordinates or integer).
        modulus: Optional modulus override (ascending coefficients, monic).

    Returns:
        The field with the smallest irreducible modulus and, unless overridden,
        the smallest primitive element in index order.
    """
    if not isinstance(p, int) or not is_prime(p):
        raise FieldError("characteristic must be prime", {"p": p})
    if n < 1:
        raise FieldError("extension degree must be at least 1", {"n": n})
    q = p**n
    limit = get_settings().max_field_order
    if q > limit:
        raise FieldError("field order exceeds the configured limit", {"q": q, "limit": limit})

    f = check_modulus(p, n, modulus) if modulus is not None else smallest_irreducible(p, n)
    if w is None:
        w_elem = FieldElement(_digits(_smallest_primitive(p, n, f), p, n))
    elif isinstance(w, FieldElement):
        w_elem = w
    elif isinstance(w, int):
        w_elem = FieldElement((0,) * (n - 1) + (w % p,))
    else:
        w_elem = FieldElement(tuple(int(c) for c in w))

    field_ = FiniteField(p, n, f, w_elem)
    logger.debug("Field constructed", q=q, modulus=f, w=w_elem.coords)
    return field_


def _digits(index: int, p: int, n: int) -> tuple[int, ...]:
    coords = [0] * n
    for i in range(n - 1, -1, -1):
        index, coords[i] = divmod(index, p)
    return tuple(coords)


def discrete_log_table(F: FiniteField, w: FieldElement | None = None) -> dict[FieldElement, int]:
    """
    Discrete logarithms to base w (the field's primitive element by default).

    Returns:
        Mapping x -> k with w**k = x for every nonzero x, k in [0, q-2].
    """
    base = F.w if w is None else F.coerce(w)
    if not F.is_primitive(base):
        raise FieldError("logarithm base is not primitive", {"w": base.coords})
    logs = F.gf.elements[1:].log(F.array(base))
    return {F.element(index): int(k) for index, k in enumerate(np.asarray(logs).tolist(), start=1)}
