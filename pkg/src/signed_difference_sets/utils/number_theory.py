"""Integer helpers backed by sympy."""

from sympy import divisors as _divisors
from sympy import factorint, integer_nthroot, isprime


def is_prime(n: int) -> bool:
    """Return True when n is a rational prime."""
    return n >= 2 and bool(isprime(n))


def divisors(n: int) -> list[int]:
    """Positive divisors of n in ascending order."""
    return [int(d) for d in _divisors(n)]


def prime_power(q: int) -> tuple[int, int] | None:
    """Return (p, n) with q = p**n, or None if q is not a prime power."""
    if q < 2:
        return None
    factors = factorint(q)
    if len(factors) != 1:
        return None
    ((p, n),) = factors.items()
    return int(p), int(n)


def exact_sqrt(n: int) -> int | None:
    """Nonnegative square root of n when n is a perfect square, else None."""
    if n < 0:
        return None
    root, exact = integer_nthroot(n, 2)
    return int(root) if exact else None


def exact_root(n: int, k: int) -> int | None:
    """Nonnegative k-th root of n when it is an integer, else None."""
    if n < 0:
        return None
    root, exact = integer_nthroot(n, k)
    return int(root) if exact else None
