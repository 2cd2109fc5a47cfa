"""Exact integer and rational arithmetic helpers.

Rational values throughout the package are ``fractions.Fraction`` instances:
arbitrary precision, always stored reduced with a positive denominator, so
equality is structural and every operation is exact.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import reduce
from typing import Iterable

from .errors import InvalidArgumentError

Rational = Fraction

# Ordered (prime, exponent) pairs with primes strictly increasing.
PrimeFactorization = list[tuple[int, int]]


def rational_str(q: Fraction | int) -> str:
    """Render an exact rational as ``p/q``, or just ``p`` when q == 1."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def is_prime(n: int) -> bool:
    """Deterministic primality test by trial division; inputs here are tiny."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def v_p(n: int, p: int) -> int:
    """Largest a such that p**a divides n, for n >= 1 and p prime."""
    if not is_prime(p):
        raise InvalidArgumentError(f"v_p requires a prime p, got {p}")
    if n < 1:
        raise InvalidArgumentError(f"v_p is defined for n >= 1, got {n}")
    a = 0
    while n % p == 0:
        n //= p
        a += 1
    return a


def gcd_list(xs: Iterable[int]) -> int:
    """gcd of any number of nonnegative integers.

    Follows the recursion gcd(x, 0) == x, so the gcd of an empty
    collection is 0.
    """
    return reduce(math.gcd, xs, 0)


def factorize(n: int) -> PrimeFactorization:
    """Complete prime factorization by trial division, primes ascending.

    factorize(1) == [].  Inputs are gcds of ranks and degrees, so trial
    division is plenty.
    """
    if n < 1:
        raise InvalidArgumentError(f"factorize requires n >= 1, got {n}")
    out: PrimeFactorization = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            a = 0
            while n % p == 0:
                n //= p
                a += 1
            out.append((p, a))
        p += 1 if p == 2 else 2
    if n > 1:
        out.append((n, 1))
    return out


def euler_phi(n: int) -> int:
    """Euler's totient, via the prime factorization."""
    phi = 1
    for p, a in factorize(n):
        phi *= (p - 1) * p ** (a - 1)
    return phi


def divisors(n: int) -> list[int]:
    """Sorted list of the positive divisors of n."""
    if n < 1:
        raise InvalidArgumentError(f"divisors requires n >= 1, got {n}")
    divs = [1]
    for p, a in factorize(n):
        divs = [d * p**k for d in divs for k in range(a + 1)]
    return sorted(divs)
