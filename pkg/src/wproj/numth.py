"""Exact integer and rational arithmetic helpers.

Factorizations are plain ``dict[int, int]`` (prime -> exponent, ascending
keys, empty dict = 1).  Rationals are ``fractions.Fraction``, which already
guarantees lowest terms and a positive denominator.  Prime sets are
``frozenset[int]``.  Everything here is a pure function on immutable values
and safe to call concurrently.

Weights handled by this package are desk-scale (below 2**32), so trial
division is the right factoring tool; there is deliberately no large-integer
factoring machinery here.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable

from .errors import InvalidInputError, NotPLocalError

__all__ = [
    "factorize",
    "is_prime",
    "p_part",
    "as_prime_set",
    "is_p_local",
    "is_p_local_unit",
    "unit_split",
]


def is_prime(m: int) -> bool:
    """Deterministic primality test by trial division.

    >>> [p for p in range(20) if is_prime(p)]
    [2, 3, 5, 7, 11, 13, 17, 19]
    """
    if m < 2:
        return False
    if m % 2 == 0:
        return m == 2
    d = 3
    while d * d <= m:
        if m % d == 0:
            return False
        d += 2
    return True


@lru_cache(maxsize=1 << 16)
def _factor_pairs(m: int) -> tuple[tuple[int, int], ...]:
    pairs = []
    d = 2
    while d * d <= m:
        if m % d == 0:
            e = 0
            while m % d == 0:
                m //= d
                e += 1
            pairs.append((d, e))
        d += 1 if d == 2 else 2
    if m > 1:
        pairs.append((m, 1))
    return tuple(pairs)


def factorize(m: int) -> dict[int, int]:
    """Prime factorization of a positive integer, keys ascending.

    >>> factorize(360)
    {2: 3, 3: 2, 5: 1}
    >>> factorize(1)
    {}
    """
    if m < 1:
        raise InvalidInputError(f"cannot factorize {m}: positive integer required")
    return dict(_factor_pairs(m))


def p_part(m: int, p: int) -> int:
    """Largest power of the prime p dividing m.

    >>> p_part(12, 2), p_part(12, 3), p_part(12, 5)
    (4, 3, 1)
    """
    if m < 1:
        raise InvalidInputError(f"p_part undefined for {m}: positive integer required")
    if not is_prime(p):
        raise InvalidInputError(f"p_part needs a prime, got {p}")
    q = 1
    while m % p == 0:
        m //= p
        q *= p
    return q


def as_prime_set(primes: Iterable[int]) -> frozenset[int]:
    """Validate an explicit enumeration of primes."""
    ps = frozenset(primes)
    for p in ps:
        if not is_prime(p):
            raise InvalidInputError(f"{p} is not prime")
    return ps


def _support(m: int) -> frozenset[int]:
    return frozenset(factorize(m))


def is_p_local(x: Fraction | int, primes: Iterable[int]) -> bool:
    """Whether x lies in Z_P, i.e. its denominator avoids every prime of P."""
    ps = as_prime_set(primes)
    den = Fraction(x).denominator
    return all(den % p for p in ps)


def is_p_local_unit(x: Fraction | int, primes: Iterable[int]) -> bool:
    """Whether a P-local rational is a unit of Z_P (numerator also avoids P).

    Raises :class:`NotPLocalError` if x is not P-local in the first place.
    """
    ps = as_prime_set(primes)
    x = Fraction(x)
    if any(x.denominator % p == 0 for p in ps):
        raise NotPLocalError(f"{x} is not P-local for P={sorted(ps)}")
    return x.numerator != 0 and all(x.numerator % p for p in ps)


def unit_split(x: Fraction | int, primes: Iterable[int]) -> tuple[Fraction, Fraction]:
    """Split a nonzero rational as u*v with u coprime to P and v supported on P.

    u carries the sign of x and is a unit in Z_P; v is positive, its numerator
    and denominator are products of primes from P only, so v is a unit in Z_Q
    for any prime set Q disjoint from P.  The pair is unique.

    >>> unit_split(Fraction(6, 5), {2, 3})
    (Fraction(1, 5), Fraction(6, 1))
    >>> unit_split(Fraction(-4, 9), {2})
    (Fraction(-1, 9), Fraction(4, 1))
    """
    ps = as_prime_set(primes)
    x = Fraction(x)
    if x == 0:
        raise InvalidInputError("cannot unit-split 0")

    def split(m: int) -> tuple[int, int]:
        inside = 1
        for p in ps:
            q = p_part(m, p)
            inside *= q
            m //= q
        return m, inside  # (coprime-to-P part, P-supported part)

    num_out, num_in = split(abs(x.numerator))
    den_out, den_in = split(x.denominator)
    sign = 1 if x > 0 else -1
    u = Fraction(sign * num_out, den_out)
    v = Fraction(num_in, den_in)
    return u, v
