"""Exact elementary number theory: sieve, factorisation, totient, Möbius,
Ramanujan sums and divisor enumeration.

Everything here works on Python ints, so no intermediate ever overflows.
"""

from __future__ import annotations

from functools import lru_cache
from math import gcd, isqrt, prod

Factorisation = list[tuple[int, int]]

# trial division primes cover every n < _TRIAL_LIMIT**2 without falling back
_TRIAL_LIMIT = 1 << 15


def sieve_primes(limit: int) -> list[int]:
    """Return the primes <= limit in ascending order (Eratosthenes)."""
    if limit < 2:
        return []
    flags = bytearray([1]) * (limit + 1)
    flags[0] = flags[1] = 0
    for p in range(2, isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = bytes(len(range(p * p, limit + 1, p)))
    return [i for i, f in enumerate(flags) if f]


@lru_cache(maxsize=1)
def _small_primes() -> tuple[int, ...]:
    return tuple(sieve_primes(_TRIAL_LIMIT))


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _small_primes():
        if p * p > n:
            return True
        if n % p == 0:
            return n == p
    return _factorize(n) == ((n, 1),)


def next_prime(n: int) -> int:
    """Smallest prime >= n."""
    n = max(n, 2)
    while not is_prime(n):
        n += 1
    return n


def factorize(n: int) -> Factorisation:
    """Prime factorisation of ``n`` as ascending ``(prime, exponent)`` pairs.

    Trial division by sieved primes; plain odd trial division takes over
    beyond the sieve, which only matters for n > 2**30.

    >>> factorize(1125)
    [(3, 2), (5, 3)]
    """
    if n < 1:
        raise ValueError(f"factorize requires n >= 1, got {n}")
    return list(_factorize(n))


@lru_cache(maxsize=1 << 16)
def _factorize(n: int) -> tuple[tuple[int, int], ...]:
    out: Factorisation = []
    rest = n
    for p in _small_primes():
        if p * p > rest:
            break
        if rest % p == 0:
            k = 0
            while rest % p == 0:
                rest //= p
                k += 1
            out.append((p, k))
    else:
        p = _small_primes()[-1] + 2
        while p * p <= rest:
            if rest % p == 0:
                k = 0
                while rest % p == 0:
                    rest //= p
                    k += 1
                out.append((p, k))
            p += 2
    if rest > 1:
        out.append((rest, 1))
    return tuple(out)


def totient(n: int) -> int:
    """Euler's phi."""
    return prod(p ** (k - 1) * (p - 1) for p, k in _factorize(n))


def mobius(n: int) -> int:
    fac = _factorize(n)
    if any(k > 1 for _, k in fac):
        return 0
    return -1 if len(fac) % 2 else 1


def ramanujan_sum(j: int, m: int) -> int:
    """c(j, m) by Hölder's formula ``mu(m/g) * phi(m) / phi(m/g)``, g = gcd(j, m).

    gcd(0, m) = m, hence c(0, m) = phi(m).
    """
    if m < 1 or j < 0:
        raise ValueError(f"ramanujan_sum requires j >= 0 and m >= 1, got ({j}, {m})")
    g = gcd(j, m)
    r = m // g
    mu = mobius(r)
    if mu == 0:
        return 0
    return mu * (totient(m) // totient(r))


def ramanujan_sum_prime_power(p: int, i: int, k: int) -> int:
    """c(p**i, p**k) from the closed prime-power table."""
    if i < 0 or k < 0:
        raise ValueError("exponents must be nonnegative")
    if k == 0:
        return 1
    if i >= k:
        return p ** (k - 1) * (p - 1)
    if i == k - 1:
        return -(p**i)
    return 0


def divisors(n: int) -> list[int]:
    """All divisors of n, ascending (n itself included)."""
    divs = [1]
    for p, k in _factorize(n):
        divs = [d * p**e for d in divs for e in range(k + 1)]
    return sorted(divs)
