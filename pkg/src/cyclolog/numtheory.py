"""Integer arithmetic for cyclotomic moduli.

Everything here is exact integer work on desk-scale n: trial-division
factorization, Euler's totient, the residues that index units and
embeddings, and the proper divisors n_I built from subsets of the prime
power factors.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt, prod

import numpy as np

from cyclolog.errors import InvalidModulus


def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization of ``n >= 1`` as ascending ``(p, e)`` pairs."""
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    factors = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            factors.append((p, e))
        p += 1 if p == 2 else 2
    if n > 1:
        factors.append((n, 1))
    return tuple(factors)


def totient(n: int) -> int:
    result = n
    for p, _ in factorize(n):
        result -= result // p
    return result


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for d in range(3, isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


def smallest_prime_factors(limit: int) -> np.ndarray:
    """Sieve: entry k holds the least prime dividing k (0 and 1 map to 0)."""
    spf = np.zeros(limit + 1, dtype=np.int64)
    for p in range(2, limit + 1):
        if spf[p] == 0:
            spf[p] = p
            block = spf[p * p :: p]
            block[block == 0] = p
    return spf


def factorize_with_sieve(n: int, spf: np.ndarray) -> tuple[tuple[int, int], ...]:
    factors = []
    while n > 1:
        p = int(spf[n])
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        factors.append((p, e))
    return tuple(factors)


@dataclass(frozen=True)
class Modulus:
    n: int
    factors: tuple[tuple[int, int], ...]

    @property
    def s(self) -> int:
        return len(self.factors)

    @property
    def phi(self) -> int:
        return prod(p ** (e - 1) * (p - 1) for p, e in self.factors)

    @property
    def rank(self) -> int:
        return self.phi // 2 - 1

    @property
    def dimension(self) -> int:
        """Number of complex-embedding pairs, i.e. the ambient dimension."""
        return self.phi // 2


@dataclass(frozen=True)
class SubsetDivisor:
    subset: frozenset[int]
    n_I: int
    m_I: int

    @property
    def mask(self) -> int:
        return sum(1 << (i - 1) for i in self.subset)


def admissibility_problem(n: int) -> str | None:
    """Describe why ``n`` is not an admissible modulus, or None if it is."""
    if n < 5:
        return f"n = {n} is less than 5"
    if n % 4 == 2:
        return f"n = {n} satisfies n ≡ 2 (mod 4)"
    return None


def make_modulus(n: int) -> Modulus:
    n = int(n)
    problem = admissibility_problem(n)
    if problem is not None:
        raise InvalidModulus(problem)
    return Modulus(n=n, factors=factorize(n))


def gamma_subsets(m: Modulus) -> list[SubsetDivisor]:
    """All strict subsets I of the prime indices {1..s}, ordered by bitmask.

    Index i refers to the i-th prime of ``m.factors`` (ascending primes).
    The full set is excluded, so there are ``2**s - 1`` entries and the
    empty set, with ``n_I = 1``, comes first.
    """
    powers = [p**e for p, e in m.factors]
    out = []
    for mask in range((1 << m.s) - 1):
        members = frozenset(i + 1 for i in range(m.s) if mask >> i & 1)
        n_I = prod(powers[i - 1] for i in members)
        out.append(SubsetDivisor(subset=members, n_I=n_I, m_I=m.n // n_I))
    return out


def unit_labels(m: Modulus) -> list[int]:
    """Labels a with 1 < a < n/2 and gcd(a, n) = 1, ascending."""
    return [a for a in range(2, (m.n + 1) // 2) if 2 * a < m.n and gcd(a, m.n) == 1]


def embedding_indices(m: Modulus) -> list[int]:
    """One representative k of each conjugate pair of embeddings."""
    return [k for k in range(1, (m.n + 1) // 2) if 2 * k < m.n and gcd(k, m.n) == 1]
