"""Closed-form bounds on log-unit norms and on the covering radius.

Every function here is a cheap scalar formula except :func:`sine_log_square_sum`,
which is an O(m) summation.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass

import numpy as np

from cyclolog.errors import BadDivisor, OutOfRange
from cyclolog.numtheory import Modulus

LOG2_SQ = math.log(2.0) ** 2
PI_SQ = math.pi**2
LOWER_ENVELOPE_CONSTANT = 2.45
COROLLARY_CONSTANT = 1.303

SQRT3 = "sqrt3"
SQRT6 = "sqrt6"


def sine_log_square_sum(m: int) -> float:
    """sum_{k=1}^{floor(m/2)} log^2(2 sin(pi k / m)), correctly rounded via fsum."""
    if m < 2:
        raise OutOfRange(f"m must be at least 2, got {m}")
    k = np.arange(1, m // 2 + 1, dtype=np.float64)
    # pi k / m already lies in (0, pi/2] for k <= m/2
    terms = np.log(2.0 * np.sin(np.pi * k / m)) ** 2
    return math.fsum(terms.tolist())


lemma2_sum = sine_log_square_sum


def lemma2_envelope(m: int) -> tuple[float, float]:
    if m < 2:
        raise OutOfRange(f"m must be at least 2, got {m}")
    main = PI_SQ * m / 24
    return main - LOWER_ENVELOPE_CONSTANT - math.log(m) ** 2, main + LOG2_SQ


@dataclass(frozen=True)
class Lemma2Record:
    m: int
    sum: float
    lower: float
    upper: float

    @property
    def holds(self) -> bool:
        return self.lower < self.sum < self.upper


def lemma2_record(m: int) -> Lemma2Record:
    lower, upper = lemma2_envelope(m)
    return Lemma2Record(m, sine_log_square_sum(m), lower, upper)


def lemma3_bound(n: int, n_I: int) -> float:
    """Upper bound on |Log(zeta^(-a n_I/2) - zeta^(a n_I/2))| for a proper divisor n_I."""
    if n_I < 1 or n % n_I or n_I >= n:
        raise BadDivisor(f"{n_I} is not a proper divisor of {n}")
    return math.sqrt(
        PI_SQ * n / 24 + 4.5 * LOG2_SQ + 1.5 * LOG2_SQ * n_I + 3 * PI_SQ / 24 * (n / n_I)
    )


def _empty_set_term(n: float) -> float:
    # lemma3_bound(n, 1)
    return math.sqrt(PI_SQ * n / 6 + 6 * LOG2_SQ)


def _other_set_term(n: float) -> float:
    # lemma3_bound(n, 2), the largest value over divisors n_I >= 2
    return math.sqrt(5 * PI_SQ * n / 48 + 7.5 * LOG2_SQ)


def lemma4_bound(n: int, s: int) -> float:
    if s < 1:
        raise OutOfRange(f"s must be positive, got {s}")
    return 2 * ((2**s - 2) * _other_set_term(n) + _empty_set_term(n))


def lemma5_phi_upper(n: int, s: int) -> float:
    """n (1 - n^(-1/s))^s, an upper bound for phi(n) given s distinct primes."""
    if s < 1:
        raise OutOfRange(f"s must be positive, got {s}")
    return n * (1 - n ** (-1 / s)) ** s


def bound_dearaujo(n: int, s: int, variant: str = SQRT3) -> float:
    constants = {SQRT3: math.sqrt(3), SQRT6: math.sqrt(6)}
    if variant not in constants:
        raise ValueError(f"variant must be one of {sorted(constants)}")
    return n * (2**s - 1) * constants[variant]


def bound_new(n: int, s: int) -> float:
    bracket = (2**s - 2) * _other_set_term(n) + _empty_set_term(n)
    return math.sqrt(n / 2) * (1 - n ** (-1 / s)) ** (s / 2) * bracket


def bound_corollary(n: int, s: int) -> float:
    return n * (2**s - 1) * (1 - n ** (-1 / s)) ** (s / 2) * math.sqrt(COROLLARY_CONSTANT)


@dataclass(frozen=True)
class BoundReport:
    n: int
    s: int
    phi: int
    rank: int
    bound_old_sqrt3: float
    bound_old_sqrt6: float
    bound_new: float
    bound_corollary: float
    lemma4: float
    lemma5_phi_upper: float

    def as_dict(self) -> dict:
        return asdict(self)


def bound_report(m: Modulus) -> BoundReport:
    n, s = m.n, m.s
    return BoundReport(
        n=n,
        s=s,
        phi=m.phi,
        rank=m.rank,
        bound_old_sqrt3=bound_dearaujo(n, s, SQRT3),
        bound_old_sqrt6=bound_dearaujo(n, s, SQRT6),
        bound_new=bound_new(n, s),
        bound_corollary=bound_corollary(n, s),
        lemma4=lemma4_bound(n, s),
        lemma5_phi_upper=lemma5_phi_upper(n, s),
    )
