"""Logarithmic embedding of cyclotomic units.

For the embedding sigma_k : zeta -> exp(2 pi i k / n),
|sigma_k(zeta^(-t/2) - zeta^(t/2))| = |2 sin(pi k t / n)|, so every
component is a sum of terms 2 log|2 sin(pi j / n)| with integer j. We
reduce j modulo n exactly before touching floating point, which keeps the
sine argument in (0, pi/2] and sidesteps branch choices for zeta^(1/2).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import mpmath
import numpy as np

from cyclolog.errors import DegenerateAngle, RankDeficient
from cyclolog.lattice.basis import LatticeBasis, numerical_rank
from cyclolog.numtheory import (
    Modulus,
    SubsetDivisor,
    embedding_indices,
    gamma_subsets,
    unit_labels,
)

TRACE_TOL_PER_DIM = 1e-9


@dataclass(frozen=True)
class LogVector:
    """Components are log|sigma_k(x)|^2, one per embedding index k (ascending)."""

    n: int
    components: tuple

    def as_array(self) -> np.ndarray:
        return np.array([float(c) for c in self.components])

    @property
    def trace(self) -> float:
        return math.fsum(float(c) for c in self.components)

    @property
    def norm(self) -> float:
        return math.sqrt(math.fsum(float(c) ** 2 for c in self.components))


@dataclass(frozen=True)
class RamachandraUnitLog:
    label: int
    vector: LogVector
    norm: float

    def trace_tol(self) -> float:
        return TRACE_TOL_PER_DIM * len(self.vector.components)


def _reduced_angles(n: int, multiplier: int, ks: np.ndarray) -> np.ndarray:
    j = (ks * multiplier) % n
    return np.minimum(j, n - j)


def _log_two_sin(n: int, j: np.ndarray, dps: int | None):
    if np.any(j == 0):
        bad = [int(x) for x in j if x == 0]
        raise DegenerateAngle(f"sin(pi * {bad[0]} / {n}) vanishes")
    if dps is None:
        return 2.0 * np.log(2.0 * np.sin(np.pi * j / n))
    with mpmath.workdps(dps):
        return [2 * mpmath.log(2 * mpmath.sin(mpmath.pi * int(x) / n)) for x in j]


def log_sin_vector(m: Modulus, a: int, d: SubsetDivisor, dps: int | None = None) -> LogVector:
    """Log of zeta^(-a n_I / 2) - zeta^(a n_I / 2).

    With ``dps`` set, components are mpmath numbers at that many digits.
    """
    ks = np.array(embedding_indices(m), dtype=np.int64)
    j = _reduced_angles(m.n, a * d.n_I, ks)
    comps = _log_two_sin(m.n, j, dps)
    return LogVector(m.n, tuple(comps) if dps else tuple(float(c) for c in comps))


def ramachandra_log(m: Modulus, a: int, dps: int | None = None) -> RamachandraUnitLog:
    """Log xi_a as the sum over I of log_sin(a, n_I) - log_sin(1, n_I).

    The root-of-unity prefactors of xi_a have absolute value 1 under every
    embedding and drop out.
    """
    if not (1 < a < m.n / 2 and math.gcd(a, m.n) == 1):
        raise ValueError(f"{a} is not a unit label for n = {m.n}")
    subsets = gamma_subsets(m)
    if dps is None:
        total = np.zeros(m.dimension)
        for d in subsets:
            total += log_sin_vector(m, a, d).as_array() - log_sin_vector(m, 1, d).as_array()
        vec = LogVector(m.n, tuple(float(c) for c in total))
        return RamachandraUnitLog(a, vec, float(np.linalg.norm(total)))
    with mpmath.workdps(dps):
        total = [mpmath.mpf(0)] * m.dimension
        for d in subsets:
            top = log_sin_vector(m, a, d, dps).components
            bottom = log_sin_vector(m, 1, d, dps).components
            total = [t + x - y for t, x, y in zip(total, top, bottom)]
        norm = mpmath.sqrt(mpmath.fsum(c**2 for c in total))
    return RamachandraUnitLog(a, LogVector(m.n, tuple(total)), float(norm))


def ramachandra_logs(m: Modulus) -> list[RamachandraUnitLog]:
    return [ramachandra_log(m, a) for a in unit_labels(m)]


def ramachandra_basis(m: Modulus) -> LatticeBasis:
    rows = np.array([u.vector.as_array() for u in ramachandra_logs(m)]).reshape(m.rank, m.dimension)
    g = rows @ rows.T
    if numerical_rank(g) != m.rank:
        raise RankDeficient(f"Ramachandra log vectors for n = {m.n} are numerically dependent")
    return LatticeBasis(rows, provenance=f"ramachandra n={m.n}")


def ramachandra_log_complex(m: Modulus, a: int) -> np.ndarray:
    """Independent check: evaluate xi_a through each embedding in complex arithmetic.

    Half-integer powers of zeta use the principal branch; only |.| matters.
    """
    out = []
    for k in embedding_indices(m):
        z = cmath.exp(2j * cmath.pi * k / m.n)
        value = 1 + 0j
        for d in gamma_subsets(m):
            prefactor = cmath.exp(1j * cmath.pi * k * d.n_I * (1 - a) / m.n)
            value *= prefactor * (1 - z ** (a * d.n_I)) / (1 - z ** d.n_I)
        out.append(math.log(abs(value) ** 2))
    return np.array(out)
