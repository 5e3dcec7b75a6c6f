"""Floating-point LLL with exact integer bookkeeping of the basis change."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from cyclolog.errors import RankDeficient
from cyclolog.lattice.basis import LatticeBasis, gram, gram_determinant, integer_det

DEFAULT_DELTA = 0.99


@dataclass(frozen=True)
class LLLResult:
    basis: LatticeBasis
    transform: np.ndarray  # integer, reduced.vectors == transform @ original.vectors


def gram_schmidt(vectors: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Return (squared GS norms, mu) with mu lower-triangular, unit diagonal."""
    r = vectors.shape[0]
    star = np.zeros_like(vectors, dtype=float)
    mu = np.eye(r)
    sq = np.zeros(r)
    for i in range(r):
        v = vectors[i].astype(float)
        for j in range(i):
            mu[i, j] = vectors[i] @ star[j] / sq[j]
            v = v - mu[i, j] * star[j]
        star[i] = v
        sq[i] = v @ v
    return sq, mu


def _reduce(b0: np.ndarray, delta: float) -> np.ndarray:
    r = b0.shape[0]
    b = b0.astype(float).copy()
    u = np.eye(r, dtype=np.int64)
    sq, mu = gram_schmidt(b)
    if np.any(sq <= 0):
        raise RankDeficient("input vectors are linearly dependent")
    k = 1
    while k < r:
        for j in range(k - 1, -1, -1):
            q = math.floor(mu[k, j] + 0.5)
            if q:
                b[k] -= q * b[j]
                u[k] -= q * u[j]
                mu[k, : j + 1] -= q * mu[j, : j + 1]
        if sq[k] >= (delta - mu[k, k - 1] ** 2) * sq[k - 1]:
            k += 1
        else:
            b[[k - 1, k]] = b[[k, k - 1]]
            u[[k - 1, k]] = u[[k, k - 1]]
            # re-derive from the integer transform so rounding never accumulates
            b = (u @ b0).astype(float)
            sq, mu = gram_schmidt(b)
            if np.any(sq <= 0):
                raise RankDeficient("lost rank during reduction")
            k = max(k - 1, 1)
    return u


def lll_reduce_with_transform(basis: LatticeBasis, delta: float = DEFAULT_DELTA) -> LLLResult:
    if not 0.25 < delta < 1:
        raise ValueError(f"delta must lie in (1/4, 1), got {delta}")
    gram(basis)
    u = _reduce(basis.vectors, delta)
    det_u = integer_det(u)
    assert abs(det_u) == 1, f"basis change has determinant {det_u}"
    reduced = LatticeBasis(u @ basis.vectors, provenance=basis.provenance)
    gram(reduced)
    d0, d1 = gram_determinant(basis), gram_determinant(reduced)
    assert abs(d1 - d0) <= 1e-9 * abs(d0), "Gram determinant drifted under reduction"
    return LLLResult(basis=reduced, transform=u)


def lll_reduce(basis: LatticeBasis, delta: float = DEFAULT_DELTA) -> LatticeBasis:
    return lll_reduce_with_transform(basis, delta).basis


def is_lll_reduced(basis: LatticeBasis, delta: float = DEFAULT_DELTA, tol: float = 1e-9) -> bool:
    sq, mu = gram_schmidt(basis.vectors)
    r = basis.rank
    for i in range(r):
        for j in range(i):
            if abs(mu[i, j]) > 0.5 + tol:
                return False
    for k in range(1, r):
        if sq[k] < (delta - mu[k, k - 1] ** 2) * sq[k - 1] * (1 - tol):
            return False
    return True
