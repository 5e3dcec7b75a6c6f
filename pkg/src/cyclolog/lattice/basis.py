from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from cyclolog.errors import RankDeficient

RANK_THRESHOLD = 1e-8


def numerical_rank(gram_matrix: np.ndarray, threshold: float = RANK_THRESHOLD) -> int:
    """Rank of a symmetric PSD matrix by fully pivoted Gaussian elimination.

    A pivot counts as nonzero when it exceeds ``threshold`` times the
    largest diagonal entry of the input.
    """
    a = np.array(gram_matrix, dtype=float, copy=True)
    if a.size == 0:
        return 0
    cutoff = threshold * float(np.max(np.abs(np.diag(a))))
    rank = 0
    size = a.shape[0]
    for step in range(size):
        sub = np.abs(a[step:, step:])
        i, j = np.unravel_index(np.argmax(sub), sub.shape)
        if sub[i, j] <= cutoff:
            break
        i += step
        j += step
        a[[step, i]] = a[[i, step]]
        a[:, [step, j]] = a[:, [j, step]]
        pivot = a[step, step]
        a[step + 1 :] -= np.outer(a[step + 1 :, step] / pivot, a[step])
        rank += 1
    return rank


@dataclass(frozen=True, eq=False)
class LatticeBasis:
    """Rows of ``vectors`` generate the lattice; ``provenance`` is a free tag."""

    vectors: np.ndarray
    provenance: str = ""

    def __post_init__(self):
        v = np.atleast_2d(np.array(self.vectors, dtype=float))
        if v.shape[0] > v.shape[1]:
            raise RankDeficient(f"{v.shape[0]} vectors cannot be independent in R^{v.shape[1]}")
        v.setflags(write=False)
        object.__setattr__(self, "vectors", v)

    @property
    def rank(self) -> int:
        return self.vectors.shape[0]

    @property
    def dimension(self) -> int:
        return self.vectors.shape[1]

    def norms(self) -> np.ndarray:
        return np.linalg.norm(self.vectors, axis=1)

    def point(self, coeffs) -> np.ndarray:
        return np.asarray(coeffs, dtype=float) @ self.vectors


def gram(basis: LatticeBasis) -> np.ndarray:
    """Matrix of pairwise inner products; raises if it is not positive definite."""
    g = basis.vectors @ basis.vectors.T
    g = (g + g.T) / 2
    try:
        np.linalg.cholesky(g)
    except np.linalg.LinAlgError as exc:
        raise RankDeficient(f"Gram matrix of {basis.provenance or 'basis'} is not positive definite") from exc
    return g


def gram_determinant(basis: LatticeBasis) -> float:
    """det(B B^T) via QR of the basis, stable even when the Gram matrix is not."""
    rmat = np.linalg.qr(basis.vectors.T, mode="r")
    return float(np.prod(np.abs(np.diag(rmat))) ** 2)


def span_coordinates(basis: LatticeBasis) -> tuple[np.ndarray, np.ndarray]:
    """Express the basis in an orthonormal frame of its span.

    Returns ``(coords, frame)`` with ``coords`` r x r and ``frame`` d x r
    so that ``basis.vectors == coords @ frame.T``.
    """
    q, rmat = np.linalg.qr(basis.vectors.T)
    return rmat.T, q


def integer_det(u: np.ndarray) -> int:
    """Exact determinant of a small integer matrix (fraction-free elimination)."""
    m = [[int(x) for x in row] for row in np.asarray(u)]
    size = len(m)
    sign = 1
    prev = 1
    for k in range(size - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, size) if m[i][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[-1][-1] if size else 1
