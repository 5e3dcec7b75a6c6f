"""Exact small-rank lattice search by Fincke-Pohst enumeration.

All searches run on an LLL-reduced copy of the basis and report integer
coefficients relative to the basis the caller passed in.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from cyclolog.errors import BudgetExceeded, RankTooLarge
from cyclolog.lattice.basis import LatticeBasis
from cyclolog.lattice.lll import lll_reduce_with_transform

DEFAULT_MAX_NODES = 10**8
TIE_REL = 1e-9
TIE_ABS = 1e-15

SVP_MAX_RANK = 12
MINIMA_MAX_RANK = 8
CVP_MAX_RANK = 8


class LatticePoint(NamedTuple):
    vector: np.ndarray
    length: float
    coeffs: tuple[int, ...]


class ClosestPoint(NamedTuple):
    vector: np.ndarray
    distance: float
    coeffs: tuple[int, ...]
    residual: float  # distance from the target to span(L)


@dataclass(frozen=True, eq=False)
class SuccessiveMinima:
    values: tuple[float, ...]
    witnesses: np.ndarray
    coeffs: tuple[tuple[int, ...], ...]


class Enumerator:
    """Depth-first search for integer x with (x - c)^T G (x - c) <= bound.

    ``shrink=True`` tightens the bound whenever a better point is found
    (keeping a small slack so near-ties survive); otherwise every point in
    the initial ellipsoid is reported.
    """

    def __init__(self, gram_matrix: np.ndarray, max_nodes: int = DEFAULT_MAX_NODES):
        upper = np.linalg.cholesky(gram_matrix).T
        diag = np.diag(upper)
        self.rank = upper.shape[0]
        self.ratio = upper / diag[:, None]
        self.diag_sq = diag**2
        self.max_nodes = max_nodes
        self.nodes = 0

    def search(self, center, bound_sq: float, *, shrink: bool, exclude_zero: bool = False,
               slack_rel: float = TIE_REL):
        r = self.rank
        c = np.asarray(center, dtype=float)
        x = np.zeros(r)
        found: list[tuple[tuple[int, ...], float]] = []
        state = {"bound": bound_sq, "best": math.inf}

        def record(dist_sq):
            if exclude_zero and not x.any():
                return
            found.append((tuple(int(v) for v in x), dist_sq))
            if shrink and dist_sq < state["best"]:
                state["best"] = dist_sq
                state["bound"] = min(state["bound"], dist_sq * (1 + slack_rel) + TIE_ABS)

        def visit(i, partial):
            offset = self.ratio[i, i + 1 :] @ (x[i + 1 :] - c[i + 1 :])
            ci = c[i] - offset
            room = state["bound"] - partial
            if room < 0:
                return
            width = math.sqrt(room / self.diag_sq[i])
            lo, hi = math.ceil(ci - width), math.floor(ci + width)
            for xi in sorted(range(lo, hi + 1), key=lambda v: (abs(v - ci), v)):
                self.nodes += 1
                if self.nodes > self.max_nodes:
                    raise BudgetExceeded(f"enumeration exceeded {self.max_nodes} nodes")
                s = partial + self.diag_sq[i] * (xi - ci) ** 2
                if s > state["bound"]:
                    break
                x[i] = xi
                if i == 0:
                    record(s)
                else:
                    visit(i - 1, s)
            x[i] = 0

        visit(r - 1, 0.0)
        bound = state["bound"]
        return [(xs, d) for xs, d in found if d <= bound]


class _Prepared:
    def __init__(self, basis: LatticeBasis, max_nodes: int):
        self.basis = basis
        lll = lll_reduce_with_transform(basis)
        self.reduced = lll.basis
        self.transform = lll.transform
        g = self.reduced.vectors @ self.reduced.vectors.T
        self.gram = (g + g.T) / 2
        self.max_nodes = max_nodes

    def enumerator(self):
        return Enumerator(self.gram, self.max_nodes)

    def to_input_coeffs(self, x) -> tuple[int, ...]:
        return tuple(int(v) for v in np.asarray(x, dtype=np.int64) @ self.transform)


def _check_rank(basis: LatticeBasis, limit: int, what: str):
    if basis.rank > limit:
        raise RankTooLarge(f"{what} supports rank <= {limit}, got {basis.rank}")


def shortest_vector(basis: LatticeBasis, max_nodes: int = DEFAULT_MAX_NODES) -> LatticePoint:
    _check_rank(basis, SVP_MAX_RANK, "shortest_vector")
    prep = _Prepared(basis, max_nodes)
    start = float(np.min(np.sum(prep.reduced.vectors**2, axis=1)))
    hits = prep.enumerator().search(np.zeros(basis.rank), start * (1 + TIE_REL) + TIE_ABS,
                                    shrink=True, exclude_zero=True)
    best = min(d for _, d in hits)
    ties = [prep.to_input_coeffs(x) for x, d in hits if d <= best * (1 + TIE_REL) + TIE_ABS]
    coeffs = min(ties)
    vec = basis.point(coeffs)
    return LatticePoint(vec, float(np.linalg.norm(vec)), coeffs)


def successive_minima(basis: LatticeBasis, max_nodes: int = DEFAULT_MAX_NODES) -> SuccessiveMinima:
    _check_rank(basis, MINIMA_MAX_RANK, "successive_minima")
    prep = _Prepared(basis, max_nodes)
    radius_sq = float(np.max(np.sum(prep.reduced.vectors**2, axis=1)))
    hits = prep.enumerator().search(np.zeros(basis.rank), radius_sq * (1 + 1e-9) + TIE_ABS,
                                    shrink=False, exclude_zero=True)
    candidates = sorted((d, prep.to_input_coeffs(x)) for x, d in hits)
    frame: list[np.ndarray] = []
    values, witnesses, coeffs = [], [], []
    for _, cf in candidates:
        v = basis.point(cf)
        w = v.copy()
        for e in frame:
            w -= (w @ e) * e
        if w @ w > 1e-10 * (v @ v):
            frame.append(w / np.linalg.norm(w))
            values.append(float(np.linalg.norm(v)))
            witnesses.append(v)
            coeffs.append(cf)
            if len(frame) == basis.rank:
                break
    return SuccessiveMinima(tuple(values), np.array(witnesses), tuple(coeffs))


class CVPSolver:
    """Closest-vector oracle for a fixed lattice; reuses the reduction across queries."""

    def __init__(self, basis: LatticeBasis, max_nodes: int = DEFAULT_MAX_NODES):
        _check_rank(basis, CVP_MAX_RANK, "closest_vector")
        self._prep = _Prepared(basis, max_nodes)
        self.basis = basis

    def candidates(self, target, slack_rel: float = TIE_REL):
        """All lattice points within (1 + slack_rel) x best squared distance.

        Returns ``(projected_target, residual, [(input coeffs, dist_sq), ...])``
        sorted by distance then coefficients.
        """
        t = np.asarray(target, dtype=float)
        red = self._prep.reduced.vectors
        coords, *_ = np.linalg.lstsq(red.T, t, rcond=None)
        projected = coords @ red
        residual = float(np.linalg.norm(t - projected))
        babai = np.floor(coords + 0.5)
        diff = (babai - coords) @ red
        start = float(diff @ diff)
        enum = self._prep.enumerator()
        hits = enum.search(coords, start * (1 + slack_rel) + TIE_ABS, shrink=True, slack_rel=slack_rel)
        best = min(d for _, d in hits)
        keep = best * (1 + slack_rel) + TIE_ABS
        out = sorted((d, self._prep.to_input_coeffs(x)) for x, d in hits if d <= keep)
        return projected, residual, [(cf, d) for d, cf in out]

    def solve(self, target) -> ClosestPoint:
        projected, residual, cands = self.candidates(target)
        coeffs = min(cf for cf, _ in cands)
        vec = self.basis.point(coeffs)
        return ClosestPoint(vec, float(np.linalg.norm(projected - vec)), coeffs, residual)

    def distance(self, target) -> float:
        return self.solve(target).distance


def closest_vector(basis: LatticeBasis, target, max_nodes: int = DEFAULT_MAX_NODES) -> ClosestPoint:
    return CVPSolver(basis, max_nodes).solve(target)
