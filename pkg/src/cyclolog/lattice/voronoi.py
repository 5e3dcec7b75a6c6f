"""Voronoi-relevant vectors and the covering radius.

The exact routine finds the Voronoi cell's vertices as intersections of r
bisector hyperplanes {x : x.v = |v|^2 / 2} over relevant vectors v, keeps
those inside every half-space, and reports the farthest one from the origin.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from cyclolog.errors import DegenerateClass, RankTooLarge
from cyclolog.lattice.basis import LatticeBasis, span_coordinates
from cyclolog.lattice.enumeration import DEFAULT_MAX_NODES, CVPSolver, shortest_vector

VORONOI_MAX_RANK = 5
CLASS_TIE_REL = 1e-9
CLASS_AMBIGUOUS_REL = 1e-6
PERTURBATION = 1e-10
SINGULAR_PIVOT = 1e-10
CERT_TOL = 1e-8

VORONOI_EXACT = "voronoi_exact"
RANDOMIZED_LOWER_BOUND = "randomized_lower_bound"


@dataclass(frozen=True, eq=False)
class RelevantVector:
    vector: np.ndarray
    coeffs: tuple[int, ...]
    class_index: int


@dataclass(frozen=True, eq=False)
class CoveringRadiusResult:
    value: float
    method: str
    deep_hole: np.ndarray
    certificate_distance: float
    relevant_count: int = 0
    samples: int = 0

    @property
    def certified(self) -> bool:
        return abs(self.certificate_distance - self.value) <= CERT_TOL


def _classify(solver: CVPSolver, target: np.ndarray):
    """Return (minimal pairs, ambiguous?) for one coset of 2L."""
    _, _, cands = solver.candidates(target, slack_rel=CLASS_AMBIGUOUS_REL * 4)
    best = cands[0][1]
    tie = best * (1 + CLASS_TIE_REL) + 1e-15
    ambiguous_cut = best * (1 + CLASS_AMBIGUOUS_REL)
    ties = [cf for cf, d in cands if d <= tie]
    ambiguous = any(tie < d <= ambiguous_cut for _, d in cands)
    return ties, ambiguous


def relevant_vectors(basis: LatticeBasis, max_nodes: int = DEFAULT_MAX_NODES) -> list[RelevantVector]:
    """Voronoi-relevant vectors with their coefficients, sorted by length.

    For each nonzero class of L/2L the minimal vectors are 2 * (t - v) for
    the lattice points v closest to t = (class vector) / 2. The class
    contributes its pair only when that pair is the unique minimum.
    """
    if basis.rank > VORONOI_MAX_RANK:
        raise RankTooLarge(f"Voronoi relevant vectors need rank <= {VORONOI_MAX_RANK}, got {basis.rank}")
    solver = CVPSolver(basis, max_nodes)
    transform = solver._prep.transform
    r = basis.rank
    out: list[RelevantVector] = []
    for mask in range(1, 1 << r):
        bits = np.array([(mask >> i) & 1 for i in range(r)])
        class_coeffs = bits @ transform
        target = basis.point(class_coeffs) / 2
        ties, ambiguous = _classify(solver, target)
        if ambiguous:
            # one deterministic nudge; measure-zero near-ties usually resolve
            direction = np.cos(np.arange(basis.dimension) + mask)
            nudged = target * (1 + PERTURBATION) + PERTURBATION * np.linalg.norm(target) * direction
            ties, ambiguous = _classify(solver, nudged)
            if ambiguous:
                raise DegenerateClass(f"class {mask} has near-tied minimal vectors", class_index=mask)
        if len(ties) != 2:
            continue
        for cf in ties:
            rel = tuple(int(a - 2 * b) for a, b in zip(class_coeffs, cf))
            out.append(RelevantVector(basis.point(rel), rel, mask))
    out.sort(key=lambda rv: (float(rv.vector @ rv.vector), rv.coeffs))
    return out


def voronoi_relevant_vectors(basis: LatticeBasis, max_nodes: int = DEFAULT_MAX_NODES) -> np.ndarray:
    rel = relevant_vectors(basis, max_nodes)
    return np.array([rv.vector for rv in rel]).reshape(len(rel), basis.dimension)


def _sign_patterns(r: int) -> np.ndarray:
    # first sign fixed to +1; the cell is centrally symmetric
    patterns = [(1.0, *rest) for rest in itertools.product([1.0, -1.0], repeat=r - 1)]
    return np.array(patterns)


def voronoi_vertices(half: np.ndarray, rank: int, vert_tol: float, chunk: int = 20000) -> np.ndarray:
    """Vertices of {x : |x| <= |x - v| for all relevant v}, in span coordinates.

    ``half`` holds one member of each +-pair of relevant vectors, expressed
    in an orthonormal frame of the span (shape k x rank).
    """
    full = np.vstack([half, -half])
    norms_sq = np.sum(full**2, axis=1)
    signs = _sign_patterns(rank)
    found = []
    combos = itertools.combinations(range(half.shape[0]), rank)
    while True:
        block = np.array(list(itertools.islice(combos, chunk)), dtype=int)
        if block.size == 0:
            break
        a = half[block]  # (b, r, r)
        sv = np.linalg.svd(a, compute_uv=False)
        scale = np.max(np.abs(a), axis=(1, 2))
        ok = sv[:, -1] > SINGULAR_PIVOT * scale
        if not ok.any():
            continue
        a, idx = a[ok], block[ok]
        inv = np.linalg.inv(a)
        h = 0.5 * np.sum(half[idx] ** 2, axis=2)  # (b, r)
        rhs = h[:, None, :] * signs[None, :, :]  # (b, patterns, r)
        x = np.einsum("bij,bpj->bpi", inv, rhs).reshape(-1, rank)
        xx = np.sum(x**2, axis=1)
        dist = np.sqrt(np.maximum(xx[:, None] - 2 * (x @ full.T) + norms_sq[None, :], 0.0))
        inside = np.all(np.sqrt(xx)[:, None] <= dist + vert_tol, axis=1)
        if inside.any():
            found.append(x[inside])
    if not found:
        return np.zeros((0, rank))
    verts = np.vstack(found)
    return np.vstack([verts, -verts])


def covering_radius_exact(basis: LatticeBasis, max_nodes: int = DEFAULT_MAX_NODES) -> CoveringRadiusResult:
    if basis.rank > VORONOI_MAX_RANK:
        raise RankTooLarge(f"exact covering radius needs rank <= {VORONOI_MAX_RANK}, got {basis.rank}")
    rel = relevant_vectors(basis, max_nodes)
    _, frame = span_coordinates(basis)
    seen: set[int] = set()
    half = []
    for rv in rel:
        if rv.class_index not in seen:
            seen.add(rv.class_index)
            half.append(rv.vector)
    in_span = np.array(half) @ frame
    lam1 = shortest_vector(basis, max_nodes).length
    verts = voronoi_vertices(in_span, basis.rank, vert_tol=1e-9 * lam1)
    norms = np.linalg.norm(verts, axis=1)
    best = int(np.argmax(norms))
    deep_hole = verts[best] @ frame.T
    value = float(norms[best])
    cert = CVPSolver(basis, max_nodes).distance(deep_hole)
    return CoveringRadiusResult(value, VORONOI_EXACT, deep_hole, cert, relevant_count=len(rel))


def covering_radius_estimate(
    basis: LatticeBasis,
    samples: int = 10_000,
    seed: int = 0,
    *,
    climb_starts: int = 16,
    climb_steps: int = 400,
    max_nodes: int = DEFAULT_MAX_NODES,
) -> CoveringRadiusResult:
    """Lower bound on the covering radius from random probes plus hill climbing.

    Probes are uniform in the fundamental parallelepiped. The best
    ``climb_starts`` probes are then improved by a seeded pattern search on
    the distance-to-lattice function. Every reported distance comes from an
    exact closest-vector query, so the value never exceeds the true radius.
    """
    rng = np.random.default_rng(seed)
    solver = CVPSolver(basis, max_nodes)
    r = basis.rank
    _, frame = span_coordinates(basis)
    probes = rng.random((samples, r)) @ basis.vectors
    dists = np.array([solver.distance(p) for p in probes])
    order = np.argsort(-dists, kind="stable")[: min(climb_starts, samples)]
    best_value = float(dists[order[0]]) if samples else 0.0
    best_point = probes[order[0]] if samples else np.zeros(basis.dimension)
    step0 = 0.25 * float(np.min(basis.norms()))
    for i in order:
        x, d = probes[i].copy(), float(dists[i])
        step = step0
        for _ in range(climb_steps):
            u = frame @ rng.standard_normal(r)
            u /= np.linalg.norm(u)
            improved = False
            for cand in (x + step * u, x - step * u):
                dc = solver.distance(cand)
                if dc > d:
                    x, d, improved = cand, dc, True
                    break
            if not improved:
                step *= 0.7
                if step < 1e-12 * step0:
                    break
        if d > best_value:
            best_value, best_point = d, x
    return CoveringRadiusResult(best_value, RANDOMIZED_LOWER_BOUND, best_point, best_value, samples=samples)


def lemma6_bound(rank: int, lambda_r: float) -> float:
    """(sqrt(r) / 2) * lambda_r, the successive-minimum bound on the covering radius."""
    return math.sqrt(rank) / 2 * lambda_r
