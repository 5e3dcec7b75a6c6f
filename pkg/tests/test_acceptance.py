"""Acceptance criteria, one marked group per criterion.

A pass/fail line per criterion is printed in the terminal summary (see conftest).
"""

import math
import time

import numpy as np
import pytest

from cyclolog import bounds, sweeps
from cyclolog.embedding import ramachandra_basis, ramachandra_log, ramachandra_log_complex
from cyclolog.lattice import LatticeBasis, closest_vector, shortest_vector, successive_minima
from cyclolog.lattice.voronoi import covering_radius_exact, lemma6_bound
from cyclolog.numtheory import admissibility_problem, make_modulus, unit_labels
from cyclolog.table1 import INFORMATIONAL_MU_FLOOR, MU_TOL, NEW_TOL, OLD_TOL, PUBLISHED

from _oracles import (
    FIXTURES,
    SMALL_CYCLOTOMIC,
    brute_closest,
    brute_minima,
    brute_shortest,
    cyclotomic_mu,
    fixture_basis,
    log_unit_complex,
)

HARD_MU = (7, 9, 11, 16)


def admissible(lo, hi):
    return [n for n in range(lo, hi + 1) if admissibility_problem(n) is None]


# criterion 1

@pytest.mark.criterion(1)
@pytest.mark.parametrize("n", sorted(PUBLISHED))
def test_bound_columns(n):
    s, _, old_printed, new_printed = PUBLISHED[n]
    assert make_modulus(n).s == s
    assert abs(bounds.bound_dearaujo(n, s, bounds.SQRT3) - old_printed) <= OLD_TOL
    assert abs(bounds.bound_new(n, s) - new_printed) <= NEW_TOL


@pytest.mark.criterion(1)
def test_bound_columns_runtime():
    t0 = time.perf_counter()
    for n, (s, *_rest) in PUBLISHED.items():
        bounds.bound_dearaujo(n, s, bounds.SQRT3)
        bounds.bound_new(n, s)
    assert time.perf_counter() - t0 < 1.0


# criterion 2

@pytest.fixture(scope="module")
def table_mu():
    t0 = time.perf_counter()
    values = {n: covering_radius_exact(ramachandra_basis(make_modulus(n))).value for n in sorted(PUBLISHED)}
    return values, time.perf_counter() - t0


@pytest.mark.criterion(2)
@pytest.mark.parametrize("n", HARD_MU)
def test_covering_radius_column(n, table_mu):
    values, _ = table_mu
    printed = PUBLISHED[n][1]
    assert abs(values[n] - printed) <= MU_TOL, f"n={n}: computed mu {values[n]:.6f}, printed {printed}"


@pytest.mark.criterion(2)
def test_covering_radius_informational_row(table_mu):
    values, _ = table_mu
    assert values[15] >= INFORMATIONAL_MU_FLOOR


@pytest.mark.criterion(2)
def test_covering_radius_runtime(table_mu):
    _, elapsed = table_mu
    assert elapsed < 30


# criterion 3

@pytest.mark.criterion(3)
def test_sine_log_square_sandwich():
    out, _ = sweeps.lemma2_sweep(10_000, log_spaced_extra=300, top=10**6)
    assert out.checked == 9_999 + 300
    assert out.violations == []
    assert out.elapsed < 120


# criterion 4

@pytest.mark.criterion(4)
def test_log_sine_dominance():
    out = sweeps.lemma3_sweep(200)
    assert out.elapsed < 120
    worst = sorted(out.violations, key=lambda v: v.observed["bound"] - v.observed["norm"])[:3]
    assert out.violations == [], f"{len(out.violations)} violations, worst: {[v.as_dict() for v in worst]}"


@pytest.mark.criterion(4)
def test_unit_norm_dominance():
    out = sweeps.lemma4_sweep(300)
    assert out.checked > 0
    assert out.violations == []
    assert out.elapsed < 120


# criterion 5

@pytest.mark.criterion(5)
def test_totient_bound_sweep():
    out = sweeps.phibound_sweep(10**5)
    assert out.checked == 10**5 - 1
    assert out.violations == []
    assert out.elapsed < 10


# criterion 6

@pytest.mark.criterion(6)
@pytest.mark.parametrize("n", SMALL_CYCLOTOMIC)
def test_covering_radius_below_minima_bound_cyclotomic(n):
    basis, res = cyclotomic_mu(n)
    assert basis.rank <= 5
    lam = successive_minima(basis).values
    assert res.value <= lemma6_bound(basis.rank, lam[-1]) + 1e-6


@pytest.mark.criterion(6)
@pytest.mark.parametrize("name", sorted(FIXTURES))
def test_covering_radius_below_minima_bound_fixtures(name):
    basis = fixture_basis(name)
    mu = covering_radius_exact(basis).value
    assert mu <= lemma6_bound(basis.rank, successive_minima(basis).values[-1]) + 1e-6


# criterion 7

@pytest.mark.criterion(7)
@pytest.mark.parametrize("r", [2, 3, 4])
def test_integer_lattice_radius(r):
    assert covering_radius_exact(fixture_basis(f"Z{r}")).value == pytest.approx(math.sqrt(r) / 2, abs=1e-9)


@pytest.mark.criterion(7)
def test_hexagonal_radius():
    assert covering_radius_exact(fixture_basis("A2")).value == pytest.approx(1 / math.sqrt(3), abs=1e-9)


BOX = 6


def random_bases(count, seed=20240607):
    """Gaussian bases of rank <= 3 for which a [-6, 6] coefficient box provably suffices.

    For v = xB we have |x_i| <= |v| * |col_i(pinv B)|. Short vectors satisfy
    |v| <= max |b_j|, and CVP targets use coefficients in [-2, 2]^r with
    distance at most sum |b_j| / 2, so bases where both bounds fit in the
    box are kept and the rest redrawn.
    """
    rng = np.random.default_rng(seed)
    out = []
    while len(out) < count:
        r = int(rng.integers(1, 4))
        b = rng.standard_normal((r, r + int(rng.integers(0, 2))))
        cols = np.linalg.norm(np.linalg.pinv(b), axis=0).max()
        norms = np.linalg.norm(b, axis=1)
        if norms.max() * cols > BOX or 2 + 0.5 * norms.sum() * cols > BOX:
            continue
        targets = [rng.uniform(-2, 2, r) @ b + 0.1 * rng.standard_normal(b.shape[1]) for _ in range(3)]
        out.append((b, targets))
    return out


@pytest.mark.criterion(7)
@pytest.mark.parametrize("case", range(50))
def test_engine_matches_exhaustive_search(case):
    b, targets = random_bases(50)[case]
    basis = LatticeBasis(b)
    assert shortest_vector(basis).length == pytest.approx(brute_shortest(b, BOX), rel=1e-9)
    np.testing.assert_allclose(successive_minima(basis).values, brute_minima(b, BOX), rtol=1e-9)
    for t in targets:
        assert closest_vector(basis, t).distance == pytest.approx(brute_closest(b, t, BOX), rel=1e-9, abs=1e-12)


# criterion 8

@pytest.mark.criterion(8)
def test_bound_new_identity():
    for n in admissible(5, 10_000):
        s = make_modulus(n).s
        direct = bounds.bound_new(n, s)
        composed = math.sqrt(bounds.lemma5_phi_upper(n, s) / 2) * bounds.lemma4_bound(n, s) / 2
        assert abs(direct - composed) <= 1e-12 * composed, n


# criterion 9

@pytest.mark.criterion(9)
@pytest.mark.parametrize("n", admissible(5, 50))
def test_unit_vector_integrity(n):
    m = make_modulus(n)
    for a in unit_labels(m):
        u = ramachandra_log(m, a)
        fast = u.vector.as_array()
        assert abs(u.vector.trace) <= 1e-9 * m.dimension
        np.testing.assert_allclose(fast, ramachandra_log_complex(m, a), rtol=0, atol=1e-9)
        np.testing.assert_allclose(fast, [float(x) for x in log_unit_complex(n, a)], rtol=0, atol=1e-9)
