"""Range sweeps that check each analytic inequality numerically.

Each sweep returns a :class:`SweepOutcome`; a violation carries the exact
inputs needed to rerun the single failing check.
"""

from __future__ import annotations

import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from cyclolog import bounds
from cyclolog.embedding import (
    log_sin_vector,
    ramachandra_log,
    ramachandra_log_complex,
)
from cyclolog.numtheory import (
    admissibility_problem,
    factorize_with_sieve,
    gamma_subsets,
    make_modulus,
    smallest_prime_factors,
    unit_labels,
)

EQUALITY_TOL = 1e-9  # relative to n
ORACLE_TOL = 1e-9


@dataclass(frozen=True)
class Violation:
    input: dict
    quantity: str
    relation: str
    observed: dict

    def as_dict(self) -> dict:
        return {"input": self.input, "quantity": self.quantity, "relation": self.relation,
                "observed": self.observed}


@dataclass
class SweepOutcome:
    name: str
    range: str
    checked: int = 0
    violations: list[Violation] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.violations

    def as_dict(self, include_elapsed: bool = False) -> dict:
        out = {"command": self.name, "range": self.range, "checked": self.checked,
               "violations": [v.as_dict() for v in self.violations]}
        if include_elapsed:
            out["elapsed"] = self.elapsed
        return out


def _map(fn, items, jobs: int):
    if jobs <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * jobs))))


def log_spaced(start: int, stop: int, count: int) -> list[int]:
    """Up to ``count`` distinct integers geometrically spaced in (start, stop]."""
    if count <= 0 or stop <= start:
        return []
    raw = np.geomspace(max(start, 2), stop, count + 1)[1:]
    return sorted({int(round(v)) for v in raw if round(v) > start})


def lemma2_sweep(m_max: int, log_spaced_extra: int = 0, top: int = 10**6, jobs: int = 1,
                 keep_records: bool = False):
    """Check lower < S(m) < upper for 2 <= m <= m_max plus log-spaced extras.

    Returns ``(outcome, records)``; ``records`` is empty unless requested.
    """
    if m_max < 2:
        raise bounds.OutOfRange(f"m_max must be at least 2, got {m_max}")
    t0 = time.perf_counter()
    ms = list(range(2, m_max + 1)) + log_spaced(m_max, top, log_spaced_extra)
    records = _map(bounds.lemma2_record, ms, jobs)
    records.sort(key=lambda r: r.m)
    desc = f"m in [2, {m_max}]" + (f" + {len(ms) - (m_max - 1)} log-spaced up to {top}" if log_spaced_extra else "")
    out = SweepOutcome("lemma2", desc, checked=len(records))
    for r in records:
        if not r.holds:
            out.violations.append(Violation({"m": r.m}, "S(m)", "lower < S(m) < upper",
                                            {"S": r.sum, "lower": r.lower, "upper": r.upper}))
    out.elapsed = time.perf_counter() - t0
    return out, (records if keep_records else [])


def phibound_sweep(n_max: int) -> SweepOutcome:
    """phi(n) <= n (1 - n^(-1/s))^s on [2, n_max], with equality exactly at primes."""
    if n_max < 2:
        raise bounds.OutOfRange(f"n_max must be at least 2, got {n_max}")
    t0 = time.perf_counter()
    spf = smallest_prime_factors(n_max)
    out = SweepOutcome("phibound", f"n in [2, {n_max}]")
    for n in range(2, n_max + 1):
        factors = factorize_with_sieve(n, spf)
        s = len(factors)
        phi = math.prod(p ** (e - 1) * (p - 1) for p, e in factors)
        upper = bounds.lemma5_phi_upper(n, s)
        prime = factors == ((n, 1),)
        tol = EQUALITY_TOL * n
        out.checked += 1
        observed = {"phi": phi, "upper": upper, "s": s}
        if phi > upper + tol:
            out.violations.append(Violation({"n": n}, "phi(n)", "phi <= n(1-n^(-1/s))^s", observed))
        elif (abs(upper - phi) <= tol) != prime:
            relation = "equality at prime" if prime else "strict inequality at composite"
            out.violations.append(Violation({"n": n}, "phi(n)", relation, observed))
    out.elapsed = time.perf_counter() - t0
    return out


def _lemma3_one(n: int) -> tuple[int, list[Violation]]:
    m = make_modulus(n)
    checked, bad = 0, []
    for d in gamma_subsets(m):
        limit = bounds.lemma3_bound(n, d.n_I)
        for a in [1, *unit_labels(m)]:
            norm = log_sin_vector(m, a, d).norm
            checked += 1
            if not norm < limit:
                bad.append(Violation({"n": n, "a": a, "n_I": d.n_I}, "|Log(sine unit)|",
                                     "norm < lemma3_bound", {"norm": norm, "bound": limit}))
    return checked, bad


def _lemma4_one(n: int) -> tuple[int, list[Violation]]:
    m = make_modulus(n)
    limit = bounds.lemma4_bound(n, m.s)
    checked, bad = 0, []
    for a in unit_labels(m):
        u = ramachandra_log(m, a)
        checked += 1
        if not u.norm < limit:
            bad.append(Violation({"n": n, "a": a}, "|Log xi_a|", "norm < lemma4_bound",
                                 {"norm": u.norm, "bound": limit}))
        trace = u.vector.trace
        if abs(trace) > u.trace_tol():
            bad.append(Violation({"n": n, "a": a}, "trace(Log xi_a)", "|trace| <= 1e-9 * dim",
                                 {"trace": trace, "tol": u.trace_tol()}))
    return checked, bad


def _unit_oracle_one(n: int) -> tuple[int, list[Violation]]:
    m = make_modulus(n)
    checked, bad = 0, []
    for a in unit_labels(m):
        fast = ramachandra_log(m, a).vector.as_array()
        slow = ramachandra_log_complex(m, a)
        checked += 1
        err = float(np.max(np.abs(fast - slow)))
        if err > ORACLE_TOL:
            bad.append(Violation({"n": n, "a": a}, "Log xi_a", "matches complex evaluation",
                                 {"max_abs_diff": err}))
    return checked, bad


def _admissible_range(n_max: int) -> list[int]:
    return [n for n in range(5, n_max + 1) if admissibility_problem(n) is None]


def _run_per_modulus(name: str, fn, n_max: int, jobs: int) -> SweepOutcome:
    t0 = time.perf_counter()
    ns = _admissible_range(n_max)
    out = SweepOutcome(name, f"admissible n in [5, {n_max}]")
    for checked, bad in _map(fn, ns, jobs):
        out.checked += checked
        out.violations.extend(bad)
    out.elapsed = time.perf_counter() - t0
    return out


def lemma3_sweep(n_max: int = 200, jobs: int = 1) -> SweepOutcome:
    return _run_per_modulus("lemma3", _lemma3_one, n_max, jobs)


def lemma4_sweep(n_max: int = 300, jobs: int = 1) -> SweepOutcome:
    """Norm and trace checks for every Log xi_a with admissible n <= n_max."""
    return _run_per_modulus("lemma4", _lemma4_one, n_max, jobs)


def unit_oracle_sweep(n_max: int = 50, jobs: int = 1) -> SweepOutcome:
    return _run_per_modulus("unit-oracle", _unit_oracle_one, n_max, jobs)
