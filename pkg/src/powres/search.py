"""Bounded search for ``x**a + 2*y**b + 4*z**c = p`` with ``a, b, c`` in ``{1, 2, 3}``.

A bounded search cannot prove that no solution exists (cubes run off to
negative infinity), so a miss is reported as exhausted at the bound.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Sequence

import numpy as np

from .arith import first_primes, primes_up_to

COEFFS = (1, 2, 4)
DEFAULT_BOUND = 200


@dataclass(frozen=True)
class SearchReport:
    exponents: tuple[int, int, int]
    p: int
    bound: int
    solution: Optional[tuple[int, int, int]] = None

    @property
    def outcome(self) -> str:
        return "solution" if self.solution is not None else "exhausted"

    def to_dict(self) -> dict:
        return {
            "exponents": list(self.exponents),
            "p": self.p,
            "bound": self.bound,
            "outcome": self.outcome,
            "solution": list(self.solution) if self.solution is not None else None,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "SearchReport":
        sol = d.get("solution")
        return cls(
            tuple(d["exponents"]), d["p"], d["bound"], tuple(sol) if sol is not None else None
        )

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "SearchReport":
        return cls.from_dict(json.loads(text))

    def describe(self) -> str:
        if self.solution is None:
            return f"exhausted({self.bound})"
        return "({}, {}, {})".format(*self.solution)


@dataclass(frozen=True)
class TableRow:
    exponents: tuple[int, int, int]
    exhausted: tuple[int, ...]
    reports: tuple[SearchReport, ...] = ()

    @property
    def solved(self) -> tuple[int, ...]:
        return tuple(r.p for r in self.reports if r.solution is not None)


def evaluate(exponents: Sequence[int], xyz: Sequence[int]) -> int:
    return sum(k * v**e for k, v, e in zip(COEFFS, xyz, exponents))


def _check_exponents(exponents) -> tuple[int, int, int]:
    exps = tuple(int(e) for e in exponents)
    if len(exps) != 3 or any(e not in (1, 2, 3) for e in exps):
        raise ValueError(f"exponents must be three values in {{1, 2, 3}}, got {exponents}")
    return exps


def visit_rank(v):
    """Position of ``v`` in the visiting order 0, 1, -1, 2, -2, ..."""
    return np.where(v > 0, 2 * v - 1, -2 * v)


def _values(e: int, bound: int) -> np.ndarray:
    # even powers only see non-negative values
    return np.arange(0, bound + 1) if e % 2 == 0 else np.arange(-bound, bound + 1)


@dataclass(frozen=True)
class _Plan:
    exponents: tuple[int, int, int]
    bound: int
    solve: int  # index of the variable solved for
    free: tuple[int, int]
    grid: tuple[np.ndarray, np.ndarray]  # values of the free variables
    partial: np.ndarray  # contribution of the free variables


@lru_cache(maxsize=32)
def _plan(exponents: tuple[int, int, int], bound: int) -> _Plan:
    if 1 in exponents:
        solve = exponents.index(1)
    elif 2 in exponents:
        solve = exponents.index(2)
    else:
        solve = 0
    free = tuple(i for i in range(3) if i != solve)
    u, v = np.meshgrid(
        _values(exponents[free[0]], bound), _values(exponents[free[1]], bound), indexing="ij"
    )
    u, v = u.ravel(), v.ravel()
    partial = COEFFS[free[0]] * u ** exponents[free[0]] + COEFFS[free[1]] * v ** exponents[free[1]]
    return _Plan(exponents, bound, solve, free, (u, v), partial)


def _exact_roots(target: np.ndarray, e: int):
    """Integer ``e``-th roots of ``target`` where they exist, plus the validity mask."""
    if e == 1:
        return target, np.ones(len(target), dtype=bool)
    if e == 2:
        ok = target >= 0
        root = np.rint(np.sqrt(np.where(ok, target, 0))).astype(np.int64)
    else:
        root = np.rint(np.cbrt(target)).astype(np.int64)
        ok = np.ones(len(target), dtype=bool)
    # float rounding is off by at most one here; settle exactly in integers
    for delta in (0, -1, 1):
        cand = root + delta
        hit = cand**e == target
        root = np.where(hit, cand, root)
        ok_hit = hit if delta == 0 else ok_hit | hit
    return root, ok & ok_hit


def search_triple(a: int, b: int, c: int, p: int, bound: int = DEFAULT_BOUND) -> SearchReport:
    """Deterministic bounded search for ``x**a + 2y**b + 4z**c = p``.

    Bounded variables are visited in the order 0, 1, -1, 2, -2, ... up to
    ``bound`` (even exponents skip negatives) and solutions are ranked
    lexicographically in ``(x, y, z)`` under that order. A variable with
    exponent 1 is solved for directly, is not bounded, and does not take
    part in the ranking.
    """
    exps = _check_exponents((a, b, c))
    if bound < 0:
        raise ValueError("bound must be non-negative")
    return _search(_plan(exps, bound), p)


def _search(plan: _Plan, p: int) -> SearchReport:
    e = plan.exponents[plan.solve]
    k = COEFFS[plan.solve]
    rest = p - plan.partial
    divisible = rest % k == 0
    root, ok = _exact_roots(rest // k, e)
    ok &= divisible
    if e > 1:
        ok &= np.abs(root) <= plan.bound
        if e % 2 == 0:
            ok &= root >= 0
    hits = np.flatnonzero(ok)
    if len(hits) == 0:
        return SearchReport(plan.exponents, p, plan.bound)
    cols = [None, None, None]
    cols[plan.free[0]] = plan.grid[0][hits]
    cols[plan.free[1]] = plan.grid[1][hits]
    cols[plan.solve] = root[hits]
    ranked = [visit_rank(cols[i]) for i in range(3) if e > 1 or i != plan.solve]
    best = np.lexsort(ranked[::-1])[0]
    sol = tuple(int(cols[i][best]) for i in range(3))
    assert evaluate(plan.exponents, sol) == p
    return SearchReport(plan.exponents, p, plan.bound, sol)


def _search_chunk(args) -> list[SearchReport]:
    exps, bound, primes = args
    plan = _plan(exps, bound)
    return [_search(plan, p) for p in primes]


def _chunks(items: list, k: int) -> list[list]:
    size = max(1, -(-len(items) // k))
    return [items[i : i + size] for i in range(0, len(items), size)]


def scan_reports(
    a: int,
    b: int,
    c: int,
    primes: Sequence[int],
    bound: int = DEFAULT_BOUND,
    jobs: int = 1,
) -> list[SearchReport]:
    """Search every prime; output is in ascending prime order regardless of ``jobs``."""
    exps = _check_exponents((a, b, c))
    primes = sorted(primes)
    if jobs <= 1 or len(primes) < 2:
        return _search_chunk((exps, bound, primes))
    tasks = [(exps, bound, chunk) for chunk in _chunks(primes, jobs)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        merged = [rep for part in pool.map(_search_chunk, tasks) for rep in part]
    return sorted(merged, key=lambda rep: rep.p)


def scan_table(
    a: int,
    b: int,
    c: int,
    prime_count: Optional[int] = None,
    bound: int = DEFAULT_BOUND,
    *,
    limit: Optional[int] = None,
    jobs: int = 1,
) -> TableRow:
    """Search the first ``prime_count`` primes (or all primes ``<= limit``)."""
    if (prime_count is None) == (limit is None):
        raise ValueError("give exactly one of prime_count and limit")
    primes = first_primes(prime_count) if prime_count is not None else primes_up_to(limit)
    reports = scan_reports(a, b, c, primes, bound, jobs)
    exhausted = tuple(r.p for r in reports if r.solution is None)
    return TableRow(_check_exponents((a, b, c)), exhausted, tuple(reports))
