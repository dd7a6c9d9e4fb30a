"""Power residues modulo a prime, irreducibility of ``x**n - r``, and zeros of the norm form."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterator, Optional

import numpy as np

from .arith import exact_root, factorize, integer_root, is_prime
from .norms import det_norm, det_norm_mod_p
from .orders import nth_roots_of_unity, order_fast
from .quadratic import legendre_general

# Largest p**n the exhaustive zero scan will enumerate.
BRUTE_LIMIT = 10**7


def _check(r: int, p: int) -> None:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if r % p == 0:
        raise ValueError(f"{p} divides {r}")


def has_nth_root(r: int, n: int, p: int) -> bool:
    """Generalized Euler criterion: ``r**((p-1)/gcd(p-1, n)) = 1 (mod p)``."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    _check(r, p)
    return pow(r, (p - 1) // math.gcd(p - 1, n), p) == 1


def find_root(r: int, n: int, p: int) -> Optional[int]:
    """Smallest ``t`` in ``[1, p)`` with ``t**n = r (mod p)``, by linear scan."""
    _check(r, p)
    r %= p
    return next((t for t in range(1, p) if pow(t, n, p) == r), None)


def all_nth_roots(r: int, n: int, p: int) -> set[int]:
    """Every solution of ``x**n = r (mod p)``: one root times the ``n``-th roots of unity."""
    if not has_nth_root(r, n, p):
        return set()
    t = find_root(r, n, p)
    return {t * z % p for z in nth_roots_of_unity(n, p)}


def co_order(r: int, p: int) -> int:
    """``(p - 1) / O_p(r)``; the largest ``n | p-1`` for which ``r`` is an ``n``-th power."""
    _check(r, p)
    return (p - 1) // order_fast(r, p)


def is_irreducible_Fp(n: int, r: int, p: int) -> bool:
    """Irreducibility of ``x**n - r`` over ``F_p``.

    No prime ``q | n`` may have ``r`` as a ``q``-th power; when ``4 | n`` and
    neither ``4 | p-1`` nor ``p = 2`` holds, ``4x**4 + r`` must also have no
    root.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if n == 1:
        return True
    r0 = r % p
    if r0 == 0:
        return False
    if any(has_nth_root(r0, q, p) for q in factorize(n).primes):
        return False
    if n % 4 == 0 and p != 2 and (p - 1) % 4 != 0:
        if any((4 * pow(x, 4, p) + r0) % p == 0 for x in range(p)):
            return False
    return True


def is_irreducible_Q(n: int, r: int) -> bool:
    """Irreducibility of ``x**n - r`` over the rationals."""
    if r == 0:
        raise ValueError("r must be nonzero")
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if any(exact_root(r, q) is not None for q in factorize(n).primes):
        return False
    if r < 0 and n % 4 == 0 and (-r) % 4 == 0 and exact_root(-r // 4, 4) is not None:
        # x**4k + 4a**4 = (x**2k - 2a x**k + 2a**2)(x**2k + 2a x**k + 2a**2)
        return False
    return True


@dataclass(frozen=True)
class ResidueSolution:
    """A nonzero tuple whose norm form vanishes mod ``p``."""

    xbar: tuple[int, ...]
    r: int
    p: int
    bound_ok: bool
    root: Optional[int] = None

    @property
    def n(self) -> int:
        return len(self.xbar)


def strictly_below_root(x: int, p: int, n: int) -> bool:
    """``|x| < p**(1/n)`` decided in integers."""
    return abs(x) ** n < p


def _solution(xbar, r, p, root=None) -> ResidueSolution:
    xbar = tuple(xbar)
    ok = all(strictly_below_root(x, p, len(xbar)) for x in xbar)
    return ResidueSolution(xbar, r, p, ok, root)


def _shells(n: int, bound: int) -> Iterator[tuple[int, ...]]:
    """Nonzero integer tuples ordered by max-norm, then lexicographically."""
    for b in range(1, bound + 1):
        span = range(-b, b + 1)
        for t in itertools.product(span, repeat=n):
            if max(map(abs, t)) == b:
                yield t


def find_nontrivial_zero(r: int, n: int, p: int) -> Optional[ResidueSolution]:
    """Nonzero ``xbar`` with ``D^r_n(xbar) = 0 (mod p)``, small when possible.

    With a root ``t`` of ``t**n = r``, tuples over ``{0, ..., floor(p**(1/n))}``
    are enumerated lexicographically and ``f(x) = sum(x_i t**i) mod p`` is
    hashed; the first collision gives the difference ``later - earlier``. More
    tuples than residues guarantees a collision. Without a root, an
    irreducible ``x**n - r`` admits no zero and None is returned; otherwise
    small tuples are scanned outward.
    """
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    _check(r, p)
    t = find_root(r, n, p)
    if t is None:
        if is_irreducible_Fp(n, r, p):
            return None
        for cand in _shells(n, p // 2):
            if det_norm_mod_p(cand, r, p) == 0:
                return _solution(cand, r, p)
        return None
    top = integer_root(p, n)
    powers = [pow(t, i, p) for i in range(n)]
    seen: dict[int, tuple[int, ...]] = {}
    for m in itertools.product(range(top + 1), repeat=n):
        f = sum(c * w for c, w in zip(m, powers)) % p
        prev = seen.get(f)
        if prev is not None:
            return _solution((a - b for a, b in zip(m, prev)), r, p, t)
        seen[f] = m
    raise AssertionError("pigeonhole failed")  # (top+1)**n > p always


def _leibniz_terms(n: int):
    for perm in itertools.permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        yield (-1 if inv % 2 else 1), perm


def _tuples(p: int, k: int) -> np.ndarray:
    """All of ``range(p)**k`` in lexicographic order, one tuple per row."""
    idx = np.arange(p**k, dtype=np.int64)
    weights = p ** np.arange(k - 1, -1, -1, dtype=np.int64)
    return idx[:, None] // weights % p


def _nonzero_tuples(p: int, n: int, projective: bool) -> np.ndarray:
    if not projective:
        return _tuples(p, n)[1:]
    blocks = []
    for lead in range(n):
        tail = _tuples(p, n - lead - 1)
        block = np.zeros((len(tail), n), dtype=np.int64)
        block[:, lead] = 1
        block[:, lead + 1 :] = tail
        blocks.append(block)
    return np.concatenate(blocks[::-1])


def zero_scan(r: int, n: int, p: int, projective: bool = False) -> Optional[tuple[int, ...]]:
    """Exhaustive search of ``F_p**n`` for a nonzero zero of the norm form mod ``p``.

    The determinant of every weighted circulant is evaluated as a Leibniz
    sum, vectorized over all tuples. With ``projective=True`` only tuples
    whose first nonzero entry is 1 are visited, which loses nothing since
    ``D(c*x) = c**n D(x)``. Returns the first zero found, or None.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p**n > BRUTE_LIMIT:
        raise ValueError(f"p**n = {p ** n} exceeds brute limit {BRUTE_LIMIT}")
    r0 = r % p
    grid = _nonzero_tuples(p, n, projective)

    def entry(i, j):
        col = grid[:, (i - j) % n]
        return col if i >= j else col * r0 % p

    total = np.zeros(len(grid), dtype=np.int64)
    for sign, perm in _leibniz_terms(n):
        term = np.ones(len(grid), dtype=np.int64)
        for i, j in enumerate(perm):
            term = term * entry(i, j) % p
        total = (total + sign * term) % p
    hits = np.flatnonzero(total == 0)
    return tuple(int(v) for v in grid[hits[0]]) if len(hits) else None


def check_prime_exponent_equivalence(q: int, r: int, p: int) -> bool:
    """Whether "``x**q = r`` solvable" agrees with "norm form has a nonzero zero mod ``p``".

    The left side uses Euler's criterion. The right side is an exhaustive
    scan when ``p**q <= BRUTE_LIMIT``; otherwise a positive left side is
    confirmed with the collision solver and a negative one is out of reach.
    """
    if not is_prime(q):
        raise ValueError(f"{q} is not prime")
    _check(r, p)
    left = has_nth_root(r, q, p)
    if p**q <= BRUTE_LIMIT:
        right = zero_scan(r, q, p, projective=True) is not None
    elif left:
        sol = find_nontrivial_zero(r, q, p)
        right = sol is not None and any(sol.xbar) and det_norm_mod_p(sol.xbar, r, p) == 0
    else:
        raise ValueError(f"p**q = {p ** q} exceeds brute limit; cannot refute a zero")
    return left == right


def norm_equals_p_obstruction(n: int, r: int, p: int) -> bool:
    """True when ``D^r_n(x) = p`` is provably unsolvable because ``x**n - r`` is irreducible mod ``p``."""
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    return is_irreducible_Fp(n, r, p)


def bounded_norm_search(target: int, n: int, r: int, bound: int) -> Optional[tuple[int, ...]]:
    """Some ``x`` with ``|x_i| <= bound`` and ``D^r_n(x) = target``, or None.

    For ``n = 2`` the first coordinate is solved from ``x0**2 = target + r*x1**2``.
    """
    if n == 2:
        for x1 in range(bound + 1):
            x0 = exact_root(target + r * x1 * x1, 2)
            if x0 is not None and x0 <= bound:
                return (x0, x1)
        return None
    span = range(-bound, bound + 1)
    return next((t for t in itertools.product(span, repeat=n) if det_norm(t, r) == target), None)


NORM_P_PARAMS = (-2, -1, 2)


def construct_norm_p(r: int, p: int) -> tuple[int, int]:
    """Integers ``(x0, x1)`` with ``x0**2 - r*x1**2 = p`` for ``r`` in ``{-2, -1, 2}``.

    Starts from the small zero ``(a, b)`` of the norm mod ``p``. For ``r = 2``
    the norm of ``(a, b)`` is forced to ``-p`` and multiplying by ``1 + u``
    (norm ``-1``) gives ``(a + 2b, a + b)``. For ``r = -1`` it is ``p``
    already. For ``r = -2`` it is ``p`` or ``2p``; in the latter case ``a`` is
    even and ``(b, a/2)`` works.
    """
    if r not in NORM_P_PARAMS:
        raise ValueError(f"r must be one of {NORM_P_PARAMS}, got {r}")
    if p == 2 or not is_prime(p):
        raise ValueError(f"{p} is not an odd prime")
    if legendre_general(r, p) != 1:
        raise ValueError(f"{r} is not a square modulo {p}")
    sol = find_nontrivial_zero(r, 2, p)
    a, b = sol.xbar
    norm = a * a - r * b * b
    if r == 2:
        if norm != -p:
            raise ArithmeticError(f"expected norm -{p} from {sol.xbar}, got {norm}")
        x0, x1 = a + 2 * b, a + b
    elif r == -1:
        if norm != p:
            raise ArithmeticError(f"expected norm {p} from {sol.xbar}, got {norm}")
        x0, x1 = a, b
    else:
        if norm == p:
            x0, x1 = a, b
        elif norm == 2 * p and a % 2 == 0:
            x0, x1 = b, a // 2
        else:
            raise ArithmeticError(f"unexpected norm {norm} from {sol.xbar}")
    return abs(x0), abs(x1)
