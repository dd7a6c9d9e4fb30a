"""Slow reference implementations shared by the tests.

Nothing here calls into the package; each routine follows the plain
definition of the quantity it computes.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction


def is_prime_td(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def factor_td(n: int) -> list[tuple[int, int]]:
    out = []
    d = 2
    while d * d <= n:
        e = 0
        while n % d == 0:
            n //= d
            e += 1
        if e:
            out.append((d, e))
        d += 1
    if n > 1:
        out.append((n, 1))
    return out


def phi_count(n: int) -> int:
    return sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)


def order_loop(r: int, m: int) -> int:
    x, k = r % m, 1
    while x != 1:
        x = x * r % m
        k += 1
    return k


def crt_scan(pairs) -> tuple[int, int] | None:
    mod = math.lcm(*(n for _, n in pairs)) if pairs else 1
    for x in range(mod):
        if all((x - a) % n == 0 for a, n in pairs):
            return x, mod
    return None


def squares_mod(p: int) -> set[int]:
    return {x * x % p for x in range(1, p)}


def legendre_squares(r: int, p: int) -> int:
    return 1 if r % p in squares_mod(p) else -1


def nth_powers_solutions(r: int, n: int, p: int) -> set[int]:
    return {x for x in range(1, p) if pow(x, n, p) == r % p}


def det_fraction(rows) -> int:
    """Determinant by Gaussian elimination over the rationals."""
    a = [[Fraction(v) for v in row] for row in rows]
    n = len(a)
    det = Fraction(1)
    for k in range(n):
        piv = next((i for i in range(k, n) if a[i][k] != 0), None)
        if piv is None:
            return 0
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            det = -det
        det *= a[k][k]
        for i in range(k + 1, n):
            f = a[i][k] / a[k][k]
            for j in range(k, n):
                a[i][j] -= f * a[k][j]
    assert det.denominator == 1
    return int(det)


def weighted_circulant(x, r):
    """Multiplication-by-x matrix on 1, u, ..., u^(n-1) with u^n = r, built column by column."""
    n = len(x)
    cols = []
    for j in range(n):
        col = [0] * n
        for i, c in enumerate(x):
            k = i + j
            col[k % n] += c * (r if k >= n else 1)
        cols.append(col)
    return [[cols[j][i] for j in range(n)] for i in range(n)]


def norm_closed_form(x, r) -> int:
    if len(x) == 1:
        return x[0]
    if len(x) == 2:
        a, b = x
        return a * a - r * b * b
    if len(x) == 3:
        a, b, c = x
        return a**3 + r * b**3 + r * r * c**3 - 3 * r * a * b * c
    if len(x) == 4:
        # (a^2 + r c^2 + 2r b d)^2 - r (2ac + b^2 + r d^2)^2 after pairing u with -u,
        # then the resulting quadratic in sqrt(r) is normed again
        a, b, c, d = x
        e0 = a * a + r * c * c - 2 * r * b * d
        e1 = 2 * a * c - b * b - r * d * d
        return e0 * e0 - r * e1 * e1
    raise ValueError("closed forms only for n <= 4")


def polymul_mod_binomial(a, b, r):
    n = len(a)
    out = [0] * n
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            k = i + j
            out[k % n] += x * y * (r if k >= n else 1)
    return out


def search_brute(exps, p: int, bound: int):
    """First solution in the order 0, 1, -1, 2, -2, ... on the bounded coordinates.

    Linear coordinates are solved for, so they are neither bounded nor ranked.
    """
    def walk(e):
        yield 0
        for v in range(1, bound + 1):
            yield v
            if e % 2:
                yield -v

    coef = (1, 2, 4)
    free = [i for i in range(3) if exps[i] != 1]
    solved = next((i for i in range(3) if exps[i] == 1), None)
    for vals in itertools.product(*(list(walk(exps[i])) for i in free)):
        xyz = [0, 0, 0]
        for i, v in zip(free, vals):
            xyz[i] = v
        if solved is None:
            if sum(c * v**e for c, v, e in zip(coef, xyz, exps)) == p:
                return tuple(xyz)
            continue
        rest = p - sum(coef[i] * xyz[i] ** exps[i] for i in free)
        if rest % coef[solved] == 0:
            xyz[solved] = rest // coef[solved]
            return tuple(xyz)
    return None
