"""Brute-force polynomial arithmetic over ``F_p``; slow on purpose, used as a reference."""

from __future__ import annotations

from typing import Sequence

import numpy as np


def poly_mul_fp(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    """Product of two coefficient lists (least degree first) over ``F_p``."""
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = (out[i + j] + x * y) % p
    return out


def monic_lower_coeffs(p: int, k: int) -> np.ndarray:
    """The ``k`` lower coefficients of every monic polynomial of degree ``k``."""
    idx = np.arange(p**k, dtype=np.int64)
    return idx[:, None] // p ** np.arange(k, dtype=np.int64) % p


def xpow_mod_all(n: int, p: int, k: int) -> np.ndarray:
    """``x**n mod g`` for every monic ``g`` of degree ``k``, one remainder per row."""
    g = monic_lower_coeffs(p, k)
    rem = np.zeros_like(g)
    rem[:, 0] = 1 % p
    for _ in range(n):
        top = rem[:, -1].copy()
        rem[:, 1:] = rem[:, :-1]
        rem[:, 0] = 0
        rem = (rem - top[:, None] * g) % p
    return rem


def binomial_reducible_constants(n: int, p: int) -> set[int]:
    """All ``r`` in ``F_p`` for which ``x**n - r`` has a monic factor of degree ``1..n//2``.

    Straight trial division: ``g`` divides ``x**n - r`` exactly when
    ``x**n mod g`` is the constant ``r``.
    """
    found: set[int] = set()
    for k in range(1, n // 2 + 1):
        rem = xpow_mod_all(n, p, k)
        const = np.all(rem[:, 1:] == 0, axis=1)
        found.update(int(r) for r in np.unique(rem[const, 0]))
    return found


def is_irreducible_binomial_bruteforce(n: int, r: int, p: int) -> bool:
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    return r % p not in binomial_reducible_constants(n, p)
