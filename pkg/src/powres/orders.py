"""Multiplicative orders, co-orders and roots of unity."""

from __future__ import annotations

import math
from dataclasses import dataclass

import gmpy2

from .arith import (
    Factorization,
    carmichael_lambda,
    euler_phi,
    factorize,
    is_prime,
    lcm,
    primitive_root,
)


def _check_unit(r: int, m: int) -> None:
    if m < 2:
        raise ValueError(f"modulus must be >= 2, got {m}")
    if math.gcd(r, m) != 1:
        raise ValueError(f"{r} is not a unit modulo {m}")


def order_bruteforce(r: int, m: int) -> int:
    """Least ``n >= 1`` with ``r**n = 1 (mod m)``, by repeated multiplication."""
    _check_unit(r, m)
    r %= m
    x, n = r, 1
    while x != 1 % m:
        x = x * r % m
        n += 1
    return n


# m -> (lambda(m), primes dividing lambda(m)); results never depend on it.
_EXPONENT_CACHE: dict[int, tuple[int, tuple[int, ...]]] = {}
_EXPONENT_CACHE_MAX = 1 << 16


def _exponent_and_primes(m: int) -> tuple[int, tuple[int, ...]]:
    hit = _EXPONENT_CACHE.get(m)
    if hit is None:
        lam = carmichael_lambda(m)
        hit = (lam, factorize(lam).primes)
        if len(_EXPONENT_CACHE) < _EXPONENT_CACHE_MAX:
            _EXPONENT_CACHE[m] = hit
    return hit


_gcd = math.gcd
_powmod = gmpy2.powmod


def order_fast(r: int, m: int) -> int:
    """Order of ``r`` modulo ``m`` by stripping prime factors off a multiple of it.

    The start is the group exponent ``lambda(m)``, a divisor of ``phi(m)``
    that every unit order divides; most units have order close to it, so
    few strips fail.
    """
    if m < 2 or _gcd(r, m) != 1:
        _check_unit(r, m)
    hit = _EXPONENT_CACHE.get(m)
    order, primes = hit if hit is not None else _exponent_and_primes(m)
    for q in primes:
        while order % q == 0 and _powmod(r, order // q, m) == 1:
            order //= q
    return order


def _plus_minus_one(r: int, m: int) -> int:
    # r = 1 has order 1; r = -1 has order 2 unless m = 2.
    return 1 if r == 1 or m == 2 else 2


def order_prime_power(r: int, p: int, e: int) -> int:
    """Order of ``r`` modulo ``p**e`` for an odd prime ``p``.

    Finds the largest ``e0 <= e`` with ``O_{p^e0}(r) = O_p(r)`` and lifts by
    ``p**(e - e0)``. The probe never goes past the requested ``e``.
    """
    if p == 2:
        raise ValueError("p = 2: use order_two_power")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if e < 1:
        raise ValueError(f"exponent must be >= 1, got {e}")
    if r in (1, -1):
        raise ValueError("r = +-1 is not allowed for prime-power lifting")
    base = order_fast(r, p)
    e0 = 1
    while e0 < e and pow(r, base, p ** (e0 + 1)) == 1:
        e0 += 1
    return base if e <= e0 else p ** (e - e0) * base


def order_two_power(r: int, e: int) -> int:
    """Order of the odd ``r`` modulo ``2**e`` (``e >= 2``), anchored at ``O_4(r)``."""
    if e < 2:
        raise ValueError(f"exponent must be >= 2, got {e}")
    if r % 2 == 0:
        raise ValueError(f"{r} is even")
    if r in (1, -1):
        raise ValueError("r = +-1 is not allowed for two-power lifting")
    base = 1 if r % 4 == 1 else 2
    e0 = 2
    while e0 < e and pow(r, base, 2 ** (e0 + 1)) == 1:
        e0 += 1
    return base if e <= e0 else 2 ** (e - e0) * base


def _order_of_prime_power(r: int, p: int, e: int) -> int:
    if p == 2:
        if e == 1:
            return 1
        return order_two_power(r, e)
    return order_prime_power(r, p, e)


def order_composite(r: int, m_fact) -> int:
    """Order modulo ``m`` as the lcm of the orders modulo its prime powers."""
    if not isinstance(m_fact, Factorization):
        m_fact = factorize(m_fact)
    m = m_fact.value
    _check_unit(r, m)
    if r in (1, -1):
        return _plus_minus_one(r, m)
    return lcm(*(_order_of_prime_power(r, p, e) for p, e in m_fact))


@dataclass(frozen=True)
class OrderRecord:
    modulus: int
    base: int
    order: int
    co_order: int

    def __post_init__(self):
        phi = euler_phi(self.modulus)
        if self.order * self.co_order != phi:
            raise ValueError("order * co_order must equal phi(modulus)")
        r, m, n = self.base, self.modulus, self.order
        if pow(r, n, m) != 1 % m or any(pow(r, n // q, m) == 1 for q in factorize(n).primes):
            raise ValueError(f"{n} is not the order of {r} modulo {m}")


def order_record(r: int, m: int) -> OrderRecord:
    order = order_fast(r, m)
    return OrderRecord(m, r % m, order, euler_phi(m) // order)


def phi_quotient_exponent(m_fact) -> int:
    """``phi(m) / gcd(phi(p_i**e_i))``; every unit raised to it is 1 mod ``m``."""
    if not isinstance(m_fact, Factorization):
        m_fact = factorize(m_fact)
    if len(m_fact) < 2:
        raise ValueError(f"{m_fact.value} needs at least two distinct prime factors")
    parts = [euler_phi(q) for q in m_fact.prime_powers]
    return euler_phi(m_fact) // math.gcd(*parts)


def nth_roots_of_unity(n: int, p: int) -> set[int]:
    """All ``a`` with ``a**n = 1 (mod p)``, as powers of a primitive root."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    g = primitive_root(p)
    d = math.gcd(n, p - 1)
    step = (p - 1) // d
    return {pow(g, k * step, p) for k in range(d)}


def order_table(m: int) -> list[int]:
    """Orders of all units modulo ``m``; entry ``a`` is 0 when ``gcd(a, m) > 1``.

    Each orbit ``r, r**2, ..., 1`` is walked by repeated multiplication, and
    its length ``k`` gives ``O(r**i) = k / gcd(i, k)`` for every point on it.
    No factorization is involved, so this serves as a bulk oracle for
    ``order_fast``.
    """
    if m < 2:
        raise ValueError(f"modulus must be >= 2, got {m}")
    orders = [0] * m
    one = 1 % m
    for r in range(1, m):
        if orders[r] or math.gcd(r, m) != 1:
            continue
        cycle = [r]
        x = r
        while x != one:
            x = x * r % m
            cycle.append(x)
        k = len(cycle)
        for i, y in enumerate(cycle, 1):
            if not orders[y]:
                orders[y] = k // math.gcd(i, k)
    return orders


def geometric_sum_mod(a: int, n: int, p: int) -> int:
    """``sum(a**i for i < n) mod p`` by direct accumulation."""
    total, term = 0, 1
    for _ in range(n):
        total += term
        term = term * a % p
    return total % p


def power_sum_mod(n: int, p: int) -> int:
    """``sum(k**n for k in 1..p-1) mod p``."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    return sum(pow(k, n, p) for k in range(1, p)) % p
