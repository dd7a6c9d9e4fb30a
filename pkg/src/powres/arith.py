"""Exact integer plumbing: primality, factorization, CRT, primitive roots."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache, reduce
from typing import Iterable, Iterator, Optional, Sequence

import gmpy2

# Deterministic for n < 3.3 * 10**24, which covers every 64-bit input.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)

# Offsets of a mod-30 wheel, starting from 7.
_WHEEL_STEPS = (4, 2, 4, 2, 4, 6, 2, 6)
_TRIAL_LIMIT = 1 << 16  # sqrt(2**32)
_SIEVE_LIMIT = 1 << 17


def _small_sieve(limit: int) -> bytearray:
    sieve = bytearray([1]) * (limit + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, math.isqrt(limit) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, limit + 1, i)))
    return sieve


_SIEVE = _small_sieve(_SIEVE_LIMIT)


def is_prime(n: int) -> bool:
    if n <= _SIEVE_LIMIT:
        return n >= 2 and bool(_SIEVE[n])
    for q in _SMALL_PRIMES:
        if n == q:
            return True
        if n % q == 0:
            return False
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class Factorization:
    """Prime-power decomposition ``value = prod(p**e for p, e in factors)``."""

    value: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.value < 1:
            raise ValueError(f"factorization of non-positive {self.value}")
        prod = 1
        last = 1
        for p, e in self.factors:
            if p <= last or e < 1 or not is_prime(p):
                raise ValueError(f"bad factor list {self.factors!r}")
            last = p
            prod *= p**e
        if prod != self.value:
            raise ValueError(f"factors {self.factors!r} do not multiply to {self.value}")

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.factors)

    def __len__(self) -> int:
        return len(self.factors)

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    @property
    def prime_powers(self) -> tuple[int, ...]:
        return tuple(p**e for p, e in self.factors)

    def is_squarefree(self) -> bool:
        return all(e == 1 for _, e in self.factors)

    def is_prime_power(self) -> bool:
        return len(self.factors) == 1

    def divisors(self) -> list[int]:
        divs = [1]
        for p, e in self.factors:
            divs = [d * p**k for d in divs for k in range(e + 1)]
        return sorted(divs)


def _pollard_brent(n: int) -> int:
    """Return a nontrivial factor of the odd composite ``n``."""
    for c in range(1, n):
        y, m, g, r, q = 2, 128, 1, 1, 1
        f = lambda v: (v * v + c) % n  # noqa: E731
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = f(y)
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = f(y)
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = f(ys)
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
    raise ArithmeticError(f"rho failed on {n}")


def _split(n: int, out: dict[int, int]) -> None:
    if n == 1:
        return
    if is_prime(n):
        out[n] = out.get(n, 0) + 1
        return
    d = _pollard_brent(n)
    _split(d, out)
    _split(n // d, out)


@lru_cache(maxsize=1 << 14)
def factorize(n: int) -> Factorization:
    """Factor ``n >= 1``.

    Trial division by a mod-30 wheel handles every cofactor up to 2**32
    exactly; larger cofactors that survive division up to 2**16 are split
    with Brent's rho.
    """
    n = int(n)
    if n < 1:
        raise ValueError(f"cannot factorize {n}")
    found: dict[int, int] = {}
    m = n
    for p in (2, 3, 5):
        while m % p == 0:
            found[p] = found.get(p, 0) + 1
            m //= p
    d, i = 7, 0
    while d * d <= m and d <= _TRIAL_LIMIT:
        while m % d == 0:
            found[d] = found.get(d, 0) + 1
            m //= d
        d += _WHEEL_STEPS[i]
        i = (i + 1) & 7
    if m > 1:
        if d * d > m:
            found[m] = found.get(m, 0) + 1
        else:
            _split(m, found)
    return Factorization(n, tuple(sorted(found.items())))


def _as_factorization(m) -> Factorization:
    return m if isinstance(m, Factorization) else factorize(m)


def euler_phi(n) -> int:
    f = _as_factorization(n)
    phi = 1
    for p, e in f:
        phi *= (p - 1) * p ** (e - 1)
    return phi


def carmichael_lambda(n) -> int:
    """Exponent of the unit group mod ``n``: the lcm of the prime-power exponents."""
    f = _as_factorization(n)
    parts = []
    for p, e in f:
        if p == 2:
            parts.append(1 << max(e - 2, 0) if e != 2 else 2)
        else:
            parts.append((p - 1) * p ** (e - 1))
    return lcm(*parts)


def mod_pow(base: int, exp: int, m: int) -> int:
    """``base**exp mod m`` in ``[0, m)``; negative bases are normalized first."""
    if m < 1:
        raise ValueError(f"modulus must be positive, got {m}")
    if exp < 0:
        raise ValueError("negative exponent")
    return pow(base % m, exp, m)


def lcm(*values: int) -> int:
    return reduce(lambda a, b: a * b // math.gcd(a, b), values, 1)


def integer_root(n: int, k: int) -> int:
    """Floor of the real ``k``-th root of ``n >= 0``."""
    if n < 0:
        raise ValueError("integer_root of negative number")
    return int(gmpy2.iroot(n, k)[0])


def exact_root(n: int, k: int) -> Optional[int]:
    """Integer ``v`` with ``v**k == n``, or None. Odd ``k`` admits negative ``n``."""
    if n < 0:
        if k % 2 == 0:
            return None
        v = exact_root(-n, k)
        return None if v is None else -v
    v, exact = gmpy2.iroot(n, k)
    return int(v) if exact else None


@dataclass(frozen=True)
class CongruenceSystem:
    """Congruences ``x = a_i (mod n_i)`` with residues stored in ``[0, n_i)``."""

    congruences: tuple[tuple[int, int], ...]

    def __init__(self, congruences: Iterable[Sequence[int]]):
        norm = []
        for a, n in congruences:
            if n < 1:
                raise ValueError(f"modulus must be >= 1, got {n}")
            norm.append((a % n, n))
        object.__setattr__(self, "congruences", tuple(norm))

    def __iter__(self):
        return iter(self.congruences)

    @property
    def moduli(self) -> tuple[int, ...]:
        return tuple(n for _, n in self.congruences)

    def satisfied_by(self, x: int) -> bool:
        return all(x % n == a for a, n in self.congruences)


def _system(system) -> CongruenceSystem:
    return system if isinstance(system, CongruenceSystem) else CongruenceSystem(system)


def crt_coprime(system) -> tuple[int, int]:
    """Solve a system with pairwise coprime moduli; returns ``(x, prod n_i)``."""
    system = _system(system)
    mods = system.moduli
    for i in range(len(mods)):
        for j in range(i + 1, len(mods)):
            if math.gcd(mods[i], mods[j]) != 1:
                raise ValueError(
                    f"moduli {mods[i]} and {mods[j]} are not coprime; use crt_general"
                )
    total = math.prod(mods)
    x = 0
    for a, n in system:
        rest = total // n
        x += a * rest * pow(rest, -1, n) if n > 1 else 0
    return x % total, total


def crt_general(system) -> Optional[tuple[int, int]]:
    """Solve a system with arbitrary moduli.

    A solution exists iff ``a_i = a_j (mod gcd(n_i, n_j))`` for all pairs; it
    is then unique modulo ``lcm(n_i)``. Returns None when incompatible.
    """
    x, m = 0, 1
    for a, n in _system(system):
        g = math.gcd(m, n)
        if (a - x) % g:
            return None
        # x + m*t = a (mod n)  =>  t = (a - x)/g * inv(m/g) (mod n/g)
        step = n // g
        t = (a - x) // g * pow(m // g, -1, step) % step if step > 1 else 0
        x += m * t
        m = m * step
        x %= m
    return x, m


def primitive_root(p: int) -> int:
    """Smallest generator of the units mod the prime ``p``; 1 for ``p = 2``."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p == 2:
        return 1
    cofactors = [(p - 1) // q for q in factorize(p - 1).primes]
    for g in range(2, p):
        if all(pow(g, c, p) != 1 for c in cofactors):
            return g
    raise AssertionError("unreachable: every prime has a primitive root")


def primes_up_to(limit: int) -> list[int]:
    if limit < 2:
        return []
    sieve = _SIEVE if limit <= _SIEVE_LIMIT else _small_sieve(limit)
    return [i for i in range(2, limit + 1) if sieve[i]]


def first_primes(count: int) -> list[int]:
    if count <= 0:
        return []
    # p_n < n (ln n + ln ln n) for n >= 6
    n = max(count, 6)
    limit = int(n * (math.log(n) + math.log(math.log(n)))) + 1
    return primes_up_to(limit)[:count]


def units(m: int) -> list[int]:
    """Residues in ``[1, m)`` coprime to ``m`` (``[0]`` is never included)."""
    return [a for a in range(1, m) if math.gcd(a, m) == 1] if m > 1 else []
