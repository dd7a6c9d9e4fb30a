"""Legendre symbols and the index-2 subgroups that classify quadratic residues.

Residues are always stored in ``[0, m)``; ``-1`` appears as ``m - 1``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .arith import (
    Factorization,
    crt_coprime,
    euler_phi,
    factorize,
    is_prime,
    units,
)

# Guard for subgroup enumeration.
MAX_ENUM_ORDER = 1 << 16


@dataclass(frozen=True)
class ResidueClassGroup:
    """The unit group of ``Z/mZ`` as an explicit sorted list."""

    modulus: int
    elements: tuple[int, ...]

    @classmethod
    @lru_cache(maxsize=256)
    def of(cls, m: int) -> "ResidueClassGroup":
        if m < 2:
            raise ValueError(f"modulus must be >= 2, got {m}")
        return cls(m, tuple(units(m)) if m > 2 else (1,))

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, a: int) -> bool:
        return math.gcd(a % self.modulus, self.modulus) == 1

    def mul(self, a: int, b: int) -> int:
        return a * b % self.modulus

    def inv(self, a: int) -> int:
        return pow(a, -1, self.modulus)


@dataclass(frozen=True)
class Subgroup:
    parent: ResidueClassGroup
    elements: tuple[int, ...]

    def __init__(self, parent: ResidueClassGroup, elements: Iterable[int]):
        m = parent.modulus
        object.__setattr__(self, "parent", parent)
        object.__setattr__(self, "elements", tuple(sorted({a % m for a in elements})))

    @property
    def modulus(self) -> int:
        return self.parent.modulus

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, a: int) -> bool:
        return a % self.modulus in self._members

    def __iter__(self):
        return iter(self.elements)

    @property
    def _members(self) -> frozenset:
        # frozen dataclass: cache by hand
        try:
            return self.__dict__["_set"]
        except KeyError:
            s = frozenset(self.elements)
            object.__setattr__(self, "_set", s)
            return s

    def is_subgroup(self) -> bool:
        """Contains 1, closed under products and inverses, order divides the parent's."""
        m = self.modulus
        members = self._members
        if 1 % m not in members or len(self.parent) % len(self) != 0:
            return False
        if any(a not in self.parent for a in members):
            return False
        return all(a * b % m in members for a in members for b in members) and all(
            pow(a, -1, m) in members for a in members
        )

    def signed(self) -> list[int]:
        """Elements in symmetric form ``(-m/2, m/2]``."""
        m = self.modulus
        return sorted((a if 2 * a <= m else a - m) for a in self.elements)


def _check_odd_prime(p: int) -> None:
    if p == 2 or not is_prime(p):
        raise ValueError(f"{p} is not an odd prime")


def legendre(r: int, p: int) -> int:
    """Legendre symbol by Euler's criterion: ``r**((p-1)/2) mod p``."""
    _check_odd_prime(p)
    if r % p == 0:
        raise ValueError(f"{p} divides {r}; symbol undefined here")
    return 1 if pow(r, (p - 1) // 2, p) == 1 else -1


def legendre_bruteforce(r: int, p: int) -> int:
    """Legendre symbol by searching for a square root."""
    _check_odd_prime(p)
    r %= p
    if r == 0:
        raise ValueError(f"{p} divides r")
    return 1 if any(x * x % p == r for x in range(1, p)) else -1


def legendre_reciprocity(r: int, p: int) -> int:
    """Legendre symbol through quadratic reciprocity and the supplementary laws.

    Independent of Euler's criterion; recursion runs on ``p mod q`` for each
    odd prime ``q`` dividing ``r`` to an odd power.
    """
    _check_odd_prime(p)
    if r % p == 0:
        raise ValueError(f"{p} divides {r}")
    r %= p
    sign = 1
    for q, e in factorize(r):
        if e % 2 == 0:
            continue
        if q == 2:
            sign *= 1 if p % 8 in (1, 7) else -1
        else:
            flip = -1 if (q % 4 == 3 and p % 4 == 3) else 1
            sign *= flip * legendre_reciprocity(p % q, q)
    return sign


def build_Lstar(p: int) -> Subgroup:
    """Quadratic residues modulo the odd prime ``p``."""
    _check_odd_prime(p)
    return Subgroup(ResidueClassGroup.of(p), {x * x % p for x in range(1, p)})


@lru_cache(maxsize=512)
def build_L4q(q: int) -> Subgroup:
    """The half-order subgroup of the units mod ``4q`` containing ``-1``.

    For odd ``q`` each member is assembled by CRT from a class mod 4 and a
    class mod ``q``: with ``q = 3 (mod 4)`` the pairs are (1, residue) and
    (-1, non-residue); with ``q = 1 (mod 4)`` any sign pairs with a residue.
    """
    if not is_prime(q):
        raise ValueError(f"{q} is not prime")
    group = ResidueClassGroup.of(4 * q)
    if q == 2:
        return Subgroup(group, (1, 7))
    residues = set(build_Lstar(q).elements)
    nonresidues = set(range(1, q)) - residues
    if q % 4 == 3:
        pairs = [(1, a) for a in residues] + [(3, b) for b in nonresidues]
    else:
        pairs = [(e, a) for e in (1, 3) for a in residues]
    return Subgroup(group, (crt_coprime([(e, 4), (a, q)])[0] for e, a in pairs))


def in_L4q(c: int, q: int) -> bool:
    """Membership of ``c`` in ``build_L4q(q)`` without building the subgroup.

    Uses the same split: the class of ``c`` mod 4 and whether ``c`` is a
    square mod ``q`` (Euler's criterion on the odd part).
    """
    if q == 2:
        return c % 8 in (1, 7)
    if not is_prime(q):
        raise ValueError(f"{q} is not prime")
    a = c % q
    if a == 0 or c % 2 == 0:
        return False
    square = pow(a, (q - 1) // 2, q) == 1
    if q % 4 == 1:
        return square
    return square == (c % 4 == 1)


def classify_prime(q: int, p: int) -> bool:
    """True iff ``p mod 4q`` lies in the classifying subgroup for ``q``."""
    _check_odd_prime(p)
    if p == q:
        raise ValueError("p must differ from q")
    return in_L4q(p % (4 * q), q)


def _square_classes(m: int) -> tuple[int, dict[int, int]]:
    """Coordinates of every unit in ``U_m / U_m^2`` over a greedy basis.

    Returns ``(k, coords)`` where ``coords[a]`` is a ``k``-bit mask; ``a``
    and ``b`` share a square class iff their masks agree.
    """
    elems = ResidueClassGroup.of(m).elements
    coords = {x * x % m: 0 for x in elems}
    k = 0
    for g in elems:
        if g in coords:
            continue
        bit = 1 << k
        coords.update({y * g % m: v | bit for y, v in list(coords.items())})
        k += 1
    return k, coords


def half_order_subgroups_containing_minus1(m: int) -> list[Subgroup]:
    """All index-2 subgroups of the units mod ``m`` that contain ``m - 1``.

    Index-2 subgroups are kernels of nontrivial characters into ``{+1, -1}``;
    these factor through the square classes, so each nonzero mask over the
    class basis gives one subgroup.
    """
    if m < 3:
        raise ValueError(f"phi({m}) is odd")
    phi = euler_phi(m)
    if phi % 2:
        raise ValueError(f"phi({m}) is odd")
    if phi > MAX_ENUM_ORDER:
        raise ValueError(f"phi({m}) = {phi} exceeds enumeration guard {MAX_ENUM_ORDER}")
    group = ResidueClassGroup.of(m)
    k, coords = _square_classes(m)
    minus_one = coords[m - 1]
    found = []
    for chi in range(1, 1 << k):
        if bin(chi & minus_one).count("1") % 2:
            continue
        kernel = [a for a, v in coords.items() if bin(chi & v).count("1") % 2 == 0]
        found.append(Subgroup(group, kernel))
    return sorted(found, key=lambda h: h.elements)


def _squarefree_factorization(r) -> Factorization:
    f = r if isinstance(r, Factorization) else factorize(r)
    if f.value < 2:
        raise ValueError(f"r must be >= 2, got {f.value}")
    if not f.is_squarefree():
        raise ValueError(f"{f.value} is not square-free")
    return f


@lru_cache(maxsize=256)
def _build_L4r(r: int) -> Subgroup:
    f = _squarefree_factorization(r)
    if len(f) == 1:
        return build_L4q(r)
    m = 4 * r
    components = [(4 * q, build_L4q(q)) for q in f.primes]
    members = []
    for c in ResidueClassGroup.of(m).elements:
        outside = sum(1 for mod, sub in components if c % mod not in sub)
        if outside % 2 == 0:
            members.append(c)
    return Subgroup(ResidueClassGroup.of(m), members)


def build_L4r_squarefree(r_fact) -> Subgroup:
    """Half-order subgroup of the units mod ``4r`` classifying ``(r/p)``, ``r`` square-free.

    ``c`` is a member iff an even number of the prime factors ``q`` of ``r``
    see ``c mod 4q`` outside their own classifying subgroup.
    """
    f = _squarefree_factorization(r_fact)
    return _build_L4r(f.value)


def legendre_general(r: int, p: int) -> int:
    """Legendre symbol via square-part stripping and the parity rule.

    Negative ``r`` picks up ``(-1/p) = (-1)**((p-1)/2)``.
    """
    if r == 0:
        raise ValueError("r must be nonzero")
    _check_odd_prime(p)
    if r % p == 0:
        raise ValueError(f"{p} divides {r}")
    sign = 1
    if r < 0:
        sign = 1 if p % 4 == 1 else -1
        r = -r
    odd = [q for q, e in factorize(r) if e % 2]
    misses = sum(1 for q in odd if not classify_prime(q, p))
    return sign * (-1 if misses % 2 else 1)
