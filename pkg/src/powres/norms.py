"""Multiplication matrices and norm forms over ``R[x]/(q(x))`` for monic ``q``.

Polynomials are coefficient tuples, least degree first. A modulus of degree
``n`` has ``n + 1`` coefficients with a trailing 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Optional, Sequence

Matrix = tuple[tuple[int, ...], ...]


def binomial_modulus(n: int, r: int) -> tuple[int, ...]:
    """Coefficients of ``x**n - r``."""
    if n < 1:
        raise ValueError(f"degree must be >= 1, got {n}")
    return (-r,) + (0,) * (n - 1) + (1,)


def _check_monic(q: Sequence[int]) -> tuple[int, ...]:
    q = tuple(int(c) for c in q)
    if len(q) < 2:
        raise ValueError("modulus must have degree >= 1")
    if q[-1] != 1:
        raise ValueError(f"modulus {q} is not monic")
    return q


def _reduce(coeffs: list[int], q: tuple[int, ...]) -> list[int]:
    """Remainder of ``coeffs`` on division by the monic ``q``."""
    n = len(q) - 1
    coeffs = list(coeffs)
    for k in range(len(coeffs) - 1, n - 1, -1):
        c = coeffs[k]
        if c:
            shift = k - n
            for i in range(n + 1):
                coeffs[shift + i] -= c * q[i]
    coeffs = coeffs[:n]
    return coeffs + [0] * (n - len(coeffs))


@dataclass(frozen=True)
class PolyMod:
    """An element ``sum(c_i u**i)`` of ``Z[x]/(modulus)`` with ``u = x mod modulus``."""

    modulus: tuple[int, ...]
    coeffs: tuple[int, ...]

    def __post_init__(self):
        q = _check_monic(self.modulus)
        object.__setattr__(self, "modulus", q)
        if len(self.coeffs) != len(q) - 1:
            raise ValueError(f"need {len(q) - 1} coefficients, got {len(self.coeffs)}")
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))

    @classmethod
    def binomial(cls, coeffs: Sequence[int], r: int) -> "PolyMod":
        return cls(binomial_modulus(len(coeffs), r), tuple(coeffs))

    @property
    def degree(self) -> int:
        return len(self.modulus) - 1

    def __mul__(self, other: "PolyMod") -> "PolyMod":
        return poly_mul_mod(self, other)


def poly_mul_mod(a: PolyMod, b: PolyMod) -> PolyMod:
    if a.modulus != b.modulus:
        raise ValueError("modulus mismatch")
    prod = [0] * (len(a.coeffs) + len(b.coeffs) - 1)
    for i, x in enumerate(a.coeffs):
        if x:
            for j, y in enumerate(b.coeffs):
                prod[i + j] += x * y
    return PolyMod(a.modulus, tuple(_reduce(prod, a.modulus)))


@dataclass(frozen=True)
class NormMatrix:
    """Matrix of ``w -> z*w`` on the basis ``1, u, ..., u**(n-1)``.

    Column ``j`` holds the coefficients of ``z * u**j``. ``r`` is set when the
    modulus is ``x**n - r``.
    """

    modulus: tuple[int, ...]
    rows: Matrix
    r: Optional[int] = None

    @property
    def n(self) -> int:
        return len(self.rows)

    def det(self) -> int:
        return bareiss_det(self.rows)

    def first_column(self) -> tuple[int, ...]:
        return tuple(row[0] for row in self.rows)

    def __matmul__(self, other: "NormMatrix") -> "NormMatrix":
        return NormMatrix(self.modulus, mat_mul(self.rows, other.rows), self.r)

    def is_structured(self) -> bool:
        """True when this matrix equals the multiplication matrix of its first column."""
        return build_matrix_general(self.first_column(), self.modulus).rows == self.rows


def build_matrix_general(xbar: Sequence[int], q: Sequence[int]) -> NormMatrix:
    q = _check_monic(q)
    n = len(q) - 1
    if len(xbar) != n:
        raise ValueError(f"need {n} coefficients, got {len(xbar)}")
    col = [int(x) for x in xbar]
    cols = [col]
    for _ in range(n - 1):
        top = col[-1]
        col = [0] + col[:-1]
        if top:
            col = [c - top * q[i] for i, c in enumerate(col)]
        cols.append(col)
    rows = tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))
    r = -q[0] if all(c == 0 for c in q[1:-1]) else None
    return NormMatrix(q, rows, r)


def build_matrix(xbar: Sequence[int], r: int) -> NormMatrix:
    """The ``r``-weighted circulant: entry ``(i, j)`` is ``x[i-j]``, times ``r`` above the diagonal."""
    n = len(xbar)
    if n == 0:
        raise ValueError("empty coefficient vector")
    x = [int(v) for v in xbar]
    rows = tuple(
        tuple(x[i - j] if i >= j else r * x[n + i - j] for j in range(n)) for i in range(n)
    )
    return NormMatrix(binomial_modulus(n, r), rows, r)


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    cols = list(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in cols) for row in a)


def bareiss_det(rows: Sequence[Sequence[int]]) -> int:
    """Exact determinant by fraction-free elimination."""
    a = [list(row) for row in rows]
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // prev
        prev = pivot
    return sign * a[-1][-1]


def leibniz_det(rows: Sequence[Sequence[int]]) -> int:
    """Determinant as a signed sum over permutations; cross-check for small ``n``."""
    n = len(rows)
    total = 0
    for perm in permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = -1 if inversions % 2 else 1
        for i, j in enumerate(perm):
            term *= rows[i][j]
            if not term:
                break
        total += term
    return total


def det_norm(xbar: Sequence[int], r: int) -> int:
    return build_matrix(xbar, r).det()


def det_norm_general(xbar: Sequence[int], q: Sequence[int]) -> int:
    return build_matrix_general(xbar, q).det()


def det_mod_p(rows: Sequence[Sequence[int]], p: int) -> int:
    """Determinant over ``F_p`` by Gaussian elimination with row pivoting."""
    a = [[v % p for v in row] for row in rows]
    n = len(a)
    det = 1
    for k in range(n):
        pivot_row = next((i for i in range(k, n) if a[i][k]), None)
        if pivot_row is None:
            # no pivot in this column: the columns are dependent
            return 0
        if pivot_row != k:
            a[k], a[pivot_row] = a[pivot_row], a[k]
            det = -det
        pivot = a[k][k]
        det = det * pivot % p
        inv = pow(pivot, -1, p)
        for i in range(k + 1, n):
            f = a[i][k] * inv % p
            if f:
                a[i] = [(x - f * y) % p for x, y in zip(a[i], a[k])]
    return det % p


def det_norm_mod_p(xbar: Sequence[int], r: int, p: int) -> int:
    return det_mod_p(build_matrix(xbar, r).rows, p)


def cofactor_matrix(rows: Sequence[Sequence[int]]) -> Matrix:
    n = len(rows)
    if n == 1:
        return ((1,),)
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            minor = [r[:j] + r[j + 1 :] for k, r in enumerate(rows) if k != i]
            row.append((-1) ** (i + j) * bareiss_det(minor))
        out.append(tuple(row))
    return tuple(out)


def adjugate(m: NormMatrix) -> NormMatrix:
    """Transpose of the cofactor matrix; ``M @ adj(M) = det(M) * I``."""
    cof = cofactor_matrix(m.rows)
    return NormMatrix(m.modulus, tuple(zip(*cof)), m.r)


def identity(n: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
