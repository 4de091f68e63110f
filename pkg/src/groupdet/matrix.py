"""Dense matrices over commutative rings and exact determinants.

Three determinant routes are kept deliberately independent:

* :func:`det_bareiss` -- fraction-free elimination over ``Z`` or ``Z[vars]``;
* :func:`det_cofactor` -- Laplace expansion (small sizes only), the oracle;
* :func:`det_modular` -- Gaussian elimination over ``Z/p`` at a numeric point.
"""

from __future__ import annotations

import math
import random
from functools import lru_cache
from typing import Callable, Iterable, Mapping, Sequence

import numpy as np

from .errors import SizeMismatch, SizeTooLarge
from .poly import DEFAULT_PRIME, MultiPoly, evaluate, exact_div

COFACTOR_LIMIT = 8


class RingMatrix:
    """Row-major matrix of ints or :class:`MultiPoly` entries."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Iterable):
        entries = tuple(entries)
        if len(entries) != rows * cols:
            raise SizeMismatch(f"{len(entries)} entries for a {rows}x{cols} matrix")
        self.rows, self.cols, self.entries = rows, cols, entries

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "RingMatrix":
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise SizeMismatch("ragged rows")
        return cls(len(rows), ncols, [x for r in rows for x in r])

    @classmethod
    def identity(cls, n: int) -> "RingMatrix":
        return cls(n, n, [int(i == j) for i in range(n) for j in range(n)])

    def __getitem__(self, ij: tuple[int, int]):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> list:
        return list(self.entries[i * self.cols:(i + 1) * self.cols])

    def to_rows(self) -> list[list]:
        return [self.row(i) for i in range(self.rows)]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __eq__(self, other):
        if not isinstance(other, RingMatrix):
            return NotImplemented
        return (self.rows, self.cols, self.entries) == (other.rows, other.cols, other.entries)

    def __add__(self, other: "RingMatrix") -> "RingMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise SizeMismatch("shape mismatch")
        return RingMatrix(self.rows, self.cols, [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other: "RingMatrix") -> "RingMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise SizeMismatch("shape mismatch")
        return RingMatrix(self.rows, self.cols, [a - b for a, b in zip(self.entries, other.entries)])

    def scale(self, c) -> "RingMatrix":
        return RingMatrix(self.rows, self.cols, [c * a for a in self.entries])

    def __matmul__(self, other: "RingMatrix") -> "RingMatrix":
        if self.cols != other.rows:
            raise SizeMismatch("inner dimensions differ")
        out = []
        for i in range(self.rows):
            r = self.row(i)
            for j in range(other.cols):
                acc = 0
                for k, a in enumerate(r):
                    b = other.entries[k * other.cols + j]
                    if a and b:
                        acc = acc + a * b
                out.append(acc)
        return RingMatrix(self.rows, other.cols, out)

    __mul__ = __matmul__

    def __pow__(self, k: int) -> "RingMatrix":
        result, base = RingMatrix.identity(self.rows), self
        while k:
            if k & 1:
                result = result @ base
            k >>= 1
            if k:
                base = base @ base
        return result

    def map(self, fn: Callable) -> "RingMatrix":
        return RingMatrix(self.rows, self.cols, [fn(a) for a in self.entries])

    def __repr__(self):
        return f"RingMatrix({self.rows}x{self.cols})"

    def __str__(self):
        cells = [[str(x) for x in r] for r in self.to_rows()]
        width = max((len(c) for r in cells for c in r), default=0)
        return "\n".join("  ".join(c.rjust(width) for c in r) for r in cells)


class PermutationMatrix:
    """0/1 matrix with ``images[i]`` the (1-based) column of the 1 in row ``i``."""

    __slots__ = ("images",)

    def __init__(self, images: Sequence[int]):
        images = tuple(images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError("images must be a bijection on 1..n")
        self.images = images

    @property
    def size(self) -> int:
        return len(self.images)

    def to_ring_matrix(self) -> RingMatrix:
        n = len(self.images)
        return RingMatrix(n, n, [int(self.images[i] == j + 1) for i in range(n) for j in range(n)])


def _as_ring_matrix(M) -> RingMatrix:
    if isinstance(M, PermutationMatrix):
        return M.to_ring_matrix()
    if isinstance(M, RingMatrix):
        return M
    return RingMatrix.from_rows(M)


def det_bareiss(M) -> int | MultiPoly:
    """Exact determinant by fraction-free (Bareiss) elimination.

    Pivoting takes the first nonzero entry in the pivot column; a column of
    zeros ends the elimination with determinant 0.
    """
    M = _as_ring_matrix(M)
    if not M.is_square:
        raise SizeMismatch("determinant of a non-square matrix")
    n = M.rows
    if n == 0:
        return 1
    symbolic = any(isinstance(a, MultiPoly) for a in M.entries)
    if symbolic:
        a = [[MultiPoly(x) for x in r] for r in M.to_rows()]
        div = exact_div
    else:
        a = M.to_rows()
        div = _int_exact_div
    sign, prev = 1, 1
    for k in range(n - 1):
        if not a[k][k]:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return MultiPoly() if symbolic else 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        pivot, row_k = a[k][k], a[k]
        for i in range(k + 1, n):
            row_i = a[i]
            lead = row_i[k]
            if lead:
                for j in range(k + 1, n):
                    row_i[j] = div(pivot * row_i[j] - lead * row_k[j], prev)
            elif prev != 1 or pivot != 1:
                for j in range(k + 1, n):
                    if row_i[j]:
                        row_i[j] = div(pivot * row_i[j], prev)
            row_i[k] = 0 * lead
        prev = pivot
    det = a[n - 1][n - 1]
    return -det if sign < 0 else det


def _int_exact_div(a: int, b: int) -> int:
    q, r = divmod(a, b)
    if r:
        raise ArithmeticError(f"{b} does not divide {a}")
    return q


def det_cofactor(M) -> int | MultiPoly:
    """Laplace expansion along successive rows (memoized over column subsets)."""
    M = _as_ring_matrix(M)
    if not M.is_square:
        raise SizeMismatch("determinant of a non-square matrix")
    n = M.rows
    if n > COFACTOR_LIMIT:
        raise SizeTooLarge(f"cofactor expansion is limited to {COFACTOR_LIMIT}x{COFACTOR_LIMIT}")
    if n == 0:
        return 1
    rows = M.to_rows()

    @lru_cache(maxsize=None)
    def minor(row: int, cols: tuple) -> int | MultiPoly:
        if row == n - 1:
            return rows[row][cols[0]]
        total = 0
        for pos, c in enumerate(cols):
            entry = rows[row][c]
            if not entry:
                continue
            sub = minor(row + 1, cols[:pos] + cols[pos + 1:])
            term = entry * sub
            total = total - term if pos % 2 else total + term
        return total

    return minor(0, tuple(range(n)))


def theta(M, var: str = "q") -> MultiPoly:
    """``det(I - var*M)``."""
    M = _as_ring_matrix(M)
    if not M.is_square:
        raise SizeMismatch("theta of a non-square matrix")
    q = MultiPoly.var(var)
    n = M.rows
    entries = [int(i == j) - q * M[i, j] for i in range(n) for j in range(n)]
    return MultiPoly(det_bareiss(RingMatrix(n, n, entries)))


# ---------------------------------------------------------------------------
# modular route


def _values_mod(builder, size: int, assignment: Mapping[str, int], prime: int) -> np.ndarray | list:
    if hasattr(builder, "modular_values"):
        return builder.modular_values(assignment, prime)
    if isinstance(builder, (RingMatrix, PermutationMatrix)):
        M = _as_ring_matrix(builder)
        get = lambda i, j: M[i, j]  # noqa: E731
    else:
        get = builder
    cache: dict = {}
    out = []
    for i in range(size):
        row = []
        for j in range(size):
            x = get(i, j)
            if isinstance(x, MultiPoly):
                v = cache.get(x)
                if v is None:
                    v = cache[x] = evaluate(x, assignment, prime)
            else:
                v = int(x) % prime
            row.append(v)
        out.append(row)
    return out


def det_modular(builder, size: int, assignment: Mapping[str, int], prime: int = DEFAULT_PRIME) -> int:
    """Determinant over ``Z/prime`` of the matrix ``builder`` evaluated at a point.

    ``builder`` is an entry function ``(i, j) -> MultiPoly | int``, a
    :class:`RingMatrix`, or any object with ``modular_values(assignment, prime)``
    returning the evaluated matrix (the lazy regular-representation builder).
    """
    values = _values_mod(builder, size, assignment, prime)
    if prime.bit_length() <= 31:
        return _det_mod_numpy(np.asarray(values, dtype=np.int64).reshape(size, size), prime)
    return _det_mod_python([list(map(int, r)) for r in values], prime)


def _det_mod_numpy(a: np.ndarray, p: int) -> int:
    a = a % p
    n = a.shape[0]
    det = 1
    for k in range(n):
        nz = np.flatnonzero(a[k:, k])
        if nz.size == 0:
            return 0
        piv = k + int(nz[0])
        if piv != k:
            a[[k, piv]] = a[[piv, k]]
            det = -det
        pivot = int(a[k, k])
        det = det * pivot % p
        if k == n - 1:
            break
        inv = pow(pivot, -1, p)
        # entries stay below 2**31, so products fit in int64
        factors = (a[k + 1:, k] * inv) % p
        a[k + 1:, k:] = (a[k + 1:, k:] - np.outer(factors, a[k, k:]) % p) % p
    return det % p


def _det_mod_python(a: list[list[int]], p: int) -> int:
    n = len(a)
    a = [[x % p for x in r] for r in a]
    det = 1
    for k in range(n):
        piv = next((i for i in range(k, n) if a[i][k]), None)
        if piv is None:
            return 0
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            det = -det
        pivot = a[k][k]
        det = det * pivot % p
        inv = pow(pivot, -1, p)
        for i in range(k + 1, n):
            f = a[i][k] * inv % p
            if f:
                ri, rk = a[i], a[k]
                for j in range(k, n):
                    ri[j] = (ri[j] - f * rk[j]) % p
    return det % p


def point_count(degree_bound: int) -> int:
    """Schwartz-Zippel evaluation points for a given total-degree bound."""
    return max(5, math.ceil(degree_bound / 10**6))


def random_points(variables: Sequence[str], count: int, prime: int = DEFAULT_PRIME, seed: int = 0) -> list[dict]:
    """Distinct uniformly random points in ``(Z/prime)^vars`` from a seeded RNG."""
    # a space with fewer than ``count`` points yields all of them
    count = min(count, prime ** len(variables))
    rng = random.Random(seed)
    seen: set = set()
    out = []
    while len(out) < count:
        pt = tuple(rng.randrange(prime) for _ in variables)
        if pt in seen:
            continue
        seen.add(pt)
        out.append(dict(zip(variables, pt)))
    return out
