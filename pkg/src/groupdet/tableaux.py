"""Partitions, standard Young tableaux and the irreducible characters they encode.

The eigenvalues of an irreducible representation of ``S_n`` at an element of
cycle type ``mu`` (order ``m``) are ``omega**e`` for the cyclic exponents
``e = sum of b_mu(k) over the descents k of T`` (mod ``m``), one per standard
tableau ``T``.  From these we get ``det(I - q phi(t_k))`` and the
representation determinant of the major-index element.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial, lcm
from typing import Sequence

from .errors import NonIntegerResult, ShapeMismatch
from .formulas import one_minus
from .poly import CycloElement, MultiPoly, exact_div

Partition = tuple


def as_partition(parts: Sequence[int]) -> Partition:
    parts = tuple(int(p) for p in parts)
    if not parts or any(p <= 0 for p in parts) or any(a < b for a, b in zip(parts, parts[1:])):
        raise ValueError(f"{list(parts)} is not a partition")
    return parts


def partitions(n: int, largest: int | None = None) -> list[Partition]:
    """Partitions of ``n`` in reverse lexicographic order: ``[3], [2,1], [1,1,1]``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if largest is None:
        largest = n
    if n == 0:
        return [()]
    out = []
    for first in range(min(n, largest), 0, -1):
        out.extend((first,) + rest for rest in partitions(n - first, first))
    return out


@dataclass(frozen=True)
class StandardTableau:
    rows: tuple[tuple[int, ...], ...]

    @property
    def shape(self) -> Partition:
        return tuple(len(r) for r in self.rows)

    @property
    def size(self) -> int:
        return sum(len(r) for r in self.rows)

    def row_of(self, k: int) -> int:
        for i, r in enumerate(self.rows):
            if k in r:
                return i
        raise KeyError(k)

    def is_standard(self) -> bool:
        entries = sorted(x for r in self.rows for x in r)
        if entries != list(range(1, self.size + 1)):
            return False
        rows_ok = all(a < b for r in self.rows for a, b in zip(r, r[1:]))
        cols_ok = all(
            upper[j] < lower[j] for upper, lower in zip(self.rows, self.rows[1:]) for j in range(len(lower))
        )
        return rows_ok and cols_ok

    def __str__(self):
        return "/".join(" ".join(map(str, r)) for r in self.rows)


def syt(shape: Sequence[int]) -> list[StandardTableau]:
    """All standard tableaux of the given shape, filling 1, 2, ... row by row choice."""
    shape = as_partition(shape)
    n = sum(shape)
    out: list[StandardTableau] = []
    rows: list[list[int]] = [[] for _ in shape]

    def place(k: int):
        if k > n:
            out.append(StandardTableau(tuple(tuple(r) for r in rows)))
            return
        for i, target in enumerate(shape):
            if len(rows[i]) < target and (i == 0 or len(rows[i - 1]) > len(rows[i])):
                rows[i].append(k)
                place(k + 1)
                rows[i].pop()

    place(1)
    return out


def num_syt(shape: Sequence[int]) -> int:
    return len(syt(shape))


def hook_length_dim(shape: Sequence[int]) -> int:
    """``n! / prod(hooks)``."""
    shape = as_partition(shape)
    conj = [sum(1 for p in shape if p > j) for j in range(shape[0])]
    hooks = 1
    for i, p in enumerate(shape):
        for j in range(p):
            hooks *= (p - j - 1) + (conj[j] - i - 1) + 1
    return factorial(sum(shape)) // hooks


def tableau_descents(T: StandardTableau) -> set[int]:
    """``k`` such that ``k + 1`` sits in a lower row than ``k``."""
    row = {x: i for i, r in enumerate(T.rows) for x in r}
    return {k for k in range(1, T.size) if row[k + 1] > row[k]}


def cycle_order(mu: Sequence[int]) -> int:
    return lcm(*mu)


def b_vector(mu: Sequence[int]) -> tuple[int, ...]:
    """``(m/mu_1, 2m/mu_1, ..., m, m/mu_2, ..., m, ...)`` with ``m = lcm(mu)``."""
    if not mu:
        raise ValueError("cycle type must be nonempty")
    m = cycle_order(mu)
    return tuple(j * (m // part) for part in mu for j in range(1, part + 1))


def ind_mu(T: StandardTableau, mu: Sequence[int]) -> int:
    if T.size != sum(mu):
        raise ShapeMismatch(f"tableau of size {T.size} against cycle type of size {sum(mu)}")
    b = b_vector(mu)
    return sum(b[k - 1] for k in tableau_descents(T)) % cycle_order(mu)


def cyclic_exponents(shape: Sequence[int], mu: Sequence[int]) -> list[int]:
    """Sorted multiset of residues, one per standard tableau of ``shape``."""
    shape = as_partition(shape)
    if sum(shape) != sum(mu):
        raise ShapeMismatch(f"shape {list(shape)} and cycle type {list(mu)} have different sizes")
    return sorted(ind_mu(T, mu) for T in syt(shape))


def theta_irrep_cycle(shape: Sequence[int], var: str = "q") -> MultiPoly:
    """``det(I - q phi(t_n))`` as ``prod_j (1 - q omega**e_j)``, computed in ``Z[x]/Phi_n``."""
    shape = as_partition(shape)
    n = sum(shape)
    coeffs = [CycloElement.from_int(n, 1)]
    for e in cyclic_exponents(shape, (n,)):
        root = CycloElement.x_power(n, e)
        nxt = coeffs + [CycloElement.from_int(n, 0)]
        for d, c in enumerate(coeffs):
            nxt[d + 1] = nxt[d + 1] - c * root
        coeffs = nxt
    if not all(c.is_integer() for c in coeffs):
        raise NonIntegerResult(f"theta for {list(shape)} has non-rational coefficients")
    return MultiPoly.univariate([c.to_int() for c in coeffs], var)


def corners_removed(shape: Sequence[int]) -> list[Partition]:
    """Partitions obtained by deleting one corner cell."""
    shape = as_partition(shape)
    out = []
    for i, p in enumerate(shape):
        if i + 1 == len(shape) or shape[i + 1] < p:
            smaller = shape[:i] + (p - 1,) + shape[i + 1:]
            out.append(tuple(x for x in smaller if x))
    return out


def theta_irrep_branch(shape: Sequence[int], i: int, var: str = "q") -> MultiPoly:
    """``det(I - q phi(t_i))`` by restricting along the branching rule down to ``S_i``."""
    shape = as_partition(shape)
    n = sum(shape)
    if not 2 <= i <= n:
        raise ValueError(f"need 2 <= i <= n, got i={i}, n={n}")
    return _branch(shape, i, var)


@lru_cache(maxsize=None)
def _branch(shape: Partition, i: int, var: str) -> MultiPoly:
    if sum(shape) == i:
        return theta_irrep_cycle(shape, var)
    result = MultiPoly(1)
    for smaller in corners_removed(shape):
        result = result * _branch(smaller, i, var)
    return result


def delta_irrep(shape: Sequence[int], var: str = "q") -> MultiPoly:
    """``prod_{k=2}^n (1 - q**k)**dim / theta(t_k)``, each quotient exact."""
    shape = as_partition(shape)
    n = sum(shape)
    dim = num_syt(shape)
    result = MultiPoly(1)
    for k in range(2, n + 1):
        result = result * exact_div(one_minus(var, k) ** dim, theta_irrep_branch(shape, k, var))
    return result
