"""Bases of finite groups and the constructive factorizations for each family.

A basis ``(g_1, ..., g_k)`` with bounds ``(m_1, ..., m_k)`` writes every group
element uniquely as ``g_1**c_1 * ... * g_k**c_k`` with ``0 <= c_i < m_i``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import prod
from typing import Sequence

from .colored import ColoredPermutation, color_unit, tilde_t, uncolored
from .errors import CardinalityMismatch
from .groups import DihedralElement, FiniteGroup, Permutation, compose, cycle, dihedral_stats, order
from .signed import SignedPermutation, s_gen, sorted_representative, u_gen


@dataclass(frozen=True)
class BasisSpec:
    elements: tuple
    bounds: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(self.elements))
        object.__setattr__(self, "bounds", tuple(self.bounds))
        if len(self.elements) != len(self.bounds):
            raise ValueError("one bound per basis element")

    @property
    def size(self) -> int:
        return prod(self.bounds)

    def is_perfect(self) -> bool:
        return all(order(g) == m for g, m in zip(self.elements, self.bounds))

    def exponent_vectors(self):
        return itertools.product(*(range(m) for m in self.bounds))

    def compose(self, exponents: Sequence[int]):
        """``g_1**c_1 * ... * g_k**c_k``."""
        if len(exponents) != len(self.elements):
            raise ValueError("exponent vector has the wrong length")
        result = self.elements[0].one()
        for g, c in zip(self.elements, exponents):
            result = result * g**c
        return result


def basis_table(spec: BasisSpec) -> dict:
    """Exhaustive map ``element -> exponent vector``; collisions keep the first."""
    table: dict = {}
    powers = [[g**c for c in range(m)] for g, m in zip(spec.elements, spec.bounds)]
    one = spec.elements[0].one()
    for cs in spec.exponent_vectors():
        h = one
        for pw, c in zip(powers, cs):
            if c:
                h = h * pw[c]
        table.setdefault(h, cs)
    return table


def verify_basis(G: FiniteGroup, spec: BasisSpec) -> bool:
    """True iff the exponent map onto ``G`` is injective (hence bijective)."""
    if spec.size != len(G):
        raise CardinalityMismatch(f"bounds multiply to {spec.size}, group has {len(G)} elements")
    table = basis_table(spec)
    return len(table) == spec.size and set(table) == set(G.elements())


def search_factorization(spec: BasisSpec, g) -> tuple[int, ...]:
    """Brute-force exponent search; the oracle for the constructive factorizers."""
    for cs in spec.exponent_vectors():
        if spec.compose(cs) == g:
            return cs
    raise ValueError(f"{g!r} is not reachable from the basis")


# -- symmetric group: (t_n, ..., t_2) ---------------------------------------


def sym_basis(n: int) -> BasisSpec:
    return BasisSpec(tuple(cycle(k, n) for k in range(n, 1, -1)), tuple(range(n, 1, -1)))


def factor_sym(w: Permutation) -> tuple[int, ...]:
    """``(c_n, ..., c_2)`` with ``w = t_n**c_n * ... * t_2**c_2``; their sum is ``maj(w)``."""
    n = w.n
    out = []
    rest = w
    for k in range(n, 1, -1):
        # t_k**c sends k to k - c, and the remaining factors fix k
        c = k - rest(k)
        out.append(c)
        if c:
            rest = compose(cycle(k, n) ** (-c), rest)
    assert rest == w.one(), "peeling left a nontrivial remainder"
    return tuple(out)


def recompose_sym(exponents: Sequence[int], n: int) -> Permutation:
    if n == 1:
        # the basis of S_1 is empty
        return Permutation.identity(1)
    return sym_basis(n).compose(exponents)


# -- colored permutations: (t~_n, ..., t~_1) ----------------------------------


def colored_basis(n: int, m: int) -> BasisSpec:
    return BasisSpec(tuple(tilde_t(k, n, m) for k in range(n, 0, -1)), tuple(m * k for k in range(n, 0, -1)))


def factor_colored(g: ColoredPermutation) -> tuple[int, ...]:
    """``(c_n, ..., c_1)`` with ``g = t~_n**c_n * ... * t~_1**c_1``; sum is ``fmaj(g)``."""
    n, m = g.n, g.m
    out = []
    rest = g
    for k in range(n, 0, -1):
        # the later factors fix position k and leave its color alone, so the
        # power of t~_k must already show g's letter at position k
        target = (rest.w(k), rest.x[k - 1])
        t = tilde_t(k, n, m)
        power = g.one()
        for c in range(m * k):
            if (power.w(k), power.x[k - 1]) == target:
                break
            power = power * t
        else:
            raise AssertionError(f"no power of t~_{k} matches position {k}")
        out.append(c)
        rest = power.inverse() * rest
    assert rest == g.one(), "peeling left a nontrivial remainder"
    return tuple(out)


def recompose_colored(exponents: Sequence[int], n: int, m: int) -> ColoredPermutation:
    return colored_basis(n, m).compose(exponents)


# -- colored permutations: (t_n, ..., t_2, y^(1), ..., y^(n)) ----------------


def amaj_basis(n: int, m: int) -> BasisSpec:
    ts = tuple(uncolored(cycle(k, n), m) for k in range(n, 1, -1))
    ys = tuple(color_unit(i, n, m) for i in range(1, n + 1))
    return BasisSpec(ts + ys, tuple(range(n, 1, -1)) + (m,) * n)


def factor_amaj(g: ColoredPermutation) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """``((c_n..c_2), (d_1..d_n))``: ``(w, 0)(1, x) = (w, x)`` splits the two parts."""
    return factor_sym(g.w), tuple(g.x)


def recompose_amaj(c: Sequence[int], d: Sequence[int], n: int, m: int) -> ColoredPermutation:
    return amaj_basis(n, m).compose(tuple(c) + tuple(d))


# -- signed permutations: (s_1, ..., s_n, u_n, ..., u_2) ----------------------


def signed_basis(n: int) -> BasisSpec:
    ss = tuple(s_gen(k, n) for k in range(1, n + 1))
    us = tuple(u_gen(k, n) for k in range(n, 1, -1))
    return BasisSpec(ss + us, (2,) * n + tuple(range(n, 1, -1)))


def factor_signed(g: SignedPermutation) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """``((d_1..d_n), (c_n..c_2))`` with ``g = s_1**d_1...s_n**d_n u_n**c_n...u_2**c_2``."""
    h = sorted_representative(g)
    d = tuple(1 if e < 0 else 0 for e in g.eps)
    c = factor_sym(h.w.inverse() * g.w)
    return d, c


def recompose_signed(d: Sequence[int], c: Sequence[int], n: int) -> SignedPermutation:
    return signed_basis(n).compose(tuple(d) + tuple(c))


# -- dihedral: (g1, g2) -------------------------------------------------------


def dihedral_basis(n: int) -> BasisSpec:
    return BasisSpec((DihedralElement(n, 1, 0), DihedralElement(n, 0, 1)), (n, 2))


def factor_dihedral(h: DihedralElement) -> tuple[int, int]:
    """``(c_1, c_2)`` with ``h = g1**c_1 * g2**c_2``, read from the permutation action."""
    rot, refl = dihedral_stats(h)
    return rot, refl
