"""Group-ring elements, weighted regular matrices and representation determinants.

The weighted regular matrix of a statistic has ``(u, v)`` entry
``weight(u * v**-1)`` with rows and columns in the group's enumeration order.
Small groups are materialized over ``Z[vars]``; larger ones stay lazy and are
evaluated point by point for the modular determinant.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Callable, Mapping, Sequence

import numpy as np

from .bases import BasisSpec
from .colored import amaj, cmaj, col, fmaj
from .errors import InvalidDivisor, NotDivisible, TooLargeForSymbolic
from .formulas import FactoredProduct, integer_exponent, one_minus
from .groups import (
    DihedralElement,
    FiniteGroup,
    Permutation,
    SymmetricGroup,
    act_on_points,
    act_on_subsets,
    dihedral_stats,
    inversions,
    maj,
    order,
)
from .matrix import PermutationMatrix, RingMatrix, det_bareiss, det_modular
from .poly import DEFAULT_PRIME, MultiPoly, cyclotomic, evaluate, exact_div
from .signed import maj_A, maj_B, neg_stats

SYMBOLIC_LIMIT = 24

Weight = Callable[[object], MultiPoly]


# ---------------------------------------------------------------------------
# weights


def _monomial_weight(stats: Callable[[object], Mapping[str, int]]) -> Weight:
    cache: dict = {}

    def weight(g) -> MultiPoly:
        exps = tuple(sorted(stats(g).items()))
        w = cache.get(exps)
        if w is None:
            w = cache[exps] = MultiPoly.monomial(dict(exps))
        return w

    return weight


def maj_weight(var: str = "q") -> Weight:
    return _monomial_weight(lambda w: {var: maj(w)})


def inv_weight(var: str = "q") -> Weight:
    return _monomial_weight(lambda w: {var: inversions(w)})


def fmaj_weight(var: str = "q") -> Weight:
    return _monomial_weight(lambda g: {var: fmaj(g)})


def maj_col_weight() -> Weight:
    """``p**maj * q**col`` on colored permutations (maj in the colored order)."""
    return _monomial_weight(lambda g: {"p": cmaj(g), "q": col(g)})


def amaj_col_weight() -> Weight:
    return _monomial_weight(lambda g: {"p": amaj(g), "q": col(g)})


def signed_weight() -> Weight:
    """``p**majA * prod_{i in Neg} q_i``."""

    def stats(g):
        out = {"p": maj_A(g)}
        for i in neg_stats(g)[0]:
            out[f"q_{i}"] = 1
        return out

    return _monomial_weight(stats)


def nneg_weight() -> Weight:
    return _monomial_weight(lambda g: {"p": maj_A(g), "q": neg_stats(g)[1]})


def majB_weight() -> Weight:
    return _monomial_weight(lambda g: {"q": maj_B(g)})


def sneg_weight() -> Weight:
    return _monomial_weight(lambda g: {"p": maj_A(g), "q": neg_stats(g)[2]})


def dihedral_weight() -> Weight:
    """``x1**rot * x2**refl``."""

    def stats(h):
        rot, refl = dihedral_stats(h)
        return {"x1": rot, "x2": refl}

    return _monomial_weight(stats)


def constant_weight() -> Weight:
    one = MultiPoly(1)
    return lambda g: one


# ---------------------------------------------------------------------------
# group ring


class GroupRingElement:
    """Finite formal sum ``sum_g coeff(g) * g`` with polynomial coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping | None = None):
        self.coeffs = {g: MultiPoly(c) for g, c in (coeffs or {}).items() if c}

    @classmethod
    def from_weight(cls, G: FiniteGroup, weight: Weight) -> "GroupRingElement":
        return cls({g: weight(g) for g in G})

    @classmethod
    def basis_element(cls, g) -> "GroupRingElement":
        return cls({g: MultiPoly(1)})

    def coefficient(self, g) -> MultiPoly:
        return self.coeffs.get(g, MultiPoly())

    def __add__(self, other: "GroupRingElement") -> "GroupRingElement":
        out = dict(self.coeffs)
        for g, c in other.coeffs.items():
            out[g] = out.get(g, 0) + c
        return GroupRingElement(out)

    def __mul__(self, other):
        if not isinstance(other, GroupRingElement):
            return GroupRingElement({g: c * other for g, c in self.coeffs.items()})
        out: dict = {}
        for g, a in self.coeffs.items():
            for h, b in other.coeffs.items():
                gh = g * h
                out[gh] = out.get(gh, 0) + a * b
        return GroupRingElement(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __len__(self):
        return len(self.coeffs)

    def image(self, rep: Callable[[object], RingMatrix], dim: int) -> RingMatrix:
        """``sum_g coeff(g) * rep(g)``."""
        total = [MultiPoly() for _ in range(dim * dim)]
        for g, c in self.coeffs.items():
            m = rep(g)
            for k, x in enumerate(m.entries):
                if x:
                    total[k] = total[k] + c * x
        return RingMatrix(dim, dim, total)


def cyclic_sum(g, k: int, var: str) -> GroupRingElement:
    """``1 + x*g + ... + x**(k-1) * g**(k-1)``."""
    x = MultiPoly.var(var)
    out, power = {}, g.one()
    for c in range(k):
        out[power] = out.get(power, 0) + x**c
        power = power * g
    return GroupRingElement(out)


# ---------------------------------------------------------------------------
# regular matrices


class RegularMatrix:
    """Lazy ``(weight(u * v**-1))_{u,v}`` over a finite group.

    Stores the index table of ``u * v**-1`` and one weight per element, so an
    evaluation at a point costs ``|G|`` polynomial evaluations.
    """

    def __init__(self, G: FiniteGroup, weight: Weight):
        self.group = G
        elements = G.elements()
        index = G.index()
        inverses = [index[g.inverse()] for g in elements]
        n = len(elements)
        table = np.empty((n, n), dtype=np.int32)
        for i, u in enumerate(elements):
            table[i] = [index[u * elements[j]] for j in inverses]
        self.table = table
        self.weights = [MultiPoly(weight(g)) for g in elements]

    @property
    def size(self) -> int:
        return len(self.weights)

    @property
    def variables(self) -> tuple:
        names = {v for w in self.weights for v in w.variables}
        return tuple(sorted(names))

    def __call__(self, i: int, j: int) -> MultiPoly:
        return self.weights[self.table[i, j]]

    def materialize(self, limit: int | None = SYMBOLIC_LIMIT) -> RingMatrix:
        if limit is not None and self.size > limit:
            raise TooLargeForSymbolic(
                f"{self.size}x{self.size} exceeds the symbolic limit {limit}; use det_modular"
            )
        w = self.weights
        return RingMatrix(self.size, self.size, [w[k] for k in self.table.ravel()])

    def modular_values(self, assignment: Mapping[str, int], prime: int) -> np.ndarray:
        vals = np.array([evaluate(w, assignment, prime) for w in self.weights], dtype=np.int64)
        return vals[self.table]

    def det(self, limit: int | None = SYMBOLIC_LIMIT) -> MultiPoly:
        return MultiPoly(det_bareiss(self.materialize(limit)))

    def det_at(self, assignment: Mapping[str, int], prime: int = DEFAULT_PRIME) -> int:
        return det_modular(self, self.size, assignment, prime)


def regular_matrix(G: FiniteGroup, weight: Weight, limit: int | None = SYMBOLIC_LIMIT) -> RingMatrix:
    return RegularMatrix(G, weight).materialize(limit)


def regular_det(G: FiniteGroup, weight: Weight, limit: int | None = SYMBOLIC_LIMIT) -> MultiPoly:
    return RegularMatrix(G, weight).det(limit)


# ---------------------------------------------------------------------------
# permutation representations


def action_matrix(g, points: Sequence, action: Callable) -> PermutationMatrix:
    """Matrix of ``g`` permuting the basis ``e_x -> e_{g.x}`` of ``points``.

    Row ``i`` holds its 1 in the column of ``g**-1 . points[i]``, which makes
    ``g -> action_matrix(g)`` a homomorphism.
    """
    index = {x: i for i, x in enumerate(points)}
    ginv = g.inverse()
    return PermutationMatrix([index[action(ginv, x)] + 1 for x in points])


def defining_rep(w: Permutation) -> RingMatrix:
    return action_matrix(w, list(range(1, w.n + 1)), act_on_points).to_ring_matrix()


def pair_points(n: int) -> list[frozenset]:
    return [frozenset(p) for p in combinations(range(1, n + 1), 2)]


def pairs_rep(w: Permutation) -> RingMatrix:
    return action_matrix(w, pair_points(w.n), act_on_subsets).to_ring_matrix()


def left_regular_rep(G: FiniteGroup) -> Callable:
    elements = G.elements()
    return lambda g: action_matrix(g, elements, lambda a, x: a * x).to_ring_matrix()


def theta_perm_rep(orbit_sizes: Sequence[int], var: str = "q") -> FactoredProduct:
    """``prod (1 - q**|O|)`` over the orbits of a permutation."""
    if any(s < 1 for s in orbit_sizes):
        raise ValueError("orbit sizes must be positive")
    counts: dict = {}
    for s in sorted(orbit_sizes, reverse=True):
        counts[s] = counts.get(s, 0) + 1
    return FactoredProduct((one_minus(var, s), c) for s, c in counts.items())


def defining_matrix(n: int, var: str = "q") -> RingMatrix:
    """``(sum_{w(i)=j} q**maj(w))_{i,j}``."""
    entries = [[MultiPoly() for _ in range(n)] for _ in range(n)]
    weight = maj_weight(var)
    for w in SymmetricGroup(n):
        for i in range(n):
            j = w.images[i] - 1
            entries[i][j] = entries[i][j] + weight(w)
    return RingMatrix.from_rows(entries)


def delta_direct(G: FiniteGroup, weight: Weight, rep: Callable, dim: int) -> MultiPoly:
    """``det(sum_g weight(g) rep(g))`` computed directly."""
    alpha = GroupRingElement.from_weight(G, weight)
    return MultiPoly(det_bareiss(alpha.image(rep, dim)))


# ---------------------------------------------------------------------------
# closed forms from a basis


def cancel_factors(numerator: FactoredProduct, denominator: FactoredProduct) -> FactoredProduct:
    """Exact quotient kept in factored form.

    Each denominator base either matches a numerator base or divides one of
    them; any other case raises :class:`NotDivisible`.
    """
    num = [[b, e] for b, e in numerator.normalized().factors]
    unit, r = divmod(numerator.unit, denominator.unit)
    if r:
        raise NotDivisible(f"unit {denominator.unit} does not divide {numerator.unit}")
    for base, exp in denominator.factors:
        for _ in range(exp):
            _cancel_one(num, base)
    return FactoredProduct(((b, e) for b, e in num if e), unit)


def _cancel_one(num: list, base: MultiPoly) -> None:
    for slot in num:
        if slot[1] and slot[0] == base:
            slot[1] -= 1
            return
    for slot in num:
        if not slot[1]:
            continue
        try:
            quotient = exact_div(slot[0], base)
        except NotDivisible:
            continue
        slot[1] -= 1
        num.append([quotient, 1])
        return
    # a composite base such as (1-q^2)^2: peel numerator factors out of it
    rest = base
    while not rest.is_constant():
        for slot in num:
            if not slot[1]:
                continue
            try:
                rest = exact_div(rest, slot[0])
            except NotDivisible:
                continue
            slot[1] -= 1
            break
        else:
            raise NotDivisible(f"{base} divides none of the remaining factors")
    if rest.constant_value() != 1:
        raise NotDivisible(f"{base} leaves the unit {rest} after cancellation")


def delta_general(
    spec: BasisSpec, r: int, thetas: Sequence[FactoredProduct], variables: Sequence[str], theta_var: str = "q"
) -> FactoredProduct:
    """``prod_i (1 - x_i**m_i)**r / theta_i(x_i)`` for a perfect basis."""
    if not spec.is_perfect():
        raise ValueError("the basis is not perfect")
    if not len(thetas) == len(variables) == len(spec.bounds):
        raise ValueError("one theta and one variable per basis element")
    out = FactoredProduct()
    for m, th, x in zip(spec.bounds, thetas, variables):
        numerator = FactoredProduct([(one_minus(x, m), r)])
        denominator = th.substitute({theta_var: MultiPoly.var(x)})
        out = out * cancel_factors(numerator, denominator)
    return out


def delta_regular_closed(spec: BasisSpec, group_order: int, var: str = "q") -> FactoredProduct:
    """``prod_i (1 - q**m_i)**(|G| (1 - 1/o(g_i)))``."""
    if not spec.is_perfect():
        raise ValueError("the basis is not perfect")
    return FactoredProduct(
        (one_minus(var, m), integer_exponent(group_order * (1 - Fraction(1, order(g)))))
        for g, m in zip(spec.elements, spec.bounds)
    )


# ---------------------------------------------------------------------------
# dihedral representations


def companion_matrix(coeffs: Sequence[int]) -> RingMatrix:
    """Companion matrix of the monic polynomial ``a_0 + a_1 x + ... + x**l``."""
    ell = len(coeffs) - 1
    if coeffs[-1] != 1:
        raise ValueError("polynomial must be monic")
    rows = [[0] * ell for _ in range(ell)]
    for i in range(1, ell):
        rows[i][i - 1] = 1
    for i in range(ell):
        rows[i][ell - 1] = -coeffs[i]
    return RingMatrix.from_rows(rows)


def anti_diagonal(ell: int) -> RingMatrix:
    return RingMatrix.from_rows([[int(i + j == ell - 1) for j in range(ell)] for i in range(ell)])


@dataclass(frozen=True)
class DihedralIrrep:
    """Rational irreducible of the dihedral group built from ``Phi_d``."""

    n: int
    d: int
    rotation: RingMatrix
    flip: RingMatrix

    @property
    def dim(self) -> int:
        return self.rotation.rows

    def __call__(self, h: DihedralElement) -> RingMatrix:
        rot, refl = dihedral_stats(h)
        return self.rotation**rot @ self.flip**refl

    def theta_rotation(self, var: str = "q") -> MultiPoly:
        """``q**l * Phi_d(1/q)``."""
        coeffs = cyclotomic(self.d).coeff_list()
        return MultiPoly.univariate(list(reversed(coeffs)), var)

    def theta_flip(self, var: str = "q") -> MultiPoly:
        ell = self.dim
        if ell % 2 == 0:
            return one_minus(var, 2) ** (ell // 2)
        return one_minus(var, 2) ** ((ell - 1) // 2) * one_minus(var)


def dihedral_irrep(d: int, n: int) -> DihedralIrrep:
    if n < 3 or d < 3 or n % d:
        raise InvalidDivisor(f"need a divisor d >= 3 of n >= 3, got d={d}, n={n}")
    coeffs = cyclotomic(d).coeff_list()
    rotation = companion_matrix(coeffs)
    return DihedralIrrep(n, d, rotation, anti_diagonal(len(coeffs) - 1))


def dihedral_one_dim(kind: str) -> Callable[[DihedralElement], RingMatrix]:
    """The trivial (``"trivial"``) or coset-sign (``"sign"``) character as 1x1 matrices."""
    if kind not in ("trivial", "sign"):
        raise ValueError(f"unknown one-dimensional representation {kind!r}")

    def rep(h: DihedralElement) -> RingMatrix:
        return RingMatrix(1, 1, [(-1) ** h.refl if kind == "sign" else 1])

    return rep
