"""Closed-form products for the group determinants and tools to compare them.

Every right-hand side is a :class:`FactoredProduct`: a list of
``(base, exponent)`` pairs times an integer unit.  Products are never
compared factor by factor; :func:`fp_equal` expands or evaluates them.
"""

from __future__ import annotations

import json
from fractions import Fraction
from math import comb, factorial, prod
from typing import Iterable, Mapping, Sequence

from .errors import DegreeBoundExceeded, NonIntegerExponent, ParseError
from .matrix import random_points
from .poly import DEFAULT_PRIME, MultiPoly, evaluate, parse as parse_poly, parse_factors, render, var_key

MAX_TERMS = 10_000


def integer_exponent(value) -> int:
    """Exact integer value of a rational exponent, or :class:`NonIntegerExponent`."""
    value = Fraction(value)
    if value.denominator != 1:
        raise NonIntegerExponent(f"exponent {value} is not an integer")
    return int(value)


class FactoredProduct:
    """``unit * prod(base ** exp)`` kept in factored form.

    Zero exponents are dropped and constant bases are folded into the unit
    on construction; equal bases are only merged by :meth:`normalized`.
    """

    __slots__ = ("factors", "unit")

    def __init__(self, factors: Iterable[tuple] = (), unit: int = 1):
        kept = []
        for base, exp in factors:
            base = MultiPoly(base)
            exp = integer_exponent(exp)
            if exp < 0:
                raise NonIntegerExponent(f"negative exponent {exp} in a product")
            if exp == 0:
                continue
            if base.is_constant():
                unit *= base.constant_value() ** exp
                continue
            kept.append((base, exp))
        self.factors: tuple = tuple(kept)
        self.unit = int(unit)

    @classmethod
    def one(cls) -> "FactoredProduct":
        return cls()

    @property
    def variables(self) -> tuple:
        names = {v for base, _ in self.factors for v in base.variables}
        return tuple(sorted(names, key=var_key))

    def degree(self) -> int:
        return sum(base.degree() * exp for base, exp in self.factors)

    def dense_term_bound(self) -> int:
        """Upper bound on the number of terms of the expansion."""
        bound = 1
        for v in self.variables:
            bound *= 1 + sum(base.degree(v) * exp for base, exp in self.factors)
        return bound

    def expand(self, max_terms: int = MAX_TERMS) -> MultiPoly:
        bound = self.dense_term_bound()
        if bound > max_terms:
            raise DegreeBoundExceeded(
                f"expansion may have {bound} terms (limit {max_terms}); compare modularly instead"
            )
        result = MultiPoly(self.unit)
        for base, exp in self.factors:
            result = result * base**exp
        return result

    def evaluate(self, assignment: Mapping[str, int], modulus: int | None = None) -> int:
        if modulus is None:
            return self.unit * prod(evaluate(b, assignment) ** e for b, e in self.factors)
        acc = self.unit % modulus
        for base, exp in self.factors:
            acc = acc * pow(evaluate(base, assignment, modulus), exp, modulus) % modulus
        return acc

    def substitute(self, mapping: Mapping[str, "MultiPoly | int"]) -> "FactoredProduct":
        return FactoredProduct(((b.substitute(mapping), e) for b, e in self.factors), self.unit)

    def normalized(self) -> "FactoredProduct":
        """Merge equal bases and order factors by (variables, degree, text)."""
        merged: dict = {}
        for base, exp in self.factors:
            merged[base] = merged.get(base, 0) + exp
        order = sorted(
            merged, key=lambda b: (tuple(var_key(v) for v in b.variables), b.degree(), render(b))
        )
        return FactoredProduct(((b, merged[b]) for b in order), self.unit)

    def __mul__(self, other: "FactoredProduct") -> "FactoredProduct":
        if not isinstance(other, FactoredProduct):
            return NotImplemented
        return FactoredProduct(self.factors + other.factors, self.unit * other.unit)

    def __pow__(self, k: int) -> "FactoredProduct":
        return FactoredProduct(((b, e * k) for b, e in self.factors), self.unit**k)

    # equality is a statement about polynomials, never about factor lists
    def __eq__(self, other):
        if not isinstance(other, (FactoredProduct, MultiPoly, int)):
            return NotImplemented
        return fp_equal(self, other)

    __hash__ = None

    def __str__(self) -> str:
        parts = [f"({render(b, compact=True)})" + (f"^{e}" if e != 1 else "") for b, e in self.factors]
        if self.unit != 1 or not parts:
            parts.insert(0, str(self.unit))
        return "*".join(parts)

    def __repr__(self) -> str:
        return f"FactoredProduct({str(self)!r})"

    def to_dict(self) -> dict:
        out: dict = {"factors": [{"base": render(b, compact=True), "exp": e} for b, e in self.factors]}
        if self.unit != 1:
            out["unit"] = self.unit
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: Mapping) -> "FactoredProduct":
        try:
            factors = [(parse_poly(f["base"]), int(f["exp"])) for f in data["factors"]]
        except (KeyError, TypeError) as exc:
            raise ParseError(f"malformed factored product: {exc}") from None
        return cls(factors, int(data.get("unit", 1)))

    @classmethod
    def from_json(cls, text: str) -> "FactoredProduct":
        return cls.from_dict(json.loads(text))

    @classmethod
    def parse(cls, text: str) -> "FactoredProduct":
        """Parse ``"(1-q^2)^3*(1-q^3)^4"``."""
        return cls(parse_factors(text))


def fp_equal(
    a: "FactoredProduct | MultiPoly | int",
    b: "FactoredProduct | MultiPoly | int",
    mode: str = "symbolic",
    points: int = 7,
    prime: int = DEFAULT_PRIME,
    seed: int = 0,
    max_terms: int = MAX_TERMS,
) -> bool:
    """Polynomial equality of two products/polynomials, by expansion or at random points."""
    if mode == "symbolic":
        return _expanded(a, max_terms) == _expanded(b, max_terms)
    if mode != "modular":
        raise ValueError(f"unknown comparison mode {mode!r}")
    names = sorted(set(_variables(a)) | set(_variables(b)), key=var_key)
    for point in random_points(names, points, prime, seed):
        if _value(a, point, prime) != _value(b, point, prime):
            return False
    return True


def _expanded(x, max_terms: int) -> MultiPoly:
    return x.expand(max_terms) if isinstance(x, FactoredProduct) else MultiPoly(x)


def _variables(x) -> tuple:
    return x.variables if isinstance(x, FactoredProduct) else MultiPoly(x).variables


def _value(x, point: Mapping[str, int], prime: int) -> int:
    if isinstance(x, FactoredProduct):
        return x.evaluate(point, prime)
    return evaluate(MultiPoly(x), point, prime)


# ---------------------------------------------------------------------------
# q-analogues


def one_minus(var: str = "q", k: int = 1) -> MultiPoly:
    """``1 - var**k``."""
    return 1 - MultiPoly.var(var) ** k


def q_integer(k: int, var: str = "q") -> MultiPoly:
    """``[k]_q = 1 + q + ... + q**(k-1)``."""
    return MultiPoly.univariate([1] * k, var) if k > 0 else MultiPoly()


def q_factorial(n: int, var: str = "q") -> MultiPoly:
    result = MultiPoly(1)
    for k in range(2, n + 1):
        result = result * q_integer(k, var)
    return result


# ---------------------------------------------------------------------------
# right-hand sides


def rhs_maj(n: int, var: str = "q") -> FactoredProduct:
    """``prod_{k=2}^n (1-q^k)^(n!(k-1)/k)``."""
    nf = factorial(n)
    return FactoredProduct((one_minus(var, k), Fraction(nf * (k - 1), k)) for k in range(2, n + 1))


def rhs_fmaj(n: int, m: int, var: str = "q") -> FactoredProduct:
    """``prod_{k=1}^n (1-q^(mk))^(n! m^n (1 - 1/(mk)))``."""
    total = factorial(n) * m**n
    return FactoredProduct(
        (one_minus(var, m * k), total * (1 - Fraction(1, m * k))) for k in range(1, n + 1)
    )


def _p_part(n: int, order_factor: int, var: str = "p") -> list:
    # prod_{k=2}^n (1-p^k)^(|G|(k-1)/k) for a group of order |G| = n! * order_factor
    total = factorial(n) * order_factor
    return [(one_minus(var, k), Fraction(total * (k - 1), k)) for k in range(2, n + 1)]


def rhs_maj_col(n: int, m: int) -> FactoredProduct:
    """Bivariate (maj in ``p``, col in ``q``) product over colored permutations."""
    colors = [
        (one_minus("q", m * k), Fraction(factorial(n) * m ** (n - 1) * (m - 1), k))
        for k in range(1, n + 1)
    ]
    return FactoredProduct(_p_part(n, m**n) + colors)


def rhs_amaj(n: int, m: int) -> FactoredProduct:
    """Bivariate (amaj in ``p``, col in ``q``) product over colored permutations."""
    color = (one_minus("q", m), factorial(n) * m ** (n - 1) * (m - 1) * n)
    return FactoredProduct([color] + _p_part(n, m**n))


def rhs_signed(n: int) -> FactoredProduct:
    """``prod_k (1-q_k^(2k))^(n! 2^(n-1)/k) * prod_{k>=2} (1-p^k)^(n! 2^n (k-1)/k)``."""
    signs = [
        (one_minus(f"q_{k}", 2 * k), Fraction(factorial(n) * 2 ** (n - 1), k)) for k in range(1, n + 1)
    ]
    return FactoredProduct(signs + _p_part(n, 2**n))


SIGNED_VARIANTS = ("nneg", "majB", "sneg")


def rhs_signed_spec(n: int, which: str) -> FactoredProduct:
    """The one-variable-for-signs specializations, written out directly.

    ``nneg``: ``p^majA q^nneg``; ``majB``: ``q^majB``; ``sneg``: ``p^majA q^sneg``.
    """
    if which not in SIGNED_VARIANTS:
        raise ValueError(f"unknown variant {which!r}; expected one of {SIGNED_VARIANTS}")
    half = factorial(n) * 2 ** (n - 1)
    if which == "sneg":
        signs = [(one_minus("q", 2 * k * k), Fraction(half, k)) for k in range(1, n + 1)]
    else:
        signs = [(one_minus("q", 2 * k), Fraction(half, k)) for k in range(1, n + 1)]
    return FactoredProduct(signs + _p_part(n, 2**n, "q" if which == "majB" else "p"))


def rhs_dihedral(n: int) -> FactoredProduct:
    """Regular-representation product for the dihedral group of order ``2n``."""
    return FactoredProduct([(one_minus("x1", n), 2 * n - 2), (one_minus("x2", 2), n)])


def rhs_defining(n: int, var: str = "q") -> FactoredProduct:
    """``(1-q)^C(n,2) * ([n]_q!)^(n-1)`` with ``[n]_q!`` kept as its ``[k]_q`` factors."""
    factors = [(one_minus(var), comb(n, 2))]
    factors += [(q_integer(k, var), n - 1) for k in range(2, n + 1)]
    return FactoredProduct(factors)


def theta_pairs(n: int, k: int, var: str = "q") -> FactoredProduct:
    """``det(I - q M)`` for ``t_k`` acting on 2-subsets of ``[n]``, from the orbit count."""
    if not 2 <= k <= n:
        raise ValueError(f"need 2 <= k <= n, got k={k}, n={n}")
    factors = [(one_minus(var), comb(n - k, 2)), (one_minus(var, k), n - k)]
    if k % 2:
        factors.append((one_minus(var, k), (k - 1) // 2))
    else:
        factors += [(one_minus(var, k), (k - 2) // 2), (one_minus(var, k // 2), 1)]
    return FactoredProduct(factors)


def rhs_irrep_trivial(n: int, var: str = "q") -> FactoredProduct:
    """Trivial representation: ``[n]_q!``."""
    return FactoredProduct((q_integer(k, var), 1) for k in range(2, n + 1))


def rhs_irrep_standard(n: int, var: str = "q") -> FactoredProduct:
    """Shape ``[n-1, 1]``: ``([n]_q!)^(n-2) * (1-q)^C(n,2)``."""
    factors = [(q_integer(k, var), n - 2) for k in range(2, n + 1)]
    return FactoredProduct(factors + [(one_minus(var), comb(n, 2))])


def rhs_irrep_22(var: str = "q") -> FactoredProduct:
    """Shape ``[2, 2]``: ``(1-q)(1-q^3)(1-q^4)^2``."""
    return FactoredProduct([(one_minus(var), 1), (one_minus(var, 3), 1), (one_minus(var, 4), 2)])


def rhs_irrep(shape: Sequence[int], var: str = "q") -> FactoredProduct:
    """Closed forms known for the shapes ``[n]``, ``[n-1, 1]`` and ``[2, 2]``."""
    shape = tuple(shape)
    n = sum(shape)
    if shape == (n,):
        return rhs_irrep_trivial(n, var)
    if n >= 2 and shape == (n - 1, 1):
        return rhs_irrep_standard(n, var)
    if shape == (2, 2):
        return rhs_irrep_22(var)
    raise ValueError(f"no closed form for shape {list(shape)}")


def rhs_inv(n: int, var: str = "q") -> FactoredProduct:
    """Inversion-statistic product ``prod_k (1-q^(k^2-k))^(n!(n-k+1)/(k^2-k))``."""
    nf = factorial(n)
    return FactoredProduct(
        (one_minus(var, k * k - k), Fraction(nf * (n - k + 1), k * k - k)) for k in range(2, n + 1)
    )
