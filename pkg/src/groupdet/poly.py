"""Sparse multivariate polynomials with integer coefficients.

A :class:`MultiPoly` stores the variables it actually uses (sorted in the
canonical order ``p < q < x < x1 < x2 < ... < q_1 < q_2 < ...``) together with
a mapping from exponent tuples to nonzero Python integers.  Values are
immutable.

Large products and exact quotients go through Kronecker substitution: the
polynomial is packed into a single big integer (one fixed-width signed slot
per dense monomial index) so that CPython's integer multiplication and
division do the heavy lifting.

>>> q = MultiPoly.var("q")
>>> str((1 + q + q**2) * (1 - q))
'1 - q^3'
>>> str(exact_div(1 - q**4, 1 - q**2))
'1 + q^2'
"""

from __future__ import annotations

import re
from functools import lru_cache
from math import prod
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import ConductorMismatch, MissingVariable, NotDivisible, ParseError

DEFAULT_PRIME = 2**31 - 1

_NAME = re.compile(r"[A-Za-z][A-Za-z0-9_]*$")
_INDEXED = re.compile(r"(x|q_)(\d+)$")


def var_key(name: str) -> tuple:
    """Sort key giving the registered variable order."""
    if name == "p":
        return (0, 0, "")
    if name == "q":
        return (1, 0, "")
    if name == "x":
        return (2, 0, "")
    m = _INDEXED.match(name)
    if m:
        return (3 if m.group(1) == "x" else 4, int(m.group(2)), "")
    return (5, 0, name)


def _check_name(name: str) -> str:
    if not isinstance(name, str) or not _NAME.match(name):
        raise ValueError(f"invalid variable name {name!r}")
    return name


class MultiPoly:
    """Immutable sparse polynomial in ``Z[vars]``."""

    __slots__ = ("_vars", "_terms", "_hash")

    def __init__(self, value: "int | str | MultiPoly" = 0):
        if isinstance(value, MultiPoly):
            self._vars, self._terms = value._vars, value._terms
        elif isinstance(value, str):
            other = parse(value)
            self._vars, self._terms = other._vars, other._terms
        elif isinstance(value, int):
            self._vars = ()
            self._terms = {(): value} if value else {}
        else:
            raise TypeError(f"cannot build a polynomial from {type(value).__name__}")
        self._hash = None

    # -- construction -----------------------------------------------------

    @classmethod
    def _raw(cls, vars_: tuple, terms: dict) -> "MultiPoly":
        # caller guarantees: no zero coefficients, every variable is used
        obj = object.__new__(cls)
        obj._vars = vars_
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def _normalized(cls, vars_: tuple, terms: dict) -> "MultiPoly":
        terms = {e: c for e, c in terms.items() if c}
        if not terms:
            return cls._raw((), {})
        used = [i for i in range(len(vars_)) if any(e[i] for e in terms)]
        if len(used) == len(vars_):
            return cls._raw(vars_, terms)
        return cls._raw(
            tuple(vars_[i] for i in used),
            {tuple(e[i] for i in used): c for e, c in terms.items()},
        )

    @classmethod
    def var(cls, name: str) -> "MultiPoly":
        return cls._raw((_check_name(name),), {(1,): 1})

    @classmethod
    def constant(cls, c: int) -> "MultiPoly":
        return cls(int(c))

    @classmethod
    def monomial(cls, exponents: Mapping[str, int], coeff: int = 1) -> "MultiPoly":
        return cls.from_terms([(exponents, coeff)])

    @classmethod
    def from_terms(cls, terms: Iterable[tuple[Mapping[str, int], int]]) -> "MultiPoly":
        """Build from ``(exponent mapping, coefficient)`` pairs; repeats are summed."""
        terms = [(dict(m), int(c)) for m, c in terms]
        names = set()
        for m, _ in terms:
            for v, e in m.items():
                if e < 0:
                    raise ValueError("negative exponent")
                if e:
                    names.add(_check_name(v))
        vars_ = tuple(sorted(names, key=var_key))
        out: dict = {}
        for m, c in terms:
            e = tuple(m.get(v, 0) for v in vars_)
            out[e] = out.get(e, 0) + c
        return cls._normalized(vars_, out)

    @classmethod
    def univariate(cls, coeffs: Sequence[int], var: str = "q") -> "MultiPoly":
        """Dense ascending coefficient list to a polynomial in ``var``."""
        return cls._normalized((_check_name(var),), {(i,): int(c) for i, c in enumerate(coeffs)})

    # -- inspection -------------------------------------------------------

    @property
    def variables(self) -> tuple:
        return self._vars

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def terms(self) -> Iterator[tuple[dict, int]]:
        """Yield ``(exponent mapping, coefficient)`` in canonical ascending order."""
        for e in sorted(self._terms, key=_grlex):
            yield {v: k for v, k in zip(self._vars, e) if k}, self._terms[e]

    def coefficient(self, exponents: Mapping[str, int] | None = None) -> int:
        exponents = exponents or {}
        if any(v not in self._vars for v, k in exponents.items() if k):
            return 0
        return self._terms.get(tuple(exponents.get(v, 0) for v in self._vars), 0)

    def is_constant(self) -> bool:
        return not self._vars

    def constant_value(self) -> int:
        if self._vars:
            raise ValueError("polynomial is not constant")
        return self._terms.get((), 0)

    def degree(self, var: str | None = None) -> int:
        """Degree in ``var``, or total degree; ``-1`` for the zero polynomial."""
        if not self._terms:
            return -1
        if var is None:
            return max(sum(e) for e in self._terms)
        if var not in self._vars:
            return 0
        i = self._vars.index(var)
        return max(e[i] for e in self._terms)

    def max_coefficient(self) -> int:
        return max((abs(c) for c in self._terms.values()), default=0)

    def leading_term(self) -> tuple[dict, int]:
        e = max(self._terms, key=_grlex)
        return {v: k for v, k in zip(self._vars, e) if k}, self._terms[e]

    def coeff_list(self, var: str | None = None) -> list[int]:
        """Dense ascending coefficients of a univariate (or constant) polynomial."""
        if not self._terms:
            return []
        if len(self._vars) > 1 or (var is not None and self._vars and self._vars != (var,)):
            raise ValueError(f"{self} is not univariate in {var!r}")
        out = [0] * (self.degree() + 1)
        for e, c in self._terms.items():
            out[e[0] if e else 0] = c
        return out

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return add(self, other)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw(self._vars, {e: -c for e, c in self._terms.items()})

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return add(self, -other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return add(other, -self)

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return MultiPoly()
            return MultiPoly._raw(self._vars, {e: c * other for e, c in self._terms.items()})
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = MultiPoly(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = MultiPoly(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self._vars == other._vars and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._vars, frozenset(self._terms.items())))
        return self._hash

    def __call__(self, assignment: Mapping[str, int] | None = None, /, **kw) -> int:
        return evaluate(self, {**(assignment or {}), **kw})

    def substitute(self, mapping: Mapping[str, "MultiPoly | int"]) -> "MultiPoly":
        """Replace variables by polynomials; unmapped variables stay."""
        if not any(v in mapping for v in self._vars):
            return self
        images = [_coerce_strict(mapping[v]) if v in mapping else MultiPoly.var(v) for v in self._vars]
        caches: list[dict] = [{0: MultiPoly(1), 1: img} for img in images]

        def power(i, k):
            cache = caches[i]
            if k not in cache:
                cache[k] = images[i] ** k
            return cache[k]

        result = MultiPoly()
        for e, c in self._terms.items():
            term = MultiPoly(c)
            for i, k in enumerate(e):
                if k:
                    term = term * power(i, k)
            result = result + term
        return result

    # -- text -------------------------------------------------------------

    def __str__(self) -> str:
        return render(self)

    def __repr__(self) -> str:
        return f"MultiPoly({render(self, compact=True)!r})"

    def compact(self) -> str:
        return render(self, compact=True)


def _grlex(e: tuple) -> tuple:
    # graded; ties put higher powers of earlier variables first
    return (sum(e), tuple([-k for k in e]))


def _coerce(x):
    if isinstance(x, MultiPoly):
        return x
    if isinstance(x, int):
        return MultiPoly(x)
    return NotImplemented


def _coerce_strict(x) -> MultiPoly:
    y = _coerce(x)
    if y is NotImplemented:
        raise TypeError(f"expected a polynomial or int, got {type(x).__name__}")
    return y


def _align(a: MultiPoly, b: MultiPoly) -> tuple[tuple, dict, dict]:
    if a._vars == b._vars:
        return a._vars, a._terms, b._terms
    vars_ = tuple(sorted(set(a._vars) | set(b._vars), key=var_key))
    return vars_, _lift(a, vars_), _lift(b, vars_)


def _lift(a: MultiPoly, vars_: tuple) -> dict:
    if a._vars == vars_:
        return a._terms
    pos = [vars_.index(v) for v in a._vars]
    n = len(vars_)
    out = {}
    for e, c in a._terms.items():
        f = [0] * n
        for i, k in zip(pos, e):
            f[i] = k
        out[tuple(f)] = c
    return out


# ---------------------------------------------------------------------------
# core operations


def add(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    if not b._terms:
        return a
    if not a._terms:
        return b
    vars_, ta, tb = _align(a, b)
    out = dict(ta)
    get = out.get
    for e, c in tb.items():
        out[e] = get(e, 0) + c
    return MultiPoly._normalized(vars_, out)


def mul(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    if not a._terms or not b._terms:
        return MultiPoly()
    vars_, ta, tb = _align(a, b)
    if not vars_:
        return MultiPoly(ta[()] * tb[()])
    work = len(ta) * len(tb)
    if work > 48:
        out = _kronecker_mul(vars_, ta, tb, work)
        if out is not None:
            return MultiPoly._raw(vars_, out)
    return MultiPoly._raw(vars_, _schoolbook_mul(ta, tb))


def _schoolbook_mul(ta: dict, tb: dict) -> dict:
    out: dict = {}
    get = out.get
    if len(next(iter(ta))) == 1:
        for (i,), c in ta.items():
            for (j,), d in tb.items():
                k = (i + j,)
                out[k] = get(k, 0) + c * d
    else:
        for e, c in ta.items():
            for f, d in tb.items():
                k = tuple([x + y for x, y in zip(e, f)])
                out[k] = get(k, 0) + c * d
    return {e: c for e, c in out.items() if c}


def _degrees(t: dict, n: int) -> list[int]:
    d = [0] * n
    for e in t:
        for i in range(n):
            if e[i] > d[i]:
                d[i] = e[i]
    return d


def _strides(slots: Sequence[int]) -> list[int]:
    s, acc = [], 1
    for w in slots:
        s.append(acc)
        acc *= w
    return s


def _index(e: tuple, strides: Sequence[int]) -> int:
    if len(e) == 1:
        return e[0]
    return sum(k * s for k, s in zip(e, strides))


def _pack(t: dict, strides: Sequence[int], kb: int) -> int:
    """Evaluate at ``2**(8*kb)`` after Kronecker substitution."""
    idx = {_index(e, strides): c for e, c in t.items()}
    size = (max(idx) + 1) * kb
    pos = bytearray(size)
    neg = None
    for j, c in idx.items():
        if c > 0:
            pos[j * kb:(j + 1) * kb] = c.to_bytes(kb, "little")
        else:
            if neg is None:
                neg = bytearray(size)
            neg[j * kb:(j + 1) * kb] = (-c).to_bytes(kb, "little")
    value = int.from_bytes(pos, "little")
    if neg is not None:
        value -= int.from_bytes(neg, "little")
    return value


def _unpack(value: int, kb: int, length: int) -> dict[int, int] | None:
    """Balanced-digit decode; ``None`` if the value does not fit ``length`` slots."""
    half = 1 << (8 * kb - 1)
    offset = int.from_bytes(half.to_bytes(kb, "little") * length, "little")
    x = value + offset
    if x < 0:
        return None
    try:
        raw = x.to_bytes(length * kb, "little")
    except OverflowError:
        return None
    frm = int.from_bytes
    out = {}
    for j in range(length):
        c = frm(raw[j * kb:(j + 1) * kb], "little") - half
        if c:
            out[j] = c
    return out


def _unindex(idx: dict[int, int], strides: Sequence[int]) -> dict:
    if len(strides) == 1:
        return {(j,): c for j, c in idx.items()}
    out = {}
    rev = list(reversed(strides))
    for j, c in idx.items():
        e = []
        for s in rev:
            k, j = divmod(j, s)
            e.append(k)
        out[tuple(reversed(e))] = c
    return out


def _kronecker_mul(vars_: tuple, ta: dict, tb: dict, work: int) -> dict | None:
    n = len(vars_)
    da, db = _degrees(ta, n), _degrees(tb, n)
    slots = [x + y + 1 for x, y in zip(da, db)]
    length = prod(slots)
    if length > 32 * work + 4096:
        return None  # too sparse for dense packing
    ma = max(abs(c) for c in ta.values())
    mb = max(abs(c) for c in tb.values())
    bound = ma * mb * min(len(ta), len(tb))
    kb = (bound.bit_length() + 2 + 7) // 8
    strides = _strides(slots)
    product = _pack(ta, strides, kb) * _pack(tb, strides, kb)
    idx = _unpack(product, kb, length)
    assert idx is not None, "Kronecker product overflowed its slot bound"
    return _unindex(idx, strides)


def exact_div(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    """Return ``c`` with ``b*c == a``; raise :class:`NotDivisible` otherwise."""
    a, b = _coerce_strict(a), _coerce_strict(b)
    if not b._terms:
        raise ZeroDivisionError("polynomial division by zero")
    if not a._terms:
        return MultiPoly()
    if len(b._terms) == 1:
        return _div_by_term(a, b)
    if not set(b._vars) <= set(a._vars):
        raise NotDivisible(f"{b} does not divide {a}")
    vars_ = a._vars
    ta = a._terms
    tb = _lift(b, vars_)
    n = len(vars_)
    da, db = _degrees(ta, n), _degrees(tb, n)
    if any(y > x for x, y in zip(da, db)):
        raise NotDivisible(f"{b} does not divide {a}")
    slots = [x + 1 for x in da]
    length = prod(slots)
    if length > 64 * len(ta) + 4096:
        return divide_by_leading_terms(a, b)
    strides = _strides(slots)
    ma = max(abs(c) for c in ta.values())
    # Mignotte-style cap on the quotient's coefficient size after substitution
    cap_bits = ma.bit_length() + length + len(ta).bit_length() + 2
    bits = ma.bit_length() + 16
    while True:
        kb = (bits + 7) // 8
        big_q, rem = divmod(_pack(ta, strides, kb), _pack(tb, strides, kb))
        if rem:
            raise NotDivisible(f"{b} does not divide {a}")
        idx = _unpack(big_q, kb, length)
        if idx:
            c = MultiPoly._normalized(vars_, _unindex(idx, strides))
            if mul(b, c) == a:
                return c
        if bits > cap_bits:
            raise NotDivisible(f"{b} does not divide {a}")
        bits *= 2


def _div_by_term(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    (f, d), = b._terms.items()
    if not set(b._vars) <= set(a._vars):
        raise NotDivisible(f"{b} does not divide {a}")
    pos = [a._vars.index(v) for v in b._vars]
    out = {}
    for e, c in a._terms.items():
        e = list(e)
        for i, k in zip(pos, f):
            e[i] -= k
            if e[i] < 0:
                raise NotDivisible(f"{b} does not divide {a}")
        qc, r = divmod(c, d)
        if r:
            raise NotDivisible(f"{b} does not divide {a}")
        out[tuple(e)] = qc
    return MultiPoly._normalized(a._vars, out)


def divide_by_leading_terms(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    """Exact division by repeated cancellation of graded-lex leading terms.

    Slower than :func:`exact_div` but shares none of its machinery, so the
    test-suite uses it as an oracle.
    """
    a, b = _coerce_strict(a), _coerce_strict(b)
    if not b._terms:
        raise ZeroDivisionError("polynomial division by zero")
    lb_mono, lb_coeff = b.leading_term()
    quotient = MultiPoly()
    rest = a
    while rest:
        lr_mono, lr_coeff = rest.leading_term()
        qc, r = divmod(lr_coeff, lb_coeff)
        shift = {}
        for v in set(lr_mono) | set(lb_mono):
            k = lr_mono.get(v, 0) - lb_mono.get(v, 0)
            if k < 0:
                raise NotDivisible(f"{b} does not divide {a}")
            shift[v] = k
        if r:
            raise NotDivisible(f"{b} does not divide {a}")
        t = MultiPoly.monomial(shift, qc)
        quotient = quotient + t
        rest = rest - t * b
    return quotient


def evaluate(a: MultiPoly, assignment: Mapping[str, int], modulus: int | None = None) -> int:
    """Value of ``a`` at an integer point, optionally reduced modulo a prime."""
    a = _coerce_strict(a)
    try:
        point = [int(assignment[v]) for v in a._vars]
    except KeyError as exc:
        raise MissingVariable(f"no value given for variable {exc.args[0]!r}") from None
    if modulus is not None:
        point = [x % modulus for x in point]
    caches: list[dict] = [{} for _ in point]
    total = 0
    for e, c in a._terms.items():
        t = c
        for i, k in enumerate(e):
            if k:
                cache = caches[i]
                v = cache.get(k)
                if v is None:
                    v = pow(point[i], k, modulus) if modulus else point[i] ** k
                    cache[k] = v
                t *= v
        total += t
        if modulus and total.bit_length() > 256:
            total %= modulus
    return total % modulus if modulus else total


# ---------------------------------------------------------------------------
# text rendering and parsing


def _render_monomial(vars_: tuple, e: tuple) -> str:
    parts = []
    for v, k in zip(vars_, e):
        if k == 1:
            parts.append(v)
        elif k:
            parts.append(f"{v}^{k}")
    return "*".join(parts)


def render(a: MultiPoly, compact: bool = False) -> str:
    """Canonical text, ascending graded order: ``1 - 3*q^2 + q^5``."""
    if not a._terms:
        return "0"
    chunks = []
    for e in sorted(a._terms, key=_grlex):
        c = a._terms[e]
        mono = _render_monomial(a._vars, e)
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        chunks.append(("-" if c < 0 else "+", body))
    plus, minus = ("+", "-") if compact else (" + ", " - ")
    sign, body = chunks[0]
    out = [("-" if sign == "-" else "") + body]
    for sign, body in chunks[1:]:
        out.append((minus if sign == "-" else plus) + body)
    return "".join(out)


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z][A-Za-z0-9_]*)|(\*\*|[-+*^()]))")


def _tokenize(text: str) -> list[tuple[str, str]]:
    pos, out = 0, []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character at {pos} in {text!r}")
        num, name, op = m.groups()
        if num is not None:
            out.append(("int", num))
        elif name is not None:
            out.append(("name", name))
        else:
            out.append(("op", "^" if op == "**" else op))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self, kind=None, value=None):
        tok = self.peek()
        if tok[0] is None or (kind and tok[0] != kind) or (value and tok[1] != value):
            raise ParseError(f"unexpected {tok[1] or 'end of input'!r} in {self.text!r}")
        self.i += 1
        return tok

    def done(self):
        if self.i != len(self.toks):
            raise ParseError(f"trailing input {self.peek()[1]!r} in {self.text!r}")

    def expr(self) -> MultiPoly:
        sign = 1
        if self.peek() in (("op", "-"), ("op", "+")):
            sign = -1 if self.take()[1] == "-" else 1
        acc = self.term() * sign
        while self.peek() in (("op", "-"), ("op", "+")):
            op = self.take()[1]
            t = self.term()
            acc = acc - t if op == "-" else acc + t
        return acc

    def term(self) -> MultiPoly:
        base, exp = self.power()
        acc = base**exp
        while self.peek() == ("op", "*"):
            self.take()
            base, exp = self.power()
            acc = acc * base**exp
        return acc

    def power(self) -> tuple[MultiPoly, int]:
        base = self.atom()
        exp = 1
        if self.peek() == ("op", "^"):
            self.take()
            exp = int(self.take("int")[1])
        return base, exp

    def atom(self) -> MultiPoly:
        kind, val = self.peek()
        if kind == "int":
            self.take()
            return MultiPoly(int(val))
        if kind == "name":
            self.take()
            return MultiPoly.var(val)
        if (kind, val) == ("op", "("):
            self.take()
            inner = self.expr()
            self.take("op", ")")
            return inner
        raise ParseError(f"unexpected {val or 'end of input'!r} in {self.text!r}")

    def factors(self) -> list[tuple[MultiPoly, int]]:
        """A top-level product ``f1^e1*f2^e2*...`` kept unexpanded."""
        if not self.toks:
            raise ParseError("empty input")
        out = [self.power()]
        while self.peek() == ("op", "*"):
            self.take()
            out.append(self.power())
        self.done()
        return out


def parse(text: str) -> MultiPoly:
    """Parse the grammar produced by :func:`render` (and ``^``/``**`` powers)."""
    p = _Parser(text)
    if not p.toks:
        raise ParseError("empty input")
    out = p.expr()
    p.done()
    return out


def parse_factors(text: str) -> list[tuple[MultiPoly, int]]:
    return _Parser(text).factors()


# ---------------------------------------------------------------------------
# cyclotomic polynomials and Z[x]/Phi_m


def divisors(m: int) -> list[int]:
    return [d for d in range(1, m + 1) if m % d == 0]


@lru_cache(maxsize=None)
def _cyclotomic_coeffs(m: int) -> tuple[int, ...]:
    x = MultiPoly.var("x")
    num = x**m - 1
    for d in divisors(m)[:-1]:
        num = exact_div(num, MultiPoly.univariate(_cyclotomic_coeffs(d), "x"))
    return tuple(num.coeff_list("x"))


def cyclotomic(m: int, var: str = "x") -> MultiPoly:
    """The ``m``-th cyclotomic polynomial, by dividing ``x^m - 1`` by smaller ones."""
    if m < 1:
        raise ValueError("cyclotomic index must be positive")
    return MultiPoly.univariate(_cyclotomic_coeffs(m), var)


def totient(m: int) -> int:
    return len(_cyclotomic_coeffs(m)) - 1


class CycloElement:
    """Residue class in ``Z[x]/(Phi_m)``, stored densely (length ``totient(m)``)."""

    __slots__ = ("m", "coeffs")

    def __init__(self, m: int, coeffs: Sequence[int] = ()):
        self.m = m
        self.coeffs = _reduce_mod_phi(m, list(coeffs))

    @classmethod
    def x_power(cls, m: int, e: int) -> "CycloElement":
        """The class of ``x**e`` (``e`` taken modulo ``m``)."""
        e %= m
        return cls(m, [0] * e + [1])

    @classmethod
    def from_int(cls, m: int, c: int) -> "CycloElement":
        return cls(m, [c])

    def _check(self, other: "CycloElement"):
        if not isinstance(other, CycloElement):
            raise TypeError("expected a CycloElement")
        if other.m != self.m:
            raise ConductorMismatch(f"conductors {self.m} and {other.m} differ")

    def __add__(self, other):
        self._check(other)
        return CycloElement(self.m, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        self._check(other)
        return CycloElement(self.m, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return CycloElement(self.m, [-a for a in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, int):
            return CycloElement(self.m, [a * other for a in self.coeffs])
        return cyclo_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = CycloElement.from_int(self.m, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if not isinstance(other, CycloElement):
            return NotImplemented
        return self.m == other.m and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.m, self.coeffs))

    def is_integer(self) -> bool:
        return not any(self.coeffs[1:])

    def to_int(self) -> int:
        if not self.is_integer():
            raise ValueError(f"{self!r} is not a rational integer")
        return self.coeffs[0]

    def __repr__(self):
        return f"CycloElement({self.m}, {list(self.coeffs)})"


def _reduce_mod_phi(m: int, coeffs: list[int]) -> tuple[int, ...]:
    phi = _cyclotomic_coeffs(m)
    deg = len(phi) - 1
    c = list(coeffs)
    # Phi_m is monic, so plain long division stays in Z
    for top in range(len(c) - 1, deg - 1, -1):
        lead = c[top]
        if lead:
            shift = top - deg
            for i in range(deg + 1):
                c[shift + i] -= lead * phi[i]
    c = c[:deg] + [0] * (deg - len(c))
    return tuple(c)


def cyclo_mul(a: CycloElement, b: CycloElement) -> CycloElement:
    a._check(b)
    out = [0] * (len(a.coeffs) + len(b.coeffs))
    for i, x in enumerate(a.coeffs):
        if x:
            for j, y in enumerate(b.coeffs):
                out[i + j] += x * y
    return CycloElement(a.m, out)
