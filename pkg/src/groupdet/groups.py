"""Finite groups: symmetric groups in one-line notation and dihedral groups.

Composition is right-to-left, ``(u*v)(i) == u(v(i))``.  With this convention
``t_n**c_n * ... * t_2**c_2`` reproduces the major-index factorizations, e.g.
``cycle(3, 3) * cycle(2, 3) == Permutation.parse("132")``.
"""

from __future__ import annotations

import functools
import itertools
import re
from typing import Callable, Hashable, Iterable, Sequence, TypeVar

from .errors import OutOfRange, ParseError, SizeMismatch

X = TypeVar("X", bound=Hashable)


class GroupElement:
    """Mixin giving powers and element order from ``one``/``inverse``/``*``."""

    __slots__ = ()

    def one(self):
        raise NotImplementedError

    def inverse(self):
        raise NotImplementedError

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result, base = self.one(), self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def order(self) -> int:
        return order(self)


def order(g: GroupElement) -> int:
    """Least ``k >= 1`` with ``g**k`` the identity."""
    e = g.one()
    h, k = g, 1
    while h != e:
        h = h * g
        k += 1
    return k


@functools.total_ordering
class Permutation(GroupElement):
    """A permutation of ``{1..n}`` stored by its one-line images."""

    __slots__ = ("images",)

    def __init__(self, images: Iterable[int]):
        images = tuple(int(i) for i in images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"{images} is not a permutation of 1..{len(images)}")
        self.images = images

    @classmethod
    def _unchecked(cls, images: tuple) -> "Permutation":
        obj = object.__new__(cls)
        obj.images = images
        return obj

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls._unchecked(tuple(range(1, n + 1)))

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        """One-line notation: ``"314652"``, or separated ``"10 2 1 ..."``."""
        text = text.strip()
        parts = re.split(r"[\s,]+", text) if re.search(r"[\s,]", text) else list(text)
        try:
            return cls(int(p) for p in parts if p)
        except ValueError as exc:
            raise ParseError(f"cannot parse permutation {text!r}: {exc}") from None

    @classmethod
    def from_cycles(cls, n: int, cycles: Sequence[Sequence[int]]) -> "Permutation":
        """Build from cycles, each read left to right: ``(1,2,3)`` sends 1 to 2."""
        img = list(range(1, n + 1))
        for cyc in cycles:
            for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
                img[a - 1] = b
        return cls(img)

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, v in enumerate(self.images, 1):
            inv[v - 1] = i
        return Permutation._unchecked(tuple(inv))

    def one(self) -> "Permutation":
        return Permutation.identity(len(self.images))

    def __eq__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.images == other.images

    def __lt__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.images < other.images

    def __hash__(self):
        return hash(self.images)

    def __str__(self) -> str:
        sep = "" if len(self.images) < 10 else " "
        return sep.join(map(str, self.images))

    def __repr__(self) -> str:
        return f"Permutation({str(self)!r})"

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its largest entry."""
        seen, out = set(), []
        for start in range(len(self.images), 0, -1):
            if start in seen:
                continue
            cyc, i = [], start
            while i not in seen:
                seen.add(i)
                cyc.append(i)
                i = self.images[i - 1]
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def cycle_notation(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + ",".join(map(str, c)) + ")" for c in cycles)

    def cycle_type(self) -> tuple[int, ...]:
        """Cycle lengths including fixed points, weakly decreasing."""
        lengths = [len(c) for c in self.cycles()]
        fixed = self.n - sum(lengths)
        return tuple(sorted(lengths, reverse=True)) + (1,) * fixed


def compose(u: Permutation, v: Permutation) -> Permutation:
    """``(u∘v)(i) = u(v(i))``."""
    if len(u.images) != len(v.images):
        raise SizeMismatch(f"cannot compose permutations of {u.n} and {v.n} letters")
    ui = u.images
    return Permutation._unchecked(tuple([ui[j - 1] for j in v.images]))


def cycle(k: int, n: int) -> Permutation:
    """The k-cycle ``t_k = (k, k-1, ..., 1)`` in ``S_n``; ``t_1`` is the identity."""
    if not 1 <= k <= n:
        raise OutOfRange(f"need 1 <= k <= n, got k={k}, n={n}")
    return Permutation._unchecked((k,) + tuple(range(1, k)) + tuple(range(k + 1, n + 1)))


def descents(w: Permutation) -> set[int]:
    img = w.images
    return {i for i in range(1, len(img)) if img[i - 1] > img[i]}


def maj(w: Permutation) -> int:
    img = w.images
    return sum(i for i in range(1, len(img)) if img[i - 1] > img[i])


def inversions(w: Permutation) -> int:
    img = w.images
    return sum(1 for i, j in itertools.combinations(range(len(img)), 2) if img[i] > img[j])


def orbit_decomposition(action: Callable[[object, X], X], g, points: Iterable[X]) -> list[list[X]]:
    """Orbits of the cyclic group generated by ``g`` on ``points``."""
    seen: set = set()
    out = []
    for x in points:
        if x in seen:
            continue
        orbit, y = [], x
        while y not in seen:
            seen.add(y)
            orbit.append(y)
            y = action(g, y)
        if y != x:
            raise ValueError("action is not a permutation of the point set")
        out.append(orbit)
    return out


def orbits(action: Callable[[object, X], X], g, points: Iterable[X]) -> list[int]:
    """Orbit sizes of ``<g>`` on ``points``, largest first."""
    return sorted((len(o) for o in orbit_decomposition(action, g, points)), reverse=True)


def act_on_points(w: Permutation, i: int) -> int:
    return w(i)


def act_on_subsets(w: Permutation, s: frozenset) -> frozenset:
    return frozenset(w(i) for i in s)


class FiniteGroup:
    """Enumerable finite group with a fixed element order."""

    name = "G"

    def identity(self):
        raise NotImplementedError

    def _enumerate(self) -> list:
        raise NotImplementedError

    def elements(self) -> list:
        cached = getattr(self, "_elements", None)
        if cached is None:
            cached = self._enumerate()
            self._elements = cached
        return cached

    def index(self) -> dict:
        cached = getattr(self, "_index", None)
        if cached is None:
            cached = {g: i for i, g in enumerate(self.elements())}
            self._index = cached
        return cached

    def multiply(self, a, b):
        return a * b

    def invert(self, a):
        return a.inverse()

    def __len__(self) -> int:
        return len(self.elements())

    def __iter__(self):
        return iter(self.elements())

    def __repr__(self) -> str:
        return self.name


class SymmetricGroup(FiniteGroup):
    def __init__(self, n: int):
        if n < 1:
            raise OutOfRange("n must be positive")
        self.n = n
        self.name = f"S_{n}"

    def identity(self) -> Permutation:
        return Permutation.identity(self.n)

    def _enumerate(self) -> list[Permutation]:
        # lexicographic on one-line notation
        return [Permutation._unchecked(p) for p in itertools.permutations(range(1, self.n + 1))]

    def t(self, k: int) -> Permutation:
        return cycle(k, self.n)


@functools.total_ordering
class DihedralElement(GroupElement):
    """``g1**rot * g2**refl`` in the dihedral group of order ``2n``.

    ``g1 = (1 2 ... n)`` is the rotation and ``g2`` the reflection fixing ``n``;
    ``g2 g1 g2 = g1**-1``.
    """

    __slots__ = ("n", "rot", "refl")

    def __init__(self, n: int, rot: int = 0, refl: int = 0):
        if n < 3:
            raise OutOfRange("dihedral groups need n >= 3")
        self.n, self.rot, self.refl = n, rot % n, refl % 2

    def __mul__(self, other: "DihedralElement") -> "DihedralElement":
        if other.n != self.n:
            raise SizeMismatch("dihedral elements of different polygons")
        turn = -other.rot if self.refl else other.rot
        return DihedralElement(self.n, self.rot + turn, self.refl + other.refl)

    def inverse(self) -> "DihedralElement":
        if self.refl:
            return self
        return DihedralElement(self.n, -self.rot, 0)

    def one(self) -> "DihedralElement":
        return DihedralElement(self.n)

    def _key(self):
        return (self.n, self.rot, self.refl)

    def __eq__(self, other):
        if not isinstance(other, DihedralElement):
            return NotImplemented
        return self._key() == other._key()

    def __lt__(self, other):
        return self._key() < other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f"DihedralElement(n={self.n}, rot={self.rot}, refl={self.refl})"

    def __str__(self):
        parts = []
        if self.rot:
            parts.append("g1" if self.rot == 1 else f"g1^{self.rot}")
        if self.refl:
            parts.append("g2")
        return "*".join(parts) or "1"

    def as_permutation(self) -> Permutation:
        n = self.n
        g1 = Permutation._unchecked(tuple(range(2, n + 1)) + (1,))
        g2 = Permutation._unchecked(tuple(n - i for i in range(1, n)) + (n,))
        return g1**self.rot * g2**self.refl


def dihedral_stats(h: DihedralElement) -> tuple[int, int]:
    """``(rot, refl)`` read off the permutation realization of ``h``."""
    w = h.as_permutation()
    n = h.n
    rot = w(n) if w(n) != n else 0
    refl = 0 if (w(2) - w(1)) % n == 1 else 1
    return rot, refl


class DihedralGroup(FiniteGroup):
    def __init__(self, n: int):
        if n < 3:
            raise OutOfRange("dihedral groups need n >= 3")
        self.n = n
        self.name = f"D_{2 * n}"

    def identity(self) -> DihedralElement:
        return DihedralElement(self.n)

    def _enumerate(self) -> list[DihedralElement]:
        return [DihedralElement(self.n, r, s) for s in (0, 1) for r in range(self.n)]

    @property
    def g1(self) -> DihedralElement:
        return DihedralElement(self.n, 1, 0)

    @property
    def g2(self) -> DihedralElement:
        return DihedralElement(self.n, 0, 1)
