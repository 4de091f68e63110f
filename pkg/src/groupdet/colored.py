"""Colored permutations ``S_n^m = S_n ⋉ (Z/m)^n``.

An element ``(w, x)`` is displayed as the one-line word of ``w`` with ``x[k]``
primes after the letter in position ``k``: ``(1342, (1,0,2,1))`` prints as
``"1' 3 4'' 2'"``.  The product is ``(g, x)(h, y) = (gh, (x·h) + y)`` with
``(x·h)_i = x_{h(i)}``.
"""

from __future__ import annotations

import functools
import itertools
import re
from dataclasses import dataclass
from typing import Sequence

from .errors import OutOfRange, ParseError, ShapeMismatch
from .groups import FiniteGroup, GroupElement, Permutation, cycle, maj


@dataclass(frozen=True)
class ColoredLetter:
    value: int
    color: int

    def key(self) -> tuple[int, int]:
        # n > ... > 1 > n' > ... > 1' > n'' > ...
        return (-self.color, self.value)

    def __str__(self):
        return f"{self.value}" + "'" * self.color


def letter_less(a: ColoredLetter, b: ColoredLetter) -> bool:
    return a.key() < b.key()


@functools.total_ordering
class ColoredPermutation(GroupElement):
    __slots__ = ("w", "x", "m")

    def __init__(self, w: Permutation, x: Sequence[int], m: int):
        if m < 1:
            raise OutOfRange("m must be positive")
        x = tuple(int(c) % m for c in x)
        if len(x) != w.n:
            raise ShapeMismatch(f"color vector of length {len(x)} for {w.n} letters")
        self.w, self.x, self.m = w, x, m

    @classmethod
    def _unchecked(cls, w: Permutation, x: tuple, m: int) -> "ColoredPermutation":
        obj = object.__new__(cls)
        obj.w, obj.x, obj.m = w, x, m
        return obj

    @classmethod
    def identity(cls, n: int, m: int) -> "ColoredPermutation":
        return cls._unchecked(Permutation.identity(n), (0,) * n, m)

    @classmethod
    def parse(cls, text: str, m: int) -> "ColoredPermutation":
        """Parse ``"1'3 4''2'"``; values are single digits unless space-separated."""
        letters = _parse_letters(text)
        for _, c in letters:
            if c >= m:
                raise ParseError(f"color {c} out of range for m={m}")
        try:
            w = Permutation(v for v, _ in letters)
        except ValueError as exc:
            raise ParseError(str(exc)) from None
        return cls(w, [c for _, c in letters], m)

    @property
    def n(self) -> int:
        return self.w.n

    def letters(self) -> list[ColoredLetter]:
        return [ColoredLetter(v, c) for v, c in zip(self.w.images, self.x)]

    def __mul__(self, other: "ColoredPermutation") -> "ColoredPermutation":
        return cmul(self, other)

    def inverse(self) -> "ColoredPermutation":
        # (g, x)(g^-1, y) = (1, x·g^-1 + y) = 1  =>  y = -(x·g^-1)
        winv = self.w.inverse()
        y = tuple((-self.x[j - 1]) % self.m for j in winv.images)
        return ColoredPermutation._unchecked(winv, y, self.m)

    def one(self) -> "ColoredPermutation":
        return ColoredPermutation.identity(self.n, self.m)

    def _key(self):
        return (self.m, self.w.images, self.x)

    def __eq__(self, other):
        if not isinstance(other, ColoredPermutation):
            return NotImplemented
        return self._key() == other._key()

    def __lt__(self, other):
        return self._key() < other._key()

    def __hash__(self):
        return hash(self._key())

    def __str__(self):
        return " ".join(str(letter) for letter in self.letters())

    def __repr__(self):
        return f"ColoredPermutation({str(self)!r}, m={self.m})"


_LETTER = re.compile(r"(\d+)('*)")


def _parse_letters(text: str) -> list[tuple[int, int]]:
    """Signed/colored letter words: primes count bars after each value."""
    text = text.strip()
    if not text:
        raise ParseError("empty permutation")
    chunks = text.split()
    multi_digit = len(chunks) > 1 and all(re.fullmatch(r"\d+'*", c) for c in chunks)
    out = []
    for chunk in chunks:
        pattern = _LETTER if multi_digit else re.compile(r"(\d)('*)")
        pos = 0
        while pos < len(chunk):
            mt = pattern.match(chunk, pos)
            if not mt:
                raise ParseError(f"cannot parse {text!r} near {chunk[pos:]!r}")
            out.append((int(mt.group(1)), len(mt.group(2))))
            pos = mt.end()
    return out


def cmul(a: ColoredPermutation, b: ColoredPermutation) -> ColoredPermutation:
    if a.m != b.m or a.n != b.n:
        raise ShapeMismatch("colored permutations of different shape")
    m = a.m
    ax = a.x
    x = tuple([(ax[h - 1] + y) % m for h, y in zip(b.w.images, b.x)])
    return ColoredPermutation._unchecked(a.w * b.w, x, m)


def cmaj(g: ColoredPermutation) -> int:
    keys = [(-c, v) for v, c in zip(g.w.images, g.x)]
    return sum(i for i in range(1, len(keys)) if keys[i - 1] > keys[i])


def col(g: ColoredPermutation) -> int:
    return sum(g.x)


def fmaj(g: ColoredPermutation) -> int:
    return g.m * cmaj(g) + col(g)


def amaj(g: ColoredPermutation) -> int:
    return maj(g.w)


def tilde_t(k: int, n: int, m: int) -> ColoredPermutation:
    """``(t_k, b)`` with ``b = (1, 0, ..., 0)``; ``tilde_t(1)`` only recolors position 1."""
    return ColoredPermutation._unchecked(cycle(k, n), (1 % m,) + (0,) * (n - 1), m)


def color_unit(i: int, n: int, m: int) -> ColoredPermutation:
    """``y^(i)``: the identity with a single color on position ``i``."""
    x = [0] * n
    x[i - 1] = 1 % m
    return ColoredPermutation._unchecked(Permutation.identity(n), tuple(x), m)


def uncolored(w: Permutation, m: int) -> ColoredPermutation:
    return ColoredPermutation._unchecked(w, (0,) * w.n, m)


def transversal_split(g: ColoredPermutation) -> tuple[ColoredPermutation, Permutation]:
    """``g = h * w`` with ``cmaj(h) == 0`` and ``w`` uncolored."""
    keys = [(-c, v) for v, c in zip(g.w.images, g.x)]
    # position i of h shows the letter of g at position winv(i)
    winv = Permutation(sorted(range(1, g.n + 1), key=lambda j: keys[j - 1]))
    w = winv.inverse()
    h = g * uncolored(winv, g.m)
    return h, w


class ColoredPermutationGroup(FiniteGroup):
    def __init__(self, n: int, m: int):
        if n < 1 or m < 1:
            raise OutOfRange("n and m must be positive")
        self.n, self.m = n, m
        self.name = f"S_{n}^{m}"

    def identity(self) -> ColoredPermutation:
        return ColoredPermutation.identity(self.n, self.m)

    def _enumerate(self) -> list[ColoredPermutation]:
        colorings = list(itertools.product(range(self.m), repeat=self.n))
        return [
            ColoredPermutation._unchecked(Permutation._unchecked(p), x, self.m)
            for p in itertools.permutations(range(1, self.n + 1))
            for x in colorings
        ]

    def tilde_t(self, k: int) -> ColoredPermutation:
        return tilde_t(k, self.n, self.m)
