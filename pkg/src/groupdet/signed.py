"""Signed permutations ``B_n = {±1}^n ⋊ S_n``.

The sign vector is indexed by value: ``eps[i-1] == -1`` puts a bar on the
value ``i`` wherever it appears.  The product is
``(eps, u)(eps', v) = (eps * (u·eps'), uv)`` with ``(u·eps')_i = eps'_{u^-1(i)}``.
"""

from __future__ import annotations

import functools
import itertools
from typing import Sequence

from .colored import _parse_letters
from .errors import ParseError, SizeMismatch
from .groups import FiniteGroup, GroupElement, Permutation, cycle


@functools.total_ordering
class SignedPermutation(GroupElement):
    __slots__ = ("eps", "w")

    def __init__(self, eps: Sequence[int], w: Permutation):
        eps = tuple(int(e) for e in eps)
        if len(eps) != w.n or any(e not in (1, -1) for e in eps):
            raise ValueError(f"bad sign vector {eps} for {w.n} letters")
        self.eps, self.w = eps, w

    @classmethod
    def _unchecked(cls, eps: tuple, w: Permutation) -> "SignedPermutation":
        obj = object.__new__(cls)
        obj.eps, obj.w = eps, w
        return obj

    @classmethod
    def identity(cls, n: int) -> "SignedPermutation":
        return cls._unchecked((1,) * n, Permutation.identity(n))

    @classmethod
    def parse(cls, text: str) -> "SignedPermutation":
        """``"2'1 4 3'"``: a prime marks a barred (negative) value."""
        letters = _parse_letters(text)
        if any(c > 1 for _, c in letters):
            raise ParseError("signed letters carry at most one prime")
        try:
            w = Permutation(v for v, _ in letters)
        except ValueError as exc:
            raise ParseError(str(exc)) from None
        eps = [1] * w.n
        for v, c in letters:
            if c:
                eps[v - 1] = -1
        return cls(eps, w)

    @classmethod
    def from_signed_word(cls, word: Sequence[int]) -> "SignedPermutation":
        """From the signed letters, e.g. ``(-2, 1, 4, -3)``."""
        w = Permutation(abs(v) for v in word)
        eps = [1] * w.n
        for v in word:
            if v < 0:
                eps[-v - 1] = -1
        return cls(eps, w)

    @property
    def n(self) -> int:
        return self.w.n

    def signed_word(self) -> tuple[int, ...]:
        eps = self.eps
        return tuple(eps[v - 1] * v for v in self.w.images)

    def __mul__(self, other: "SignedPermutation") -> "SignedPermutation":
        return smul(self, other)

    def inverse(self) -> "SignedPermutation":
        # eps * (u·eps') = 1 forces eps'_j = eps_{u(j)}
        return SignedPermutation._unchecked(
            tuple(self.eps[v - 1] for v in self.w.images), self.w.inverse()
        )

    def one(self) -> "SignedPermutation":
        return SignedPermutation.identity(self.n)

    def _key(self):
        return (self.w.images, self.eps)

    def __eq__(self, other):
        if not isinstance(other, SignedPermutation):
            return NotImplemented
        return self._key() == other._key()

    def __lt__(self, other):
        return self._key() < other._key()

    def __hash__(self):
        return hash(self._key())

    def __str__(self):
        return " ".join(f"{abs(v)}'" if v < 0 else str(v) for v in self.signed_word())

    def __repr__(self):
        return f"SignedPermutation({str(self)!r})"


def smul(a: SignedPermutation, b: SignedPermutation) -> SignedPermutation:
    if a.n != b.n:
        raise SizeMismatch("signed permutations of different sizes")
    # (u·eps')_i = eps'_{u^-1(i)}, i.e. position u(j) receives eps'_j
    acted = [0] * a.n
    for j, uj in enumerate(a.w.images):
        acted[uj - 1] = b.eps[j]
    eps = tuple([x * y for x, y in zip(a.eps, acted)])
    return SignedPermutation._unchecked(eps, a.w * b.w)


def _b_key(v: int) -> tuple[int, int]:
    # 0 <_B 1 <_B ... <_B n <_B n' <_B ... <_B 1'
    return (0, v) if v >= 0 else (1, v)


def a_descents(g: SignedPermutation) -> set[int]:
    word = (0,) + g.signed_word()  # sentinel w_0 = 0
    return {i for i in range(0, g.n) if word[i] > word[i + 1]}


def b_descents(g: SignedPermutation) -> set[int]:
    n = g.n
    word = g.signed_word() + (n + 1,)  # sentinel w_{n+1} = n+1
    return {i for i in range(1, n + 1) if _b_key(word[i - 1]) > _b_key(word[i])}


def maj_A(g: SignedPermutation) -> int:
    return sum(a_descents(g))


def maj_B(g: SignedPermutation) -> int:
    return sum(b_descents(g))


def neg_stats(g: SignedPermutation) -> tuple[frozenset, int, int]:
    """``(Neg, nneg, sneg)``."""
    neg = frozenset(i for i, e in enumerate(g.eps, 1) if e < 0)
    return neg, len(neg), sum(neg)


def s_gen(k: int, n: int) -> SignedPermutation:
    """``s_k = (eps^(k), t_k)``; ``s_1`` only flips the sign of 1."""
    eps = [1] * n
    eps[k - 1] = -1
    return SignedPermutation._unchecked(tuple(eps), cycle(k, n))


def u_gen(k: int, n: int) -> SignedPermutation:
    return SignedPermutation._unchecked((1,) * n, cycle(k, n))


def sorted_representative(g: SignedPermutation) -> SignedPermutation:
    """The element of ``g S_n`` whose signed letters increase (``maj_A == 0``)."""
    word = sorted(g.signed_word())
    return SignedPermutation._unchecked(g.eps, Permutation._unchecked(tuple(abs(v) for v in word)))


class SignedPermutationGroup(FiniteGroup):
    def __init__(self, n: int):
        if n < 1:
            raise ValueError("n must be positive")
        self.n = n
        self.name = f"B_{n}"

    def identity(self) -> SignedPermutation:
        return SignedPermutation.identity(self.n)

    def _enumerate(self) -> list[SignedPermutation]:
        signs = list(itertools.product((1, -1), repeat=self.n))
        return [
            SignedPermutation._unchecked(eps, Permutation._unchecked(p))
            for p in itertools.permutations(range(1, self.n + 1))
            for eps in signs
        ]
