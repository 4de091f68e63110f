import itertools
import random

import pytest

from groupdet.colored import (
    ColoredLetter,
    ColoredPermutation,
    ColoredPermutationGroup,
    amaj,
    cmaj,
    cmul,
    col,
    fmaj,
    letter_less,
    tilde_t,
    transversal_split,
    uncolored,
)
from groupdet.errors import ShapeMismatch
from groupdet.groups import Permutation, SymmetricGroup, maj, order


def C(text, m):
    return ColoredPermutation.parse(text, m)


def test_powers_of_tilde_t3():
    t = tilde_t(3, 3, 3)
    assert [str(t**k) for k in range(4)] == ["1 2 3", "3' 1 2", "2' 3' 1", "1' 2' 3'"]
    assert t**3 == C("1'2'3'", 3)


def test_tilde_t4_sixth_power():
    g = tilde_t(4, 4, 3) ** 6
    assert str(g) == "3'' 4'' 1' 2'"
    assert cmaj(g) == 0 and col(g) == 6 and fmaj(g) == 6


def test_identity_is_neutral():
    G = ColoredPermutationGroup(3, 2)
    for a in G:
        assert cmul(a, G.identity()) == a
    with pytest.raises(ShapeMismatch):
        cmul(tilde_t(2, 2, 2), tilde_t(2, 2, 3))


def test_letter_order():
    three, four2, one1, two1 = (ColoredLetter(3, 0), ColoredLetter(4, 2), ColoredLetter(1, 1), ColoredLetter(2, 1))
    assert letter_less(four2, three) and not letter_less(three, four2)
    assert letter_less(one1, three)
    assert letter_less(four2, two1)
    assert letter_less(ColoredLetter(1, 0), ColoredLetter(2, 0))
    assert letter_less(ColoredLetter(1, 1), ColoredLetter(2, 1))


def test_statistics_examples():
    g = C("1'3 4''2'", 3)
    assert (cmaj(g), col(g), fmaj(g)) == (2, 4, 10)
    assert fmaj(C("13 4''2'", 3)) == 9
    ident = ColoredPermutation.identity(4, 3)
    assert cmaj(ident) == col(ident) == fmaj(ident) == amaj(ident) == 0
    assert amaj(C("1'3''4 2", 3)) == maj(Permutation.parse("1342")) == 3
    assert amaj(C("3'2'1'", 2)) == 3
    assert amaj(C("1'2''3'4", 3)) == 0


def test_parse_render_round_trip():
    for n, m in [(2, 3), (3, 2), (2, 4)]:
        for g in ColoredPermutationGroup(n, m):
            assert C(str(g), m) == g


def test_cmaj_matches_letter_order():
    for g in ColoredPermutationGroup(3, 3):
        letters = g.letters()
        expected = sum(i for i in range(1, g.n) if letter_less(letters[i], letters[i - 1]))
        assert cmaj(g) == expected


@pytest.mark.parametrize("n,m", [(2, 2), (2, 3), (3, 2)])
def test_group_axioms(n, m):
    from math import factorial

    G = ColoredPermutationGroup(n, m)
    elems = G.elements()
    assert len(elems) == len(set(elems)) == factorial(n) * m**n
    e = G.identity()
    for a in elems:
        assert a * a.inverse() == e == a.inverse() * a
    for a, b, c in itertools.product(elems, repeat=3):
        assert (a * b) * c == a * (b * c)


def test_order_of_tilde_t():
    for n in range(1, 5):
        for m in range(1, 4):
            for k in range(1, n + 1):
                assert order(tilde_t(k, n, m)) == m * k


def test_symmetric_group_embeds():
    for n, m in [(3, 2), (3, 3)]:
        G = ColoredPermutationGroup(n, m)
        plain = [g for g in G if col(g) == 0]
        assert len(plain) == len(SymmetricGroup(n))
        for u in SymmetricGroup(n):
            for v in SymmetricGroup(n):
                assert uncolored(u, m) * uncolored(v, m) == uncolored(u * v, m)


@pytest.mark.parametrize("n,m", [(2, 2), (3, 2), (2, 3), (3, 3), (4, 2)])
def test_transversal(n, m):
    G = ColoredPermutationGroup(n, m)
    T = [h for h in G if cmaj(h) == 0]
    assert len(T) == m**n
    Tset = set(T)
    for g in G:
        h, w = transversal_split(g)
        assert h in Tset
        assert h * uncolored(w, m) == g
        assert col(g) == col(h)
        assert cmaj(g) == maj(w)
        # uniqueness: exactly one h in T with h^-1 g uncolored
        assert sum(1 for t in T if col(t.inverse() * g) == 0 and (t.inverse() * g).x == (0,) * n) == 1


def test_random_inverse_two_sided():
    rng = random.Random(4)
    for _ in range(200):
        n, m = rng.randint(1, 6), rng.randint(1, 5)
        images = list(range(1, n + 1))
        rng.shuffle(images)
        g = ColoredPermutation(Permutation(images), [rng.randrange(m) for _ in range(n)], m)
        e = ColoredPermutation.identity(n, m)
        assert g * g.inverse() == e == g.inverse() * g
