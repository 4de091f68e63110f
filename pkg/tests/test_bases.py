import random

import pytest

from groupdet.bases import (
    BasisSpec,
    amaj_basis,
    colored_basis,
    dihedral_basis,
    factor_amaj,
    factor_colored,
    factor_dihedral,
    factor_signed,
    factor_sym,
    recompose_amaj,
    recompose_colored,
    recompose_signed,
    recompose_sym,
    search_factorization,
    signed_basis,
    sym_basis,
    verify_basis,
)
from groupdet.colored import ColoredPermutation, ColoredPermutationGroup, amaj, col, fmaj, tilde_t
from groupdet.errors import CardinalityMismatch
from groupdet.groups import DihedralElement, DihedralGroup, Permutation, SymmetricGroup, maj, order
from groupdet.poly import MultiPoly
from groupdet.representations import GroupRingElement, cyclic_sum
from groupdet.signed import SignedPermutation, SignedPermutationGroup, maj_A, neg_stats, s_gen

SMALL_COLORED = [(n, m) for n, m in [(1, 2), (1, 5), (2, 2), (2, 3), (2, 4), (3, 2)]]


def test_verify_basis_examples():
    g1 = Permutation.from_cycles(3, [(1, 2, 3)])
    g2 = Permutation.from_cycles(3, [(1, 2)])
    assert verify_basis(SymmetricGroup(3), BasisSpec((g1, g2), (3, 2)))
    for n in range(3, 9):
        assert verify_basis(DihedralGroup(n), dihedral_basis(n))
    e = Permutation.identity(3)
    assert not verify_basis(SymmetricGroup(3), BasisSpec((e, e), (3, 2)))
    with pytest.raises(CardinalityMismatch):
        verify_basis(SymmetricGroup(3), BasisSpec((g1, g2), (3, 3)))


def test_factor_sym_examples():
    assert factor_sym(Permutation.parse("132")) == (1, 1)
    assert search_factorization(sym_basis(3), Permutation.parse("132")) == (1, 1)
    assert factor_sym(Permutation.identity(5)) == (0, 0, 0, 0)
    w = Permutation.parse("314652")
    cs = factor_sym(w)
    assert sum(cs) == 10
    assert cs == search_factorization(sym_basis(6), w)


def test_factor_colored_examples():
    g = ColoredPermutation.parse("1'3 4''2'", 3)
    assert factor_colored(g) == (6, 1, 2, 1)
    assert sum(factor_colored(g)) == fmaj(g) == 10
    assert factor_colored(ColoredPermutation.identity(4, 3)) == (0, 0, 0, 0)
    assert factor_colored(tilde_t(3, 3, 3) ** 4) == (4, 0, 0)


def test_factor_signed_examples():
    g = SignedPermutation.parse("2'1 4 3'")
    d, c = factor_signed(g)
    assert d == (0, 1, 1, 0)
    assert sum(c) == maj_A(g) == 3
    assert recompose_signed(d, c, 4) == g
    assert factor_signed(SignedPermutation.identity(3)) == ((0, 0, 0), (0, 0))
    assert factor_signed(s_gen(2, 2)) == ((0, 1), (0,))


def test_factor_amaj_examples():
    g = ColoredPermutation(Permutation.identity(3), (2, 0, 1), 3)
    assert factor_amaj(g) == ((0, 0), (2, 0, 1))
    assert factor_amaj(ColoredPermutation.identity(3, 2)) == ((0, 0), (0, 0, 0))
    rng = random.Random(9)
    elems = ColoredPermutationGroup(3, 2).elements()
    for g in rng.sample(elems, 20):
        c, d = factor_amaj(g)
        assert recompose_amaj(c, d, 3, 2) == g
        assert sum(c) == amaj(g)


def test_factor_dihedral_examples():
    assert factor_dihedral(DihedralElement(5)) == (0, 0)
    assert factor_dihedral(DihedralElement(5, 0, 1)) == (0, 1)
    g1, g2 = DihedralElement(8, 1, 0), DihedralElement(8, 0, 1)
    assert factor_dihedral(g1**3 * g2) == (3, 1)


@pytest.mark.parametrize("n", range(1, 6))
def test_symmetric_laws(n):
    spec = sym_basis(n)
    seen = set()
    for w in SymmetricGroup(n):
        cs = factor_sym(w)
        assert all(0 <= c < k for c, k in zip(cs, spec.bounds))
        assert recompose_sym(cs, n) == w
        assert sum(cs) == maj(w)
        seen.add(cs)
    assert len(seen) == len(SymmetricGroup(n))
    if n >= 2:
        assert verify_basis(SymmetricGroup(n), spec)
        assert spec.is_perfect()


@pytest.mark.parametrize("n,m", SMALL_COLORED)
def test_colored_laws(n, m):
    G = ColoredPermutationGroup(n, m)
    spec = colored_basis(n, m)
    amaj_spec = amaj_basis(n, m)
    seen = set()
    for g in G:
        cs = factor_colored(g)
        assert recompose_colored(cs, n, m) == g
        assert sum(cs) == fmaj(g)
        seen.add(cs)
        c, d = factor_amaj(g)
        assert recompose_amaj(c, d, n, m) == g
        assert sum(c) == amaj(g) and sum(d) == col(g)
    assert len(seen) == len(G)
    assert verify_basis(G, spec) and spec.is_perfect()
    if n >= 2:
        assert verify_basis(G, amaj_spec) and amaj_spec.is_perfect()


def test_colored_factorization_matches_search_oracle():
    spec = colored_basis(3, 2)
    for g in ColoredPermutationGroup(3, 2):
        assert factor_colored(g) == search_factorization(spec, g)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_signed_laws(n):
    G = SignedPermutationGroup(n)
    spec = signed_basis(n)
    seen = set()
    for g in G:
        d, c = factor_signed(g)
        assert recompose_signed(d, c, n) == g
        assert d + c == search_factorization(spec, g)
        assert sum(c) == maj_A(g)
        assert {i for i, di in enumerate(d, 1) if di} == neg_stats(g)[0]
        seen.add(d + c)
    assert len(seen) == len(G)
    assert verify_basis(G, spec)


def test_signed_basis_is_not_perfect():
    assert signed_basis(1).is_perfect()
    for n in range(2, 5):
        spec = signed_basis(n)
        assert not spec.is_perfect()
        for k in range(2, n + 1):
            assert spec.bounds[k - 1] == 2 and order(spec.elements[k - 1]) == 2 * k


@pytest.mark.parametrize("n", range(3, 9))
def test_dihedral_laws(n):
    spec = dihedral_basis(n)
    assert spec.is_perfect()
    for h in DihedralGroup(n):
        cs = factor_dihedral(h)
        assert spec.compose(cs) == h
        assert cs == search_factorization(spec, h)


def _sum_with_exponent_weights(G, spec, variables):
    """sum_g x^c(g) g, with c(g) from the exhaustive table."""
    xs = [MultiPoly.var(v) for v in variables]
    coeffs = {}
    for cs in spec.exponent_vectors():
        mono = MultiPoly(1)
        for x, c in zip(xs, cs):
            mono = mono * x**c
        coeffs[spec.compose(cs)] = mono
    return GroupRingElement(coeffs)


@pytest.mark.parametrize("G,spec", [
    (SymmetricGroup(3), BasisSpec((Permutation.from_cycles(3, [(1, 2, 3)]), Permutation.from_cycles(3, [(1, 2)])), (3, 2))),
    (SymmetricGroup(3), sym_basis(3)),
    (DihedralGroup(4), dihedral_basis(4)),
])
def test_group_ring_factorization(G, spec):
    variables = [f"x{i}" for i in range(1, len(spec.elements) + 1)]
    product = GroupRingElement.basis_element(G.identity())
    for g, m, v in zip(spec.elements, spec.bounds, variables):
        product = product * cyclic_sum(g, m, v)
    assert product == _sum_with_exponent_weights(G, spec, variables)

    # multiplying by prod (1 - x_i g_i) collapses to a scalar (perfect bases only)
    assert spec.is_perfect()
    one = GroupRingElement.basis_element(G.identity())
    collapsed = product
    for g, v in reversed(list(zip(spec.elements, variables))):
        collapsed = collapsed * (one + GroupRingElement.basis_element(g) * (-MultiPoly.var(v)))
    scalar = MultiPoly(1)
    for m, v in zip(spec.bounds, variables):
        scalar = scalar * (1 - MultiPoly.var(v) ** m)
    assert collapsed == one * scalar
