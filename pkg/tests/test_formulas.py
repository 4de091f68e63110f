import json
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from groupdet.errors import DegreeBoundExceeded, NonIntegerExponent
from groupdet.formulas import (
    SIGNED_VARIANTS,
    FactoredProduct,
    fp_equal,
    integer_exponent,
    one_minus,
    q_factorial,
    q_integer,
    rhs_amaj,
    rhs_defining,
    rhs_dihedral,
    rhs_fmaj,
    rhs_inv,
    rhs_irrep,
    rhs_maj,
    rhs_maj_col,
    rhs_signed,
    rhs_signed_spec,
    theta_pairs,
)
from groupdet.groups import SymmetricGroup, inversions, maj
from groupdet.matrix import det_bareiss
from groupdet.poly import MultiPoly, evaluate
from groupdet.representations import inv_weight, maj_weight, regular_det, regular_matrix

q, p = MultiPoly.var("q"), MultiPoly.var("p")


def factors_of(fp):
    return [(str(b), e) for b, e in fp.factors]


def test_q_factorial():
    assert q_factorial(0) == 1
    assert q_factorial(1) == 1
    assert q_factorial(3) == 1 + 2 * q + 2 * q**2 + q**3
    for n in range(1, 7):
        dist = MultiPoly()
        for w in SymmetricGroup(n):
            dist = dist + q ** maj(w)
        assert q_factorial(n) == dist
    assert q_integer(4) == 1 + q + q**2 + q**3
    assert q_integer(0) == 0


def test_rhs_maj():
    assert rhs_maj(2) == 1 - q**2
    assert factors_of(rhs_maj(3)) == [("1 - q^2", 3), ("1 - q^3", 4)]
    assert rhs_maj(1) == 1 and rhs_maj(1).factors == ()
    assert factors_of(rhs_maj(4)) == [("1 - q^2", 12), ("1 - q^3", 16), ("1 - q^4", 18)]


def test_rhs_fmaj():
    assert rhs_fmaj(1, 2) == 1 - q**2
    assert rhs_fmaj(2, 1) == 1 - q**2
    assert factors_of(rhs_fmaj(2, 2)) == [("1 - q^2", 4), ("1 - q^4", 6)]


def test_rhs_maj_col():
    for n, m in [(2, 2), (3, 2), (2, 3)]:
        assert rhs_maj_col(n, m).substitute({"p": q**m}) == rhs_fmaj(n, m)
    for n in range(1, 5):
        assert rhs_maj_col(n, 1).substitute({"p": q}) == rhs_maj(n)
    assert rhs_maj_col(1, 2) == 1 - q**2


def test_rhs_amaj():
    assert rhs_amaj(1, 2) == 1 - q**2
    # the 8x8 bivariate determinant gives (1-q^2)^8 (1-p^2)^4
    assert factors_of(rhs_amaj(2, 2)) == [("1 - q^2", 8), ("1 - p^2", 4)]
    for n in range(1, 5):
        assert rhs_amaj(n, 1).substitute({"p": q}) == rhs_maj(n)


def test_rhs_signed():
    q1, q2 = MultiPoly.var("q_1"), MultiPoly.var("q_2")
    assert rhs_signed(1) == 1 - q1**2
    assert rhs_signed(2) == (1 - q1**2) ** 4 * (1 - q2**4) ** 2 * (1 - p**2) ** 4


def test_rhs_signed_specializations():
    assert rhs_signed_spec(1, "nneg") == 1 - q**2
    assert rhs_signed_spec(2, "majB") == (1 - q**2) ** 8 * (1 - q**4) ** 2
    assert rhs_signed_spec(2, "sneg") == (1 - q**2) ** 4 * (1 - q**8) ** 2 * (1 - p**2) ** 4
    for n in range(1, 5):
        nneg = rhs_signed(n).substitute({f"q_{i}": q for i in range(1, n + 1)})
        sneg = rhs_signed(n).substitute({f"q_{i}": q**i for i in range(1, n + 1)})
        assert fp_equal(nneg, rhs_signed_spec(n, "nneg"), mode="modular")
        assert fp_equal(nneg.substitute({"p": q}), rhs_signed_spec(n, "majB"), mode="modular")
        assert fp_equal(sneg, rhs_signed_spec(n, "sneg"), mode="modular")
    with pytest.raises(ValueError):
        rhs_signed_spec(2, "bogus")


def test_merged_specialization_matches_by_factors():
    merged = rhs_signed(2).substitute({"q_1": q, "q_2": q}).substitute({"p": q}).normalized()
    assert factors_of(merged) == [("1 - q^2", 8), ("1 - q^4", 2)]


def test_rhs_dihedral_and_defining():
    x1, x2 = MultiPoly.var("x1"), MultiPoly.var("x2")
    assert rhs_dihedral(3) == (1 - x1**3) ** 4 * (1 - x2**2) ** 3
    for n in range(1, 6):
        assert rhs_defining(n) == (1 - q) ** comb(n, 2) * q_factorial(n) ** (n - 1)


def test_theta_pairs_formula():
    assert theta_pairs(4, 4) == (1 - q**4) * (1 - q**2)
    assert theta_pairs(5, 3) == (1 - q) * (1 - q**3) ** 3
    with pytest.raises(ValueError):
        theta_pairs(3, 1)


def test_rhs_irrep_shapes():
    assert rhs_irrep([2, 2]) == (1 - q) * (1 - q**3) * (1 - q**4) ** 2
    assert rhs_irrep([3]) == q_factorial(3)
    assert rhs_irrep([3, 1]) == q_factorial(4) ** 2 * (1 - q) ** 6
    with pytest.raises(ValueError):
        rhs_irrep([3, 2])


def test_rhs_inv_matches_inversion_determinant():
    for n in (2, 3):
        assert regular_det(SymmetricGroup(n), inv_weight()) == rhs_inv(n)
    assert sum(1 for w in SymmetricGroup(3) if inversions(w) == 1) == 2


def test_exponents_are_positive_integers():
    builders = [
        lambda n, m: rhs_maj(n),
        rhs_fmaj,
        rhs_maj_col,
        rhs_amaj,
        lambda n, m: rhs_signed(n),
        lambda n, m: rhs_signed_spec(n, "sneg"),
        lambda n, m: rhs_inv(n),
    ]
    for n in range(1, 9):
        for m in range(1, 6):
            for build in builders:
                fp = build(n, m)
                assert all(isinstance(e, int) and e >= 1 for _, e in fp.factors)


def test_constant_term_is_one():
    for n in range(1, 5):
        for fp in [rhs_maj(n), rhs_fmaj(n, 2), rhs_maj_col(n, 2), rhs_amaj(n, 3), rhs_signed(n), rhs_defining(n)]:
            zero = {v: 0 for v in fp.variables}
            assert fp.evaluate(zero) == 1
        for which in SIGNED_VARIANTS:
            fp = rhs_signed_spec(n, which)
            assert fp.evaluate({v: 0 for v in fp.variables}) == 1


def test_integer_exponent():
    assert integer_exponent(6) == 6
    with pytest.raises(NonIntegerExponent):
        integer_exponent(0.5)


def test_expand_examples():
    assert FactoredProduct([(1 - q**2, 1)]).expand() == 1 - q**2
    big = rhs_maj(3).expand()
    assert big == (1 - q**2) ** 3 * (1 - q**3) ** 4
    assert big.degree() == 18 and evaluate(big, {"q": 0}) == 1
    assert FactoredProduct().expand() == 1
    with pytest.raises(DegreeBoundExceeded):
        rhs_maj(6).expand(max_terms=1000)


def test_fp_equal_examples():
    assert fp_equal(FactoredProduct([(1 - q**2, 1), (1 + q**2, 1)]), 1 - q**4)
    s3_matrix = regular_matrix(SymmetricGroup(3), maj_weight())
    assert fp_equal(rhs_maj(3), det_bareiss(s3_matrix))
    assert not fp_equal(FactoredProduct([(1 - q**2, 1)]), 1 - q**3)
    assert not fp_equal(FactoredProduct([(1 - q**2, 1)]), 1 - q**3, mode="modular")
    assert fp_equal(rhs_maj(5), rhs_maj(5).normalized(), mode="modular")


def test_equality_is_not_by_factor_list():
    a = FactoredProduct([(1 - q**2, 2)])
    b = FactoredProduct([(1 - q, 2), (1 + q, 2)])
    assert a == b
    assert factors_of(a) != factors_of(b)


def test_text_and_json_round_trip():
    fp = rhs_maj(3)
    assert str(fp) == "(1-q^2)^3*(1-q^3)^4"
    assert str(FactoredProduct()) == "1"
    data = fp.to_dict()
    assert data == {"factors": [{"base": "1-q^2", "exp": 3}, {"base": "1-q^3", "exp": 4}]}
    assert FactoredProduct.from_json(fp.to_json()) == fp
    assert factors_of(FactoredProduct.parse(str(fp))) == factors_of(fp)
    signed = FactoredProduct([(1 - q**2, 1)], unit=-1)
    assert json.loads(signed.to_json())["unit"] == -1
    assert FactoredProduct.from_dict(signed.to_dict()) == -(1 - q**2)


def test_no_auto_merge():
    fp = FactoredProduct([(1 - q**2, 1), (1 - q**2, 2)])
    assert len(fp.factors) == 2
    assert factors_of(fp.normalized()) == [("1 - q^2", 3)]


@settings(max_examples=200, deadline=None)
@given(st.lists(st.tuples(st.integers(1, 6), st.integers(1, 4)), max_size=4))
def test_modular_and_symbolic_comparison_agree(spec):
    a = FactoredProduct([(one_minus("q", k), e) for k, e in spec])
    b = a.normalized()
    assert fp_equal(a, b) and fp_equal(a, b, mode="modular")
    c = a * FactoredProduct([(one_minus("q", 7), 1)])
    assert not fp_equal(a, c) and not fp_equal(a, c, mode="modular")

