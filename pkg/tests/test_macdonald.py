from fractions import Fraction

import pytest

from comphomfly.partitions import Partition
from comphomfly.qexact import parse_expr
from comphomfly import macdonald as md
from comphomfly.symfunc import partitions_of

P = Partition.parse
QT = ("q", "t")


def test_p1_is_the_monomial_sum():
    p = md.macdonald_p(P("1"), 3)
    assert set(p.coeffs) == {(1, 0, 0)}
    assert p.coeffs[(1, 0, 0)] == md.QTF_ONE


def test_p2_two_variables():
    p = md.macdonald_p(P("2"), 2)
    expected = md.QTFraction(parse_expr("(1+q)*(1-t)", QT), parse_expr("1-q*t", QT))
    assert p.coeffs[(2, 0)] == md.QTF_ONE
    assert p.coeffs[(1, 1)] == expected


def test_elementary_at_t_eq_q():
    # P_[1,1] is e_2 = s_[1,1] identically (its single coefficient is 1)
    p = md.macdonald_p(P("1,1"), 2)
    assert set(p.coeffs) == {(1, 1)}
    assert p.coeffs[(1, 1)] == md.QTF_ONE


def _t_eq_q_equal(a, b):
    lhs = (a.num * b.den).substitute({"t": (1, {"q": 1})})
    rhs = (b.num * a.den).substitute({"t": (1, {"q": 1})})
    return lhs == rhs


def test_schur_degeneration():
    for size in range(0, 5):
        for lam in partitions_of(size):
            for n in range(max(1, len(lam)), 5):
                p = md.macdonald_p(lam, n)
                s = md.schur_restricted(lam, n)
                for key in set(p.coeffs) | set(s.coeffs):
                    assert _t_eq_q_equal(
                        p.coeffs.get(key, md.QTF_ZERO),
                        s.coeffs.get(key, md.QTF_ZERO),
                    ), (lam, n, key)


def test_triangularity_and_orthogonality():
    for size in range(1, 5):
        for lam in partitions_of(size):
            p = md._restrict(lam, size)
            for key in p.coeffs:
                mu = Partition(int(e) for e in key)
                assert md._dominates(lam, mu)
            for mu in partitions_of(size):
                if mu == lam or not md._dominates(lam, mu):
                    continue
                assert not md.pairing_with_monomial(p, mu), (lam, mu)


def test_symlaurent_symmetry_under_transposition():
    import random

    rng = random.Random(9)
    p = md.macdonald_p(P("2,1"), 3)
    monomials = p.monomials()
    for _ in range(20):
        exps = rng.choice(list(monomials))
        i, j = rng.sample(range(3), 2)
        swapped = list(exps)
        swapped[i], swapped[j] = swapped[j], swapped[i]
        assert monomials[tuple(swapped)] == monomials[exps]


def test_evaluation_formula_examples():
    assert md.evaluation_formula(P("0") if False else Partition(), 2) == md.QTF_ONE
    v = md.evaluation_formula(P("1"), 1)
    assert v == md.QTFraction(
        parse_expr("t^(-1/2)*(1-t^2)", QT), parse_expr("1-t", QT)
    )
    cross = md.principal_specialization(md.macdonald_p(P("1"), 3), 3)
    assert cross == md.evaluation_formula(P("1"), 2)


def test_principal_specialization_examples():
    one = md.SymLaurent(2, {(0, 0): 1})
    assert md.principal_specialization(one, 2) == md.QTF_ONE
    p1 = md.principal_specialization(md.macdonald_p(P("1"), 2), 2)
    assert p1 == md.QTFraction(parse_expr("t^(1/2) + t^(-1/2)", QT))
    p2 = md.principal_specialization(md.macdonald_p(P("2"), 2), 2)
    assert p2 == md.evaluation_formula(P("2"), 1)


def test_evaluation_against_specialization_full_range():
    for size in range(1, 5):
        for lam in partitions_of(size):
            for rank in range(max(1, len(lam)), 4):
                n = rank + 1
                if n > md.MAX_VARIABLES:
                    continue
                lhs = md.principal_specialization(md.macdonald_p(lam, n), n)
                rhs = md.evaluation_formula(lam, rank)
                assert lhs == rhs, (lam, rank)


def test_duality_full_range():
    for size in range(1, 5):
        for lam in partitions_of(size):
            for n in range(max(1, len(lam)), 4):
                report = md.duality_check(lam, n)
                assert report.ok, (lam, n, report.detail)


def test_rank_bounds():
    with pytest.raises(md.RankBoundError):
        md.macdonald_p(P("5"), 4)
    with pytest.raises(md.RankBoundError):
        md.macdonald_p(P("1"), 5)
    with pytest.raises(md.RankBoundError):
        md.macdonald_p(P("1,1,1"), 2)
    with pytest.raises(md.RankBoundError):
        md.evaluation_formula(P("1"), 4)


def test_qtfraction_reduction_and_equality():
    a = md.QTFraction(parse_expr("1 - q^2", QT), parse_expr("1 - q", QT))
    assert a == md.QTFraction(parse_expr("1 + q", QT))
    b = md.QTFraction(parse_expr("(1+q)*(1-t^2)", QT), parse_expr("(1-t)*(1+q)", QT))
    assert b == md.QTFraction(parse_expr("1 + t", QT))
    c = md.QTFraction(parse_expr("1 - q*t", QT), parse_expr("1 - t", QT))
    assert c + (-c) == md.QTF_ZERO
    assert c * md.QTFraction(parse_expr("1 - t", QT)) == md.QTFraction(
        parse_expr("1 - q*t", QT)
    )
