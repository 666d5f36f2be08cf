import random
from fractions import Fraction

import pytest

from comphomfly.qexact import (
    Bracket,
    BracketProduct,
    InexactDivisionError,
    Laurent,
    ResidualRankError,
    SignedExponentError,
    SymExponent,
    SymMonomial,
    bracket_at_rank,
    bracket_numerator,
    bracket_to_fraction,
    dumps_poly,
    eh_poly,
    exact_divide,
    loads_poly,
    parse_expr,
    sym_to_qa,
    tilde_normalize,
)

QA = ("q", "a")
QTA = ("q", "t", "a")


def random_laurent(rng, vars=QA, terms=4, span=3, halves=True):
    out = Laurent.zero(vars)
    denom = 2 if halves else 1
    for _ in range(terms):
        exps = {
            v: Fraction(rng.randint(-span * denom, span * denom), denom)
            for v in vars
        }
        out = out + Laurent.monomial(vars, rng.randint(-4, 4), **exps)
    return out


def test_ring_axioms():
    rng = random.Random(17)
    for _ in range(60):
        a = random_laurent(rng)
        b = random_laurent(rng)
        c = random_laurent(rng)
        assert a + b == b + a
        assert a * b == b * a
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a - a == Laurent.zero(QA)
        assert a * Laurent.one(QA) == a


def test_exact_divide_round_trip():
    rng = random.Random(101)
    done = 0
    while done < 500:
        a = random_laurent(rng, terms=rng.randint(1, 5))
        b = random_laurent(rng, terms=rng.randint(1, 4))
        if not a or not b:
            continue
        done += 1
        assert exact_divide(a * b, b) == a


def test_exact_divide_examples():
    q = Laurent.var(QA, "q")
    half = Laurent.monomial(QA, 1, q=Fraction(1, 2))
    haft = Laurent.monomial(QA, 1, q=Fraction(-1, 2))
    assert exact_divide(q - parse_expr("q^-1", QA), half - haft) == half + haft
    x = parse_expr("3*a*q^-2 - 7*a^2", QA)
    assert exact_divide(x, Laurent.one(QA)) == x
    a_half = Laurent.monomial(QA, 1, a=Fraction(1, 2))
    a_haft = Laurent.monomial(QA, 1, a=Fraction(-1, 2))
    assert exact_divide(parse_expr("a - a^-1", QA), a_half - a_haft) == a_half + a_haft


def test_exact_divide_failure_carries_remainder():
    with pytest.raises(InexactDivisionError) as err:
        exact_divide(parse_expr("q^2 + 1", QA), parse_expr("q + 1", QA))
    assert err.value.remainder is not None
    assert err.value.remainder


def test_substitute_examples():
    p = parse_expr("a^2 + a", QTA)
    out = p.substitute({"a": (-1, {"t": 3})})
    assert out == parse_expr("t^6 - t^3", ("q", "t"))
    hd = parse_expr("1 + q*t + a*q", QTA)
    out = hd.substitute({"t": (1, {"q": 1}), "a": (-1, {"a": 1})})
    assert out == parse_expr("1 + q^2 - a*q", QA)
    bad = Laurent.monomial(QTA, 1, a=Fraction(1, 2))
    with pytest.raises(SignedExponentError):
        bad.substitute({"a": (-1, {"t": Fraction(1, 2)})})


def test_tilde_normalize():
    p = parse_expr("q^2*t + q^3*t^2", ("q", "t"))
    norm, extracted = tilde_normalize(p)
    assert norm == parse_expr("1 + q*t", ("q", "t"))
    assert extracted == {"q": 2, "t": 1}
    mono = Laurent.monomial(QA, 1, q=-3, a=2)
    norm, extracted = tilde_normalize(mono)
    assert norm == Laurent.one(QA)
    already = parse_expr("1 + q*t + a*q", QTA)
    norm, extracted = tilde_normalize(already)
    assert norm == already and not any(extracted.values())


def test_sym_exponent_algebra():
    e = SymExponent.make(0, Fraction(-1, 2), 0, Fraction(1, 2))
    assert (e + (-e)).is_rank_free()
    scaled = e.scale(-6)
    assert scaled == SymExponent.make(0, 3, 0, -3)
    assert e.at_rank(2) == Fraction(-3, 4)
    assert not e.is_rank_free()


def test_sym_monomial_and_lowering():
    theta = SymMonomial(1, SymExponent.make(0, -1, 0, 0))
    assert sym_to_qa(theta) == Laurent.monomial(QA, 1, a=-1)
    assert sym_to_qa(SymMonomial.one()) == Laurent.one(QA)
    with pytest.raises(ResidualRankError):
        sym_to_qa(SymMonomial(1, SymExponent.make(0, Fraction(-1, 2), 0, Fraction(1, 2))))
    with pytest.raises(SignedExponentError):
        SymMonomial(-1, SymExponent.make()).power(Fraction(3, 2))
    assert SymMonomial(-1, SymExponent.make()).power(2).sign == 1


def test_bracket_fraction():
    numer, count = bracket_to_fraction(Bracket(0, 1))
    assert count == 1 and exact_divide(numer, eh_poly()) == Laurent.one(QA)
    numer, _ = bracket_to_fraction(Bracket(0, 2))
    assert exact_divide(numer, eh_poly()) == parse_expr("q^(1/2) + q^(-1/2)", QA)
    numer, _ = bracket_to_fraction(Bracket(1, -1))
    assert numer == parse_expr("a^(1/2)*q^(-1/2) - a^(-1/2)*q^(1/2)", QA)


def test_bracket_finite_rank():
    eh_q = eh_poly().substitute({"a": (1, {})})
    for u, v in [(0, 2), (1, 0), (1, -1), (1, 3), (2, -1)]:
        b = Bracket(u, v)
        for N in range(2, 7):
            numer = bracket_numerator(b).substitute({"a": (1, {"q": N})})
            assert exact_divide(numer, eh_q) == bracket_at_rank(b, N), (u, v, N)


def test_bracket_product_canonical_form():
    bp = BracketProduct(
        num=[Bracket(1, 1), Bracket(0, 1), Bracket(0, 2)],
        den=[Bracket(0, 2), Bracket(1, -1)],
    )
    assert bp.num == (Bracket(1, 1),)
    assert bp.den == (Bracket(1, -1),)
    flipped = BracketProduct(num=[Bracket(-1, 1)])
    assert flipped.prefactor.sign == -1 and flipped.num == (Bracket(1, -1),)
    with pytest.raises(ValueError):
        BracketProduct(num=[Bracket(0, 0)])
    assert BracketProduct.one().render() == "1"
    assert bp.render() == "[N+1]/[N-1]"


def test_serialization_round_trip():
    rng = random.Random(3)
    for vars in (QA, QTA, ("q",)):
        for _ in range(20):
            p = random_laurent(rng, vars=vars, terms=6)
            text = dumps_poly(p, {"id": "x", "source": "unit test"})
            loaded, meta = loads_poly(text)
            assert loaded == p
            assert dumps_poly(loaded, {"id": "x", "source": "unit test"}) == text
            assert meta["source"] == "unit test"


def test_serialization_checksum_detects_damage():
    p = parse_expr("1 + 2*q*t - a*q^3", QTA)
    text = dumps_poly(p, {"id": "x"})
    lines = text.splitlines()
    lines[-1] = lines[-1].replace("2", "3", 1) if "2" in lines[-1] else lines[-1] + "9"
    with pytest.raises(ValueError, match="checksum"):
        loads_poly("\n".join(lines))


def test_parse_expr():
    assert parse_expr("(1+q)^2", QA) == parse_expr("1 + 2*q + q^2", QA)
    assert parse_expr("q^(-1/2)*a", QA) == Laurent.monomial(QA, 1, q=Fraction(-1, 2), a=1)
    assert parse_expr("-3 + q/q", QA) == parse_expr("-2", QA)
    with pytest.raises(ValueError):
        parse_expr("1 + x", QA)


def test_canonical_order_is_deterministic():
    p = parse_expr("a*q^-1 + a*q - a^2", QA)
    assert [f for f, _ in p.sorted_terms()] == [
        (Fraction(-1), Fraction(1)),
        (Fraction(1), Fraction(1)),
        (Fraction(0), Fraction(2)),
    ]
    assert str(p) == "q^-1*a + q*a - a^2"
