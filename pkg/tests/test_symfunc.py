import random

import pytest

from comphomfly.partitions import EMPTY, Partition, compose_at_N, conjugate
from comphomfly import symfunc as sf

P = Partition.parse


def test_lr_coefficient_examples():
    assert sf.lr_coefficient(P("1"), P("2"), P("3")) == 1
    assert sf.lr_coefficient(P("2,1"), P("1"), P("2,2")) == 1
    for lam in (EMPTY, P("2"), P("3,1")):
        for nu in (lam, P("4")):
            assert sf.lr_coefficient(lam, EMPTY, nu) == (1 if nu == lam else 0)
    # wrong size is always zero
    assert sf.lr_coefficient(P("1"), P("1"), P("3")) == 0


def test_lr_symmetry():
    cases = [(P("2,1"), P("2"), P("3,2")), (P("2,1"), P("2,1"), P("3,2,1"))]
    for lam, mu, nu in cases:
        assert sf.lr_coefficient(lam, mu, nu) == sf.lr_coefficient(mu, lam, nu)
    assert sf.lr_coefficient(P("2,1"), P("2,1"), P("3,2,1")) == 2


def test_schur_product_examples():
    assert sf.schur_product(P("1"), P("1")) == {P("2"): 1, P("1,1"): 1}
    assert sf.schur_product(P("3,1"), EMPTY) == {P("3,1"): 1}
    assert sf.schur_product(P("2,1"), P("1")) == {
        P("3,1"): 1,
        P("2,2"): 1,
        P("2,1,1"): 1,
    }


def test_schur_product_dimensions():
    # multiplicity-weighted dimension count matches the product of dimensions
    for lam, mu, nvars in [(P("2"), P("2,1"), 4), (P("1,1"), P("2"), 4)]:
        lhs = sum(sf.schur_monomials(lam, nvars).values()) * sum(
            sf.schur_monomials(mu, nvars).values()
        )
        rhs = sum(
            c * sum(sf.schur_monomials(nu, nvars).values())
            for nu, c in sf.schur_product(lam, mu).items()
        )
        assert lhs == rhs


def test_characters():
    for mu in sf.partitions_of(4):
        assert sf.sym_character(P("4"), mu) == 1
    assert sf.sym_character(P("1,1"), P("2")) == -1
    assert sf.sym_character(P("2,1"), P("1,1,1")) == 2
    with pytest.raises(sf.SizeMismatchError):
        sf.sym_character(P("2"), P("1,1,1"))


def test_character_cache_eviction():
    sf.character_cache.clear()
    values = {}
    for lam in sf.partitions_of(5):
        for mu in sf.partitions_of(5):
            values[(lam, mu)] = sf.sym_character(lam, mu)
    rng = random.Random(5)
    keys = sf.character_cache.keys()
    sf.character_cache.evict(rng.sample(keys, len(keys) // 2))
    for (lam, mu), expected in values.items():
        assert sf.sym_character(lam, mu) == expected


def test_conjugacy_size():
    assert sf.conjugacy_size(P("1,1,1,1")) == 1
    assert sf.conjugacy_size(P("2")) == 1
    assert sf.conjugacy_size(P("2,1")) == 3
    assert sf.zclass(P("2,2,1")) == 8


def test_adams_examples():
    assert sf.adams_coefficients(P("1"), 2) == {P("2"): 1, P("1,1"): -1}
    assert sf.adams_coefficients(P("1"), 3) == {
        P("3"): 1,
        P("2,1"): -1,
        P("1,1,1"): 1,
    }
    for lam in (EMPTY, P("2,1"), P("3")):
        assert sf.adams_coefficients(lam, 1) == {lam: 1}


def test_adams_key_sizes():
    for lam in (P("1"), P("2"), P("2,1")):
        for r in (2, 3):
            for nu in sf.adams_coefficients(lam, r):
                assert nu.size() == r * lam.size()


def brute_force_adams(lam, r, nvars):
    """Independent oracle: expand s_lam(x^r) monomially and re-collect."""
    monomials = sf.schur_monomials(lam, nvars)
    scaled = {tuple(r * e for e in exps): c for exps, c in monomials.items()}
    return sf.monomial_to_schur(scaled, nvars)


def test_adams_brute_force_oracle():
    for size in range(0, 4):
        for lam in sf.partitions_of(size):
            for r in (1, 2, 3):
                nvars = 4
                expected = brute_force_adams(lam, r, nvars)
                full = sf.adams_coefficients(lam, r)
                truncated = {nu: c for nu, c in full.items() if len(nu) <= nvars}
                assert truncated == expected, (lam, r)


def test_adams_specialization_dimensions():
    # both sides of the Adams expansion agree at x_1 = ... = x_k = 1
    for size in range(1, 4):
        for lam in sf.partitions_of(size):
            for r in (2, 3):
                expansion = sf.adams_coefficients(lam, r)
                for k in range(1, 5):
                    lhs = sum(sf.schur_monomials(lam, k).values())
                    rhs = sum(
                        c * sum(sf.schur_monomials(nu, k).values())
                        for nu, c in expansion.items()
                    )
                    assert lhs == rhs, (lam, r, k)


def test_composite_character_examples():
    assert sf.composite_character_expansion(EMPTY, P("3,1")) == {(EMPTY, P("3,1")): 1}
    assert sf.composite_character_expansion(P("1"), P("1")) == {
        (P("1"), P("1")): 1,
        (EMPTY, EMPTY): -1,
    }
    assert sf.composite_character_expansion(P("1"), P("2")) == {
        (P("1"), P("2")): 1,
        (EMPTY, P("1")): -1,
    }


def test_composite_product_examples():
    assert sf.composite_product_expansion(EMPTY, P("2,1")) == {(EMPTY, P("2,1")): 1}
    assert sf.composite_product_expansion(P("1"), P("1")) == {
        (P("1"), P("1")): 1,
        (EMPTY, EMPTY): 1,
    }
    assert sf.composite_product_expansion(P("1"), EMPTY) == {(P("1"), EMPTY): 1}


def test_character_product_round_trip():
    # expanding the composite character and recombining the products must
    # reproduce the single composite character, for all small colors
    for a in range(0, 4):
        for b in range(0, 4):
            for lam in sf.partitions_of(a):
                for mu in sf.partitions_of(b):
                    acc = {}
                    for (nu, xi), c in sf.composite_character_expansion(
                        lam, mu
                    ).items():
                        for key, k in sf.composite_product_expansion(nu, xi).items():
                            acc[key] = acc.get(key, 0) + c * k
                    acc = {k: v for k, v in acc.items() if v}
                    assert acc == {(lam, mu): 1}, (lam, mu)


def test_composite_adams_reduction_and_table():
    for mu in (P("1"), P("2,1")):
        for r in (1, 2):
            expected = {
                (EMPTY, nu): c for nu, c in sf.adams_coefficients(mu, r).items()
            }
            assert sf.composite_adams(EMPTY, mu, r) == expected
    table = sf.composite_adams(P("1"), P("1"), 2)
    assert table == {
        (P("2"), P("2")): 1,
        (P("2"), P("1,1")): -1,
        (P("1,1"), P("2")): -1,
        (P("1,1"), P("1,1")): 1,
        (EMPTY, EMPTY): 1,
    }


def test_composite_adams_order_symmetry():
    shapes = [EMPTY, P("1"), P("2"), P("1,1")]
    for lam in shapes:
        for mu in shapes:
            for r in (2, 3):
                forward = sf.composite_adams(lam, mu, r)
                backward = sf.composite_adams(mu, lam, r)
                assert forward == {
                    (g, b): c for (b, g), c in backward.items()
                }, (lam, mu, r)


def test_format_expansion_golden():
    expansion = sf.composite_adams(P("1"), P("1"), 2)
    assert sf.format_expansion(expansion).splitlines() == [
        "2|2\t1",
        "2|1,1\t-1",
        "1,1|2\t-1",
        "1,1|1,1\t1",
        "0|0\t1",
    ]
    single = sf.adams_coefficients(P("1"), 2)
    assert sf.format_expansion(single) == "2\t1\n1,1\t-1"


def _reduced(expansion, N):
    from comphomfly.partitions import reduce_columns

    out = {}
    for nu, c in expansion.items():
        key = reduce_columns(nu, N)
        out[key] = out.get(key, 0) + c
    return {k: v for k, v in out.items() if v}


def test_composite_adams_finite_rank_oracle():
    shapes = [EMPTY, P("1"), P("2"), P("1,1")]
    for lam in shapes:
        for mu in shapes:
            base = max(len(lam) + len(mu), 1)
            for r in (1, 2, 3):
                expansion = sf.composite_adams(lam, mu, r)
                for N in range(base, base + 4):
                    zeta = compose_at_N(lam, mu, N)
                    direct = _reduced(sf.adams_at_rank(zeta, r, N), N)
                    assembled = {}
                    for (beta, gamma), c in expansion.items():
                        for key, k in sf.composite_schur_at_rank(
                            beta, gamma, N
                        ).items():
                            assembled[key] = assembled.get(key, 0) + c * k
                    assembled = {k: v for k, v in assembled.items() if v}
                    assert assembled == direct, (lam, mu, r, N)
                    # keys that fit at this rank project to plain diagrams
                    from comphomfly.partitions import reduce_columns

                    for (beta, gamma), c in expansion.items():
                        if len(beta) + len(gamma) <= N:
                            shape = reduce_columns(compose_at_N(beta, gamma, N), N)
                            assert sf.composite_schur_at_rank(beta, gamma, N) == {
                                shape: 1
                            }, (beta, gamma, N)
