import pathlib
import shutil

import pytest

from comphomfly.partitions import Partition
from comphomfly.qexact import Laurent, dumps_poly, loads_poly, tilde_normalize
from comphomfly import verify

P = Partition.parse


@pytest.fixture(scope="module")
def fixtures():
    return verify.load_fixtures()


def test_fixture_inventory(fixtures):
    assert len(fixtures) == 22
    for fixture in fixtures.values():
        assert fixture.source, fixture.id
        assert fixture.poly
    assert "3_2:hd_1-1__1-1" in fixtures
    assert "4_3:had" in fixtures


def test_fixtures_reparse_bit_exactly(fixtures):
    root = verify.fixture_root()
    for path in sorted(root.glob("*/*.poly")):
        text = path.read_text()
        poly, meta = loads_poly(text)
        meta.pop("checksum", None)
        assert dumps_poly(poly, meta) == text, path


def test_hd_fixtures_a0_tilde_normalized(fixtures):
    for fid in verify.HD_FIXTURE_IDS:
        a0 = fixtures[fid].poly.coefficient_of("a", 0)
        norm, extracted = tilde_normalize(a0)
        assert not any(extracted.values()), fid
        constant = norm.terms.get(tuple([0] * len(norm.vars)))
        assert constant == 1, fid


def test_connection_suite(fixtures):
    reports = verify.suite_connection(fixtures)
    assert len(reports) == 9  # eight colors plus the annulus-variable bridge
    assert all(r.status == "PASS" for r in reports), [r.line() for r in reports]
    printed = [r for r in reports if "printed" in r.note]
    assert len(printed) == 6


def test_duality_suite(fixtures):
    reports = verify.suite_duality(fixtures)
    assert all(r.status == "PASS" for r in reports), [r.line() for r in reports]
    ids = [r.check_id for r in reports]
    assert "color-exchange:3_2:negative-control" in ids


def test_evaluation_suite(fixtures):
    reports = verify.suite_evaluation(fixtures)
    failures = [r for r in reports if r.status == "FAIL"]
    assert not failures, [r.line() for r in failures]
    skips = [r.check_id for r in reports if r.status == "SKIP"]
    assert skips == ["q1-eval:3_2:hd_1__1-1-1"]
    degrees = {
        r.check_id: r for r in reports if r.check_id.startswith("a-degree")
    }
    assert all(r.conjecture for r in degrees.values())
    # the explicitly stated degree values
    for fid, value in [
        ("3_2:hd_1__1", 3),
        ("3_2:hd_1__1-1-1", 5),
        ("3_2:hd_1-1__2", 5),
        ("3_2:hd_1-1__1-1", 6),
    ]:
        assert fixtures[fid].poly.degree("a") == value


def test_exceptional_suite(fixtures):
    reports = verify.suite_exceptional(fixtures)
    by_id = {r.check_id: r for r in reports}
    assert by_id["exceptional:3_2:had:E8"].status == "PASS"
    assert by_id["exceptional:3_2:had:E7"].status == "PASS"
    assert by_id["exceptional:3_2:had:A2"].status == "PASS"
    assert by_id["exceptional:3_2:had:A1"].status == "PASS"
    assert by_id["exceptional:3_2:had:D4"].status == "SKIP"
    assert by_id["exceptional:3_2:had:E6"].status == "SKIP"
    assert by_id["exceptional:4_3:had:E8"].status == "SKIP"
    assert by_id["exceptional:4_3:had:A1"].status == "PASS"
    assert by_id["canceling:3_2:had"].status == "PASS"
    assert by_id["canceling:4_3:had"].status == "PASS"
    assert not any(r.status == "FAIL" for r in reports)


def test_exceptional_series_nu_values():
    values = {e.tag: e.nu for e in verify.EXCEPTIONAL_SERIES}
    from fractions import Fraction

    assert values == {
        "A1": Fraction(1, 3),
        "A2": Fraction(1, 2),
        "D4": Fraction(1),
        "E6": Fraction(2),
        "E7": Fraction(3),
        "E8": Fraction(5),
    }


def test_perturbed_fixture_fails_with_diff(fixtures):
    original = fixtures["3_2:hd_1__1"]
    damaged_terms = dict(original.poly.terms)
    key = next(iter(damaged_terms))
    damaged_terms[key] += 1
    damaged = verify.Fixture(
        id=original.id,
        knot=original.knot,
        color=original.color,
        poly=Laurent(original.poly.vars, damaged_terms),
        source=original.source,
    )
    report = verify.check_connection(damaged, (2, -2))
    assert report.status == "FAIL"
    assert report.left and report.right


def test_corrupted_fixture_file_detected(tmp_path):
    src = verify.fixture_root()
    dst = tmp_path / "fixtures"
    shutil.copytree(src, dst)
    target = dst / "3_2" / "hd_0__1.poly"
    lines = target.read_text().splitlines()
    lines[-1] = lines[-1].replace("1", "2", 1)
    target.write_text("\n".join(lines) + "\n")
    with pytest.raises(ValueError, match="checksum"):
        verify.load_fixtures(dst)


def test_hyperpolynomial_reconstruction_from_refined_pair(fixtures):
    """Rebuild the trefoil hyperpolynomial from the two refined fixtures.

    Within each q-block the two refined polynomials pair term by term in
    t-lexicographic order with matching signs; the a-power of each pair is
    the unique solution of t8 - 5x = t7 - 3x.  The rebuilt polynomial must
    equal the transcribed hyperpolynomial exactly, which cross-validates
    all three transcriptions at once.
    """
    from fractions import Fraction

    e8 = fixtures["3_2:jd_e8"].poly
    e7 = fixtures["3_2:jd_e7"].poly
    had = fixtures["3_2:had"].poly

    def by_q(p):
        out = {}
        for (qe, te), c in p.terms.items():
            out.setdefault(qe, []).append((te, c))
        return {k: sorted(v) for k, v in out.items()}

    g8, g7 = by_q(e8), by_q(e7)
    assert set(g8) == set(g7)
    rebuilt = Laurent.zero(("q", "t", "a"))
    for qe in g8:
        assert len(g8[qe]) == len(g7[qe]), qe
        for (t8, c8), (t7, c7) in zip(g8[qe], g7[qe]):
            assert c8 == c7, (qe, t8, t7)
            x = Fraction(t8 - t7, 2)
            assert x.denominator == 1 and x >= 0
            sign = c8 * (1 if int(x) % 2 == 0 else -1)
            rebuilt = rebuilt + Laurent.monomial(
                ("q", "t", "a"), sign, q=qe, t=t8 - 5 * x, a=x
            )
    assert rebuilt == had


def test_run_suite_all_deterministic(fixtures):
    first = [r.line() for r in verify.run_suite("all", fixtures)]
    second = [r.line() for r in verify.run_suite("all", fixtures)]
    assert first == second
    counts = verify.summarize(verify.run_suite("all", fixtures))
    assert counts["FAIL"] == 0
    with pytest.raises(KeyError):
        verify.run_suite("bogus", fixtures)
