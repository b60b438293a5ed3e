import json

import pytest

from amlab.gf import make_field
from amlab.pipeline import (check_diagonal_quotient,
                            check_fibered_system_and_substitution,
                            check_fixed_field_translations,
                            check_quotient_by_translation,
                            negative_substitution_corpus, run_all)
from amlab.poly import substitute2


def all_pass(checks):
    return all(c.status == "pass" for c in checks), \
        [(c.name, c.claim, c.details) for c in checks if c.status != "pass"]


@pytest.mark.parametrize("p", [3, 5, 7])
def test_quotient_by_translation(p):
    ok, bad = all_pass(check_quotient_by_translation(p))
    assert ok, bad


def test_quotient_by_translation_covers_both_generators():
    names = [c.name for c in check_quotient_by_translation(3)]
    assert any("tau(1,0)" in n for n in names)
    assert any("tau(0,1)" in n for n in names)


@pytest.mark.parametrize("p", [3, 5, 7])
def test_diagonal_quotient(p):
    checks = check_diagonal_quotient(p)
    ok, bad = all_pass(checks)
    assert ok, bad
    genus = next(c for c in checks if c.name == "diagonal-genus")
    assert genus.details["genus"] == p - 1


def test_diagonal_quotient_nontrivial_c():
    for c in (2, 3, 4):
        ok, bad = all_pass(check_diagonal_quotient(5, c=c))
        assert ok, bad


@pytest.mark.parametrize("p", [3, 5, 7])
def test_fixed_field_translations_all_a(p):
    for a in range(1, p):
        ok, bad = all_pass(check_fixed_field_translations(p, a=a, b=0))
        assert ok, bad


@pytest.mark.parametrize("p", [3, 5, 7])
def test_fibered_system_all_a_b0(p):
    for a in range(1, p):
        checks = check_fibered_system_and_substitution(p, a=a, b=0)
        ok, bad = all_pass(checks)
        assert ok, bad
        names = [c.name for c in checks]
        assert "fibered-eliminant" in names
        assert "fibered-substitution" in names
        assert "involution-rational" in names


@pytest.mark.parametrize("p", [3, 5, 7])
def test_fibered_obstruction_all_nonzero_b(p):
    for b in range(1, p):
        checks = check_fibered_system_and_substitution(p, a=1, b=b)
        ok, bad = all_pass(checks)
        assert ok, bad
        obst = next(c for c in checks if c.name == "involution-obstruction")
        assert obst.details["solvable_in_prime_field"] is False
        assert obst.details["solvable_in_quadratic_extension"] is False
        assert obst.details["delta_degree"] == p
        # the substitution step is a b = 0 statement and must not appear
        assert not any(c.name == "fibered-substitution" for c in checks)


def test_eliminant_scalar_recorded():
    checks = check_fibered_system_and_substitution(5, a=3, b=0)
    elim = next(c for c in checks if c.name == "fibered-eliminant")
    assert elim.details["scalar"] is not None
    assert elim.details["scalar"] % 5 != 0


def test_negative_corpus_excludes_members_and_is_seeded():
    corpus1 = negative_substitution_corpus(3, 30, seed=4)
    corpus2 = negative_substitution_corpus(3, 30, seed=4)
    assert [(repr(a), repr(b)) for a, b in corpus1] == \
        [(repr(a), repr(b)) for a, b in corpus2]
    spec = make_field(3)
    f = None
    from amlab.curve import AMCurve
    f = AMCurve.of(3).defining_poly()
    for gx, gy in corpus1:
        assert substitute2(f, gx, gy) != f


@pytest.mark.parametrize("p", [3, 5, 7])
def test_run_all_passes(p):
    rep = run_all(p)
    assert rep.overall_pass
    failed = [c.name for c in rep.checks if c.status == "fail"]
    assert not failed


def test_run_all_zeta_only_at_3():
    rep3 = run_all(3)
    zeta3 = next(c for c in rep3.checks if c.name == "zeta-cross-check")
    assert zeta3.status == "pass"
    assert zeta3.details["l_coefficients"] == \
        ["1", "2", "9", "14", "40", "42", "81", "54", "81"]
    rep5 = run_all(5)
    zeta5 = next(c for c in rep5.checks if c.name == "zeta-cross-check")
    assert zeta5.status == "skipped"


def test_run_all_downgrades_are_labelled_not_passed():
    rep = run_all(11)
    aut = next(c for c in rep.checks if c.name == "automorphisms")
    assert aut.mode == "sampled"
    assert "sampled" in aut.claim or "budget" in aut.claim
    skipped = [c for c in rep.checks if c.status == "skipped"]
    assert all(c.status != "pass" for c in skipped)
    assert rep.overall_pass  # skipped checks do not count as failures


def test_report_is_deterministic():
    a = run_all(3).to_json()
    b = run_all(3).to_json()
    assert a == b
    parsed = json.loads(a)
    assert parsed["header"].startswith("forward constructions only")
    assert all("claim" in c for c in parsed["checks"])


def test_report_text_rendering():
    txt = run_all(3).to_text()
    assert "overall: PASS" in txt
    assert "zeta-cross-check" in txt


def test_every_check_carries_a_claim():
    rep = run_all(5)
    for c in rep.checks:
        assert c.claim and isinstance(c.claim, str)
        assert c.mode in ("symbolic", "exhaustive", "sampled")
