from __future__ import annotations

from fractions import Fraction

import pytest

from oracles import gamma_oracle, legendre_euler
from padic_hyper import theorems
from padic_hyper.errors import UnknownTheorem
from padic_hyper.registry import Verdict, check_case, list_theorems, lookup, sample_z, sweep

F = Fraction


def test_gauss_example_at_13():
    res = check_case("thm-1.2-gauss", 13, ["1/3", "1/4"])
    assert res.verdict is Verdict.HOLDS
    m = 169
    expected = -gamma_oracle(F(5, 12), 13) * pow(gamma_oracle(F(2, 3), 13) * gamma_oracle(F(3, 4), 13), -1, m) % m
    assert res.lhs == res.rhs == str(expected)


def test_gauss_example_at_7():
    res = check_case("thm-1.2-gauss", 7, [F(1, 2), F(1, 2)])
    assert res.verdict is Verdict.HOLDS
    assert res.modulus == 49


def test_watson_vanishing_example():
    res = check_case("thm-2.10-watson", 7, ["1/2", "1/3"])
    assert res.verdict is Verdict.HOLDS
    assert res.lhs == "0"


def test_watson_condition_not_met():
    res = check_case("thm-2.10-watson", 7, ["1/2", "5/6"])
    assert res.verdict is Verdict.CONDITION_NOT_MET
    assert res.detail == "<-y>_p < p/2"


def test_p_equal_two_and_non_integral_are_unmet():
    assert check_case("thm-1.2-gauss", 2, ["1/3", "1/3"]).verdict is Verdict.CONDITION_NOT_MET
    res = check_case("thm-1.2-gauss", 5, ["1/5", "1/3"])
    assert res.verdict is Verdict.CONDITION_NOT_MET
    assert "integral" in res.detail


def test_arity_and_z_are_validated():
    with pytest.raises(ValueError):
        check_case("thm-1.2-gauss", 5, ["1/3"])
    with pytest.raises(ValueError):
        check_case("eq-1.7-sun", 5, ["1/3"])


def test_lookup_and_listing():
    with pytest.raises(UnknownTheorem):
        lookup("nonexistent")
    d = lookup("thm-13.1-dflst")
    assert d.arity == 0 and d.mode == "numeric"
    assert lookup("eq-1.7-sun-poly").mode == "polynomial"
    ids = [t.id for t in list_theorems()]
    assert len(ids) == len(set(ids))
    assert all(t.anchor for t in list_theorems())


def test_empty_prime_range_gives_empty_report():
    rep = sweep("thm-1.2-gauss", (24, 28))
    assert rep.cases == 0 and rep.ok


def test_sweep_is_deterministic_and_independent_of_jobs():
    a = sweep("thm-4.2", (3, 13), z_samples=3, seed=42)
    b = sweep("thm-4.2", (3, 13), z_samples=3, seed=42)
    c = sweep("thm-4.2", (3, 13), z_samples=3, seed=42, jobs=2)
    for other in (b, c):
        assert (a.cases, a.counts, a.branches, a.unmet_reasons) == (
            other.cases,
            other.counts,
            other.branches,
            other.unmet_reasons,
        )
    assert a.ok


def test_z_samples_are_seeded_units():
    st = lookup("thm-4.2")
    zs = sample_z(st, 11, 20, seed=3)
    assert zs == sample_z(st, 11, 20, seed=3)
    assert len(zs) == len(set(zs)) == 20
    assert all(z.numerator % 11 for z in zs)


def test_every_case_gets_exactly_one_verdict():
    for info in list_theorems():
        rep = sweep(info.id, (2, 11), z_samples=2)
        assert sum(rep.counts.values()) == rep.cases
        assert rep.ok, (info.id, rep.failures[:2], rep.errors[:2])


def test_mortenson_to_499():
    rep = sweep("eq-1.5-mortenson", (5, 499))
    assert rep.ok and rep.holds == 4 * 93
    assert rep.unmet_reasons == {"1/5 is not 5-integral": 1, "x in {1/2, 1/3, 1/4, 1/6}": 92}


def test_mortenson_sign_is_the_legendre_symbol():
    for p, x, d in [(13, "1/3", -3), (11, "1/4", -2), (17, "1/6", -1), (19, "1/2", -1)]:
        res = check_case("eq-1.5-mortenson", p, [x])
        assert res.verdict is Verdict.HOLDS
        assert int(res.rhs) == legendre_euler(d, p) % (p * p)


def test_polynomial_mode_reports_coefficient_lists():
    res = check_case("thm-2.1-poly", 5, ["1/2"])
    assert res.verdict is Verdict.HOLDS
    assert res.lhs.startswith("[") and res.lhs == res.rhs


def test_complete_gauss_at_unit_lower_parameter_is_the_gauss_entry():
    """2F1[x,y;1|1] truncated at <-1> = p-1 is the same sum in both entries."""
    for p in (7, 11, 13):
        for x in ("1/2", "1/3", "1/4", "5/6"):
            for y in ("1/3", "3/4", "1/12"):
                full = check_case("thm-4.1", p, [x, y, 1])
                gauss = check_case("thm-1.2-gauss", p, [x, y])
                assert gauss.verdict is Verdict.HOLDS
                assert full.verdict is Verdict.HOLDS
                assert full.lhs == gauss.lhs


def test_unit_hypothesis_is_needed(monkeypatch):
    """Without p not dividing x the Gamma_p reductions break, and only at x = 0 mod p."""
    monkeypatch.setattr(theorems, "_off_p", lambda x, p: None)
    seen = 0
    for tid in ("cor-2.27", "thm-2.11", "thm-5f4-b", "eq-2.60-4f3-minus1-b"):
        rep = sweep(tid, (3, 13), z_samples=1)
        assert rep.failures
        assert all(f.params[0].numerator % f.p == 0 for f in rep.failures)
        seen += len(rep.failures)
    assert seen > 0
