from fractions import Fraction

import pytest

import rsdl


def test_field_info():
    info = rsdl.field_info("q=3^2")
    assert (info["p"], info["e"], info["q"]) == (3, 2, 9)
    assert len(info["modulus"]) == 3


def test_counts_match_closed_form():
    hist = rsdl.count_n_all("q=5", "x^3", 2)
    assert hist[:4] == [8, 11, 4, 2]
    assert sum(hist) == 25
    monomial = rsdl.count_n_all("q=5", "x^2", 2)
    assert [rsdl.knopfmacher_nxk(5, 2, r) for r in range(3)] == monomial[:3]
    assert rsdl.main_term(5, 2, 0, 2) == Fraction(10)


def test_count_m_and_n2():
    assert rsdl.count_m("q=5", "x^3", 2, 1) == 25
    assert rsdl.count_n2("q=5", "1+2*x", 0, 3, 1) >= 0


def test_verify_bound_rows():
    rows = rsdl.verify_bound("q=7", "x^4+3*x^3", 2)
    assert [row["r"] for row in rows] == list(range(5))
    assert all(row["holds"] for row in rows)


def test_rs_metrics():
    assert sum(rsdl.distance_distribution("q=5", 2, [0, 1, 4, 4, 1])) == 25
    assert rsdl.classify("q=5", 2, [0, 1, 4, 4, 1]) in {"DeepHole", "Ordinary", "Neither", "Both"}
    census = rsdl.census("q=3", 1)
    assert census["deep_holes"] == 6
    assert census["covering_radius"] == 2


def test_errors_carry_kind():
    with pytest.raises(rsdl.RsdlError) as info:
        rsdl.field_info("q=6")
    assert info.value.kind == "NotPrime"
    with pytest.raises(rsdl.RsdlError) as info:
        rsdl.count_n_all("q=9", "x^6", 5, budget=1000)
    assert info.value.kind == "BudgetExceeded"


def test_cli_and_verify():
    code, out, _ = rsdl.run_cli(["--field", "q=3", "census", "--k", "1"])
    assert code == 0 and out
    summaries = rsdl.verify("sieve", "--k", 4, "--trials", 10)
    assert summaries and all(s["passed"] for s in summaries)
