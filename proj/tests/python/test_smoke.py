import pathlib

import pytest

import gdconf

FIXTURES = pathlib.Path(__file__).resolve().parents[2] / "fixtures"


def test_check_fixtures():
    assert gdconf.check(FIXTURES / "virasoro.json")["status"] == "pass"
    report = gdconf.check(FIXTURES / "broken-table.json")
    assert report["status"] == "fail"
    assert report["witnesses"]


def test_malformed():
    with pytest.raises(gdconf.ParseError):
        gdconf.check(FIXTURES / "malformed.json")


def test_virasoro_bracket():
    vir = gdconf.load(FIXTURES / "virasoro.json")
    assert vir.basis == ["v"]
    r = gdconf.bracket(vir, "v", "v")
    assert r["details"]["bracket"] == "(T+2λ)·v"
    assert r["details"]["n_products"] == ["T·v", "2·v"]
    assert r["details"]["N"] == 2
    assert gdconf.nprod(vir, "T*v", "v", 2)["details"]["n_products"] == ["-4·v"]
    with pytest.raises(gdconf.ParseError):
        gdconf.bracket(vir, "w", "v")


def test_envelope_sl2():
    sl2 = gdconf.load(FIXTURES / "cur-sl2.json")
    reports = gdconf.envelope(sl2)
    assert [r["check"] for r in reports][:2] == ["lemma1-residual", "locality-certificate"]
    assert all(r["status"] == "pass" for r in reports)


def test_vir_small():
    basis, independence, dependence, adjoint = gdconf.vir(2, 2, 2)
    assert basis["status"] == "fail"
    assert independence["status"] == "pass"
    assert dependence["details"]["h_v2v"] == "1/2*T"
    assert adjoint["status"] == "pass"


def test_lemma2_and_ci():
    assert gdconf.lemma2(3, 2)["status"] == "pass"
    table = gdconf.ci_table(4)
    assert table[3]["c"] == ["8", "19", "9", "1"]


def test_abelian_overflow():
    assert gdconf.abelian_kernel(1, 1)["status"] == "truncation-overflow"
