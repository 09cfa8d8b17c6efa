"""Smoke tests for the Python bindings."""

import pytest

import lcrit


def test_arith():
    assert lcrit.kronecker(-3, 5) == -1
    assert lcrit.kronecker(-11, 15) == 1
    assert lcrit.is_fundamental_discriminant(-4)
    assert not lcrit.is_fundamental_discriminant(9)
    assert lcrit.isqrt(297) == 17
    assert lcrit.is_prime(571)


def test_forms_and_genus():
    assert lcrit.enumerate_forms(32, 33, "1/3") == [(-32, 17, -2)]
    assert lcrit.enumerate_forms(32, 33, "0") == []
    assert lcrit.genus_character(-3, (-32, 17, -2)) == 1
    assert lcrit.genus_character(-4, (-27, 2, 1)) == 1


def test_registry():
    assert lcrit.levels() == [11, 14, 15, 17, 19, 20, 21, 24, 27, 32, 36, 49]
    row = lcrit.level_data(32)
    assert (row["d0"], row["x1"], row["x2"]) == (-3, "0", "1/3")
    assert lcrit.table_condition(32, -11)
    assert not lcrit.table_condition(32, -7)


def test_verdicts():
    v = lcrit.vanishing_verdict(32, -4219)
    assert (v["f_x1"], v["f_x2"], v["vanishes"]) == (6, 9, False)
    assert lcrit.f_sum(27, -4, -7, "1/2")["value"] == 2
    assert lcrit.congruent_verdict(219)["verdict"] == "congruent assuming BSD"
    assert lcrit.congruent_verdict(11)["unconditional"]
    assert lcrit.parity_test(571)["odd"]
    assert lcrit.cubes_verdict(31)["vanishes"]


def test_errors_map_to_exceptions():
    with pytest.raises(lcrit.PreconditionError, match="violated"):
        lcrit.vanishing_verdict(32, -7)
    with pytest.raises(lcrit.Error):
        lcrit.congruent_verdict(10)
    assert issubclass(lcrit.PreconditionError, RuntimeError)


def test_scan_matches_across_workers():
    one = lcrit.scan(32, -3, -1500, workers=1)
    many = lcrit.scan(32, -3, -1500, workers=8)
    assert one == many
    good = lcrit.scan(32, -3, -250, good_only=True)
    assert {r["D"] for r in good} >= {-11, -19, -35, -219}


def test_oracle():
    a = lcrit.coefficients(32, 30)
    assert a[:5] == [1, 0, 0, 0, -2]
    assert a[24] == -1
    assert lcrit.twisted_l_value(32, -219)["verdict"] == "zero"
    est = lcrit.twisted_l_value(32, -11)
    assert est["verdict"] == "nonzero"
    assert est["value"] == pytest.approx(0.79, abs=0.01)


def test_tables():
    report = lcrit.reproduce_table("maincor", max_abs_d=5000)
    assert report["mismatches"] == 0
    assert report["checked"] == 7
    assert "-4219" in report["text"]
