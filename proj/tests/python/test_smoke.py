import cmath
import math

import pytest

import seifert_wrt as sw


def frac(d):
    return d["num"], d["den"]


def test_bernoulli():
    assert frac(sw.bernoulli(0)) == (1, 1)
    assert frac(sw.bernoulli(2)) == (1, 6)
    assert frac(sw.bernoulli(4)) == (-1, 30)
    with pytest.raises(ValueError):
        sw.bernoulli(3)


def test_faulhaber_matches_brute_sum():
    for p in (0, 1, 3, 5):
        coeffs = sw.faulhaber(p)
        for ell in range(0, 12):
            value = sum(
                (c["num"] / c["den"]) * ell**i for i, c in enumerate(coeffs)
            )
            assert value == pytest.approx(sum(m**p for m in range(1, ell + 1)))


def test_pm_polynomials():
    p1 = {(m["q"], m["p"]): (m["num"], m["den"]) for m in sw.pm(1)}
    assert p1 == {(1, 0): (1, 1), (1, 1): (-1, 1)}
    assert sw.pm(3, method="recurrence") == sw.pm(3, method="inductive")


def test_verlinde_routes_agree():
    assert sw.verlinde_number(2, 4, 1) == 10
    assert sw.fusion_count_oracle(2, 3, 1) == 4
    assert sw.counting_via_pm(2, 4, 1) == 10
    for k in range(3, 9):
        for ell in range(1, k, 2):
            assert sw.verlinde_number(2, k, ell) == sw.counting_via_pm(2, k, ell)


def test_volume():
    assert sw.volume_vg(2, 0.5) == pytest.approx(math.pi**4 / 2)
    assert sw.volume_vg_derivative(2, 0.0) == pytest.approx(8 * math.pi**4 / 3)


def test_modular_representation():
    e1 = [1.0, 0.0]
    s_e1 = sw.rho_s_apply(3, e1)
    assert s_e1[0] == pytest.approx(1 / math.sqrt(2))
    assert s_e1[1] == pytest.approx(1 / math.sqrt(2))
    twice = sw.rho_s_apply(3, s_e1)
    assert twice[0] == pytest.approx(1.0, abs=1e-10)
    assert abs(twice[1]) < 1e-10


def test_gluing_word():
    w = sw.decompose_gluing(0, 1)
    assert w["tokens"] == ["S"]
    assert sw.decompose_gluing(1, 0)["tokens"] == []


def test_z_k_deterministic():
    a = sw.z_k(2, 5, 3, 37)
    b = sw.z_k(2, 5, 3, 37)
    assert a == b
    assert abs(a) > 0


def test_components():
    comps = sw.components(2, 5, 3)
    by_class = {}
    for c in comps:
        by_class.setdefault(c["cls"], []).append(c)
    assert len(by_class["X1"]) == 1
    assert len(by_class["X2"]) == 4
    assert len(by_class["X3"]) == 1
    assert len(by_class["X4"]) == 1
    p1 = by_class["X3"][0]
    assert frac(p1["cs_over_2pi"]) == (0, 1)
    assert p1["m"] == pytest.approx(2.5)


def test_phi_basis_check():
    rep = sw.phi_basis_check(2, 16)
    assert rep["deviation"] < 1e-10
    assert rep["endpoints_vanish"]


def test_sphase():
    rep = sw.sphase_verify(1.0, parity="odd", n=0, sign="+", k_max=4000)
    assert rep["pass"]
    assert rep["measured_c0"] == pytest.approx(1j, abs=1e-6)


def test_series_shape():
    ks, zs = sw.compute_series(2, 1, 1, 3, 20)
    assert ks == list(range(3, 21))
    assert all(isinstance(z, complex) for z in zs)
