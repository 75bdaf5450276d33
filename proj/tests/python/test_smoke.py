"""Smoke tests for the compiled module (run with PYTHONPATH at the build tree)."""

import math

import pytest

import zetazero as zz


def test_zeta_basel():
    v = zz.zeta(2.0 + 0.0j)
    assert abs(v.real - math.pi**2 / 6) < 1e-12
    assert abs(v.imag) < 1e-12


def test_zeta_first_zero():
    v = zz.zeta(complex(0.5, 14.134725141734694))
    assert abs(v) < 1e-9


def test_lambert_w():
    assert abs(zz.lambert_w0(math.e) - 1.0) < 1e-14
    assert abs(zz.lambert_w0(0.0)) == 0.0


def test_lambert_seed_values():
    assert zz.lambert_seed("1").startswith("14.52")
    big = zz.lambert_seed("10000000000000000000001", digits=40)
    assert big.startswith("1370919909931995308226.77")


def test_zero_solvers():
    rec = zz.zero(1)
    assert abs(rec["y_float"] - 14.134725142) < 1e-9
    assert rec["method"] == "asymptotic_eq"
    exact = zz.zero(2, method="exact", digits=40)
    assert exact["y"].startswith("21.0220396387715549926284795938969")
    with pytest.raises(ValueError):
        zz.zero(0)


def test_theta_and_gram():
    assert abs(zz.riemann_siegel_theta(17.845599540410861)) < 1e-10
    assert abs(zz.gram_point(0) - 17.845599540410861) < 1e-10


def test_counting():
    n100 = zz.count_zeros(100.0)
    assert round(n100) == 29


def test_gue_rhs():
    assert abs(zz.gue_rhs(3.0, 3.05) - 1.0) < 1e-2
    assert zz.gue_rhs(0.0, 0.05) < 1e-2


def test_pair_correlation_shape():
    zeros = [zz.zero(n)["y_float"] for n in range(1, 52)]
    bins = zz.pair_correlation(zeros, 1, 1, 50, 0.0, 0.5, 6)
    assert len(bins) == 6
    total = sum(b[1] for b in bins)
    assert total > 0


def test_prime_reconstruction():
    assert zz.pi_oracle(100.0) == 25
    assert abs(zz.psi_oracle(6.0) - math.log(60.0)) < 1e-12
    zeros = [zz.zero(n)["y_float"] for n in range(1, 51)]
    pi_rec = zz.pi_from_zeros(25.5, zeros)
    assert abs(pi_rec - 9.0) < 0.5
    psi_rec = zz.psi_from_zeros(10.5, zeros)
    assert abs(psi_rec - zz.psi_oracle(10.5)) < 0.5


def test_arg_zeta_first_zero():
    y1 = 14.134725141734694
    a = zz.arg_zeta(y1, delta=1e-9)
    assert abs(a - 0.1578739) < 1e-4
