import math

import pytest
from scipy import special

from finitepart.gammafn import (EULER_GAMMA, digamma_int, gamma_ratio,
                                gamma_real, harmonic, inv_factorial,
                                lgamma_signed, pochhammer)


def test_digamma_small_values():
    assert digamma_int(1) == pytest.approx(-EULER_GAMMA, rel=1e-15)
    assert digamma_int(2) == pytest.approx(1.0 - EULER_GAMMA, rel=1e-15)
    assert digamma_int(4) == pytest.approx(11.0 / 6.0 - EULER_GAMMA, rel=1e-15)


@pytest.mark.parametrize("n", [1, 2, 3, 7, 10, 50, 200, 1000])
def test_digamma_matches_scipy(n):
    assert digamma_int(n) == pytest.approx(float(special.digamma(n)), rel=1e-13)


def test_harmonic_accumulation():
    assert harmonic(0) == 0.0
    assert harmonic(3) == pytest.approx(11.0 / 6.0, rel=1e-16)
    assert harmonic(10_000) == pytest.approx(
        float(special.digamma(10_001)) + EULER_GAMMA, rel=1e-13
    )


@pytest.mark.parametrize("x", [0.3, 1.7, 5.0, -0.5, -1.25, -6.75, -0.001])
def test_lgamma_signed_matches_scipy(x):
    log_abs, sign = lgamma_signed(x)
    assert sign == special.gammasgn(x)
    assert log_abs == pytest.approx(float(special.gammaln(x)), rel=1e-12)
    assert gamma_real(x) == pytest.approx(float(special.gamma(x)), rel=1e-12)


def test_lgamma_signed_rejects_poles():
    for x in (0.0, -1.0, -7.0):
        with pytest.raises(ValueError):
            lgamma_signed(x)


@pytest.mark.parametrize("x,k", [(0.5, 0), (0.5, 3), (1.5, 5), (-2.5, 4)])
def test_pochhammer(x, k):
    assert pochhammer(x, k) == pytest.approx(float(special.poch(x, k)), rel=1e-13)


def test_gamma_ratio_and_inv_factorial():
    assert gamma_ratio(7.5, 5.5) == pytest.approx(6.5 * 5.5, rel=1e-13)
    assert gamma_ratio(-0.5, 0.5) == pytest.approx(-2.0, rel=1e-13)
    assert inv_factorial(4) == pytest.approx(1.0 / 24.0)
    assert inv_factorial(-1) == 0.0
    assert inv_factorial(-5) == 0.0
