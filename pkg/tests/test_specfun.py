import math

import pytest
from scipy import special

from finitepart.entire import BinomialPoly, Exponential, MonomialExp
from finitepart.oracles import quad_adaptive
from finitepart.specfun import (Gauss2F1BranchParams, Gauss2F1IntParams,
                                KummerParams, KummerRegime, gauss2f1_branch,
                                gauss2f1_integer, gauss2f1_leading,
                                gauss2f1_reflection, gauss_series, kummer_u,
                                kummer_u_leading)
from finitepart.stieltjes import TransformSpec, eval_branch, eval_integer


# ---------------------------------------------------------------------------
# quadrature oracles for the defining integral representations
# ---------------------------------------------------------------------------

def gauss_int_quadrature(n, r, s, zeta):
    pref = math.factorial(s - 1) / (
        math.factorial(r - 1) * math.factorial(s - r - 1) * zeta**n
    )
    w = 1.0 / zeta
    val = quad_adaptive(
        lambda x: x ** (r - 1) * (1 - x) ** (s - r - 1) / (w + x) ** n,
        0.0, 1.0, tol=1e-12, breakpoints=[min(10 * w, 0.5)],
    ).value
    return pref * val


def gauss_branch_quadrature(n, s, mu, zeta):
    pref = special.gamma(s - mu + 2) / (
        special.gamma(1 - mu) * math.factorial(s) * zeta**n
    )
    w = 1.0 / zeta
    val = quad_adaptive(
        lambda x: x ** (-mu) * (1 - x) ** s / (w + x) ** n,
        0.0, 1.0, tol=1e-12, breakpoints=[min(10 * w, 0.5)], singular_lo=True,
    ).value
    return pref * val


def kummer_quadrature(a, b, omega):
    val = quad_adaptive(
        lambda t: math.exp(-omega * t) * t ** (a - 1) * (1 + t) ** (b - a - 1),
        0.0, math.inf, tol=1e-12, breakpoints=[1.0, 10.0 / omega],
        singular_lo=a < 1,
    ).value
    return val / special.gamma(a)


# closed forms quoted from tables, evaluated with scipy primitives
def chi_minus_shi(x):
    shi, chi = special.shichi(x)
    return chi - shi


def u_2_m4(w):
    poly = ((((w + 5) * w - 4) * w + 6) * w - 12) * w + 24
    return (math.exp(w) * (w + 6) * chi_minus_shi(w) * w**5 + poly) / 720.0


def u_5_2(w):
    # partial-fraction reduction of the Laplace integral gives the factor
    # w on the hyperbolic-integral term (the two expressions cross at w=1)
    return ((w + 3) * (w * (w + 8) + 2)
            + math.exp(w) * w * (w * (w + 6) ** 2 + 24) * chi_minus_shi(w)) \
        / (144.0 * w)


def u_half_3(w):
    return (2 * math.sqrt(w) * (3 - 2 * w)
            + math.exp(w) * math.sqrt(math.pi) * (4 * w * (w - 1) + 3)
            * special.erfc(math.sqrt(w))) / 8.0


def u_seventh_2(w):
    upper_gamma = special.gammaincc(13.0 / 7.0, w) * special.gamma(13.0 / 7.0)
    return (7 * w ** (13.0 / 7.0)
            - math.exp(w) * (7 * w - 6) * upper_gamma) / 6.0


def eke(z):
    return 3 * (math.sqrt(z) + (z - 1) * math.atan(math.sqrt(z))) / (4 * z**1.5)


def baba1(z):
    t = z ** (1.0 / 3)
    inner = (math.log(1 + 1 / t) - 0.5 * math.log(1 - 1 / t + 1 / t**2)
             + math.sqrt(3) * math.atan((math.sqrt(3) / 2) * (1 / t)
                                        / (1 - 1 / (2 * t))))
    return (10 / (9 * z)) * (1 + (t / 3) * (2 / z - 1) * inner) \
        + (20.0 / 81) * math.sqrt(3) * math.pi * (z - 2) / z ** (5.0 / 3)


def baba2(z):
    return 35 * ((z - 3) * math.sqrt(z) * (3 * z + 5)
                 + 3 * (z + 1) * ((z - 2) * z + 5)
                 * math.atan(math.sqrt(z))) / (128 * z**3.5)


# ---------------------------------------------------------------------------
# parameter validation
# ---------------------------------------------------------------------------

def test_gauss_int_params_validation():
    with pytest.raises(ValueError):
        Gauss2F1IntParams(5, 2, 4, 0.9)       # zeta <= 1
    with pytest.raises(ValueError):
        Gauss2F1IntParams(2, 1, 3, 2.0)       # s = n+1 breaks s < n+1
    with pytest.raises(ValueError):
        Gauss2F1IntParams(5, 3, 4, 2.0)       # r+1 = s breaks r+1 < s
    Gauss2F1IntParams(3, 1, 3, 2.0)           # boundary s = n is admissible


def test_gauss_branch_params_validation():
    with pytest.raises(ValueError):
        Gauss2F1BranchParams(2, 0.0, 1, 4.0)
    with pytest.raises(ValueError):
        Gauss2F1BranchParams(2, 1.0 - 1e-13, 1, 4.0)
    with pytest.raises(ValueError):
        Gauss2F1BranchParams(2, 0.5, 1, 1.0)


def test_kummer_params_regimes():
    assert KummerParams(2, 7, 1.0).regime is KummerRegime.INT_ORDER_N_GE_S
    assert KummerParams(5, 4, 1.0).regime is KummerRegime.INT_ORDER_N_LT_S
    assert KummerParams(0.5, 3, 1.0).regime is KummerRegime.FRAC_ORDER
    with pytest.raises(ValueError):
        KummerParams(2, 7, 1.0, regime=KummerRegime.INT_ORDER_N_LT_S)
    with pytest.raises(ValueError):
        KummerParams(-1, 2, 1.0)
    with pytest.raises(ValueError):
        KummerParams(1.5, 2, 1.0)


# ---------------------------------------------------------------------------
# integer-parameter 2F1
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("zeta", [1.5, 2.0, 5.0, 10.0])
def test_gauss_int_against_tabulated_closed_form(zeta):
    got = gauss2f1_integer(Gauss2F1IntParams(5, 2, 4, zeta))
    want = (zeta + 2.0) / (2.0 * (zeta + 1.0) ** 3)
    assert math.isclose(got, want, rel_tol=1e-12)


@pytest.mark.parametrize("n,r,s", [(5, 2, 4), (4, 1, 3), (3, 1, 3), (6, 2, 4)])
@pytest.mark.parametrize("zeta", [1.5, 3.0, 8.0])
def test_gauss_int_against_quadrature(n, r, s, zeta):
    got = gauss2f1_integer(Gauss2F1IntParams(n, r, s, zeta))
    want = gauss_int_quadrature(n, r, s, zeta)
    assert math.isclose(got, want, rel_tol=1e-10)


@pytest.mark.parametrize("n,r,s,zeta", [(5, 2, 4, 2.0), (4, 1, 3, 1.7),
                                        (6, 2, 4, 3.0)])
def test_gauss_reflection_identity(n, r, s, zeta):
    # the infinite piece folded into a canonical 2F1 of argument -1/zeta
    got = gauss2f1_reflection(Gauss2F1IntParams(n, r, s, zeta))
    want = gauss_int_quadrature(n, r, s, zeta)
    assert math.isclose(got, want, rel_tol=1e-9)


def test_gauss_series_helper():
    # canonical series against scipy inside the unit disk
    assert gauss_series(1.0, 2.0, 3.0, -0.5) == pytest.approx(
        float(special.hyp2f1(1.0, 2.0, 3.0, -0.5)), rel=1e-13
    )
    with pytest.raises(ValueError):
        gauss_series(1.0, 1.0, 2.0, -1.5)


def test_gauss_int_matches_generic_transform():
    # the representation is the generic decomposition specialized to the
    # Euler kernel x^{r-1}(1-x)^{s-r-1} at omega = 1/zeta
    for (n, r, s, zeta) in [(5, 2, 4, 2.0), (4, 1, 3, 5.0), (6, 2, 4, 1.5)]:
        spec = TransformSpec(BinomialPoly(r - 1, s - r - 1), n, 1.0 / zeta, 1.0)
        via_transform = (
            math.factorial(s - 1)
            / (math.factorial(r - 1) * math.factorial(s - r - 1) * zeta**n)
            * eval_integer(spec, tol=1e-15).total
        )
        direct = gauss2f1_integer(Gauss2F1IntParams(n, r, s, zeta))
        assert math.isclose(direct, via_transform, rel_tol=1e-10)


# ---------------------------------------------------------------------------
# branch-parameter 2F1
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("zeta", [2.0, 4.0, 10.0])
def test_gauss_branch_against_arctan_closed_form(zeta):
    got = gauss2f1_branch(Gauss2F1BranchParams(2, 0.5, 1, zeta))
    assert math.isclose(got, eke(zeta), rel_tol=1e-12)


def test_gauss_branch_against_tabulated_cases():
    got = gauss2f1_branch(Gauss2F1BranchParams(2, 1.0 / 3.0, 1, 8.0))
    assert math.isclose(got, baba1(8.0), rel_tol=1e-10)
    got = gauss2f1_branch(Gauss2F1BranchParams(3, 0.5, 3, 4.0))
    assert math.isclose(got, baba2(4.0), rel_tol=1e-10)


@pytest.mark.parametrize("n,s,mu", [(1, 1, 0.25), (2, 1, 0.5), (3, 3, 0.75)])
@pytest.mark.parametrize("zeta", [1.5, 3.0, 8.0])
def test_gauss_branch_against_quadrature(n, s, mu, zeta):
    got = gauss2f1_branch(Gauss2F1BranchParams(n, mu, s, zeta))
    want = gauss_branch_quadrature(n, s, mu, zeta)
    assert math.isclose(got, want, rel_tol=1e-9)


def test_gauss_branch_matches_generic_transform():
    for (n, s, mu, zeta) in [(2, 1, 0.5, 4.0), (3, 3, 0.75, 2.0)]:
        spec = TransformSpec(BinomialPoly(0, s), n, 1.0 / zeta, 1.0, nu=mu)
        pref = special.gamma(s - mu + 2) / (
            special.gamma(1 - mu) * math.factorial(s) * zeta**n
        )
        via_transform = pref * eval_branch(spec, tol=1e-15).total
        direct = gauss2f1_branch(Gauss2F1BranchParams(n, mu, s, zeta))
        assert math.isclose(direct, via_transform, rel_tol=1e-10)


# ---------------------------------------------------------------------------
# Kummer U
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("omega", [0.5, 1.0, 2.0])
def test_kummer_tabulated_hyperbolic_integral_cases(omega):
    got = kummer_u(KummerParams(2, 7, omega))
    assert math.isclose(got, u_2_m4(omega), rel_tol=1e-9)
    got = kummer_u(KummerParams(5, 4, omega))
    assert math.isclose(got, u_5_2(omega), rel_tol=1e-9)


@pytest.mark.parametrize("omega", [0.5, 1.0, 2.0])
def test_kummer_tabulated_fractional_cases(omega):
    got = kummer_u(KummerParams(0.5, 3, omega))
    assert math.isclose(got, u_half_3(omega), rel_tol=1e-10)
    got = kummer_u(KummerParams(1.0 / 7.0, 2, omega))
    assert math.isclose(got, u_seventh_2(omega), rel_tol=1e-10)


def test_kummer_spot_value():
    assert kummer_u(KummerParams(0.5, 3, 1.0)) == pytest.approx(
        0.5342020585529921, rel=1e-12
    )


@pytest.mark.parametrize("s,n", [(1, 1), (2, 7), (3, 4), (2, 2)])
@pytest.mark.parametrize("omega", [0.5, 1.0, 2.0])
def test_kummer_int_ge_against_quadrature(s, n, omega):
    got = kummer_u(KummerParams(s, n, omega))
    want = kummer_quadrature(s, s + 1 - n, omega)
    assert math.isclose(got, want, rel_tol=1e-9)


@pytest.mark.parametrize("s,n", [(5, 4), (3, 1), (4, 2)])
@pytest.mark.parametrize("omega", [0.5, 1.0, 2.0])
def test_kummer_int_lt_against_quadrature(s, n, omega):
    got = kummer_u(KummerParams(s, n, omega))
    want = kummer_quadrature(s, s + 1 - n, omega)
    assert math.isclose(got, want, rel_tol=1e-9)


@pytest.mark.parametrize("a,n", [(0.5, 3), (0.25, 1), (1.0 / 7.0, 2)])
@pytest.mark.parametrize("omega", [0.5, 1.0, 2.0])
def test_kummer_frac_against_quadrature(a, n, omega):
    got = kummer_u(KummerParams(a, n, omega))
    want = kummer_quadrature(a, a - n + 1, omega)
    assert math.isclose(got, want, rel_tol=1e-9)


def test_kummer_int_matches_generic_transform():
    for (s, n, omega) in [(2, 7, 1.0), (5, 4, 0.5), (3, 3, 1.5)]:
        spec = TransformSpec(MonomialExp(s - 1, 1.0), n, omega)
        via_transform = eval_integer(spec, tol=1e-15).total / (
            math.factorial(s - 1) * omega ** (s - n)
        )
        direct = kummer_u(KummerParams(s, n, omega))
        assert math.isclose(direct, via_transform, rel_tol=1e-10)


def test_kummer_frac_matches_generic_transform():
    for (a, n, omega) in [(0.5, 3, 1.0), (0.25, 2, 0.7)]:
        spec = TransformSpec(Exponential(1.0), n, omega, nu=1.0 - a)
        via_transform = omega ** (n - a) / special.gamma(a) \
            * eval_branch(spec, tol=1e-15).total
        direct = kummer_u(KummerParams(a, n, omega))
        assert math.isclose(direct, via_transform, rel_tol=1e-10)


# ---------------------------------------------------------------------------
# leading behavior
# ---------------------------------------------------------------------------

def test_kummer_leading_log_case():
    p = KummerParams(2, 2, 1e-3)
    lead = kummer_u_leading(p)
    full = kummer_u(p)
    assert abs(lead / full - 1.0) < 0.01


def test_kummer_leading_power_case():
    p = KummerParams(5, 3, 1e-3)
    assert abs(kummer_u_leading(p) / kummer_u(p) - 1.0) < 0.01


def test_kummer_leading_frac_case():
    p = KummerParams(0.5, 1, 1e-4)
    ratio = kummer_u_leading(p) / kummer_u(p)
    assert 0.99 <= ratio <= 1.01


def test_gauss_leading_large_argument():
    p100 = Gauss2F1IntParams(5, 2, 4, 100.0)
    assert abs(gauss2f1_leading(p100) / gauss2f1_integer(p100) - 1.0) < 0.05
    b = Gauss2F1BranchParams(2, 0.5, 1, 200.0)
    assert abs(gauss2f1_leading(b) / gauss2f1_branch(b) - 1.0) < 0.05
    with pytest.raises(TypeError):
        gauss2f1_leading(object())
