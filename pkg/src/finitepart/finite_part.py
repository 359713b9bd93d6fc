"""Hadamard finite-part integrals of entire functions.

The divergent integrals int_0^a f(x) x^{-m-nu} dx (m >= 1, 0 <= nu < 1,
f entire) acquire finite values once the exactly known diverging group of
terms is dropped.  For finite a the value has an explicit series form in
the Maclaurin coefficients c_k of f:

  nu = 0:   c_{m-1} ln a - sum_{k=0}^{m-2} c_k / ((m-k-1) a^{m-k-1})
                         + sum_{k>=m} c_k a^{k-m+1} / (k-m+1)

  0<nu<1:   sum_{k>=0} c_k a^{k+1-m-nu} / (k+1-m-nu)

with empty sums equal to zero.  The a -> infinity limit is handled either
through registered closed forms (exponential family, polynomials) or by
splitting at a0 = 1: the finite part concerns only the origin, so
fpi(f, m, nu, a0) plus an ordinary adaptive integral over [a0, inf) is
exact and involves no cancellation between log a and the tail sum.
"""

import enum
import math
import os
from dataclasses import dataclass

from .entire import (BinomialPoly, CustomSeries, Exponential, MonomialExp,
                     Polynomial, TaylorFunction, unscale)
from .errors import DivergentIntegralError, NonconvergenceError
from .gammafn import digamma_int, gamma_real
from .oracles import quad_adaptive

DEFAULT_TERM_CAP = 10_000
DEFAULT_TOL = 1e-15
NU_GUARD = 1e-12
SPLIT_POINT = 1.0


def term_cap() -> int:
    """Hard cap on summed series terms; FPI_MAX_TERMS overrides it."""
    return int(os.environ.get("FPI_MAX_TERMS", DEFAULT_TERM_CAP))


class FpiMethod(enum.Enum):
    SERIES_FINITE = "SeriesFinite"
    CLOSED_FORM = "ClosedForm"
    SPLIT_INFINITE = "SplitInfinite"


@dataclass(frozen=True)
class FpiValue:
    """A finite-part integral value with evaluation diagnostics."""

    value: float
    method: FpiMethod
    terms_used: int
    tail_bound: float


@dataclass(frozen=True)
class FpiRequest:
    """One finite-part query: int_0^a f(x) x^{-m-nu} dx."""

    f: TaylorFunction
    m: int
    nu: float = 0.0
    a: float = math.inf

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("pole strength m must be >= 1")
        _check_nu(self.nu)
        if not self.a > 0:
            raise ValueError("upper limit a must be positive")

    def evaluate(self, tol: float = DEFAULT_TOL) -> FpiValue:
        return finite_part_integral(self.f, self.m, self.nu, self.a, tol=tol)


def _check_nu(nu: float) -> None:
    if nu == 0.0:
        return
    if not (NU_GUARD < nu < 1.0 - NU_GUARD):
        raise ValueError(
            "branch exponent nu must be 0 exactly or lie in "
            f"({NU_GUARD:g}, 1 - {NU_GUARD:g}); got {nu}"
        )


def _check_m(m: int) -> None:
    if not (isinstance(m, int) and m >= 1):
        raise ValueError("pole strength m must be an integer >= 1")


def _series_sum(f, m, nu, a, tol, start):
    """sum_{k>=start} c_k a^{k+1-m-nu}/(k+1-m-nu) with the stop rule:

    two consecutive terms below tol * |partial sum| (exact zeros count),
    hard cap from term_cap().  Finite-degree functions are summed exactly.
    Returns (total, terms_used, tail_bound).
    """
    k0 = max(start, f.zero_order())
    deg = f.finite_degree()
    if deg is not None:
        total = 0.0
        used = 0
        for k in range(k0, deg + 1):
            c = f.coeff(k)
            if c == 0.0:
                continue
            p = k + 1 - m - nu
            total += c * a**p / p
            used += 1
        return total, used, 0.0

    cap = term_cap()
    total = 0.0
    small_run = 0
    used = 0
    ap = a ** (k0 + 1 - m - nu)
    for k in range(k0, k0 + cap):
        term = f.coeff(k) * ap / (k + 1 - m - nu)
        if not math.isfinite(term):
            raise NonconvergenceError(
                f"finite-part series term overflowed at k = {k}"
            )
        total += term
        used += 1
        last = abs(term)
        if last <= tol * abs(total):
            small_run += 1
            if small_run >= 2:
                return total, used, last
        else:
            small_run = 0
        ap *= a
    raise NonconvergenceError(
        f"finite-part series did not meet tolerance within {cap} terms"
    )


def fpi_pole_finite(f: TaylorFunction, m: int, a: float,
                    tol: float = DEFAULT_TOL) -> FpiValue:
    """Finite part of int_0^a f(x) x^{-m} dx for finite a."""
    _check_m(m)
    if not (0.0 < a < math.inf):
        raise ValueError("fpi_pole_finite requires finite a > 0")
    head = 0.0
    cm1 = f.coeff(m - 1)
    if cm1 != 0.0:
        head += cm1 * math.log(a)
    for k in range(m - 1):
        c = f.coeff(k)
        if c != 0.0:
            head -= c / ((m - k - 1) * a ** (m - k - 1))
    tail, used, bound = _series_sum(f, m, 0.0, a, tol, start=m)
    return FpiValue(head + tail, FpiMethod.SERIES_FINITE, used, bound)


def fpi_branch_finite(f: TaylorFunction, m: int, nu: float, a: float,
                      tol: float = DEFAULT_TOL) -> FpiValue:
    """Finite part of int_0^a f(x) x^{-m-nu} dx, 0 < nu < 1, finite a."""
    _check_m(m)
    _check_nu(nu)
    if nu == 0.0:
        raise ValueError("fpi_branch_finite requires 0 < nu < 1")
    if not (0.0 < a < math.inf):
        raise ValueError("fpi_branch_finite requires finite a > 0")
    total, used, bound = _series_sum(f, m, nu, a, tol, start=0)
    return FpiValue(total, FpiMethod.SERIES_FINITE, used, bound)


# ---------------------------------------------------------------------------
# infinite upper limit
# ---------------------------------------------------------------------------

def check_integrable_at_infinity(f: TaylorFunction, m: int, nu: float) -> None:
    """Raise DivergentIntegralError unless f(x) x^{-m-nu} is integrable
    at infinity.  Decided per descriptor; user streams must declare decay.
    """
    base, _ = unscale(f)
    if isinstance(base, (Exponential, MonomialExp)):
        return
    if isinstance(base, BinomialPoly):
        raise DivergentIntegralError(
            "BinomialPoly is not admitted at an infinite upper limit"
        )
    if isinstance(base, Polynomial):
        # need degree - m - nu < -1
        max_deg = m - 2 if nu == 0.0 else m - 1
        if base.degree <= max_deg:
            return
        raise DivergentIntegralError(
            f"polynomial of degree {base.degree} diverges at infinity "
            f"against x^(-{m}-{nu:g})"
        )
    if isinstance(base, CustomSeries):
        if base.decays_at_infinity():
            return
        raise DivergentIntegralError(
            "custom series did not declare integrability at infinity"
        )
    if base.decays_at_infinity():
        return
    raise DivergentIntegralError(
        f"cannot establish integrability at infinity for {base!r}"
    )


def _split_infinite(f, m, nu, tol):
    if nu == 0.0:
        fin = fpi_pole_finite(f, m, SPLIT_POINT, tol)
    else:
        fin = fpi_branch_finite(f, m, nu, SPLIT_POINT, tol)
    power = m + nu
    q = quad_adaptive(lambda x: f.eval(x) * x ** (-power), SPLIT_POINT,
                      math.inf, tol=1e-13)
    return FpiValue(fin.value + q.value, FpiMethod.SPLIT_INFINITE,
                    fin.terms_used, fin.tail_bound + q.abs_err_estimate)


def fpi_pole_infinite(f: TaylorFunction, m: int, tol: float = DEFAULT_TOL,
                      force_split: bool = False) -> FpiValue:
    """Finite part of int_0^inf f(x) x^{-m} dx.

    Registered closed forms:
      exp(-b x):        (-1)^m b^{m-1} (ln b - psi(m)) / (m-1)!
      x^p exp(-b x):    reduction to the pure exponential (m -> m - p), or
                        the ordinary Gamma integral once m <= p
      polynomials:      0 (every admissible term vanishes as a -> inf)
    Everything else goes through the split at a0 = 1.
    """
    _check_m(m)
    check_integrable_at_infinity(f, m, 0.0)
    if not force_split:
        base, factor = unscale(f)
        closed = _pole_closed_form(base, m)
        if closed is not None:
            return FpiValue(factor * closed, FpiMethod.CLOSED_FORM, 0, 0.0)
    return _split_infinite(f, m, 0.0, tol)


def _pole_closed_form(base, m):
    if isinstance(base, Exponential):
        b = base.b
        return ((-1.0) ** m * b ** (m - 1) * (math.log(b) - digamma_int(m))
                / math.factorial(m - 1))
    if isinstance(base, MonomialExp):
        mm = m - base.p
        if mm >= 1:
            return _pole_closed_form(Exponential(base.b), mm)
        # convergent: int_0^inf x^{p-m} e^{-bx} dx
        return math.gamma(base.p - m + 1) / base.b ** (base.p - m + 1)
    if isinstance(base, Polynomial):
        return 0.0
    return None


def fpi_branch_infinite(f: TaylorFunction, m: int, nu: float,
                        tol: float = DEFAULT_TOL,
                        force_split: bool = False) -> FpiValue:
    """Finite part of int_0^inf f(x) x^{-m-nu} dx, 0 < nu < 1.

    Registered closed forms:
      exp(-b x):        (-1)^m b^{m+nu-1} pi / (sin(pi nu) Gamma(m+nu))
      x^p exp(-b x):    reduction as in the pole case
      polynomials:      0
    """
    _check_m(m)
    _check_nu(nu)
    if nu == 0.0:
        raise ValueError("fpi_branch_infinite requires 0 < nu < 1")
    check_integrable_at_infinity(f, m, nu)
    if not force_split:
        base, factor = unscale(f)
        closed = _branch_closed_form(base, m, nu)
        if closed is not None:
            return FpiValue(factor * closed, FpiMethod.CLOSED_FORM, 0, 0.0)
    return _split_infinite(f, m, nu, tol)


def _branch_closed_form(base, m, nu):
    if isinstance(base, Exponential):
        b = base.b
        return ((-1.0) ** m * b ** (m + nu - 1) * math.pi
                / (math.sin(math.pi * nu) * math.gamma(m + nu)))
    if isinstance(base, MonomialExp):
        mm = m - base.p
        if mm >= 1:
            return _branch_closed_form(Exponential(base.b), mm, nu)
        arg = base.p - m + 1 - nu
        return math.gamma(arg) / base.b ** arg
    if isinstance(base, Polynomial):
        return 0.0
    return None


# ---------------------------------------------------------------------------
# polynomial closed forms (cross-check path for the generic series)
# ---------------------------------------------------------------------------

def fpi_polynomial(f: TaylorFunction, m: int, nu: float = 0.0,
                   a: float = 1.0) -> FpiValue:
    """Closed-form finite part for polynomial f; exact finite sums.

    nu = 0 splits into three regimes by the pole strength m relative to
    the lowest power r and the degree s of the polynomial:
      m <= r:           ordinary convergent integral,
      r+1 <= m <= s+1:  mixed negative powers, log a, positive powers,
      m >= s+2:         negative powers of a only;
    for 0 < nu < 1 a single sum covers every regime.
    """
    _check_m(m)
    _check_nu(nu)
    base, factor = unscale(f)
    if not isinstance(base, Polynomial):
        raise TypeError("fpi_polynomial requires a polynomial descriptor")
    if not a > 0:
        raise ValueError("upper limit a must be positive")
    if math.isinf(a):
        check_integrable_at_infinity(f, m, nu)
        return FpiValue(0.0, FpiMethod.CLOSED_FORM, 0, 0.0)

    r, s = base.lowest, base.degree
    ak = base.coeff
    if nu == 0.0:
        if m <= r:
            val = sum(ak(k) * a ** (k - m + 1) / (k - m + 1)
                      for k in range(r, s + 1))
        elif m >= s + 2:
            val = -sum(ak(k) / ((m - k - 1) * a ** (m - k - 1))
                       for k in range(r, s + 1))
        else:
            val = -sum(ak(k) / ((m - k - 1) * a ** (m - k - 1))
                       for k in range(r, m - 1))
            val += ak(m - 1) * math.log(a)
            val += sum(ak(k) * a ** (k - m + 1) / (k - m + 1)
                       for k in range(m, s + 1))
    else:
        val = sum(ak(k) * a ** (k + 1 - m - nu) / (k + 1 - m - nu)
                  for k in range(r, s + 1))
    return FpiValue(factor * val, FpiMethod.CLOSED_FORM, 0, 0.0)


# ---------------------------------------------------------------------------
# dispatcher
# ---------------------------------------------------------------------------

def finite_part_integral(f: TaylorFunction, m: int, nu: float = 0.0,
                         a: float = math.inf,
                         tol: float = DEFAULT_TOL) -> FpiValue:
    """Route an (f, m, nu, a) finite-part query to the right evaluator."""
    _check_m(m)
    _check_nu(nu)
    if not a > 0:
        raise ValueError("upper limit a must be positive")
    if math.isinf(a):
        if nu == 0.0:
            return fpi_pole_infinite(f, m, tol)
        return fpi_branch_infinite(f, m, nu, tol)
    if nu == 0.0:
        return fpi_pole_finite(f, m, a, tol)
    return fpi_branch_finite(f, m, nu, a, tol)
