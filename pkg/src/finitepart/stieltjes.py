"""Exact small-parameter evaluation of generalized Stieltjes transforms.

For entire f and 0 < omega < a the incomplete transform splits exactly
(not just asymptotically) into a naive part and a singular part,

  int_0^a x^{-nu} f(x) (omega+x)^{-n} dx
      = sum_{k>=0} binom(-n,k) omega^k  FPI(f, n+k, nu, a)  +  sing(omega),

where FPI denotes the finite part of the divergent integral produced by
term-by-term integration and sing collects the pole (nu = 0) or
branch-point (0 < nu < 1) contributions of f(z) (omega+z)^{-n} that
term-by-term integration misses.  The singular part carries the dominant
behavior as omega -> 0 whenever the zero order of f at the origin is
below n.  The quadratic kernel 1/(omega^2 + x^2) follows the same pattern
with residues at +-i omega, which is what the high-Peclet effective
diffusivity expansion needs.
"""

import math
from dataclasses import dataclass, field

from .entire import TaylorFunction
from .errors import DivergentIntegralError
from .finite_part import (check_integrable_at_infinity, finite_part_integral,
                          term_cap)
from .gammafn import pochhammer

DEFAULT_EVAL_TOL = 1e-12
_FPI_TOL = 1e-15


@dataclass(frozen=True)
class TransformSpec:
    """One generalized Stieltjes evaluation: int_0^a x^{-nu} f/(omega+x)^n."""

    f: TaylorFunction
    n: int
    omega: float
    a: float = math.inf
    nu: float = 0.0

    def __post_init__(self):
        if not (isinstance(self.n, int) and self.n >= 1):
            raise ValueError("transform order n must be an integer >= 1")
        if not (0.0 <= self.nu < 1.0):
            raise ValueError("branch exponent nu must lie in [0, 1)")
        if not self.omega > 0.0:
            raise ValueError("omega must be positive")
        if not self.a > 0.0:
            raise ValueError("upper limit a must be positive")
        if not self.omega < self.a:
            raise ValueError("expansion requires omega < a")


@dataclass(frozen=True)
class ExpansionResult:
    """Naive + singular decomposition of one transform value."""

    naive_sum: float
    singular: float
    total: float
    k_used: int
    tail_estimate: float
    converged: bool = True
    per_term: list = field(default=None, compare=False)


def singular_term_integer(f: TaylorFunction, n: int, omega: float) -> float:
    """Pole contribution of f(z)/(omega+z)^n at z = -omega (nu = 0 case)."""
    if n < 1:
        raise ValueError("order n must be >= 1")
    if not omega > 0:
        raise ValueError("omega must be positive")
    if n == 1:
        return -f.eval(-omega) * math.log(omega)
    total = -f.derivative_at(n - 1, -omega) * math.log(omega) / math.factorial(n - 1)
    for k in range(n - 1):
        total += f.derivative_at(k, -omega) / (
            math.factorial(k) * (n - 1 - k) * omega ** (n - k - 1)
        )
    return total


def singular_term_branch(f: TaylorFunction, n: int, nu: float,
                         omega: float) -> float:
    """Branch-point contribution of z^{-nu} f(z)/(omega+z)^n (0 < nu < 1)."""
    if n < 1:
        raise ValueError("order n must be >= 1")
    if not (0.0 < nu < 1.0):
        raise ValueError("nu must lie strictly between 0 and 1")
    if not omega > 0:
        raise ValueError("omega must be positive")
    total = 0.0
    for k in range(n):
        total += (
            f.derivative_at(n - 1 - k, -omega)
            * pochhammer(nu, k)
            / (math.factorial(k) * math.factorial(n - 1 - k) * omega**k)
        )
    return math.pi / (math.sin(math.pi * nu) * omega**nu) * total


def _naive_series(fpi_at, n, omega, tol, k_max, keep_terms, power_step=1):
    """sum_k binom(-n,k) omega^{power_step*k} FPI_k with the standard stop.

    binom(-n,k) = (-1)^k binom(n+k-1,k) in exact integers, promoted per
    term.  Stops after two consecutive terms below tol * |running total|
    (exact zeros count as small); otherwise runs to the cap and reports
    nonconvergence through the flag.  The tail estimate is the larger of
    the last two term magnitudes, so an isolated near-zero term (a sign
    change passing through the finite-part sequence) cannot make the
    estimate under-cover the remainder.
    Returns (total, k_used, tail_estimate, converged, rows).
    """
    cap = k_max if k_max is not None else term_cap()
    total = 0.0
    small_run = 0
    last = prev = 0.0
    rows = [] if keep_terms else None
    wk = 1.0
    ostep = omega**power_step
    k = 0
    while k <= cap:
        coef = (-1) ** k * math.comb(n + k - 1, k) * wk
        fv = fpi_at(k)
        term = coef * fv
        total += term
        prev, last = last, abs(term)
        if rows is not None:
            rows.append((k, coef, fv))
        if last <= tol * abs(total):
            small_run += 1
            if small_run >= 2:
                return total, k, max(last, prev), True, rows
        else:
            small_run = 0
        wk *= ostep
        k += 1
    return total, cap, max(last, prev), False, rows


def eval_integer(spec: TransformSpec, tol: float = DEFAULT_EVAL_TOL,
                 k_max: int = None, keep_terms: bool = False) -> ExpansionResult:
    """Evaluate int_0^a f/(omega+x)^n dx by its exact decomposition (nu=0)."""
    if spec.nu != 0.0:
        raise ValueError("eval_integer handles nu = 0; use eval_branch")
    f, n, omega, a = spec.f, spec.n, spec.omega, spec.a
    if math.isinf(a):
        check_integrable_at_infinity(f, n, 0.0)

    naive, k_used, tail, ok, rows = _naive_series(
        lambda k: finite_part_integral(f, n + k, 0.0, a, tol=_FPI_TOL).value,
        n, omega, tol, k_max, keep_terms,
    )
    sing = singular_term_integer(f, n, omega)
    return ExpansionResult(naive, sing, naive + sing, k_used, tail, ok, rows)


def eval_branch(spec: TransformSpec, tol: float = DEFAULT_EVAL_TOL,
                k_max: int = None, keep_terms: bool = False) -> ExpansionResult:
    """Evaluate int_0^a x^{-nu} f/(omega+x)^n dx exactly (0 < nu < 1)."""
    if not (0.0 < spec.nu < 1.0):
        raise ValueError("eval_branch requires 0 < nu < 1")
    f, n, nu, omega, a = spec.f, spec.n, spec.nu, spec.omega, spec.a
    if math.isinf(a):
        check_integrable_at_infinity(f, n, nu)

    naive, k_used, tail, ok, rows = _naive_series(
        lambda k: finite_part_integral(f, n + k, nu, a, tol=_FPI_TOL).value,
        n, omega, tol, k_max, keep_terms,
    )
    sing = singular_term_branch(f, n, nu, omega)
    return ExpansionResult(naive, sing, naive + sing, k_used, tail, ok, rows)


def evaluate_transform(spec: TransformSpec, tol: float = DEFAULT_EVAL_TOL,
                       k_max: int = None,
                       keep_terms: bool = False) -> ExpansionResult:
    """Dispatch a TransformSpec on its branch exponent."""
    if spec.nu == 0.0:
        return eval_integer(spec, tol, k_max, keep_terms)
    return eval_branch(spec, tol, k_max, keep_terms)


def eval_quadratic(f: TaylorFunction, omega: float, a: float = math.inf,
                   tol: float = DEFAULT_EVAL_TOL, k_max: int = None,
                   keep_terms: bool = False) -> ExpansionResult:
    """Evaluate int_0^a f(x)/(omega^2+x^2) dx by its exact decomposition.

    The naive part integrates the expansion of the kernel term by term,
    sum_k (-1)^k omega^{2k} FPI(f, 2k+2, 0, a); the residues of
    f(z) (log z - i pi)/(omega^2+z^2) at z = +-i omega supply the missing
    (pi/(2 omega)) Re f(i omega) - (ln omega / omega) Im f(i omega).
    """
    if not omega > 0:
        raise ValueError("omega must be positive")
    if not (math.isinf(a) or omega < a):
        raise ValueError("expansion requires omega < a")
    if math.isinf(a):
        check_integrable_at_infinity(f, 2, 0.0)

    naive, k_used, tail, ok, rows = _naive_series(
        lambda k: finite_part_integral(f, 2 * k + 2, 0.0, a, tol=_FPI_TOL).value,
        1, omega, tol, k_max, keep_terms, power_step=2,
    )
    fi = f.eval_complex(1j * omega)
    sing = (math.pi / (2.0 * omega)) * fi.real \
        - (math.log(omega) / omega) * fi.imag
    return ExpansionResult(naive, sing, naive + sing, k_used, tail, ok, rows)


def effective_diffusivity(g_plus: TaylorFunction, g_minus: TaylorFunction,
                          peclet: float, kappa: float, a: float = math.inf,
                          tol: float = DEFAULT_EVAL_TOL) -> float:
    """High-Peclet effective diffusivity for a measure density g.

    With mu(dtau) = g(tau) dtau split over the two half-lines
    (g_plus(tau) = g(tau), g_minus(tau) = g(-tau), tau > 0), the enhancement
    integral Pe^2 g/(1 + Pe^2 tau^2) is the quadratic-kernel transform at
    omega = 1/Pe, so

        kappa_eff = kappa * [1 + S[g_plus](1/Pe) + S[g_minus](1/Pe)].
    """
    if not peclet > 0:
        raise ValueError("Peclet number must be positive")
    if not kappa > 0:
        raise ValueError("kappa must be positive")
    omega = 1.0 / peclet
    q_plus = eval_quadratic(g_plus, omega, a, tol)
    q_minus = eval_quadratic(g_minus, omega, a, tol)
    return kappa * (1.0 + q_plus.total + q_minus.total)
