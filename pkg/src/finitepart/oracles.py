"""Independent verification engines.

Three ways to check a finite-part or transform value without touching the
series representations used elsewhere in the package:

* :func:`quad_adaptive` wraps adaptive Gauss-Kronrod quadrature (QUADPACK
  via scipy) for convergent integrals, with a t^2 endpoint substitution
  for algebraic singularities at the lower limit; semi-infinite ranges use
  QUADPACK's built-in rational mapping.
* :func:`fpi_epsilon_oracle` evaluates a finite part straight from its
  definition: integrate on [eps, a], remove the exactly known divergent
  part, extrapolate eps -> 0.
* :func:`fpi_contour_oracle` evaluates the equivalent circular-contour
  representation by trigonometric interpolation, with a plain Simpson
  reference path.
"""

import math
from dataclasses import dataclass

import numpy as np
from scipy import integrate

from .entire import TaylorFunction
from .errors import NonconvergenceError

_QUAD_LIMIT = 200


@dataclass(frozen=True)
class QuadratureResult:
    value: float
    abs_err_estimate: float
    evaluations: int


def _quad_once(fn, lo, hi, tol, limit):
    out = integrate.quad(fn, lo, hi, epsabs=1e-15, epsrel=tol,
                         limit=limit, full_output=1)
    value, abserr, info = out[0], out[1], out[2]
    neval = int(info.get("neval", 0))
    if len(out) > 3:
        raise NonconvergenceError(
            f"adaptive quadrature did not converge on [{lo}, {hi}]: {out[3]}",
            partial=QuadratureResult(value, abserr, neval),
        )
    return value, abserr, neval


def quad_adaptive(integrand, lo, hi, tol=1e-10, *, breakpoints=None,
                  singular_lo=False, limit=_QUAD_LIMIT) -> QuadratureResult:
    """Adaptive quadrature of a convergent integral on (lo, hi].

    Parameters
    ----------
    integrand : callable
        Real integrand, reentrant; evaluated on the open interval.
    lo, hi : float
        Limits; ``hi`` may be ``math.inf``.
    tol : float
        Relative error target.
    breakpoints : sequence of float, optional
        Interior points to split at (useful for sharply peaked kernels).
    singular_lo : bool
        Apply the substitution x = lo + t^2 near the lower endpoint so
        integrable algebraic singularities x^{-nu}, nu < 1, are tamed.
    """
    if not lo < hi:
        raise ValueError("quadrature requires lo < hi")
    pieces = [lo]
    if breakpoints:
        pieces.extend(p for p in sorted(breakpoints) if lo < p < hi)
    pieces.append(hi)

    total = err = 0.0
    neval = 0
    for i, (x0, x1) in enumerate(zip(pieces[:-1], pieces[1:])):
        if i == 0 and singular_lo:
            cut = x1 if math.isfinite(x1) else x0 + 1.0
            tmax = math.sqrt(cut - x0)
            v, e, n = _quad_once(
                lambda t: 2.0 * t * integrand(x0 + t * t), 0.0, tmax, tol, limit
            )
            total += v
            err += e
            neval += n
            if cut != x1:
                v, e, n = _quad_once(integrand, cut, x1, tol, limit)
                total += v
                err += e
                neval += n
        else:
            v, e, n = _quad_once(integrand, x0, x1, tol, limit)
            total += v
            err += e
            neval += n
    return QuadratureResult(total, err, neval)


# ---------------------------------------------------------------------------
# epsilon-regularization oracle
# ---------------------------------------------------------------------------

def _taylor_remainder(f: TaylorFunction, m: int, x: float, cap: int = 600) -> float:
    """f(x) - sum_{k<m} c_k x^k, evaluated without catastrophic cancellation.

    The tail series sum_{k>=m} c_k x^k is used directly; if its terms grow
    so large that the summed result would lose more than ~8 digits, the
    direct difference (well conditioned exactly in that regime) is used
    instead.
    """
    deg = f.finite_degree()
    hi = deg + 1 if deg is not None else cap
    total = 0.0
    largest = 0.0
    xk = x**m
    small_run = 0
    for k in range(m, hi):
        term = f.coeff(k) * xk
        total += term
        largest = max(largest, abs(term))
        if deg is None:
            if abs(term) <= 1e-17 * abs(total):
                small_run += 1
                if small_run >= 2 and k >= f.zero_order():
                    break
            else:
                small_run = 0
        xk *= x
    else:
        if deg is None:
            raise NonconvergenceError("Taylor tail did not settle")
    if largest > 1e8 * max(abs(total), 1e-300):
        head = 0.0
        for k in range(m - 1, -1, -1):
            head = head * x + f.coeff(k)
        return f.eval(x) - head
    return total


def fpi_epsilon_oracle(f: TaylorFunction, m: int, nu: float, a: float,
                       eps_list=(1e-2, 1e-3, 1e-4), quad_tol=1e-12) -> float:
    """Finite part of int_0^a f(x) x^{-m-nu} dx from its defining limit.

    For each eps the regularized value C_eps (integral on [eps, a] minus
    the exact divergent part assembled from c_0..c_{m-1}) is computed; the
    divergent part is cancelled analytically against the Taylor head of
    the integrand, so no large-number subtraction happens in floats.  The
    C_eps sequence is then extrapolated to eps -> 0 using the known
    residual powers eps^{j+1-nu}, j = 0, 1, ... (the integrated Taylor
    remainder), one power per spare sample point.
    """
    if m < 1:
        raise ValueError("pole strength m must be >= 1")
    if not (0.0 <= nu < 1.0):
        raise ValueError("branch exponent nu must lie in [0, 1)")
    if not (0.0 < a < math.inf):
        raise ValueError("epsilon oracle requires finite a > 0")
    eps = [float(e) for e in eps_list]
    if len(eps) < 2 or any(e2 >= e1 for e1, e2 in zip(eps, eps[1:])):
        raise ValueError("eps_list must be strictly decreasing")
    if eps[0] >= a:
        raise ValueError("all eps must be smaller than a")

    # eps-free part: head coefficients integrated on [eps, a] minus the
    # divergent group leaves only their value at the upper limit.
    head = 0.0
    if nu == 0.0:
        cm1 = f.coeff(m - 1)
        if cm1 != 0.0:
            head += cm1 * math.log(a)
        for k in range(m - 1):
            head -= f.coeff(k) / ((m - k - 1) * a ** (m - k - 1))
    else:
        for k in range(m):
            p = k + 1 - m - nu
            head += f.coeff(k) * a**p / p
    power = m + nu

    def integrand(x):
        return _taylor_remainder(f, m, x) / x**power

    c_vals = [head + quad_adaptive(integrand, e, a, tol=quad_tol).value
              for e in eps]

    # solve C(eps) = L + sum_j A_j eps^{j+1-nu} for the limit L
    npts = len(eps)
    powers = [j + 1.0 - nu for j in range(npts - 1)]
    mat = np.ones((npts, npts))
    for i, e in enumerate(eps):
        for j, p in enumerate(powers):
            mat[i, j + 1] = e**p
    sol = np.linalg.solve(mat, np.asarray(c_vals))
    return float(sol[0])


# ---------------------------------------------------------------------------
# circular-contour oracle (nu = 0)
# ---------------------------------------------------------------------------

def _contour_spectral(f, m, a, n):
    theta = 2.0 * math.pi * np.arange(n) / n
    z = a * np.exp(1j * theta)
    g = np.array([f.eval_complex(zz) for zz in z]) * np.exp(1j * (1 - m) * theta)
    ghat = np.fft.fft(g) / n
    freqs = np.fft.fftfreq(n, d=1.0 / n).astype(int)
    val = ghat[0] * math.log(a)
    for idx in range(1, n):
        l = freqs[idx]
        if abs(l) == n // 2:
            continue  # ambiguous Nyquist bin; halves under doubling anyway
        val += ghat[idx] / l
    return complex(val) / a ** (m - 1)


def _contour_simpson(f, m, a, panels=1 << 14):
    theta = np.linspace(0.0, 2.0 * math.pi, panels + 1)
    z = a * np.exp(1j * theta)
    g = np.array([f.eval_complex(zz) for zz in z]) * np.exp(1j * (1 - m) * theta)
    integrand = g.real * math.log(a) - g.imag * (theta - math.pi)
    return integrate.simpson(integrand, x=theta) / (2.0 * math.pi * a ** (m - 1))


def fpi_contour_oracle(f: TaylorFunction, m: int, a: float, n_theta: int = 64,
                       tol: float = 1e-10, method: str = "spectral") -> float:
    """Finite part of int_0^a f(x) x^{-m} dx from its contour representation.

    The value equals the average over the circle |z| = a of
    f(z) (log a + i (theta - pi)) e^{i (1-m) theta} / a^{m-1}.  The periodic
    factor is replaced by its trigonometric interpolant (FFT), against
    which the linear theta term integrates exactly; the resolution doubles
    until two successive values agree to ``tol``.  ``method="simpson"``
    keeps the plain composite-Simpson reference path at 2^14 panels.
    """
    if m < 1:
        raise ValueError("pole strength m must be >= 1")
    if not (0.0 < a < math.inf):
        raise ValueError("contour oracle requires finite a > 0")
    if n_theta < 64 or (n_theta & (n_theta - 1)) != 0:
        raise ValueError("n_theta must be a power of two >= 64")
    if method == "simpson":
        return float(_contour_simpson(f, m, a))
    if method != "spectral":
        raise ValueError(f"unknown contour method: {method!r}")

    n = n_theta
    prev = _contour_spectral(f, m, a, n)
    while n < (1 << 18):
        n *= 2
        cur = _contour_spectral(f, m, a, n)
        if abs(cur - prev) < tol:
            return float(cur.real)
        prev = cur
    raise NonconvergenceError(
        "contour oracle did not stabilize before the doubling cap",
        partial=float(prev.real),
    )
