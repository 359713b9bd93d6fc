"""Series evaluators for Gauss 2F1 and Kummer U at Stieltjes-type parameters.

Both functions admit incomplete or complete generalized-Stieltjes integral
representations, so the exact naive + singular decomposition turns into
series representations valid where the canonical power series is useless
(2F1 beyond the unit disk, U near the origin).  Four parameter families
are covered:

  2F1(n, r; s; -zeta)              positive integers, r+1 < s < n+1, zeta > 1
  2F1(n, 1-mu; s-mu+2; -zeta)      n, s positive integers, 0 < mu < 1, zeta > 1
  U(s, s+1-n, omega)               integer s >= 1 (both n >= s and n < s)
  U(a, a-n+1, omega)               0 < a < 1, integer n >= 1, omega > 0

Empty sums are zero and 1/(negative integer)! is zero throughout.
"""

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import NonconvergenceError
from .finite_part import term_cap
from .gammafn import (EULER_GAMMA, digamma_int, gamma_ratio, gamma_real,
                      inv_factorial)

_SERIES_RTOL = 1e-15
_MU_GUARD = 1e-12


# ---------------------------------------------------------------------------
# parameter families
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Gauss2F1IntParams:
    """2F1(n, r; s; -zeta) with positive integers in the window r+1 < s < n+1."""

    n: int
    r: int
    s: int
    zeta: float

    def __post_init__(self):
        for name in ("n", "r", "s"):
            v = getattr(self, name)
            if not (isinstance(v, int) and v >= 1):
                raise ValueError(f"{name} must be a positive integer")
        if not (self.r + 1 < self.s < self.n + 1):
            raise ValueError(
                f"parameters must satisfy r+1 < s < n+1; got r={self.r}, "
                f"s={self.s}, n={self.n}"
            )
        if not self.zeta > 1.0:
            raise ValueError("zeta must exceed 1")


@dataclass(frozen=True)
class Gauss2F1BranchParams:
    """2F1(n, 1-mu; s-mu+2; -zeta) with 0 < mu < 1 and zeta > 1."""

    n: int
    mu: float
    s: int
    zeta: float

    def __post_init__(self):
        for name in ("n", "s"):
            v = getattr(self, name)
            if not (isinstance(v, int) and v >= 1):
                raise ValueError(f"{name} must be a positive integer")
        if not (_MU_GUARD < self.mu < 1.0 - _MU_GUARD):
            raise ValueError("mu must lie strictly inside (0, 1)")
        if not self.zeta > 1.0:
            raise ValueError("zeta must exceed 1")


class KummerRegime(enum.Enum):
    INT_ORDER_N_GE_S = "IntOrder_n_ge_s"
    INT_ORDER_N_LT_S = "IntOrder_n_lt_s"
    FRAC_ORDER = "FracOrder"


@dataclass(frozen=True)
class KummerParams:
    """U(s, s+1-n, omega) for integer s, or U(a, a-n+1, omega) for 0 < a < 1."""

    s_or_a: float
    n: int
    omega: float
    regime: KummerRegime = None

    def __post_init__(self):
        if not (isinstance(self.n, int) and self.n >= 1):
            raise ValueError("n must be a positive integer")
        if not self.omega > 0:
            raise ValueError("omega must be positive")
        v = self.s_or_a
        if isinstance(v, int) and v >= 1:
            inferred = (KummerRegime.INT_ORDER_N_GE_S if self.n >= v
                        else KummerRegime.INT_ORDER_N_LT_S)
        elif 0.0 < v < 1.0:
            inferred = KummerRegime.FRAC_ORDER
        else:
            raise ValueError(
                "first parameter must be a positive integer s or a real in (0,1)"
            )
        if self.regime is None:
            object.__setattr__(self, "regime", inferred)
        elif self.regime is not inferred:
            raise ValueError(
                f"regime tag {self.regime} inconsistent with parameters "
                f"(expected {inferred})"
            )


# ---------------------------------------------------------------------------
# shared series loop
# ---------------------------------------------------------------------------

def _sum_series(term_at, what):
    """Sum term_at(k) for k = 0, 1, ... with the standard two-small stop."""
    total = 0.0
    small_run = 0
    cap = term_cap()
    for k in range(cap):
        term = term_at(k)
        total += term
        if abs(term) <= _SERIES_RTOL * abs(total):
            small_run += 1
            if small_run >= 2:
                return total
        else:
            small_run = 0
    raise NonconvergenceError(f"{what} series did not converge within {cap} terms")


# ---------------------------------------------------------------------------
# 2F1, integer parameters
# ---------------------------------------------------------------------------

def _gauss_int_ak(n, r, s, k) -> Fraction:
    # finite part of int_0^1 x^{r-1}(1-x)^{s-r-1} x^{-k-n} dx over (s-r-1)!
    acc = Fraction(0)
    for l in range(s - r):
        acc += Fraction((-1) ** l,
                        math.factorial(l) * math.factorial(s - r - 1 - l)
                        * (l + r - k - n))
    return acc


def _gauss_int_cm(n, r, s, m) -> Fraction:
    acc = Fraction(0)
    for j in range(m, n - 1):
        if r + m - j - 1 < 0:
            continue
        acc += Fraction((-1) ** j,
                        (n - 1 - j) * math.factorial(j - m)
                        * math.factorial(r + m - j - 1))
    return acc


def _gauss_int_naive(n, r, s, zeta):
    pref = math.factorial(s - 1) / (math.factorial(n - 1) * math.factorial(r - 1))
    state = {"mk": math.factorial(n - 1) * zeta ** (-n)}

    def term(k):
        t = (-1) ** k * state["mk"] * float(_gauss_int_ak(n, r, s, k))
        state["mk"] *= (n + k) / ((k + 1) * zeta)
        return t

    return pref * _sum_series(term, "2F1 naive")


def _gauss_int_singular(n, r, s, zeta):
    acc = 0.0
    for m in range(n - 1):
        w = inv_factorial(s - r - m - 1)
        if w == 0.0:
            continue
        acc += float(_gauss_int_cm(n, r, s, m)) * w / (
            math.factorial(m) * (1.0 + zeta) ** m
        )
    return ((-1) ** (r - 1) * math.factorial(s - 1)
            / (zeta ** (s - 1) * (zeta + 1.0) ** (r + 1 - s)) * acc)


def gauss2f1_integer(p: Gauss2F1IntParams) -> float:
    """2F1(n, r; s; -zeta) as a convergent large-argument expansion."""
    n, r, s, zeta = p.n, p.r, p.s, p.zeta
    return _gauss_int_naive(n, r, s, zeta) + _gauss_int_singular(n, r, s, zeta)


def gauss_series(a: float, b: float, c: float, z: float) -> float:
    """Canonical 2F1 power series, |z| < 1."""
    if abs(z) >= 1.0:
        raise ValueError("canonical 2F1 series requires |z| < 1")
    total = 0.0
    t = 1.0
    small_run = 0
    for k in range(term_cap()):
        total += t
        if abs(t) <= _SERIES_RTOL * abs(total):
            small_run += 1
            if small_run >= 2:
                return total
        else:
            small_run = 0
        t *= (a + k) * (b + k) / ((c + k) * (k + 1)) * z
    raise NonconvergenceError("canonical 2F1 series did not converge")


def gauss2f1_reflection(p: Gauss2F1IntParams) -> float:
    """Same value as gauss2f1_integer with the infinite sum folded back
    into a canonical 2F1 of argument -1/zeta."""
    n, r, s, zeta = p.n, p.r, p.s, p.zeta
    inner = gauss_series(n, n - s + 1, n - r + 1, -1.0 / zeta)
    lead = ((-1) ** (s + r) * math.factorial(s - 1) * math.factorial(n - s)
            / (math.factorial(r - 1) * math.factorial(n - r) * zeta**n))
    return lead * inner + _gauss_int_singular(n, r, s, zeta)


# ---------------------------------------------------------------------------
# 2F1, branch-point parameters
# ---------------------------------------------------------------------------

def _gauss_branch_naive(n, s, mu, zeta):
    g = gamma_real(s - mu + 2.0)
    pref = g / (gamma_real(1.0 - mu) * math.factorial(n - 1) * zeta**n)
    # b_k = Gamma(1-mu-n-k)/Gamma(s-mu+2-n-k); recurrence avoids repeated
    # reflection near the negative axis
    state = {
        "bk": gamma_ratio(1.0 - mu - n, s - mu + 2.0 - n),
        "mk": math.factorial(n - 1),
    }

    def term(k):
        t = (-1) ** k * state["mk"] * state["bk"] * zeta ** (-k)
        state["bk"] *= (s - mu + 1.0 - n - k) / (-mu - n - k)
        state["mk"] *= (n + k) / (k + 1)
        return t

    return pref * _sum_series(term, "2F1 branch naive")


def _gauss_branch_singular(n, s, mu, zeta):
    g = gamma_real(s - mu + 2.0)
    acc = 0.0
    for k in range(n):
        w = inv_factorial(s - n + k + 1)
        if w == 0.0:
            continue
        acc += ((-1) ** k * gamma_real(mu + k) * w
                / (math.factorial(k) * math.factorial(n - k - 1)
                   * (1.0 + zeta) ** (n - k)))
    return ((-1) ** (n + 1) * g * (1.0 + zeta) ** (s + 1)
            / zeta ** (s - mu + 1.0) * acc)


def gauss2f1_branch(p: Gauss2F1BranchParams) -> float:
    """2F1(n, 1-mu; s-mu+2; -zeta) as a convergent large-argument expansion."""
    n, s, mu, zeta = p.n, p.s, p.mu, p.zeta
    return _gauss_branch_naive(n, s, mu, zeta) + _gauss_branch_singular(n, s, mu, zeta)


def gauss2f1_leading(p, zeta: float = None) -> float:
    """Leading zeta -> infinity behavior of either 2F1 family."""
    if isinstance(p, Gauss2F1IntParams):
        z = p.zeta if zeta is None else zeta
        n, r, s = p.n, p.r, p.s
        a0 = float(_gauss_int_ak(n, r, s, 0))
        c0 = float(_gauss_int_cm(n, r, s, 0))
        lead = math.factorial(s - 1) / (math.factorial(r - 1) * z**n) * a0
        lead += ((-1) ** (r - 1) * math.factorial(s - 1) * c0
                 / (z ** (s - 1) * (z + 1.0) ** (r + 1 - s)
                    * math.factorial(s - r - 1)))
        return lead
    if isinstance(p, Gauss2F1BranchParams):
        z = p.zeta if zeta is None else zeta
        n, s, mu = p.n, p.s, p.mu
        g = gamma_real(s - mu + 2.0)
        b0 = gamma_ratio(1.0 - mu - n, s - mu + 2.0 - n)
        lead = g / (gamma_real(1.0 - mu) * z**n) * b0
        lead += (g * gamma_real(mu + n - 1.0) * (1.0 + z) ** s
                 / (math.factorial(s) * math.factorial(n - 1)
                    * z ** (s - mu + 1.0)))
        return lead
    raise TypeError("expected Gauss2F1IntParams or Gauss2F1BranchParams")


# ---------------------------------------------------------------------------
# Kummer U
# ---------------------------------------------------------------------------

def _kummer_dm(s, n, m) -> Fraction:
    acc = Fraction(0)
    for l in range(n - 1 - m):
        if s - l - 1 < 0:
            continue
        acc += Fraction((-1) ** (l + m),
                        math.factorial(l) * math.factorial(s - l - 1)
                        * (n - 1 - l - m))
    return acc


def _kummer_log_and_poly(s, n, omega):
    """The two singular pieces shared by both integer-order regimes."""
    log_sum = 0.0
    for j in range(min(n, s)):
        log_sum += omega ** (n - 1 - j) / (
            math.factorial(j) * math.factorial(n - 1 - j)
            * math.factorial(s - j - 1)
        )
    t_log = (-1.0) ** (n + s + 1) * math.exp(omega) * math.log(omega) * log_sum

    poly_sum = 0.0
    for m in range(n - 1):
        poly_sum += omega**m / math.factorial(m) * float(_kummer_dm(s, n, m))
    t_poly = (-1.0) ** (s - 1) * math.exp(omega) * poly_sum
    return t_log, t_poly


def _kummer_int_ge(s, n, omega):
    # n >= s: every term-by-term integral is divergent
    pref = ((-1.0) ** (n - s) * omega ** (n - s)
            / (math.factorial(s - 1) * math.factorial(n - 1)))
    state = {"rk": math.factorial(n - 1) / math.factorial(n - s), "wk": 1.0}

    def term(k):
        t = state["rk"] * digamma_int(k + n + 1 - s) * state["wk"]
        state["rk"] *= (n + k) / ((k + n - s + 1) * (k + 1))
        state["wk"] *= omega
        return t

    t1 = pref * _sum_series(term, "Kummer U")
    t_log, t_poly = _kummer_log_and_poly(s, n, omega)
    return t1 + t_log + t_poly


def _kummer_int_lt(s, n, omega):
    # n < s: the first s-n terms integrate as ordinary Gamma integrals
    head = 0.0
    for k in range(s - n):
        head += (math.factorial(n + k - 1) * math.factorial(s - n - k - 1)
                 * (-omega) ** k / math.factorial(k))
    head *= omega ** (n - s) / (math.factorial(s - 1) * math.factorial(n - 1))

    pref = ((-1.0) ** (n - s) * omega ** (n - s)
            / (math.factorial(s - 1) * math.factorial(n - 1)))
    k0 = s - n
    state = {"rk": math.factorial(s - 1) / math.factorial(k0),
             "wk": omega**k0}

    def term(j):
        k = k0 + j
        t = state["rk"] * digamma_int(k + n + 1 - s) * state["wk"]
        state["rk"] *= (n + k) / ((k + n - s + 1) * (k + 1))
        state["wk"] *= omega
        return t

    t1 = pref * _sum_series(term, "Kummer U")
    t_log, t_poly = _kummer_log_and_poly(s, n, omega)
    return head + t1 + t_log + t_poly


def _kummer_frac(a, n, omega):
    pref = ((-1.0) ** n * gamma_real(1.0 - a) * omega ** (n - a)
            / math.factorial(n - 1))
    state = {"rk": math.factorial(n - 1) / gamma_real(n + 1.0 - a), "wk": 1.0}

    def term(k):
        t = state["rk"] * state["wk"]
        state["rk"] *= (n + k) / ((n + k + 1.0 - a) * (k + 1))
        state["wk"] *= omega
        return t

    t1 = pref * _sum_series(term, "Kummer U")

    acc = 0.0
    for k in range(n):
        acc += (gamma_real(k + 1.0 - a)
                / (math.factorial(k) * math.factorial(n - 1 - k)
                   * (-omega) ** k))
    t2 = (-1.0) ** (n + 1) * math.exp(omega) * omega ** (n - 1) * acc
    return t1 + t2


def kummer_u(p: KummerParams) -> float:
    """Kummer U at the covered parameter families, by regime."""
    if p.regime is KummerRegime.INT_ORDER_N_GE_S:
        return _kummer_int_ge(int(p.s_or_a), p.n, p.omega)
    if p.regime is KummerRegime.INT_ORDER_N_LT_S:
        return _kummer_int_lt(int(p.s_or_a), p.n, p.omega)
    return _kummer_frac(float(p.s_or_a), p.n, p.omega)


def kummer_u_leading(p: KummerParams, omega: float = None) -> float:
    """Leading omega -> 0 behavior of U at the covered families,
    including the exp(omega) and ln(omega) factors of the dominant rows."""
    w = p.omega if omega is None else omega
    n = p.n
    if p.regime is KummerRegime.FRAC_ORDER:
        a = float(p.s_or_a)
        return ((-1.0) ** n * gamma_real(1.0 - a) * w ** (n - a)
                / gamma_real(n + 1.0 - a)
                + math.exp(w) * gamma_real(n - a) / math.factorial(n - 1))
    s = int(p.s_or_a)
    d0 = float(_kummer_dm(s, n, 0))
    if p.regime is KummerRegime.INT_ORDER_N_GE_S:
        val = ((-1.0) ** (n - s) * digamma_int(n + 1 - s) * w ** (n - s)
               / (math.factorial(s - 1) * math.factorial(n - s)))
        if s == n:
            val += (-1.0) ** (n + s + 1) * math.exp(w) * math.log(w) \
                / math.factorial(n - 1)
        val += (-1.0) ** (s - 1) * math.exp(w) * d0
        return val
    val = math.factorial(s - n - 1) / (math.factorial(s - 1) * w ** (s - n))
    val += ((-1.0) ** (n - s + 1) * EULER_GAMMA
            / (math.factorial(s - n) * math.factorial(n - 1)))
    val += ((-1.0) ** (n + s + 1) * math.exp(w) * math.log(w)
            / (math.factorial(n - 1) * math.factorial(s - n)))
    val += (-1.0) ** (s - 1) * math.exp(w) * d0
    return val
