"""Small gamma-family helpers used by the series evaluators.

Only the pieces the series representations actually need live here:
digamma at positive integers, log-gamma with sign for arbitrary real
(non-pole) arguments, and rising factorials.  Negative non-integer
arguments go through the reflection formula so no evaluation ever lands
next to a pole of Gamma itself.
"""

import math

EULER_GAMMA = 0.57721566490153286061

# Harmonic numbers H_0, H_1, ... grown on demand with compensated
# accumulation (error stays below one ulp of the running sum).
_harmonic = [0.0]
_harmonic_c = [0.0]


def harmonic(n: int) -> float:
    """H_n = sum_{j=1..n} 1/j, compensated; H_0 = 0."""
    if n < 0:
        raise ValueError("harmonic index must be >= 0")
    while len(_harmonic) <= n:
        j = len(_harmonic)
        s, c = _harmonic[-1], _harmonic_c[-1]
        y = 1.0 / j - c
        t = s + y
        c = (t - s) - y
        _harmonic.append(t)
        _harmonic_c.append(c)
    return _harmonic[n]


def digamma_int(n: int) -> float:
    """psi(n) for integer n >= 1 via psi(1) = -gamma, psi(n+1) = psi(n) + 1/n."""
    if n < 1:
        raise ValueError("digamma_int defined for positive integers only")
    return harmonic(n - 1) - EULER_GAMMA


def lgamma_signed(x: float) -> tuple[float, float]:
    """Return (log|Gamma(x)|, sign) for real non-pole x.

    Negative arguments use Gamma(x) Gamma(1-x) = pi / sin(pi x); x at or
    within 1e-12 of a non-positive integer raises.
    """
    if x > 0.0:
        return math.lgamma(x), 1.0
    if abs(x - round(x)) < 1e-12:
        raise ValueError(f"Gamma pole at x = {x}")
    s = math.sin(math.pi * x)
    log_abs = math.log(math.pi) - math.log(abs(s)) - math.lgamma(1.0 - x)
    return log_abs, math.copysign(1.0, s)


def gamma_real(x: float) -> float:
    """Gamma(x) for real non-pole x, reflection-based for x < 0."""
    log_abs, sign = lgamma_signed(x)
    return sign * math.exp(log_abs)


def gamma_ratio(x: float, y: float) -> float:
    """Gamma(x) / Gamma(y) without overflow, both arguments non-pole."""
    lx, sx = lgamma_signed(x)
    ly, sy = lgamma_signed(y)
    return sx * sy * math.exp(lx - ly)


def pochhammer(x: float, k: int) -> float:
    """Rising factorial (x)_k = x (x+1) ... (x+k-1); (x)_0 = 1."""
    if k < 0:
        raise ValueError("pochhammer order must be >= 0")
    out = 1.0
    for j in range(k):
        out *= x + j
    return out


def inv_factorial(n: int) -> float:
    """1/n! with the convention 1/(negative integer)! = 0."""
    if n < 0:
        return 0.0
    return 1.0 / math.factorial(n)
