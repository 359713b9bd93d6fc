"""Entire functions represented by their Maclaurin coefficient streams.

Every function handled by this package is an entire function f with
f(z) = sum_k c_k z^k everywhere.  The built-in descriptors (decaying
exponentials, polynomials, binomial kernels, monomial-times-exponential)
carry exact closed forms for coefficients, point values, complex values
and derivatives, so downstream series never inherit coefficient error.
User-supplied streams go through :class:`CustomSeries`, which must declare
both the coefficients and a point-evaluation callback; nothing here ever
differentiates a black box numerically.

Instances are immutable after construction and safe to share across
threads (coefficient memoization is lock-guarded per instance).
"""

import cmath
import math
import threading

from .errors import IndeterminateZeroOrderError, NonconvergenceError

EVAL_TERM_CAP = 1024
ZERO_ORDER_SCAN_CAP = 256

_EVAL_RTOL = 1e-15


class TaylorFunction:
    """Base class: an entire function known through its Maclaurin series.

    Subclasses implement ``_coeff`` and may override the evaluation hooks
    with closed forms.  The base implementations sum partial series to
    relative tolerance 1e-15 with a hard term cap.
    """

    def __init__(self):
        self._memo = {}
        self._lock = threading.Lock()

    # -- coefficients ------------------------------------------------

    def coeff(self, k: int) -> float:
        """Maclaurin coefficient c_k, memoized."""
        if k < 0:
            raise ValueError("coefficient index must be >= 0")
        with self._lock:
            v = self._memo.get(k)
            if v is None:
                v = self._coeff(k)
                self._memo[k] = v
        return v

    def _coeff(self, k: int) -> float:
        raise NotImplementedError

    # -- evaluation ---------------------------------------------------

    def eval(self, x: float) -> float:
        return self._series_eval(x).real

    def eval_complex(self, z: complex) -> complex:
        return self._series_eval(complex(z))

    def _series_eval(self, z: complex, shift: int = 0) -> complex:
        """sum_{k>=shift} c_k z^{k-shift} by partial sums.

        Streams whose nonzero coefficients are separated by runs of two or
        more zeros may truncate early under the two-consecutive-small rule;
        such providers should supply explicit evaluation callbacks.
        """
        total = 0.0 + 0.0j
        small_run = 0
        zk = 1.0 + 0.0j
        k = shift
        while k < shift + EVAL_TERM_CAP:
            term = self.coeff(k) * zk
            total += term
            if not cmath.isfinite(total):
                raise NonconvergenceError(
                    "series evaluation overflowed; stream is not behaving "
                    "like an entire function"
                )
            if abs(term) <= _EVAL_RTOL * abs(total):
                small_run += 1
                if small_run >= 2 and k >= self.zero_order():
                    return total
            else:
                small_run = 0
            zk *= z
            k += 1
        raise NonconvergenceError(
            f"series evaluation did not settle within {EVAL_TERM_CAP} terms"
        )

    def derivative_at(self, k: int, x: float) -> float:
        """k-th derivative at x; differentiated series unless overridden."""
        if k < 0:
            raise ValueError("derivative order must be >= 0")
        if k == 0:
            return self.eval(x)
        total = 0.0
        small_run = 0
        j = k
        # falling-factorial weight j!/(j-k)! maintained multiplicatively
        w = float(math.factorial(k))
        xp = 1.0
        while j < k + EVAL_TERM_CAP:
            term = self.coeff(j) * w * xp
            total += term
            if abs(term) <= _EVAL_RTOL * abs(total):
                small_run += 1
                if small_run >= 2 and j >= self.zero_order():
                    return total
            else:
                small_run = 0
            w *= (j + 1) / (j + 1 - k)
            xp *= x
            j += 1
        raise NonconvergenceError(
            f"derivative series did not settle within {EVAL_TERM_CAP} terms"
        )

    # -- structure ----------------------------------------------------

    def zero_order(self) -> int:
        """Order of the zero at the origin: smallest k with c_k != 0."""
        for k in range(ZERO_ORDER_SCAN_CAP + 1):
            if self.coeff(k) != 0.0:
                return k
        raise IndeterminateZeroOrderError(
            f"no nonzero coefficient found for k <= {ZERO_ORDER_SCAN_CAP}"
        )

    def finite_degree(self):
        """Polynomial degree if the stream terminates, else None."""
        return None

    def decays_at_infinity(self) -> bool:
        """True when f(x) x^{-m} is integrable at infinity for every m >= 1."""
        return False

    # -- scaling ------------------------------------------------------

    def scaled(self, factor: float) -> "TaylorFunction":
        if factor == 0.0:
            raise ValueError("scale factor must be nonzero")
        return Scaled(self, factor)

    def __mul__(self, factor):
        return self.scaled(float(factor))

    __rmul__ = __mul__

    def __truediv__(self, divisor):
        return self.scaled(1.0 / float(divisor))


class Exponential(TaylorFunction):
    """f(x) = exp(-b x), b > 0."""

    def __init__(self, b: float):
        super().__init__()
        if b <= 0:
            raise ValueError("Exponential requires b > 0")
        self.b = float(b)

    def _coeff(self, k):
        # exact ratio for small k, log form once factorials overflow floats
        if k <= 150:
            return (-self.b) ** k / math.factorial(k)
        mag = math.exp(k * math.log(self.b) - math.lgamma(k + 1))
        return -mag if k % 2 else mag

    def eval(self, x):
        return math.exp(-self.b * x)

    def eval_complex(self, z):
        return cmath.exp(-self.b * z)

    def derivative_at(self, k, x):
        if k < 0:
            raise ValueError("derivative order must be >= 0")
        return (-self.b) ** k * math.exp(-self.b * x)

    def zero_order(self):
        return 0

    def decays_at_infinity(self):
        return True

    def __repr__(self):
        return f"Exponential(b={self.b:g})"


class Polynomial(TaylorFunction):
    """f(x) = sum_{k=r}^{s} a_k x^k with a_r != 0 and a_s != 0.

    ``coeffs[i]`` holds a_{lowest+i}; leading/trailing zeros are trimmed.
    """

    def __init__(self, coeffs, lowest: int = 0):
        super().__init__()
        coeffs = [float(c) for c in coeffs]
        if lowest < 0:
            raise ValueError("lowest exponent must be >= 0")
        while coeffs and coeffs[0] == 0.0:
            coeffs.pop(0)
            lowest += 1
        while coeffs and coeffs[-1] == 0.0:
            coeffs.pop()
        if not coeffs:
            raise ValueError("polynomial must not be identically zero")
        self.coeffs = tuple(coeffs)
        self.lowest = lowest

    @classmethod
    def from_dict(cls, terms: dict) -> "Polynomial":
        lo = min(terms)
        hi = max(terms)
        return cls([terms.get(k, 0.0) for k in range(lo, hi + 1)], lowest=lo)

    @property
    def degree(self) -> int:
        return self.lowest + len(self.coeffs) - 1

    def _coeff(self, k):
        i = k - self.lowest
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0.0

    def eval(self, x):
        acc = 0.0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc * x**self.lowest

    def eval_complex(self, z):
        acc = 0.0 + 0.0j
        for c in reversed(self.coeffs):
            acc = acc * z + c
        return acc * z**self.lowest

    def derivative_at(self, k, x):
        if k < 0:
            raise ValueError("derivative order must be >= 0")
        if k == 0:
            return self.eval(x)
        total = 0.0
        for i, c in enumerate(self.coeffs):
            j = self.lowest + i
            if j >= k:
                total += c * math.perm(j, k) * x ** (j - k)
        return total

    def zero_order(self):
        return self.lowest

    def finite_degree(self):
        return self.degree

    def __repr__(self):
        return f"Polynomial({list(self.coeffs)}, lowest={self.lowest})"


class BinomialPoly(Polynomial):
    """f(x) = x^p (1-x)^q for non-negative integers p, q."""

    def __init__(self, p: int, q: int):
        if p < 0 or q < 0:
            raise ValueError("BinomialPoly requires p, q >= 0")
        coeffs = [(-1) ** j * math.comb(q, j) for j in range(q + 1)]
        super().__init__(coeffs, lowest=p)
        self.p = p
        self.q = q

    def eval(self, x):
        return x**self.p * (1.0 - x) ** self.q

    def eval_complex(self, z):
        return z**self.p * (1.0 - z) ** self.q

    def __repr__(self):
        return f"BinomialPoly(p={self.p}, q={self.q})"


class MonomialExp(TaylorFunction):
    """f(x) = x^p exp(-b x) for non-negative integer p and b > 0."""

    def __init__(self, p: int, b: float):
        super().__init__()
        if p < 0:
            raise ValueError("MonomialExp requires p >= 0")
        if b <= 0:
            raise ValueError("MonomialExp requires b > 0")
        self.p = int(p)
        self.b = float(b)
        self._exp = Exponential(b)

    def _coeff(self, k):
        if k < self.p:
            return 0.0
        return self._exp.coeff(k - self.p)

    def eval(self, x):
        return x**self.p * math.exp(-self.b * x)

    def eval_complex(self, z):
        return z**self.p * cmath.exp(-self.b * z)

    def derivative_at(self, k, x):
        if k < 0:
            raise ValueError("derivative order must be >= 0")
        # Leibniz rule; the monomial factor dies after p differentiations
        total = 0.0
        for j in range(min(k, self.p) + 1):
            total += (
                math.comb(k, j)
                * math.perm(self.p, j)
                * x ** (self.p - j)
                * (-self.b) ** (k - j)
            )
        return total * math.exp(-self.b * x)

    def zero_order(self):
        return self.p

    def decays_at_infinity(self):
        return True

    def __repr__(self):
        return f"MonomialExp(p={self.p}, b={self.b:g})"


class CustomSeries(TaylorFunction):
    """User-supplied entire function.

    Parameters
    ----------
    coeff_fn : callable
        Maps k >= 0 to the Maclaurin coefficient c_k.  The provider owns
        rounding: zero-order detection compares these values to 0.0 exactly.
    eval_fn : callable
        Point evaluation on the real axis.  Required; the library never
        differentiates a black box, but real evaluation must not depend on
        series convergence heuristics either.
    eval_complex_fn : callable, optional
        Complex evaluation; partial sums of the stream are used when absent.
    entire : bool
        Declared contract that the stream has infinite radius of
        convergence.  It cannot be verified here and must be True.
    decaying : bool
        Declares f(x) x^{-1} integrable at infinity (e.g. exponential
        decay), which admits the function to infinite-limit finite parts.
    """

    def __init__(self, coeff_fn, eval_fn, eval_complex_fn=None, *,
                 entire: bool = True, decaying: bool = False, label: str = "custom"):
        super().__init__()
        if not entire:
            raise ValueError("CustomSeries requires a declared-entire stream")
        self.coeff_fn = coeff_fn
        self.eval_fn = eval_fn
        self.eval_complex_fn = eval_complex_fn
        self.decaying = bool(decaying)
        self.label = label

    def _coeff(self, k):
        return float(self.coeff_fn(k))

    def eval(self, x):
        return float(self.eval_fn(x))

    def eval_complex(self, z):
        if self.eval_complex_fn is not None:
            return complex(self.eval_complex_fn(z))
        return self._series_eval(complex(z))

    def decays_at_infinity(self):
        return self.decaying

    def __repr__(self):
        return f"CustomSeries({self.label})"


class Scaled(TaylorFunction):
    """c * f for a nonzero scalar c; finite parts and transforms are linear."""

    def __init__(self, base: TaylorFunction, factor: float):
        super().__init__()
        if factor == 0.0:
            raise ValueError("scale factor must be nonzero")
        if isinstance(base, Scaled):
            factor *= base.factor
            base = base.base
        self.base = base
        self.factor = float(factor)

    def _coeff(self, k):
        return self.factor * self.base.coeff(k)

    def eval(self, x):
        return self.factor * self.base.eval(x)

    def eval_complex(self, z):
        return self.factor * self.base.eval_complex(z)

    def derivative_at(self, k, x):
        return self.factor * self.base.derivative_at(k, x)

    def zero_order(self):
        return self.base.zero_order()

    def finite_degree(self):
        return self.base.finite_degree()

    def decays_at_infinity(self):
        return self.base.decays_at_infinity()

    def __repr__(self):
        return f"{self.factor:g}*{self.base!r}"


def unscale(f: TaylorFunction) -> tuple[TaylorFunction, float]:
    """Split f into (base, factor); identity for unscaled functions."""
    if isinstance(f, Scaled):
        return f.base, f.factor
    return f, 1.0
