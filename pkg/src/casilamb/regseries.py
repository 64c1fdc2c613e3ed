"""Sawtooth function, its Gaussian-damped Fourier series, and the comb
remainder that connects the two through summation-by-integral identities.

The closed form is the odd 1-periodic sawtooth pi*(1/2 - frac(s)), vanishing
at integers.  The damped series sum_p sin(2 pi p s) exp(-eps p^2) / p
converges to it pointwise as eps -> 0+, and the two are linked for every s by

    series(s, eps) = (pi/2) sign(s) erf(pi |s| / sqrt(eps)) - pi s + R1(s, eps)

where R1 is a sum of erf-difference comb terms.  R1 -> 0 as eps -> 0+ only
for s in [0, 1/2]; for larger s it converges to a nonzero integer-counting
limit, which is what makes the identity worth checking numerically.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import kernels
from .errors import DomainError
from .special import erf, erfc

_DEFAULT_TAIL_TOL = 1e-13


@dataclass(frozen=True)
class RegularizationParams:
    """Damping strength and truncation policy for the damped sine series."""

    epsilon: float
    max_terms: int
    tail_tolerance: float = _DEFAULT_TAIL_TOL

    def __post_init__(self):
        if self.epsilon <= 0.0:
            raise DomainError("epsilon must be positive")
        if self.tail_tolerance <= 0.0:
            raise DomainError("tail_tolerance must be positive")
        if self.max_terms < 1:
            raise DomainError("max_terms must be a positive integer")
        bound = math.exp(-self.epsilon * self.max_terms ** 2) / self.max_terms
        if bound >= self.tail_tolerance:
            raise DomainError(
                "max_terms too small: termwise bound "
                f"{bound:.3e} >= tail_tolerance {self.tail_tolerance:.3e}"
            )

    @classmethod
    def for_epsilon(
        cls, epsilon: float, tail_tolerance: float = _DEFAULT_TAIL_TOL
    ) -> "RegularizationParams":
        """Smallest max_terms whose termwise bound clears tail_tolerance."""
        if epsilon <= 0.0:
            raise DomainError("epsilon must be positive")
        n = int(math.ceil(math.sqrt(max(math.log(1.0 / tail_tolerance), 1.0) / epsilon))) + 2
        while math.exp(-epsilon * n * n) / n >= tail_tolerance:
            n += max(n // 8, 1)
        return cls(epsilon, n, tail_tolerance)


def g_closed(s: float) -> float:
    """Closed-form sawtooth: pi*(1/2 - frac(s)) for non-integer s, 0 at integers.

    Odd, 1-periodic, bounded by pi/2.  Integer detection snaps inputs within
    1e-12 of an integer; the function is discontinuous there and every
    quadrature in the package splits panels at integers, so the snap window
    only touches a measure-zero set.
    """
    return kernels.sawtooth(float(s))


def g_regularized(s: float, params: RegularizationParams) -> float:
    """Damped series sum_{p>=1} sin(2 pi p s) exp(-eps p^2) / p.

    Truncation error stays below params.tail_tolerance; cost is O(1/sqrt(eps)).
    """
    return kernels.damped_sine_series(
        float(s), params.epsilon, params.tail_tolerance, params.max_terms
    )


def comb_term(n: int, s: float, epsilon: float) -> float:
    """n-th comb term h(n, s; eps) of the remainder R1, valid for any real s.

    For s in [0, 1/2] this is (pi/2)[erf(pi(n+s)/sqrt(eps)) - erf(pi(n-s)/sqrt(eps))],
    nonnegative and bounded by pi exp(-pi^2 (n-1)/eps).  The general-s form
    carries sign factors so that the eps -> 0+ limit is pi sign(s) for n < |s|,
    (pi/2) sign(s) at n = |s|, and 0 for n > |s|.
    """
    if n < 1:
        raise DomainError("n must be a positive integer")
    if epsilon <= 0.0:
        raise DomainError("epsilon must be positive")
    a = abs(s)
    if a == 0.0:
        return 0.0
    sgn = 1.0 if s > 0 else -1.0
    c = math.pi / math.sqrt(epsilon)
    if n > a:
        # erf(c(n+a)) - erf(c(n-a)) = erfc(c(n-a)) - erfc(c(n+a)); the erfc
        # form avoids the catastrophic 1 - 1 cancellation once both
        # arguments are large.
        val = erfc(c * (n - a)) - erfc(c * (n + a))
    elif n < a:
        val = erf(c * (n + a)) + erf(c * (a - n))
    else:
        val = erf(c * (n + a))
    return 0.5 * math.pi * sgn * val


def remainder_R1(
    s: float, epsilon: float, tail_tolerance: float = _DEFAULT_TAIL_TOL
) -> float:
    """Comb remainder R1(s, eps) = sum_{n>=1} comb_term(n, s, eps).

    Terms with n <= |s| are order one; beyond that they decay like
    exp(-pi^2 (n-|s|)^2 / eps), so summation stops at the first n > |s|
    whose termwise bound (pi/2) erfc(pi (n-|s|)/sqrt(eps)) falls below a
    safety-scaled tail_tolerance.

    The eps -> 0+ limit is 0 on (0, 1/2], pi*floor(s) for non-integer s > 0,
    and pi*(s - sign(s)/2) at nonzero integers.
    """
    if epsilon <= 0.0:
        raise DomainError("epsilon must be positive")
    a = abs(s)
    total = 0.0
    c = math.pi / math.sqrt(epsilon)
    n = 1
    while True:
        if n > a:
            bound = 0.5 * math.pi * erfc(c * (n - a))
            if bound < 0.1 * tail_tolerance:
                break
        total += comb_term(n, s, epsilon)
        n += 1
        if n > a + 1000:  # unreachable for sane eps; guards pathological input
            raise DomainError(f"comb series did not truncate (s={s}, eps={epsilon})")
    return total


def euler_maclaurin_identity_check(s: float, epsilon: float) -> float:
    """Residual of the summation identity linking series, integral and comb.

    Returns g_regularized(s) - [(pi/2) sign(s) erf(pi |s|/sqrt(eps)) - pi s
    + R1(s, eps)]; exact in real arithmetic, so the residual measures pure
    truncation/rounding error.  Stays below 1e-9 for eps in [1e-4, 1] with
    the default tolerances (the contract the test grid pins down on s in
    [0, 1/2], where all three pieces are individually order one).
    """
    params = RegularizationParams.for_epsilon(epsilon)
    series = g_regularized(s, params)
    integral = 0.5 * math.pi * math.copysign(1.0, s) * erf(
        math.pi * abs(s) / math.sqrt(epsilon)
    ) if s != 0.0 else 0.0
    return series - (integral - math.pi * s + remainder_R1(s, epsilon))
