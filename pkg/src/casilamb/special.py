"""Special-function substrate: exact Bernoulli numbers, periodic Bernoulli
functions, Gamma half-integer ratios and the error function.

Bernoulli numbers are generated once as exact rationals through the binomial
recurrence and cached together with their float values; every downstream
correction term and remainder bound draws on this table, so its correctness
is load-bearing for the whole package.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DomainError

MAX_EVEN_INDEX = 120

_SQRT_PI = math.sqrt(math.pi)


@dataclass(frozen=True)
class BernoulliTable:
    """Even-index Bernoulli numbers b_2, b_4, ..., b_max as exact rationals.

    Uses the convention B_1 = -1/2; odd-index numbers beyond B_1 vanish and
    are not stored.  Floats are cached alongside the rationals so hot paths
    never convert on the fly.
    """

    max_even_index: int
    rationals: tuple[Fraction, ...] = field(repr=False)
    floats: tuple[float, ...] = field(repr=False)

    @classmethod
    def build(cls, max_even_index: int = MAX_EVEN_INDEX) -> "BernoulliTable":
        if max_even_index < 2 or max_even_index % 2:
            raise DomainError("max_even_index must be an even integer >= 2")
        # Sum_{k=0}^{n-1} C(n+1, k) B_k = -(n+1) B_n, with B_0 = 1, B_1 = -1/2.
        full = [Fraction(1), Fraction(-1, 2)]
        for n in range(2, max_even_index + 1):
            if n % 2 and n > 1:
                full.append(Fraction(0))
                continue
            acc = Fraction(0)
            for k in range(n):
                if full[k]:
                    acc += math.comb(n + 1, k) * full[k]
            full.append(-acc / (n + 1))
        evens = tuple(full[n] for n in range(2, max_even_index + 1, 2))
        return cls(max_even_index, evens, tuple(float(b) for b in evens))

    def _index(self, n: int) -> int:
        if n % 2 or not 2 <= n <= self.max_even_index:
            raise DomainError(
                f"Bernoulli index must be even and in [2, {self.max_even_index}], got {n}"
            )
        return n // 2 - 1

    def rational(self, n: int) -> Fraction:
        """Exact b_n for even n."""
        return self.rationals[self._index(n)]

    def value(self, n: int) -> float:
        """Float b_n for even n."""
        return self.floats[self._index(n)]


_DEFAULT_TABLE: BernoulliTable | None = None


def default_table() -> BernoulliTable:
    """The shared table up to index 120 (built once, immutable)."""
    global _DEFAULT_TABLE
    if _DEFAULT_TABLE is None:
        _DEFAULT_TABLE = BernoulliTable.build(MAX_EVEN_INDEX)
    return _DEFAULT_TABLE


def bernoulli_number(n: int) -> Fraction:
    """Exact Bernoulli number b_n for even n in [2, 120].

    Beyond index 120 the table deliberately errors instead of silently losing
    precision; the asymptotic expansions downstream diverge long before that.
    """
    return default_table().rational(n)


def bernoulli_float(n: int) -> float:
    """Float value of b_n for even n in [2, 120]."""
    return default_table().value(n)


@dataclass(frozen=True)
class PeriodicBernoulli:
    """1-periodic extension of the Bernoulli polynomial of even order."""

    order: int
    coeffs: tuple[float, ...]  # ascending powers of x on [0, 1]

    @classmethod
    def build(cls, order: int, table: BernoulliTable | None = None) -> "PeriodicBernoulli":
        table = table or default_table()
        if order % 2 or order < 2:
            raise DomainError(f"order must be a positive even integer, got {order}")
        if order > table.max_even_index:
            raise DomainError(f"order {order} exceeds the Bernoulli table")
        # B_n(x) = Sum_k C(n,k) B_k x**(n-k)
        full_b = [Fraction(1), Fraction(-1, 2)]
        for m in range(2, order + 1):
            full_b.append(table.rational(m) if m % 2 == 0 else Fraction(0))
        coeffs = [Fraction(0)] * (order + 1)
        for k in range(order + 1):
            coeffs[order - k] = math.comb(order, k) * full_b[k]
        return cls(order, tuple(float(c) for c in coeffs))

    def __call__(self, t: float) -> float:
        x = t - math.floor(t)
        acc = 0.0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc


_PERIODIC_CACHE: dict[int, PeriodicBernoulli] = {}


def periodic_bernoulli(order: int, t: float) -> float:
    """Periodic Bernoulli function of even order evaluated at t.

    Agrees with the Bernoulli polynomial on [0, 1) and is extended by
    1-periodicity; cross-checkable against the cosine Fourier series
    2 (-1)^(r-1) (2r)! sum_n cos(2 n pi t) / (2 n pi)^(2r).
    """
    if order not in _PERIODIC_CACHE:
        _PERIODIC_CACHE[order] = PeriodicBernoulli.build(order)
    return _PERIODIC_CACHE[order](t)


def gamma_half_ratio(p: int) -> float:
    """Gamma(p + 1/2) / (p! Gamma(1/2)) by the stable product recurrence.

    r_0 = 1 and r_{p+1} = r_p (p + 1/2) / (p + 1); no Gamma evaluation, no
    overflow, valid for arbitrarily large p (r_p ~ 1/sqrt(pi p)).
    """
    if p < 0:
        raise DomainError(f"p must be a nonnegative integer, got {p}")
    r = 1.0
    for k in range(p):
        r *= (k + 0.5) / (k + 1.0)
    return r


def erf(x: float) -> float:
    """Error function, absolute accuracy better than 1e-14.

    Maclaurin series for |x| <= 2, complementary continued fraction beyond.
    """
    if x < 0.0:
        return -erf(-x)
    if x <= 2.0:
        return _erf_series(x)
    return 1.0 - _erfc_cf(x)


def erfc(x: float) -> float:
    """Complementary error function 1 - erf(x), accurate in the far tail."""
    if x < 0.0:
        return 2.0 - erfc(-x)
    if x <= 2.0:
        return 1.0 - _erf_series(x)
    return _erfc_cf(x)


def _erf_series(x: float) -> float:
    # 2/sqrt(pi) Sum (-1)^n x^(2n+1) / (n! (2n+1)); terms fall below 1e-17
    # after ~32 terms at the matching point x = 2.
    x2 = x * x
    term = x
    acc = x
    for n in range(1, 80):
        term *= -x2 / n
        inc = term / (2 * n + 1)
        acc += inc
        if abs(inc) < 1e-18:
            break
    return 2.0 / _SQRT_PI * acc


def _erfc_cf(x: float) -> float:
    # erfc(x) = exp(-x^2)/sqrt(pi) * 1/(x + (1/2)/(x + 1/(x + (3/2)/(x + ...))))
    # evaluated with the modified Lentz algorithm.
    tiny = 1e-300
    f = x if x != 0.0 else tiny
    c = f
    d = 0.0
    for k in range(1, 200):
        a = 0.5 * k
        d = x + a * d
        if d == 0.0:
            d = tiny
        c = x + a / c
        if c == 0.0:
            c = tiny
        d = 1.0 / d
        delta = c * d
        f *= delta
        if abs(delta - 1.0) < 1e-17:
            break
    ex = math.exp(-x * x)
    return ex / (_SQRT_PI * f) if ex else 0.0
