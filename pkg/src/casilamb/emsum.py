"""Euler-Maclaurin summation with Bernoulli corrections and computable
remainder bounds, plus the optimally truncated evaluator for the divergent
asymptotic series that the plate-correction expansions produce.

The summation formula used throughout:

    sum_{p=0}^{N} f(p) = int_0^N f + (f(N)+f(0))/2
                         + sum_{n=1}^{r} b_{2n}/(2n)! [f^(2n-1)(N) - f^(2n-1)(0)]
                         + remainder,
    |remainder| <= |b_{2r}|/(2r)! int_0^N |f^(2r)|,

the last step using that the periodic Bernoulli function of order 2r is
bounded by |b_{2r}| on the whole line.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Optional

from .errors import DomainError
from .quad import QuadSpec, integrate_finite
from .special import bernoulli_float

_EPS = 2.220446049250313e-16

EM_MAX_ORDER = 10  # correction depth cap; beyond this the bounds stop improving


@dataclass(frozen=True)
class SmoothFunction:
    """A function together with a way to take its derivatives.

    Analytic derivative evaluators are exact to call accuracy and required
    for orders above 5.  The finite-difference fallback uses central
    stencils with one Richardson extrapolation step and step size
    eps_machine**(1/(m+2)) * scale.
    """

    value: Callable[[float], float]
    derivative: Optional[Callable[[int, float], float]] = None
    scale: float = 1.0

    @property
    def derivative_mode(self) -> str:
        return "analytic" if self.derivative is not None else "finite-difference"

    def deriv(self, order: int, t: float) -> float:
        if order == 0:
            return self.value(t)
        if self.derivative is not None:
            return self.derivative(order, t)
        if order > 5:
            raise DomainError(
                f"finite differences are unreliable at order {order}; "
                "supply an analytic derivative evaluator"
            )
        h = _EPS ** (1.0 / (order + 2)) * self.scale
        d1 = self._central(order, t, h)
        d2 = self._central(order, t, 0.5 * h)
        return (4.0 * d2 - d1) / 3.0

    def _central(self, m: int, t: float, h: float) -> float:
        acc = 0.0
        for k in range(m + 1):
            acc += (-1.0) ** k * math.comb(m, k) * self.value(t + (0.5 * m - k) * h)
        return acc / h ** m


@dataclass
class EmSumResult:
    estimate: float
    correction_terms: tuple[float, ...]
    remainder_bound: float
    integral: float


def em_sum(
    f: SmoothFunction, n_upper: int, r: int, spec: Optional[QuadSpec] = None
) -> EmSumResult:
    """Euler-Maclaurin estimate of sum_{p=0}^{n_upper} f(p) with r corrections."""
    if r < 1 or r > EM_MAX_ORDER:
        raise DomainError(f"correction order r must be in [1, {EM_MAX_ORDER}], got {r}")
    if n_upper < 1:
        raise DomainError("n_upper must be a positive integer")
    spec = spec or QuadSpec(relative_tolerance=1e-13, absolute_tolerance=1e-14)
    integral = integrate_finite(f.value, 0.0, float(n_upper), spec).value
    boundary = 0.5 * (f.value(float(n_upper)) + f.value(0.0))
    corrections = []
    for n in range(1, r + 1):
        coeff = bernoulli_float(2 * n) / math.factorial(2 * n)
        corrections.append(
            coeff * (f.deriv(2 * n - 1, float(n_upper)) - f.deriv(2 * n - 1, 0.0))
        )
    abs_deriv = integrate_finite(
        lambda t: abs(f.deriv(2 * r, t)), 0.0, float(n_upper), spec
    ).value
    remainder = abs(bernoulli_float(2 * r)) / math.factorial(2 * r) * abs_deriv
    return EmSumResult(
        estimate=integral + boundary + sum(corrections),
        correction_terms=tuple(corrections),
        remainder_bound=remainder,
        integral=integral,
    )


@dataclass
class AsymptoticSeries:
    """A truncated (possibly divergent) series with its truncation record.

    ``terms`` holds the retained values a_1..a_k; ``remainder_bound`` is the
    magnitude of the first omitted term, which for these Bernoulli-type
    expansions bounds the truncation error at optimal truncation.
    """

    terms: tuple[float, ...] = field(repr=False)
    truncation_index: int
    remainder_bound: float
    diverged: bool

    @property
    def partial_sum(self) -> float:
        return math.fsum(self.terms)


def asymptotic_eval(term_generator: Callable[[int], float], r_max: int) -> AsymptoticSeries:
    """Accumulate terms a_1, a_2, ... up to optimal truncation or r_max.

    Optimal truncation stops immediately before the first term whose
    magnitude exceeds its (nonzero) predecessor -- for the Bernoulli series
    handled here that reproduces the textbook smallest-term rule, while the
    nonzero guard lets identically vanishing terms (terminating expansions)
    pass through.  ``diverged`` records whether growth was actually hit.
    """
    if r_max < 1:
        raise DomainError("r_max must be >= 1")
    terms: list[float] = []
    diverged = False
    first_omitted = None
    n = 1
    while n <= r_max:
        t = term_generator(n)
        if terms and abs(terms[-1]) > 0.0 and abs(t) > abs(terms[-1]):
            diverged = True
            first_omitted = abs(t)
            break
        terms.append(t)
        n += 1
    if first_omitted is None:
        first_omitted = abs(term_generator(r_max + 1))
    return AsymptoticSeries(
        terms=tuple(terms),
        truncation_index=len(terms),
        remainder_bound=first_omitted,
        diverged=diverged,
    )


def omitted_tail_bound(
    term_generator: Callable[[int], float],
    truncation_index: int,
    n_cap: int,
) -> float:
    """Practical truncation-error bound built from the omitted terms.

    An alternating tail is bracketed by its first term, but the same-sign
    tails the plate weights produce add up: the remainder then tracks the
    whole accessible tail.  So: sum |terms| from the first omitted one
    through the series minimum (or n_cap), then cushion with twice the
    smallest term seen plus half the first omitted term.  The cushion
    absorbs the super-asymptotic piece the term scan cannot see; the bound
    is practical rather than proven (the theorem-level constants are not
    computable), and it collapses to the first-omitted-term rule whenever
    the terms plunge fast.
    """
    first = abs(term_generator(truncation_index + 1))
    total = 0.0
    prev = math.inf
    smallest = first
    for k in range(truncation_index + 1, n_cap + 1):
        t = abs(term_generator(k))
        if t > prev:
            break
        total += t
        prev = t
        smallest = t
    return total + 2.0 * smallest + 0.5 * first


def bethe_inner_sum(n: int) -> float:
    """Alternating partial sum sum_{p=0}^{n-1} (-1)^p Gamma(p+1/2)/(p! Gamma(1/2)).

    Converges to 1/sqrt(2) with error at most gamma_half_ratio(n) (the terms
    decrease monotonically, so consecutive partial sums bracket the limit).
    """
    if n < 1:
        raise DomainError("n must be a positive integer")
    acc = 0.0
    ratio = 1.0
    for p in range(n):
        acc += ratio if p % 2 == 0 else -ratio
        ratio *= (p + 0.5) / (p + 1.0)
    return acc


def stirling_series_term(n: int, z: float) -> float:
    """n-th term b_{2n} / (2n (2n-1) z^(2n)) of the scaled Stirling series."""
    return bernoulli_float(2 * n) / ((2 * n) * (2 * n - 1) * z ** (2 * n))


def stirling_reference(z: float) -> float:
    """(ln Gamma(z) - (z - 1/2) ln z + z - ln(2 pi)/2) / z via lgamma.

    The quantity the scaled Stirling series is asymptotic to; used as the
    independent oracle when validating optimal truncation.
    """
    return (math.lgamma(z) - (z - 0.5) * math.log(z) + z - 0.5 * math.log(2.0 * math.pi)) / z


__all__ = [
    "AsymptoticSeries",
    "EM_MAX_ORDER",
    "EmSumResult",
    "SmoothFunction",
    "asymptotic_eval",
    "bethe_inner_sum",
    "em_sum",
    "omitted_tail_bound",
    "stirling_reference",
    "stirling_series_term",
]
