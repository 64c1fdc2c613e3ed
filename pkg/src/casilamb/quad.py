"""Deterministic Gauss-Kronrod panel quadrature for finite and semi-infinite
intervals, with optional panel splitting at the integers (where the sawtooth
weight of the plate-correction integrands is discontinuous).

The rule is the fixed 15-point Kronrod extension of 7-point Gauss on each
panel, with at most one bisection when the embedded error estimate exceeds
the panel budget.  Integrands here are piecewise smooth with known
breakpoints, so heavier global adaptivity buys nothing and determinism keeps
the test suite byte-stable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional

from ._gk15 import G7_INDICES, G7_WEIGHTS, K15_NODES, K15_WEIGHTS
from .errors import ConvergenceError, DomainError

_G7_WEIGHT_AT = {i: w for i, w in zip(G7_INDICES, G7_WEIGHTS)}
_RULE = tuple(
    (x, w, _G7_WEIGHT_AT.get(i, 0.0)) for i, (x, w) in enumerate(zip(K15_NODES, K15_WEIGHTS))
)

_MAX_DEPTH = 48


@dataclass(frozen=True)
class QuadSpec:
    """Tolerances and resource limits for the panel integrators."""

    relative_tolerance: float = 1e-10
    absolute_tolerance: float = 1e-12
    max_panels: int = 1_000_000
    tail_stop_threshold: float = 1e-16

    def __post_init__(self):
        if self.relative_tolerance <= 0.0 or self.absolute_tolerance <= 0.0:
            raise DomainError("tolerances must be positive")
        if self.max_panels < 64:
            raise DomainError("max_panels must be at least 64")
        if self.tail_stop_threshold <= 0.0:
            raise DomainError("tail_stop_threshold must be positive")


@dataclass
class QuadResult:
    value: float
    error_estimate: float
    panels_used: int

    def __float__(self) -> float:
        return self.value


def gk_panel(f: Callable[[float], float], a: float, b: float) -> tuple[float, float]:
    """One Gauss-Kronrod 15/7 application on [a, b].

    Returns (kronrod_value, |kronrod - gauss|).
    """
    mid = 0.5 * (a + b)
    half = 0.5 * (b - a)
    k15 = 0.0
    g7 = 0.0
    for x, wk, wg in _RULE:
        fx = f(mid + half * x)
        k15 += wk * fx
        g7 += wg * fx
    return half * k15, abs(half * (k15 - g7))


def _panel_with_bisection(f, a, b, budget):
    """GK panel with at most one bisection; returns (value, error, evals)."""
    val, err = gk_panel(f, a, b)
    if err <= budget:
        return val, err, 1
    mid = 0.5 * (a + b)
    v1, e1 = gk_panel(f, a, mid)
    v2, e2 = gk_panel(f, mid, b)
    return v1 + v2, e1 + e2, 3


def _adaptive(f, a, b, budget, panels_left, depth=0):
    """Fully recursive GK bisection down to an absolute error budget.

    Used for the non-breakpoint (smooth) route only; panel count guards
    runaway recursion on hostile integrands.
    """
    val, err = gk_panel(f, a, b)
    if err <= budget or depth >= _MAX_DEPTH:
        return val, err, 1
    if panels_left[0] <= 0:
        raise ConvergenceError(
            f"adaptive panel budget exhausted on [{a}, {b}]", partial_value=val
        )
    panels_left[0] -= 2
    mid = 0.5 * (a + b)
    v1, e1, n1 = _adaptive(f, a, mid, 0.5 * budget, panels_left, depth + 1)
    v2, e2, n2 = _adaptive(f, mid, b, 0.5 * budget, panels_left, depth + 1)
    return v1 + v2, e1 + e2, n1 + n2


def integrate_finite(
    f: Callable[[float], float],
    a: float,
    b: float,
    spec: Optional[QuadSpec] = None,
    breakpoints_at_integers: bool = False,
) -> QuadResult:
    """Integrate f on [a, b] by unit panels (split at integers on request)."""
    spec = spec or QuadSpec()
    if not (math.isfinite(a) and math.isfinite(b)) or b < a:
        raise DomainError(f"bad interval [{a}, {b}]")
    if b == a:
        return QuadResult(0.0, 0.0, 0)
    edges = [a]
    if breakpoints_at_integers:
        k = math.floor(a) + 1
        while k < b:
            if k > a:
                edges.append(float(k))
            k += 1
    else:
        n_units = max(1, int(math.ceil(b - a)))
        edges.extend(a + (b - a) * i / n_units for i in range(1, n_units))
    edges.append(b)

    total = 0.0
    err = 0.0
    panels = 0
    for lo, hi in zip(edges, edges[1:]):
        budget = max(spec.absolute_tolerance, spec.relative_tolerance * abs(total))
        v, e, n = _panel_with_bisection(f, lo, hi, budget)
        total += v
        err += e
        panels += n
        if panels > spec.max_panels:
            raise ConvergenceError("max_panels exceeded", partial_value=total)
    return QuadResult(total, err, panels)


def integrate_semiinfinite(
    f: Callable[[float], float],
    breakpoints_at_integers: bool,
    spec: Optional[QuadSpec] = None,
    tail_weight: Optional[Callable[[float], float]] = None,
) -> QuadResult:
    """Integrate f on [0, inf) with a rapidly decreasing envelope.

    breakpoints mode: unit panels [n, n+1] are summed in index order until
    the tail criterion fires at a panel's left edge.  The criterion is
    ``tail_weight(n) < spec.tail_stop_threshold`` where tail_weight defaults
    to a three-point |f| probe inside the upcoming panel; pass the cutoff
    profile factor explicitly for oscillatory integrands whose pointwise
    values do not reflect the envelope.

    smooth mode: [0, 1] plus the tail mapped to [0, 1] via t -> 1/t, both
    handled by fully adaptive bisection.

    Raises ConvergenceError (carrying the partial value) if max_panels is
    exhausted before the tail criterion triggers, or if the final error
    estimate misses relative_tolerance * |value| + absolute_tolerance.
    """
    spec = spec or QuadSpec()
    if tail_weight is None:
        def tail_weight(n: float) -> float:
            return max(abs(f(n + 0.25)), abs(f(n + 0.5)), abs(f(n + 0.75)))

    if breakpoints_at_integers:
        total = 0.0
        err = 0.0
        panels = 0
        n = 0
        while True:
            if n > 0 and tail_weight(float(n)) < spec.tail_stop_threshold:
                break
            if panels >= spec.max_panels:
                raise ConvergenceError(
                    f"max_panels={spec.max_panels} exceeded before tail criterion",
                    partial_value=total,
                )
            budget = max(spec.absolute_tolerance, spec.relative_tolerance * abs(total))
            v, e, used = _panel_with_bisection(f, float(n), float(n + 1), budget)
            total += v
            err += e
            panels += used
            n += 1
    else:
        panels_left = [spec.max_panels]
        budget = 0.5 * spec.absolute_tolerance
        v1, e1, n1 = _adaptive(f, 0.0, 1.0, budget, panels_left)

        def mapped(u: float) -> float:
            t = 1.0 / u
            v = f(t)
            return v * t * t if v != 0.0 else 0.0

        v2, e2, n2 = _adaptive(mapped, 0.0, 1.0, budget, panels_left)
        total, err, panels = v1 + v2, e1 + e2, n1 + n2

    target = spec.relative_tolerance * abs(total) + spec.absolute_tolerance
    if err > target:
        raise ConvergenceError(
            f"error estimate {err:.3e} exceeds tolerance target {target:.3e}",
            partial_value=total,
        )
    return QuadResult(total, err, panels)
