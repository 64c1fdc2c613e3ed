"""Pure-Python (numpy) reference implementations of the hot kernels.

Semantics here define the contract for the compiled twin in ``_fastkern``:
same arguments, same panel decomposition, same one-level bisection rule.
Results may differ from the compiled backend in the last few ulps because
numpy sums pairwise while the C loops sum sequentially.
"""

from __future__ import annotations

import math

import numpy as np

from .._gk15 import G7_INDICES, G7_WEIGHTS, K15_NODES, K15_WEIGHTS

BACKEND = "python"

_XK = np.asarray(K15_NODES)
_WK = np.asarray(K15_WEIGHTS)
_WG = np.zeros(15)
_WG[list(G7_INDICES)] = G7_WEIGHTS

PROFILE_GAUSSIAN = 0
PROFILE_QUARTIC = 1
PROFILE_SECH = 2
PROFILE_NONE = 3


def sawtooth(s: float) -> float:
    """pi*(1/2 - frac(s)), exactly zero at integers (snap window 1e-12)."""
    if abs(s - round(s)) < 1e-12:
        return 0.0
    return math.pi * (0.5 - (s - math.floor(s)))


def sawtooth_arr(s):
    s = np.asarray(s, dtype=np.float64)
    out = np.pi * (0.5 - (s - np.floor(s)))
    out = np.where(np.abs(s - np.round(s)) < 1e-12, 0.0, out)
    if out.ndim == 0:
        return float(out)
    return out


def damped_sine_series(s: float, eps: float, tail_tol: float, max_terms: int) -> float:
    """Sum of sin(2 pi p s) exp(-eps p^2) / p, truncated by the termwise bound.

    The p-th term is bounded by exp(-eps p^2)/p, so summation stops at the
    first p with exp(-eps p^2) < tail_tol (the superexponential decay makes
    the omitted tail smaller than the bound at the stopping index).
    """
    if eps <= 0.0:
        raise ValueError("eps must be positive")
    p_stop = int(math.ceil(math.sqrt(max(math.log(1.0 / tail_tol), 1.0) / eps))) + 1
    p_stop = min(p_stop, max_terms)
    p = np.arange(1, p_stop + 1, dtype=np.float64)
    return float(np.sum(np.sin(2.0 * math.pi * p * s) * np.exp(-eps * p * p) / p))


def profile_value(x, profile_id: int):
    """Cutoff profile evaluated at x >= 0 (scalar or array)."""
    x = np.asarray(x, dtype=np.float64)
    if profile_id == PROFILE_GAUSSIAN:
        out = np.exp(-x * x)
    elif profile_id == PROFILE_QUARTIC:
        out = np.exp(-(x ** 4))
    elif profile_id == PROFILE_SECH:
        e = np.exp(-np.abs(x))
        out = 2.0 * e / (1.0 + e * e)
    elif profile_id == PROFILE_NONE:
        out = np.ones_like(x)
    else:
        raise ValueError(f"unknown profile id {profile_id}")
    return out if out.ndim else float(out)


def _factor_values_and_deltas(c, v, amp, beta, xi, gamma, eta, cnorm, profile_id):
    """Center values and stable differences of the three weight factors.

    W(s) = amp (s+xi)^(-beta) (s^2+eta^2)^(gamma/2) phi(cnorm sqrt(s^2+eta^2))
    evaluated at s = c + v.  Every difference F(c+v) - F(c) is produced by an
    expm1/log1p (or sinh product) identity, so its rounding scales with the
    difference itself and not with the possibly huge factor values; this is
    what keeps the sawtooth panel sums conditioned when the weight dwarfs
    the net integral.

    c has shape (P,), v has shape (M,); returns (w_center (P,1), dW (P,M)).
    """
    c = c[:, None]
    s = c + v[None, :]
    rc = c * c + eta * eta
    dr = v[None, :] * (s + c)  # (s^2+eta^2) - (c^2+eta^2), exact to rounding

    f1c = np.ones_like(c)
    d1 = np.zeros_like(s)
    if beta != 0.0:
        f1c = np.power(c + xi, -beta)
        d1 = f1c * np.expm1(-beta * np.log1p(v[None, :] / (c + xi)))

    f2c = np.power(rc, 0.5 * gamma)
    if gamma != 0.0:
        d2 = f2c * np.expm1(0.5 * gamma * np.log1p(dr / rc))
    else:
        d2 = np.zeros_like(s)

    if profile_id == PROFILE_NONE:
        f3c = np.ones_like(c)
        d3 = np.zeros_like(s)
    else:
        tc = cnorm * np.sqrt(rc)
        ts = cnorm * np.sqrt(rc + dr)
        # |arg| > 300 switches to the direct difference: the factors then
        # differ by >= e^300 so there is no cancellation to protect against,
        # while expm1 would overflow against an underflowed center value
        if profile_id == PROFILE_GAUSSIAN:
            f3c = np.exp(-tc * tc)
            arg = -cnorm * cnorm * dr
            d3 = np.where(
                np.abs(arg) > 300.0,
                np.exp(-(ts * ts)) - f3c,
                f3c * np.expm1(np.clip(arg, -745.0, 300.0)),
            )
        elif profile_id == PROFILE_QUARTIC:
            f3c = np.exp(-(tc ** 4))
            arg = -(cnorm ** 4) * dr * (2.0 * rc + dr)
            d3 = np.where(
                np.abs(arg) > 300.0,
                np.exp(-(ts ** 4)) - f3c,
                f3c * np.expm1(np.clip(arg, -745.0, 300.0)),
            )
        elif profile_id == PROFILE_SECH:
            ec = np.exp(-tc)
            f3c = 2.0 * ec / (1.0 + ec * ec)
            es = np.exp(-ts)
            # sech a - sech b = -2 sinh((a+b)/2) sinh((a-b)/2) / (cosh a cosh b);
            # the bracket form below never overflows (cosh a cosh b =
            # exp(a+b)(1+exp(-2a))(1+exp(-2b))/4)
            mean = 0.5 * (ts + tc)
            dt = cnorm * cnorm * dr / (ts + tc)  # ts - tc, cancellation-free
            em = np.exp(-mean)
            bracket = (
                2.0 * em * (-np.expm1(-2.0 * mean))
                / ((1.0 + es * es) * (1.0 + ec * ec))
            )
            d3 = -2.0 * np.sinh(0.5 * dt) * bracket
        else:
            raise ValueError(f"unknown profile id {profile_id}")

    # dW = d1*F2(s)*F3(s) + F1(c)*d2*F3(s) + F1(c)*F2(c)*d3, exact regrouping
    f2s = f2c + d2
    f3s_full = f3c + d3
    dw = amp * (d1 * f2s * f3s_full + f1c * d2 * f3s_full + f1c * f2c * d3)
    wc = amp * f1c * f2c * f3c
    return wc, dw


def spectral_panel_sum(n0, n1, amp, beta, xi, gamma, eta, cnorm, profile_id, panel_tol):
    """Integrate sawtooth(s) * W(s) over the unit panels [n0, n1).

    Within each panel the sawtooth is exactly linear with zero mean, so the
    panel integral equals the integral of sawtooth * (W - W(center)); the
    difference is evaluated in the stable form of _factor_values_and_deltas.
    Panels whose Gauss/Kronrod discrepancy exceeds panel_tol are bisected
    once (both halves keep the panel-center reference).

    Returns (value, error_estimate).
    """
    if n1 <= n0:
        return 0.0, 0.0
    ns = np.arange(n0, n1, dtype=np.float64)
    centers = ns + 0.5
    v = 0.5 * _XK  # node offsets from the panel center
    gval = -math.pi * v  # sawtooth at the offset nodes
    _, dw = _factor_values_and_deltas(
        centers, v, amp, beta, xi, gamma, eta, cnorm, profile_id
    )
    f = gval[None, :] * dw
    k15 = 0.5 * (f @ _WK)
    g7 = 0.5 * (f @ _WG)
    err = np.abs(k15 - g7)

    refine = np.nonzero(err > panel_tol)[0]
    if refine.size:
        k15_new = np.zeros(refine.size)
        err_new = np.zeros(refine.size)
        for sign in (-1.0, 1.0):
            vh = sign * 0.25 + 0.25 * _XK
            gh = -math.pi * vh
            _, dwh = _factor_values_and_deltas(
                centers[refine], vh, amp, beta, xi, gamma, eta, cnorm, profile_id
            )
            fh = gh[None, :] * dwh
            kh = 0.25 * (fh @ _WK)
            g7h = 0.25 * (fh @ _WG)
            k15_new += kh
            err_new += np.abs(kh - g7h)
        k15[refine] = k15_new
        err[refine] = err_new

    # exact accumulation: the running sum excurses far above the net result
    # when the weight rises before the regulator kills it
    return math.fsum(k15), float(np.sum(err))
