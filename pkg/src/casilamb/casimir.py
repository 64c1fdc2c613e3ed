"""Plate-modified vacuum machinery: cutoff profiles, the free and
plate-corrected photon densities of states, spectral-weight functionals of
the sawtooth correction evaluated both by breakpoint quadrature and by a
Bernoulli-coefficient expansion, and the parallel-plate vacuum energy.

Natural units throughout (hbar = c = 1): lengths in nanometers, energies in
inverse nanometers.  Unit conversion belongs to the CLI layer.

The two evaluation routes deliberately share nothing but the weight
parameterization: the quadrature route sums mean-subtracted Gauss-Kronrod
panels between consecutive integers, while the expansion route differentiates
closed-form Taylor coefficients at the origin and feeds them through the
Bernoulli table.  Their agreement within the attached truncation bound is
the package's central cross-check.

Normalization note: the expansion prefactor is V kappa_d^(gamma+2) / pi^2,
one factor of pi larger than the quadrature prefactor, because the
derivative of the one-sided sawtooth is pi times a Dirac comb minus pi times
a step; only this bookkeeping reproduces both the quadrature values and the
-pi^2/720 L^2/d^3 plate energy.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import kernels
from .emsum import AsymptoticSeries, asymptotic_eval, omitted_tail_bound
from .errors import ConvergenceError, DomainError
from .quad import QuadResult, QuadSpec, integrate_semiinfinite
from .special import bernoulli_float

PROFILE_IDS = {
    "gaussian": kernels.PROFILE_GAUSSIAN,
    "quartic": kernels.PROFILE_QUARTIC,
    "sech": kernels.PROFILE_SECH,
}

_CHUNK = 8192


@dataclass(frozen=True)
class CutoffProfile:
    """Rapidly decreasing regulator phi with phi(0) = 1 and UV scale kappa_phi.

    Families: gaussian exp(-x^2), quartic exp(-x^4), sech 2/(e^x + e^-x).
    """

    family: str
    kappa_phi: float

    def __post_init__(self):
        if self.family not in PROFILE_IDS:
            raise DomainError(
                f"unknown profile family {self.family!r}; choose from {sorted(PROFILE_IDS)}"
            )
        if self.kappa_phi <= 0.0:
            raise DomainError("kappa_phi must be positive")

    @property
    def profile_id(self) -> int:
        return PROFILE_IDS[self.family]

    def __call__(self, x):
        """Dimensionless profile value at x (scalar or array)."""
        return kernels.profile_value(x, self.profile_id)

    def at_energy(self, k):
        """phi(k / kappa_phi)."""
        return self(np.asarray(k) / self.kappa_phi)

    def argument_series(self, n_terms: int) -> np.ndarray:
        """Taylor coefficients of phi(sqrt(v)) in powers of v around v = 0.

        Lets phi(c * sqrt(s^2 + eta^2)) be composed into an even series in s
        (v = c^2 (s^2 + eta^2) is polynomial in s).  The sech family uses the
        reciprocal of the cosh series; its radius in v is (pi/2)^2, far above
        the arguments that arise for any kappa_d/kappa_phi <= 0.1.
        """
        out = np.zeros(n_terms)
        if self.family == "gaussian":
            # exp(-v)
            out[0] = 1.0
            for m in range(1, n_terms):
                out[m] = -out[m - 1] / m
        elif self.family == "quartic":
            # exp(-v^2)
            for m in range(0, n_terms, 2):
                out[m] = (-1.0) ** (m // 2) / math.factorial(m // 2)
        else:
            # sech(sqrt(v)): invert cosh(sqrt(v)) = sum v^j/(2j)!
            h = np.array([1.0 / math.factorial(2 * j) for j in range(n_terms)])
            out[0] = 1.0
            for m in range(1, n_terms):
                out[m] = -sum(h[j] * out[m - j] for j in range(1, m + 1))
        return out


@dataclass(frozen=True)
class PlateGeometry:
    """Two square plates of size L at separation d (d << L assumed)."""

    plate_size_L: float
    separation_d: float

    def __post_init__(self):
        if self.plate_size_L <= 0.0 or self.separation_d <= 0.0:
            raise DomainError("plate size and separation must be positive")
        if self.aspect_flagged:
            warnings.warn(
                f"d/L = {self.separation_d / self.plate_size_L:.3g} > 0.1; "
                "the parallel-plate treatment assumes d << L",
                stacklevel=2,
            )

    @property
    def kappa_d(self) -> float:
        """Lowest transverse mode energy pi/d."""
        return math.pi / self.separation_d

    @property
    def volume(self) -> float:
        return self.plate_size_L ** 2 * self.separation_d

    @property
    def aspect_flagged(self) -> bool:
        return self.separation_d / self.plate_size_L > 0.1


@dataclass(frozen=True)
class SpectralWeight:
    """The (A, beta, gamma, xi*, eta*) weight family F = f^beta * f_gamma.

    Encodes f^beta(s) = A / (kappa_d^beta (s + xi)^beta) and
    f_gamma(s_eta) = (s^2 + eta^2)^(gamma/2).  gamma <= -1 needs eta > 0
    (the eta -> 0 limit does not exist there); gamma >= 0 admits eta = 0.
    """

    amplitude_A: float
    beta: float
    gamma: int
    xi_star: float = 0.0
    eta_star: float = 0.0

    def __post_init__(self):
        if self.beta < 0.0:
            raise DomainError("beta must be nonnegative")
        if self.eta_star < 0.0 or self.xi_star < self.eta_star:
            raise DomainError("require xi_star >= eta_star >= 0")
        if self.beta > 0.0 and self.xi_star <= 0.0:
            raise DomainError("beta > 0 requires a positive xi_star")
        if self.gamma <= -1 and self.eta_star <= 0.0:
            raise DomainError("gamma <= -1 requires a positive eta_star")


def rho_free(k: float) -> float:
    """Free-space photon density of states k^2 / pi^2."""
    if k < 0.0:
        raise DomainError("k must be nonnegative")
    return k * k / math.pi ** 2


def rho_correction(k: float, kappa_d: float) -> float:
    """Signed plate correction (kappa_d k / pi^3) * sawtooth(k / kappa_d).

    Satisfies |rho_correction / rho_free| <= kappa_d / (2k) for k > 0 and
    vanishes whenever k is an integer multiple of kappa_d.
    """
    if k < 0.0:
        raise DomainError("k must be nonnegative")
    if kappa_d <= 0.0:
        raise DomainError("kappa_d must be positive")
    return kappa_d * k / math.pi ** 3 * kernels.sawtooth(k / kappa_d)


def _weight_envelope(
    s: float, w: SpectralWeight, amp: float, cnorm: float, pid: int
) -> float:
    """|W(s)|: the full integrand envelope, regulator included."""
    s_eta = math.sqrt(s * s + w.eta_star ** 2)
    if s_eta == 0.0:
        return abs(amp) if w.gamma == 0 else 0.0
    value = abs(amp) * s_eta ** w.gamma * kernels.profile_value(cnorm * s_eta, pid)
    if w.beta != 0.0:
        value /= (s + w.xi_star) ** w.beta
    return value


def _sawtooth_weighted_integral(
    w: SpectralWeight,
    kappa_d: float,
    profile: CutoffProfile,
    spec: QuadSpec,
) -> QuadResult:
    """Panel sum of sawtooth(s) * f^beta(s) * f_gamma(s_eta) * phi over [0, inf).

    The tail stops once the regulator has pushed the weight envelope at the
    panel's left edge below tail_stop_threshold relative to the envelope's
    running peak; measuring the full envelope (not the bare profile factor)
    matters for growing weights under slowly decaying regulators.
    """
    amp = w.amplitude_A * kappa_d ** (-w.beta)
    if amp == 0.0:
        return QuadResult(0.0, 0.0, 0)
    cnorm = kappa_d / profile.kappa_phi
    eta = w.eta_star
    pid = profile.profile_id

    def envelope(s: float) -> float:
        return _weight_envelope(s, w, amp, cnorm, pid)

    # seed the peak at unit stride: a weight whose whole support fits inside
    # the first chunk would otherwise never register a positive peak
    peak = max(envelope(float(j)) for j in range(513))

    chunk_values: list[float] = []
    err = 0.0
    n = 0
    chunk = 256  # grows geometrically so short reaches stay cheap
    while True:
        stride = max(chunk // 8, 1)
        probe = max(envelope(float(n + k * stride)) for k in range(9))
        peak = max(peak, probe)
        if n > 0 and probe < spec.tail_stop_threshold * peak:
            break
        if n >= spec.max_panels:
            raise ConvergenceError(
                f"max_panels={spec.max_panels} exceeded before the profile tail",
                partial_value=math.fsum(chunk_values),
            )
        hi = min(n + chunk, spec.max_panels)
        v, e = kernels.spectral_panel_sum(
            n, hi, amp, w.beta, w.xi_star, float(w.gamma), eta, cnorm, pid,
            spec.absolute_tolerance,
        )
        chunk_values.append(v)
        err += e
        n = hi
        chunk = min(2 * chunk, _CHUNK)
    return QuadResult(math.fsum(chunk_values), err, n)


def h_casimir_quadrature(
    w: SpectralWeight,
    geom: PlateGeometry,
    profile: CutoffProfile,
    spec: Optional[QuadSpec] = None,
) -> float:
    """Plate-correction functional by breakpoint quadrature.

    V kappa_d^(gamma+2) / pi^3 times the integral of
    sawtooth(s) f^beta(s) f_gamma(s_eta) phi(kappa_d s_eta / kappa_phi).
    """
    spec = spec or QuadSpec(max_panels=16_000_000)
    kd = geom.kappa_d
    result = _sawtooth_weighted_integral(w, kd, profile, spec)
    return geom.volume * kd ** (w.gamma + 2) / math.pi ** 3 * result.value


@dataclass
class ExpansionResult:
    """Bernoulli-expansion value of a plate-correction functional.

    ``remainder_bound`` is the practical truncation bound (omitted-tail sum
    with cushion, see emsum.omitted_tail_bound) scaled like ``value``; the
    bare first-omitted term sits on ``series.remainder_bound``.
    """

    value: float
    series: AsymptoticSeries
    prefactor: float
    remainder_bound: float

    def __float__(self) -> float:
        return self.value


def _series_inverse_power(amp: float, beta: float, xi: float, m_max: int) -> np.ndarray:
    """Taylor coefficients of amp * (s + xi)^(-beta) up to order m_max."""
    c = np.zeros(m_max + 1)
    if beta == 0.0:
        c[0] = amp
        return c
    c[0] = amp * xi ** (-beta)
    for m in range(1, m_max + 1):
        c[m] = c[m - 1] * (-(beta + m - 1.0)) / (m * xi)
    return c


def _series_radial_power(gamma: int, eta: float, m_max: int) -> np.ndarray:
    """Taylor coefficients of (s^2 + eta^2)^(gamma/2) up to order m_max."""
    c = np.zeros(m_max + 1)
    if eta == 0.0:
        if gamma < 0:
            raise DomainError("gamma < 0 requires eta > 0")
        if gamma <= m_max:
            c[gamma] = 1.0
        return c
    # even series: coefficient of s^(2m) is eta^(gamma-2m) * binom(gamma/2, m)
    b = eta ** float(gamma)
    c[0] = b
    half = 0.5 * gamma
    for m in range(1, m_max // 2 + 1):
        b *= (half - (m - 1)) / (m * eta * eta)
        c[2 * m] = b
    return c


def _series_profile(profile: CutoffProfile, cnorm: float, eta: float, m_max: int) -> np.ndarray:
    """Even Taylor series in s of phi(cnorm * sqrt(s^2 + eta^2))."""
    n_u = m_max // 2 + 1
    # phi(sqrt(v)) coefficients, then substitute v = a + b u with u = s^2
    a = (cnorm * eta) ** 2
    b = cnorm * cnorm
    extra = 0 if a == 0.0 else 60  # shifted recomposition needs tail headroom
    sigma = profile.argument_series(n_u + extra)
    cu = np.zeros(n_u)
    # accumulate sigma_j (a + b u)^j via the binomial theorem
    for j, sj in enumerate(sigma):
        if sj == 0.0:
            continue
        if a == 0.0:
            if j < n_u:
                cu[j] += sj * b ** j
            continue
        for m in range(min(j, n_u - 1) + 1):
            cu[m] += sj * math.comb(j, m) * a ** (j - m) * b ** m
    c = np.zeros(m_max + 1)
    c[::2] = cu
    return c


def _truncated_product(arrays: list[np.ndarray], m_max: int) -> np.ndarray:
    out = arrays[0][: m_max + 1].copy()
    for arr in arrays[1:]:
        out = np.convolve(out, arr[: m_max + 1])[: m_max + 1]
    return out


def h_casimir_expansion(
    w: SpectralWeight,
    geom: PlateGeometry,
    r: int,
    profile: Optional[CutoffProfile] = None,
) -> ExpansionResult:
    """Plate-correction functional by the origin-derivative expansion.

    V kappa_d^(gamma+2) / pi^2 times sum_{n=1}^{r} b_{2n}/(2n)! times the
    (2n-2)-th derivative of f^beta(s) f_gamma(s_eta) at s = 0, accumulated
    with optimal truncation; the derivatives come from closed-form Taylor
    coefficients (Cauchy products), never finite differences.

    With ``profile=None`` the kappa_d/kappa_phi -> 0 limit is evaluated (the
    regulator replaced by 1); passing a profile composes its Taylor series
    into the coefficients, which narrows the gap to the quadrature route to
    pure truncation error.
    """
    if w.gamma <= -1 and w.eta_star <= 0.0:
        raise DomainError("gamma <= -1 requires a positive eta_star")
    if r < 1:
        raise DomainError("r must be >= 1")
    kd = geom.kappa_d
    # the tail-bound scan looks up to eight terms past the truncation point
    scan_cap = min(r + 8, 59)
    m_max = 2 * (scan_cap + 1)
    factors = [
        _series_inverse_power(w.amplitude_A * kd ** (-w.beta), w.beta, w.xi_star, m_max),
        _series_radial_power(w.gamma, w.eta_star, m_max),
    ]
    if profile is not None:
        factors.append(_series_profile(profile, kd / profile.kappa_phi, w.eta_star, m_max))
    coeffs = _truncated_product(factors, m_max)

    def term(n: int) -> float:
        return bernoulli_float(2 * n) * coeffs[2 * n - 2] / ((2 * n) * (2 * n - 1))

    series = asymptotic_eval(term, r_max=r)
    prefactor = geom.volume * kd ** (w.gamma + 2) / math.pi ** 2
    if series.diverged:
        bound = series.remainder_bound  # smallest-term regime
    else:
        bound = omitted_tail_bound(term, series.truncation_index, scan_cap)
    return ExpansionResult(
        value=prefactor * series.partial_sum,
        series=series,
        prefactor=prefactor,
        remainder_bound=abs(prefactor) * bound,
    )


# the vacuum-energy mode sum uses F(k) = k/2: A = 1/2, beta = 0, gamma = 2
VACUUM_ENERGY_WEIGHT = SpectralWeight(amplitude_A=0.5, beta=0.0, gamma=2)

CASIMIR_ROUTES = ("closed_form", "quadrature", "expansion")


def casimir_energy(
    geom: PlateGeometry,
    profile: Optional[CutoffProfile] = None,
    route: str = "closed_form",
    spec: Optional[QuadSpec] = None,
    r: int = 3,
) -> float:
    """Plate-induced vacuum energy between the plates.

    closed_form: -pi^2/720 L^2/d^3 exactly.
    quadrature:  V int dk (kappa_d k^2 / 2 pi^3) sawtooth(k/kappa_d) phi(k/kappa_phi).
    expansion:   the terminating gamma = 2 Bernoulli expansion (only the n = 2
                 term survives).
    All three agree to O(kappa_d/kappa_phi) for kappa_d/kappa_phi -> 0.
    """
    if route == "closed_form":
        return -math.pi ** 2 / 720.0 * geom.plate_size_L ** 2 / geom.separation_d ** 3
    if route == "quadrature":
        if profile is None:
            raise DomainError("quadrature route needs a cutoff profile")
        return h_casimir_quadrature(VACUUM_ENERGY_WEIGHT, geom, profile, spec)
    if route == "expansion":
        return h_casimir_expansion(VACUUM_ENERGY_WEIGHT, geom, max(r, 2)).value
    raise DomainError(f"unknown route {route!r}; choose from {CASIMIR_ROUTES}")


def bulk_energy_density(profile: CutoffProfile, spec: Optional[QuadSpec] = None) -> float:
    """Regulated free-space zero-point energy density.

    int_0^inf dk (k^3 / 2 pi^2) phi(k/kappa_phi) = kappa_phi^4/(2 pi^2) times
    the profile's third moment; finite but explicitly regulator-dependent,
    unlike the plate term.
    """
    spec = spec or QuadSpec()
    pid = profile.profile_id

    def moment_integrand(u: float) -> float:
        return u ** 3 * kernels.profile_value(u, pid)

    moment = integrate_semiinfinite(moment_integrand, False, spec).value
    return profile.kappa_phi ** 4 / (2.0 * math.pi ** 2) * moment
