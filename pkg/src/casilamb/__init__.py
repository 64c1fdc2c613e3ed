"""casilamb: regularized zero-point energies between conducting plates and
the plate-induced Lamb-shift modification for spherical semiconductor
quantum dots.

Natural units (hbar = c = 1): lengths in nanometers, energies in inverse
nanometers.  The hot panel-quadrature kernels run on a compiled extension
when available (``casilamb.kernels.BACKEND`` tells you which backend won).
"""

from .casimir import (
    CutoffProfile,
    ExpansionResult,
    PlateGeometry,
    SpectralWeight,
    bulk_energy_density,
    casimir_energy,
    h_casimir_expansion,
    h_casimir_quadrature,
    rho_correction,
    rho_free,
)
from .emsum import (
    AsymptoticSeries,
    SmoothFunction,
    asymptotic_eval,
    bethe_inner_sum,
    em_sum,
)
from .errors import CasilambError, ConvergenceError, DomainError, RegimeError
from .kernels import BACKEND as KERNEL_BACKEND
from .lamb import (
    MATERIALS,
    CarrierCutoffs,
    LambContext,
    Material,
    QDotSystem,
    bethe_relative_shift,
    leading_relative_shift,
    qd_cutoffs,
    qd_relative_shift,
    sweep_distance,
    sweep_radius,
    welton_relative_shift,
)
from .quad import QuadResult, QuadSpec, integrate_finite, integrate_semiinfinite
from .regseries import (
    RegularizationParams,
    comb_term,
    euler_maclaurin_identity_check,
    g_closed,
    g_regularized,
    remainder_R1,
)
from .special import (
    BernoulliTable,
    bernoulli_float,
    bernoulli_number,
    erf,
    erfc,
    gamma_half_ratio,
    periodic_bernoulli,
)

__version__ = "0.1.0"

__all__ = [
    "AsymptoticSeries",
    "BernoulliTable",
    "CarrierCutoffs",
    "CasilambError",
    "ConvergenceError",
    "CutoffProfile",
    "DomainError",
    "ExpansionResult",
    "KERNEL_BACKEND",
    "LambContext",
    "MATERIALS",
    "Material",
    "PlateGeometry",
    "QDotSystem",
    "QuadResult",
    "QuadSpec",
    "RegimeError",
    "RegularizationParams",
    "SmoothFunction",
    "SpectralWeight",
    "asymptotic_eval",
    "bethe_inner_sum",
    "bethe_relative_shift",
    "bernoulli_float",
    "bernoulli_number",
    "bulk_energy_density",
    "casimir_energy",
    "comb_term",
    "em_sum",
    "erf",
    "erfc",
    "euler_maclaurin_identity_check",
    "g_closed",
    "g_regularized",
    "gamma_half_ratio",
    "h_casimir_expansion",
    "h_casimir_quadrature",
    "integrate_finite",
    "integrate_semiinfinite",
    "leading_relative_shift",
    "periodic_bernoulli",
    "qd_cutoffs",
    "qd_relative_shift",
    "remainder_R1",
    "rho_correction",
    "rho_free",
    "sweep_distance",
    "sweep_radius",
    "welton_relative_shift",
]
