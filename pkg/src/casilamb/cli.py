"""Command-line front end: subcommands wrapping the library operations with
deterministic CSV output.

Determinism contract: identical invocations produce byte-identical output.
Floats are printed in scientific notation with 10 significant digits, rows
in fixed order, '\\n' line endings, and the effective configuration echoed
as a comment header.

Exit codes: 0 success; 2 usage or parse error; 3 physical-regime violation;
4 numerical non-convergence (including cross-route disagreement).
"""

from __future__ import annotations

import argparse
import math
import sys
from dataclasses import dataclass, fields, replace

from . import casimir as _casimir
from . import lamb as _lamb
from . import regseries as _regseries
from .emsum import (
    SmoothFunction,
    asymptotic_eval,
    bethe_inner_sum,
    em_sum,
    stirling_reference,
    stirling_series_term,
)
from .errors import CasilambError, ConvergenceError, DomainError, RegimeError
from .quad import QuadSpec

HBARC_EV_NM = 197.3269804  # hbar*c, for the eV annotations in CSV headers

EXIT_USAGE = 2
EXIT_REGIME = 3
EXIT_NUMERICAL = 4


@dataclass
class RunConfig:
    """Every knob a subcommand can consume, with its default.

    Config files are flat ``key = value`` lines ('#' comments allowed) whose
    keys are exactly these field names; unknown keys are rejected.  Flags
    override config-file values.
    """

    material: str = "InAs"
    electron_mass_ratio: float | None = None
    hole_mass_ratio: float | None = None
    plate_size_l: float = 1.0
    separation_d: float | None = None
    radius_r: float | None = None
    r_grid: str | None = None
    d_grid: str | None = None
    s_grid: str | None = None
    eps_list: str = "1e-3"
    carrier: str = "electron"
    profile: str = "gaussian"
    kappa_ratio: float = 1000.0
    eta_star: float | None = None
    log_ratio: float | None = None
    order_policy: str = "optimal"
    relative_tolerance: float = 1e-10
    absolute_tolerance: float = 1e-12
    spread_tolerance: float = 1e-3
    output_path: str = "-"


_CONFIG_TYPES = {f.name: f.type for f in fields(RunConfig)}


def _coerce(key: str, raw: str):
    raw = raw.strip()
    t = _CONFIG_TYPES[key]
    if t in ("float", "float | None"):
        return parse_length(raw) if key in ("separation_d", "radius_r") else float(raw)
    return raw


def parse_config_file(path: str) -> dict:
    values = {}
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise DomainError(f"{path}:{lineno}: expected 'key = value'")
            key, raw = (part.strip() for part in line.split("=", 1))
            if key not in _CONFIG_TYPES:
                raise DomainError(f"{path}:{lineno}: unknown config key {key!r}")
            values[key] = _coerce(key, raw)
    return values


def parse_length(text: str) -> float:
    """Length in nm; a 'um' suffix converts by 1000, 'nm' is accepted."""
    text = text.strip()
    if text.endswith("um"):
        return float(text[:-2]) * 1000.0
    if text.endswith("nm"):
        return float(text[:-2])
    return float(text)


def parse_grid(text: str) -> list[float]:
    """'start:stop:step' (inclusive within half a ulp of step) or one value."""
    parts = text.split(":")
    if len(parts) == 1:
        return [float(parts[0])]
    if len(parts) != 3:
        raise DomainError(f"grid must be 'start:stop:step' or a single value, got {text!r}")
    start, stop, step = (float(p) for p in parts)
    if step <= 0.0 or stop < start:
        raise DomainError(f"bad grid {text!r}")
    n = int(math.floor((stop - start) / step + 1e-9))
    return [start + k * step for k in range(n + 1)]


def fmt(x: float) -> str:
    """10 significant digits, scientific; NaN spelled out for sweep columns."""
    if isinstance(x, float) and math.isnan(x):
        return "NaN"
    return f"{x:.9e}"


class _Output:
    def __init__(self, path: str):
        self.path = path
        self._lines: list[str] = []

    def line(self, text: str = "") -> None:
        self._lines.append(text)

    def flush(self) -> None:
        payload = "\n".join(self._lines) + "\n"
        if self.path == "-":
            sys.stdout.write(payload)
        else:
            with open(self.path, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(payload)


def _emit_header(out: _Output, command: str, cfg: RunConfig) -> None:
    out.line(f"# casilamb {command}")
    for f in fields(RunConfig):
        value = getattr(cfg, f.name)
        if isinstance(value, float):
            value = fmt(value)
        out.line(f"# {f.name} = {value}")


def _merged_config(args: argparse.Namespace, flag_map: dict[str, str]) -> RunConfig:
    cfg = RunConfig()
    if getattr(args, "config", None):
        cfg = replace(cfg, **parse_config_file(args.config))
    overrides = {}
    for flag, key in flag_map.items():
        value = getattr(args, flag, None)
        if value is not None:
            overrides[key] = value
    return replace(cfg, **overrides)


def _material(cfg: RunConfig) -> _lamb.Material:
    if cfg.electron_mass_ratio is not None or cfg.hole_mass_ratio is not None:
        if cfg.electron_mass_ratio is None or cfg.hole_mass_ratio is None:
            raise DomainError("inline masses need both electron_mass_ratio and hole_mass_ratio")
        return _lamb.Material("custom", cfg.electron_mass_ratio, cfg.hole_mass_ratio)
    try:
        return _lamb.MATERIALS[cfg.material]
    except KeyError:
        raise DomainError(
            f"unknown material {cfg.material!r}; built-ins: {sorted(_lamb.MATERIALS)}"
        ) from None


def _quad_spec(cfg: RunConfig) -> QuadSpec:
    return QuadSpec(
        relative_tolerance=cfg.relative_tolerance,
        absolute_tolerance=cfg.absolute_tolerance,
        max_panels=16_000_000,
    )


# ---------------------------------------------------------------- gfunc


def cmd_gfunc(args) -> int:
    cfg = _merged_config(args, {"s": "s_grid", "eps": "eps_list", "out": "output_path"})
    if cfg.s_grid is None:
        raise DomainError("gfunc needs --s (grid or single value)")
    grid = parse_grid(cfg.s_grid)
    eps_values = [float(e) for e in cfg.eps_list.split(",") if e.strip()]
    if not eps_values:
        raise DomainError("gfunc needs at least one epsilon")
    params = [_regseries.RegularizationParams.for_epsilon(e) for e in eps_values]
    eps_min = min(eps_values)

    out = _Output(cfg.output_path)
    _emit_header(out, "gfunc", cfg)
    cols = ["s", "g_closed"]
    cols += [f"g_reg_{e:.0e}" for e in eps_values]
    cols.append("remainder_R1")
    out.line(",".join(cols))
    for s in grid:
        row = [fmt(s), fmt(_regseries.g_closed(s))]
        row += [fmt(_regseries.g_regularized(s, p)) for p in params]
        row.append(fmt(_regseries.remainder_R1(s, eps_min)))
        out.line(",".join(row))
    out.flush()
    return 0


# ---------------------------------------------------------------- casimir


def cmd_casimir(args) -> int:
    cfg = _merged_config(
        args,
        {"L": "plate_size_l", "d": "separation_d", "profile": "profile",
         "kratio": "kappa_ratio", "tol": "spread_tolerance", "out": "output_path"},
    )
    if cfg.separation_d is None:
        raise DomainError("casimir needs --d")
    if cfg.kappa_ratio < 10.0:
        print(
            f"warning: kappa_phi/kappa_d = {cfg.kappa_ratio:g} < 10; "
            "the cutoff separation is marginal",
            file=sys.stderr,
        )
    geom = _casimir.PlateGeometry(cfg.plate_size_l, cfg.separation_d)
    profile = _casimir.CutoffProfile(cfg.profile, cfg.kappa_ratio * geom.kappa_d)
    spec = _quad_spec(cfg)

    closed = _casimir.casimir_energy(geom, route="closed_form")
    quadr = _casimir.casimir_energy(geom, profile, route="quadrature", spec=spec)
    expan = _casimir.casimir_energy(geom, route="expansion")
    values = {"closed_form": closed, "quadrature": quadr, "expansion": expan}

    out = _Output(cfg.output_path)
    _emit_header(out, "casimir", cfg)
    out.line(f"# kappa_d = {fmt(geom.kappa_d)} 1/nm = {fmt(geom.kappa_d * HBARC_EV_NM)} eV")
    out.line("route,energy,relative_spread_vs_closed")
    for name, value in values.items():
        rel = abs(value - closed) / abs(closed)
        out.line(f"{name},{fmt(value)},{fmt(rel)}")
    spread = max(
        abs(a - b) for a in values.values() for b in values.values()
    ) / abs(closed)
    out.line(f"# max_pairwise_relative_spread = {fmt(spread)}")
    out.flush()
    if math.isnan(spread) or spread > cfg.spread_tolerance:
        print(
            f"route spread {spread:.3e} exceeds tolerance {cfg.spread_tolerance:.3e}",
            file=sys.stderr,
        )
        return EXIT_NUMERICAL
    return 0


# ---------------------------------------------------------------- hcasimir


def cmd_hcasimir(args) -> int:
    cfg = _merged_config(
        args,
        {"L": "plate_size_l", "d": "separation_d", "profile": "profile",
         "kratio": "kappa_ratio", "out": "output_path"},
    )
    d = cfg.separation_d if cfg.separation_d is not None else 1.0
    geom = _casimir.PlateGeometry(cfg.plate_size_l, d)
    profile = _casimir.CutoffProfile(cfg.profile, cfg.kappa_ratio * geom.kappa_d)
    w = _casimir.SpectralWeight(
        amplitude_A=args.A, beta=args.beta, gamma=args.gamma,
        xi_star=args.xi, eta_star=args.eta,
    )
    r = args.r
    quadr = _casimir.h_casimir_quadrature(w, geom, profile, _quad_spec(cfg))
    expan = _casimir.h_casimir_expansion(w, geom, r)

    out = _Output(cfg.output_path)
    _emit_header(out, "hcasimir", cfg)
    out.line(f"# weight: A={fmt(args.A)} beta={fmt(args.beta)} gamma={args.gamma} "
             f"xi={fmt(args.xi)} eta={fmt(args.eta)} r={r}")
    out.line("route,value")
    out.line(f"quadrature,{fmt(quadr)}")
    out.line(f"expansion,{fmt(expan.value)}")
    out.line(f"# expansion_terms_used = {expan.series.truncation_index}")
    out.line(f"# expansion_diverged = {str(expan.series.diverged).lower()}")
    out.line(f"# remainder_bound = {fmt(expan.remainder_bound)}")
    out.line(f"# abs_difference = {fmt(abs(quadr - expan.value))}")
    out.flush()
    return 0


# ---------------------------------------------------------------- lamb


def cmd_lamb(args) -> int:
    cfg = _merged_config(
        args,
        {"eta": "eta_star", "logratio": "log_ratio", "r": "order_policy",
         "out": "output_path"},
    )
    if cfg.eta_star is None or cfg.log_ratio is None:
        raise DomainError("lamb needs --eta and --logratio")
    if cfg.eta_star <= 1.0:
        raise RegimeError(f"weak coupling requires eta_star > 1, got {cfg.eta_star:g}")
    # build the context from the dimensionless inputs (kappa_d = 1)
    ctx = _lamb.LambContext(
        kappa_d=1.0,
        kappa_star=cfg.eta_star,
        m_star=cfg.eta_star * math.exp(cfg.log_ratio),
    )
    if cfg.order_policy == "optimal":
        r = 59  # Bernoulli-table ceiling; truncation stops earlier on growth
    else:
        r = int(cfg.order_policy)
        if r < 1:
            raise DomainError("order policy must be 'optimal' or a positive integer")
    bethe = _lamb.bethe_relative_shift(ctx, r)
    welton = _lamb.welton_relative_shift(ctx, r)

    out = _Output(cfg.output_path)
    _emit_header(out, "lamb", cfg)
    out.line("n,bethe_term,welton_term,bethe_partial,welton_partial")
    bp = 0.0
    wp = 0.0
    n_rows = max(bethe.series.truncation_index, welton.series.truncation_index)
    for n in range(1, n_rows + 1):
        bt = bethe.series.terms[n - 1] if n <= bethe.series.truncation_index else math.nan
        wt = welton.series.terms[n - 1] if n <= welton.series.truncation_index else math.nan
        if not math.isnan(bt):
            bp += bt
        if not math.isnan(wt):
            wp += wt
        out.line(f"{n},{fmt(bt)},{fmt(wt)},{fmt(bp / ctx.log_factor)},{fmt(wp / ctx.log_factor)}")
    out.line(f"# leading_order = {fmt(_lamb.leading_relative_shift(ctx))}")
    out.line(f"# bethe_value = {fmt(bethe.value)}")
    out.line(f"# welton_value = {fmt(welton.value)}")
    out.line(f"# bethe_remainder_bound = {fmt(bethe.remainder_bound)}")
    out.line(f"# welton_remainder_bound = {fmt(welton.remainder_bound)}")
    out.flush()
    return 0


# ---------------------------------------------------------------- qd-sweep


def cmd_qd_sweep(args) -> int:
    cfg = _merged_config(
        args,
        {"material": "material", "me": "electron_mass_ratio", "mh": "hole_mass_ratio",
         "carrier": "carrier", "d": "separation_d", "R": "radius_r",
         "R_grid": "r_grid", "d_grid": "d_grid", "out": "output_path"},
    )
    if (cfg.r_grid is None) == (cfg.d_grid is None):
        raise DomainError("qd-sweep needs exactly one of --R-grid / --d-grid")
    material = _material(cfg)

    if cfg.r_grid is not None:
        if cfg.separation_d is None:
            raise DomainError("--R-grid needs a fixed --d")
        rows = _lamb.sweep_radius(material, cfg.carrier, cfg.separation_d,
                                  parse_grid(cfg.r_grid))
    else:
        if cfg.radius_r is None:
            raise DomainError("--d-grid needs a fixed --R")
        rows = _lamb.sweep_distance(material, cfg.carrier, cfg.radius_r,
                                    parse_grid(cfg.d_grid))

    out = _Output(cfg.output_path)
    _emit_header(out, "qd-sweep", cfg)
    cuts = _lamb.qd_cutoffs(material, cfg.carrier, rows[0].radius_nm if rows else 1.0)
    out.line(f"# lambda_star = {fmt(cuts.lambda_star)} nm, R_star = {fmt(cuts.r_star)} nm")
    out.line(
        f"# m_star = {fmt(1.0 / cuts.lambda_star)} 1/nm = "
        f"{fmt(HBARC_EV_NM / cuts.lambda_star)} eV"
    )
    out.line("R_nm,d_nm,carrier,eta_star,validity_ratio,valid,shift_leading,shift_order2")
    for row in rows:
        out.line(
            ",".join(
                [
                    fmt(row.radius_nm),
                    fmt(row.separation_nm),
                    row.carrier,
                    fmt(row.eta_star),
                    fmt(row.validity_ratio),
                    "true" if row.valid else "false",
                    fmt(row.shift_leading),
                    fmt(row.shift_order2),
                ]
            )
        )
    out.flush()
    return 0


# ---------------------------------------------------------------- em-check


def cmd_em_check(args) -> int:
    checks: list[tuple[str, bool, str]] = []

    poly = SmoothFunction(
        value=lambda t: t * t,
        derivative=lambda m, t: {1: 2.0 * t, 2: 2.0}.get(m, 0.0),
    )
    res = em_sum(poly, 10, 1)
    ok = abs(res.estimate - 385.0) < 1e-9
    checks.append(("quadratic sum 0..10", ok, f"estimate {res.estimate!r} vs 385"))

    def gauss_deriv(m, t):
        # d^m/dt^m exp(-t^2) via the Hermite recurrence
        h0, h1 = 1.0, 2.0 * t
        for k in range(1, m):
            h0, h1 = h1, 2.0 * t * h1 - 2.0 * k * h0
        h = h0 if m == 0 else h1
        return (-1.0) ** m * h * math.exp(-t * t)

    gauss = SmoothFunction(value=lambda t: math.exp(-t * t), derivative=gauss_deriv)
    direct = math.fsum(math.exp(-float(p) ** 2) for p in range(21))
    res = em_sum(gauss, 20, 3)
    ok = abs(res.estimate - direct) <= res.remainder_bound
    checks.append(
        ("gaussian sum vs bound", ok,
         f"|err| {abs(res.estimate - direct):.3e} <= bound {res.remainder_bound:.3e}")
    )

    z = 10.0
    series = asymptotic_eval(lambda n: stirling_series_term(n, z), r_max=3)
    err = abs(series.partial_sum - stirling_reference(z))
    ok = err <= series.remainder_bound
    checks.append(
        ("stirling z=10", ok, f"|err| {err:.3e} <= bound {series.remainder_bound:.3e}")
    )

    inner = bethe_inner_sum(10_000)
    err = abs(inner - 1.0 / math.sqrt(2.0))
    ok = err <= 0.012
    checks.append(("inner sum n=1e4", ok, f"|err| {err:.3e} <= 0.012"))

    failed = 0
    for name, ok, detail in checks:
        status = "PASS" if ok else "FAIL"
        print(f"em-check {name}: {status} ({detail})")
        if not ok:
            failed += 1
    return 0 if failed == 0 else EXIT_NUMERICAL


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="casilamb",
        description="Plate-modified vacuum energies and quantum-dot Lamb-shift sweeps",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--config", help="flat key = value config file")
        p.add_argument("--out", help="output path ('-' for stdout)")

    p = sub.add_parser("gfunc", help="sawtooth closed form vs damped series")
    p.add_argument("--s", help="s grid 'start:stop:step' or single value")
    p.add_argument("--eps", help="comma-separated damping epsilons")
    add_common(p)
    p.set_defaults(func=cmd_gfunc)

    p = sub.add_parser("casimir", help="plate vacuum energy, three routes")
    p.add_argument("--L", type=parse_length, help="plate size [nm]")
    p.add_argument("--d", type=parse_length, help="plate separation [nm]")
    p.add_argument("--profile", choices=sorted(_casimir.PROFILE_IDS))
    p.add_argument("--kratio", type=float, help="kappa_phi / kappa_d")
    p.add_argument("--tol", type=float, help="route spread tolerance")
    add_common(p)
    p.set_defaults(func=cmd_casimir)

    p = sub.add_parser("hcasimir", help="raw spectral-weight functional, both routes")
    p.add_argument("--A", type=float, default=1.0)
    p.add_argument("--beta", type=float, default=0.0)
    p.add_argument("--gamma", type=int, required=True)
    p.add_argument("--xi", type=float, default=0.0)
    p.add_argument("--eta", type=float, default=0.0)
    p.add_argument("--r", type=int, default=3, help="expansion order cap")
    p.add_argument("--L", type=parse_length, help="plate size [nm]")
    p.add_argument("--d", type=parse_length, help="plate separation [nm]")
    p.add_argument("--profile", choices=sorted(_casimir.PROFILE_IDS))
    p.add_argument("--kratio", type=float, help="kappa_phi / kappa_d")
    add_common(p)
    p.set_defaults(func=cmd_hcasimir)

    p = sub.add_parser("lamb", help="relative shift series term table")
    p.add_argument("--eta", type=float, help="eta_star = kappa_star/kappa_d")
    p.add_argument("--logratio", type=float, help="ln(m_star/kappa_star)")
    p.add_argument("--r", help="'optimal' or a fixed positive order")
    add_common(p)
    p.set_defaults(func=cmd_lamb)

    p = sub.add_parser("qd-sweep", help="quantum-dot shift sweeps (CSV)")
    p.add_argument("--material")
    p.add_argument("--me", type=float, help="inline electron mass ratio")
    p.add_argument("--mh", type=float, help="inline hole mass ratio")
    p.add_argument("--carrier", choices=_lamb.CARRIERS)
    p.add_argument("--d", type=parse_length, help="fixed separation [nm]")
    p.add_argument("--R", type=parse_length, help="fixed radius [nm]")
    p.add_argument("--R-grid", dest="R_grid", help="radius grid [nm]")
    p.add_argument("--d-grid", dest="d_grid", help="separation grid [nm]")
    add_common(p)
    p.set_defaults(func=cmd_qd_sweep)

    p = sub.add_parser("em-check", help="summation-engine self test")
    p.set_defaults(func=cmd_em_check)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except RegimeError as exc:
        print(f"regime violation: {exc}", file=sys.stderr)
        return EXIT_REGIME
    except ConvergenceError as exc:
        print(f"numerical non-convergence: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except (DomainError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CasilambError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
