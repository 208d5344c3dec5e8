"""Command-line front end: parameter sweeps, figure datasets, spectrum
verification, and single-point force/spectrum calculators.

Exit codes: 0 success, 1 verification failure, 2 usage/spec error,
3 domain error (the offending row is identified on stderr).
"""

from __future__ import annotations

import argparse
import math
import sys
from dataclasses import dataclass, field
from pathlib import Path

from .dispersion import Branch, k_branches, omega_of_k
from .errors import DomainError
from .figures import emit_figure_datasets
from .fock import default_verification_cases, verify_spectrum
from .kinematics import group_velocity, phase_velocity
from .optics import optical_response
from .output import render_csv, render_json, render_json_table, write_bytes
from .params import ATOMIC_C, ModelParams, validate_xi
from .plates import PlateGeometry, force_at_minimum, force_general, plasma_frequency_plates
from .spectrum import Momentum, energy_level

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_DOMAIN = 3

QUANTITIES = (
    "dispersion",
    "wavenumber",
    "dielectric",
    "reflectivity",
    "velocity",
    "spectrum",
    "force",
)
# Quantities swept in wavenumber; the rest sweep the mode frequency.
K_SWEPT = {"dispersion", "velocity"}
ATOMIC_ONLY = {"spectrum", "force"}


class SpecError(ValueError):
    """A sweep/verify specification is malformed (exit code 2)."""


@dataclass(frozen=True)
class GridSpec:
    """Either an explicit value list or a start:stop:count[:spacing] range."""

    values: tuple[float, ...] = ()
    start: float = 0.0
    stop: float = 0.0
    count: int = 0
    spacing: str = "linear"

    @property
    def is_range(self) -> bool:
        return not self.values

    def validate(self) -> None:
        if not self.is_range:
            return
        if self.count < 2:
            raise SpecError(f"grid count must be at least 2, got {self.count}")
        if not self.start < self.stop:
            raise SpecError(f"grid needs start < stop, got {self.start}:{self.stop}")
        if self.spacing not in ("linear", "log"):
            raise SpecError(f"unknown grid spacing {self.spacing!r}")
        if self.spacing == "log" and self.start <= 0.0:
            raise SpecError("log spacing requires start > 0")

    def resolve(self) -> list[float]:
        if not self.is_range:
            return list(self.values)
        if self.spacing == "log":
            la, lb = math.log10(self.start), math.log10(self.stop)
            return [10.0 ** (la + (lb - la) * i / (self.count - 1)) for i in range(self.count)]
        return [
            self.start + (self.stop - self.start) * i / (self.count - 1)
            for i in range(self.count)
        ]


def parse_grid(text: str) -> GridSpec:
    """"a:b:n[:log]" is a range; otherwise a comma-separated value list."""
    if ":" in text:
        parts = text.split(":")
        if len(parts) not in (3, 4):
            raise SpecError(f"grid must be start:stop:count[:spacing], got {text!r}")
        try:
            start, stop = float(parts[0]), float(parts[1])
            count = int(parts[2])
        except ValueError as exc:
            raise SpecError(f"malformed grid {text!r}: {exc}") from None
        spacing = parts[3] if len(parts) == 4 else "linear"
        spec = GridSpec(start=start, stop=stop, count=count, spacing=spacing)
        spec.validate()
        return spec
    try:
        values = tuple(float(v) for v in text.split(","))
    except ValueError as exc:
        raise SpecError(f"malformed value list {text!r}: {exc}") from None
    if not values:
        raise SpecError("empty grid")
    return GridSpec(values=values)


def parse_momentum(text: str) -> Momentum:
    parts = text.split(",")
    if len(parts) != 3:
        raise SpecError(f"momentum must be three comma-separated numbers, got {text!r}")
    try:
        a, b, c = (float(v) for v in parts)
    except ValueError as exc:
        raise SpecError(f"malformed momentum {text!r}: {exc}") from None
    return Momentum(p_major=a, p_minor=b, p_perp=c)


@dataclass(frozen=True)
class SweepSpec:
    """Everything needed to evaluate one sweep and write its dataset."""

    quantity: str
    xi_list: tuple[float, ...]
    grid: GridSpec
    units: str = "reduced"
    out: Path | None = None
    fmt: str = "csv"
    # Context for dimensionful quantities and atomic-unit conversion.
    omega_p: float = 1.0
    mass: float = 1.0
    hbar: float = 1.0
    c: float | None = None
    momentum: Momentum = field(default_factory=Momentum)
    n: int = 0
    n_charges: int = 1
    d: float = 1.0
    area: float = 1.0
    charge: float = 1.0
    n_photons: int = 0

    def resolved_c(self) -> float:
        if self.c is not None:
            return self.c
        return ATOMIC_C if self.units == "atomic" else 1.0

    def validate(self) -> None:
        if self.quantity not in QUANTITIES:
            raise SpecError(f"unknown quantity {self.quantity!r}")
        if self.units not in ("reduced", "atomic"):
            raise SpecError(f"unknown units {self.units!r}")
        if self.quantity in ATOMIC_ONLY and self.units == "reduced":
            raise SpecError(f"{self.quantity} sweeps are dimensionful; use atomic units")
        if self.fmt not in ("csv", "json"):
            raise SpecError(f"unknown format {self.fmt!r}")
        if not self.xi_list:
            raise SpecError("at least one xi value is required")
        for xi in self.xi_list:
            try:
                validate_xi(xi)
            except DomainError as exc:
                raise SpecError(str(exc)) from None
        self.grid.validate()
        if self.quantity in K_SWEPT and any(xi > 0.0 for xi in self.xi_list):
            if any(v <= 0.0 for v in self.grid.resolve()):
                raise SpecError(
                    "wavenumber grid must exclude 0 when any xi > 0 (singular point)"
                )


def _sweep_rows(spec: SweepSpec) -> tuple[list[str], list[list]]:
    reduced = spec.units == "reduced"
    c = spec.resolved_c()
    k_p = spec.omega_p / c if spec.omega_p > 0 else 0.0
    values = spec.grid.resolve()
    q = spec.quantity

    if q == "dispersion":
        header = ["k_over_kp", "xi", "omega_over_wp"] if reduced else ["k", "xi", "omega"]
    elif q == "wavenumber":
        header = (
            ["omega_over_wp", "xi", "branch", "re_k_over_kp", "im_k_over_kp", "regime"]
            if reduced
            else ["omega", "xi", "branch", "re_k", "im_k", "regime"]
        )
    elif q == "dielectric":
        header = [("omega_over_wp" if reduced else "omega"), "xi", "branch", "re_zeta", "im_zeta"]
    elif q == "reflectivity":
        header = [("omega_over_wp" if reduced else "omega"), "xi", "branch", "reflectivity"]
    elif q == "velocity":
        header = (
            ["k_over_kp", "xi", "v_phase_over_c", "v_group_over_c"]
            if reduced
            else ["k", "xi", "v_phase", "v_group"]
        )
    elif q == "spectrum":
        header = [
            "omega", "xi", "omega_p", "p_major", "p_minor", "p_perp",
            "n", "theta", "sigma_sq", "effective_omega", "energy",
        ]
    else:
        header = ["omega", "xi", "d", "area", "n_charges", "n_photons", "omega_p", "force"]

    if not reduced and q in K_SWEPT | {"wavenumber", "dielectric", "reflectivity"}:
        if spec.omega_p <= 0.0:
            raise SpecError("atomic units for reduced-family sweeps require omega_p > 0")

    rows: list[list] = []
    for xi in spec.xi_list:
        for value in values:
            try:
                if q == "dispersion":
                    x = value if reduced else value / k_p
                    y = omega_of_k(x, xi)
                    rows.append([value, xi, y if reduced else y * spec.omega_p])
                elif q == "wavenumber":
                    y = value if reduced else value / spec.omega_p
                    for wn in k_branches(y, xi):
                        z = wn.value if reduced else wn.value * k_p
                        rows.append([value, xi, wn.branch, z.real, z.imag, wn.regime])
                elif q == "dielectric":
                    y = value if reduced else value / spec.omega_p
                    for branch in (Branch.PLUS, Branch.MINUS):
                        resp = optical_response(y, xi, branch)
                        rows.append([value, xi, branch, resp.zeta.real, resp.zeta.imag])
                elif q == "reflectivity":
                    y = value if reduced else value / spec.omega_p
                    for branch in (Branch.PLUS, Branch.MINUS):
                        rows.append([value, xi, branch, optical_response(y, xi, branch).R])
                elif q == "velocity":
                    x = value if reduced else value / k_p
                    vp, vg = phase_velocity(x, xi), group_velocity(x, xi)
                    rows.append([value, xi, vp if reduced else vp * c, vg if reduced else vg * c])
                elif q == "spectrum":
                    params = ModelParams(
                        xi=xi, omega=value, omega_p=spec.omega_p,
                        mass=spec.mass, hbar=spec.hbar, c=c,
                    )
                    level = energy_level(params, spec.momentum, spec.n, spec.n_charges)
                    rows.append([
                        value, xi, spec.omega_p,
                        spec.momentum.p_major, spec.momentum.p_minor, spec.momentum.p_perp,
                        spec.n, level.theta, level.sigma_sq, level.Omega, level.energy,
                    ])
                else:  # force
                    geom = PlateGeometry(
                        d=spec.d, A=spec.area,
                        N_charges=spec.n_charges, n_photons=spec.n_photons,
                    )
                    f = force_general(value, geom, spec.charge, spec.mass, xi, spec.hbar)
                    wp = plasma_frequency_plates(geom, spec.charge, spec.mass)
                    rows.append([
                        value, xi, spec.d, spec.area,
                        spec.n_charges, spec.n_photons, wp, f,
                    ])
            except DomainError as exc:
                print(
                    f"domain error at xi={xi:g}, "
                    f"{'k' if q in K_SWEPT else 'omega'}={value:g}: {exc}",
                    file=sys.stderr,
                )
                raise
    return header, rows


def run_sweep(spec: SweepSpec) -> None:
    """Validate, evaluate, and write one sweep dataset."""
    spec.validate()
    header, rows = _sweep_rows(spec)
    if spec.fmt == "csv":
        data = render_csv(header, rows)
    else:
        data = render_json_table(header, rows, quantity=spec.quantity, units=spec.units)
    write_bytes(data, spec.out)


def run_verify(
    cases: list[tuple[ModelParams, Momentum]],
    n_levels: int = 5,
    tol: float = 1e-6,
    cutoff_start: int = 64,
    cutoff_cap: int = 1024,
) -> dict:
    """Run every verification case and assemble a JSON-able report."""
    entries = []
    for params, p in cases:
        report = verify_spectrum(
            params, p, n_levels=n_levels, tol=tol,
            cutoff_start=cutoff_start, cutoff_cap=cutoff_cap,
        )
        entries.append({
            "xi": params.xi,
            "omega": params.omega,
            "omega_p": params.omega_p,
            "p": [p.p_major, p.p_minor, p.p_perp],
            "lowest_analytic": report.lowest_analytic,
            "lowest_numeric": report.lowest_numeric,
            "max_rel_err": report.max_rel_err,
            "cutoff_used": report.cutoff_used,
            "converged": report.converged,
        })
    return {
        "tol": tol,
        "cutoff_start": cutoff_start,
        "cutoff_cap": cutoff_cap,
        "n_levels": n_levels,
        "all_converged": all(e["converged"] for e in entries),
        "cases": entries,
    }


def _add_common_output_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--out", type=Path, default=None, help="output file (default: stdout)")
    parser.add_argument("--format", choices=("csv", "json"), default="csv")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quasimode",
        description="Quasimode dispersion, plasma optics, spectrum, and plate-force calculator.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sweep = sub.add_parser("sweep", help="evaluate a quantity over a grid")
    sweep.add_argument("quantity", choices=QUANTITIES)
    sweep.add_argument("--xi", required=True, help="comma-separated polarization values")
    sweep.add_argument("--k", help="wavenumber grid: list or start:stop:count[:log]")
    sweep.add_argument("--omega", help="frequency grid: list or start:stop:count[:log]")
    sweep.add_argument("--units", choices=("reduced", "atomic"), default=None)
    sweep.add_argument("--omega-p", type=float, default=1.0)
    sweep.add_argument("--mass", type=float, default=1.0)
    sweep.add_argument("--hbar", type=float, default=1.0)
    sweep.add_argument("--c", type=float, default=None)
    sweep.add_argument("--p", default="0,0,0", help="momentum p_major,p_minor,p_perp")
    sweep.add_argument("--n", type=int, default=0, help="excitation number")
    sweep.add_argument("--charges", type=int, default=1)
    sweep.add_argument("--d", type=float, default=1.0, help="plate separation")
    sweep.add_argument("--area", type=float, default=1.0, help="plate area")
    sweep.add_argument("--charge", type=float, default=1.0)
    sweep.add_argument("--n-photons", type=int, default=0)
    _add_common_output_args(sweep)
    sweep.set_defaults(func=_cmd_sweep)

    figures = sub.add_parser("figures", help="emit the six reference figure datasets")
    figures.add_argument("--outdir", type=Path, default=Path("figures"))
    figures.set_defaults(func=_cmd_figures)

    verify = sub.add_parser("verify", help="check the analytic spectrum against the number-basis matrix")
    verify.add_argument("--xi", default=None, help="comma-separated list (default grid otherwise)")
    verify.add_argument("--omega", default=None, help="comma-separated list")
    verify.add_argument("--omega-p", default=None, help="comma-separated list")
    verify.add_argument("--p", action="append", default=None, help="momentum triple; repeatable")
    verify.add_argument("--levels", type=int, default=5)
    verify.add_argument("--tol", type=float, default=1e-6)
    verify.add_argument("--cutoff-start", type=int, default=64)
    verify.add_argument("--cutoff-cap", type=int, default=1024)
    verify.add_argument("--out", type=Path, default=None, help="JSON report file (default: stdout)")
    verify.set_defaults(func=_cmd_verify)

    force = sub.add_parser("force", help="plate force at given frequencies or at the energy minimum")
    force.add_argument("--xi", required=True)
    force.add_argument("--d", required=True, help="separation grid: list or start:stop:count[:log]")
    force.add_argument("--area", type=float, default=1.0)
    force.add_argument("--omega", default=None, help="frequency grid; omit with --at-minimum")
    force.add_argument("--at-minimum", action="store_true")
    force.add_argument("--charge", type=float, default=1.0)
    force.add_argument("--mass", type=float, default=1.0)
    force.add_argument("--hbar", type=float, default=1.0)
    force.add_argument("--charges", type=int, default=1)
    force.add_argument("--n-photons", type=int, default=0)
    force.add_argument("--scaling", choices=("recompute", "frozen"), default="recompute")
    force.add_argument("--ref-d", type=float, default=None,
                       help="reference separation fixing omega_p in frozen mode (default: first d)")
    _add_common_output_args(force)
    force.set_defaults(func=_cmd_force)

    spectrum = sub.add_parser("spectrum", help="exact energy levels for given parameters")
    spectrum.add_argument("--xi", required=True)
    spectrum.add_argument("--omega", required=True, help="frequency grid: list or range")
    spectrum.add_argument("--omega-p", type=float, required=True)
    spectrum.add_argument("--p", default="0,0,0")
    spectrum.add_argument("--n", default="0", help="comma-separated excitation numbers")
    spectrum.add_argument("--mass", type=float, default=1.0)
    spectrum.add_argument("--hbar", type=float, default=1.0)
    spectrum.add_argument("--c", type=float, default=1.0)
    spectrum.add_argument("--charges", type=int, default=1)
    _add_common_output_args(spectrum)
    spectrum.set_defaults(func=_cmd_spectrum)

    return parser


def _parse_xi_list(text: str) -> tuple[float, ...]:
    try:
        return tuple(float(v) for v in text.split(","))
    except ValueError as exc:
        raise SpecError(f"malformed xi list {text!r}: {exc}") from None


def _cmd_sweep(args: argparse.Namespace) -> int:
    if (args.k is None) == (args.omega is None):
        raise SpecError("provide exactly one of --k and --omega")
    quantity = args.quantity
    if quantity in K_SWEPT and args.k is None:
        raise SpecError(f"{quantity} sweeps over --k")
    if quantity not in K_SWEPT and args.omega is None:
        raise SpecError(f"{quantity} sweeps over --omega")
    units = args.units
    if units is None:
        units = "atomic" if quantity in ATOMIC_ONLY else "reduced"
    spec = SweepSpec(
        quantity=quantity,
        xi_list=_parse_xi_list(args.xi),
        grid=parse_grid(args.k if args.k is not None else args.omega),
        units=units,
        out=args.out,
        fmt=args.format,
        omega_p=args.omega_p,
        mass=args.mass,
        hbar=args.hbar,
        c=args.c,
        momentum=parse_momentum(args.p),
        n=args.n,
        n_charges=args.charges,
        d=args.d,
        area=args.area,
        charge=args.charge,
        n_photons=args.n_photons,
    )
    run_sweep(spec)
    return EXIT_OK


def _cmd_figures(args: argparse.Namespace) -> int:
    for path in emit_figure_datasets(args.outdir):
        print(path)
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    if args.tol <= 0:
        raise SpecError(f"tolerance must be positive, got {args.tol}")
    if args.cutoff_start < 8:
        raise SpecError(f"cutoff start must be at least 8, got {args.cutoff_start}")
    if args.cutoff_cap < args.cutoff_start:
        raise SpecError("cutoff cap must be at least the starting cutoff")
    if args.levels < 1:
        raise SpecError(f"levels must be positive, got {args.levels}")

    if args.xi is None and args.omega is None and args.omega_p is None and args.p is None:
        cases = default_verification_cases()
    else:
        xis = _parse_xi_list(args.xi) if args.xi else (0.0, 0.5, 1.0)
        omegas = _parse_xi_list(args.omega) if args.omega else (1.0,)
        omega_ps = _parse_xi_list(args.omega_p) if args.omega_p else (0.5,)
        momenta = [parse_momentum(t) for t in args.p] if args.p else [Momentum()]
        for xi in xis:
            try:
                validate_xi(xi)
            except DomainError as exc:
                raise SpecError(str(exc)) from None
        cases = [
            (ModelParams(xi=xi, omega=w, omega_p=wp), p)
            for xi in xis
            for w in omegas
            for wp in omega_ps
            for p in momenta
        ]

    report = run_verify(
        cases,
        n_levels=args.levels,
        tol=args.tol,
        cutoff_start=args.cutoff_start,
        cutoff_cap=args.cutoff_cap,
    )
    for case in report["cases"]:
        status = "ok" if case["converged"] else "FAILED"
        print(
            f"[{status}] xi={case['xi']:g} omega={case['omega']:g} "
            f"omega_p={case['omega_p']:g} p={tuple(case['p'])} "
            f"cutoff={case['cutoff_used']} max_rel_err={case['max_rel_err']:.3e}",
            file=sys.stderr,
        )
    write_bytes(render_json(report), args.out)
    return EXIT_OK if report["all_converged"] else EXIT_VERIFY_FAILED


def _cmd_force(args: argparse.Namespace) -> int:
    xi_list = _parse_xi_list(args.xi)
    for xi in xi_list:
        try:
            validate_xi(xi)
        except DomainError as exc:
            raise SpecError(str(exc)) from None
    d_values = parse_grid(args.d).resolve()
    if args.at_minimum == (args.omega is not None):
        raise SpecError("provide exactly one of --omega and --at-minimum")
    omega_values = parse_grid(args.omega).resolve() if args.omega else [None]

    frozen_wp = None
    if args.scaling == "frozen":
        ref_d = args.ref_d if args.ref_d is not None else d_values[0]
        ref_geom = PlateGeometry(
            d=ref_d, A=args.area, N_charges=args.charges, n_photons=args.n_photons
        )
        frozen_wp = plasma_frequency_plates(ref_geom, args.charge, args.mass)

    header = ["xi", "omega", "d", "area", "n_charges", "n_photons",
              "scaling", "omega_p", "force"]
    rows: list[list] = []
    for xi in xi_list:
        for d in d_values:
            geom = PlateGeometry(
                d=d, A=args.area, N_charges=args.charges, n_photons=args.n_photons
            )
            wp = frozen_wp if frozen_wp is not None else plasma_frequency_plates(
                geom, args.charge, args.mass
            )
            for omega in omega_values:
                try:
                    if omega is None:
                        f = force_at_minimum(
                            geom, args.charge, args.mass, xi, args.hbar,
                            omega_p=frozen_wp,
                        )
                        omega_out = wp * (xi / (1.0 + xi * xi)) ** 0.5
                    else:
                        f = force_general(
                            omega, geom, args.charge, args.mass, xi, args.hbar,
                            omega_p=frozen_wp,
                        )
                        omega_out = omega
                except DomainError as exc:
                    print(
                        f"domain error at xi={xi:g}, d={d:g}, omega={omega}: {exc}",
                        file=sys.stderr,
                    )
                    raise
                rows.append([
                    xi, omega_out, d, args.area, args.charges,
                    args.n_photons, args.scaling, wp, f,
                ])
    data = (
        render_csv(header, rows)
        if args.format == "csv"
        else render_json_table(header, rows, quantity="force", units="atomic")
    )
    write_bytes(data, args.out)
    return EXIT_OK


def _cmd_spectrum(args: argparse.Namespace) -> int:
    xi_list = _parse_xi_list(args.xi)
    for xi in xi_list:
        try:
            validate_xi(xi)
        except DomainError as exc:
            raise SpecError(str(exc)) from None
    omega_values = parse_grid(args.omega).resolve()
    try:
        n_values = [int(v) for v in args.n.split(",")]
    except ValueError as exc:
        raise SpecError(f"malformed excitation list {args.n!r}: {exc}") from None
    momentum = parse_momentum(args.p)

    header = ["omega", "xi", "omega_p", "p_major", "p_minor", "p_perp",
              "n", "theta", "sigma_sq", "effective_omega", "energy"]
    rows: list[list] = []
    for xi in xi_list:
        for omega in omega_values:
            for n in n_values:
                try:
                    params = ModelParams(
                        xi=xi, omega=omega, omega_p=args.omega_p,
                        mass=args.mass, hbar=args.hbar, c=args.c,
                    )
                    level = energy_level(params, momentum, n, args.charges)
                except DomainError as exc:
                    print(
                        f"domain error at xi={xi:g}, omega={omega:g}, n={n}: {exc}",
                        file=sys.stderr,
                    )
                    raise
                rows.append([
                    omega, xi, args.omega_p,
                    momentum.p_major, momentum.p_minor, momentum.p_perp,
                    n, level.theta, level.sigma_sq, level.Omega, level.energy,
                ])
    data = (
        render_csv(header, rows)
        if args.format == "csv"
        else render_json_table(header, rows, quantity="spectrum", units="atomic")
    )
    write_bytes(data, args.out)
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SpecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DomainError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
