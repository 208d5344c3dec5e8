"""Quasimode dispersion relation, inverse wavenumber branches, and
propagation-regime classification.

All functions work in reduced units: x = k/k_p, y = Omega/omega_p.  The
dispersion is y(x) = sqrt(x^2 + 1 + q/x^2) with q = xi^2/(1+xi^2)^2; for
xi > 0 it diverges at both ends and has a global minimum at x* = q^(1/4).
Inverting it for a given frequency yields two branches

    x_pm = sqrt( (y^2 - 1 +- sqrt((y^2 - 1)^2 - 4 q)) / 2 ),

evaluated with principal complex square roots (argument in (-pi, pi],
nonnegative real part) at both nesting levels.  The principal convention
makes Im x_plus >= 0 and Im x_minus <= 0 in the damped window, and both
purely imaginary positive below the cutoff frequency; the minus branch
therefore carries a jump discontinuity at the cutoff.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass

from .errors import DomainError
from .params import polarization_weight, validate_xi


class Branch(enum.Enum):
    PLUS = "plus"
    MINUS = "minus"


class Regime(enum.Enum):
    TRAVELING = "traveling"
    DECAYING_TRAVELING = "decaying_traveling"
    EVANESCENT = "evanescent"


@dataclass(frozen=True)
class DispersionPoint:
    """One point (x, y) on the dispersion curve for a given xi."""

    x: float
    y: float
    xi: float

    @classmethod
    def at(cls, x: float, xi: float) -> "DispersionPoint":
        return cls(x=x, y=omega_of_k(x, xi), xi=xi)


@dataclass(frozen=True)
class ComplexWavenumber:
    """A reduced wavenumber k/k_p on one branch, tagged with its regime."""

    value: complex
    branch: Branch
    regime: Regime


@dataclass(frozen=True)
class CriticalPoints:
    """Reduced critical points of the dispersion for a given xi.

    k_star      -- location of the global minimum, sqrt(xi/(1+xi^2))
    omega_star  -- frequency at the minimum, (1+xi)/sqrt(1+xi^2)
    omega_tilde -- cutoff below which waves are fully evanescent,
                   (1-xi)/sqrt(1+xi^2)
    """

    k_star: float
    omega_star: float
    omega_tilde: float


def omega_of_k(x: float, xi: float) -> float:
    """Reduced quasimode frequency y = sqrt(x^2 + 1 + q/x^2).

    Singular at x = 0 for xi > 0; for xi = 0 the value at x = 0 is 1
    (the plasma frequency).
    """
    q = polarization_weight(xi)
    if x < 0.0:
        raise DomainError(f"reduced wavenumber must be nonnegative, got {x}")
    if x == 0.0:
        if q > 0.0:
            raise DomainError("dispersion is singular at k=0 for xi > 0")
        return 1.0
    return math.sqrt(x * x + 1.0 + q / (x * x))


def critical_points(xi: float) -> CriticalPoints:
    validate_xi(xi)
    one_plus = 1.0 + xi * xi
    return CriticalPoints(
        k_star=math.sqrt(xi / one_plus),
        omega_star=(1.0 + xi) / math.sqrt(one_plus),
        omega_tilde=(1.0 - xi) / math.sqrt(one_plus),
    )


def classify_regime(y: float, xi: float) -> Regime:
    """Traveling for y >= omega_star, decaying-traveling in between,
    evanescent for y <= omega_tilde."""
    if y < 0.0:
        raise DomainError(f"reduced frequency must be nonnegative, got {y}")
    cp = critical_points(xi)
    if y >= cp.omega_star:
        return Regime.TRAVELING
    if y > cp.omega_tilde:
        return Regime.DECAYING_TRAVELING
    return Regime.EVANESCENT


def k_branches(y: float, xi: float) -> tuple[ComplexWavenumber, ComplexWavenumber]:
    """Both complex wavenumber branches x_pm at reduced frequency y.

    At y == omega_tilde the minus branch takes the value of its limit from
    above (-i q^(1/4)); the limit from below has the opposite sign.
    """
    if y < 0.0:
        raise DomainError(f"reduced frequency must be nonnegative, got {y}")
    q = polarization_weight(xi)
    regime = classify_regime(y, xi)
    cp = critical_points(xi)

    if q > 0.0 and regime is Regime.EVANESCENT and y == cp.omega_tilde:
        # Double root: |x_pm| = k_star exactly.  The minus branch jumps here
        # (Im -> -k_star from above, +k_star from below); its point value is
        # defined as the limit from above.
        xp = complex(0.0, cp.k_star)
        xm = complex(0.0, -cp.k_star)
        return (
            ComplexWavenumber(value=xp, branch=Branch.PLUS, regime=regime),
            ComplexWavenumber(value=xm, branch=Branch.MINUS, regime=regime),
        )

    a = y * y - 1.0
    disc = a * a - 4.0 * q
    # The discriminant is >= 0 outside the damped window; clamp rounding
    # noise so traveling results stay exactly real and evanescent results
    # exactly imaginary.
    if regime is not Regime.DECAYING_TRAVELING:
        disc = max(disc, 0.0)
        inner = math.sqrt(disc)
        # The smaller-magnitude root comes from the product law
        # x+^2 x-^2 = q, which sidesteps the a -+ inner cancellation.
        if regime is Regime.TRAVELING:
            arg_plus = max(a + inner, 0.0)
            xp = complex(math.sqrt(arg_plus / 2.0), 0.0)
            xm_sq = 2.0 * q / arg_plus if arg_plus > 0.0 else 0.0
            xm = complex(math.sqrt(xm_sq), 0.0)
        else:
            arg_minus = min(a - inner, 0.0)
            xm = complex(0.0, math.sqrt(-arg_minus / 2.0))
            xp_sq = -2.0 * q / arg_minus if arg_minus < 0.0 else 0.0
            xp = complex(0.0, math.sqrt(xp_sq))
    else:
        # Strictly inside the damped window the two branches are exact
        # complex conjugates; deriving the minus branch from the plus one
        # keeps that structure even when the discriminant rounds to zero.
        inner = 1j * math.sqrt(max(-disc, 0.0))
        xp = cmath.sqrt((a + inner) / 2.0)
        xm = xp.conjugate()

    return (
        ComplexWavenumber(value=xp, branch=Branch.PLUS, regime=regime),
        ComplexWavenumber(value=xm, branch=Branch.MINUS, regime=regime),
    )


def omega_physical(k: float, omega_p: float, xi: float, c: float = 1.0) -> float:
    """Dimensionful dispersion Omega(k) = omega_p * y(k/k_p); restores the
    free-photon line c*k as omega_p -> 0."""
    if omega_p < 0.0:
        raise DomainError(f"plasma frequency must be nonnegative, got {omega_p}")
    if omega_p == 0.0:
        validate_xi(xi)
        if k < 0.0:
            raise DomainError(f"wavenumber must be nonnegative, got {k}")
        return c * k
    k_p = omega_p / c
    return omega_p * omega_of_k(k / k_p, xi)
