"""Dielectric function, refractive index, and normal-incidence reflectivity.

The relative permittivity of the medium seen by the two wavenumber branches
is, in reduced frequency y = Omega/omega_p,

    zeta_pm = 1/2 [ 1 +- (1/y^2) ( sqrt((1 - y^2)^2 - 4 q) -+ 1 ) ],

which coincides with (x_pm / y)^2.  For xi = 0 both branches merge into the
textbook plasma permittivity 1 - 1/y^2.  Complex square roots are principal
throughout, consistent with the dispersion module.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .dispersion import Branch, Regime, classify_regime, critical_points
from .errors import DomainError
from .params import polarization_weight


@dataclass(frozen=True)
class OpticalResponse:
    """Permittivity, refractive index, and reflectivity on one branch."""

    zeta: complex
    eta: complex
    R: float
    branch: Branch


def dielectric(y: float, xi: float, branch: Branch) -> complex:
    """Relative permittivity zeta on the given branch at reduced frequency y."""
    if y <= 0.0:
        raise DomainError(f"dielectric function requires y > 0, got {y}")
    q = polarization_weight(xi)
    regime = classify_regime(y, xi)
    y2 = y * y

    if q > 0.0 and regime is Regime.EVANESCENT and y == critical_points(xi).omega_tilde:
        # double root of the wavenumber: zeta+ = zeta- = -sqrt(q)/y^2 exactly
        return complex(-(xi / (1.0 + xi * xi)) / y2, 0.0)

    a = y * y - 1.0
    disc = a * a - 4.0 * q
    if regime is Regime.DECAYING_TRAVELING:
        inner = 1j * math.sqrt(max(-disc, 0.0))
        zeta = (a + inner) / (2.0 * y2)
        return zeta if branch is Branch.PLUS else zeta.conjugate()
    # Real-permittivity regimes: clamp rounding noise so zeta is exactly real
    # with the sign the regime guarantees, and take the smaller-magnitude
    # branch from the product law zeta+ zeta- = q/y^4 to avoid the
    # a -+ inner cancellation (see the dispersion module).
    inner = math.sqrt(max(disc, 0.0))
    if regime is Regime.TRAVELING:
        big = max(a + inner, 0.0)
        if branch is Branch.PLUS:
            num = big
        else:
            num = 4.0 * q / big if big > 0.0 else 0.0
    else:
        big = min(a - inner, 0.0)
        if branch is Branch.MINUS:
            num = big
        else:
            num = 4.0 * q / big if big < 0.0 else 0.0
    return complex(num / (2.0 * y2), 0.0)


def refractive_index(zeta: complex) -> complex:
    """eta = sqrt(zeta), principal branch."""
    return cmath.sqrt(zeta)


def reflectivity(eta: complex) -> float:
    """Normal-incidence reflectivity |(eta - 1)/(eta + 1)|^2."""
    if eta == -1:
        raise DomainError("reflectivity is undefined at eta = -1")
    return abs((eta - 1.0) / (eta + 1.0)) ** 2


def optical_response(y: float, xi: float, branch: Branch) -> OpticalResponse:
    """Full optical response on one branch at reduced frequency y."""
    zeta = dielectric(y, xi, branch)
    eta = refractive_index(zeta)
    return OpticalResponse(zeta=zeta, eta=eta, R=reflectivity(eta), branch=branch)
