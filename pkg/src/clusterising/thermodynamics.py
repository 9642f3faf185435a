"""Free energy density, its second derivative and the Ising-chain equivalence."""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np
from scipy.integrate import IntegrationWarning, quad

from .errors import DomainError, QuadratureError
from .model_core import _dispersion

QUAD_TOL = 1e-12
MAX_REPORTED_ERROR = 1e-10

# kinks of Lambda(p) sit at the zeros of sin(3p/2) on [0, pi]
_CIM_BREAKS = (0.0, math.pi / 3, 2 * math.pi / 3, math.pi)
_ISING_BREAKS = (0.0, math.pi)


@dataclass(frozen=True)
class EllipticPair:
    """Complete elliptic integrals for modulus ``x`` (integrand ``1 - x^2 sin^2``)."""

    modulus: float
    K: float
    E: float


@dataclass(frozen=True)
class FreeEnergyResult:
    f: float
    estimated_quadrature_error: float
    beta: float
    lam: float


def _agm_KE(k: float, kp: float) -> tuple[float, float]:
    # kp is the complementary modulus sqrt(1 - k^2), passed separately so
    # callers near k = 1 can supply it without cancellation
    a, b, c = 1.0, kp, k
    acc = 0.5 * c * c
    scale = 0.5
    for _ in range(64):
        if abs(c) <= 1e-17 * a:
            break
        a, b, c = 0.5 * (a + b), math.sqrt(a * b), 0.5 * (a - b)
        scale *= 2.0
        acc += scale * c * c
    K = math.pi / (2.0 * a)
    return K, K * (1.0 - acc)


def elliptic_KE(x: float) -> EllipticPair:
    """K(x) and E(x) by the arithmetic-geometric mean.

    ``x`` is the modulus. At ``x = 1`` only E exists (E = 1) and K is
    reported as ``inf``; use :func:`elliptic_K` to get an error instead.
    """
    if not 0.0 <= x <= 1.0:
        raise DomainError(f"modulus must lie in [0, 1], got {x}")
    if x == 1.0:
        return EllipticPair(1.0, math.inf, 1.0)
    K, E = _agm_KE(x, math.sqrt((1.0 - x) * (1.0 + x)))
    return EllipticPair(x, K, E)


def elliptic_K(x: float) -> float:
    if x == 1.0:
        raise DomainError("K diverges at modulus 1")
    return elliptic_KE(x).K


def elliptic_E(x: float) -> float:
    return elliptic_KE(x).E


def _log2cosh(x):
    # overflow-safe log(2 cosh x) for x >= 0
    return x + np.log1p(np.exp(-2.0 * x))


def _integrate(fun, breaks, tol=QUAD_TOL):
    total, err = 0.0, 0.0
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", IntegrationWarning)
        for a, b in zip(breaks[:-1], breaks[1:]):
            v, e = quad(fun, a, b, epsabs=tol, epsrel=tol, limit=400)
            total += v
            err += e
    return total, err


def _free_energy(lam, beta, period_factor, breaks):
    if not lam >= 0:
        raise DomainError(f"coupling must be >= 0, got {lam}")
    if not beta > 0:
        raise DomainError(f"inverse temperature must be > 0, got {beta}")
    if math.isinf(beta):
        def integrand(p):
            return _dispersion(lam, p, period_factor)
    else:
        def integrand(p):
            return _log2cosh(beta * _dispersion(lam, p, period_factor)) / beta
    val, err = _integrate(integrand, breaks)
    f = -val / math.pi
    err /= math.pi
    if err > MAX_REPORTED_ERROR:
        raise QuadratureError(
            f"free energy quadrature reached only {err:.2e} at lam={lam}, beta={beta}", f, err
        )
    return FreeEnergyResult(f, err, beta, lam)


def free_energy(lam: float, beta: float = math.inf) -> FreeEnergyResult:
    """Free energy per site ``-(1/(pi beta)) int_0^pi log(2 cosh(beta Lambda(p))) dp``.

    ``beta = inf`` gives the ground-state energy density ``-(1/pi) int Lambda``.
    """
    return _free_energy(lam, beta, 3, _CIM_BREAKS)


def ising_free_energy(lam: float, beta: float = math.inf) -> FreeEnergyResult:
    """Same integral with the transverse-field Ising dispersion."""
    return _free_energy(lam, beta, 1, _ISING_BREAKS)


def ground_energy_density(lam: float) -> float:
    return free_energy(lam, math.inf).f


def d2f_closed_form(lam: float) -> float:
    """Zero-temperature second derivative of the free energy in ``lam``.

    ``[(1+lam)^2 E - (1+lam^2) K] / (pi lam^2 (1+lam))`` where the
    elliptic integrals take parameter ``m = 4 lam / (1+lam)^2``, i.e.
    modulus ``2 sqrt(lam) / (1+lam)``. Diverges logarithmically at lam = 1.
    """
    if not lam > 0:
        raise DomainError(f"coupling must be > 0, got {lam}")
    if lam == 1.0:
        raise DomainError("second derivative diverges at lam = 1")
    k = 2.0 * math.sqrt(lam) / (1.0 + lam)
    kp = abs(1.0 - lam) / (1.0 + lam)
    K, E = _agm_KE(k, kp)
    return ((1.0 + lam) ** 2 * E - (1.0 + lam * lam) * K) / (math.pi * lam * lam * (1.0 + lam))
