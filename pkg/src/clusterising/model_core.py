"""Model parameters and single-particle spectrum of the cluster-Ising chain.

The Hamiltonian is

    H(lam) = - sum_j X_{j-1} Z_j X_{j+1} + lam * sum_j Y_j Y_{j+1}

and after Jordan-Wigner, Fourier and Bogoliubov transformations it becomes
``2 * sum_k Lambda_k (n_k - 1/2)`` with
``Lambda_k = sqrt(1 + lam^2 - 2 lam cos(6 pi k / N))``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError


class _Thermodynamic:
    """Marker for the N -> infinity limit."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "THERMODYNAMIC"

    def __reduce__(self):
        return (_Thermodynamic, ())


THERMODYNAMIC = _Thermodynamic()


class Boundary(str, enum.Enum):
    PERIODIC = "periodic"
    OPEN = "open"


@dataclass(frozen=True)
class ModelParams:
    """Point in parameter space.

    ``beta = math.inf`` means zero temperature. ``h_stagger`` is the
    staggered y-field used only by exact diagonalization.
    """

    lam: float
    beta: float = math.inf
    n_sites: int | _Thermodynamic = THERMODYNAMIC
    boundary: Boundary = Boundary.PERIODIC
    h_stagger: float = 0.0

    def __post_init__(self):
        if not self.lam >= 0:
            raise DomainError(f"coupling must be >= 0, got {self.lam}")
        if not self.beta > 0:
            raise DomainError(f"inverse temperature must be > 0, got {self.beta}")
        if not self.h_stagger >= 0:
            raise DomainError(f"staggered field must be >= 0, got {self.h_stagger}")
        object.__setattr__(self, "boundary", Boundary(self.boundary))
        if self.n_sites is not THERMODYNAMIC:
            if isinstance(self.n_sites, bool) or int(self.n_sites) != self.n_sites or self.n_sites < 1:
                raise DomainError(f"n_sites must be a positive integer, got {self.n_sites!r}")
            object.__setattr__(self, "n_sites", int(self.n_sites))
        elif self.boundary is Boundary.OPEN:
            raise DomainError("an open chain needs a finite number of sites")

    @property
    def is_finite(self) -> bool:
        return self.n_sites is not THERMODYNAMIC


@dataclass(frozen=True)
class Mode:
    k: int
    epsilon: float
    delta: float
    lambda_k: float
    u: float
    v: float


@dataclass(frozen=True)
class ModeSpectrum:
    modes: tuple[Mode, ...]

    def __len__(self):
        return len(self.modes)

    def __iter__(self):
        return iter(self.modes)

    @property
    def energies(self) -> np.ndarray:
        return np.array([m.lambda_k for m in self.modes])

    def ground_energy(self) -> float:
        """Vacuum energy -sum_k Lambda_k, ignoring the Jordan-Wigner border term."""
        return -float(self.energies.sum())


@dataclass(frozen=True)
class Dispersion:
    """Continuum quasiparticle energy ``p -> Lambda(p)``."""

    lam: float
    period_factor: int = field(default=3)

    def __call__(self, p):
        return _dispersion(self.lam, p, self.period_factor)


def _dispersion(lam, p, n=3):
    # (1 - lam)^2 + 4 lam sin^2(n p / 2) avoids cancellation near the gap minimum
    s = np.sin(0.5 * n * np.asarray(p, dtype=float))
    out = np.sqrt((1.0 - lam) ** 2 + 4.0 * lam * s * s)
    return float(out) if out.ndim == 0 else out


def dispersion_at(lam: float, p):
    """``sqrt(1 + lam^2 - 2 lam cos 3p)``; accepts scalars or arrays."""
    if not lam >= 0:
        raise DomainError(f"coupling must be >= 0, got {lam}")
    return _dispersion(lam, p, 3)


def ising_dispersion_at(lam: float, p):
    """Transverse-field Ising dispersion ``sqrt(1 + lam^2 - 2 lam cos p)``."""
    if not lam >= 0:
        raise DomainError(f"coupling must be >= 0, got {lam}")
    return _dispersion(lam, p, 1)


def _sign(x: float) -> float:
    # sign(0) := +1, any fixed choice is a valid Bogoliubov rotation
    return -1.0 if x < 0 else 1.0


def finite_spectrum(params: ModelParams) -> ModeSpectrum:
    """Per-mode Bogoliubov data for a periodic ring of ``N`` sites, ``k = 1..N``."""
    if not params.is_finite:
        raise DomainError("finite_spectrum needs a finite number of sites")
    if params.boundary is not Boundary.PERIODIC:
        raise DomainError("finite_spectrum is defined for periodic boundaries only")
    n, lam = params.n_sites, params.lam
    modes = []
    for k in range(1, n + 1):
        q = 2.0 * math.pi * k / n
        eps = math.cos(2 * q) - lam * math.cos(q)
        dlt = math.sin(2 * q) + lam * math.sin(q)
        lk = _dispersion(lam, q, 3)
        # gapless mode (lam = 1): eps = delta = 0, take u = 1, v = 0
        ratio = eps / lk if lk > 0 else 1.0
        ratio = min(1.0, max(-1.0, ratio))
        u = math.sqrt(0.5 * (1.0 + ratio))
        v = -_sign(dlt) * math.sqrt(0.5 * (1.0 - ratio))
        modes.append(Mode(k, eps, dlt, lk, u, v))
    return ModeSpectrum(tuple(modes))


def energy_gap(lam: float) -> float:
    """Gap between ground and first excited level, ``2 |1 - lam|``."""
    if not lam >= 0:
        raise DomainError(f"coupling must be >= 0, got {lam}")
    return 2.0 * abs(1.0 - lam)


def triple_ising_split(params: ModelParams) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Single-particle energies of the three decoupled Ising chains (N = 3M).

    Each copy is ``sqrt(1 + lam^2 - 2 lam cos(2 pi k / M))`` for ``k = 1..M``.
    """
    if not params.is_finite or params.boundary is not Boundary.PERIODIC:
        raise DomainError("triple_ising_split needs a finite periodic ring")
    n = params.n_sites
    if n % 3:
        raise DomainError(f"N must be a multiple of 3, got {n}")
    m = n // 3
    k = np.arange(1, m + 1)
    copy = _dispersion(params.lam, 2.0 * np.pi * k / m, 1)
    copy = np.atleast_1d(copy)
    return copy.copy(), copy.copy(), copy.copy()


def majorana_coupling_matrix(
    n_sites: int, lam: float, boundary: Boundary = Boundary.PERIODIC, wrap_sign: float = 1.0
) -> np.ndarray:
    """Real antisymmetric ``A`` with ``H = (i/4) a^T A a`` over 2N Majoranas.

    Index ``2j-2`` (0-based) holds ``a_{2j-1} = string * X_j`` and ``2j-1``
    holds ``a_{2j} = string * Y_j``. Bonds that wrap around a periodic ring
    are multiplied by ``wrap_sign``; the spin problem in the sector of
    parity ``P = prod Z`` corresponds to ``wrap_sign = -P``.
    """
    boundary = Boundary(boundary)
    n2 = 2 * n_sites
    a = np.zeros((n2, n2))

    def bond(m, k, c):
        # m, k are 1-based Majorana labels that may run past either end
        s = 1.0
        if m < 1:
            m += n2
            s *= wrap_sign
        if k > n2:
            k -= n2
            s *= wrap_sign
        a[m - 1, k - 1] += 2.0 * c * s
        a[k - 1, m - 1] -= 2.0 * c * s

    if boundary is Boundary.PERIODIC:
        for j in range(1, n_sites + 1):
            bond(2 * j - 2, 2 * j + 1, 1.0)
            if lam:
                bond(2 * j - 1, 2 * j + 2, lam)
    else:
        for j in range(2, n_sites):
            bond(2 * j - 2, 2 * j + 1, 1.0)
        if lam:
            for j in range(1, n_sites):
                bond(2 * j - 1, 2 * j + 2, lam)
    return a


def free_majorana_count(params: ModelParams) -> int:
    """Number of Majorana operators that appear in no bond of the chain.

    Counted structurally as all-zero rows of the coupling matrix; an open
    cluster chain (``lam = 0``) leaves four of them at the edges.
    """
    if not params.is_finite:
        raise DomainError("free_majorana_count needs a finite chain")
    a = majorana_coupling_matrix(params.n_sites, params.lam, params.boundary)
    return int(np.sum(~np.any(a != 0.0, axis=1)))
