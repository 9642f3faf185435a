"""Reduced states, concurrence, tangle and block entropy.

Two-spin states are assembled from the infinite-chain correlators; the
block entropy uses the Majorana correlation matrix built from D(r, 0).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.special import xlogy
from scipy.stats import linregress

from .correlations import KernelTable, correlator_x, correlator_y, correlator_z, magnetization_z
from .errors import CIMError, DomainError, FitError
from .order_params import staggered_my

PAULI = {
    "0": np.eye(2, dtype=complex),
    "x": np.array([[0, 1], [1, 0]], dtype=complex),
    "y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "z": np.array([[1, 0], [0, -1]], dtype=complex),
}
_YY = np.kron(PAULI["y"], PAULI["y"])

PSD_TOL = 1e-8
NU_CLIP_TOL = 1e-9

EULER_GAMMA = 0.5772156649015329
I3_CONSTANT = 0.022  # printed value, not derived here


class StateError(CIMError):
    """A reduced density matrix failed trace, hermiticity or positivity checks."""


def _check_density(rho, tol_psd):
    if abs(np.trace(rho) - 1.0) > 1e-12:
        raise StateError(f"trace {np.trace(rho).real:.3e} != 1")
    if np.max(np.abs(rho - rho.conj().T)) > 1e-12:
        raise StateError("density matrix is not Hermitian")
    w = np.linalg.eigvalsh(rho)
    if w[0] < -tol_psd:
        raise StateError(f"negative eigenvalue {w[0]:.3e}")


@dataclass(frozen=True)
class OneSpinState:
    rho: np.ndarray

    def __post_init__(self):
        _check_density(self.rho, 1e-10)

    @classmethod
    def from_bloch(cls, mx=0.0, my=0.0, mz=0.0):
        rho = 0.5 * (PAULI["0"] + mx * PAULI["x"] + my * PAULI["y"] + mz * PAULI["z"])
        return cls(rho)

    def det4(self) -> float:
        """``4 det(rho)``, the one-tangle."""
        return float(4.0 * np.linalg.det(self.rho).real)


@dataclass(frozen=True)
class TwoSpinState:
    """4 x 4 two-spin density matrix with where it came from."""

    rho: np.ndarray
    provenance: str = "analytic"
    coords: tuple = field(default=())

    def __post_init__(self):
        _check_density(self.rho, PSD_TOL)

    @classmethod
    def from_coefficients(cls, p: dict, provenance="analytic", coords=()):
        """``rho = 1/4 sum p_ab s^a (x) s^b``; missing keys are zero, ``p['00'] = 1``."""
        rho = np.zeros((4, 4), dtype=complex)
        coeffs = {"00": 1.0, **p}
        for key, val in coeffs.items():
            if val:
                rho += val * np.kron(PAULI[key[0]], PAULI[key[1]])
        return cls(rho / 4.0, provenance, coords)

    def coefficient(self, a: str, b: str) -> float:
        return float(np.trace(np.kron(PAULI[a], PAULI[b]) @ self.rho).real)


def two_spin_state(r: int, lam: float, beta: float = math.inf) -> TwoSpinState:
    """Reduced state of spins j, j+r in the symmetric (unbroken) state.

    Only parity-even coefficients survive: p_xx, p_yy, p_zz and p_0z = p_z0.
    """
    if r < 1:
        raise DomainError(f"separation must be >= 1, got {r}")
    mz = magnetization_z(lam, beta)
    p = {
        "xx": correlator_x(r, lam, beta),
        "yy": correlator_y(r, lam, beta),
        "zz": correlator_z(r, lam, beta),
        "0z": mz,
        "z0": mz,
    }
    return TwoSpinState.from_coefficients(p, "analytic", (r, lam, beta))


def wootters_eigenvalues(rho: np.ndarray) -> np.ndarray:
    """Eigenvalues of ``rho rho~`` in descending order.

    Computed as the spectrum of the Hermitian ``sqrt(rho) rho~ sqrt(rho)``,
    which shares eigenvalues with ``rho rho~``.
    """
    rho = np.asarray(rho, dtype=complex)
    w, v = np.linalg.eigh(rho)
    sq = (v * np.sqrt(np.clip(w, 0.0, None))) @ v.conj().T
    tilde = _YY @ rho.conj() @ _YY
    gam = np.linalg.eigvalsh(sq @ tilde @ sq)
    return np.clip(gam, 0.0, None)[::-1]


def concurrence(state) -> float:
    """Wootters concurrence ``max(s1 - s2 - s3 - s4, 0)`` with s_i = sqrt(gamma_i)."""
    rho = state.rho if isinstance(state, TwoSpinState) else np.asarray(state)
    s = np.sqrt(wootters_eigenvalues(rho))
    return max(float(s[0] - s[1] - s[2] - s[3]), 0.0)


def bell_diagonal_gammas(rx: float, ry: float) -> np.ndarray:
    """The four ``(1 +- R^x +- R^y)^2 / 16`` in the order (++, +-, -+, --)."""
    return np.array([(1 + rx + ry) ** 2, (1 + rx - ry) ** 2, (1 - rx + ry) ** 2, (1 - rx - ry) ** 2]) / 16.0


def concurrence_profile(lam, beta=math.inf, r_max=12):
    return [concurrence(two_spin_state(r, lam, beta)) for r in range(1, r_max + 1)]


def tangle_thermal(lam: float, beta: float = math.inf, r_max: int = 12) -> float:
    """``4 det rho_1 - sum_r C(r)^2`` in the symmetric ground state."""
    rho1 = OneSpinState.from_bloch(mz=magnetization_z(lam, beta))
    return rho1.det4() - sum(c * c for c in concurrence_profile(lam, beta, r_max))


def tangle_broken(lam: float) -> float:
    """Tangle of the symmetry-broken ground state, ``1 - m_y^2``.

    The single-spin state is ``[I +- m_y Y] / 2``; pairwise concurrences
    vanish, so only the one-tangle contributes.
    """
    if lam == 1.0:
        raise DomainError("tangle of the broken state is singular at lam = 1")
    rho1 = OneSpinState.from_bloch(my=staggered_my(lam))
    return rho1.det4()


@dataclass(frozen=True)
class MajoranaCorrMatrix:
    """Gamma_L with ``<a_j a_l> = delta_jl + i Gamma_jl`` over a block of L sites."""

    gamma: np.ndarray
    lam: float

    @property
    def L(self) -> int:
        return self.gamma.shape[0] // 2

    def leading(self, L: int) -> "MajoranaCorrMatrix":
        """Correlation matrix of the first L sites of this block."""
        if not 1 <= L <= self.L:
            raise DomainError(f"sub-block size must be in [1, {self.L}], got {L}")
        return MajoranaCorrMatrix(self.gamma[: 2 * L, : 2 * L], self.lam)

    def nu(self) -> np.ndarray:
        """The L non-negative values nu_j with eigenvalues +-i nu_j of Gamma."""
        w = np.linalg.eigvalsh(1j * self.gamma)
        return np.sort(w)[::-1][: self.L]


def majorana_corr_matrix(L: int, lam: float) -> MajoranaCorrMatrix:
    """Ground-state block matrix made of 2 x 2 blocks ``[[0, D(j-l)], [-D(l-j), 0]]``."""
    if L < 1:
        raise DomainError(f"block length must be >= 1, got {L}")
    table = KernelTable.build(lam, math.inf, L)
    j = np.arange(L)
    d = np.asarray(table[j[:, None] - j[None, :]])
    g = np.zeros((2 * L, 2 * L))
    g[0::2, 1::2] = d
    g[1::2, 0::2] = -d.T
    return MajoranaCorrMatrix(g, float(lam))


def _binary_entropy_bits(x):
    return -(xlogy(x, x) + xlogy(1.0 - x, 1.0 - x)) / math.log(2.0)


def entropy_from_nu(nu) -> float:
    nu = np.asarray(nu, dtype=float)
    over = max(float(np.max(nu - 1.0, initial=0.0)), float(np.max(-nu, initial=0.0)))
    if over > NU_CLIP_TOL:
        raise StateError(f"Majorana eigenvalue outside [0, 1] by {over:.2e}")
    nu = np.clip(nu, 0.0, 1.0)
    return float(np.sum(_binary_entropy_bits(0.5 * (1.0 + nu))))


def block_entropy(L: int, lam: float) -> float:
    """Von Neumann entropy in bits of L contiguous spins, zero temperature."""
    return entropy_from_nu(majorana_corr_matrix(L, lam).nu())


def block_entropies(L_values, lam: float) -> np.ndarray:
    """Block entropies for several L sharing one kernel table."""
    L_values = [int(x) for x in L_values]
    full = majorana_corr_matrix(max(L_values), lam)
    return np.array([entropy_from_nu(full.leading(L).nu()) for L in L_values])


@dataclass(frozen=True)
class EntropyFit:
    slope: float
    intercept: float
    slope_stderr: float
    intercept_stderr: float

    @property
    def central_charge(self) -> float:
        """``c`` with ``slope = (c + c_bar) / 6`` and ``c = c_bar``."""
        return 3.0 * self.slope


@dataclass(frozen=True)
class EntropyCurve:
    lam: float
    L: np.ndarray
    S: np.ndarray
    fit: EntropyFit | None = None


def central_charge_fit(L_range=range(2, 201), lam: float = 1.0) -> EntropyCurve:
    """Least-squares fit ``S_L = k log2 L + a``."""
    L = np.array(sorted({int(x) for x in L_range}))
    if L.size < 20:
        raise FitError(f"need >= 20 block sizes, got {L.size}")
    if L[0] < 1:
        raise DomainError("block sizes must be >= 1")
    S = block_entropies(L, lam)
    res = linregress(np.log2(L), S)
    fit = EntropyFit(float(res.slope), float(res.intercept), float(res.stderr), float(res.intercept_stderr))
    return EntropyCurve(float(lam), L, S, fit)


def self_dual_intercept(i3: float = I3_CONSTANT) -> float:
    """``(1 + gamma_E + (2 - 6 I3) ln 2 - ln 3) / (2 ln 2)``."""
    ln2 = math.log(2.0)
    return (1.0 + EULER_GAMMA + (2.0 - 6.0 * i3) * ln2 - math.log(3.0)) / (2.0 * ln2)
