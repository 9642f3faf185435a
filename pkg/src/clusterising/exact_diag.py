"""Brute-force exact diagonalization of finite cluster-Ising chains.

Basis states are integers; site ``j`` (0-based) is bit ``N-1-j`` so that
the ordering matches ``kron(site_0, site_1, ...)``. Bit 0 is spin up
(Z = +1).
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass, field

import numpy as np
import scipy.linalg as la
import scipy.sparse as sps
import scipy.sparse.linalg as spla
from scipy.optimize import minimize_scalar
from scipy.stats import linregress

from .entanglement import concurrence
from .errors import DomainError, EigensolverError, FitError
from .model_core import Boundary, ModelParams, majorana_coupling_matrix

N_MIN, N_MAX = 2, 12
DENSE_MAX = 10
DEGENERACY_RTOL = 1e-8


def _apply_pauli_string(n, ops, states):
    """Act with ``prod_j ops[j]`` on basis states.

    ``ops`` is a sequence of (site, 'x'|'y'|'z'), applied right to left.
    Returns (new_states, amplitudes).
    """
    new = states.copy()
    amp = np.ones(states.shape, dtype=complex)
    for site, p in reversed(ops):
        bit = n - 1 - site
        occ = (new >> bit) & 1
        if p == "z":
            amp *= 1 - 2 * occ
        elif p == "x":
            new = new ^ (1 << bit)
        elif p == "y":
            # Y|up> = i|down>, Y|down> = -i|up>
            amp *= np.where(occ == 0, 1j, -1j)
            new = new ^ (1 << bit)
        else:
            raise ValueError(f"unknown Pauli {p!r}")
    return new, amp


def _sparse_from_terms(n, terms):
    dim = 1 << n
    states = np.arange(dim, dtype=np.int64)
    rows, cols, vals = [], [], []
    for coeff, ops in terms:
        new, amp = _apply_pauli_string(n, ops, states)
        rows.append(new)
        cols.append(states)
        vals.append(coeff * amp)
    m = sps.csr_matrix(
        (np.concatenate(vals), (np.concatenate(rows), np.concatenate(cols))), shape=(dim, dim)
    )
    m.sum_duplicates()
    m.eliminate_zeros()
    return m


def hamiltonian_terms(params: ModelParams):
    """Pauli-string terms ``(coefficient, ((site, pauli), ...))`` of the chain."""
    n, lam, h = params.n_sites, params.lam, params.h_stagger
    pbc = params.boundary is Boundary.PERIODIC
    terms = []
    for j in range(n):
        if pbc or 1 <= j <= n - 2:
            terms.append((-1.0, (((j - 1) % n, "x"), (j, "z"), ((j + 1) % n, "x"))))
    if lam:
        for j in range(n if pbc else n - 1):
            terms.append((lam, ((j, "y"), ((j + 1) % n, "y"))))
    if h:
        # h * sum_j (-1)^j Y_j with sites counted from 1
        for j in range(n):
            terms.append((h * (-1) ** (j + 1), ((j, "y"),)))
    return terms


@dataclass(frozen=True)
class SpinHamiltonian:
    params: ModelParams
    matrix: sps.csr_matrix = field(repr=False)

    @property
    def n_sites(self) -> int:
        return self.params.n_sites

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def parity_diagonal(self) -> np.ndarray:
        """Diagonal of ``P = prod_j Z_j`` in the computational basis."""
        states = np.arange(self.dim)
        pop = np.array([bin(s).count("1") for s in states])
        return 1 - 2 * (pop & 1)

    def matvec(self, v):
        return self.matrix @ v


@functools.lru_cache(maxsize=64)
def _term_matrix(n: int, boundary: Boundary, kind: str) -> sps.csr_matrix:
    # the three pieces of H with unit couplings; cached per (N, boundary)
    params = ModelParams(1.0, math.inf, n, boundary, 1.0)
    terms = [t for t in hamiltonian_terms(params) if _term_kind(t) == kind]
    m = _sparse_from_terms(n, terms)
    if kind != "field":
        m = m.real.tocsr()
    return m


def _term_kind(term):
    ops = term[1]
    if len(ops) == 3:
        return "cluster"
    return "ising" if len(ops) == 2 else "field"


def build_hamiltonian(params: ModelParams) -> SpinHamiltonian:
    """Sparse 2^N x 2^N Hamiltonian with optional staggered y-field."""
    if not params.is_finite or not N_MIN <= params.n_sites <= N_MAX:
        raise DomainError(f"exact diagonalization supports {N_MIN} <= N <= {N_MAX}, got {params.n_sites}")
    n, b = params.n_sites, params.boundary
    m = _term_matrix(n, b, "cluster")
    if params.lam:
        m = m + params.lam * _term_matrix(n, b, "ising")
    if params.h_stagger:
        m = m + params.h_stagger * _term_matrix(n, b, "field")
    return SpinHamiltonian(params, m.tocsr(copy=True))


@functools.lru_cache(maxsize=512)
def pauli_operator(n: int, ops: tuple) -> sps.csr_matrix:
    """Sparse matrix of a Pauli string ((site, pauli), ...) on N sites."""
    states = np.arange(1 << n, dtype=np.int64)
    new, amp = _apply_pauli_string(n, ops, states)
    return sps.csr_matrix((amp, (new, states)), shape=(1 << n, 1 << n))


@dataclass
class GroundManifold:
    """Lowest eigenpairs and the equal mixture over the (near-)degenerate ground set.

    ``states`` has the ground set as its columns; ``weights`` are equal.
    ``expected_degeneracy`` is 2 for a periodic chain without field, and
    ``degeneracy_deviation`` records when the count differs.
    """

    n_sites: int
    energies: np.ndarray
    states: np.ndarray
    tolerance: float
    expected_degeneracy: int | None = None

    @property
    def degeneracy(self) -> int:
        return self.states.shape[1]

    @property
    def weights(self) -> np.ndarray:
        return np.full(self.degeneracy, 1.0 / self.degeneracy)

    @property
    def ground_energy(self) -> float:
        return float(self.energies[0])

    @property
    def degeneracy_deviation(self) -> bool:
        return self.expected_degeneracy is not None and self.degeneracy != self.expected_degeneracy

    def thermal_state(self) -> np.ndarray:
        """Full density matrix ``rho_0``; only sensible for small N."""
        v = self.states
        return (v * self.weights) @ v.conj().T

    def expectation(self, ops) -> float:
        """``Tr(rho_0 O)`` for a Pauli string given as ((site, pauli), ...)."""
        op = pauli_operator(self.n_sites, tuple(ops))
        return float(sum(w * np.vdot(psi, op @ psi).real for w, psi in zip(self.weights, self.states.T)))

    def pure(self, index: int = 0) -> "GroundManifold":
        """Manifold restricted to a single state of the ground set."""
        return GroundManifold(self.n_sites, self.energies, self.states[:, index:index + 1], self.tolerance)


def ground_manifold(ham: SpinHamiltonian, tol: float = DEGENERACY_RTOL, n_levels: int = 6) -> GroundManifold:
    """Lowest eigenpairs; dense for N <= 10, Lanczos on the sparse operator above."""
    n = ham.n_sites
    k = min(n_levels, ham.dim - 1)
    if n <= DENSE_MAX:
        w, v = la.eigh(ham.matrix.toarray(), subset_by_index=[0, k - 1])
    else:
        op = spla.LinearOperator(ham.matrix.shape, matvec=ham.matvec, dtype=ham.matrix.dtype)
        rng = np.random.default_rng(12345)
        v0 = rng.standard_normal(ham.dim).astype(ham.matrix.dtype)
        try:
            w, v = spla.eigsh(op, k=k, which="SA", tol=1e-13, v0=v0, maxiter=20000)
        except spla.ArpackNoConvergence as exc:
            raise EigensolverError(f"Lanczos failed for N={n}") from exc
        order = np.argsort(w)
        w, v = w[order], v[:, order]
    scale = max(1.0, abs(w[0]))
    ground = np.flatnonzero(w - w[0] <= tol * scale)
    params = ham.params
    expected = 2 if params.boundary is Boundary.PERIODIC and not params.h_stagger else None
    return GroundManifold(n, w, v[:, ground], tol, expected)


def solve(n_sites: int, lam: float, h: float = 0.0, boundary=Boundary.PERIODIC, tol=DEGENERACY_RTOL) -> GroundManifold:
    params = ModelParams(lam, math.inf, n_sites, boundary, h)
    return ground_manifold(build_hamiltonian(params), tol)


def ed_correlator(manifold: GroundManifold, alpha: str, j: int, l: int, translation_average: bool = True) -> float:
    """``<s^a_j s^a_l>`` on rho_0 (sites 1-based, j < l)."""
    n = manifold.n_sites
    if not 1 <= j < l <= n:
        raise DomainError(f"need 1 <= j < l <= N, got j={j}, l={l}")
    if alpha not in ("x", "y", "z"):
        raise DomainError(f"unknown component {alpha!r}")
    shifts = range(n) if translation_average else range(1)
    vals = [
        manifold.expectation((((j - 1 + s) % n, alpha), ((l - 1 + s) % n, alpha)))
        for s in shifts
    ]
    return float(np.mean(vals))


def ed_magnetization(manifold: GroundManifold, alpha: str = "z", staggered: bool = False) -> float:
    n = manifold.n_sites
    sign = [(-1) ** (j + 1) if staggered else 1 for j in range(n)]
    return float(np.mean([s * manifold.expectation(((j, alpha),)) for j, s in enumerate(sign)]))


def ed_magnetization_z(manifold: GroundManifold) -> float:
    """Site-averaged ``<Z>`` on rho_0."""
    return ed_magnetization(manifold, "z")


def reduced_density_matrix(manifold: GroundManifold, sites) -> np.ndarray:
    """Partial trace of rho_0 onto ``sites`` (0-based, in the given order)."""
    n = manifold.n_sites
    sites = list(sites)
    rest = [s for s in range(n) if s not in sites]
    dim_a = 1 << len(sites)
    rho = np.zeros((dim_a, dim_a), dtype=complex)
    for w, psi in zip(manifold.weights, manifold.states.T):
        m = psi.reshape((2,) * n).transpose(sites + rest).reshape(dim_a, -1)
        rho += w * (m @ m.conj().T)
    return rho


def ed_concurrence(manifold: GroundManifold, j: int, l: int) -> float:
    """Wootters concurrence of spins j, l (1-based) in rho_0."""
    if j == l:
        raise DomainError("concurrence needs two distinct sites")
    return concurrence(reduced_density_matrix(manifold, [j - 1, l - 1]))


def ed_block_entropy(manifold: GroundManifold, L: int) -> float:
    """Von Neumann entropy (bits) of the first L sites."""
    if not 1 <= L < manifold.n_sites:
        raise DomainError(f"block length must satisfy 1 <= L < N, got {L}")
    w = np.linalg.eigvalsh(reduced_density_matrix(manifold, range(L)))
    w = w[w > 1e-15]
    return float(-np.sum(w * np.log2(w)))


def ring_distance(j: int, l: int, n: int) -> int:
    d = abs(j - l) % n
    return min(d, n - d)


# ---------------------------------------------------------------------------
# free-fermion comparison with parity-sector bookkeeping
# ---------------------------------------------------------------------------

def pfaffian(a: np.ndarray) -> float:
    """Pfaffian of a real antisymmetric matrix (Parlett-Reid elimination)."""
    a = np.array(a, dtype=float)
    n = a.shape[0]
    if n % 2:
        return 0.0
    pf = 1.0
    for k in range(0, n - 1, 2):
        kp = k + 1 + int(np.argmax(np.abs(a[k + 1:, k])))
        if kp != k + 1:
            a[[k + 1, kp], :] = a[[kp, k + 1], :]
            a[:, [k + 1, kp]] = a[:, [kp, k + 1]]
            pf = -pf
        if a[k + 1, k] == 0.0:
            return 0.0
        pf *= a[k, k + 1]
        if k + 2 < n:
            tau = a[k, k + 2:] / a[k, k + 1]
            a[k + 2:, k + 2:] += np.outer(tau, a[k + 2:, k + 1]) - np.outer(a[k + 2:, k + 1], tau)
    return pf


@dataclass(frozen=True)
class SectorEnergy:
    parity: int
    vacuum_energy: float
    vacuum_parity: int
    min_excitation: float
    energy: float


def free_fermion_sector_energies(n_sites: int, lam: float) -> tuple[SectorEnergy, SectorEnergy]:
    """Lowest energy in each spin-parity sector from the quadratic fermion form.

    In the sector with ``P = prod Z = +-1`` wrapping bonds carry ``-P``
    (antiperiodic / periodic fermions). If the quasiparticle vacuum has the
    wrong parity, the lowest single-quasiparticle energy is added.
    """
    if n_sites < 3:
        raise DomainError("free-fermion sectors need N >= 3")
    out = []
    for parity in (1, -1):
        a = majorana_coupling_matrix(n_sites, lam, Boundary.PERIODIC, wrap_sign=-parity)
        eps = np.sort(np.abs(np.linalg.eigvalsh(1j * a)))[::2]
        e_vac = -0.5 * float(np.sum(eps))
        pf = pfaffian(a)
        vac_parity = int(np.sign(pf)) if abs(pf) > 1e-12 else 0
        gap = float(eps[0])
        # vac_parity == 0 means a zero mode: both parities are degenerate
        energy = e_vac if vac_parity in (0, parity) else e_vac + gap
        out.append(SectorEnergy(parity, e_vac, vac_parity, gap, energy))
    return out[0], out[1]


def free_fermion_ground_energy(n_sites: int, lam: float) -> float:
    even, odd = free_fermion_sector_energies(n_sites, lam)
    return min(even.energy, odd.energy)


# ---------------------------------------------------------------------------
# finite-size scaling of observables that vanish in the infinite chain
# ---------------------------------------------------------------------------

SPURIOUS = ("x", "z", "mz")


def spurious_observable(manifold: GroundManifold, which: str) -> float:
    if which == "mz":
        return ed_magnetization_z(manifold)
    return ed_correlator(manifold, which, 1, 2)


def spurious_peak(n_sites: int, which: str = "mz", lam_grid=None, refine: bool = True) -> tuple[float, float]:
    """``(lam*, max |O|)`` of a spurious observable over the coupling axis.

    A coarse grid brackets the maximum, then a bounded scalar search
    polishes it.
    """
    if lam_grid is None:
        lam_grid = np.linspace(0.0, 3.0, 31)
    lam_grid = np.asarray(lam_grid, float)

    def mag(lam):
        return abs(spurious_observable(solve(n_sites, float(lam)), which))

    vals = [mag(lam) for lam in lam_grid]
    i = int(np.argmax(vals))
    best_lam, best = float(lam_grid[i]), float(vals[i])
    if refine and lam_grid.size > 2:
        lo = lam_grid[max(i - 1, 0)]
        hi = lam_grid[min(i + 1, lam_grid.size - 1)]
        res = minimize_scalar(lambda x: -mag(x), bounds=(lo, hi), method="bounded",
                              options={"xatol": 1e-6})
        if -res.fun > best:
            best_lam, best = float(res.x), float(-res.fun)
    return best_lam, best


@dataclass(frozen=True)
class PowerLawFit:
    exponent: float
    prefactor: float
    exponent_stderr: float
    prefactor_stderr: float
    sizes: tuple
    peaks: tuple


def finite_size_scaling(peaks, sizes=(4, 8, 10)) -> PowerLawFit:
    """Fit ``peak = A N^b`` by least squares in log-log.

    ``peaks`` is a sequence matching ``sizes`` (or a mapping N -> peak).
    """
    if isinstance(peaks, dict):
        sizes = tuple(sorted(peaks))
        peaks = [peaks[n] for n in sizes]
    sizes = np.asarray(sizes, float)
    peaks = np.asarray(peaks, float)
    if sizes.size < 2 or sizes.size != peaks.size:
        raise FitError("need at least two (N, peak) pairs")
    if np.any(peaks <= 0):
        raise FitError("peaks must be positive for a power-law fit")
    res = linregress(np.log(sizes), np.log(peaks))
    a = math.exp(res.intercept)
    return PowerLawFit(float(res.slope), a, float(res.stderr), a * float(res.intercept_stderr),
                       tuple(int(s) for s in sizes), tuple(float(p) for p in peaks))
