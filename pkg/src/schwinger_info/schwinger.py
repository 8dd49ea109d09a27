"""Lattice Schwinger model as a spin-1/2 chain with the gauge field integrated out.

Working in lattice units (energies in 1/a, times in a) the Hamiltonian is

    H = (ga)^2/2 * sum_{n=1}^{N-1} [L(n) - Q * w(n,t)]^2
        + ma * sum_{n=1}^{N} (-1)^n sigma^z_n / 2
        + 1/2 * sum_{n=1}^{N-1} (sigma^+_n sigma^-_{n+1} + h.c.)

with the link electric field L(n) = 1/2 sum_{k<=n} (sigma^z_k + (-1)^k)
(open boundaries, vanishing field left of the chain). w(n,t) marks the links
between two external charges of magnitude Q that recede along light cones
with speed u and may be removed at a fixed time.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
import scipy.sparse as sp

from .hilbert import SectorBasis, StateVector, WindowError


@dataclass(frozen=True)
class ModelParams:
    """Dimensionless couplings: site count N, g*a > 0, m*a >= 0."""

    N: int
    ga: float
    ma: float

    def __post_init__(self):
        if self.N < 2:
            raise ValueError(f"N={self.N} < 2")
        if self.ga <= 0:
            raise ValueError(f"ga={self.ga} must be positive")
        if self.ma < 0:
            raise ValueError(f"ma={self.ma} must be nonnegative")


@dataclass(frozen=True)
class ChargeBackground:
    """External charge pair of magnitude Q on links, expanding at speed u.

    The electric field is shifted by -Q on the links between the
    instantaneous charge positions: links center_left - floor(u t) through
    center_right + floor(u t), inclusive. If t_remove is set, the shift is
    dropped for t >= t_remove.
    """

    Q: float
    u: float
    center_left: int
    center_right: int
    t_remove: float | None = None

    def __post_init__(self):
        if self.Q < 0:
            raise ValueError("Q must be >= 0")
        if self.u < 0:
            raise ValueError("u must be >= 0")
        if self.center_left >= self.center_right:
            raise ValueError("center_left must be < center_right")

    def window_links(self, t: float) -> tuple[int, int] | None:
        """Inclusive link range carrying the -Q shift at time t, or None.

        The caller clamps the expansion at the lattice edges: charges that
        reach the end of the chain stop there.
        """
        if self.Q == 0.0:
            return None
        if self.t_remove is not None and t >= self.t_remove:
            return None
        spread = math.floor(self.u * t)
        return self.center_left - spread, self.center_right + spread

    def hop_times(self, t_end: float, N: int | None = None) -> list[float]:
        """Times in (0, t_end) at which the charge window grows or is removed.

        With N given, expansion steps after both charges have reached the
        lattice edges are dropped (the clamped window no longer changes).
        """
        times = []
        if self.u > 0 and self.Q > 0:
            max_spread = None
            if N is not None:
                max_spread = max(self.center_left - 1,
                                 (N - 1) - self.center_right)
            k = 1
            while k / self.u < t_end:
                if max_spread is not None and k > max_spread:
                    break
                t = k / self.u
                if self.t_remove is None or t < self.t_remove:
                    times.append(t)
                k += 1
        if self.t_remove is not None and 0 < self.t_remove < t_end:
            times.append(self.t_remove)
        return sorted(times)


@dataclass(frozen=True)
class SparseOperator:
    """Hermitian operator in compressed sparse form over a SectorBasis."""

    basis: SectorBasis
    matrix: sp.csr_matrix

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def apply(self, state: StateVector) -> np.ndarray:
        return self.matrix @ state.amplitudes

    def expectation(self, state: StateVector) -> float:
        return float(np.vdot(state.amplitudes, self.matrix @ state.amplitudes).real)

    def dense(self) -> np.ndarray:
        return self.matrix.toarray()


def _sz_matrix(basis: SectorBasis) -> np.ndarray:
    """(dim, N) array of sigma^z eigenvalues for every basis configuration."""
    bits = (basis.states[:, None] >> np.arange(basis.N - 1, -1, -1)[None, :]) & 1
    return (2 * bits - 1).astype(np.float64)


def _link_fields(basis: SectorBasis) -> np.ndarray:
    """(dim, N-1) array of L(n) for every configuration (diagonal operator)."""
    sz = _sz_matrix(basis)
    stagger = (-1.0) ** np.arange(1, basis.N + 1)
    return 0.5 * np.cumsum(sz + stagger[None, :], axis=1)[:, :-1]


def _background_shift(basis: SectorBasis, background: ChargeBackground | None,
                      t: float) -> np.ndarray:
    """Per-link -Q shift of the electric field at time t (length N-1)."""
    shift = np.zeros(basis.N - 1)
    if background is None:
        return shift
    window = background.window_links(t)
    if window is None:
        return shift
    if not (1 <= background.center_left
            and background.center_right <= basis.N - 1):
        raise WindowError(
            f"charge insertion links {background.center_left}.."
            f"{background.center_right} outside 1..{basis.N - 1}")
    lo, hi = window
    # charges stop once they reach the chain ends
    shift[max(lo, 1) - 1:min(hi, basis.N - 1)] = -background.Q
    return shift


def build_hamiltonian(params: ModelParams,
                      background: ChargeBackground | None = None,
                      t: float = 0.0,
                      basis: SectorBasis | None = None) -> SparseOperator:
    """Assemble H at time t (the background window is frozen at that time)."""
    from .hilbert import build_sector_basis

    if t < 0:
        raise ValueError("t must be >= 0")
    if basis is None:
        basis = build_sector_basis(params.N, 0 if params.N % 2 == 0 else None)
    if basis.N != params.N:
        raise ValueError("basis size does not match params.N")

    sz = _sz_matrix(basis)
    L = _link_fields(basis) + _background_shift(basis, background, t)[None, :]

    diag = 0.5 * params.ga**2 * np.sum(L**2, axis=1)
    stagger = (-1.0) ** np.arange(1, basis.N + 1)
    diag += 0.5 * params.ma * sz @ stagger

    rows = [np.arange(basis.dim)]
    cols = [np.arange(basis.dim)]
    vals = [diag]
    # hopping: exchange an adjacent up-down pair with amplitude 1/2
    states = basis.states
    for n in range(1, basis.N):
        mask = (1 << basis.site_bit(n)) | (1 << basis.site_bit(n + 1))
        b1 = (states >> basis.site_bit(n)) & 1
        b2 = (states >> basis.site_bit(n + 1)) & 1
        movable = np.nonzero(b1 != b2)[0]
        flipped = states[movable] ^ mask
        target = np.minimum(np.searchsorted(states, flipped), basis.dim - 1)
        ok = states[target] == flipped
        rows.append(movable[ok])
        cols.append(target[ok])
        vals.append(np.full(int(np.sum(ok)), 0.5))

    matrix = sp.csr_matrix(
        (np.concatenate(vals).astype(np.complex128),
         (np.concatenate(rows), np.concatenate(cols))),
        shape=(basis.dim, basis.dim))
    return SparseOperator(basis=basis, matrix=matrix)


def electric_field_profile(state: StateVector,
                           background: ChargeBackground | None = None,
                           t: float = 0.0) -> np.ndarray:
    """Expectation of the physical link field L(n), n = 1..N-1 (with -Q shift)."""
    if abs(state.norm() - 1.0) > 1e-10:
        raise ValueError("state must be normalized")
    basis = state.basis
    L = _link_fields(basis)
    prob = np.abs(state.amplitudes) ** 2
    return prob @ L + _background_shift(basis, background, t)


def pseudo_momentum_operator(basis: SectorBasis) -> SparseOperator:
    """P = -i sum_n (sigma^-_n sigma^z_{n+1} sigma^+_{n+2} - h.c.)."""
    if basis.N < 3:
        raise ValueError(f"pseudo momentum needs N >= 3, got N={basis.N}")
    states = basis.states
    rows, cols, vals = [], [], []
    for n in range(1, basis.N - 1):
        bit_a = basis.site_bit(n)
        bit_m = basis.site_bit(n + 1)
        bit_b = basis.site_bit(n + 2)
        up_a = (states >> bit_a) & 1
        up_b = (states >> bit_b) & 1
        sz_m = 2 * ((states >> bit_m) & 1) - 1
        # sigma^-_n sigma^+_{n+2}: site n up -> down, site n+2 down -> up
        act = np.nonzero((up_a == 1) & (up_b == 0))[0]
        flipped = states[act] ^ ((1 << bit_a) | (1 << bit_b))
        target = np.minimum(np.searchsorted(states, flipped), basis.dim - 1)
        ok = states[target] == flipped
        act, target = act[ok], target[ok]
        rows.append(target)
        cols.append(act)
        vals.append(-1j * sz_m[act].astype(np.complex128))
        # Hermitian conjugate
        rows.append(act)
        cols.append(target)
        vals.append(1j * sz_m[act].astype(np.complex128))
    matrix = sp.csr_matrix(
        (np.concatenate(vals), (np.concatenate(rows), np.concatenate(cols))),
        shape=(basis.dim, basis.dim))
    return SparseOperator(basis=basis, matrix=matrix)


def critical_field(params: ModelParams) -> float:
    """Semi-classical string-breaking threshold L_c = m^2 / g^2."""
    return (params.ma / params.ga) ** 2


def continuum_vector_mass(g: float) -> float:
    """Strong-coupling vector boson mass m_V = g / sqrt(pi)."""
    if g <= 0:
        raise ValueError("g must be positive")
    return g / math.sqrt(math.pi)


def continuum_scalar_mass(g: float) -> float:
    """Scalar bound state of two vector bosons: twice the vector mass."""
    return 2.0 * continuum_vector_mass(g)
