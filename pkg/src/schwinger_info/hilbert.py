"""Qubit-chain Hilbert space utilities.

Sites are labeled 1..N (site 1 = most significant bit of the stored
configuration integer; bit value 1 means spin up, sigma^z = +1).
Configurations are enumerated either over the full 2^N space or restricted
to a fixed total-magnetization sector sum_k sigma^z_k, which the Schwinger
Hamiltonian conserves.

Contiguous windows of l+1 sites centered at n are labeled (n, l):
n is integer for even l and half-integer for odd l.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

import numpy as np


class InvalidSectorError(ValueError):
    """Sector value incompatible with the chain or a requested configuration."""


class SectorEscapeError(ValueError):
    """Operator maps a sector-restricted state out of its sector."""


class WindowError(ValueError):
    """Contiguous window (n, l) does not fit inside the chain."""


PAULI_OPS = ("+", "-", "z", "x", "y")


def window_sites(n: float, l: int) -> tuple[int, int]:
    """Return (first, last) site of the window C^l_n; validates the labeling."""
    if l < 0:
        raise WindowError(f"negative scale l={l}")
    two_n = 2.0 * n
    if abs(two_n - round(two_n)) > 1e-9:
        raise WindowError(f"n={n} is neither integer nor half-integer")
    if (l % 2 == 0) != (abs(n - round(n)) < 1e-9):
        raise WindowError(f"label (n={n}, l={l}) violates the parity convention")
    lo = int(round(n - l / 2))
    hi = int(round(n + l / 2))
    return lo, hi


@dataclass(frozen=True)
class SectorBasis:
    """Ordered basis of N-site configurations, optionally sector-restricted.

    `states` is sorted ascending, which with the site-1-MSB convention is
    lexicographic in (site 1, site 2, ...).
    """

    N: int
    sector: int | None
    states: np.ndarray
    index_map: dict[int, int] = field(repr=False)

    @property
    def dim(self) -> int:
        return len(self.states)

    def index_of(self, config: int) -> int:
        return self.index_map[config]

    def site_bit(self, site: int) -> int:
        """Bit position of a 1-based site label."""
        if not 1 <= site <= self.N:
            raise ValueError(f"site {site} outside 1..{self.N}")
        return self.N - site

    def sz_values(self, config: int) -> np.ndarray:
        """sigma^z eigenvalues (+/-1) at sites 1..N for one configuration."""
        bits = (config >> np.arange(self.N - 1, -1, -1)) & 1
        return 2 * bits - 1

    def config_string(self, config: int) -> str:
        return "".join("↑" if b else "↓" for b in
                       (config >> np.arange(self.N - 1, -1, -1)) & 1)


def build_sector_basis(N: int, sector: int | None = None) -> SectorBasis:
    """Enumerate configurations, restricted to fixed total sigma^z if given."""
    if not 2 <= N <= 24:
        raise ValueError(f"N={N} outside supported range 2..24")
    if sector is None:
        states = np.arange(2**N, dtype=np.int64)
    else:
        if abs(sector) > N or (sector - N) % 2 != 0:
            raise InvalidSectorError(
                f"sector {sector} incompatible with N={N} (need |s|<=N, s=N mod 2)")
        n_up = (N + sector) // 2
        states = np.sort(np.fromiter(
            (sum(1 << p for p in pos) for pos in combinations(range(N), n_up)),
            dtype=np.int64, count=_binom(N, n_up)))
    index_map = {int(c): i for i, c in enumerate(states)}
    return SectorBasis(N=N, sector=sector, states=states, index_map=index_map)


def _binom(n: int, k: int) -> int:
    from math import comb
    return comb(n, k)


class StateVector:
    """Normalized complex amplitude vector over a SectorBasis."""

    def __init__(self, basis: SectorBasis, amplitudes: np.ndarray,
                 normalized: bool = True):
        amplitudes = np.asarray(amplitudes, dtype=np.complex128)
        if amplitudes.shape != (basis.dim,):
            raise ValueError(
                f"amplitude vector has shape {amplitudes.shape}, basis dim {basis.dim}")
        if normalized:
            nrm = np.linalg.norm(amplitudes)
            if abs(nrm - 1.0) > 1e-12:
                raise ValueError(f"state norm {nrm} deviates from 1 beyond 1e-12")
        self.basis = basis
        self.amplitudes = amplitudes
        self.normalized = normalized
        self._dense: np.ndarray | None = None

    @property
    def N(self) -> int:
        return self.basis.N

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def normalize(self) -> "StateVector":
        nrm = self.norm()
        if nrm == 0.0:
            raise ValueError("cannot normalize the zero vector")
        return StateVector(self.basis, self.amplitudes / nrm)

    def overlap(self, other: "StateVector") -> complex:
        return complex(np.vdot(self.amplitudes, other.amplitudes))

    def to_dense(self) -> np.ndarray:
        """Amplitudes scattered into the full 2^N space (cached, read-only)."""
        if self._dense is None:
            if self.basis.sector is None:
                dense = self.amplitudes
            else:
                dense = np.zeros(2**self.N, dtype=np.complex128)
                dense[self.basis.states] = self.amplitudes
            dense = dense.copy()
            dense.flags.writeable = False
            self._dense = dense
        return self._dense


@dataclass(frozen=True)
class DensityMatrix:
    """Reduced density matrix of a contiguous window of sites."""

    sites: tuple[int, ...]
    matrix: np.ndarray

    def __post_init__(self):
        m = self.matrix
        d = 2 ** len(self.sites)
        if m.shape != (d, d):
            raise ValueError(f"matrix shape {m.shape} does not match {len(self.sites)} sites")
        if np.max(np.abs(m - m.conj().T)) > 1e-12:
            raise ValueError("density matrix not Hermitian to 1e-12")
        if abs(np.trace(m).real - 1.0) > 1e-12:
            raise ValueError("density matrix trace deviates from 1 beyond 1e-12")

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def eigenvalues(self) -> np.ndarray:
        return np.linalg.eigvalsh(self.matrix)


def neel_state(basis: SectorBasis) -> StateVector:
    """Staggered product state with sigma^z_k = (-1)^(k+1): up-down-up-down..."""
    config = 0
    for site in range(1, basis.N + 1):
        if site % 2 == 1:
            config |= 1 << basis.site_bit(site)
    if config not in basis.index_map:
        raise InvalidSectorError(
            "staggered configuration absent from this sector")
    amps = np.zeros(basis.dim, dtype=np.complex128)
    amps[basis.index_of(config)] = 1.0
    return StateVector(basis, amps)


def _apply_single(op: str, config: int, mask: int) -> tuple[complex, int] | None:
    """Action of one Pauli-type operator on a computational configuration.

    Returns (coefficient, new config), or None if annihilated. sigma^x and
    sigma^y are resolved into the raising/lowering branch that survives.
    """
    up = bool(config & mask)
    if op == "z":
        return (1.0 if up else -1.0), config
    if op == "+":
        return None if up else (1.0, config | mask)
    if op == "-":
        return (1.0, config & ~mask) if up else None
    if op == "x":
        return 1.0, config ^ mask
    if op == "y":
        # sigma^y = -i sigma^+ + i sigma^-
        return (1j if up else -1j), config ^ mask
    raise ValueError(f"unknown operator {op!r}; expected one of {PAULI_OPS}")


def apply_pauli_string(state: StateVector,
                       ops: list[tuple[int, str]]) -> StateVector:
    """Apply a product of single-site operators; result is unnormalized.

    `ops` is a list of (site, op) with op in {'+', '-', 'z', 'x', 'y'};
    the rightmost entry acts first. Raises SectorEscapeError if a nonzero
    amplitude would leave a sector-restricted basis.
    """
    basis = state.basis
    out = np.zeros(basis.dim, dtype=np.complex128)
    masks = []
    for site, op in ops:
        if op not in PAULI_OPS:
            raise ValueError(f"unknown operator {op!r}")
        masks.append((1 << basis.site_bit(site), op))
    for idx, amp in enumerate(state.amplitudes):
        if amp == 0.0:
            continue
        terms = [(amp, int(basis.states[idx]))]
        for mask, op in reversed(masks):
            new_terms = []
            for coeff, config in terms:
                res = _apply_single(op, config, mask)
                if res is not None:
                    new_terms.append((coeff * res[0], res[1]))
            terms = new_terms
        for coeff, config in terms:
            j = basis.index_map.get(config)
            if j is None:
                raise SectorEscapeError(
                    f"operator string maps configuration out of sector "
                    f"{basis.sector} (target {config:0{basis.N}b})")
            out[j] += coeff
    return StateVector(basis, out, normalized=False)


def _dense_blocks(state: StateVector, lo: int, hi: int) -> np.ndarray:
    """Full state reshaped to (left, window, right) tensor for sites lo..hi."""
    N = state.N
    if not (1 <= lo and hi <= N):
        raise WindowError(f"window {lo}..{hi} outside 1..{N}")
    w = hi - lo + 1
    return state.to_dense().reshape(2 ** (lo - 1), 2**w, 2 ** (N - hi))


def partial_trace_contiguous(state: StateVector, n: float, l: int) -> DensityMatrix:
    """Reduced density matrix of the window C^l_n of l+1 contiguous sites."""
    lo, hi = window_sites(n, l)
    psi = _dense_blocks(state, lo, hi)
    rho = np.einsum("awb,avb->wv", psi, psi.conj())
    return DensityMatrix(sites=tuple(range(lo, hi + 1)), matrix=rho)


def window_schmidt_values(state: StateVector, lo: int, hi: int) -> np.ndarray:
    """Squared singular values of the window/complement bipartition.

    These are the eigenvalues of the window's reduced density matrix
    (for a pure global state) without forming the matrix itself.
    """
    psi = _dense_blocks(state, lo, hi)
    w = psi.shape[1]
    mat = np.ascontiguousarray(psi.transpose(1, 0, 2)).reshape(w, -1)
    if mat.shape[0] <= mat.shape[1]:
        s = np.linalg.svd(mat, compute_uv=False)
    else:
        s = np.linalg.svd(mat.T, compute_uv=False)
    return s**2


def save_state(state: StateVector, path) -> None:
    """Write a JSON snapshot: header plus (re, im) amplitude pairs in basis order."""
    import json

    payload = {
        "N": state.N,
        "sector": state.basis.sector,
        "bit_order": "site1-msb",
        "dim": state.basis.dim,
        "amplitudes": [[float(a.real), float(a.imag)] for a in state.amplitudes],
    }
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(payload, fh)


def load_state(path) -> StateVector:
    """Read a snapshot written by `save_state`; validates header and length."""
    import json

    with open(path, encoding="utf-8") as fh:
        payload = json.load(fh)
    for key in ("N", "sector", "bit_order", "dim", "amplitudes"):
        if key not in payload:
            raise ValueError(f"state file missing field {key!r}")
    if payload["bit_order"] != "site1-msb":
        raise ValueError(f"unsupported bit order {payload['bit_order']!r}")
    basis = build_sector_basis(payload["N"], payload["sector"])
    if payload["dim"] != basis.dim or len(payload["amplitudes"]) != basis.dim:
        raise ValueError("amplitude count does not match basis dimension")
    amps = np.array([complex(re, im) for re, im in payload["amplitudes"]])
    return StateVector(basis, amps)
