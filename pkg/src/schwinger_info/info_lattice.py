"""Spatial- and scale-resolved decomposition of correlations in a pure state.

Every contiguous window (n, l) of l+1 sites carries a total information
I(rho^l_n) = log2(dim) - S(rho^l_n) in bits. Local information

    i(n, l) = I(rho^l_n) - I(rho^{l-1}_{n-1/2}) - I(rho^{l-1}_{n+1/2})
              + I(rho^{l-2}_n)

(empty windows contribute zero) is the conditional mutual information
between the two overlapping sub-windows; it is nonnegative by strong
subadditivity and sums to I(rho^l_n) over all labels inside a window.
For a pure chain the lattice total is N bits and is conserved under
unitary evolution.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .hilbert import (DensityMatrix, StateVector, WindowError, window_sites,
                      window_schmidt_values)


class LabelError(ValueError):
    """Invalid information-lattice label (n, l)."""


class InvalidDensityError(ValueError):
    """Density-matrix spectrum too far from positive semidefinite."""


class NoPeakError(ValueError):
    """Scale profile has no positive weight above the exclusion threshold."""


def entropy_from_spectrum(lams: np.ndarray) -> float:
    """Von Neumann entropy in bits; eigenvalues in [-1e-10, 0] are clamped."""
    lams = np.asarray(lams, dtype=np.float64)
    if np.any(lams < -1e-8):
        raise InvalidDensityError(
            f"eigenvalue {lams.min()} below -1e-8")
    lams = np.clip(lams, 0.0, None)
    nz = lams[lams > 0.0]
    return float(-np.sum(nz * np.log2(nz)))


def von_neumann_information(rho: DensityMatrix) -> float:
    """I(rho) = log2(dim) - S(rho), in bits."""
    return float(np.log2(rho.dim)) - entropy_from_spectrum(rho.eigenvalues())


def valid_labels(N: int, l_max: int) -> list[tuple[float, int]]:
    """All (n, l) labels of the triangular lattice with l <= l_max."""
    labels = []
    for l in range(l_max + 1):
        n = 1 + l / 2
        while n + l / 2 <= N:
            labels.append((n, l))
            n += 1
    return labels


class _InfoTable:
    """Memo of window informations I(rho^l_n) for one state snapshot.

    Entropies come from the singular values of the window/complement
    bipartition, never from diagonalizing the window density matrix.
    """

    def __init__(self, state: StateVector):
        self.state = state
        self._cache: dict[tuple[int, int], float] = {}

    def window_information(self, n: float, l: int) -> float:
        if l < 0:
            return 0.0
        lo, hi = window_sites(n, l)
        key = (lo, hi)
        if key not in self._cache:
            lams = window_schmidt_values(self.state, lo, hi)
            self._cache[key] = (l + 1) - entropy_from_spectrum(lams)
        return self._cache[key]

    def local_information(self, n: float, l: int) -> float:
        i = self.window_information(n, l) + self.window_information(n, l - 2)
        i -= self.window_information(n - 0.5, l - 1)
        i -= self.window_information(n + 0.5, l - 1)
        return i


@dataclass(frozen=True)
class InfoLattice:
    """Triangular array of local information values i(n, l), l <= l_max."""

    N: int
    l_max: int
    values: dict[tuple[float, int], float]

    def total(self) -> float:
        return float(sum(self.values.values()))

    def scale_profile(self) -> dict[int, float]:
        profile = {l: 0.0 for l in range(self.l_max + 1)}
        for (_, l), v in self.values.items():
            profile[l] += v
        return profile


def local_information(state: StateVector, n: float, l: int) -> float:
    """Local information at a single label (n, l), in bits."""
    _check_label(state.N, n, l)
    return _InfoTable(state).local_information(n, l)


def _check_label(N: int, n: float, l: int) -> None:
    try:
        lo, hi = window_sites(n, l)
    except WindowError as err:
        raise LabelError(str(err)) from err
    if lo < 1 or hi > N:
        raise LabelError(f"label (n={n}, l={l}) outside chain of length {N}")


def full_info_lattice(state: StateVector, l_max: int,
                      n_lo: float | None = None,
                      n_hi: float | None = None) -> InfoLattice:
    """Local information at every label with l <= l_max.

    Optional [n_lo, n_hi] restricts the positions filled (the underlying
    window informations near the edges of the restriction are still
    computed, once each, via the shared memo).
    """
    if l_max > state.N - 1:
        raise LabelError(f"l_max={l_max} exceeds N-1={state.N - 1}")
    table = _InfoTable(state)
    values = {}
    for n, l in valid_labels(state.N, l_max):
        if n_lo is not None and n < n_lo:
            continue
        if n_hi is not None and n > n_hi:
            continue
        values[(n, l)] = table.local_information(n, l)
    return InfoLattice(N=state.N, l_max=l_max, values=values)


def info_per_scale(lattice: InfoLattice) -> dict[int, float]:
    """I(l) = sum_n i(n, l): total correlations at each scale."""
    return lattice.scale_profile()


def windowed_info_per_scale(lattice: InfoLattice, n_lo: float,
                            n_hi: float) -> dict[int, float]:
    """Position-restricted scale profile: sum over labels with n in [n_lo, n_hi]."""
    if n_lo > n_hi:
        raise WindowError(f"empty position window [{n_lo}, {n_hi}]")
    profile = {l: 0.0 for l in range(lattice.l_max + 1)}
    hit = False
    for (n, l), v in lattice.values.items():
        if n_lo <= n <= n_hi:
            profile[l] += v
            hit = True
    if not hit:
        raise WindowError(
            f"position window [{n_lo}, {n_hi}] contains no lattice labels")
    return profile


def info_difference(a: InfoLattice, b: InfoLattice) -> InfoLattice:
    """Pointwise a - b; signed, so the positivity invariant does not apply."""
    if a.N != b.N or a.l_max != b.l_max or a.values.keys() != b.values.keys():
        raise ValueError("information lattices have mismatched shapes")
    return InfoLattice(
        N=a.N, l_max=a.l_max,
        values={key: a.values[key] - b.values[key] for key in a.values})


def peak_scale(profile: dict[int, float], exclude_below: int = 0) -> int:
    """Argmax scale of a profile, ignoring l < exclude_below; ties go small."""
    best_l, best_v = None, 0.0
    for l in sorted(profile):
        if l < exclude_below:
            continue
        if profile[l] > best_v:
            best_l, best_v = l, profile[l]
    if best_l is None:
        raise NoPeakError(
            f"no positive weight at scales >= {exclude_below}")
    return best_l


def bipartite_entropy_profile(state: StateVector) -> np.ndarray:
    """S(n) = entropy of sites 1..n against the rest, for n = 1..N-1."""
    if abs(state.norm() - 1.0) > 1e-10:
        raise ValueError("state must be normalized")
    return np.array([
        entropy_from_spectrum(window_schmidt_values(state, 1, n))
        for n in range(1, state.N)])
