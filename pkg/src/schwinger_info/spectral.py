"""Lowest eigenstates, excited states by deflation, and state classification.

Desk-scale replacement for variational spectrum searches: sparse Lanczos
(ARPACK) with a fixed seed vector, explicit residual checks, and excited
states obtained by shifting already-known states up in energy.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.sparse.linalg as spla

from .hilbert import SectorBasis, StateVector, apply_pauli_string, neel_state
from .schwinger import SparseOperator

DENSE_CUTOFF = 300  # below this dimension a dense solve is cheaper than ARPACK


class ConvergenceError(RuntimeError):
    """Eigensolver failed to reach the requested residual."""

    def __init__(self, message: str, best_residual: float):
        super().__init__(message)
        self.best_residual = best_residual


class DeflationLeakError(RuntimeError):
    """Deflated solve returned a state overlapping the known set."""


@dataclass(frozen=True)
class EigenResult:
    """Ascending eigenpairs with per-pair residuals ||H psi - E psi||."""

    energies: np.ndarray
    states: list[StateVector]
    residuals: np.ndarray


@dataclass(frozen=True)
class StateLabel:
    """Classification record for one eigenstate."""

    gap: float
    p2: float
    overlap_V: float
    overlap_S: float
    tag: str  # vacuum | vector-like | scalar-like | momentum-excitation | unclassified


def _fix_phase(vec: np.ndarray) -> np.ndarray:
    """Deterministic global phase: largest-magnitude amplitude real positive."""
    k = int(np.argmax(np.abs(vec)))
    phase = vec[k] / abs(vec[k])
    return vec / phase


def _seed_vector(dim: int, seed: int) -> np.ndarray:
    rng = np.random.default_rng(seed)
    v = rng.standard_normal(dim)
    return v / np.linalg.norm(v)


def _package(H, basis: SectorBasis, energies: np.ndarray, vecs: np.ndarray,
             tol: float) -> EigenResult:
    order = np.argsort(energies)
    energies = energies[order]
    vecs = vecs[:, order]
    states, residuals = [], []
    for i in range(len(energies)):
        v = _fix_phase(vecs[:, i] / np.linalg.norm(vecs[:, i]))
        residuals.append(float(np.linalg.norm(H @ v - energies[i] * v)))
        states.append(StateVector(basis, v.astype(np.complex128)))
    residuals = np.array(residuals)
    if np.any(residuals > tol):
        raise ConvergenceError(
            f"residual {residuals.max():.3e} above tolerance {tol:.1e}",
            best_residual=float(residuals.max()))
    return EigenResult(energies=energies, states=states, residuals=residuals)


def lanczos_lowest(H: SparseOperator, k: int, tol: float = 1e-9,
                   max_iter: int = 10000, seed: int = 0) -> EigenResult:
    """k lowest eigenpairs of H, residuals checked against tol."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if H.dim < k:
        raise ValueError(f"k={k} exceeds dimension {H.dim}")
    if H.dim <= max(DENSE_CUTOFF, 2 * k + 2):
        energies, vecs = np.linalg.eigh(H.dense())
        return _package(H.matrix, H.basis, energies[:k], vecs[:, :k], tol)
    try:
        energies, vecs = spla.eigsh(
            H.matrix, k=k, which="SA", v0=_seed_vector(H.dim, seed),
            maxiter=max_iter, tol=0)
    except spla.ArpackNoConvergence as err:
        raise ConvergenceError(
            f"ARPACK did not converge within {max_iter} iterations",
            best_residual=np.inf) from err
    return _package(H.matrix, H.basis, energies, vecs, tol)


def excited_by_deflation(H: SparseOperator, known: list[StateVector],
                         shift: float, k: int = 1, tol: float = 1e-9,
                         max_iter: int = 10000, seed: int = 0) -> EigenResult:
    """Lowest states of H + shift * sum |psi><psi| over the known set.

    Returned states are re-orthogonalized against the known set; energies
    are recomputed as expectation values of the undeflated H.
    """
    if not known:
        return lanczos_lowest(H, k, tol=tol, max_iter=max_iter, seed=seed)
    knowns = np.column_stack([s.amplitudes for s in known])

    if H.dim <= max(DENSE_CUTOFF, 2 * k + 2):
        deflated = H.dense() + shift * (knowns @ knowns.conj().T)
        _, vecs = np.linalg.eigh(deflated)
        vecs = vecs[:, :k]
    else:
        def matvec(x):
            return H.matrix @ x + shift * (knowns @ (knowns.conj().T @ x))

        op = spla.LinearOperator((H.dim, H.dim), matvec=matvec,
                                 dtype=np.complex128)
        try:
            _, vecs = spla.eigsh(op, k=k, which="SA",
                                 v0=_seed_vector(H.dim, seed).astype(np.complex128),
                                 maxiter=max_iter, tol=0)
        except spla.ArpackNoConvergence as err:
            raise ConvergenceError(
                f"ARPACK did not converge within {max_iter} iterations",
                best_residual=np.inf) from err

    states, energies, residuals = [], [], []
    for i in range(vecs.shape[1]):
        v = vecs[:, i]
        leak = float(np.max(np.abs(knowns.conj().T @ v)))
        if leak > 1e-4:
            raise DeflationLeakError(
                f"deflated state overlaps known set by {leak:.2e}; "
                f"increase the shift (currently {shift})")
        v = v - knowns @ (knowns.conj().T @ v)
        v = _fix_phase(v / np.linalg.norm(v))
        e = float(np.vdot(v, H.matrix @ v).real)
        energies.append(e)
        residuals.append(float(np.linalg.norm(H.matrix @ v - e * v)))
        states.append(StateVector(H.basis, v))
    order = np.argsort(energies)
    return EigenResult(
        energies=np.array(energies)[order],
        states=[states[i] for i in order],
        residuals=np.array(residuals)[order])


def strong_coupling_states(basis: SectorBasis
                           ) -> tuple[StateVector, StateVector, StateVector]:
    """Staggered vacuum and its vector/scalar pair-flip excitations.

    |1_V> and |1_S> are the antisymmetric (-) and symmetric (+) combinations
    (1/sqrt(N-1)) sum_n (sigma^+_{n+1} sigma^-_n -/+ h.c.) |vac>.
    """
    if basis.N < 3:
        raise ValueError("need N >= 3 for the pair-flip excitations")
    vac = neel_state(basis)
    norm = 1.0 / np.sqrt(basis.N - 1)
    vec = np.zeros(basis.dim, dtype=np.complex128)
    sca = np.zeros(basis.dim, dtype=np.complex128)
    for n in range(1, basis.N):
        raise_term = apply_pauli_string(vac, [(n + 1, "+"), (n, "-")]).amplitudes
        lower_term = apply_pauli_string(vac, [(n + 1, "-"), (n, "+")]).amplitudes
        vec += norm * (raise_term - lower_term)
        sca += norm * (raise_term + lower_term)
    return vac, StateVector(basis, vec), StateVector(basis, sca)


def classify(state: StateVector, vacuum_energy: float, H: SparseOperator,
             P: SparseOperator, eps_gap: float = 1e-6, p2_cut: float = 0.5,
             min_overlap: float = 0.25) -> StateLabel:
    """Tag a state as vacuum, vector-/scalar-like, or momentum excitation.

    Low-momentum gapped states are tagged by their larger overlap with the
    strong-coupling pair-flip ansatz states (a proxy for the translation
    parity check, which open boundaries make ill-defined at desk scale).
    """
    energy = H.expectation(state)
    gap = energy - vacuum_energy
    pv = P.matrix @ state.amplitudes
    p2 = float(np.vdot(pv, pv).real)
    _, v_state, s_state = strong_coupling_states(H.basis)
    overlap_v = abs(state.overlap(v_state)) ** 2
    overlap_s = abs(state.overlap(s_state)) ** 2

    if gap < eps_gap:
        tag = "vacuum"
    elif p2 <= p2_cut:
        if max(overlap_v, overlap_s) < min_overlap:
            tag = "unclassified"
        elif overlap_v >= overlap_s:
            tag = "vector-like"
        else:
            tag = "scalar-like"
    else:
        tag = "momentum-excitation"
    return StateLabel(gap=gap, p2=p2, overlap_V=overlap_v,
                      overlap_S=overlap_s, tag=tag)
