"""Real-time propagation under piecewise-constant Hamiltonians.

A single step applies exp(-i H dt) through a Lanczos-built Krylov space;
convergence is monitored by comparing successive Krylov orders, with the
time step recursively halved if the requested accuracy is not reached.
Trajectories walk a schedule of (Hamiltonian, time interval) segments and
invoke observer callbacks at a fixed sampling cadence.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable

import numpy as np
import scipy.linalg

from .hilbert import StateVector
from .schwinger import SparseOperator


class StepError(RuntimeError):
    """Krylov step failed to reach the requested local accuracy."""

    def __init__(self, message: str, achieved: float):
        super().__init__(message)
        self.achieved = achieved


@dataclass(frozen=True)
class Segment:
    """One piecewise-constant stretch of the evolution."""

    hamiltonian: SparseOperator
    t_start: float
    t_end: float


@dataclass(frozen=True)
class QuenchSchedule:
    """Contiguous segments starting at t = 0, plus integrator settings."""

    segments: list[Segment]
    dt: float = 0.02
    sample_every: float = 0.5

    def __post_init__(self):
        if not self.segments:
            raise ValueError("schedule needs at least one segment")
        if self.dt <= 0:
            raise ValueError("dt must be positive")
        if abs(self.segments[0].t_start) > 1e-12:
            raise ValueError("schedule must start at t = 0")
        for prev, cur in zip(self.segments, self.segments[1:]):
            if abs(prev.t_end - cur.t_start) > 1e-12:
                raise ValueError("segments must be contiguous and ordered")
        for seg in self.segments:
            if seg.t_end <= seg.t_start:
                raise ValueError("segment has nonpositive duration")

    @property
    def t_end(self) -> float:
        return self.segments[-1].t_end


@dataclass
class Trajectory:
    """Sample times and per-observer records; flagged incomplete on abort."""

    times: list[float] = field(default_factory=list)
    records: list[list[Any]] = field(default_factory=list)
    final_state: StateVector | None = None
    complete: bool = False


def _lanczos_expm(matrix, psi: np.ndarray, dt: float, m_dim: int,
                  tol: float) -> tuple[np.ndarray, float]:
    """One Krylov application of exp(-i * matrix * dt); returns (result, error).

    The error estimate is the norm difference between the order-m and
    order-(m-1) approximations in the Krylov basis.
    """
    nrm = np.linalg.norm(psi)
    V = [psi / nrm]
    alphas, betas = [], []
    prev_coeffs = None
    err = np.inf
    for j in range(m_dim):
        w = matrix @ V[j]
        alpha = float(np.vdot(V[j], w).real)
        alphas.append(alpha)
        w = w - alpha * V[j]
        if j > 0:
            w = w - betas[-1] * V[j - 1]
        # full re-orthogonalization keeps the basis clean at large dt
        for v in V:
            w = w - np.vdot(v, w) * v
        beta = np.linalg.norm(w)
        T = np.diag(alphas)
        if betas:
            T = T + np.diag(betas, 1) + np.diag(betas, -1)
        coeffs = scipy.linalg.expm(-1j * dt * T)[:, 0]
        if prev_coeffs is not None:
            err = float(np.linalg.norm(
                np.concatenate([prev_coeffs, [0.0]]) - coeffs))
            if err < tol:
                prev_coeffs = coeffs
                break
        prev_coeffs = coeffs
        if beta < 1e-14:  # happy breakdown: Krylov space is exact
            err = 0.0
            break
        betas.append(beta)
        V.append(w / beta)
    result = nrm * (np.column_stack(V[:len(prev_coeffs)]) @ prev_coeffs)
    return result, err


def krylov_step(H: SparseOperator, state: StateVector, dt: float,
                m_dim: int = 20, tol: float = 1e-10,
                max_splits: int = 12) -> StateVector:
    """Propagate one step: approximately exp(-i H dt) |psi>, re-unitized.

    If the Krylov space of dimension m_dim cannot deliver the local error
    tolerance, the step is split in half recursively.
    """
    if m_dim < 2:
        raise ValueError("m_dim must be >= 2")
    if dt == 0.0:
        return StateVector(state.basis, state.amplitudes / state.norm())

    def _step(psi: np.ndarray, span: float, depth: int) -> np.ndarray:
        out, err = _lanczos_expm(H.matrix, psi, span, m_dim, tol)
        if err < tol:
            return out
        if depth >= max_splits:
            raise StepError(
                f"Krylov step stalled at error {err:.2e} (tol {tol:.1e})",
                achieved=err)
        half = _step(psi, span / 2, depth + 1)
        return _step(half, span / 2, depth + 1)

    out = _step(state.amplitudes, dt, 0)
    return StateVector(state.basis, out / np.linalg.norm(out))


Observer = Callable[[float, StateVector], Any]


def evolve(schedule: QuenchSchedule, initial: StateVector,
           observers: list[Observer] | None = None,
           m_dim: int = 20, tol: float = 1e-10) -> Trajectory:
    """Run the schedule, sampling observers every `sample_every` time units.

    Sample times and segment boundaries are hit exactly by shortening the
    final step of each stretch. On a step failure the partial trajectory is
    returned with `complete=False`.
    """
    observers = observers or []
    traj = Trajectory(records=[[] for _ in observers])

    def sample(t: float, state: StateVector) -> None:
        traj.times.append(t)
        for obs, rec in zip(observers, traj.records):
            rec.append(obs(t, state))

    # break the time axis at segment edges and sampling instants
    events = {seg.t_start for seg in schedule.segments}
    events.add(schedule.t_end)
    n_samples = int(round(schedule.t_end / schedule.sample_every)) + 1
    sample_times = {round(i * schedule.sample_every, 12)
                    for i in range(n_samples)
                    if i * schedule.sample_every <= schedule.t_end + 1e-12}
    events |= sample_times
    times = sorted(events)

    state = initial
    sample(0.0, state)
    try:
        for t0, t1 in zip(times, times[1:]):
            seg = next(s for s in schedule.segments
                       if s.t_start <= t0 + 1e-12 and t1 <= s.t_end + 1e-12)
            span = t1 - t0
            n_steps = max(1, int(np.ceil(span / schedule.dt - 1e-12)))
            h = span / n_steps
            for _ in range(n_steps):
                state = krylov_step(seg.hamiltonian, state, h,
                                    m_dim=m_dim, tol=tol)
            if round(t1, 12) in sample_times:
                sample(t1, state)
    except StepError:
        traj.final_state = state
        traj.complete = False
        return traj
    traj.final_state = state
    traj.complete = True
    return traj
