"""The two quench experiments as turnkey runs emitting CSV tables.

Meson scattering: two Gaussian wave packets of pair-flip excitations on the
interacting vacuum, counter-propagating with momenta +/-k, evolved under
the static Hamiltonian. Electric-string dynamics: the vacuum quenched by an
external charge pair whose -Q field window expands along light cones and
is optionally removed at a fixed time.
"""

from __future__ import annotations

import dataclasses
import time
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .dynamics import QuenchSchedule, Segment, Trajectory, evolve
from .hilbert import StateVector, apply_pauli_string, build_sector_basis
from .info_lattice import (InfoLattice, NoPeakError, bipartite_entropy_profile,
                           full_info_lattice, peak_scale,
                           windowed_info_per_scale)
from .runio import (write_csv, write_info_lattice_csv, write_manifest,
                    write_scale_profile_csv, write_spacetime_csv)
from .schwinger import (ChargeBackground, ModelParams, build_hamiltonian,
                        electric_field_profile)
from .spectral import lanczos_lowest


class DegeneratePacketError(ValueError):
    """Wave-packet operator annihilated the vacuum."""


def _default_snapshots(t_end: float) -> list[float]:
    return [round(t_end * f, 10) for f in (0.0, 0.25, 0.5, 0.75, 1.0)]


@dataclass(frozen=True)
class ScatteringConfig:
    params: ModelParams
    k: float
    j_left: int
    j_right: int
    sigma: float = 1.0
    t_end: float = 20.0
    l_max: int = 9
    dt: float = 0.02
    sample_every: float = 0.5
    snapshot_times: list[float] | None = None
    cut_n_lo: float | None = None  # defaults to the central quarter
    cut_n_hi: float | None = None
    cut_t_lo: float = 0.0
    cut_t_hi: float | None = None
    opposite_momenta: bool = True

    def __post_init__(self):
        if not (1 <= self.j_left < self.j_right <= self.params.N - 1):
            raise ValueError("packet centers must satisfy 1 <= j_left < j_right <= N-1")
        if self.j_right - self.j_left < 6 * self.sigma:
            raise ValueError("packets overlap within 3 sigma")

    def cut_window(self) -> tuple[float, float, float, float]:
        N = self.params.N
        n_lo = self.cut_n_lo if self.cut_n_lo is not None else N / 2 - N / 8
        n_hi = self.cut_n_hi if self.cut_n_hi is not None else N / 2 + N / 8
        t_hi = self.cut_t_hi if self.cut_t_hi is not None else self.t_end
        return n_lo, n_hi, self.cut_t_lo, t_hi


@dataclass(frozen=True)
class StringConfig:
    params: ModelParams
    background: ChargeBackground
    t_end: float = 20.0
    l_max: int = 9
    dt: float = 0.02
    sample_every: float = 0.5
    snapshot_times: list[float] | None = None
    field_n_lo: int | None = None  # window for the average field Lbar(t)
    field_n_hi: int | None = None
    ibar_n_lo: float | None = None  # window for the partial scale profile
    ibar_n_hi: float | None = None
    peak_exclude_below: int = 2

    def field_window(self) -> tuple[int, int]:
        # default: the two central links
        N = self.params.N
        lo = self.field_n_lo if self.field_n_lo is not None else N // 2 - 1
        hi = self.field_n_hi if self.field_n_hi is not None else N // 2
        if not (1 <= lo <= hi <= N - 1):
            raise ValueError(f"field window {lo}..{hi} outside links 1..{N - 1}")
        return lo, hi

    def ibar_window(self) -> tuple[float, float]:
        lo, hi = self.field_window()
        n_lo = self.ibar_n_lo if self.ibar_n_lo is not None else lo - 1
        n_hi = self.ibar_n_hi if self.ibar_n_hi is not None else hi + 2
        return max(1.0, n_lo), min(float(self.params.N), n_hi)


@dataclass
class RunResult:
    """In-memory record of a protocol run plus the files it wrote."""

    times: list[float]
    entropy: list[np.ndarray]
    snapshots: list[tuple[float, InfoLattice]]
    final_state: StateVector | None
    complete: bool
    files: dict[str, Path] = field(default_factory=dict)
    field_profiles: list[np.ndarray] | None = None
    icut: list[tuple[float, dict[int, float]]] | None = None
    ibar: list[tuple[float, dict[int, float]]] | None = None
    lbar: list[float] | None = None
    l_peak: list[int] | None = None


def prepare_meson_wavepacket(vacuum: StateVector, j: int, k: float,
                             sigma: float, normalize: bool = True) -> StateVector:
    """Gaussian superposition of antisymmetric pair flips on the vacuum.

    Applies sum_n phi(n, j) e^{-i n k} (sigma^+_n sigma^-_{n+1} - h.c.)
    with phi a Gaussian of width sigma centered at site j.
    """
    N = vacuum.N
    if not 1 <= j <= N - 1:
        raise ValueError(f"packet center {j} outside 1..{N - 1}")
    out = np.zeros(vacuum.basis.dim, dtype=np.complex128)
    for n in range(1, N):
        if sigma > 0:
            phi = np.exp(-((n - j) ** 2) / (2.0 * sigma**2))
        else:
            phi = 1.0 if n == j else 0.0
        if phi < 1e-16:
            continue
        weight = phi * np.exp(-1j * n * k)
        plus = apply_pauli_string(vacuum, [(n, "+"), (n + 1, "-")]).amplitudes
        minus = apply_pauli_string(vacuum, [(n + 1, "+"), (n, "-")]).amplitudes
        out += weight * (plus - minus)
    result = StateVector(vacuum.basis, out, normalized=False)
    if normalize:
        if result.norm() < 1e-12:
            raise DegeneratePacketError(
                f"wave-packet operator at j={j} annihilated the state")
        result = result.normalize()
    return result


def _solve_vacuum(params: ModelParams):
    basis = build_sector_basis(params.N, params.N % 2)
    H = build_hamiltonian(params, basis=basis)
    ground = lanczos_lowest(H, 1)
    return basis, H, ground.states[0], float(ground.energies[0])


def run_scattering(cfg: ScatteringConfig, out_dir: str | Path) -> RunResult:
    """Scattering run: emits S(n,t), information-lattice snapshots, I^cut(l,t)."""
    started = time.time()
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)

    basis, H, vacuum, _ = _solve_vacuum(cfg.params)
    k_left = cfg.k
    k_right = -cfg.k if cfg.opposite_momenta else cfg.k
    psi = prepare_meson_wavepacket(vacuum, cfg.j_left, k_left, cfg.sigma,
                                   normalize=False)
    psi = prepare_meson_wavepacket(psi, cfg.j_right, k_right, cfg.sigma,
                                   normalize=False)
    if psi.norm() < 1e-12:
        raise DegeneratePacketError("two-packet state has vanishing norm")
    psi = psi.normalize()

    snapshot_times = cfg.snapshot_times or _default_snapshots(cfg.t_end)
    n_lo, n_hi, t_lo, t_hi = cfg.cut_window()

    snapshots: list[tuple[float, InfoLattice]] = []
    icut: list[tuple[float, dict[int, float]]] = []

    def observe_entropy(t, state):
        return bipartite_entropy_profile(state)

    def observe_snapshots(t, state):
        if any(abs(t - ts) < 1e-9 for ts in snapshot_times):
            snapshots.append((t, full_info_lattice(state, cfg.l_max)))
        return None

    def observe_icut(t, state):
        if t_lo - 1e-9 <= t <= t_hi + 1e-9:
            lattice = full_info_lattice(state, cfg.l_max, n_lo=n_lo, n_hi=n_hi)
            icut.append((t, windowed_info_per_scale(lattice, n_lo, n_hi)))
        return None

    schedule = QuenchSchedule(
        segments=[Segment(H, 0.0, cfg.t_end)],
        dt=cfg.dt, sample_every=cfg.sample_every)
    traj = evolve(schedule, psi, [observe_entropy, observe_snapshots,
                                  observe_icut])

    result = RunResult(
        times=traj.times, entropy=traj.records[0], snapshots=snapshots,
        final_state=traj.final_state, complete=traj.complete, icut=icut)
    files = [
        write_spacetime_csv(out_dir / "entropy.csv", "S",
                            list(zip(traj.times, traj.records[0]))),
        write_info_lattice_csv(out_dir / "infolattice.csv", snapshots),
        write_scale_profile_csv(out_dir / "icut.csv", icut),
    ]
    manifest = write_manifest(out_dir, _echo(cfg), files, started,
                              complete=traj.complete)
    result.files = {p.name: p for p in files + [manifest]}
    return result


def build_string_schedule(params: ModelParams, background: ChargeBackground,
                          t_end: float, dt: float, sample_every: float,
                          basis=None) -> QuenchSchedule:
    """Piecewise-constant schedule with breaks at every charge-window change."""
    edges = [0.0] + background.hop_times(t_end, N=params.N) + [t_end]
    segments = []
    for t0, t1 in zip(edges, edges[1:]):
        H = build_hamiltonian(params, background, t=t0, basis=basis)
        segments.append(Segment(H, t0, t1))
    return QuenchSchedule(segments=segments, dt=dt, sample_every=sample_every)


def run_string_quench(cfg: StringConfig, out_dir: str | Path) -> RunResult:
    """String run: emits L(n,t), S(n,t), snapshots, Ibar(l,t), Lbar(t), l_max(t)."""
    started = time.time()
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)

    basis, _, vacuum, _ = _solve_vacuum(cfg.params)
    schedule = build_string_schedule(cfg.params, cfg.background, cfg.t_end,
                                     cfg.dt, cfg.sample_every, basis=basis)
    snapshot_times = cfg.snapshot_times or _default_snapshots(cfg.t_end)
    ibar_lo, ibar_hi = cfg.ibar_window()
    field_lo, field_hi = cfg.field_window()

    snapshots: list[tuple[float, InfoLattice]] = []
    ibar: list[tuple[float, dict[int, float]]] = []
    l_peak: list[int] = []

    def observe_field(t, state):
        return electric_field_profile(state, cfg.background, t)

    def observe_entropy(t, state):
        return bipartite_entropy_profile(state)

    def observe_info(t, state):
        lattice = full_info_lattice(state, cfg.l_max,
                                    n_lo=ibar_lo, n_hi=ibar_hi)
        profile = windowed_info_per_scale(lattice, ibar_lo, ibar_hi)
        ibar.append((t, profile))
        try:
            l_peak.append(peak_scale(profile, cfg.peak_exclude_below))
        except NoPeakError:
            l_peak.append(-1)
        if any(abs(t - ts) < 1e-9 for ts in snapshot_times):
            snapshots.append((t, full_info_lattice(state, cfg.l_max)))
        return None

    traj = evolve(schedule, vacuum, [observe_field, observe_entropy,
                                     observe_info])

    fields = traj.records[0]
    lbar0 = float(np.mean(fields[0][field_lo - 1:field_hi]))
    lbar = [float(np.mean(f[field_lo - 1:field_hi])) - lbar0 for f in fields]

    result = RunResult(
        times=traj.times, entropy=traj.records[1], snapshots=snapshots,
        final_state=traj.final_state, complete=traj.complete,
        field_profiles=fields, ibar=ibar, lbar=lbar, l_peak=l_peak)
    files = [
        write_spacetime_csv(out_dir / "field.csv", "L",
                            list(zip(traj.times, fields))),
        write_spacetime_csv(out_dir / "entropy.csv", "S",
                            list(zip(traj.times, traj.records[1]))),
        write_info_lattice_csv(out_dir / "infolattice.csv", snapshots),
        write_scale_profile_csv(out_dir / "ibar.csv", ibar),
        write_csv(out_dir / "lbar.csv", ["t", "value"],
                  list(zip(traj.times, lbar))),
        write_csv(out_dir / "lmax.csv", ["t", "l_peak"],
                  list(zip(traj.times, l_peak))),
    ]
    manifest = write_manifest(out_dir, _echo(cfg), files, started,
                              complete=traj.complete)
    result.files = {p.name: p for p in files + [manifest]}
    return result


def _echo(cfg) -> dict:
    return dataclasses.asdict(cfg)
