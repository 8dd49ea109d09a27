"""Desk-scale lattice Schwinger model simulator with information-lattice diagnostics."""

__version__ = "0.1.0"

from .hilbert import (DensityMatrix, SectorBasis, StateVector,
                      apply_pauli_string, build_sector_basis, load_state,
                      neel_state, partial_trace_contiguous, save_state)
from .schwinger import (ChargeBackground, ModelParams, SparseOperator,
                        build_hamiltonian, continuum_scalar_mass,
                        continuum_vector_mass, critical_field,
                        electric_field_profile, pseudo_momentum_operator)
from .spectral import (EigenResult, StateLabel, classify, excited_by_deflation,
                       lanczos_lowest, strong_coupling_states)
from .dynamics import QuenchSchedule, Segment, Trajectory, evolve, krylov_step
from .info_lattice import (InfoLattice, bipartite_entropy_profile,
                           full_info_lattice, info_difference, info_per_scale,
                           local_information, peak_scale,
                           von_neumann_information, windowed_info_per_scale)
from .protocols import (RunResult, ScatteringConfig, StringConfig,
                        build_string_schedule, prepare_meson_wavepacket,
                        run_scattering, run_string_quench)

__all__ = [
    "DensityMatrix", "SectorBasis", "StateVector", "apply_pauli_string",
    "build_sector_basis", "load_state", "neel_state",
    "partial_trace_contiguous", "save_state",
    "ChargeBackground", "ModelParams", "SparseOperator", "build_hamiltonian",
    "continuum_scalar_mass", "continuum_vector_mass", "critical_field",
    "electric_field_profile", "pseudo_momentum_operator",
    "EigenResult", "StateLabel", "classify", "excited_by_deflation",
    "lanczos_lowest", "strong_coupling_states",
    "QuenchSchedule", "Segment", "Trajectory", "evolve", "krylov_step",
    "InfoLattice", "bipartite_entropy_profile", "full_info_lattice",
    "info_difference", "info_per_scale", "local_information", "peak_scale",
    "von_neumann_information", "windowed_info_per_scale",
    "RunResult", "ScatteringConfig", "StringConfig", "build_string_schedule",
    "prepare_meson_wavepacket", "run_scattering", "run_string_quench",
]
