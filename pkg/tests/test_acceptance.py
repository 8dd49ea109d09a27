"""Acceptance suite: one test and one printed pass/fail line per criterion.

Each test exercises an end-to-end guarantee of the package at the stated
tolerance and prints a single scorecard line; run with
`pytest -s tests/test_acceptance.py` to see all lines (a failing criterion
also embeds its line in the assertion message).
"""

import sys
import time

import numpy as np
import pytest

import oracles
from schwinger_info import (ChargeBackground, ModelParams, QuenchSchedule,
                            Segment, StateVector, StringConfig,
                            build_hamiltonian, build_sector_basis, evolve,
                            full_info_lattice, info_per_scale, krylov_step,
                            lanczos_lowest, excited_by_deflation, neel_state,
                            prepare_meson_wavepacket, run_string_quench,
                            strong_coupling_states)
from schwinger_info.info_lattice import _InfoTable, valid_labels
from schwinger_info.protocols import _solve_vacuum


def report(name: str, ok: bool, detail: str) -> None:
    line = f"[{'PASS' if ok else 'FAIL'}] {name}: {detail}"
    print(line, file=sys.__stdout__, flush=True)
    assert ok, line


@pytest.fixture(scope="module")
def haar_states():
    rng = np.random.default_rng(7)
    basis = build_sector_basis(8, None)
    return basis, [oracles.haar_state(basis, rng) for _ in range(20)]


def test_analytic_identities():
    t0 = time.monotonic()
    worst = 0.0
    neel = neel_state(build_sector_basis(8, 0))
    for (n, l), v in full_info_lattice(neel, 7).values.items():
        worst = max(worst, abs(v - (1.0 if l == 0 else 0.0)))
    bell_basis = build_sector_basis(2, None)
    bell = StateVector(bell_basis,
                       np.array([1, 0, 0, 1], dtype=complex) / np.sqrt(2))
    lattice = full_info_lattice(bell, 1)
    worst = max(worst, abs(lattice.values[(1, 0)]),
                abs(lattice.values[(2, 0)]),
                abs(lattice.values[(1.5, 1)] - 2.0))
    elapsed = time.monotonic() - t0
    report("analytic identities (Neel delta, Bell link)",
           worst < 1e-12 and elapsed < 1.0,
           f"max deviation {worst:.2e}, {elapsed:.2f} s")


def test_decomposition_identity(haar_states):
    t0 = time.monotonic()
    _, states = haar_states
    worst = 0.0
    for state in states:
        lattice = full_info_lattice(state, 7)
        table = _InfoTable(state)
        for n, l in valid_labels(8, 7):
            inner = sum(v for (n2, l2), v in lattice.values.items()
                        if n2 - l2 / 2 >= n - l / 2 - 1e-9
                        and n2 + l2 / 2 <= n + l / 2 + 1e-9)
            worst = max(worst, abs(inner - table.window_information(n, l)))
    elapsed = time.monotonic() - t0
    report("decomposition identity on 20 Haar states",
           worst < 1e-9 and elapsed < 30.0,
           f"max window error {worst:.2e}, {elapsed:.1f} s")


def test_ssa_positivity(haar_states):
    basis8, states = haar_states
    corpus = [("haar", s, 7) for s in states[:5]]
    corpus.append(("ghz", oracles.ghz_state(basis8), 7))
    meson_basis = build_sector_basis(10, 0)
    vac, v_state, s_state = strong_coupling_states(meson_basis)
    corpus += [("vector meson", v_state, 9), ("scalar meson", s_state, 9)]
    packet = prepare_meson_wavepacket(vac, 4, 0.9, 1.0)
    corpus.append(("wave packet", packet, 9))
    H = build_hamiltonian(ModelParams(10, 1.0, 0.25), basis=meson_basis)
    sched = QuenchSchedule([Segment(H, 0.0, 2.0)], dt=0.05, sample_every=1.0)
    traj = evolve(sched, packet)
    corpus.append(("trajectory snapshot", traj.final_state, 9))
    low = min(min(full_info_lattice(s, lm).values.values())
              for _, s, lm in corpus)
    report("strong-subadditivity positivity across corpus", low >= -1e-10,
           f"most negative value {low:.2e}")


def test_oracle_equivalence(haar_states):
    _, states = haar_states
    worst = 0.0
    for state in states[:10]:
        lattice = full_info_lattice(state, 7)
        ref = oracles.info_lattice(state, 7)
        worst = max(worst, max(abs(lattice.values[k] - ref[k]) for k in ref))
    report("brute-force oracle equivalence on 10 random states",
           worst < 1e-10, f"max |difference| {worst:.2e}")


def test_conservation_under_evolution():
    t0 = time.monotonic()
    basis = build_sector_basis(12, 0)
    H = build_hamiltonian(ModelParams(12, 1.0, 0.25), basis=basis)
    state = prepare_meson_wavepacket(neel_state(basis), 5, 0.9, 1.0)
    e0 = H.expectation(state)
    totals = [full_info_lattice(state, 11).total()]
    for step in range(200):
        state = krylov_step(H, state, 0.02)
        if (step + 1) % 40 == 0:
            totals.append(full_info_lattice(state, 11).total())
    info_err = float(np.max(np.abs(np.array(totals) - 12.0)))
    drift = abs(H.expectation(state) - e0) / abs(e0)
    elapsed = time.monotonic() - t0
    report("200-step conservation (information and energy)",
           info_err < 1e-8 and drift < 1e-8 and elapsed < 300.0,
           f"info error {info_err:.2e}, relative drift {drift:.2e}, "
           f"{elapsed:.1f} s")


def test_spectral_correctness():
    t0 = time.monotonic()
    basis = build_sector_basis(10, 0)
    H = build_hamiltonian(ModelParams(10, 1.0, 1e-5), basis=basis)
    dense = np.linalg.eigvalsh(H.dense())
    shift = 10 * 0.5 * 1.0 * 10
    states = list(lanczos_lowest(H, 1).states)
    energies = [float(lanczos_lowest(H, 1).energies[0])]
    for _ in range(9):
        nxt = excited_by_deflation(H, states, shift)
        states.append(nxt.states[0])
        energies.append(float(nxt.energies[0]))
    worst = float(np.max(np.abs(np.array(energies) - dense[:10])))
    elapsed = time.monotonic() - t0
    report("Lanczos + deflation vs dense 10 lowest levels",
           worst < 1e-8 and elapsed < 120.0,
           f"max level error {worst:.2e}, {elapsed:.1f} s")


def test_strong_coupling_limit():
    basis = build_sector_basis(12, 0)
    H = build_hamiltonian(ModelParams(12, 10.0, 0.0), basis=basis)
    ground = lanczos_lowest(H, 1).states[0]
    overlap = abs(ground.overlap(neel_state(basis))) ** 2
    _, v_state, s_state = strong_coupling_states(basis)
    pv = info_per_scale(full_info_lattice(v_state, 11))
    ps = info_per_scale(full_info_lattice(s_state, 11))
    gap = max(abs(pv[l] - ps[l]) for l in pv)
    report("strong-coupling limit (Neel vacuum, meson profile degeneracy)",
           overlap > 0.99 and gap < 1e-10,
           f"Neel overlap {overlap:.4f}, max profile gap {gap:.2e}")


def test_entropy_consistency(haar_states):
    _, states = haar_states
    worst = 0.0
    from schwinger_info import bipartite_entropy_profile
    for state in states[:10]:
        profile = bipartite_entropy_profile(state)
        table = _InfoTable(state)
        for n in range(1, 8):
            expect = n - table.window_information((n + 1) / 2, n - 1)
            worst = max(worst, abs(profile[n - 1] - expect))
    report("bipartite entropy vs information-lattice expression",
           worst < 1e-10, f"max |difference| {worst:.2e}")


def _central_entropy(result):
    return np.array([s[len(s) // 2] for s in result.entropy])


def test_qualitative_regime_gates(tmp_path):
    t0 = time.monotonic()
    # gate (a): weak coupling, string below the multi-string threshold
    params_a = ModelParams(16, 0.5, 0.25)
    bg_a = ChargeBackground(Q=2.8, u=1.0, center_left=7, center_right=9)
    res_a = run_string_quench(
        StringConfig(params_a, bg_a, t_end=20.0, l_max=9), tmp_path / "a")
    s_a = _central_entropy(res_a)
    # monotone growth judged on coarse 5a-block means to absorb the
    # finite-size breathing of the entropy
    blocks = [float(np.mean(chunk)) for chunk in np.array_split(s_a, 4)]
    monotone = all(b2 > b1 for b1, b2 in zip(blocks, blocks[1:]))
    raw_lbar_a = np.array([np.mean(f[7:9]) for f in res_a.field_profiles])
    no_sign_change = bool(np.all(raw_lbar_a < 1e-9))
    gate_a = res_a.complete and monotone and no_sign_change

    # gate (b): strong coupling, large driven charge: entropy growth is
    # suppressed relative to gate (a)'s endpoint
    params_b = ModelParams(16, 1.0, 0.25)
    bg_b = ChargeBackground(Q=4.0, u=1.0, center_left=7, center_right=9)
    res_b = run_string_quench(
        StringConfig(params_b, bg_b, t_end=20.0, l_max=9), tmp_path / "b")
    s_b = _central_entropy(res_b)
    gate_b = res_b.complete and float(np.max(s_b)) < float(s_a[-1])
    elapsed = time.monotonic() - t0
    report("qualitative string-regime gates",
           gate_a and gate_b and elapsed < 1800.0,
           f"(a) blocks {['%.2f' % b for b in blocks]} monotone={monotone}, "
           f"field sign change={not no_sign_change}; "
           f"(b) max central S {np.max(s_b):.3f} < {s_a[-1]:.3f}; "
           f"{elapsed:.0f} s")


def test_step_size_convergence(tmp_path):
    params = ModelParams(10, 0.8, 0.25)
    bg = ChargeBackground(Q=2.0, u=1.0, center_left=4, center_right=6)
    results = []
    for tag, dt in [("coarse", 0.02), ("fine", 0.01)]:
        cfg = StringConfig(params, bg, t_end=4.0, l_max=7, dt=dt,
                           sample_every=0.5)
        results.append(run_string_quench(cfg, tmp_path / tag))
    a, b = results
    worst = 0.0
    worst = max(worst, float(np.max(np.abs(
        np.array(a.field_profiles) - np.array(b.field_profiles)))))
    worst = max(worst, float(np.max(np.abs(
        np.array(a.entropy) - np.array(b.entropy)))))
    worst = max(worst, float(np.max(np.abs(
        np.array(a.lbar) - np.array(b.lbar)))))
    for (ta, pa), (tb, pb) in zip(a.ibar, b.ibar):
        worst = max(worst, max(abs(pa[l] - pb[l]) for l in pa))
    report("step-size convergence of emitted observables",
           worst < 1e-6, f"max observable change {worst:.2e}")
