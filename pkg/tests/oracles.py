"""Independent brute-force references used to freeze expected values.

Everything here works on dense full-space tensors with explicit index
bookkeeping and dense diagonalization; none of it shares code paths with
the library's SVD-based entropy pipeline.
"""

import numpy as np


def dense_tensor(state):
    """Full-space amplitudes as an N-axis tensor (axis 0 = site 1)."""
    return np.asarray(state.to_dense()).reshape((2,) * state.N)


def rdm(state, sites):
    """Reduced density matrix of arbitrary (1-based) sites by tensor contraction."""
    psi = dense_tensor(state)
    keep = [s - 1 for s in sites]
    drop = [ax for ax in range(state.N) if ax not in keep]
    rho = np.tensordot(psi, psi.conj(), axes=(drop, drop))
    # tensordot orders kept axes as given; flatten to (sites, sites')
    d = 2 ** len(sites)
    return rho.reshape(d, d)


def entropy_bits(rho):
    lams = np.linalg.eigvalsh(rho)
    lams = lams[lams > 1e-14]
    return float(-np.sum(lams * np.log2(lams)))


def information_bits(rho):
    return float(np.log2(rho.shape[0])) - entropy_bits(rho)


def window(n, l):
    lo = int(round(n - l / 2))
    return list(range(lo, lo + l + 1))


def local_information(state, n, l):
    """i(n, l) from four dense-contraction RDMs."""
    def info(nn, ll):
        if ll < 0:
            return 0.0
        return information_bits(rdm(state, window(nn, ll)))

    return (info(n, l) - info(n - 0.5, l - 1) - info(n + 0.5, l - 1)
            + info(n, l - 2))


def info_lattice(state, l_max):
    """Full brute-force lattice as a {(n, l): bits} dict."""
    values = {}
    for l in range(l_max + 1):
        n = 1 + l / 2
        while n + l / 2 <= state.N:
            values[(n, l)] = local_information(state, n, l)
            n += 1
    return values


def haar_state(basis, rng):
    from schwinger_info import StateVector

    v = rng.standard_normal(basis.dim) + 1j * rng.standard_normal(basis.dim)
    return StateVector(basis, v / np.linalg.norm(v))


def ghz_state(basis):
    from schwinger_info import StateVector

    amps = np.zeros(basis.dim, dtype=np.complex128)
    amps[basis.index_of(0)] = 1 / np.sqrt(2)
    amps[basis.index_of(2**basis.N - 1)] = 1 / np.sqrt(2)
    return StateVector(basis, amps)
