"""Brute-force discord by searching the measurement axis on the unit sphere.

Two objectives are minimized over directions ``e(theta, phi)``:

* ``sphere``: the Hilbert-Schmidt distance to the best classical state for a
  fixed axis, written in Fano-Bloch coefficients obtained from raw traces;
* ``measurement``: the distance from ``rho`` to its own post-measurement
  state after a projective measurement of qubit 1 along ``e``.

Neither touches the closed-form K entries. Each search scans a regular
(theta, phi) grid and then polishes the best grid point by alternating
golden-section line searches.
"""

import math
from dataclasses import dataclass

import numpy as np

from .bloch import bloch2, bloch3
from .linalg import hs_norm_sq, n_qubits, validate_density_matrix

_INV_PHI = (math.sqrt(5) - 1) / 2


@dataclass(frozen=True)
class SphereGrid:
    n_theta: int = 64
    n_phi: int = 128
    refine_tol: float = 1e-10
    max_refine_iters: int = 200

    def __post_init__(self):
        if self.n_theta < 8 or self.n_phi < 16:
            raise ValueError("grid needs n_theta >= 8 and n_phi >= 16")
        if self.refine_tol <= 0:
            raise ValueError("refine_tol must be positive")

    def angles(self):
        """Grid nodes; theta includes both poles, doubling a size nests the grid."""
        theta = np.linspace(0.0, math.pi, self.n_theta + 1)
        phi = np.arange(self.n_phi) * (2 * math.pi / self.n_phi)
        return theta, phi


@dataclass(frozen=True)
class OracleResult:
    value: float
    grid_value: float
    theta: float
    phi: float
    iterations: int

    @property
    def axis(self):
        return _axis(self.theta, self.phi)


def _axis(theta, phi):
    st = math.sin(theta)
    return np.array([st * math.cos(phi), st * math.sin(phi), math.cos(theta)])


def _axes(theta, phi):
    th, ph = np.meshgrid(theta, phi, indexing="ij")
    return np.stack([np.sin(th) * np.cos(ph), np.sin(th) * np.sin(ph), np.cos(th)], axis=-1)


def golden_section(f, a, b, xtol=1e-9, max_iter=200):
    """Minimize a unimodal ``f`` on ``[a, b]``; returns ``(x, f(x))``."""
    c = b - _INV_PHI * (b - a)
    d = a + _INV_PHI * (b - a)
    fc, fd = f(c), f(d)
    for _ in range(max_iter):
        if abs(b - a) <= xtol:
            break
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - _INV_PHI * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + _INV_PHI * (b - a)
            fd = f(d)
    return (c, fc) if fc < fd else (d, fd)


def _search(objective, batch_objective, grid):
    theta, phi = grid.angles()
    values = batch_objective(_axes(theta, phi))
    i, j = np.unravel_index(int(np.argmin(values)), values.shape)
    grid_value = float(values[i, j])
    th, ph = float(theta[i]), float(phi[j])
    h_th = math.pi / grid.n_theta
    h_ph = 2 * math.pi / grid.n_phi

    def f(t, p):
        return objective(_axis(t, p))

    best = grid_value
    iters = 0
    for iters in range(1, grid.max_refine_iters + 1):
        # theta may leave [0, pi]; e(theta, phi) stays a unit vector
        t_new, _ = golden_section(lambda t: f(t, ph), th - h_th, th + h_th)
        p_new, value = golden_section(lambda p: f(t_new, p), ph - h_ph, ph + h_ph)
        improvement = best - value
        if improvement > 0:
            th, ph, best = t_new, p_new, value
        if improvement < grid.refine_tol:
            break
    return OracleResult(max(0.0, best), grid_value, th, ph, iters)


# --- objective 1: Fano-Bloch distance at the inner optimum -----------------


def _fano_parts(rho):
    n = n_qubits(rho)
    t = bloch3(rho) if n == 3 else bloch2(rho)
    loc = t[(slice(1, None),) + (0,) * (n - 1)]
    corr = t[1:].reshape(3, -1)[:, 1:]
    return loc, corr, 2 ** n


def sphere_objective(rho):
    """Distance ``||rho - chi(e)||^2`` with ``chi`` at its optimum for axis ``e``.

    For fixed ``e`` the classical-state parameters are ``t = e . x``,
    ``s+ = T[0, a, b]`` and ``s- = sum_i e_i T[i, a, b]``; substituting them
    leaves ``(|x|^2 - (e.x)^2 + |T|^2 - |e^T T|^2) / d``.
    """
    loc, corr, d = _fano_parts(rho)
    total = loc @ loc + float(np.sum(corr * corr))

    def one(e):
        s = e @ loc
        s_minus = e @ corr
        return (total - s * s - s_minus @ s_minus) / d

    def batch(e):
        s = e @ loc
        s_minus = e @ corr
        return (total - s * s - np.sum(s_minus * s_minus, axis=-1)) / d

    return one, batch


def oracle_discord_sphere(rho, grid=SphereGrid(), full=False):
    rho = validate_density_matrix(rho, dims=(4, 8))
    one, batch = sphere_objective(rho)
    res = _search(one, batch, grid)
    return res if full else res.value


# --- objective 2: distance to the post-measurement state -------------------


def _projectors(e):
    """Rank-one projectors ``(1 +/- e.sigma)/2`` stacked on a trailing axis pair."""
    e = np.asarray(e, dtype=float)
    x, y, z = e[..., 0], e[..., 1], e[..., 2]
    plus = np.empty(e.shape[:-1] + (2, 2), dtype=complex)
    plus[..., 0, 0] = (1 + z) / 2
    plus[..., 1, 1] = (1 - z) / 2
    plus[..., 0, 1] = (x - 1j * y) / 2
    plus[..., 1, 0] = (x + 1j * y) / 2
    minus = np.eye(2) - plus
    return plus, minus


def measured_state(rho, e):
    """``sum_k (P_k (x) 1) rho (P_k (x) 1)`` for projectors along +/- ``e`` on qubit 1."""
    rho = np.asarray(rho)
    d = rho.shape[0] // 2
    blocks = rho.reshape(2, d, 2, d)
    out = np.zeros_like(blocks)
    for p in _projectors(e):
        out += np.einsum("ab,bicj,cd->aidj", p, blocks, p)
    return out.reshape(rho.shape)


def measurement_objective(rho):
    rho = np.asarray(rho)
    d = rho.shape[0] // 2
    blocks = rho.reshape(2, d, 2, d)

    def one(e):
        return hs_norm_sq(rho - measured_state(rho, e))

    # rho as 2x2 blocks over qubit 1: B[b, c] is a (d x d) block, flattened
    bmat = blocks.transpose(0, 2, 1, 3).reshape(4, d * d)

    def batch(e):
        shape = e.shape[:-1]
        plus, minus = _projectors(e.reshape(-1, 3))
        w = np.einsum("gab,gcd->gadbc", plus, plus) + np.einsum("gab,gcd->gadbc", minus, minus)
        chi = w.reshape(-1, 4, 4) @ bmat
        diff = bmat[None] - chi
        return np.sum(np.abs(diff) ** 2, axis=(1, 2)).reshape(shape)

    return one, batch


def oracle_discord_measurement(rho, grid=SphereGrid(), full=False):
    rho = validate_density_matrix(rho, dims=(4, 8))
    one, batch = measurement_objective(rho)
    res = _search(one, batch, grid)
    return res if full else res.value


def hs_distance_to_classical(rho, chi):
    rho = np.asarray(rho)
    chi = np.asarray(chi)
    if rho.shape != chi.shape:
        raise ValueError(f"shape mismatch {rho.shape} vs {chi.shape}")
    return hs_norm_sq(rho - chi)
