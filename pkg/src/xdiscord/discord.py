"""Hilbert-Schmidt geometric discord with measurement on qubit 1.

For a three-qubit state the 1|23 discord is ``(tr K - k_max) / 8`` where

    K = x x^T + T T^T,  x_i = T[i, 0, 0],  T = (T[i, a, b])_{(a, b) != (0, 0)}

is built from the Fano-Bloch tensor, and the optimal measurement axis is the
eigenvector of ``k_max``. Two qubits follow the same pattern with a 3x3 ``T``
and prefactor 1/4. For both classes of three-qubit X states ``K`` only couples
axes 1 and 2, and its entries have closed forms in the matrix elements.
"""

import math
from dataclasses import dataclass, field
from typing import NamedTuple, Optional

import numpy as np

from . import bloch
from .linalg import (
    ATOL,
    hs_norm_sq,
    is_psd,
    jacobi_eigh,
    q3_major,
    validate_density_matrix,
)
from .xstates import XClass, classify, require_class

TIE_TOL = 1e-10


@dataclass(frozen=True)
class KMatrix:
    k: np.ndarray
    method: str = "tensor"

    @property
    def block_structured(self):
        return abs(self.k[0, 2]) <= ATOL and abs(self.k[1, 2]) <= ATOL


class KEigen(NamedTuple):
    k1: float
    k2: float
    k3: float
    e_max: np.ndarray
    branch: str
    theta: Optional[float] = None


@dataclass(frozen=True)
class DiscordResult:
    """Discord value together with the spectrum that produced it.

    ``branch`` is ``"B1"`` when the optimal axis lies in the 1-2 plane,
    ``"B3"`` when it is the 3 axis, and ``"G"`` for inputs whose K matrix
    has no block structure (eigenvalues then sorted so that k1 >= k2 >= k3).
    For ``"B1"``, ``theta`` is the in-plane angle: e_max = (cos, -sin, 0).
    """

    value: float
    k1: float
    k2: float
    k3: float
    e_max: np.ndarray
    branch: str
    method: str
    theta: Optional[float] = None
    kmatrix: Optional[KMatrix] = field(default=None, repr=False)

    @property
    def eigenvalues(self):
        return (self.k1, self.k2, self.k3)


@dataclass(frozen=True)
class ClassicalState:
    chi: np.ndarray
    psd_ok: bool
    distance_sq: float
    branch: str
    e: np.ndarray


# --- K matrix, three qubits -------------------------------------------------


def correlation_parts(t):
    """Split a 4x4x4 tensor into the local vector ``x`` and the 3x15 block ``T``."""
    t = np.asarray(t)
    x = t[1:, 0, 0].copy()
    tm = t[1:].reshape(3, 16)[:, 1:]
    return x, tm


def kmatrix_from_tensor(t):
    x, tm = correlation_parts(t)
    return np.outer(x, x) + tm @ tm.T


def kmatrix_tensor(rho):
    """K from brute-force Fano-Bloch traces; valid for any 8x8 state."""
    return KMatrix(kmatrix_from_tensor(bloch.bloch3(rho)), "tensor")


def _entries(rho):
    m = q3_major(rho)
    return lambda i, j: m[i - 1, j - 1]


def _k12_from_tensor(t, pairs):
    return float(sum(t[1, a, b] * t[2, a, b] for a, b in pairs))


_CLASS1_12_PAIRS = [(a, b) for a in (1, 2) for b in range(4)]
_CLASS2_12_PAIRS = [(a, b) for a in (1, 2) for b in (0, 3)] + [(b, a) for a in (1, 2) for b in (0, 3)]


def kmatrix_class1(rho):
    """Closed-form K for states commuting with sigma_3 (x) sigma_3 (x) sigma_0.

    K11, K22, K33 come from the matrix elements; K12 is summed from the
    tensor components that couple axes 1 and 2.
    """
    require_class(rho, XClass.CLASS1)
    r = _entries(rho)
    k11 = 8 * (
        abs(r(2, 3) + r(4, 1)) ** 2
        + abs(r(6, 7) + r(8, 5)) ** 2
        + abs(r(3, 6) + r(1, 8)) ** 2
        + abs(r(5, 4) + r(7, 2)) ** 2
    )
    k22 = 8 * (
        abs(r(2, 3) - r(4, 1)) ** 2
        + abs(r(6, 7) - r(8, 5)) ** 2
        + abs(r(3, 6) - r(1, 8)) ** 2
        + abs(r(5, 4) - r(7, 2)) ** 2
    )
    u = r(1, 5) - r(3, 7)
    v = r(2, 6) - r(4, 8)
    k33 = 4 * (
        (r(1, 1) - r(3, 3)).real ** 2
        + (r(2, 2) - r(4, 4)).real ** 2
        + (r(5, 5) - r(7, 7)).real ** 2
        + (r(6, 6) - r(8, 8)).real ** 2
        + abs(u + v) ** 2
        + abs(u - v) ** 2
    )
    k12 = _k12_from_tensor(bloch.bloch3(rho), _CLASS1_12_PAIRS)
    k = np.array([[k11, k12, 0.0], [k12, k22, 0.0], [0.0, 0.0, k33]])
    return KMatrix(k, "class1")


def _phase_term(a, b, sign):
    # |a||b| sin(arg a +/- arg b); zero when either entry vanishes
    if a == 0 or b == 0:
        return 0.0
    return abs(a) * abs(b) * math.sin(np.angle(a) + sign * np.angle(b))


def k12_class1_closed(rho):
    """K12 of a class-1 state from moduli and phases of its coherences."""
    r = _entries(rho)
    return -16 * (
        _phase_term(r(2, 3), r(1, 4), +1)
        + _phase_term(r(5, 8), r(6, 7), +1)
        + _phase_term(r(1, 8), r(3, 6), -1)
        + _phase_term(r(2, 7), r(4, 5), -1)
    )


def kmatrix_class2(sigma):
    """Closed-form K for states commuting with sigma_3 (x) sigma_3 (x) sigma_3."""
    require_class(sigma, XClass.CLASS2)
    s = _entries(sigma)
    k11 = 8 * (abs(s(4, 1) + s(2, 3)) ** 2 + abs(s(8, 5) + s(6, 7)) ** 2) + 4 * (
        abs(s(1, 7) + s(3, 5) + s(2, 8) + s(4, 6)) ** 2
        + abs(s(1, 7) + s(3, 5) - s(2, 8) - s(4, 6)) ** 2
    )
    k22 = 8 * (abs(s(4, 1) - s(2, 3)) ** 2 + abs(s(8, 5) - s(6, 7)) ** 2) + 4 * (
        abs(s(1, 7) - s(3, 5) + s(2, 8) - s(4, 6)) ** 2
        + abs(s(1, 7) - s(3, 5) - s(2, 8) + s(4, 6)) ** 2
    )
    k33 = 4 * (
        (s(1, 1) - s(3, 3)).real ** 2
        + (s(2, 2) - s(4, 4)).real ** 2
        + (s(5, 5) - s(7, 7)).real ** 2
        + (s(6, 6) - s(8, 8)).real ** 2
        + abs(s(1, 6) - s(3, 8) - s(4, 7) + s(2, 5)) ** 2
        + abs(s(1, 6) - s(3, 8) + s(4, 7) - s(2, 5)) ** 2
    )
    k12 = _k12_from_tensor(bloch.bloch3(sigma), _CLASS2_12_PAIRS)
    k = np.array([[k11, k12, 0.0], [k12, k22, 0.0], [0.0, 0.0, k33]])
    return KMatrix(k, "class2")


def k12_class2_closed(sigma):
    s = _entries(sigma)
    return -16 * (
        _phase_term(s(2, 3), s(1, 4), +1)
        + _phase_term(s(5, 8), s(6, 7), +1)
        + _phase_term(s(1, 7), s(3, 5), -1)
        + _phase_term(s(2, 8), s(4, 6), -1)
    )


# --- spectrum ---------------------------------------------------------------


def _in_plane(k11, k22, k12):
    mean = 0.5 * (k11 + k22)
    # same discriminant as (k11 + k22)^2 - 4 det, written without cancellation
    half = 0.5 * math.sqrt((k11 - k22) ** 2 + 4 * k12 * k12)
    k1, k2 = mean + half, mean - half
    if k12 == 0.0:
        theta = 0.0 if k11 >= k22 else math.pi / 2
    else:
        theta = math.atan((k11 - k1) / k12)
    return k1, k2, theta


def k_eigen(kmat):
    """Eigenvalues and maximal eigenvector of a K matrix.

    Block-structured K: ``k1 >= k2`` from the 1-2 block and ``k3 = K33``; the
    maximal axis is ``(cos t, -sin t, 0)`` with ``tan t = (K11 - k1)/K12``, or
    ``(0, 0, 1)`` when ``k3`` wins. Ties go to ``(0, 0, 1)``.
    """
    k = kmat.k if isinstance(kmat, KMatrix) else np.asarray(kmat, dtype=float)
    if abs(k[0, 2]) <= ATOL and abs(k[1, 2]) <= ATOL:
        k1, k2, theta = _in_plane(float(k[0, 0]), float(k[1, 1]), float(k[0, 1]))
        k3 = float(k[2, 2])
        if k3 >= k1 - TIE_TOL:
            return KEigen(k1, k2, k3, np.array([0.0, 0.0, 1.0]), "B3")
        e = np.array([math.cos(theta), -math.sin(theta), 0.0])
        return KEigen(k1, k2, k3, e, "B1", theta)
    w, v = jacobi_eigh(k)
    e = v[:, -1].real
    e = e / np.linalg.norm(e)
    return KEigen(float(w[2]), float(w[1]), float(w[0]), e, "G")


def _result(kmat, prefactor, method):
    eig = k_eigen(kmat)
    kmax = max(eig.k1, eig.k3) if eig.branch != "G" else eig.k1
    value = prefactor * (eig.k1 + eig.k2 + eig.k3 - kmax)
    return DiscordResult(
        value=max(0.0, value),
        k1=eig.k1,
        k2=eig.k2,
        k3=eig.k3,
        e_max=eig.e_max,
        branch=eig.branch,
        method=method,
        theta=eig.theta,
        kmatrix=kmat,
    )


def kmatrix_auto(rho):
    cls = classify(rho)
    if cls in (XClass.CLASS1, XClass.BOTH):
        return kmatrix_class1(rho)
    if cls is XClass.CLASS2:
        return kmatrix_class2(rho)
    return kmatrix_tensor(rho)


def discord3(rho, method="auto"):
    """Geometric discord of the 1|23 split of a three-qubit state.

    ``method="auto"`` uses the closed-form K whenever the state is an X state
    of either class and the tensor route otherwise; ``"tensor"`` forces the
    tensor route.
    """
    rho = validate_density_matrix(rho, dims=(8,))
    kmat = kmatrix_tensor(rho) if method == "tensor" else kmatrix_auto(rho)
    return _result(kmat, 1 / 8, kmat.method)


# --- two qubits -------------------------------------------------------------


def lambdas2(rho):
    """Closed-form K eigenvalues (lambda1, lambda2, lambda3) of a two-qubit X state."""
    rho = np.asarray(rho)
    a = abs(rho[0, 3])
    b = abs(rho[1, 2])
    d = rho.diagonal().real
    lam1 = 4 * (a + b) ** 2
    lam2 = 4 * (a - b) ** 2
    lam3 = 2 * ((d[0] - d[2]) ** 2 + (d[1] - d[3]) ** 2)
    return lam1, lam2, lam3


def kmatrix2_tensor(rho):
    r = bloch.bloch2(rho)
    x = r[1:, 0]
    tm = r[1:, 1:]
    return KMatrix(np.outer(x, x) + tm @ tm.T, "tensor")


def discord2(rho):
    """Geometric discord of a two-qubit state, measuring qubit 1."""
    rho = validate_density_matrix(rho, dims=(4,))
    if classify(rho) is not XClass.TWO_QUBIT_X:
        return _result(kmatrix2_tensor(rho), 1 / 4, "tensor")
    lam1, lam2, lam3 = lambdas2(rho)
    if lam3 >= lam1 - TIE_TOL:
        branch, e, theta = "B3", np.array([0.0, 0.0, 1.0]), None
    else:
        # e^{i phi} is the phase of rho_14 rho_23; the axis sits at angle phi/2
        theta = 0.5 * float(np.angle(rho[0, 3]) + np.angle(rho[1, 2]))
        branch, e = "B1", np.array([math.cos(theta), -math.sin(theta), 0.0])
    value = 0.25 * (lam2 + min(lam1, lam3))
    return DiscordResult(max(0.0, value), lam1, lam2, lam3, e, branch, "twoqubit", theta)


# --- closest classical states ----------------------------------------------


def classical_tensor(t, e):
    """Fano-Bloch tensor of the optimal classical state for measurement axis ``e``.

    Keeps every ``T[0, a, b]``, sets ``T[i, 0, 0] = e_i (e . x)`` and
    ``T[i, a, b] = e_i sum_j e_j T[j, a, b]`` elsewhere.
    """
    t = np.asarray(t, dtype=float)
    e = np.asarray(e, dtype=float)
    proj = np.einsum("j,j...->...", e, t[1:])
    out = np.zeros_like(t)
    out[0] = t[0]
    out[1:] = np.einsum("i,...->i...", e, proj)
    return out


def _chi_b3_tensor(t):
    out = np.zeros_like(t)
    out[0] = t[0]
    out[3] = t[3]
    return out


def _chi_b1_tensor(t, theta):
    c, s = math.cos(theta), math.sin(theta)
    out = np.zeros_like(t)
    out[0] = t[0]
    out[1] = c * c * t[1] - c * s * t[2]
    out[2] = s * s * t[2] - c * s * t[1]
    # no sigma_i (x) 1 (x) 1 terms: the optimal t vanishes for an in-plane axis
    out[1, 0, 0] = out[2, 0, 0] = 0.0
    return out


def _classical_state(rho, chi, branch, e):
    return ClassicalState(
        chi=chi,
        psd_ok=is_psd(chi),
        distance_sq=hs_norm_sq(rho - chi),
        branch=branch,
        e=np.asarray(e, dtype=float),
    )


def closest_classical3(rho, result=None):
    """Closest zero-discord state for the 1|23 split.

    The returned ``distance_sq`` equals the discord. Positivity of ``chi`` is
    reported in ``psd_ok`` and never repaired.
    """
    rho = validate_density_matrix(rho, dims=(8,))
    if result is None:
        result = discord3(rho)
    t = bloch.bloch3(rho)
    if result.branch == "B3":
        ct = _chi_b3_tensor(t)
    elif result.branch == "B1":
        ct = _chi_b1_tensor(t, result.theta)
    else:
        ct = classical_tensor(t, result.e_max)
    return _classical_state(rho, bloch.inverse_bloch3(ct), result.branch, result.e_max)


def closest_classical2(rho, result=None):
    """Closest zero-discord state of a two-qubit state, measuring qubit 1."""
    rho = validate_density_matrix(rho, dims=(4,))
    if result is None:
        result = discord2(rho)
    r = bloch.bloch2(rho)
    ct = np.zeros((4, 4))
    ct[0] = r[0]
    if result.method != "twoqubit":
        e = result.e_max
        ct[1:, 0] = e * (e @ r[1:, 0])
        ct[1:, 1:] = np.outer(e, e @ r[1:, 1:])
    elif result.branch == "B3":
        ct[0] = 0.0
        ct[0, 0] = 1.0
        ct[3, 0] = r[3, 0]
        ct[0, 3] = r[0, 3]
        ct[3, 3] = r[3, 3]
    else:
        c, s = math.cos(result.theta), math.sin(result.theta)
        ct[0] = 0.0
        ct[0, 0] = 1.0
        # the optimum keeps the sigma_0 (x) sigma_3 coefficient, not sigma_3 (x) sigma_0
        ct[0, 3] = r[0, 3]
        for j in (1, 2):
            row = c * r[1, j] - s * r[2, j]
            ct[1, j] = c * row
            ct[2, j] = -s * row
    return _classical_state(rho, bloch.inverse_bloch2(ct), result.branch, result.e_max)
