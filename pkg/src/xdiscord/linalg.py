"""Small dense complex linear algebra for one to three qubits.

Operators are plain ``numpy`` arrays. Multi-qubit operators use the usual
Kronecker layout with qubit 1 as the slowest index, so the basis of three
qubits is ``|q1 q2 q3>`` read as a binary number.
"""

import numpy as np

ATOL = 1e-10
MAX_DIM = 64

_PAULI = (
    np.array([[1, 0], [0, 1]], dtype=complex),
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
)


class InvalidStateError(ValueError):
    """A matrix failed one of the density-matrix invariants.

    ``invariant`` is one of ``"shape"``, ``"hermiticity"``, ``"trace"`` or
    ``"positivity"`` and ``residual`` is the size of the violation.
    """

    def __init__(self, invariant, residual, message=None):
        self.invariant = invariant
        self.residual = float(residual)
        if message is None:
            message = f"{invariant} residual {self.residual:.3g}"
        super().__init__(message)


def pauli(alpha):
    """Return sigma_alpha, with sigma_0 the 2x2 identity."""
    if alpha not in (0, 1, 2, 3):
        raise IndexError(f"Pauli index must be 0..3, got {alpha!r}")
    return _PAULI[alpha].copy()


def kron(a, b):
    """Tensor product with ``a`` as the slow index."""
    a = np.asarray(a)
    b = np.asarray(b)
    dim = a.shape[0] * b.shape[0]
    if dim > MAX_DIM:
        raise ValueError(f"tensor product dimension {dim} exceeds {MAX_DIM}")
    return np.kron(a, b)


def pauli_product(*indices):
    """sigma_a (x) sigma_b (x) ... for the given Pauli indices."""
    out = np.ones((1, 1), dtype=complex)
    for alpha in indices:
        out = kron(out, pauli(alpha))
    return out


def n_qubits(m):
    dim = np.shape(m)[0]
    n = dim.bit_length() - 1
    if dim < 2 or 1 << n != dim:
        raise ValueError(f"dimension {dim} is not a power of two")
    return n


def partial_trace(rho, traced_qubit):
    """Trace out one qubit (numbered from 1) of a multi-qubit operator.

    The remaining qubits keep their relative order.
    """
    rho = np.asarray(rho)
    n = n_qubits(rho)
    if not 1 <= traced_qubit <= n:
        raise IndexError(f"qubit index must be in 1..{n}, got {traced_qubit!r}")
    k = traced_qubit - 1
    t = rho.reshape((2,) * (2 * n))
    t = np.trace(t, axis1=k, axis2=n + k)
    d = rho.shape[0] // 2
    return t.reshape(d, d)


def permute_qubits(rho, order):
    """Relabel qubits: qubit ``j`` of the result is qubit ``order[j]`` of ``rho``.

    ``order`` uses 1-based labels, e.g. ``(2, 1, 3)`` swaps qubits 1 and 2.
    """
    rho = np.asarray(rho)
    n = n_qubits(rho)
    order = tuple(int(q) for q in order)
    if sorted(order) != list(range(1, n + 1)):
        raise ValueError(f"{order} is not a permutation of 1..{n}")
    axes = [q - 1 for q in order]
    t = rho.reshape((2,) * (2 * n)).transpose(axes + [n + a for a in axes])
    return t.reshape(rho.shape)


def _q3_major_order():
    order = []
    for n in range(8):
        q3, q1, q2 = (n >> 2) & 1, (n >> 1) & 1, n & 1
        order.append(4 * q1 + 2 * q2 + q3)
    return np.array(order)


Q3_MAJOR = _q3_major_order()


def q3_major(rho):
    """Reindex an 8x8 operator so the basis reads ``|q3 q1 q2>``.

    Closed-form expressions for three-qubit X states are written in this
    ordering: entry (1, 5) couples ``|000>`` with ``|001>``, and the 4x4
    blocks of fixed qubit-3 values sit on the block diagonal.
    """
    rho = np.asarray(rho)
    if rho.shape != (8, 8):
        raise ValueError("q3_major expects an 8x8 operator")
    return rho[np.ix_(Q3_MAJOR, Q3_MAJOR)]


def hs_inner(a, b):
    """Hilbert-Schmidt inner product Tr(a^dagger b)."""
    return np.vdot(a, b)


def hs_norm_sq(a):
    """Squared Hilbert-Schmidt norm Tr(a^dagger a)."""
    a = np.asarray(a)
    return float(np.vdot(a, a).real)


def hermiticity_residual(m):
    m = np.asarray(m)
    return float(np.max(np.abs(m - m.conj().T)))


def jacobi_eigh(m, tol=1e-13, max_sweeps=100):
    """Eigen-decomposition of a Hermitian matrix by cyclic Jacobi rotations.

    Returns ``(w, v)`` with ascending real eigenvalues ``w`` and the
    matching orthonormal eigenvectors as the columns of ``v``.
    """
    a = np.array(m, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("expected a square matrix")
    if hermiticity_residual(a) > ATOL:
        raise ValueError("matrix is not Hermitian")
    a = 0.5 * (a + a.conj().T)
    n = a.shape[0]
    v = np.eye(n, dtype=complex)
    scale = max(1.0, float(np.linalg.norm(a)))
    offdiag = ~np.eye(n, dtype=bool)
    for _ in range(max_sweeps):
        if np.linalg.norm(a[offdiag]) <= tol * scale:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                mod = abs(apq)
                if mod < 1e-300:
                    continue
                phase = apq / mod
                theta = 0.5 * np.arctan2(2.0 * mod, (a[q, q] - a[p, p]).real)
                c, s = np.cos(theta), np.sin(theta)
                # rotation J = diag(1, conj(phase)) @ [[c, s], [-s, c]] on (p, q)
                jpp, jpq = c, s
                jqp, jqq = -s * np.conj(phase), c * np.conj(phase)
                colp = a[:, p].copy()
                colq = a[:, q].copy()
                a[:, p] = colp * jpp + colq * jqp
                a[:, q] = colp * jpq + colq * jqq
                rowp = a[p, :].copy()
                rowq = a[q, :].copy()
                a[p, :] = np.conj(jpp) * rowp + np.conj(jqp) * rowq
                a[q, :] = np.conj(jpq) * rowp + np.conj(jqq) * rowq
                a[p, q] = a[q, p] = 0.0
                vp = v[:, p].copy()
                vq = v[:, q].copy()
                v[:, p] = vp * jpp + vq * jqp
                v[:, q] = vp * jpq + vq * jqq
    w = np.diag(a).real
    idx = np.argsort(w, kind="stable")
    return w[idx], v[:, idx]


def hermitian_eigenvalues(m):
    """Ascending eigenvalues of a Hermitian matrix."""
    return jacobi_eigh(m)[0]


def validate_density_matrix(rho, dims=(2, 4, 8), atol=ATOL):
    """Check shape, hermiticity, unit trace and positivity.

    Returns the input as a complex array; raises :class:`InvalidStateError`
    naming the first violated invariant.
    """
    rho = np.asarray(rho, dtype=complex)
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1] or rho.shape[0] not in dims:
        raise InvalidStateError("shape", 0.0, f"unsupported shape {rho.shape}")
    herm = hermiticity_residual(rho)
    if herm > atol:
        raise InvalidStateError("hermiticity", herm)
    tr = abs(np.trace(rho) - 1.0)
    if tr > atol:
        raise InvalidStateError("trace", tr)
    lowest = hermitian_eigenvalues(rho)[0]
    if lowest < -atol:
        raise InvalidStateError("positivity", -lowest)
    return rho


def is_psd(m, atol=ATOL):
    return bool(hermitian_eigenvalues(m)[0] >= -atol)
