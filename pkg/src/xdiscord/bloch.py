"""Fano-Bloch coefficients of two- and three-qubit operators.

``bloch2`` returns a 4x4 array ``R[a, b] = Tr(rho sigma_a (x) sigma_b)`` and
``bloch3`` a 4x4x4 array ``T[a, b, c] = Tr(rho sigma_a (x) sigma_b (x) sigma_c)``.
The inverse maps rebuild the operator from its coefficients.
"""

import itertools

import numpy as np

from .linalg import ATOL, pauli_product

_BASIS2 = np.array([pauli_product(a, b) for a, b in itertools.product(range(4), repeat=2)])
_BASIS3 = np.array(
    [pauli_product(a, b, c) for a, b, c in itertools.product(range(4), repeat=3)]
)

# Triplets (a, b, c) whose coefficient may be nonzero for each class of X state.
def _triplets(text):
    return frozenset(tuple(int(ch) for ch in word) for word in text.split())


CLASS1_SUPPORT = _triplets(
    """
    000 001 002 003 030 031 032 033
    110 111 112 113 120 121 122 123
    210 211 212 213 220 221 222 223
    300 301 302 303 330 331 332 333
    """
)
CLASS2_SUPPORT = _triplets(
    """
    000 003 011 012 021 022 030 033
    101 102 110 113 120 123 131 132
    201 202 210 213 220 223 231 232
    300 303 311 312 321 322 330 333
    """
)

# (alpha, beta) pairs linking the tripartite tensor to the qubit-3 blocks.
DIAGONAL_PAIRS = ((0, 0), (0, 3), (3, 0), (1, 2), (2, 1), (1, 1), (2, 2), (3, 3))
OFFDIAGONAL_PAIRS = ((0, 1), (0, 2), (1, 0), (2, 0), (1, 3), (2, 3), (3, 1), (3, 2))


def _traces(rho, basis, atol):
    rho = np.asarray(rho)
    vals = np.einsum("kij,ji->k", basis, rho)
    residue = float(np.max(np.abs(vals.imag)))
    if residue > atol:
        raise ValueError(f"imaginary residue {residue:.3g} in Fano-Bloch traces (non-Hermitian input?)")
    return vals.real


def bloch2(rho, atol=ATOL):
    """Two-qubit correlation matrix ``R[a, b]``."""
    if np.shape(rho) != (4, 4):
        raise ValueError("bloch2 expects a 4x4 matrix")
    return _traces(rho, _BASIS2, atol).reshape(4, 4)


def bloch3(rho, atol=ATOL):
    """Three-qubit correlation tensor ``T[a, b, c]``."""
    if np.shape(rho) != (8, 8):
        raise ValueError("bloch3 expects an 8x8 matrix")
    return _traces(rho, _BASIS3, atol).reshape(4, 4, 4)


def block_coefficients(block):
    """Complex coefficients ``Tr(block sigma_a (x) sigma_b)`` of a 4x4 block.

    Off-diagonal blocks are not Hermitian, so the coefficients are kept complex.
    """
    return np.einsum("kij,ji->k", _BASIS2, np.asarray(block)).reshape(4, 4)


def inverse_bloch2(r):
    r = np.asarray(r, dtype=float)
    return np.einsum("k,kij->ij", r.reshape(16), _BASIS2) / 4


def inverse_bloch3(t):
    """Rebuild ``(1/8) sum T[a,b,c] sigma_a (x) sigma_b (x) sigma_c``.

    Positivity of the result is not checked.
    """
    t = np.asarray(t, dtype=float)
    return np.einsum("k,kij->ij", t.reshape(64), _BASIS3) / 8


def blocks(rho):
    """Split an 8x8 operator as ``sum_ij rho^{ij} (x) |i><j|`` on qubit 3.

    Returns ``{(i, j): 4x4 block}`` with blocks acting on qubits 1 and 2.
    """
    t = np.asarray(rho).reshape(4, 2, 4, 2)
    return {(i, j): t[:, i, :, j].copy() for i in (0, 1) for j in (0, 1)}


def recursion_residual(rho, pairs=None):
    """Largest violation of the tensor/block relations

    ``T[a,b,0] = R00 + R11``, ``T[a,b,3] = R00 - R11``,
    ``T[a,b,1] = R01 + R10`` and ``T[a,b,2] = i(R01 - R10)``,

    where ``Rij`` are the block coefficients. ``pairs`` restricts the check to
    ``{gamma: [(a, b), ...]}``; by default all 16 pairs are checked for every
    gamma.
    """
    t = bloch3(rho)
    r = {ij: block_coefficients(b) for ij, b in blocks(rho).items()}
    rhs = {
        0: r[0, 0] + r[1, 1],
        3: r[0, 0] - r[1, 1],
        1: r[0, 1] + r[1, 0],
        2: 1j * (r[0, 1] - r[1, 0]),
    }
    if pairs is None:
        all_pairs = list(itertools.product(range(4), repeat=2))
        pairs = {g: all_pairs for g in range(4)}
    worst = 0.0
    for g, plist in pairs.items():
        for a, b in plist:
            worst = max(worst, abs(t[a, b, g] - rhs[g][a, b]))
    return worst


def support_residual(t, support):
    """Largest ``|T[a,b,c]|`` over triplets outside ``support``."""
    t = np.asarray(t)
    worst = 0.0
    for idx in itertools.product(range(4), repeat=3):
        if idx not in support:
            worst = max(worst, abs(t[idx]))
    return float(worst)
