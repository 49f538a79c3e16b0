"""Three-qubit X states: classification, parity twirl and named families."""

import enum

import numpy as np

from . import bloch
from .linalg import ATOL, kron, pauli_product, q3_major, validate_density_matrix


class XClass(enum.Enum):
    TWO_QUBIT_X = "TwoQubitX"
    CLASS1 = "Class1"
    CLASS2 = "Class2"
    BOTH = "Both"
    NON_X = "NonX"

    def __str__(self):
        return self.value

    def includes(self, other):
        """True when a state of this class is also of class ``other``."""
        return self is other or (self is XClass.BOTH and other in (XClass.CLASS1, XClass.CLASS2))


class ClassMismatchError(ValueError):
    pass


PARITY_2 = pauli_product(3, 3)
PARITY_CLASS1 = pauli_product(3, 3, 0)
PARITY_CLASS2 = pauli_product(3, 3, 3)

_PARITY = {XClass.CLASS1: PARITY_CLASS1, XClass.CLASS2: PARITY_CLASS2}


def commutator_residual(rho, op):
    rho = np.asarray(rho)
    return float(np.max(np.abs(rho @ op - op @ rho)))


def commutator_residuals(rho):
    """Parity commutator norms keyed by the class they test."""
    rho = np.asarray(rho)
    if rho.shape == (4, 4):
        return {XClass.TWO_QUBIT_X: commutator_residual(rho, PARITY_2)}
    if rho.shape == (8, 8):
        return {c: commutator_residual(rho, p) for c, p in _PARITY.items()}
    raise ValueError(f"unsupported dimension {rho.shape[0]}")


def classify(rho, atol=ATOL):
    res = commutator_residuals(rho)
    if XClass.TWO_QUBIT_X in res:
        return XClass.TWO_QUBIT_X if res[XClass.TWO_QUBIT_X] <= atol else XClass.NON_X
    c1 = res[XClass.CLASS1] <= atol
    c2 = res[XClass.CLASS2] <= atol
    if c1 and c2:
        return XClass.BOTH
    if c1:
        return XClass.CLASS1
    if c2:
        return XClass.CLASS2
    return XClass.NON_X


def require_class(rho, target):
    found = classify(rho)
    if not found.includes(target):
        raise ClassMismatchError(f"state is {found}, expected {target}")
    return found


def twirl(rho, target):
    """Average ``rho`` with its conjugate by the parity operator of ``target``."""
    if target not in _PARITY:
        raise ValueError(f"twirl target must be Class1 or Class2, got {target}")
    p = _PARITY[target]
    rho = np.asarray(rho)
    return 0.5 * (rho + p @ rho @ p)


def twirl2(rho):
    rho = np.asarray(rho)
    return 0.5 * (rho + PARITY_2 @ rho @ PARITY_2)


def random_state(dim, rng):
    """Random full-rank density matrix ``G G^dagger / Tr(G G^dagger)``."""
    g = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    rho = g @ g.conj().T
    return rho / np.trace(rho).real


def random_x_state(target, rng, real=False):
    """Random X state of the given class.

    ``target`` is ``CLASS1``, ``CLASS2`` or ``TWO_QUBIT_X``. With ``real=True``
    all matrix entries are real.
    """
    dim = 4 if target is XClass.TWO_QUBIT_X else 8
    rho = random_state(dim, rng)
    if real:
        rho = rho.real.astype(complex)
    if target is XClass.TWO_QUBIT_X:
        return twirl2(rho)
    return twirl(rho, target)


def random_pure_state(dim, rng):
    psi = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    psi /= np.linalg.norm(psi)
    return np.outer(psi, psi.conj())


def _mixed(p, psi):
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"mixing weight p must be in [0, 1], got {p}")
    psi = np.asarray(psi, dtype=complex)
    return p / 8 * np.eye(8) + (1 - p) * np.outer(psi, psi.conj())


def ghz_mixed(p):
    """(p/8) I + (1 - p) |GHZ><GHZ| with |GHZ> = (|000> + |111>)/sqrt(2)."""
    psi = np.zeros(8)
    psi[0] = psi[7] = 1 / np.sqrt(2)
    return _mixed(p, psi)


def w_mixed(p):
    """(p/8) I + (1 - p) |W><W| with |W> = (|100> + |010> + |001>)/sqrt(3)."""
    psi = np.zeros(8)
    psi[[1, 2, 4]] = 1 / np.sqrt(3)
    return _mixed(p, psi)


def bell_type(c1, c2, c3):
    """(1/8) (I + sum_i c_i sigma_i (x) sigma_i (x) sigma_i).

    Raises :class:`InvalidStateError` when the coefficients give a matrix
    that is not positive semidefinite.
    """
    rho = np.eye(8, dtype=complex)
    for i, c in enumerate((c1, c2, c3), start=1):
        rho = rho + c * pauli_product(i, i, i)
    rho = rho / 8
    validate_density_matrix(rho)
    return rho


def family_state(family, **params):
    family = family.lower()
    if family == "ghz":
        return ghz_mixed(params.get("p", 0.0))
    if family == "w":
        return w_mixed(params.get("p", 0.0))
    if family == "bell":
        return bell_type(params.get("c1", 0.0), params.get("c2", 0.0), params.get("c3", 0.0))
    raise ValueError(f"unknown family {family!r}")


# Nonzero entries allowed in the q3-major layout, 1-based (row, col).
def _pattern(rows):
    mask = np.zeros((8, 8), dtype=bool)
    for r, row in enumerate(rows):
        for c, ch in enumerate(row.split()):
            mask[r, c] = ch == "x"
    return mask


CLASS1_PATTERN = _pattern(
    [
        "x . . x x . . x",
        ". x x . . x x .",
        ". x x . . x x .",
        "x . . x x . . x",
        "x . . x x . . x",
        ". x x . . x x .",
        ". x x . . x x .",
        "x . . x x . . x",
    ]
)
CLASS2_PATTERN = _pattern(
    [
        "x . . x . x x .",
        ". x x . x . . x",
        ". x x . x . . x",
        "x . . x . x x .",
        ". x x . x . . x",
        "x . . x . x x .",
        "x . . x . x x .",
        ". x x . x . . x",
    ]
)


def pattern_residual(rho, pattern):
    """Largest entry of ``rho`` (read in q3-major order) outside ``pattern``."""
    m = np.abs(q3_major(rho))
    return float(np.max(np.where(pattern, 0.0, m)))


def support_report(rho):
    """Residuals of the entry patterns and Fano-Bloch supports of both classes."""
    t = bloch.bloch3(rho)
    return {
        "class1_entries": pattern_residual(rho, CLASS1_PATTERN),
        "class2_entries": pattern_residual(rho, CLASS2_PATTERN),
        "class1_tensor": bloch.support_residual(t, bloch.CLASS1_SUPPORT),
        "class2_tensor": bloch.support_residual(t, bloch.CLASS2_SUPPORT),
    }


def recursion_check(rho, xclass):
    """Largest violation of the block recursion over the pairs used by ``xclass``."""
    diag = list(bloch.DIAGONAL_PAIRS)
    off = list(bloch.OFFDIAGONAL_PAIRS)
    if xclass is XClass.CLASS1:
        pairs = {g: diag for g in range(4)}
    elif xclass is XClass.CLASS2:
        pairs = {0: diag, 3: diag, 1: off, 2: off}
    elif xclass is XClass.BOTH:
        pairs = {g: diag + off for g in range(4)}
    else:
        raise ValueError(f"no recursion pairs for {xclass}")
    return bloch.recursion_residual(rho, pairs)


def with_ancilla(rho12, phi):
    """``rho12 (x) |phi><phi|`` for a normalized single-qubit vector ``phi``."""
    phi = np.asarray(phi, dtype=complex)
    return kron(rho12, np.outer(phi, phi.conj()))

