"""Geometric (Hilbert-Schmidt) quantum discord of two- and three-qubit X states."""

from .bloch import bloch2, bloch3, inverse_bloch2, inverse_bloch3
from .discord import (
    ClassicalState,
    DiscordResult,
    KMatrix,
    closest_classical2,
    closest_classical3,
    discord2,
    discord3,
    k_eigen,
    kmatrix_class1,
    kmatrix_class2,
    kmatrix_tensor,
)
from .linalg import (
    InvalidStateError,
    hermitian_eigenvalues,
    hs_inner,
    hs_norm_sq,
    kron,
    partial_trace,
    pauli,
    permute_qubits,
    validate_density_matrix,
)
from .monogamy import MonogamyReport, monogamy_report, pairwise_discord_12, pairwise_discord_13
from .oracle import SphereGrid, oracle_discord_measurement, oracle_discord_sphere
from .statefile import StateFileError, dump_state, load_state
from .xstates import (
    ClassMismatchError,
    XClass,
    bell_type,
    classify,
    ghz_mixed,
    random_x_state,
    twirl,
    w_mixed,
)

__version__ = "0.1.0"
