"""Pairwise discords of a three-qubit state and the monogamy balance.

All discords measure qubit 1: ``D(1|23)``, ``D(1|2)`` on ``Tr_3 rho`` and
``D(1|3)`` on ``Tr_2 rho``.
"""

from dataclasses import dataclass

import numpy as np

from .discord import discord2, discord3
from .linalg import partial_trace, q3_major, validate_density_matrix
from .xstates import XClass, classify

MONOGAMY_TOL = 1e-10


@dataclass(frozen=True)
class MonogamyReport:
    d_1_23: float
    d_12: float
    d_13: float
    residual: float
    monogamous: bool
    xclass: XClass

    def as_dict(self):
        return {
            "d_1_23": self.d_1_23,
            "d_12": self.d_12,
            "d_13": self.d_13,
            "residual": self.residual,
            "monogamous": self.monogamous,
            "class": str(self.xclass),
        }


def reduced_12(rho):
    return partial_trace(rho, 3)


def reduced_13(rho):
    return partial_trace(rho, 2)


def pairwise_discord_12(rho):
    rho = validate_density_matrix(rho, dims=(8,))
    return discord2(reduced_12(rho)).value


def pairwise_discord_13(rho):
    rho = validate_density_matrix(rho, dims=(8,))
    return discord2(reduced_13(rho)).value


def _two_qubit_min(a, b, c):
    # (1/4) min(a + b, c + b): b is never the largest of the three
    return 0.25 * min(a + b, c + b)


def q_eigenvalues(rho):
    """Eigenvalues (q1, q2, q3) of K for ``Tr_3 rho`` of a class-1 state.

    The same expressions give (l1, l2, l3) for class-2 states.
    """
    m = q3_major(rho)
    r = lambda i, j: m[i - 1, j - 1]  # noqa: E731
    a = abs(r(1, 4) + r(5, 8))
    b = abs(r(2, 3) + r(6, 7))
    q1 = 4 * (a + b) ** 2
    q2 = 4 * (a - b) ** 2
    q3 = 2 * (
        (r(1, 1) + r(5, 5) - r(3, 3) - r(7, 7)).real ** 2
        + (r(2, 2) + r(6, 6) - r(4, 4) - r(8, 8)).real ** 2
    )
    return q1, q2, q3


l_eigenvalues = q_eigenvalues


def m_eigenvalues(sigma):
    """Eigenvalues (m1, m2, m3) of K for ``Tr_2 sigma`` of a class-2 state."""
    m = q3_major(sigma)
    s = lambda i, j: m[i - 1, j - 1]  # noqa: E731
    a = abs(s(1, 7) + s(2, 8))
    b = abs(s(5, 3) + s(6, 4))
    m1 = 4 * (a + b) ** 2
    m2 = 4 * (a - b) ** 2
    m3 = 2 * (
        (s(1, 1) + s(2, 2) - s(3, 3) - s(4, 4)).real ** 2
        + (s(5, 5) + s(6, 6) - s(7, 7) - s(8, 8)).real ** 2
    )
    return m1, m2, m3


def class1_p3(rho):
    """Only nonzero K eigenvalue of ``Tr_2 rho`` for a class-1 state.

    The last term comes from the qubit-3 coherences; without it the value is
    exact only when ``rho_15 + rho_26 = rho_37 + rho_48``.
    """
    m = q3_major(rho)
    r = lambda i, j: m[i - 1, j - 1]  # noqa: E731
    populations = 2 * (
        (r(1, 1) + r(2, 2) - r(3, 3) - r(4, 4)).real ** 2
        + (r(5, 5) + r(6, 6) - r(7, 7) - r(8, 8)).real ** 2
    )
    return populations + 4 * abs(r(1, 5) + r(2, 6) - r(3, 7) - r(4, 8)) ** 2


def d12_closed(rho):
    return _two_qubit_min(*q_eigenvalues(rho))


def d13_closed_class2(sigma):
    return _two_qubit_min(*m_eigenvalues(sigma))


def monogamy_report(rho):
    rho = validate_density_matrix(rho, dims=(8,))
    d123 = discord3(rho).value
    d12 = discord2(reduced_12(rho)).value
    d13 = discord2(reduced_13(rho)).value
    residual = d123 - d12 - d13
    return MonogamyReport(
        d_1_23=d123,
        d_12=d12,
        d_13=d13,
        residual=residual,
        monogamous=bool(residual >= -MONOGAMY_TOL),
        xclass=classify(rho),
    )


def violation_rate(states):
    """Fraction of ``states`` whose monogamy residual is below -tolerance."""
    reports = [monogamy_report(s) for s in states]
    if not reports:
        return 0.0
    return float(np.mean([not r.monogamous for r in reports]))
