import itertools

import numpy as np
import pytest
from hypothesis import given

from xdiscord.bloch import (
    CLASS1_SUPPORT,
    CLASS2_SUPPORT,
    block_coefficients,
    blocks,
    bloch2,
    bloch3,
    inverse_bloch2,
    inverse_bloch3,
    recursion_residual,
    support_residual,
)
from xdiscord.linalg import kron, q3_major
from xdiscord.xstates import (
    XClass,
    bell_type,
    ghz_mixed,
    random_state,
    random_x_state,
    recursion_check,
    w_mixed,
)

from .conftest import seeds


def test_bloch2_examples():
    r = bloch2(np.eye(4) / 4)
    expected = np.zeros((4, 4))
    expected[0, 0] = 1
    assert np.allclose(r, expected, atol=1e-15)

    zero = np.zeros((4, 4))
    zero[0, 0] = 1
    r = bloch2(zero)
    expected = np.zeros((4, 4))
    expected[0, 0] = expected[0, 3] = expected[3, 0] = expected[3, 3] = 1
    assert np.allclose(r, expected, atol=1e-15)


def test_bloch2_x_state_r11(rng):
    rho = random_x_state(XClass.TWO_QUBIT_X, rng)
    assert bloch2(rho)[1, 1] == pytest.approx(2 * rho[0, 3].real + 2 * rho[1, 2].real, abs=1e-14)


def test_bloch_rejects_non_hermitian():
    m = np.eye(4, dtype=complex) / 4
    m[0, 1] = 0.1
    with pytest.raises(ValueError):
        bloch2(m)
    with pytest.raises(ValueError):
        bloch3(np.eye(4))


def test_bloch3_identity():
    t = bloch3(np.eye(8) / 8)
    assert t[0, 0, 0] == pytest.approx(1)
    t[0, 0, 0] = 0
    assert np.max(np.abs(t)) == 0


def test_bloch3_ghz():
    t = bloch3(ghz_mixed(0.0))
    expected = np.zeros((4, 4, 4))
    for idx in [(0, 0, 0), (3, 3, 0), (3, 0, 3), (0, 3, 3), (1, 1, 1)]:
        expected[idx] = 1
    for idx in [(1, 2, 2), (2, 1, 2), (2, 2, 1)]:
        expected[idx] = -1
    assert np.allclose(t, expected, atol=1e-14)


def test_bloch3_bell_type():
    t = bloch3(bell_type(0.3, -0.2, 0.1))
    expected = np.zeros((4, 4, 4))
    expected[0, 0, 0] = 1
    expected[1, 1, 1], expected[2, 2, 2], expected[3, 3, 3] = 0.3, -0.2, 0.1
    assert np.allclose(t, expected, atol=1e-14)


def test_inverse_bloch3_examples():
    t = np.zeros((4, 4, 4))
    t[0, 0, 0] = 1
    assert np.allclose(inverse_bloch3(t), np.eye(8) / 8)
    rho = inverse_bloch3(bloch3(ghz_mixed(0.3)))
    assert rho[0, 0].real == pytest.approx(0.3 / 8 + 0.35, abs=1e-14)
    assert rho[7, 7].real == pytest.approx(0.3 / 8 + 0.35, abs=1e-14)
    assert rho[0, 7].real == pytest.approx(0.35, abs=1e-14)


def test_round_trips(rng):
    worst = 0.0
    for _ in range(100):
        rho = random_state(8, rng)
        worst = max(worst, np.max(np.abs(inverse_bloch3(bloch3(rho)) - rho)))
    assert worst <= 1e-12
    t = bloch3(random_state(8, rng))
    assert np.allclose(bloch3(inverse_bloch3(t)), t, atol=1e-12)
    rho2 = random_state(4, rng)
    assert np.allclose(inverse_bloch2(bloch2(rho2)), rho2, atol=1e-12)


@given(seed=seeds)
def test_tensor_bounds_and_purity(seed):
    rho = random_state(8, np.random.default_rng(seed))
    t = bloch3(rho)
    assert t[0, 0, 0] == pytest.approx(1, abs=1e-10)
    assert np.max(np.abs(t)) <= 1 + 1e-9
    purity = np.trace(rho @ rho).real
    assert np.sum(t**2) == pytest.approx(8 * purity, abs=1e-10)


def test_support_lists():
    assert len(CLASS1_SUPPORT) == 32
    assert len(CLASS2_SUPPORT) == 32
    # class 2: an even number of transverse (1, 2) indices
    for idx in itertools.product(range(4), repeat=3):
        even = sum(i in (1, 2) for i in idx) % 2 == 0
        assert (idx in CLASS2_SUPPORT) == even
        pair = idx[:2]
        same = all(i in (0, 3) for i in pair) or all(i in (1, 2) for i in pair)
        assert (idx in CLASS1_SUPPORT) == same


@given(seed=seeds)
def test_support_patterns_hold(seed):
    rng = np.random.default_rng(seed)
    t1 = bloch3(random_x_state(XClass.CLASS1, rng))
    t2 = bloch3(random_x_state(XClass.CLASS2, rng))
    assert support_residual(t1, CLASS1_SUPPORT) <= 1e-10
    assert support_residual(t2, CLASS2_SUPPORT) <= 1e-10
    # generic states do leave the support
    assert support_residual(bloch3(random_state(8, rng)), CLASS1_SUPPORT) > 1e-3


def test_blocks_of_product():
    a = random_state(4, np.random.default_rng(3))
    zero = np.diag([1.0, 0.0])
    b = blocks(kron(a, zero))
    assert np.allclose(b[0, 0], a)
    for ij in [(0, 1), (1, 0), (1, 1)]:
        assert np.allclose(b[ij], 0)


@given(seed=seeds)
def test_blocks_match_offsets(seed):
    # block rho^{ij}_{ab} is the q3-major entry (a + 4i, b + 4j)
    rho = random_state(8, np.random.default_rng(seed))
    m = q3_major(rho)
    b = blocks(rho)
    for i, j in itertools.product((0, 1), repeat=2):
        assert np.array_equal(b[i, j], m[4 * i : 4 * i + 4, 4 * j : 4 * j + 4])
    assert np.trace(b[0, 0]) + np.trace(b[1, 1]) == pytest.approx(1, abs=1e-12)


def test_class1_block_is_x_shaped(rng):
    b = blocks(random_x_state(XClass.CLASS1, rng))
    mask = np.array([[1, 0, 0, 1], [0, 1, 1, 0], [0, 1, 1, 0], [1, 0, 0, 1]], dtype=bool)
    for block in b.values():
        assert np.max(np.abs(block[~mask])) <= 1e-15


def _entry_rij(block):
    r = lambda a, b: block[a - 1, b - 1]  # noqa: E731
    return {
        (3, 0): r(1, 1) + r(2, 2) - r(3, 3) - r(4, 4),
        (0, 3): r(1, 1) - r(2, 2) + r(3, 3) - r(4, 4),
        (1, 1): r(1, 4) + r(4, 1) + r(2, 3) + r(3, 2),
        (1, 2): 1j * (r(1, 4) - r(4, 1) - r(2, 3) + r(3, 2)),
        (2, 1): 1j * (r(1, 4) - r(4, 1) + r(2, 3) - r(3, 2)),
        (2, 2): r(2, 3) + r(3, 2) - r(1, 4) - r(4, 1),
        (3, 3): r(1, 1) - r(2, 2) - r(3, 3) + r(4, 4),
    }


def _entry_tij_offdiagonal(block):
    s = lambda a, b: block[a - 1, b - 1]  # noqa: E731
    return {
        (0, 1): s(2, 1) + s(1, 2) + s(4, 3) + s(3, 4),
        (0, 2): 1j * (-s(2, 1) + s(1, 2) - s(4, 3) + s(3, 4)),
        (1, 0): s(1, 3) + s(3, 1) + s(2, 4) + s(4, 2),
        (1, 3): s(1, 3) + s(3, 1) - s(2, 4) - s(4, 2),
        (2, 0): 1j * (s(1, 3) - s(3, 1) + s(2, 4) - s(4, 2)),
        (2, 3): 1j * (s(1, 3) - s(3, 1) - s(2, 4) + s(4, 2)),
        (3, 1): s(1, 2) + s(2, 1) - s(3, 4) - s(4, 3),
        (3, 2): 1j * (s(1, 2) - s(2, 1) - s(3, 4) + s(4, 3)),
    }


@given(seed=seeds)
def test_block_coefficient_formulas(seed):
    rng = np.random.default_rng(seed)
    rho = random_x_state(XClass.CLASS1, rng)
    for block in blocks(rho).values():
        coeff = block_coefficients(block)
        assert coeff[0, 0] == pytest.approx(np.trace(block), abs=1e-14)
        for (a, b), value in _entry_rij(block).items():
            assert coeff[a, b] == pytest.approx(value, abs=1e-14)

    sigma = random_x_state(XClass.CLASS2, rng)
    b = blocks(sigma)
    for ij in [(0, 0), (1, 1)]:
        coeff = block_coefficients(b[ij])
        for (a, c), value in _entry_rij(b[ij]).items():
            assert coeff[a, c] == pytest.approx(value, abs=1e-14)
    for ij in [(0, 1), (1, 0)]:
        coeff = block_coefficients(b[ij])
        formulas = _entry_tij_offdiagonal(b[ij])
        for (a, c), value in formulas.items():
            assert coeff[a, c] == pytest.approx(value, abs=1e-14)
        # every other coefficient of an off-diagonal block vanishes
        for a, c in itertools.product(range(4), repeat=2):
            if (a, c) not in formulas:
                assert abs(coeff[a, c]) <= 1e-14


def test_recursion_examples():
    assert recursion_check(ghz_mixed(0.4), XClass.CLASS1) <= 1e-12
    assert recursion_check(w_mixed(0.2), XClass.CLASS2) <= 1e-12
    assert recursion_check(np.eye(8) / 8, XClass.BOTH) == 0


@given(seed=seeds)
def test_recursion_holds_for_all_pairs(seed):
    rng = np.random.default_rng(seed)
    # the block relations are an identity for any operator, not only X states
    assert recursion_residual(random_state(8, rng)) <= 1e-12
    assert recursion_check(random_x_state(XClass.CLASS1, rng), XClass.CLASS1) <= 1e-12
    assert recursion_check(random_x_state(XClass.CLASS2, rng), XClass.CLASS2) <= 1e-12
