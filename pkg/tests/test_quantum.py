import pytest
from hypothesis import given, settings

from qpoisson import quantum as qm
from qpoisson.algebra import (
    ONE, Q, ZERO, QFraction, binary_below, block_matrix, validate_skew, vsub,
)
from qpoisson.quantum import QChainBasis, QCochainBasis

from conftest import EX2 as A, skew_matrices

ZERO_A = validate_skew([[0, 0], [0, 0]])


def test_scaling_exponents():
    assert qm.scaling_exponents(A) == (-1, 1)
    assert qm.scaling_exponents(ZERO_A) == (0, 0)
    assert qm.scaling_exponents(block_matrix([[0, 3], [-3, 0]])) == (0, 0, 0, 0)


@pytest.mark.parametrize("alpha, gamma, i, expected", [
    ((0, 0), (1, 1), 0, ZERO),
    ((1, 0), (1, 0), 0, ONE - Q ** -1),
    ((3, 2), (0, 1), 0, ZERO),
])
def test_omega_q(alpha, gamma, i, expected):
    assert qm.omega_Q(A, alpha, gamma, i) == expected


def test_omega_q_index_out_of_range():
    with pytest.raises(IndexError):
        qm.omega_Q(A, (0, 0), (1, 1), 2)


def test_koszul_d_examples():
    assert qm.koszul_d(A, {QChainBasis((2, 1), (0, 0)): ONE}) == {}
    assert qm.koszul_d(A, {QChainBasis((0, 0), (1, 1)): ONE}) == {}
    assert qm.koszul_d(A, {QChainBasis((1, 0), (1, 0)): ONE}) == \
        {QChainBasis((2, 0), (0, 0)): ONE - Q ** -1}


def test_c_sigma_membership():
    assert qm.in_C_sigma(A, (1, 1))
    assert qm.in_C_sigma(A, (0, 0))
    assert not qm.in_C_sigma(A, (1, 0))


def test_norm_bars():
    assert qm.norm_bars(A, (1, 1)) == 0
    assert qm.norm_bars(A, (1, 0)) == 1
    assert qm.norm_bars(A, (2, 0)) == 1


def test_homotopy_q_examples():
    assert qm.homotopy_q(A, QChainBasis((0, 0), (1, 1))) == {}
    assert qm.homotopy_q(A, QChainBasis((1, 0), (0, 0))) == \
        {QChainBasis((0, 0), (1, 0)): QFraction(ONE, ONE - Q ** -1)}
    # all alpha_i = 0 off C^sigma
    assert qm.homotopy_q(A, QChainBasis((0, 0), (1, 0))) == {}


def test_twisted_hh_basis():
    assert set(qm.twisted_hh_basis(A, 1, 2)) == {
        QChainBasis((0, 1), (1, 0)), QChainBasis((1, 0), (0, 1))}
    # A = 0: every (alpha, gamma) with |gamma| = k
    assert len(qm.twisted_hh_basis(ZERO_A, 1, 2)) == 2 * 1 + 2 * 2


@given(skew_matrices())
def test_top_class_always_present(B):
    top = QChainBasis((0,) * B.n, (1,) * B.n)
    assert top in qm.twisted_hh_basis(B, B.n, B.n)


def test_theta():
    assert qm.theta(A, ()) == ONE
    assert qm.theta(A, (0, 1)) == ONE
    assert qm.theta(A, (1,)) == -Q ** -1
    with pytest.raises(ValueError):
        qm.theta(A, (1, 0))


def test_cochain_d_examples():
    assert qm.cochain_D(A, {QCochainBasis((0, 1), (2, 3)): ONE}) == {}
    assert qm.cochain_D(A, {QCochainBasis((), (0, 0)): ONE}) == {}
    assert qm.cochain_D(A, {QCochainBasis((), (1, 0)): ONE}) == \
        {QCochainBasis((1,), (1, 1)): Q ** -1 - ONE}


def test_delta_dual_examples():
    assert qm.delta_dual(A, {QCochainBasis((0, 1), (1, 1)): ONE}) == {}
    # (S = {}, alpha = 0) is 1 (x) v1^v2 under Phi2, a cycle of d
    assert qm.delta_dual(A, {QCochainBasis((), (0, 0)): ONE}) == {}
    # a single missing generator j contributes (1 - p_j)
    p = qm.scaling_exponents(A)
    assert qm.delta_dual(A, {QCochainBasis((0,), (0, 0)): ONE}) == \
        {QCochainBasis((0, 1), (0, 1)): ONE - Q ** p[1]}


def test_phi3_round_trip():
    c = {QCochainBasis((0,), (1, 2)): ONE + Q}
    assert qm.phi3_inverse(qm.phi3(c)) == c


@settings(max_examples=15, deadline=None)
@given(skew_matrices(max_n=3))
def test_quantum_identities(B):
    # d^2 = 0, D^2 = 0, Delta^2 = 0, the Phi3 sign rule and Phi2 transport
    for rho in ((1,) * B.n, (2,) + (1,) * (B.n - 1), (0,) * (B.n - 1) + (3,)):
        for gamma in binary_below(rho):
            b = QChainBasis(vsub(rho, gamma), gamma)
            assert qm.koszul_d(B, qm.koszul_d(B, {b: ONE})) == {}
            assert qm.delta_dual(B, qm.phi2(B, {b: ONE})) == qm.phi2(B, qm.koszul_d(B, {b: ONE}))
            S = tuple(i for i in range(B.n) if not gamma[i])
            c = {QCochainBasis(S, b.alpha): ONE}
            assert qm.cochain_D(B, qm.cochain_D(B, c)) == {}
            assert qm.delta_dual(B, qm.delta_dual(B, c)) == {}
            sign = (-1) ** (len(S) + 1)
            lhs = qm.phi3(qm.delta_dual(B, c))
            rhs = qm.cochain_D(B, qm.phi3(c))
            assert lhs == {k: sign * v for k, v in rhs.items()}
