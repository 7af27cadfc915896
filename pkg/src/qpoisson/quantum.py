"""Twisted Koszul complex of quantum affine space and its cochain partners.

``S_Q V`` has generators ``v_1..v_n`` with ``v_i v_j = q**a_ij v_j v_i`` and
PBW basis ``v**alpha = v_1**alpha_1 ... v_n**alpha_n``.

Chains of ``K^sigma`` are dicts ``{QChainBasis: LaurentPoly}``.  Cochains
are dicts ``{QCochainBasis: LaurentPoly}``; the key ``(S, alpha)`` stands for
the functional ``v_S -> v**alpha`` in ``(L, D)`` and for
``v**alpha (x) (v_S)'`` in the dual complex ``(U (x) Lambda', Delta)``.
Which one is meant is decided by the function applied to it.
"""

from functools import lru_cache
from typing import NamedTuple

from .algebra import (
    ONE, ZERO, LaurentPoly, QFraction, is_generically_zero, qpow, unit, vadd, vsub,
    multi_indices, binary_below,
)


class QChainBasis(NamedTuple):
    alpha: tuple
    gamma: tuple


class QCochainBasis(NamedTuple):
    wedge: tuple
    alpha: tuple


def _add(chain, key, coeff):
    v = chain.get(key, 0) + coeff
    if v:
        chain[key] = v
    else:
        chain.pop(key, None)


def scaling_exponents(A):
    """Exponents ``e`` of the canonical scaling automorphism, ``p_i = q**e_i``
    where ``p_i = prod_j q_ji``."""
    return tuple(A.col_sum(i) for i in range(A.n))


def left_mul_exp(A, i, alpha):
    """``v_i v**alpha = q**e v**(alpha + eps_i)``; returns ``e``."""
    return sum(A.a[i][l] * alpha[l] for l in range(i))


def right_mul_exp(A, i, alpha):
    """``v**alpha v_i = q**e v**(alpha + eps_i)``; returns ``e``."""
    return sum(A.a[l][i] * alpha[l] for l in range(i + 1, A.n))


def omega_Q(A, alpha, gamma, i):
    """Coefficient of ``v**(alpha+eps_i) (x) v**(gamma-eps_i)`` in
    ``d(v**alpha (x) v**gamma)``."""
    if not 0 <= i < A.n:
        raise IndexError(f"generator index {i} out of range for n = {A.n}")
    if not gamma[i]:
        return ZERO
    sign = -1 if sum(gamma[:i]) % 2 else 1
    a = A.a
    prefactor = sum(a[k][i] * gamma[k] for k in range(i)) \
        + sum(a[k][i] * alpha[k] for k in range(i + 1, A.n))
    p_i = scaling_exponents(A)[i]
    twist = p_i + sum(a[i][k] * (alpha[k] + gamma[k]) for k in range(A.n))
    return sign * qpow(prefactor) * (ONE - qpow(twist))


def koszul_d(A, chain):
    out = {}
    for (alpha, gamma), c in chain.items():
        for i in range(A.n):
            w = omega_Q(A, alpha, gamma, i)
            if w:
                e = unit(A.n, i)
                _add(out, QChainBasis(vadd(alpha, e), vsub(gamma, e)), c * w)
    return out


def _commutes_twisted(A, i, rho):
    # p_i v_i v**rho == v**rho v_i  (both sides are a q-power times v**(rho+eps_i))
    e = scaling_exponents(A)[i]
    lhs = qpow(e + left_mul_exp(A, i, rho))
    rhs = qpow(right_mul_exp(A, i, rho))
    return is_generically_zero(lhs - rhs)


def in_C_sigma(A, rho):
    """Multidegrees whose homogeneous component of ``K^sigma`` is not acyclic."""
    return all(rho[i] == 0 or _commutes_twisted(A, i, rho) for i in range(A.n))


def norm_bars(A, rho):
    return sum(1 for k in range(A.n) if rho[k] and not _commutes_twisted(A, k, rho))


@lru_cache(maxsize=1 << 16)
def homotopy_q(A, b):
    """Contracting homotopy on the component of ``b``; coefficients are
    :class:`QFraction`.

    The sum runs over indices where the relevant ``Omega_Q`` is nonzero;
    these are exactly the indices counted by :func:`norm_bars`.
    """
    alpha, beta = b
    rho = vadd(alpha, beta)
    if in_C_sigma(A, rho):
        return {}
    m = norm_bars(A, rho)
    assert m > 0
    out = {}
    for i in range(A.n):
        if beta[i] == 1 or alpha[i] == 0:
            continue
        e = unit(A.n, i)
        a2, b2 = vsub(alpha, e), vadd(beta, e)
        w = omega_Q(A, a2, b2, i)
        if not w:
            continue
        _add(out, QChainBasis(a2, b2), QFraction(ONE, w * m))
    return out


def twisted_hh_basis(A, k, bound):
    """Closed-form basis of twisted Hochschild homology in index ``k``,
    truncated to total degree ``<= bound``."""
    out = []
    for rho in multi_indices(A.n, bound):
        if in_C_sigma(A, rho):
            for gamma in binary_below(rho, k):
                out.append(QChainBasis(vsub(rho, gamma), gamma))
    return out


def hh_cohomology_basis(A, k, bound):
    """Hochschild cohomology classes in index ``k`` transported from the
    ``n - k`` homology basis; keys are cochain coordinates ``(S, alpha)``
    with ``S`` the complement of ``gamma``."""
    out = []
    for alpha, gamma in twisted_hh_basis(A, A.n - k, bound):
        wedge = tuple(i for i in range(A.n) if not gamma[i])
        out.append(QCochainBasis(wedge, alpha))
    return out


def theta(A, wedge):
    """The unit ``prod_s prod_{k < i_s, k not in wedge} (-q_{i_s,k})``."""
    if any(x >= y for x, y in zip(wedge, wedge[1:])):
        raise ValueError(f"wedge {wedge} is not strictly increasing")
    ws = set(wedge)
    count, e = 0, 0
    for i in wedge:
        for k in range(i):
            if k not in ws:
                count += 1
                e += A.a[i][k]
    return LaurentPoly({e: (-1) ** count})


def _insert(wedge, j):
    """Position (0-based) of ``j`` in ``wedge + {j}`` and the new wedge."""
    t = sum(1 for s in wedge if s < j)
    return t, wedge[:t] + (j,) + wedge[t:]


def cochain_D(A, cochain):
    """Differential of ``L = Hom(Lambda_Q V, U)``."""
    a = A.a
    out = {}
    for (S, alpha), c in cochain.items():
        for j in range(A.n):
            if j in S:
                continue
            t, I = _insert(S, j)
            before = sum(a[s][j] for s in I[:t])
            after = sum(a[j][s] for s in I[t + 1:])
            coeff = qpow(before + left_mul_exp(A, j, alpha)) - qpow(after + right_mul_exp(A, j, alpha))
            if t % 2:
                coeff = -coeff
            if coeff:
                _add(out, QCochainBasis(I, vadd(alpha, unit(A.n, j))), c * coeff)
    return out


def delta_dual(A, cochain):
    """Differential of ``U (x) (Lambda_Q V)'`` transported from ``d``."""
    a = A.a
    p = scaling_exponents(A)
    out = {}
    for (S, alpha), c in cochain.items():
        J = tuple(j for j in range(A.n) if j not in S)
        theta_S = theta(A, S)
        for t, j in enumerate(J):
            before = sum(a[s][j] for s in J[:t])
            after = sum(a[j][s] for s in J[t + 1:])
            coeff = qpow(before + right_mul_exp(A, j, alpha)) \
                - qpow(after + p[j] + left_mul_exp(A, j, alpha))
            if t % 2:
                coeff = -coeff
            if not coeff:
                continue
            _, I = _insert(S, j)
            coeff = coeff * theta(A, I) * theta_S ** -1
            _add(out, QCochainBasis(I, vadd(alpha, unit(A.n, j))), c * coeff)
    return out


def phi3(cochain):
    """``a (x) phi  ->  (v_S -> phi(v_S) a)``: the identity on coordinates."""
    return dict(cochain)


def phi3_inverse(cochain):
    return dict(cochain)


def phi2(A, chain):
    """``v**alpha (x) v_J  ->  Theta(S) v**alpha (x) (v_S)'`` with ``S`` the
    complement of ``J``."""
    out = {}
    for (alpha, gamma), c in chain.items():
        S = tuple(i for i in range(A.n) if not gamma[i])
        _add(out, QCochainBasis(S, alpha), c * theta(A, S))
    return out
