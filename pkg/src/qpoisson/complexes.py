"""The five complexes as :class:`~qpoisson.engine.ComplexSpec` instances.

Builders are memoised per matrix, so differentials and ranks computed for one
check are reused by the next.

Chain complexes are graded by the multidegree ``alpha + gamma`` in N^n.
Cochain complexes carry the Z^n grading ``alpha - chi_S``; chain degree
``rho`` corresponds to cochain degree ``rho - (1, ..., 1)`` under duality,
so the cochain window for a bound ``b`` is ``{rho - 1 : |rho| <= b}``.
"""

from functools import lru_cache
from itertools import combinations

from .algebra import ONE, indicator, multi_indices, binary_below, vadd, vsub
from .engine import ComplexSpec, QFRACTION, RATIONAL
from . import quantum as qm
from . import poisson as pm


def chain_degrees(n):
    return lambda bound: multi_indices(n, bound)


def cochain_degrees(n):
    return lambda bound: [shift_down(rho) for rho in multi_indices(n, bound)]


def shift_down(rho):
    return tuple(r - 1 for r in rho)


def shift_up(delta):
    return tuple(d + 1 for d in delta)


def _chain_basis(cls):
    def basis(rho, k):
        return [cls(vsub(rho, g), g) for g in binary_below(rho, k)]
    return basis


def _cochain_basis(n, cls):
    def basis(delta, k):
        out = []
        for S in combinations(range(n), k):
            alpha = vadd(delta, indicator(n, S))
            if min(alpha, default=0) >= 0:
                out.append(cls(S, alpha))
        return out
    return basis


def qchain_label(b):
    alpha, gamma = b
    w = "∧".join(f"v{i + 1}" for i, x in enumerate(gamma) if x) or "1"
    return f"{pm.monomial_str(alpha, 'v')} ⊗ {w}"


def qcochain_label(b):
    S, alpha = b
    w = "∧".join(f"v{i + 1}" for i in S) or "1"
    return f"({w})' -> {pm.monomial_str(alpha, 'v')}"


def pchain_label(b):
    return pm.form_str(*b)


def pcochain_label(b):
    S, alpha = b
    m = pm.monomial_str(alpha)
    w = "∧".join(f"∂{i + 1}" for i in S)
    if not w:
        return m
    return w if m == "1" else f"{m}{w}"


def _cached(f):
    return lru_cache(maxsize=None)(f)


@lru_cache(maxsize=64)
def koszul_complex(A):
    """``(K^sigma(S_Q V), d)``: twisted Hochschild homology."""
    return ComplexSpec(
        "K^sigma", QFRACTION, A.n, "homological",
        _chain_basis(qm.QChainBasis),
        _cached(lambda b: qm.koszul_d(A, {b: ONE})),
        chain_degrees(A.n), qchain_label)


@lru_cache(maxsize=64)
def hochschild_cochain_complex(A):
    """``(L, D)``: Hochschild cohomology ``HH^*(U, U)``."""
    return ComplexSpec(
        "L", QFRACTION, A.n, "cohomological",
        _cochain_basis(A.n, qm.QCochainBasis),
        _cached(lambda b: qm.cochain_D(A, {b: ONE})),
        cochain_degrees(A.n), qcochain_label)


@lru_cache(maxsize=64)
def dual_complex(A):
    """``(U (x) (Lambda_Q V)', Delta)``."""
    return ComplexSpec(
        "U⊗Λ'", QFRACTION, A.n, "cohomological",
        _cochain_basis(A.n, qm.QCochainBasis),
        _cached(lambda b: qm.delta_dual(A, {b: ONE})),
        cochain_degrees(A.n), qcochain_label)


@lru_cache(maxsize=64)
def poisson_chain_complex(A, general=False):
    """``(M (x) Omega^*, d)``; ``general=True`` uses the two-sum boundary
    formula instead of the closed monomial form."""
    if general:
        diff = lambda b: pm.boundary_general_chain(A, {b: 1})
    else:
        diff = lambda b: pm.poisson_boundary(A, {b: 1})
    return ComplexSpec(
        "M⊗Ω" + (" (two-sum)" if general else ""), RATIONAL, A.n, "homological",
        _chain_basis(pm.PChainBasis), _cached(diff), chain_degrees(A.n), pchain_label)


@lru_cache(maxsize=64)
def poisson_cochain_complex(A):
    """``(chi^*, delta)``: Poisson cohomology of R."""
    def diff(b):
        S, alpha = b
        P = {S: pm.Poly.monomial(alpha)}
        return pm.cochain_to_coords(pm.poisson_coboundary(A, P, len(S)))
    return ComplexSpec(
        "χ", RATIONAL, A.n, "cohomological",
        _cochain_basis(A.n, lambda S, alpha: (S, alpha)), _cached(diff), cochain_degrees(A.n),
        pcochain_label)
