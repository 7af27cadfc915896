"""Exact checks of every identity relating the five complexes.

Each check returns a :class:`CheckResult`; a failing check carries the first
counterexample as ``(degree, index, basis element)`` text.
"""

import random
from dataclasses import dataclass

from .algebra import (
    ONE, semiclassical_limit, multi_indices, binary_below, vadd, vsub,
)
from .complexes import (
    koszul_complex, hochschild_cochain_complex, dual_complex, poisson_chain_complex,
    poisson_cochain_complex, shift_down,
)
from .engine import homology_dim
from . import quantum as qm
from . import poisson as pm


@dataclass
class CheckResult:
    name: str
    passed: bool
    cases: int
    witness: str = None

    def to_dict(self):
        return {"name": self.name, "passed": self.passed, "cases": self.cases,
                "witness": self.witness}


class _Check:
    def __init__(self, name):
        self.name, self.cases, self.witness = name, 0, None

    def record(self, ok, witness):
        self.cases += 1
        if not ok and self.witness is None:
            self.witness = witness()
        return ok

    def result(self):
        return CheckResult(self.name, self.witness is None, self.cases, self.witness)


def _where(spec, degree, index, b):
    return f"degree {degree}, index {index}, element {spec.label(b)}"


def _apply(spec, chain):
    out = {}
    for b, c in chain.items():
        for key, v in spec.differential(b).items():
            pm._add(out, key, c * v)
    return out


def _apply_linear(f, chain):
    out = {}
    for b, c in chain.items():
        for key, v in f(b).items():
            pm._add(out, key, c * v)
    return out


def _negate(chain, sign):
    return {k: sign * v for k, v in chain.items()} if sign == -1 else dict(chain)


def check_square_zero(spec, bound):
    chk = _Check(f"{spec.name}: d∘d = 0")
    for degree in spec.degrees(bound):
        for k in range(spec.top + 1):
            for b in spec.basis(degree, k):
                dd = _apply(spec, spec.differential(b))
                chk.record(not dd, lambda: _where(spec, degree, k, b) + " has d∘d ≠ 0")
    return chk.result()


def check_homotopy(spec, homotopy, in_c, bound, name):
    """``d h + h d = id`` on every component off ``C``."""
    chk = _Check(name)
    for rho in spec.degrees(bound):
        if in_c(rho):
            continue
        for k in range(spec.top + 1):
            for b in spec.basis(rho, k):
                lhs = _apply(spec, homotopy(b))
                for key, v in _apply_linear(homotopy, spec.differential(b)).items():
                    pm._add(lhs, key, v)
                chk.record(lhs == {b: 1}, lambda: _where(spec, rho, k, b) + " has dh+hd ≠ id")
    return chk.result()


def check_poisson_square(A, bound):
    """``dagger∘delta = (-1)^(k+1) ∂∘dagger`` with ``∂`` the two-sum boundary."""
    chi = poisson_cochain_complex(A)
    chk = _Check("†∘δ = (-1)^(k+1) ∂∘†")
    for degree in chi.degrees(bound):
        for k in range(A.n + 1):
            for b in chi.basis(degree, k):
                S, alpha = b
                P = {S: pm.Poly.monomial(alpha)}
                lhs = pm.dagger(A, pm.poisson_coboundary(A, P, k), k + 1)
                rhs = pm.boundary_general_chain(A, pm.dagger(A, P, k))
                chk.record(lhs == _negate(rhs, (-1) ** (k + 1)),
                           lambda: _where(chi, degree, k, b))
    return chk.result()


def check_quantum_square(A, bound):
    """``phi3∘Delta = (-1)^(k+1) D∘phi3``, exactly over Q[q, 1/q]."""
    spec = hochschild_cochain_complex(A)
    chk = _Check("Φ3∘Δ = (-1)^(k+1) D∘Φ3")
    for degree in spec.degrees(bound):
        for k in range(A.n + 1):
            for b in spec.basis(degree, k):
                c = {b: ONE}
                lhs = qm.phi3(qm.delta_dual(A, c))
                rhs = qm.cochain_D(A, qm.phi3(c))
                chk.record(lhs == _negate(rhs, (-1) ** (k + 1)),
                           lambda: _where(spec, degree, k, b))
    return chk.result()


def check_transport(A, bound):
    """``Delta∘Phi2 = Phi2∘d``: the dual complex is ``K^sigma`` in new coordinates."""
    spec = koszul_complex(A)
    chk = _Check("Δ∘Φ2 = Φ2∘d")
    for rho in spec.degrees(bound):
        for k in range(A.n + 1):
            for b in spec.basis(rho, k):
                lhs = qm.delta_dual(A, qm.phi2(A, {b: ONE}))
                rhs = qm.phi2(A, qm.koszul_d(A, {b: ONE}))
                chk.record(lhs == rhs, lambda: _where(spec, rho, k, b))
    return chk.result()


def check_boundary_forms(A, bound):
    """The two-sum boundary on coordinate forms is minus the Omega form."""
    spec = poisson_chain_complex(A)
    chk = _Check("two-sum ∂ = −(Ω-form ∂)")
    for rho in spec.degrees(bound):
        for k in range(A.n + 1):
            for b in spec.basis(rho, k):
                x = pm.poisson_boundary(A, {b: 1})
                y = pm.boundary_general_chain(A, {b: 1})
                chk.record(y == _negate(x, -1), lambda: _where(spec, rho, k, b))
    return chk.result()


def check_c_sets(A, bound):
    chk = _Check("C = C^σ")
    for rho in multi_indices(A.n, bound):
        chk.record(pm.in_C(A, rho) == qm.in_C_sigma(A, rho),
                   lambda: f"degree {rho}: in_C={pm.in_C(A, rho)}, in_C_sigma={qm.in_C_sigma(A, rho)}")
        chk.record(pm.poisson_norm(A, rho) == qm.norm_bars(A, rho),
                   lambda: f"degree {rho}: norms differ")
    return chk.result()


def check_omega_bridge(A, bound):
    chk = _Check("Ω = scl(Ω_Q)")
    for rho in multi_indices(A.n, bound):
        for beta in binary_below(rho):
            alpha = vsub(rho, beta)
            for i in range(A.n):
                if beta[i]:
                    w = pm.omega_semiclassical(A, alpha, beta, i)
                    s = semiclassical_limit(qm.omega_Q(A, alpha, beta, i))
                    chk.record(w == s, lambda: f"alpha {alpha}, beta {beta}, i {i + 1}: {w} ≠ {s}")
    return chk.result()


def cochain_degree(b):
    S, alpha = b
    return tuple(a - (i in S) for i, a in enumerate(alpha))


def closed_form_counts(basis_fn, A, bound, degree_of):
    counts = {}
    for k in range(A.n + 1):
        for b in basis_fn(A, k, bound):
            key = (degree_of(b), k)
            counts[key] = counts.get(key, 0) + 1
    return counts


def check_closed_form(spec, counts, bound, name):
    chk = _Check(name)
    for degree in spec.degrees(bound):
        for k in range(spec.top + 1):
            d = homology_dim(spec, degree, k)
            expected = counts.get((degree, k), 0)
            chk.record(d == expected,
                       lambda: f"degree {degree}, index {k}: engine {d}, closed form {expected}")
    return chk.result()


def check_closed_forms(A, bound):
    chain_deg = lambda b: vadd(*b)
    out = [
        check_closed_form(koszul_complex(A),
                          closed_form_counts(qm.twisted_hh_basis, A, bound, chain_deg),
                          bound, "HH_*(U, σU): closed form = engine"),
        check_closed_form(hochschild_cochain_complex(A),
                          closed_form_counts(qm.hh_cohomology_basis, A, bound, cochain_degree),
                          bound, "HH^*(U): closed form = engine"),
        check_closed_form(poisson_chain_complex(A),
                          closed_form_counts(pm.hp_basis, A, bound, chain_deg),
                          bound, "HP_*(R, M): closed form = engine"),
        check_closed_form(poisson_cochain_complex(A),
                          closed_form_counts(pm.hp_cohomology_basis, A, bound,
                                             lambda b: shift_down(vadd(*b))),
                          bound, "HP^*(R): closed form = engine"),
    ]
    return out


def check_duality(chain_spec, cochain_spec, bound, name):
    """``dim H_{n-k}`` at ``rho`` equals ``dim H^k`` at ``rho - 1``."""
    chk = _Check(name)
    n = chain_spec.top
    for rho in chain_spec.degrees(bound):
        for k in range(n + 1):
            h = homology_dim(chain_spec, rho, n - k)
            c = homology_dim(cochain_spec, shift_down(rho), k)
            chk.record(h == c, lambda: f"degree {rho}, index {n - k}: homology {h}, "
                                      f"cohomology {c} at {shift_down(rho)}")
    return chk.result()


def check_top_class(A):
    chk = _Check("top class 1 ⊗ v1∧…∧vn survives")
    spec = koszul_complex(A)
    top = (1,) * A.n
    b = qm.QChainBasis((0,) * A.n, top)
    chk.record(b in qm.twisted_hh_basis(A, A.n, A.n), lambda: "missing from closed form")
    chk.record(homology_dim(spec, top, A.n) == 1, lambda: f"degree {top}, index {A.n}: dim ≠ 1")
    return chk.result()


# ---------------------------------------------------------------------------
# randomized algebraic checks


def random_poly(rng, n, max_deg=3, terms=3):
    out = pm.Poly(n)
    for _ in range(terms):
        alpha = [0] * n
        for _ in range(rng.randint(0, max_deg)):
            alpha[rng.randrange(n)] += 1
        out = out + pm.Poly.monomial(alpha, rng.randint(-3, 3))
    return out


def check_bracket_axioms(A, rng, samples=20):
    chk = _Check("bracket: antisymmetry, Jacobi, Leibniz")
    br = lambda f, g: pm.bracket(A, f, g)
    for _ in range(samples):
        f, g, h = (random_poly(rng, A.n) for _ in range(3))
        chk.record(br(f, g) == -br(g, f), lambda: f"antisymmetry fails on {f}, {g}")
        jac = br(f, br(g, h)) + br(g, br(h, f)) + br(h, br(f, g))
        chk.record(not jac, lambda: f"Jacobi fails on {f}, {g}, {h}")
        chk.record(br(f, g * h) == br(f, g) * h + g * br(f, h),
                   lambda: f"Leibniz fails on {f}, {g}, {h}")
    return chk.result()


def check_module_axioms(A, rng, bound, samples=20):
    chk = _Check("M is a Poisson module; twisted relation holds")
    mb = lambda x, a: pm.module_bracket(A, x, a)
    br = lambda f, g: pm.bracket(A, f, g)
    for _ in range(samples):
        x, a, b = (random_poly(rng, A.n) for _ in range(3))
        chk.record(mb(mb(x, a), b) - mb(mb(x, b), a) == mb(x, br(a, b)),
                   lambda: f"Lie module axiom fails on {x}, {a}, {b}")
        chk.record(x * br(a, b) == mb(x, a) * b - mb(x * b, a),
                   lambda: f"compatibility axiom fails on {x}, {a}, {b}")
        chk.record(mb(x, a * b) == mb(x, a) * b + mb(x, b) * a,
                   lambda: f"derivation axiom fails on {x}, {a}, {b}")
    for alpha in multi_indices(A.n, bound):
        m = pm.Poly.monomial(alpha)
        for i in range(A.n):
            Xi = pm.Poly.var(A.n, i)
            rhs = -br(Xi, m) + Xi * m * A.row_sum(i)
            chk.record(mb(m, Xi) == rhs, lambda: f"twisted relation fails on X^{alpha}, X{i + 1}")
    return chk.result()


# ---------------------------------------------------------------------------


def run_suite(A, bound, seed=0):
    """Every identity, in a fixed order."""
    rng = random.Random(seed)
    K, L, Dl = koszul_complex(A), hochschild_cochain_complex(A), dual_complex(A)
    P, Pg, X = poisson_chain_complex(A), poisson_chain_complex(A, general=True), poisson_cochain_complex(A)
    results = [check_square_zero(s, bound) for s in (K, L, Dl, P, Pg, X)]
    results.append(check_homotopy(K, lambda b: qm.homotopy_q(A, b), lambda r: qm.in_C_sigma(A, r),
                                  bound, "d h_Q + h_Q d = id off C^σ"))
    results.append(check_homotopy(P, lambda b: pm.homotopy_p(A, b), lambda r: pm.in_C(A, r),
                                  bound, "∂h + h∂ = id off C"))
    results.append(check_poisson_square(A, bound))
    results.append(check_quantum_square(A, bound))
    results.append(check_transport(A, bound))
    results.append(check_boundary_forms(A, bound))
    results.append(check_c_sets(A, bound))
    results.append(check_omega_bridge(A, bound))
    results.extend(check_closed_forms(A, bound))
    results.append(check_duality(P, X, bound, "HP_{n-k}(R,M) ≅ HP^k(R)"))
    results.append(check_duality(K, L, bound, "HH_{n-k}(U,σU) ≅ HH^k(U)"))
    results.append(check_top_class(A))
    results.append(check_bracket_axioms(A, rng))
    results.append(check_module_axioms(A, rng, bound))
    return results
