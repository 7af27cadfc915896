"""Quadratic Poisson structure ``{X_i, X_j} = a_ij X_i X_j`` on Q[X_1..X_n],
the dualising module ``M`` and the Poisson (co)chain complexes.

Chains of ``M (x) Omega^*`` are dicts ``{PChainBasis: Fraction}`` where
``(alpha, beta)`` stands for ``X**alpha dX**beta``.  Cochains (skew
multiderivations) are dicts ``{wedge: Poly}`` giving the values on increasing
tuples of coordinate functions.
"""

from fractions import Fraction
from itertools import combinations, product
from typing import NamedTuple

from .algebra import unit, vadd, vsub, multi_indices, binary_below, support


class PChainBasis(NamedTuple):
    alpha: tuple
    beta: tuple


def _add(d, key, coeff):
    v = d.get(key, 0) + coeff
    if v:
        d[key] = v
    else:
        d.pop(key, None)


class Poly:
    """Polynomial over Q as ``{exponent tuple: Fraction}``."""

    __slots__ = ("n", "terms")

    def __init__(self, n, terms=None):
        self.n = n
        self.terms = {}
        for e, c in (terms or {}).items():
            _add(self.terms, tuple(e), Fraction(c))

    @classmethod
    def _raw(cls, n, terms):
        # terms already nonzero Fractions keyed by tuples
        p = cls.__new__(cls)
        p.n, p.terms = n, terms
        return p

    @classmethod
    def monomial(cls, alpha, coeff=1):
        return cls(len(alpha), {tuple(alpha): coeff})

    @classmethod
    def var(cls, n, i):
        return cls.monomial(unit(n, i))

    @classmethod
    def const(cls, n, c):
        return cls(n, {(0,) * n: c})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.terms
        return isinstance(other, Poly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def _coerce(self, other):
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.const(self.n, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms = dict(self.terms)
        for e, c in other.terms.items():
            _add(terms, e, c)
        return Poly._raw(self.n, terms)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw(self.n, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                _add(terms, vadd(e1, e2), c1 * c2)
        return Poly._raw(self.n, terms)

    __rmul__ = __mul__

    def diff(self, i):
        terms = {}
        for e, c in self.terms.items():
            if e[i]:
                terms[e[:i] + (e[i] - 1,) + e[i + 1:]] = c * e[i]
        return Poly._raw(self.n, terms)

    def __repr__(self):
        return f"Poly({self.n}, {self.terms!r})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in sorted(self.terms.items(), reverse=True):
            m = monomial_str(e)
            if m == "1":
                parts.append(str(c))
            elif c == 1:
                parts.append(m)
            elif c == -1:
                parts.append("-" + m)
            else:
                parts.append(f"{c}*{m}")
        return " + ".join(parts).replace("+ -", "- ")


def monomial_str(alpha, var="X"):
    s = "".join(f"{var}{i + 1}" + (f"^{x}" if x > 1 else "") for i, x in enumerate(alpha) if x)
    return s or "1"


def form_str(alpha, beta):
    m = monomial_str(alpha)
    w = "∧".join(f"dX{i + 1}" for i in support(beta))
    if not w:
        return m
    return w if m == "1" else m + w


# ---------------------------------------------------------------------------
# brackets


def bracket(A, f, g):
    """``{f, g}``, from ``{X**u, X**v} = (sum u_i a_ij v_j) X**(u+v)``."""
    out = Poly(A.n)
    for u, c1 in f.terms.items():
        for v, c2 in g.terms.items():
            w = sum(u[i] * A.a[i][j] * v[j] for i in range(A.n) for j in range(A.n))
            if w:
                _add(out.terms, vadd(u, v), c1 * c2 * w)
    return out


def module_coefficient(A, alpha, i):
    """``{X**alpha, X_i}_M = c X**(alpha + eps_i)``; returns ``c``."""
    return -sum(A.a[i][j] * (alpha[j] - 1) for j in range(A.n))


def module_bracket(A, m, f):
    """``{m, f}_M``: the generator formula extended to ``f`` as a derivation."""
    out = Poly(A.n)
    for alpha, c1 in m.terms.items():
        for v, c2 in f.terms.items():
            w = sum(v[i] * module_coefficient(A, alpha, i) for i in range(A.n))
            if w:
                _add(out.terms, vadd(alpha, v), c1 * c2 * w)
    return out


# ---------------------------------------------------------------------------
# chains


def omega_semiclassical(A, alpha, beta, i):
    sign = -1 if sum(beta[:i]) % 2 else 1
    return sign * sum(A.a[i][j] * (alpha[j] + beta[j] - 1) for j in range(A.n))


def poisson_boundary(A, chain):
    """``d(X**alpha dX**beta) = sum_{beta_i = 1} Omega(alpha, beta, i)
    X**(alpha+eps_i) dX**(beta-eps_i)``.

    This is the negative of :func:`boundary_general` on coordinate forms;
    both have the same homology.
    """
    out = {}
    for (alpha, beta), c in chain.items():
        for i in range(A.n):
            if beta[i]:
                w = omega_semiclassical(A, alpha, beta, i)
                if w:
                    e = unit(A.n, i)
                    _add(out, PChainBasis(vadd(alpha, e), vsub(beta, e)), c * w)
    return out


def _wedge_of_differentials(n, polys):
    """Expand ``df_1 ^ ... ^ df_k`` as ``{beta: Poly}``."""
    out = {(0,) * n: Poly.const(n, 1)}
    for f in polys:
        partials = [f.diff(i) for i in range(n)]
        nxt = {}
        for beta, coeff in out.items():
            for i, p in enumerate(partials):
                if beta[i] or not p:
                    continue
                # dX_i moves past the dX_j (j > i) already present in beta
                sign = -1 if sum(beta[i + 1:]) % 2 else 1
                key = vadd(beta, unit(n, i))
                nxt[key] = nxt.get(key, Poly(n)) + coeff * p * sign
        out = {b: p for b, p in nxt.items() if p}
    return out


def _form_to_chain(m, polys):
    """``m (x) df_1 ^ ... ^ df_k`` in coordinates ``{PChainBasis: Fraction}``."""
    n = m.n
    out = {}
    for beta, p in _wedge_of_differentials(n, polys).items():
        for e, c in (m * p).terms.items():
            _add(out, PChainBasis(e, beta), c)
    return out


def boundary_general(A, m, args):
    """Boundary of ``m (x) da_1 ^ ... ^ da_k`` computed from the defining
    two-sum formula with the module bracket and ``d{a_i, a_j}``."""
    out = {}
    k = len(args)
    for i in range(k):
        rest = args[:i] + args[i + 1:]
        sign = 1 if i % 2 == 0 else -1      # (-1)**((i+1)+1)
        for key, c in _form_to_chain(module_bracket(A, m, args[i]), rest).items():
            _add(out, key, sign * c)
    for i, j in combinations(range(k), 2):
        rest = [args[t] for t in range(k) if t not in (i, j)]
        sign = 1 if (i + j) % 2 == 0 else -1
        for key, c in _form_to_chain(m, [bracket(A, args[i], args[j])] + rest).items():
            _add(out, key, sign * c)
    return out


def boundary_general_chain(A, chain):
    """:func:`boundary_general` extended linearly over coordinate forms."""
    out = {}
    for (alpha, beta), c in chain.items():
        args = [Poly.var(A.n, i) for i in support(beta)]
        for key, v in boundary_general(A, Poly.monomial(alpha), args).items():
            _add(out, key, c * v)
    return out


def in_C(A, rho):
    return all(rho[i] == 0 or sum(A.a[i][j] * (rho[j] - 1) for j in range(A.n)) == 0
               for i in range(A.n))


def poisson_norm(A, rho):
    return sum(1 for i in range(A.n)
               if rho[i] and sum(A.a[i][j] * (rho[j] - 1) for j in range(A.n)) != 0)


def homotopy_p(A, b):
    """Contracting homotopy for :func:`poisson_boundary` off ``C``."""
    alpha, beta = b
    rho = vadd(alpha, beta)
    if in_C(A, rho):
        return {}
    m = poisson_norm(A, rho)
    assert m > 0
    out = {}
    for i in range(A.n):
        if beta[i] == 1 or alpha[i] == 0:
            continue
        e = unit(A.n, i)
        a2, b2 = vsub(alpha, e), vadd(beta, e)
        w = omega_semiclassical(A, a2, b2, i)
        if w:
            _add(out, PChainBasis(a2, b2), Fraction(1, m) / w)
    return out


def hp_basis(A, k, bound):
    out = []
    for rho in multi_indices(A.n, bound):
        if in_C(A, rho):
            for beta in binary_below(rho, k):
                out.append(PChainBasis(vsub(rho, beta), beta))
    return out


def hp_cohomology_basis(A, k, bound):
    """Representatives of ``HP^k`` on the homology side of the duality:
    ``X**alpha dX**beta`` with ``|beta| = n - k``."""
    return hp_basis(A, A.n - k, bound)


# ---------------------------------------------------------------------------
# multiderivations


def _perm_sign(seq):
    inv = sum(1 for x, y in combinations(seq, 2) if x > y)
    return -1 if inv % 2 else 1


def eval_on_generators(P, idx):
    """``P(X_{i_1}, ..., X_{i_k})`` from the stored increasing-tuple values."""
    if len(set(idx)) < len(idx):
        return None
    key = tuple(sorted(idx))
    val = P.get(key)
    if val is None:
        return None
    return val if _perm_sign(idx) == 1 else -val


def eval_multiderivation(P, args, n=None):
    """Evaluate the skew multiderivation ``P`` (values on coordinate tuples)
    on arbitrary polynomials, via the chain rule in each slot."""
    k = _arity(P)
    if k is not None and len(args) != k:
        raise ValueError(f"multiderivation of arity {k} applied to {len(args)} arguments")
    if n is None:
        n = args[0].n if args else next(iter(P.values())).n
    out = Poly(n)
    if not args:
        return out + P.get((), Poly(n))
    partials = []
    for f in args:
        nz = [(i, p) for i, p in ((i, f.diff(i)) for i in range(n)) if p]
        if not nz:
            return out
        partials.append(nz)
    for choice in product(*partials):
        val = eval_on_generators(P, [i for i, _ in choice])
        if val is None:
            continue
        for _, p in choice:
            val = val * p
        out = out + val
    return out


def _arity(P):
    sizes = {len(S) for S in P}
    if len(sizes) > 1:
        raise ValueError("cochain is not homogeneous")
    return sizes.pop() if sizes else None


def poisson_coboundary(A, P, k=None):
    """Coordinates of ``delta_k(P)`` on increasing ``(k+1)``-tuples."""
    n = A.n
    if k is None:
        k = _arity(P)
        if k is None:
            return {}
    X = [Poly.var(n, i) for i in range(n)]
    out = {}
    # every term of delta(P)(X_T) evaluates P on a tuple drawn from T
    targets = sorted({tuple(sorted(S + (j,))) for S in P for j in range(n) if j not in S})
    for T in targets:
        f = [X[s] for s in T]
        val = Poly(n)
        for i in range(k + 1):
            inner = eval_multiderivation(P, f[:i] + f[i + 1:], n)
            term = bracket(A, f[i], inner)
            val = val + (term if i % 2 == 0 else -term)
        for i, j in combinations(range(k + 1), 2):
            rest = [f[t] for t in range(k + 1) if t not in (i, j)]
            term = eval_multiderivation(P, [bracket(A, f[i], f[j])] + rest, n)
            val = val + (term if (i + j) % 2 == 0 else -term)
        if val:
            out[T] = val
    return out


def shuffle_sign(n, S):
    comp = [i for i in range(n) if i not in S]
    return _perm_sign(list(S) + comp)


def dagger(A, P, k=None):
    """``P -> sum over (k, n-k)-shuffles of sign * P(X_s...) dX_{rest}``."""
    n = A.n
    if k is None:
        k = _arity(P)
    out = {}
    if k is None:
        return out
    for S in combinations(range(n), k):
        val = P.get(S)
        if not val:
            continue
        beta = tuple(0 if i in S else 1 for i in range(n))
        sign = shuffle_sign(n, S)
        for e, c in val.terms.items():
            _add(out, PChainBasis(e, beta), sign * c)
    return out


def dagger_inverse(A, chain):
    """Inverse of :func:`dagger` on coordinate chains."""
    n = A.n
    out = {}
    for (alpha, beta), c in chain.items():
        S = tuple(i for i in range(n) if not beta[i])
        val = Poly.monomial(alpha, c * shuffle_sign(n, S))
        out[S] = out.get(S, Poly(n)) + val
    return {S: p for S, p in out.items() if p}


def cochain_from_coords(n, coords):
    """``{(S, alpha): c}`` to ``{S: Poly}``."""
    out = {}
    for (S, alpha), c in coords.items():
        out[S] = out.get(S, Poly(n)) + Poly.monomial(alpha, c)
    return {S: p for S, p in out.items() if p}


def cochain_to_coords(P):
    out = {}
    for S, p in P.items():
        for e, c in p.terms.items():
            _add(out, (S, e), c)
    return out
