"""Homology of multigraded complexes with finite-dimensional components.

A :class:`ComplexSpec` enumerates a finite ordered basis for each
``(degree, index)`` and evaluates the differential on basis elements.
Ranks are computed by fraction-free (Bareiss) elimination over the
coefficient ring: Q for Poisson complexes, Q[q, 1/q] for the quantum
ones (nonzero Laurent polynomials are units of the fraction field).
"""

from functools import lru_cache
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .algebra import ONE, ZERO, LaurentPoly, QFraction


@dataclass(frozen=True)
class Domain:
    name: str
    zero: object
    one: object
    exact_div: Callable
    to_field: Callable


RATIONAL = Domain("rational", Fraction(0), Fraction(1), lambda a, b: a / b, Fraction)
QFRACTION = Domain("q-fraction", ZERO, ONE, LaurentPoly.exact_div, QFraction)


@dataclass(frozen=True)
class ComplexSpec:
    """A multigraded complex presented by basis enumeration.

    ``direction`` is ``"homological"`` (differential lowers the index) or
    ``"cohomological"`` (raises it); indices run over ``0..top``.
    """

    name: str
    domain: Domain
    top: int
    direction: str
    basis: Callable          # (degree, index) -> list of keys
    differential: Callable   # key -> {key: scalar}
    degrees: Callable        # bound -> list of degrees in the window
    label: Callable = str

    @property
    def step(self):
        return -1 if self.direction == "homological" else 1


class SparseMatrix:
    """``nrows x ncols`` matrix with only nonzero entries stored."""

    def __init__(self, nrows, ncols, entries=None, domain=RATIONAL):
        self.nrows, self.ncols, self.domain = nrows, ncols, domain
        self.entries = {k: v for k, v in (entries or {}).items() if v}

    @classmethod
    def from_rows(cls, rows, domain=RATIONAL):
        nrows = len(rows)
        ncols = len(rows[0]) if rows else 0
        return cls(nrows, ncols,
                   {(i, j): x for i, r in enumerate(rows) for j, x in enumerate(r)}, domain)

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def dense(self):
        z = self.domain.zero
        rows = [[z] * self.ncols for _ in range(self.nrows)]
        for (i, j), v in self.entries.items():
            rows[i][j] = v
        return rows

    def __matmul__(self, other):
        assert self.ncols == other.nrows
        out = {}
        for (i, k), v in self.entries.items():
            for (k2, j), w in other.entries.items():
                if k == k2:
                    out[i, j] = out.get((i, j), self.domain.zero) + v * w
        return SparseMatrix(self.nrows, other.ncols, out, self.domain)

    def scaled(self, c):
        return SparseMatrix(self.nrows, self.ncols,
                            {k: c * v for k, v in self.entries.items()}, self.domain)

    def is_zero(self):
        return not self.entries

    def __eq__(self, other):
        return self.shape == other.shape and self.entries == other.entries

    def __repr__(self):
        return f"SparseMatrix({self.nrows}x{self.ncols}, {self.entries!r})"


def exact_rank(m):
    """Rank by Bareiss elimination; every division is exact in the ring."""
    dom = m.domain
    rows = m.dense()
    nr, nc = m.nrows, m.ncols
    prev = dom.one
    r = 0
    for c in range(nc):
        if r == nr:
            break
        piv = next((i for i in range(r, nr) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        p = rows[r][c]
        for i in range(r + 1, nr):
            x = rows[i][c]
            for j in range(c + 1, nc):
                rows[i][j] = dom.exact_div(p * rows[i][j] - x * rows[r][j], prev)
            rows[i][c] = dom.zero
        prev = p
        r += 1
    return r


def field_rank(m):
    """Textbook Gaussian elimination in the fraction field (oracle)."""
    rows = [[m.domain.to_field(x) for x in r] for r in m.dense()]
    return len(_echelon(rows)[1])


def _echelon(rows):
    """Reduced row echelon form in place; returns (rows, pivot columns)."""
    rows = [list(r) for r in rows]
    nr = len(rows)
    nc = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(nc):
        piv = next((i for i in range(r, nr) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(nr):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nr:
            break
    return rows[:r], pivots


def boundary_matrix(spec, degree, index):
    """Matrix of the differential leaving ``(degree, index)``: rows index the
    target basis, columns the source basis."""
    src = spec.basis(degree, index)
    tgt_index = index + spec.step
    tgt = spec.basis(degree, tgt_index) if 0 <= tgt_index <= spec.top else []
    pos = {b: i for i, b in enumerate(tgt)}
    entries = {}
    for j, b in enumerate(src):
        for key, v in spec.differential(b).items():
            if key not in pos:
                raise ValueError(
                    f"{spec.name}: d({spec.label(b)}) has term {spec.label(key)} "
                    f"outside degree {degree}, index {tgt_index}")
            entries[pos[key], j] = v
    return SparseMatrix(len(tgt), len(src), entries, spec.domain)


def incoming_matrix(spec, degree, index):
    src_index = index - spec.step
    if not 0 <= src_index <= spec.top:
        return SparseMatrix(len(spec.basis(degree, index)), 0, {}, spec.domain)
    return boundary_matrix(spec, degree, src_index)


@lru_cache(maxsize=1 << 16)
def homology_dim(spec, degree, index):
    """``dim ker(outgoing) - rank(incoming)``."""
    dim = len(spec.basis(degree, index))
    if dim == 0:
        return 0
    out = exact_rank(boundary_matrix(spec, degree, index))
    inc = exact_rank(incoming_matrix(spec, degree, index))
    return dim - out - inc


def representatives(spec, degree, index):
    """Kernel vectors of the outgoing map completing a basis of the image of
    the incoming one; each is ``{key: field scalar}``."""
    basis = spec.basis(degree, index)
    if not basis:
        return []
    to_field = spec.domain.to_field
    out = boundary_matrix(spec, degree, index)
    kernel = _nullspace([[to_field(x) for x in r] for r in out.dense()], len(basis), to_field)
    inc = incoming_matrix(spec, degree, index)
    image = [list(col) for col in zip(*[[to_field(x) for x in r] for r in inc.dense()])]
    span = _echelon(image)[0] if image else []
    reps = []
    for v in kernel:
        trial = span + [v]
        reduced = _echelon(trial)[0]
        if len(reduced) > len(span):
            span = reduced
            reps.append({basis[i]: x for i, x in enumerate(v) if x})
    return reps


def _nullspace(rows, ncols, to_field):
    one = to_field(1)
    zero = to_field(0)
    if not rows:
        return [[one if i == j else zero for i in range(ncols)] for j in range(ncols)]
    red, pivots = _echelon(rows)
    free = [c for c in range(ncols) if c not in pivots]
    vecs = []
    for f in free:
        v = [zero] * ncols
        v[f] = one
        for r, p in enumerate(pivots):
            v[p] = -red[r][f]
        vecs.append(v)
    return vecs


@dataclass
class BettiTable:
    """Nonzero homology dimensions keyed by ``(degree, index)``."""

    dims: dict = field(default_factory=dict)
    reps: dict = field(default_factory=dict)

    def totals(self, top):
        t = [0] * (top + 1)
        for (_, k), d in self.dims.items():
            t[k] += d
        return t

    def at_index(self, k):
        return {deg: d for (deg, i), d in self.dims.items() if i == k}


def betti_table(spec, bound, with_representatives=False):
    table = BettiTable()
    for degree in spec.degrees(bound):
        for k in range(spec.top + 1):
            d = homology_dim(spec, degree, k)
            if d:
                table.dims[degree, k] = d
                if with_representatives:
                    table.reps[degree, k] = representatives(spec, degree, k)
    return table
