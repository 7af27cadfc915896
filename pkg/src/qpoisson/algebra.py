"""Exact scalars and index bookkeeping.

Rationals are :class:`fractions.Fraction`.  Laurent polynomials in a generic
parameter ``q`` are :class:`LaurentPoly`; since ``q`` is generic, every
nonzero Laurent polynomial is invertible, and :class:`QFraction` is the
corresponding field of fractions.

Indices are 0-based throughout the library.  Exponent vectors are plain
tuples of ints.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from itertools import product
from math import gcd, prod


class InvalidMatrixError(ValueError):
    pass


# ---------------------------------------------------------------------------
# skew matrices


@dataclass(frozen=True)
class SkewMatrix:
    """Integer skew-symmetric matrix ``a``; ``q_ij = q**a[i][j]``."""

    n: int
    a: tuple

    def row_sum(self, i):
        return sum(self.a[i])

    def col_sum(self, i):
        return sum(row[i] for row in self.a)

    def to_lists(self):
        return [list(row) for row in self.a]


def validate_skew(raw):
    """Check ``raw`` is a square integer grid with zero diagonal and
    ``a_ij == -a_ji``; return it as a :class:`SkewMatrix`."""
    try:
        rows = [list(r) for r in raw]
    except TypeError:
        raise InvalidMatrixError("matrix must be a list of rows") from None
    n = len(rows)
    if n == 0:
        raise InvalidMatrixError("matrix must have at least one row")
    for i, row in enumerate(rows):
        if len(row) != n:
            raise InvalidMatrixError(
                f"matrix is not square: row {i + 1} has {len(row)} entries, expected {n}")
        for j, x in enumerate(row):
            if isinstance(x, bool) or not isinstance(x, int):
                raise InvalidMatrixError(f"entry a[{i + 1}][{j + 1}] = {x!r} is not an integer")
    for i in range(n):
        if rows[i][i] != 0:
            raise InvalidMatrixError(f"diagonal entry a[{i + 1}][{i + 1}] = {rows[i][i]} is nonzero")
        for j in range(i + 1, n):
            if rows[i][j] != -rows[j][i]:
                raise InvalidMatrixError(
                    f"a[{i + 1}][{j + 1}] = {rows[i][j]} but a[{j + 1}][{i + 1}] = {rows[j][i]}; "
                    "expected a_ij = -a_ji")
    return SkewMatrix(n, tuple(tuple(r) for r in rows))


def block_matrix(L):
    """The ``2m x 2m`` matrix ``[[L, -L], [-L, L]]``, skew when ``L`` is."""
    m = len(L)
    rows = []
    for i in range(2 * m):
        row = []
        for j in range(2 * m):
            s = 1 if (i < m) == (j < m) else -1
            row.append(s * L[i % m][j % m])
        rows.append(row)
    return validate_skew(rows)


# ---------------------------------------------------------------------------
# exponent vectors


def unit(n, i):
    return tuple(int(k == i) for k in range(n))


def vadd(u, v):
    return tuple(x + y for x, y in zip(u, v))


def vsub(u, v):
    """Componentwise difference; None if it leaves the nonnegative orthant."""
    w = tuple(x - y for x, y in zip(u, v))
    if min(w, default=0) < 0:
        return None
    return w


def indicator(n, subset):
    s = set(subset)
    return tuple(int(k in s) for k in range(n))


def support(v):
    return tuple(k for k, x in enumerate(v) if x)


def multi_indices(n, bound):
    """All ``rho`` in N^n with ``|rho| <= bound``, by total degree then lex."""
    out = []
    for total in range(bound + 1):
        out.extend(sorted(_compositions(n, total), reverse=True))
    return out


def _compositions(n, total):
    if n == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(n - 1, total - first):
            yield (first,) + rest


def binary_below(rho, k=None):
    """0/1 vectors ``gamma <= rho`` (optionally with ``|gamma| == k``), sorted."""
    choices = [(0, 1) if r > 0 else (0,) for r in rho]
    out = [g for g in product(*choices) if k is None or sum(g) == k]
    return sorted(out, reverse=True)


# ---------------------------------------------------------------------------
# dense polynomial helpers (lists of coefficients, low degree first)
#
# Coefficients are ints whenever they are integral; Fraction arithmetic is an
# order of magnitude slower and almost every polynomial met here is integral.


def _canon(v):
    if type(v) is int:
        return v
    v = Fraction(v)
    return v.numerator if v.denominator == 1 else v


def _div(x, y):
    if isinstance(x, int) and isinstance(y, int):
        if x % y == 0:
            return x // y
        return Fraction(x, y)
    return _canon(Fraction(x) / y)


def _trim(p):
    while p and p[-1] == 0:
        p.pop()
    return p


def _pdivmod(a, b):
    a = list(a)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    db, lb = len(b) - 1, b[-1]
    quot = [0] * max(len(a) - db, 0)
    while len(a) - 1 >= db and a:
        shift = len(a) - 1 - db
        c = _div(a[-1], lb)
        quot[shift] = c
        for k, x in enumerate(b):
            a[shift + k] -= c * x
        _trim(a)
    return _trim(quot), a


def _prem(a, b):
    """Pseudo-remainder: stays in Z[q] for integral inputs."""
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    while a and len(a) - 1 >= db:
        shift, c = len(a) - 1 - db, a[-1]
        a = [x * lb for x in a]
        for k, x in enumerate(b):
            a[shift + k] -= c * x
        _trim(a)
    return a


def _primitive(p):
    g = reduce(gcd, p, 0)
    return [x // g for x in p] if g > 1 else p


def _pgcd(a, b, monic=True):
    a, b = _trim(list(a)), _trim(list(b))
    if all(type(x) is int for x in a + b):
        while b:
            a, b = b, _primitive(_prem(a, b))
    else:
        while b:
            a, b = b, _pdivmod(a, b)[1]
    if not a or not monic:
        return a
    lc = a[-1]
    return [_div(x, lc) for x in a]


# ---------------------------------------------------------------------------
# Laurent polynomials


class LaurentPoly:
    """Element of Q[q, 1/q], stored as ``{exponent: coefficient}``.

    Zero coefficients are never stored, so equality is coefficientwise.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs=None):
        c = {}
        for e, v in (coeffs or {}).items():
            v = _canon(c.get(e, 0) + v)
            if v:
                c[int(e)] = v
            else:
                c.pop(int(e), None)
        self._c = c

    @classmethod
    def _raw(cls, c):
        # c: {int: nonzero int or Fraction}
        p = cls.__new__(cls)
        p._c = c
        return p

    @classmethod
    def monomial(cls, exp, coeff=1):
        return cls({exp: coeff})

    @classmethod
    def coerce(cls, x):
        if isinstance(x, LaurentPoly):
            return x
        if isinstance(x, (int, Fraction)):
            return cls({0: x})
        return NotImplemented

    def items(self):
        return sorted(self._c.items())

    def __iter__(self):
        return iter(self.items())

    def __bool__(self):
        return bool(self._c)

    def __eq__(self, other):
        other = LaurentPoly.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __add__(self, other):
        other = LaurentPoly.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        c = dict(self._c)
        for e, v in other._c.items():
            v = c.get(e, 0) + v
            if v:
                c[e] = v
            else:
                del c[e]
        return LaurentPoly._raw(c)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({e: -v for e, v in self._c.items()})

    def __sub__(self, other):
        other = LaurentPoly.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return LaurentPoly.coerce(other) - self

    def __mul__(self, other):
        other = LaurentPoly.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        c = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                c[e1 + e2] = c.get(e1 + e2, 0) + v1 * v2
        return LaurentPoly._raw({e: v for e, v in c.items() if v})

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            if not self.is_unit():
                raise ValueError(f"{self} is not a unit of Q[q, 1/q]")
            (e, v), = self._c.items()
            return LaurentPoly({e * k: v ** k})
        return prod([self] * k, start=ONE)

    def is_unit(self):
        return len(self._c) == 1

    @property
    def low(self):
        return min(self._c)

    @property
    def high(self):
        return max(self._c)

    def _dense(self):
        lo = self.low
        p = [0] * (self.high - lo + 1)
        for e, v in self._c.items():
            p[e - lo] = v
        return lo, p

    @staticmethod
    def _from_dense(shift, p):
        return LaurentPoly._raw({shift + k: v for k, v in enumerate(p) if v})

    def exact_div(self, other):
        """``self / other``; raises ArithmeticError unless the quotient
        lies in Q[q, 1/q]."""
        if not other:
            raise ZeroDivisionError("division by the zero Laurent polynomial")
        if not self:
            return ZERO
        la, a = self._dense()
        lb, b = other._dense()
        quot, rem = _pdivmod(a, b)
        if rem:
            raise ArithmeticError(f"{other} does not divide {self}")
        return LaurentPoly._from_dense(la - lb, quot)

    def gcd(self, other):
        """Monic gcd with nonzero constant term (units of Q[q, 1/q] dropped)."""
        if not self:
            return other.normalized() if other else ONE
        if not other:
            return self.normalized()
        if self.is_unit() or other.is_unit():
            return ONE
        return LaurentPoly._from_dense(0, _pgcd(self._dense()[1], other._dense()[1]))

    def normalized(self):
        """Associate with lowest exponent 0 and leading coefficient 1."""
        lo, p = self._dense()
        return LaurentPoly._from_dense(0, [_div(x, p[-1]) for x in p])

    def at_one(self):
        return sum(self._c.values(), Fraction(0))

    def __repr__(self):
        return f"LaurentPoly({dict(self.items())!r})"

    def __str__(self):
        if not self._c:
            return "0"
        parts = []
        for e, v in sorted(self._c.items(), reverse=True):
            mono = "" if e == 0 else ("q" if e == 1 else f"q^{e}")
            if not mono:
                s = str(v)
            elif v == 1:
                s = mono
            elif v == -1:
                s = "-" + mono
            else:
                s = f"{v}*{mono}"
            parts.append(s)
        return " + ".join(parts).replace("+ -", "- ")


ZERO = LaurentPoly()
ONE = LaurentPoly({0: 1})
Q = LaurentPoly({1: 1})


def qpow(e):
    """``q**e`` as a Laurent polynomial."""
    return LaurentPoly({e: 1})


def is_generically_zero(p):
    """A Laurent polynomial vanishes at generic q iff it is the zero polynomial."""
    return not LaurentPoly.coerce(p)


def semiclassical_limit(p):
    """``lim_{q -> 1} p / (1 - q)``, i.e. ``-p'(1)``, for ``p(1) == 0``."""
    p = LaurentPoly.coerce(p)
    if p.at_one() != 0:
        raise ValueError(f"{p} does not vanish at q = 1")
    return -sum((e * v for e, v in p.items()), Fraction(0))


# ---------------------------------------------------------------------------
# fractions of Laurent polynomials


def _integral_pair(num, den):
    """Scale ``num / den`` to the canonical integral representative."""
    lo = den.low
    nc, dc = num._c, den._c
    scale = 1
    for v in (*nc.values(), *dc.values()):
        if type(v) is not int:
            scale = scale * v.denominator // gcd(scale, v.denominator)
    if scale != 1:
        nc = {e: int(v * scale) for e, v in nc.items()}
        dc = {e: int(v * scale) for e, v in dc.items()}
    c = reduce(gcd, dc.values(), 0)
    if c != 1:
        c = reduce(gcd, nc.values(), c)
    if dc[max(dc)] < 0:
        c = -c
    if c == 1 and lo == 0:
        return LaurentPoly._raw(nc), LaurentPoly._raw(dc)
    return (LaurentPoly._raw({e - lo: v // c for e, v in nc.items()}),
            LaurentPoly._raw({e - lo: v // c for e, v in dc.items()}))


class QFraction:
    """Element of Q(q) in lowest terms.

    The canonical form has integer coefficients with joint content 1, and a
    denominator in Z[q] with nonzero constant term and positive leading
    coefficient.  Keeping coefficients integral avoids Fraction arithmetic
    in the hot loops.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=ONE):
        num = LaurentPoly.coerce(num)
        den = LaurentPoly.coerce(den)
        if not den:
            raise ZeroDivisionError("QFraction with zero denominator")
        if not num:
            self.num, self.den = ZERO, ONE
            return
        if not (num.is_unit() or den.is_unit()):
            g = _pgcd(num._dense()[1], den._dense()[1], monic=False)
            if len(g) > 1:
                g = LaurentPoly._from_dense(0, g)
                num, den = num.exact_div(g), den.exact_div(g)
        self.num, self.den = _integral_pair(num, den)

    @classmethod
    def coerce(cls, x):
        if isinstance(x, QFraction):
            return x
        if isinstance(x, (LaurentPoly, int, Fraction)):
            return cls(x)
        return NotImplemented

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        other = QFraction.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __add__(self, other):
        other = QFraction.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den == other.den:
            return QFraction(self.num + other.num, self.den)
        return QFraction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return QFraction(-self.num, self.den)

    def __sub__(self, other):
        other = QFraction.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return QFraction.coerce(other) - self

    def __mul__(self, other):
        other = QFraction.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return QFraction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = QFraction.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return QFraction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return QFraction.coerce(other) / self

    def inverse(self):
        return QFraction(self.den, self.num)

    def __repr__(self):
        return f"QFraction({self.num!r}, {self.den!r})"

    def __str__(self):
        if self.den == ONE:
            return str(self.num)
        if self.den.is_unit():
            return str(self.num * LaurentPoly({0: Fraction(1, self.den._c[0])}))
        return f"({self.num})/({self.den})"
