"""Exact generating series.

Polynomials over big rationals, lowest degree first, and rational
series num/den kept in a canonical reduced form with den(0) = 1.
Counting series come out of automata by fraction-free determinant
evaluation, so every coefficient is exact.
"""

import math
from fractions import Fraction


def _strip(coeffs):
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return out


class Polynomial:
    """Coefficient vector, lowest degree first, trailing zeros stripped."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        self.coeffs = tuple(Fraction(c) for c in _strip(coeffs))

    @classmethod
    def monomial(cls, c, d):
        return cls([0] * d + [c])

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return "Polynomial(%s)" % (list(self.coeffs),)

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(out)

    def __neg__(self):
        return Polynomial([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Polynomial([c * other for c in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Polynomial()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return Polynomial(out)

    __rmul__ = __mul__

    def evaluate(self, x):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def substitute_power(self, k):
        """The polynomial in q^k."""
        out = []
        for c in self.coeffs:
            out.extend([c] + [0] * (k - 1))
        return Polynomial(out[: len(self.coeffs) * k - k + 1] if out else [])

    def shifted(self, j):
        """Multiplication by q^j; negative j must divide exactly."""
        if j >= 0:
            return Polynomial([0] * j + list(self.coeffs))
        if any(self.coeffs[:-j]):
            raise ValueError("polynomial is not divisible by q^%d" % (-j,))
        return Polynomial(self.coeffs[-j:])


def is_palindromic(p):
    """True when the coefficients read the same reversed."""
    return p.coeffs == tuple(reversed(p.coeffs))


def _poly_divmod(a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a.coeffs)
    q = [Fraction(0)] * max(len(r) - len(b.coeffs) + 1, 0)
    db = b.degree
    lead = b.coeffs[-1]
    for i in range(len(r) - 1, db - 1, -1):
        if r[i]:
            f = r[i] / lead
            q[i - db] = f
            for j, c in enumerate(b.coeffs):
                r[i - db + j] -= f * c
    return Polynomial(q), Polynomial(r)


def poly_divexact(a, b):
    q, r = _poly_divmod(a, b)
    if r:
        raise ValueError("polynomial division is not exact")
    return q


def poly_gcd(a, b):
    """Monic-free gcd: primitive with positive leading coefficient."""
    while b:
        a, b = b, _poly_divmod(a, b)[1]
    if not a:
        return Polynomial()
    dens = [c.denominator for c in a.coeffs]
    nums = [c.numerator for c in a.coeffs if c]
    scale = Fraction(math.lcm(*dens), math.gcd(*nums))
    out = a * scale
    if out.coeffs[-1] < 0:
        out = -out
    return out


def poly_lcm(a, b):
    if not a or not b:
        return Polynomial()
    return poly_divexact(a * b, poly_gcd(a, b))


class RationalSeries:
    """Quotient num/den with gcd(num, den) = 1 and den(0) = 1."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if den is None:
            den = Polynomial([1])
        if not den:
            raise ZeroDivisionError("series denominator is zero")
        if not num:
            self.num = Polynomial()
            self.den = Polynomial([1])
            return
        g = poly_gcd(num, den)
        num = poly_divexact(num, g)
        den = poly_divexact(den, g)
        c = den.coeffs[0] if den.coeffs else Fraction(0)
        if c == 0:
            raise ValueError("denominator vanishes at 0; no power series")
        self.num = num * (1 / c)
        self.den = den * (1 / c)

    def __eq__(self, other):
        if isinstance(other, RationalSeries):
            return self.num == other.num and self.den == other.den
        return NotImplemented

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return "RationalSeries(%r / %r)" % (list(self.num.coeffs), list(self.den.coeffs))

    def __add__(self, other):
        return RationalSeries(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return RationalSeries(self.num * other, self.den)
        return RationalSeries(self.num * other.num, self.den * other.den)

    def substitute_power(self, k):
        return RationalSeries(
            self.num.substitute_power(k), self.den.substitute_power(k)
        )

    def times_power(self, j):
        """Multiply by q^j; j < 0 requires the expansion to allow it."""
        return RationalSeries(self.num.shifted(j), self.den)

    def coefficients(self, count):
        """First `count` power-series coefficients, exact."""
        num = self.num.coeffs
        den = self.den.coeffs
        out = []
        for k in range(count):
            c = num[k] if k < len(num) else Fraction(0)
            for j in range(1, min(k, len(den) - 1) + 1):
                c -= den[j] * out[k - j]
            out.append(c)
        return out

    def to_obj(self, terms=None):
        obj = {
            "num": [str(c) for c in self.num.coeffs],
            "den": [str(c) for c in self.den.coeffs],
        }
        if terms is not None:
            obj["coefficients"] = [str(c) for c in self.coefficients(terms)]
        return obj


def pal_series(pref):
    """Series of reduced palindromes from the series of their half-words.

    A palindrome of length 2k+1 is the closure of its prefix of length
    k+1, so the coefficient at q^{2k+1} equals the prefix coefficient
    at q^{k+1}: substitute q^2 and shift down one power.
    """
    return pref.substitute_power(2).times_power(-1)


def _trans_matrix(dfa):
    n = len(dfa.states)
    mat = [[0] * n for _ in range(n)]
    for src, _, dst in dfa.transitions:
        mat[src][dst] += 1
    return mat


def _counts(dfa, count):
    finals = dfa.finals
    n = len(dfa.states)
    vec = [0] * n
    vec[dfa.initial] = 1
    outgoing = {}
    for src, _, dst in dfa.transitions:
        outgoing.setdefault(src, []).append(dst)
    out = [sum(vec[i] for i in finals)]
    for _ in range(count - 1):
        nxt = [0] * n
        for i, c in enumerate(vec):
            if c:
                for j in outgoing.get(i, ()):
                    nxt[j] += c
        vec = nxt
        out.append(sum(vec[i] for i in finals))
    return out


def _pimul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    while out and out[-1] == 0:
        out.pop()
    return out


def _pisub(a, b):
    out = list(a) + [0] * (len(b) - len(a))
    for i, y in enumerate(b):
        out[i] -= y
    while out and out[-1] == 0:
        out.pop()
    return out


def _pidiv(a, b):
    # exact division of integer polynomial lists
    r = list(a)
    db = len(b) - 1
    lead = b[-1]
    q = [0] * max(len(r) - db, 0)
    for i in range(len(r) - 1, db - 1, -1):
        if r[i]:
            f, rem = divmod(r[i], lead)
            if rem:
                raise ArithmeticError("inexact division in elimination")
            q[i - db] = f
            for j, c in enumerate(b):
                r[i - db + j] -= f * c
    if any(r):
        raise ArithmeticError("inexact division in elimination")
    while q and q[-1] == 0:
        q.pop()
    return q


def _int_poly_det(mat):
    """Fraction-free (Bareiss) determinant of a matrix of integer
    polynomial lists."""
    n = len(mat)
    if n == 0:
        return [1]
    m = [[list(e) for e in row] for row in mat]
    prev = [1]
    sign = 1
    for k in range(n - 1):
        if not m[k][k]:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return []
        piv = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = _pisub(_pimul(piv, m[i][j]), _pimul(m[i][k], m[k][j]))
                m[i][j] = _pidiv(num, prev) if num else []
            m[i][k] = []
        prev = piv
    det = m[n - 1][n - 1]
    return det if sign == 1 else [-c for c in det]


def dfa_series(dfa):
    """Generating series of the words the automaton accepts.

    Acyclic automata give a plain polynomial.  Otherwise the series is
    a ratio of two fraction-free determinants of I - qM, bordered to
    pick out the initial row and the final columns.  The expansion is
    checked against a direct count before returning.
    """
    n = len(dfa.states)
    mat = _trans_matrix(dfa)
    order = _topological(mat)
    if order is not None:
        counts = _counts(dfa, n + 1)
        series = RationalSeries(Polynomial(counts))
    else:
        a = []
        for i in range(n):
            row = []
            for j in range(n):
                const = 1 if i == j else 0
                if mat[i][j]:
                    row.append([const, -mat[i][j]])
                elif const:
                    row.append([1])
                else:
                    row.append([])
            a.append(row)
        for i in range(n):
            a[i].append([-1] if i in dfa.finals else [])
        a.append([([1] if j == dfa.initial else []) for j in range(n)] + [[]])
        det_top = _int_poly_det(a)
        det_a = _int_poly_det([row[:n] for row in a[:n]])
        series = RationalSeries(Polynomial(det_top), Polynomial(det_a))
    check = 2 * n + 5
    if series.coefficients(check) != [Fraction(c) for c in _counts(dfa, check)]:
        raise ArithmeticError("series expansion disagrees with direct count")
    return series


def _topological(mat):
    """Topological order of the nonzero-entry digraph, or None."""
    n = len(mat)
    indeg = [0] * n
    for i in range(n):
        for j in range(n):
            if mat[i][j]:
                indeg[j] += 1
    ready = [i for i in range(n) if indeg[i] == 0]
    out = []
    while ready:
        i = ready.pop()
        out.append(i)
        for j in range(n):
            if mat[i][j]:
                indeg[j] -= 1
                if indeg[j] == 0:
                    ready.append(j)
    return out if len(out) == n else None
