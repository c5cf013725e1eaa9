"""Exact arithmetic in the real cyclotomic field Q(2cos(pi/L)).

A Coxeter matrix with finite off-diagonal bonds m_st needs the numbers
cos(pi/m_st) exactly.  All of them live in K = Q(theta) for
theta = 2cos(pi/L) with L = lcm of the finite bonds, because
2cos(k*pi/L) is an integer polynomial (a Chebyshev-like basis element)
evaluated at theta.  Elements of K are coefficient vectors over Q; the
sign of an element is decided without floating point, by interval
arithmetic against a rational isolating interval for theta that is
refined by bisection as needed.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


def _poly_trim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_divmod(a, b):
    """Exact division with remainder, coefficients lowest-first."""
    a = [Fraction(x) for x in a]
    b = _poly_trim([Fraction(x) for x in b])
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    lead = b[-1]
    r = list(a)
    for i in range(len(a) - len(b), -1, -1):
        if len(r) < len(b) + i:
            continue
        coeff = r[len(b) + i - 1] / lead
        if coeff == 0:
            continue
        q[i] = coeff
        for j, bj in enumerate(b):
            r[i + j] -= coeff * bj
    return _poly_trim(q), _poly_trim(r)


def _poly_eval(c, x):
    acc = Fraction(0)
    for coeff in reversed(c):
        acc = acc * x + coeff
    return acc


def _poly_deriv(c):
    return [i * coeff for i, coeff in enumerate(c)][1:]


def cyclotomic(n):
    """Integer coefficients (lowest-first) of the n-th cyclotomic polynomial.

    Computed by the recursive exact division
    Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d.
    """
    num = [-Fraction(1)] + [Fraction(0)] * (n - 1) + [Fraction(1)]
    for d in range(1, n):
        if n % d == 0:
            q, r = _poly_divmod(num, cyclotomic(d))
            if r:
                raise ArithmeticError("cyclotomic division not exact")
            num = q
    return [int(c) for c in num]


def chebyshev_c(k):
    """Integer coefficients of C_k with C_k(2cos x) = 2cos(kx).

    C_0 = 2, C_1 = y, C_k = y*C_{k-1} - C_{k-2}.
    """
    if k == 0:
        return [2]
    prev, cur = [2], [0, 1]
    for _ in range(k - 1):
        nxt = [0] + cur
        for i, c in enumerate(prev):
            nxt[i] -= c
        prev, cur = cur, _poly_trim(nxt) or [0]
    return cur


def _minpoly_from_cyclotomic(L):
    """Minimal polynomial of 2cos(pi/L), via Phi_2L(x) = x^m Psi(x + 1/x)."""
    phi = cyclotomic(2 * L)
    deg = len(phi) - 1
    if deg % 2:
        raise ArithmeticError("expected even-degree cyclotomic polynomial")
    m = deg // 2
    # Phi palindromic: Phi/x^m = c_m + sum_{k>=1} c_{m+k} (x^k + x^-k)
    psi = [Fraction(0)] * (m + 1)
    psi[0] = Fraction(phi[m])
    for k in range(1, m + 1):
        ck = chebyshev_c(k)
        for i, c in enumerate(ck):
            psi[i] += phi[m + k] * c
    return _poly_trim(psi)


def _sign_at(poly, x):
    v = _poly_eval(poly, x)
    return (v > 0) - (v < 0)


def _sturm_chain(poly):
    chain = [list(poly), _poly_deriv(poly)]
    while _poly_trim(chain[-1]):
        _, r = _poly_divmod(chain[-2], chain[-1])
        if not r:
            break
        chain.append([-c for c in r])
    return [c for c in chain if _poly_trim(c)]


def _sturm_count(chain, a, b):
    """Number of distinct real roots in (a, b], a < b, neither a root of chain[0]."""

    def variations(x):
        signs = [s for s in (_sign_at(p, x) for p in chain) if s != 0]
        return sum(1 for u, v in zip(signs, signs[1:]) if u != v)

    return variations(a) - variations(b)


def _interval_mul(lo1, hi1, lo2, hi2):
    vals = (lo1 * lo2, lo1 * hi2, hi1 * lo2, hi1 * hi2)
    return min(vals), max(vals)


def _interval_eval(poly, lo, hi):
    """Enclosure of poly over [lo, hi] by interval Horner."""
    alo = ahi = Fraction(0)
    for coeff in reversed(poly):
        alo, ahi = _interval_mul(alo, ahi, lo, hi)
        alo += coeff
        ahi += coeff
    return alo, ahi


class CyclotomicField:
    """The field Q(theta), theta = 2cos(pi/L), with exact sign determination."""

    def __init__(self, L):
        if L < 1:
            raise ValueError("L must be a positive integer")
        self.L = L
        if L == 1:
            self.theta_rational = Fraction(-2)
        elif L == 2:
            self.theta_rational = Fraction(0)
        elif L == 3:
            self.theta_rational = Fraction(1)
        else:
            self.theta_rational = None
        if self.theta_rational is not None:
            self.minpoly = (-self.theta_rational, Fraction(1))
            self.degree = 1
            t = self.theta_rational
            self.theta_interval = (t - 1, t + 1)
        else:
            mp = _minpoly_from_cyclotomic(L)
            if mp[-1] != 1:
                raise ArithmeticError("minimal polynomial not monic")
            self.minpoly = tuple(mp)
            self.degree = len(mp) - 1
            self.theta_interval = self._isolate_largest_root()
        self._lo, self._hi = self.theta_interval
        self._reduction = self._reduction_table()
        self.zero = AlgebraicNumber(self, (Fraction(0),) * self.degree)
        self.one = self.from_rational(1)
        theta_coeffs = [Fraction(0)] * self.degree
        if self.degree == 1:
            theta_coeffs[0] = self.theta_rational
        else:
            theta_coeffs[1] = Fraction(1)
        self.theta = AlgebraicNumber(self, tuple(theta_coeffs))

    def _isolate_largest_root(self):
        """Rational interval around 2cos(pi/L), the largest root of minpoly.

        Sturm bisection on (-2, 2): shrink the left endpoint until exactly
        one root remains on its right.
        """
        chain = _sturm_chain(list(self.minpoly))
        lo, hi = Fraction(-2), Fraction(2)
        while _sturm_count(chain, lo, hi) > 1:
            mid = (lo + hi) / 2
            if _poly_eval(self.minpoly, mid) == 0:
                # Nudge off the root; roots are isolated points.
                mid = (lo + mid) / 2
            if _sturm_count(chain, mid, hi) >= 1:
                lo = mid
            else:
                hi = mid
        if _sturm_count(chain, lo, hi) != 1:
            raise ArithmeticError("failed to isolate theta")
        return lo, hi

    def _reduction_table(self):
        """x^k mod minpoly for k = degree .. 2*degree-2, as coefficient rows."""
        d = self.degree
        rows = []
        cur = [Fraction(-c) for c in self.minpoly[:-1]]  # x^d mod minpoly
        rows.append(list(cur))
        for _ in range(d + 1, 2 * d - 1):
            cur = [Fraction(0)] + cur
            top = cur.pop()
            if top:
                for i in range(d):
                    cur[i] -= top * self.minpoly[i]
            rows.append(list(cur))
        return rows

    def refine_theta(self):
        """Halve the isolating interval once (sign change pinned on minpoly)."""
        lo, hi = self._lo, self._hi
        mid = (lo + hi) / 2
        if _sign_at(self.minpoly, mid) == _sign_at(self.minpoly, lo):
            self._lo = mid
        else:
            self._hi = mid

    def from_rational(self, q):
        coeffs = [Fraction(0)] * self.degree
        coeffs[0] = Fraction(q)
        return AlgebraicNumber(self, tuple(coeffs))

    def cos_pi_over(self, m):
        """The element cos(pi/m) for a finite bond m; requires m == 2 or m | L."""
        if m == 2:
            return self.from_rational(0)
        if m < 1 or self.L % m:
            raise ValueError(f"bond {m} does not divide L = {self.L}")
        k = self.L // m
        ck = chebyshev_c(k)
        half = Fraction(1, 2)
        coeffs = [Fraction(0)] * max(self.degree, len(ck))
        for i, c in enumerate(ck):
            coeffs[i] = half * c
        return self._reduce(coeffs)

    def _reduce(self, coeffs):
        """Reduce an arbitrary-length coefficient vector mod minpoly."""
        d = self.degree
        coeffs = list(coeffs) + [Fraction(0)] * max(0, d - len(coeffs))
        if len(coeffs) > d:
            if self.degree == 1:
                # substitute the rational theta directly
                t = self.theta_rational
                acc = Fraction(0)
                for c in reversed(coeffs):
                    acc = acc * t + c
                coeffs = [acc]
            elif len(coeffs) > 2 * d - 1:
                # beyond the table; one exact division suffices
                _, r = _poly_divmod(coeffs, list(self.minpoly))
                coeffs = list(r) + [Fraction(0)] * (d - len(r))
            else:
                for k in range(len(coeffs) - 1, d - 1, -1):
                    c = coeffs[k]
                    if c:
                        row = self._reduction[k - d]
                        for i in range(d):
                            coeffs[i] += c * row[i]
                    coeffs.pop()
        return AlgebraicNumber(self, tuple(coeffs[:d]))

    def __repr__(self):
        return f"CyclotomicField(L={self.L}, degree={self.degree})"

    def __eq__(self, other):
        return isinstance(other, CyclotomicField) and other.L == self.L

    def __hash__(self):
        return hash(("CyclotomicField", self.L))


class AlgebraicNumber:
    """Element of a CyclotomicField: coefficient vector over Q in powers of theta."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        self.field = field
        self.coeffs = coeffs

    def is_zero(self):
        return all(c == 0 for c in self.coeffs)

    def is_rational(self):
        return all(c == 0 for c in self.coeffs[1:])

    def rational(self):
        """The value as a Fraction; only valid when the tail vanishes."""
        if not self.is_rational():
            raise ValueError("not a rational element")
        return self.coeffs[0]

    def sign(self):
        """Exact sign: -1, 0 or 1.  No floating point."""
        coeffs = self.coeffs
        if all(c == 0 for c in coeffs[1:]):
            c0 = coeffs[0]
            return (c0 > 0) - (c0 < 0)
        f = self.field
        while True:
            lo, hi = _interval_eval(coeffs, f._lo, f._hi)
            if lo > 0:
                return 1
            if hi < 0:
                return -1
            f.refine_theta()

    def __add__(self, other):
        other = self._coerce(other)
        return AlgebraicNumber(self.field, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        return AlgebraicNumber(self.field, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __neg__(self):
        return AlgebraicNumber(self.field, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        other = self._coerce(other)
        a, b = self.coeffs, other.coeffs
        d = self.field.degree
        if d == 1:
            return AlgebraicNumber(self.field, (a[0] * b[0],))
        prod = [Fraction(0)] * (2 * d - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        prod[i + j] += ai * bj
        return self.field._reduce(prod)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("division by zero field element")
        if self.field.degree == 1:
            return AlgebraicNumber(self.field, (1 / self.coeffs[0],))
        # extended Euclid: u*self + v*minpoly = 1 in Q[x]
        a = list(self.field.minpoly)
        b = _poly_trim(self.coeffs)
        s0, s1 = [], [Fraction(1)]
        while True:
            q, r = _poly_divmod(a, b)
            if not r:
                break
            # s_next = s0 - q*s1
            qs = [Fraction(0)] * (len(q) + len(s1) - 1)
            for i, qi in enumerate(q):
                if qi:
                    for j, sj in enumerate(s1):
                        qs[i + j] += qi * sj
            s_next = [Fraction(0)] * max(len(s0), len(qs))
            for i, c in enumerate(s0):
                s_next[i] += c
            for i, c in enumerate(qs):
                s_next[i] -= c
            a, b = b, r
            s0, s1 = s1, _poly_trim(s_next) or [Fraction(0)]
        if len(b) != 1:
            raise ArithmeticError("element not invertible; minpoly not irreducible?")
        inv = [c / b[0] for c in s1]
        return self.field._reduce(inv)

    def _coerce(self, other):
        if isinstance(other, AlgebraicNumber):
            if other.field != self.field:
                raise ValueError("mixed fields")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.from_rational(other)
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.field.from_rational(other)
        if not isinstance(other, AlgebraicNumber):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __ge__(self, other):
        return (self - other).sign() >= 0

    def __str__(self):
        names = {0: "", 1: "t"}
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            power = names.get(i, f"t^{i}")
            if not power:
                parts.append(str(c))
            elif c == 1:
                parts.append(power)
            elif c == -1:
                parts.append(f"-{power}")
            else:
                parts.append(f"{c}*{power}")
        if not parts:
            return "0"
        out = parts[0]
        for p in parts[1:]:
            out += p if p.startswith("-") else "+" + p
        return out

    def __repr__(self):
        return f"AlgebraicNumber({self})"


def field_for_matrix(matrix):
    """Smallest shared real cyclotomic field for a Coxeter matrix.

    L = lcm of the finite bonds >= 3; defaults to 1 when every bond is
    2 or infinite (the form is then rational).
    """
    L = 1
    n = matrix.rank
    for i in range(n):
        for j in range(i + 1, n):
            m = matrix.entry(i, j)
            if m >= 3:
                L = L * m // gcd(L, m)
    return CyclotomicField(L)
