"""Coxeter systems, exact matrix elements, and word combinatorics.

A system is described by its Coxeter matrix (entry 0 encodes an infinite
bond) together with a symmetric bilinear form on the span of the simple
roots.  The default form is the unitary one, B(a_s, a_s) = 1 and
B(a_s, a_t) = -cos(pi/m_st), with values in Q(2cos(pi/L)); a custom
rational form may be supplied instead, as in the integral models of the
affine types.  Elements are stored as exact matrices in the simple-root
basis together with their shortlex normal form, so equality, descents
and lengths are all decided without floating point.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .field import AlgebraicNumber, CyclotomicField, field_for_matrix


class LimitExceeded(RuntimeError):
    """Raised when an enumeration outgrows its configured cap."""


class CoxeterMatrix:
    """Symmetric matrix of bond orders m_st; 0 stands for an infinite bond."""

    __slots__ = ("entries", "rank")

    def __init__(self, entries):
        rows = tuple(tuple(int(x) for x in row) for row in entries)
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise ValueError("Coxeter matrix must be square and nonempty")
        for i in range(n):
            if rows[i][i] != 1:
                raise ValueError("diagonal entries must be 1")
            for j in range(i + 1, n):
                if rows[i][j] != rows[j][i]:
                    raise ValueError("Coxeter matrix must be symmetric")
                if rows[i][j] == 1 or rows[i][j] < 0:
                    raise ValueError("off-diagonal entries must be 0 or >= 2")
        self.entries = rows
        self.rank = n

    def entry(self, i, j):
        return self.entries[i][j]

    def to_obj(self):
        return [list(row) for row in self.entries]

    @classmethod
    def from_obj(cls, obj):
        return cls(obj)

    def __eq__(self, other):
        return isinstance(other, CoxeterMatrix) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return "CoxeterMatrix(%r)" % (self.to_obj(),)


def _bonds_matrix(rank, bonds):
    m = [[1 if i == j else 2 for j in range(rank)] for i in range(rank)]
    for i, j, v in bonds:
        m[i][j] = m[j][i] = v
    return CoxeterMatrix(m)


def _chain(k):
    return [(i, i + 1, 3) for i in range(k)]


_NAME_RE = re.compile(r"^(~?)([A-IU])(\d+)$")
_I2_RE = re.compile(r"^I2\((\d+|inf)\)$")


def preset(name):
    """Coxeter matrix of a named type.

    Finite: A1.., B2.., C2.., D4.., E6 E7 E8, F4, G2, H3 H4, I2(m)
    (I2(inf) or I2(0) for the infinite bond), and the universal UN with
    every bond infinite.  Affine: ~A2.., ~B3.., ~C2.., ~D4.., ~E6 ~E7
    ~E8, ~F4, ~G2; the affine node is listed last.
    """
    name = name.strip().replace(" ", "")
    m = _I2_RE.match(name)
    if m:
        v = 0 if m.group(1) == "inf" else int(m.group(1))
        if v == 1 or v == 2 or v < 0:
            raise ValueError("dihedral bond must be 0 (infinite) or >= 3")
        return _bonds_matrix(2, [(0, 1, v)])
    m = _NAME_RE.match(name)
    if not m:
        raise ValueError("unknown type %r" % name)
    affine, letter, n = m.group(1) == "~", m.group(2), int(m.group(3))

    def need(cond):
        if not cond:
            raise ValueError("no type named %r" % name)

    if not affine:
        if letter == "A":
            need(n >= 1)
            return _bonds_matrix(n, _chain(n - 1))
        if letter == "B":
            need(n >= 2)
            return _bonds_matrix(n, [(0, 1, 4)] + _chain(n - 1)[1:])
        if letter == "C":
            need(n >= 2)
            return _bonds_matrix(n, _chain(n - 2) + [(n - 2, n - 1, 4)])
        if letter == "D":
            need(n >= 4)
            return _bonds_matrix(n, _chain(n - 2) + [(n - 3, n - 1, 3)])
        if letter == "E":
            need(n in (6, 7, 8))
            bonds = [(0, 2, 3), (2, 3, 3), (3, 4, 3), (4, 5, 3), (1, 3, 3)]
            bonds += [(4 + k, 5 + k, 3) for k in range(1, n - 5)]
            return _bonds_matrix(n, bonds)
        if letter == "F":
            need(n == 4)
            return _bonds_matrix(4, [(0, 1, 3), (1, 2, 4), (2, 3, 3)])
        if letter == "G":
            need(n == 2)
            return _bonds_matrix(2, [(0, 1, 6)])
        if letter == "H":
            need(n in (3, 4))
            return _bonds_matrix(n, [(0, 1, 5)] + _chain(n - 1)[1:])
        if letter == "U":
            need(n >= 2)
            return _bonds_matrix(n, [(i, j, 0) for i in range(n) for j in range(i + 1, n)])
        raise ValueError("unknown type %r" % name)

    if letter == "A":
        need(n >= 2)
        return _bonds_matrix(n + 1, _chain(n) + [(n, 0, 3)])
    if letter == "B":
        need(n >= 3)
        return _bonds_matrix(n + 1, [(0, 1, 4)] + _chain(n - 1)[1:] + [(n, n - 2, 3)])
    if letter == "C":
        need(n >= 2)
        return _bonds_matrix(n + 1, _chain(n - 2) + [(n - 2, n - 1, 4), (n, 0, 4)])
    if letter == "D":
        need(n >= 4)
        return _bonds_matrix(n + 1, _chain(n - 2) + [(n - 3, n - 1, 3), (n, 1, 3)])
    if letter == "E":
        need(n in (6, 7, 8))
        bonds = [(0, 2, 3), (2, 3, 3), (3, 4, 3), (4, 5, 3), (1, 3, 3)]
        bonds += [(4 + k, 5 + k, 3) for k in range(1, n - 5)]
        bonds.append({6: (6, 1, 3), 7: (7, 0, 3), 8: (8, 7, 3)}[n])
        return _bonds_matrix(n + 1, bonds)
    if letter == "F":
        need(n == 4)
        return _bonds_matrix(5, [(0, 1, 3), (1, 2, 4), (2, 3, 3), (4, 0, 3)])
    if letter == "G":
        need(n == 2)
        return _bonds_matrix(3, [(0, 1, 6), (2, 1, 3)])
    raise ValueError("unknown type %r" % name)


def coxeter_matrix_from_descriptor(text):
    """A Coxeter matrix from a type name or a JSON array of rows."""
    text = text.strip()
    if text.startswith("["):
        import json

        return CoxeterMatrix(json.loads(text))
    return preset(text)


def matrix_from_gram(gram):
    """Bond orders of a rational form: cos^2(pi/m) = B_st^2 / (B_ss B_tt)."""
    n = len(gram)
    m = [[1 if i == j else 2 for j in range(n)] for i in range(n)]
    for i in range(n):
        if gram[i][i] <= 0:
            raise ValueError("diagonal Gram entries must be positive")
        for j in range(i + 1, n):
            b = gram[i][j]
            if b > 0:
                raise ValueError("off-diagonal Gram entries must be <= 0")
            ratio = b * b / (gram[i][i] * gram[j][j])
            if ratio == 0:
                continue
            if ratio >= 1:
                m[i][j] = m[j][i] = 0
            elif ratio == Fraction(1, 4):
                m[i][j] = m[j][i] = 3
            elif ratio == Fraction(1, 2):
                m[i][j] = m[j][i] = 4
            elif ratio == Fraction(3, 4):
                m[i][j] = m[j][i] = 6
            else:
                raise ValueError("bond ratio %s has no integral order" % (ratio,))
    return CoxeterMatrix(m)


def parse_word(text, rank):
    """Parse a word over 1-based letters: '121', '1 2 1' or '1,2,1'."""
    t = text.strip()
    if t in ("", "e"):
        return ()
    if t.isdigit() and rank <= 9:
        parts = list(t)
    else:
        parts = [p for p in re.split(r"[\s,]+", t) if p]
    out = []
    for p in parts:
        try:
            k = int(p)
        except ValueError:
            raise ValueError("bad letter %r" % p)
        if not 1 <= k <= rank:
            raise ValueError("letter %d out of range 1..%d" % (k, rank))
        out.append(k - 1)
    return tuple(out)


def format_word(word, rank):
    if not word:
        return "e"
    sep = "" if rank <= 9 else " "
    return sep.join(str(s + 1) for s in word)


def _column_is_negative(rows, j):
    # root columns have uniform sign; the first nonzero entry decides
    for row in rows:
        x = row[j]
        if x != 0:
            return x < 0
    return False


def _right_mul_gen(system, rows, s):
    nbrs = system._neighbors[s]
    out = []
    for row in rows:
        r = list(row)
        xs = row[s]
        for j, c in nbrs:
            r[j] = row[j] - c * xs
        r[s] = -xs
        out.append(tuple(r))
    return tuple(out)


def _left_mul_gen(system, rows, s):
    nbrs = system._neighbors[s]
    acc = [-x for x in rows[s]]
    for j, c in nbrs:
        rj = rows[j]
        acc = [a - c * x for a, x in zip(acc, rj)]
    out = list(rows)
    out[s] = tuple(acc)
    return tuple(out)


def _matmul(a, b):
    n = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n))
        for i in range(n)
    )


def _dot(row, coords):
    return sum(x * y for x, y in zip(row, coords))


def _shortlex_word(system, rows, inv_rows):
    """Canonical word by repeatedly stripping the smallest left descent."""
    word = []
    idr = system._id_rows
    n = system.rank
    while rows != idr:
        for s in range(n):
            if _column_is_negative(inv_rows, s):
                break
        else:
            raise ArithmeticError("matrix has no left descent yet is not 1")
        rows = _left_mul_gen(system, rows, s)
        inv_rows = _right_mul_gen(system, inv_rows, s)
        word.append(s)
    return tuple(word)


class GroupElement:
    """Element of a Coxeter system.

    Carries the matrix of its action in the simple-root basis, the
    matrix of its inverse, and the shortlex normal form.  Equality and
    hashing go through the matrix, so distinct words never collide.
    """

    __slots__ = ("system", "rows", "inv_rows", "word")

    def __init__(self, system, rows, inv_rows, word):
        # word must already be the shortlex normal form
        self.system = system
        self.rows = rows
        self.inv_rows = inv_rows
        self.word = word

    @property
    def length(self):
        return len(self.word)

    def __eq__(self, other):
        return (
            isinstance(other, GroupElement)
            and self.system is other.system
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return format_word(self.word, self.system.rank)

    def __mul__(self, other):
        rows = _matmul(self.rows, other.rows)
        inv = _matmul(other.inv_rows, self.inv_rows)
        return GroupElement(self.system, rows, inv, _shortlex_word(self.system, rows, inv))

    def inverse(self):
        return GroupElement(
            self.system, self.inv_rows, self.rows,
            _shortlex_word(self.system, self.inv_rows, self.rows),
        )

    def is_identity(self):
        return not self.word

    def times_gen(self, s):
        """Right product with one generator."""
        rows = _right_mul_gen(self.system, self.rows, s)
        inv = _left_mul_gen(self.system, self.inv_rows, s)
        return GroupElement(self.system, rows, inv, _shortlex_word(self.system, rows, inv))

    def right_descents(self):
        return tuple(s for s in range(self.system.rank)
                     if _column_is_negative(self.rows, s))

    def left_descents(self):
        return tuple(s for s in range(self.system.rank)
                     if _column_is_negative(self.inv_rows, s))

    def act(self, coords):
        return tuple(_dot(row, coords) for row in self.rows)

    def inversion_set(self):
        """Positive roots sent negative, as b_k = w_1..w_{k-1}(a_{w_k})."""
        system = self.system
        rows = system._id_rows
        out = []
        for s in self.word:
            out.append(tuple(row[s] for row in rows))
            rows = _right_mul_gen(system, rows, s)
        return tuple(out)


class CoxeterSystem:
    """A Coxeter matrix together with its reflection representation."""

    def __init__(self, matrix=None, gram=None):
        if matrix is None and gram is None:
            raise ValueError("need a Coxeter matrix or a Gram matrix")
        if gram is None:
            field = field_for_matrix(matrix)
            n = matrix.rank
            g = []
            for i in range(n):
                row = []
                for j in range(n):
                    if i == j:
                        row.append(field.one)
                    else:
                        mij = matrix.entry(i, j)
                        if mij == 0:
                            row.append(field.from_rational(-1))
                        elif mij == 2:
                            row.append(field.zero)
                        else:
                            row.append(-field.cos_pi_over(mij))
                g.append(row)
            if field.degree == 1:
                g = [[x.rational() for x in row] for row in g]
            self.mode = "unitary"
        else:
            g = [list(row) for row in gram]
            n = len(g)
            if any(len(row) != n for row in g):
                raise ValueError("Gram matrix must be square")
            if any(isinstance(x, AlgebraicNumber) for row in g for x in row):
                field = next(x.field for row in g for x in row
                             if isinstance(x, AlgebraicNumber))
                g = [[x if isinstance(x, AlgebraicNumber) else field.from_rational(x)
                      for x in row] for row in g]
                if matrix is None:
                    raise ValueError("an algebraic Gram matrix needs an explicit Coxeter matrix")
            else:
                g = [[Fraction(x) for x in row] for row in g]
                field = CyclotomicField(1)
                derived = matrix_from_gram(g)
                if matrix is None:
                    matrix = derived
                elif matrix != derived:
                    raise ValueError("Gram matrix disagrees with the Coxeter matrix")
            self.mode = "custom"
        for i in range(n):
            if not g[i][i] > 0:
                raise ValueError("diagonal Gram entries must be positive")
            for j in range(i + 1, n):
                if g[i][j] != g[j][i]:
                    raise ValueError("Gram matrix must be symmetric")
        if matrix.rank != n:
            raise ValueError("rank mismatch between matrix and form")
        self.matrix = matrix
        self.rank = n
        self.field = field
        self.gram = tuple(tuple(row) for row in g)
        self.norms = tuple(self.gram[i][i] for i in range(n))
        sample = self.gram[0][0]
        if isinstance(sample, AlgebraicNumber):
            self.one, self.zero = field.one, field.zero
        else:
            self.one, self.zero = Fraction(1), Fraction(0)
        self._neighbors = tuple(
            tuple((j, 2 * self.gram[s][j] / self.norms[s])
                  for j in range(n) if j != s and self.gram[s][j] != 0)
            for s in range(n)
        )
        self._gram_cols = tuple(
            tuple((i, self.gram[i][s]) for i in range(n) if self.gram[i][s] != 0)
            for s in range(n)
        )
        self._id_rows = tuple(
            tuple(self.one if i == j else self.zero for j in range(n))
            for i in range(n)
        )
        self.identity = GroupElement(self, self._id_rows, self._id_rows, ())

    def __repr__(self):
        return "CoxeterSystem(rank=%d, mode=%s)" % (self.rank, self.mode)

    def simple_root(self, s):
        return tuple(self.one if i == s else self.zero for i in range(self.rank))

    def b_simple(self, coords, s):
        """B(coords, a_s), using the sparse column of the form."""
        return sum(coords[i] * c for i, c in self._gram_cols[s])

    def bilinear(self, x, y):
        total = self.zero
        for i, xi in enumerate(x):
            if xi != 0:
                row = self.gram[i]
                total = total + xi * sum(row[j] * yj for j, yj in enumerate(y))
        return total

    def norm_sq(self, coords):
        return self.bilinear(coords, coords)

    def reflect(self, coords, s):
        """Image of a vector under the simple reflection s; one coordinate moves."""
        c = 2 * self.b_simple(coords, s) / self.norms[s]
        if c == 0:
            return tuple(coords)
        out = list(coords)
        out[s] = out[s] - c
        return tuple(out)

    def element(self, word=()):
        """The element of a word (string with 1-based letters, or 0-based ints)."""
        if isinstance(word, str):
            word = parse_word(word, self.rank)
        rows = self._id_rows
        inv = self._id_rows
        for s in word:
            if not 0 <= s < self.rank:
                raise ValueError("letter index %r out of range" % (s,))
            rows = _right_mul_gen(self, rows, s)
            inv = _left_mul_gen(self, inv, s)
        return GroupElement(self, rows, inv, _shortlex_word(self, rows, inv))

    def generator(self, s):
        return self.element((s,))


def cayley_bfs(system, max_length=None, limit=None):
    """Breadth-first enumeration of group elements.

    Parents are processed in discovery order and letters tried in
    increasing order; first-seen words are then shortlex minimal, so
    every element comes out carrying its canonical word.
    """
    order = [system.identity]
    seen = {system._id_rows}
    i = 0
    while i < len(order):
        w = order[i]
        i += 1
        if max_length is not None and w.length >= max_length:
            break  # the queue is sorted by length
        for s in range(system.rank):
            if _column_is_negative(w.rows, s):
                continue
            rows = _right_mul_gen(system, w.rows, s)
            if rows in seen:
                continue
            seen.add(rows)
            inv = _left_mul_gen(system, w.inv_rows, s)
            order.append(GroupElement(system, rows, inv, w.word + (s,)))
            if limit is not None and len(order) > limit:
                raise LimitExceeded("enumeration exceeded %d elements" % limit)
    return order


def weak_order_leq(u, w):
    """Right weak order: u <= w iff l(u) + l(u^-1 w) = l(w)."""
    if u.length > w.length:
        return False
    return u.length + (u.inverse() * w).length == w.length


def is_reflection(w):
    """The positive root negated by w, or None.

    An involution is a reflection exactly when it negates a single
    positive root, so the check and the root come out together.
    """
    if w.length % 2 == 0 or w.rows != w.inv_rows:
        return None
    found = None
    for b in w.inversion_set():
        if w.act(b) == tuple(-x for x in b):
            if found is not None:
                return None
            found = b
    return found


def _simple_index(system, coords):
    hit = None
    for i, x in enumerate(coords):
        if x != 0:
            if hit is not None or x != system.one:
                return None
            hit = i
    return hit


def reflection_from_root(system, coords):
    """The reflection through a positive root, as a group element.

    Walks the root down to a simple one; each step lowers depth by 1,
    so the word u t u^-1 built on the way is reduced.
    """
    if system.mode == "unitary" and system.norm_sq(coords) != system.one:
        raise ValueError("roots have unit norm in this representation")
    ups = []
    g = tuple(coords)
    for _ in range(10 ** 6):
        t = _simple_index(system, g)
        if t is not None:
            word = ups + [t] + ups[::-1]
            return system.element(word)
        for s in range(system.rank):
            if system.b_simple(g, s) > 0:
                ups.append(s)
                g = system.reflect(g, s)
                break
        else:
            raise ValueError("vector is not a positive root")
    raise ValueError("vector is not a positive root")
