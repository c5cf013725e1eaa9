"""Positive roots graded by depth: covers, dominance, m-smallness.

Depth dp(b) is the least length of a group element sending b into the
simple system, so simple roots sit at depth 0.  For a
positive root b and a generator s the sign of B(b, a_s) tells where
s(b) sits: negative means a cover b < s(b), positive means a step down,
zero means s fixes b.  A cover is long when B(b, a_s)^2 >= |b|^2 |a_s|^2;
dp_inf counts the long covers along any path up from a simple root (the
count is path independent), and a root is m-small when dp_inf <= m.
"""

from __future__ import annotations

from fractions import Fraction

from .core import LimitExceeded, _simple_index
from .field import AlgebraicNumber


class Root:
    """A positive root with its grading data."""

    __slots__ = ("coords", "depth", "dpinf", "norm_sq", "index")

    def __init__(self, coords, depth, dpinf, norm_sq, index):
        self.coords = coords
        self.depth = depth
        self.dpinf = dpinf
        self.norm_sq = norm_sq
        self.index = index

    def __repr__(self):
        return "Root(%r, depth=%d, dpinf=%d)" % (self.coords, self.depth, self.dpinf)


def _entry_digit(x):
    if isinstance(x, AlgebraicNumber):
        if not x.is_rational():
            return None
        x = x.rational()
    x = Fraction(x)
    if x.denominator != 1 or not 0 <= x.numerator <= 9:
        return None
    return str(x.numerator)


def _entry_str(x):
    return str(x)


class RootPoset:
    """Roots in breadth-first depth order together with the cover edges.

    Edges are (lower_index, upper_index, letter, long) tuples.  When
    built with an m-small bound the poset holds exactly the m-small
    roots; every m-small root keeps all of its lower covers, since the
    roots below an m-small root are m-small themselves.
    """

    def __init__(self, system, roots, edges, msmall, depth_cap):
        self.system = system
        self.roots = roots
        self.edges = edges
        self.msmall = msmall
        self.depth_cap = depth_cap
        self.index = {r.coords: r.index for r in roots}
        self.up = [[] for _ in roots]
        self.down = [[] for _ in roots]
        for lo, hi, s, is_long in edges:
            self.up[lo].append((s, hi, is_long))
            self.down[hi].append((s, lo, is_long))

    def __len__(self):
        return len(self.roots)

    def index_of(self, coords):
        return self.index.get(tuple(coords))

    def max_depth(self):
        return self.roots[-1].depth if self.roots else 0

    def label(self, i):
        coords = self.roots[i].coords
        digits = [_entry_digit(x) for x in coords]
        if all(d is not None for d in digits):
            return "".join(digits)
        return "(" + ", ".join(_entry_str(x) for x in coords) + ")"

    def labels(self):
        return [self.label(i) for i in range(len(self.roots))]

    def to_dot(self):
        """Graphviz source; long covers are dashed, depths share a rank."""
        out = ["digraph roots {", "  rankdir=BT;", '  node [shape=box];']
        by_depth = {}
        for r in self.roots:
            out.append('  r%d [label="%s"];' % (r.index, self.label(r.index)))
            by_depth.setdefault(r.depth, []).append(r.index)
        for d in sorted(by_depth):
            out.append("  { rank=same; %s }" % " ".join("r%d;" % i for i in by_depth[d]))
        for lo, hi, s, is_long in self.edges:
            style = ', style=dashed' if is_long else ""
            out.append('  r%d -> r%d [label="%d"%s];' % (lo, hi, s + 1, style))
        out.append("}")
        return "\n".join(out)


def root_poset(system, max_depth=None, msmall=None, limit=None):
    """Enumerate positive roots breadth-first by depth.

    At least one of max_depth, msmall, limit must be given, since the
    full poset is infinite whenever the group is.  With msmall=m the
    enumeration prunes at dp_inf > m and terminates on its own.
    """
    if max_depth is None and msmall is None and limit is None:
        raise ValueError("need max_depth, msmall or limit")
    n = system.rank
    roots = []
    edges = []
    index = {}
    frontier = []
    for s in range(n):
        r = Root(system.simple_root(s), 0, 0, system.norms[s], s)
        roots.append(r)
        index[r.coords] = s
        frontier.append(r)
    depth = 0
    while frontier:
        if max_depth is not None and depth >= max_depth:
            break
        nxt = []
        for beta in frontier:
            for s in range(n):
                b = system.b_simple(beta.coords, s)
                if not b < 0:
                    continue
                is_long = b * b >= beta.norm_sq * system.norms[s]
                dpinf = beta.dpinf + (1 if is_long else 0)
                if msmall is not None and dpinf > msmall:
                    continue
                gamma = system.reflect(beta.coords, s)
                gi = index.get(gamma)
                if gi is None:
                    gr = Root(gamma, depth + 1, dpinf, beta.norm_sq, len(roots))
                    roots.append(gr)
                    index[gamma] = gr.index
                    nxt.append(gr)
                    if limit is not None and len(roots) > limit:
                        raise LimitExceeded("root enumeration exceeded %d" % limit)
                else:
                    gr = roots[gi]
                    if gr.depth != depth + 1 or gr.dpinf != dpinf:
                        raise ArithmeticError("depth or dp_inf is path dependent")
                edges.append((beta.index, gr.index, s, is_long))
        frontier = nxt
        depth += 1
    return RootPoset(system, roots, edges, msmall, max_depth)


def m_small_roots(system, m):
    """The poset of m-small roots (finite for every m)."""
    return root_poset(system, msmall=m)


def root_profile(system, coords):
    """(depth, dp_inf, letters) of a positive root, by greedy descent.

    Any letter with B(g, a_s) > 0 lowers depth by exactly 1, and the
    long-step count is the same along every descent, so one walk gives
    both gradings.
    """
    g = tuple(coords)
    norm = system.norm_sq(g)
    letters = []
    longs = 0
    for _ in range(10 ** 6):
        t = _simple_index(system, g)
        if t is not None:
            return len(letters), longs, letters
        for s in range(system.rank):
            b = system.b_simple(g, s)
            if b > 0:
                if b * b >= norm * system.norms[s]:
                    longs += 1
                letters.append(s)
                g = system.reflect(g, s)
                break
        else:
            raise ValueError("vector is not a positive root")
    raise ValueError("vector is not a positive root")


def root_depth(system, coords):
    return root_profile(system, coords)[0]


def root_dpinf(system, coords):
    return root_profile(system, coords)[1]


def dominates(system, beta, alpha):
    """True when beta dominates alpha: every w with w(beta) < 0 also
    sends alpha negative.  For positive roots this is B(alpha, beta) > 0
    with B^2 >= |alpha|^2 |beta|^2 and dp(alpha) <= dp(beta)."""
    beta = tuple(beta)
    alpha = tuple(alpha)
    if alpha == beta:
        return True
    b = system.bilinear(alpha, beta)
    if not b > 0:
        return False
    if b * b < system.norm_sq(alpha) * system.norm_sq(beta):
        return False
    return root_depth(system, alpha) <= root_depth(system, beta)


def dominance_set(system, beta):
    """All roots dominated by beta, as Root records (beta included)."""
    dp = root_depth(system, beta)
    poset = root_poset(system, max_depth=dp)
    nb = system.norm_sq(beta)
    beta = tuple(beta)
    out = []
    for r in poset.roots:
        if r.coords == beta:
            out.append(r)
            continue
        b = system.bilinear(r.coords, beta)
        if b > 0 and b * b >= r.norm_sq * nb:
            out.append(r)
    return out
