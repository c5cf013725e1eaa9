"""Affine Weyl systems and the closed forms of their depth series.

The finite Weyl system is realized with short roots of squared norm 1,
the affine system on the basis (alpha_1..alpha_n, delta - omega) where
omega is the highest root.  Positive affine roots are k*delta + a with
a a signed finite root, and the depth generating series over them is
periodic orbit by orbit, so it collapses to an exact rational function.
"""

import math
import re
from fractions import Fraction

from .core import CoxeterSystem, preset
from .roots import root_poset
from .series import Polynomial, RationalSeries

_NAME_RE = re.compile(r"^~([A-G])(\d+)$")


def _norm_vector(letter, n):
    if letter in "ADE":
        return [Fraction(1)] * n
    if letter == "B":
        return [Fraction(1)] + [Fraction(2)] * (n - 1)
    if letter == "C":
        return [Fraction(1)] * (n - 1) + [Fraction(2)]
    if letter == "F":
        return [Fraction(2), Fraction(2), Fraction(1), Fraction(1)]
    if letter == "G":
        return [Fraction(1), Fraction(3)]
    raise ValueError("no crystallographic norms for type %s" % letter)


def _gram_from_norms(matrix, norms):
    """Symmetric bilinear form with the given squared norms on the
    diagonal; only bonds 2, 3, 4, 6 admit one."""
    rank = matrix.rank
    g = [[Fraction(0)] * rank for _ in range(rank)]
    for i in range(rank):
        g[i][i] = Fraction(norms[i])
    for i in range(rank):
        for j in range(i + 1, rank):
            m = matrix.entry(i, j)
            if m == 2:
                continue
            pair = {norms[i], norms[j]}
            if m == 3 and norms[i] == norms[j]:
                v = -Fraction(norms[i], 2)
            elif m == 4 and pair == {1, 2}:
                v = Fraction(-1)
            elif m == 6 and pair == {1, 3}:
                v = Fraction(-3, 2)
            else:
                raise ValueError("bond %d with norms %s is not crystallographic"
                                 % (m, sorted(pair)))
            g[i][j] = g[j][i] = v
    return g


class AffineDatum:
    """One affine type: finite root data plus the extended system."""

    __slots__ = (
        "name", "finite", "finite_poset", "system", "omega", "orbits",
        "_poset", "_poset_depth", "_orbit_cache",
    )

    def __init__(self, name, finite, finite_poset, system, omega, orbits):
        self.name = name
        self.finite = finite
        self.finite_poset = finite_poset
        self.system = system
        self.omega = omega
        self.orbits = orbits
        self._poset = None
        self._poset_depth = -1
        self._orbit_cache = {}

    def __repr__(self):
        return "AffineDatum(%s, %d orbit(s))" % (self.name, len(self.orbits))

    def poset(self, depth):
        """Affine root poset out to at least the given depth, cached."""
        if depth > self._poset_depth:
            self._poset = root_poset(self.system, max_depth=depth)
            self._poset_depth = depth
        return self._poset

    def root_rep(self, coords):
        """(level k, signed finite vector a) for the root k*delta + a."""
        k = coords[-1]
        if k != int(k):
            raise ValueError("non-integral delta level")
        k = int(k)
        vec = []
        for c, w in zip(coords[:-1], self.omega):
            v = c - k * w
            if v != int(v):
                raise ValueError("non-integral root coordinate")
            vec.append(int(v))
        return (k, tuple(vec))

    def rep_coords(self, rep):
        """Inverse of root_rep, in the affine simple basis."""
        k, vec = rep
        return tuple(
            Fraction(a + k * w) for a, w in zip(vec, self.omega)
        ) + (Fraction(k),)


def affine_datum(name):
    """Construct the datum for an affine type name like '~B3'."""
    m = _NAME_RE.match(name.strip().replace(" ", ""))
    if not m:
        raise ValueError("not an affine type name: %r" % name)
    letter, n = m.group(1), int(m.group(2))
    aff_matrix = preset(name)
    fin_matrix = preset(letter + str(n))
    norms = _norm_vector(letter, n)
    gram = _gram_from_norms(fin_matrix, norms)
    finite = CoxeterSystem(matrix=fin_matrix, gram=gram)
    finite_poset = root_poset(finite, limit=4 * n ** 4 + 200)

    omega = _highest_root(finite, finite_poset)
    orbits = _orbit_split(finite, finite_poset, omega)

    rank = n + 1
    ext = [[Fraction(0)] * rank for _ in range(rank)]
    for i in range(n):
        for j in range(n):
            ext[i][j] = gram[i][j]
    w2 = finite.bilinear(omega, omega)
    basis = [tuple(Fraction(i == j) for j in range(n)) for i in range(n)]
    for i in range(n):
        b = finite.bilinear(basis[i], omega)
        ext[i][n] = ext[n][i] = -b
    ext[n][n] = w2
    system = CoxeterSystem(matrix=aff_matrix, gram=ext)
    return AffineDatum(name, finite, finite_poset, system, omega, orbits)


def _highest_root(finite, poset):
    """The coefficientwise maximum of the positive roots."""
    best = max(poset.roots, key=lambda r: sum(r.coords))
    w2 = finite.norm_sq(best.coords)
    for r in poset.roots:
        if any(c > b for c, b in zip(r.coords, best.coords)):
            raise ArithmeticError("no coefficientwise-largest root")
        if finite.norm_sq(r.coords) > w2:
            raise ArithmeticError("a root is longer than the highest root")
        num = 2 * finite.bilinear(r.coords, best.coords)
        if num < 0 or num / w2 not in (0, 1, 2):
            raise ArithmeticError("highest-root pairing out of range")
    return tuple(best.coords)


def _orbit_split(finite, poset, omega):
    """Orbits of the reflection action on positive roots.

    Returned largest first is never needed; the list is ordered so the
    first orbit is the smaller one, ties broken toward the orbit of the
    highest root.
    """
    count = len(poset.roots)
    parent = list(range(count))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i, r in enumerate(poset.roots):
        for s in range(finite.rank):
            j = poset.index.get(finite.reflect(r.coords, s))
            if j is not None:
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[ri] = rj
    groups = {}
    for i in range(count):
        groups.setdefault(find(i), []).append(i)
    orbits = sorted(groups.values(), key=len)
    if len(orbits) > 2:
        raise ArithmeticError("more than two root orbits")
    if len(orbits) == 2 and len(orbits[0]) == len(orbits[1]):
        iw = poset.index[omega]
        if iw not in orbits[0]:
            orbits.reverse()
    for orbit in orbits:
        norms = {finite.norm_sq(poset.roots[i].coords) for i in orbit}
        if len(norms) != 1:
            raise ArithmeticError("root norm is not constant on an orbit")
    return [sorted(o) for o in orbits]


class OrbitSeries:
    """Depth data of one orbit's level-zero slice."""

    __slots__ = ("orbit", "p", "m", "depths")

    def __init__(self, orbit, p, m, depths):
        self.orbit = orbit
        self.p = p
        self.m = m
        self.depths = depths

    def series(self):
        den = Polynomial([1] + [0] * self.m + [-1])
        return RationalSeries(self.p, den)

    def __repr__(self):
        return "OrbitSeries(orbit=%d, M=%d)" % (self.orbit, self.m)


def orbit_series(datum, orbit_index):
    """Depth polynomial of the slice {a, delta - a : a in the orbit}."""
    cached = datum._orbit_cache.get(orbit_index)
    if cached is not None:
        return cached
    orbit = datum.orbits[orbit_index]
    targets = []
    for i in orbit:
        a = datum.finite_poset.roots[i].coords
        targets.append(tuple(a) + (Fraction(0),))
        targets.append(
            tuple(w - c for w, c in zip(datum.omega, a)) + (Fraction(1),)
        )
    poset = datum.poset(2 * len(orbit))
    depths = {}
    for coords in targets:
        j = poset.index.get(coords)
        if j is None:
            raise ArithmeticError("orbit slice escaped the depth bound")
        depths[datum.root_rep(coords)] = poset.roots[j].depth
    m = max(depths.values())
    counts = [0] * (m + 1)
    for d in depths.values():
        counts[d] += 1
    out = OrbitSeries(orbit_index, Polynomial(counts), m, depths)
    datum._orbit_cache[orbit_index] = out
    return out


def depth_polynomial(datum):
    """Numerator P and period M with sum(q^dp) = P(q)/(1 - q^M),
    P left unreduced so its coefficients can be read off."""
    data = [orbit_series(datum, i) for i in range(len(datum.orbits))]
    lcm = math.lcm(*(d.m + 1 for d in data))
    total = Polynomial()
    for d in data:
        period = d.m + 1
        spread = Polynomial(
            [1 if (lcm - j) % period == 0 and j < lcm else 0 for j in range(lcm)]
        )
        total = total + spread * d.p
    return total, lcm


def depth_series(datum):
    """sum(q^dp) over all positive affine roots, reduced."""
    p, m = depth_polynomial(datum)
    return RationalSeries(p, Polynomial([1] + [0] * (m - 1) + [-1]))


def reflection_series(datum):
    """Length generating series of the reflections: q * Phi(q^2)."""
    return depth_series(datum).substitute_power(2).times_power(1)


class AffineSlice:
    """Level-k copy of an orbit slice with its depths and cover edges."""

    __slots__ = ("orbit", "level", "depths", "edges")

    def __init__(self, orbit, level, depths, edges):
        self.orbit = orbit
        self.level = level
        self.depths = depths
        self.edges = edges

    def __repr__(self):
        return "AffineSlice(orbit=%d, level=%d, %d roots)" % (
            self.orbit, self.level, len(self.depths))


def affine_slice(datum, orbit_index, k):
    """The roots k*delta + a and (k+1)*delta - a over one orbit, with
    depths and the cover edges that stay inside the slice."""
    base = orbit_series(datum, orbit_index)
    need = (k + 1) * (base.m + 1)
    poset = datum.poset(need)
    reps = set()
    for (lvl, vec), _ in base.depths.items():
        reps.add((lvl + k, vec))
    depths = {}
    ids = {}
    for rep in reps:
        j = poset.index.get(datum.rep_coords(rep))
        if j is None:
            raise ArithmeticError("slice escaped the computed depth")
        depths[rep] = poset.roots[j].depth
        ids[j] = rep
    edges = []
    for lo, hi, s, long_step in poset.edges:
        if lo in ids and hi in ids:
            edges.append((ids[lo], ids[hi], s, long_step))
    return AffineSlice(orbit_index, k, depths, sorted(edges))


def affine_to_obj(datum, terms=None):
    """Summary dictionary: per-orbit data, combined closed form, and
    the reflection series."""
    p, m = depth_polynomial(datum)
    phi = depth_series(datum)
    refl = reflection_series(datum)
    orbits = []
    for i in range(len(datum.orbits)):
        d = orbit_series(datum, i)
        orbits.append({
            "orbit": i + 1,
            "size": len(datum.orbits[i]),
            "P": [str(c) for c in d.p.coeffs],
            "M": d.m,
        })
    obj = {
        "type": datum.name,
        "rank": datum.finite.rank,
        "positive_roots": len(datum.finite_poset.roots),
        "highest_root": [str(c) for c in datum.omega],
        "orbit_series": orbits,
        "depth_numerator": [str(c) for c in p.coeffs],
        "depth_period": m,
        "depth_series": phi.to_obj(terms),
        "reflection_series": refl.to_obj(terms),
    }
    return obj
