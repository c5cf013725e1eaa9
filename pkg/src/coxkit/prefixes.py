"""Reflection prefixes.

Every reflection t with l(t) = 2k + 1 has reduced words of the
palindromic shape s_1 .. s_k r s_k .. s_1, and the half-word
p = s_1 .. s_k r already determines t = p r p^-1.  These p are the
prefixes of t: the elements with a unique right descent r such that
conjugating r keeps every letter, l(p r p^-1) = 2 l(p) - 1.  Prefix
words of t are spelled by the saturated chains of the root poset that
end at the root of t.
"""

from .core import _simple_index, format_word, is_reflection
from .roots import root_poset, root_profile


class ReflectionPrefix:
    """A prefix p together with the reflection it closes up to."""

    __slots__ = ("element", "reflection", "root", "descent")

    def __init__(self, element, reflection, root, descent):
        self.element = element
        self.reflection = reflection
        self.root = root
        self.descent = descent

    def __repr__(self):
        rank = self.element.system.rank
        return "ReflectionPrefix(%s -> %s)" % (
            format_word(self.element.word, rank),
            format_word(self.reflection.word, rank),
        )


def _reflection_root(system, t):
    root = is_reflection(t)
    if root is None:
        raise ValueError("element is not a reflection")
    return root


def is_reflection_prefix(system, w):
    """The ReflectionPrefix record of w, or None.

    Tests the definition directly: the right descent r must be unique
    and the conjugate w r w^-1 must have length 2 l(w) - 1.
    """
    if w.is_identity():
        raise ValueError("the identity has no descent to close up")
    des = w.right_descents()
    if len(des) != 1:
        return None
    r = des[0]
    t = w * system.generator(r) * w.inverse()
    if t.length != 2 * w.length - 1:
        return None
    root = tuple(-x for x in w.act(system.simple_root(r)))
    return ReflectionPrefix(w, t, root, r)


def check_prefix_bilinear(system, w):
    """Prefix test through the form alone.

    With r a right descent of w and b the root of w r w^-1, the element
    w is a prefix exactly when B(a, b) > 0 for every inversion a of w.
    """
    if w.is_identity():
        raise ValueError("the identity has no descent to close up")
    r = w.word[-1]
    b = tuple(-x for x in w.act(system.simple_root(r)))
    for a in w.inversion_set():
        if not system.bilinear(a, b) > 0:
            return False
    return True


def prefix_of_reflection(system, t):
    """One prefix of t, found by walking its root down greedily."""
    root = _reflection_root(system, t)
    ups = []
    g = root
    for _ in range(10 ** 6):
        s = _simple_index(system, g)
        if s is not None:
            p = system.element(ups + [s])
            return ReflectionPrefix(p, t, root, s)
        for s in range(system.rank):
            if system.b_simple(g, s) > 0:
                ups.append(s)
                g = system.reflect(g, s)
                break
        else:
            raise ValueError("vector is not a positive root")
    raise ArithmeticError("descent from root did not reach a simple root")


def prefixes_of(system, t):
    """Every prefix of the reflection t.

    Walks all saturated chains of the root poset from the root of t
    down to a simple root; the chain letters followed by the simple
    letter spell a prefix word.  Distinct chains can spell the same
    element, so the result is deduplicated.
    """
    root = _reflection_root(system, t)
    dp, _, _ = root_profile(system, root)
    poset = root_poset(system, max_depth=dp)
    out = {}
    stack = [(poset.index_of(root), [])]
    while stack:
        i, letters = stack.pop()
        downs = poset.down[i]
        if not downs:
            s = _simple_index(system, poset.roots[i].coords)
            p = system.element(letters + [s])
            if p.length != dp + 1:
                raise ArithmeticError("chain word for a prefix is not reduced")
            if p not in out:
                out[p] = ReflectionPrefix(p, t, root, s)
            continue
        for s, lo, _ in downs:
            stack.append((lo, letters + [s]))
    return sorted(out.values(), key=lambda pre: pre.element.word)


def palindromic_word(system, t):
    """A reduced word for the reflection t of the shape u r reverse(u)."""
    w = prefix_of_reflection(system, t).element.word
    return w + w[:-1][::-1]


def dominance_set(system, t):
    """Roots dominated by the root b of t, b itself included.

    Any single prefix p of t suffices: the dominated roots are the
    inversions a of p with B(a, b)^2 >= |a|^2 |b|^2 and B(a, b) > 0.
    """
    pre = prefix_of_reflection(system, t)
    b = pre.root
    nb = system.norm_sq(b)
    out = []
    for a in pre.element.inversion_set():
        if a == b:
            out.append(a)
            continue
        v = system.bilinear(a, b)
        if v > 0 and v * v >= system.norm_sq(a) * nb:
            out.append(a)
    return out
