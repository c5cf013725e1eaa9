"""Canonical automata on m-small inversion sets.

A word s_1...s_k drives the reversed product u_k = s_k...s_1, and the
state after reading it is the small inversion set of u_k.  With every
state accepting, the automaton recognizes exactly the reduced words.
Tracking one extra bit per state, whether the last letter moved the
previous set entirely off itself, cuts the language down to reduced
words of reflection-prefix elements.
"""

from .core import LimitExceeded, cayley_bfs, format_word
from .roots import m_small_roots


class Dfa:
    """Deterministic automaton over the generators of one system."""

    __slots__ = (
        "system", "kind", "m", "poset", "states", "transitions",
        "finals", "initial", "set_count", "_delta",
    )

    def __init__(self, system, kind, m, poset, states, transitions, finals):
        self.system = system
        self.kind = kind
        self.m = m
        self.poset = poset
        self.states = states
        self.transitions = transitions
        self.finals = finals
        self.initial = 0
        self.set_count = len({key for key, _ in states})
        self._delta = {(src, s): dst for src, s, dst in transitions}

    def __repr__(self):
        return "Dfa(%s, m=%d, %d states)" % (self.kind, self.m, len(self.states))

    def step(self, state, s):
        return self._delta.get((state, s))

    def state_label(self, i):
        key, _ = self.states[i]
        return "{%s}" % ",".join(self.poset.label(j) for j in key)


def build_automaton(system, m, kind="red"):
    """Breadth-first construction over subsets of the m-small roots."""
    if kind not in ("red", "pref"):
        raise ValueError("kind must be 'red' or 'pref'")
    poset = m_small_roots(system, m)
    rank = system.rank
    for s in range(rank):
        if poset.roots[s].depth != 0:
            raise ArithmeticError("small-root enumeration lost a simple root")
    images = [
        [poset.index.get(system.reflect(r.coords, s)) for r in poset.roots]
        for s in range(rank)
    ]
    pref = kind == "pref"
    initial = (frozenset(), False) if pref else frozenset()
    states = [initial]
    ids = {initial: 0}
    transitions = []
    i = 0
    while i < len(states):
        key = states[i]
        xset = key[0] if pref else key
        for s in range(rank):
            if s in xset:
                continue
            img = images[s]
            new = {s}
            hit = False
            for b in xset:
                j = img[b]
                if j is not None:
                    new.add(j)
                    if j in xset:
                        hit = True
            new = frozenset(new)
            nkey = (new, not hit) if pref else new
            dst = ids.get(nkey)
            if dst is None:
                dst = len(states)
                ids[nkey] = dst
                states.append(nkey)
            transitions.append((i, s, dst))
        i += 1
    if pref:
        out = [(tuple(sorted(key[0])), key[1]) for key in states]
        finals = frozenset(i for i, key in enumerate(states) if key[1])
    else:
        out = [(tuple(sorted(key)), None) for key in states]
        finals = frozenset(range(len(states)))
    return Dfa(system, kind, m, poset, out, transitions, finals)


def accepts(dfa, word):
    """Run the automaton on a word of 0-based letters."""
    state = dfa.initial
    for s in word:
        state = dfa.step(state, s)
        if state is None:
            return False
    return state in dfa.finals


def count_by_length(dfa, max_len):
    """Accepted-word counts for lengths 0..max_len."""
    n = len(dfa.states)
    vec = [0] * n
    vec[dfa.initial] = 1
    out = [sum(vec[i] for i in dfa.finals)]
    for _ in range(max_len):
        nxt = [0] * n
        for src, _, dst in dfa.transitions:
            if vec[src]:
                nxt[dst] += vec[src]
        vec = nxt
        out.append(sum(vec[i] for i in dfa.finals))
    return out


def low_elements(system, m, limit=None):
    """Shortest group element realizing each small inversion set.

    Breadth-first over the group, keeping the first element whose
    inversion set meets the m-small roots in a set not seen before;
    stops once every set reachable in the automaton has an owner.
    """
    dfa = build_automaton(system, m, "red")
    targets = {key for key, _ in dfa.states}
    small = dfa.poset.index
    found = {}
    depth = 4
    while True:
        for u in cayley_bfs(system, max_length=depth, limit=limit):
            key = tuple(sorted(
                small[c] for c in u.inversion_set() if c in small
            ))
            if key not in found:
                found[key] = u
        if targets <= set(found):
            break
        if limit is not None and depth > limit:
            raise LimitExceeded("ball of length %d has sets missing" % depth)
        depth *= 2
    return sorted((found[key] for key in targets), key=lambda u: (u.length, u.word))


def dfa_to_dot(dfa):
    """Graphviz source; non-final states shaded, letters shown 1-based."""
    lines = [
        "digraph automaton {",
        "  rankdir=LR;",
        '  node [shape=ellipse, fontname="Helvetica"];',
    ]
    for i in range(len(dfa.states)):
        attrs = ['label="%s"' % dfa.state_label(i)]
        if i not in dfa.finals:
            attrs.append("style=filled")
            attrs.append("fillcolor=gray85")
        if i == dfa.initial:
            attrs.append("penwidth=2")
        lines.append("  n%d [%s];" % (i, ", ".join(attrs)))
    for src, s, dst in dfa.transitions:
        lines.append('  n%d -> n%d [label="%d"];' % (src, dst, s + 1))
    lines.append("}")
    return "\n".join(lines) + "\n"


def dfa_to_obj(dfa):
    """Plain dictionary form, letters 1-based, sets as root labels."""
    return {
        "kind": dfa.kind,
        "m": dfa.m,
        "initial": dfa.initial,
        "set_states": dfa.set_count,
        "states": [
            {
                "set": [dfa.poset.label(j) for j in key],
                "final": i in dfa.finals,
            }
            for i, (key, _) in enumerate(dfa.states)
        ],
        "transitions": [[src, s + 1, dst] for src, s, dst in dfa.transitions],
    }
