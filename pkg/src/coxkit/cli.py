"""Command-line interface.

Subcommands cover root posets, the canonical automata, reflection
censuses, reflection-prefixes, dihedral reflection subgroups, and the
affine closed forms.  Output is deterministic; --json switches every
subcommand to a machine-readable report.

Exit codes: 0 on success, 2 for bad input, 3 when a resource cap is
hit, 4 for domain errors such as a word that is not a reflection.
"""

import argparse
import json
import os
import sys

from .affine import affine_datum, affine_to_obj, depth_polynomial, depth_series, \
    orbit_series, reflection_series
from .automata import build_automaton, dfa_to_dot, dfa_to_obj
from .core import CoxeterSystem, LimitExceeded, cayley_bfs, \
    coxeter_matrix_from_descriptor, format_word, is_reflection, parse_word
from .dihedral import canonical_generators, canonical_generators_repfree
from .prefixes import is_reflection_prefix, palindromic_word, prefixes_of
from .roots import root_poset
from .series import dfa_series


class DomainError(Exception):
    """Input parsed fine but names an object outside the operation's domain."""


def _system(spec):
    return CoxeterSystem(matrix=coxeter_matrix_from_descriptor(spec))


def _fmt(word, rank):
    return format_word(word, rank)


def _series_obj(series, terms):
    return series.to_obj(terms)


def _print_series(name, series, terms, out):
    obj = series.to_obj(terms)
    out.write("%s: num %s den %s\n" % (name, obj["num"], obj["den"]))
    out.write("%s coefficients: %s\n" % (name, obj["coefficients"]))


def cmd_roots(args, out):
    system = _system(args.spec)
    poset = root_poset(system, max_depth=args.max_depth, limit=args.max_roots)
    if args.dot:
        with open(args.dot, "w") as fh:
            fh.write(poset.to_dot())
    if args.json:
        obj = {
            "rank": system.rank,
            "max_depth": args.max_depth,
            "roots": [
                {
                    "label": poset.label(i),
                    "coords": [str(c) for c in r.coords],
                    "depth": r.depth,
                    "dp_inf": r.dpinf,
                }
                for i, r in enumerate(poset.roots)
            ],
            "covers": [
                [poset.label(lo), poset.label(hi), s + 1, bool(longe)]
                for lo, hi, s, longe in poset.edges
            ],
        }
        out.write(json.dumps(obj, indent=2) + "\n")
        return 0
    by_depth = {}
    for i, r in enumerate(poset.roots):
        by_depth.setdefault(r.depth, []).append(i)
    for d in sorted(by_depth):
        out.write("depth %d:\n" % d)
        for i in by_depth[d]:
            r = poset.roots[i]
            line = "  %s  dp_inf=%d" % (poset.label(i), r.dpinf)
            if args.poset:
                ups = [
                    "%d:%s%s" % (s + 1, poset.label(j), "(long)" if longe else "")
                    for s, j, longe in poset.up[i]
                ]
                line += "  covers: " + (", ".join(ups) if ups else "-")
            out.write(line + "\n")
    out.write("%d roots\n" % len(poset.roots))
    return 0


def cmd_automaton(args, out):
    system = _system(args.spec)
    dfa = build_automaton(system, args.m, args.kind)
    if args.dot:
        with open(args.dot, "w") as fh:
            fh.write(dfa_to_dot(dfa))
    series = dfa_series(dfa) if args.series else None
    if args.json:
        obj = dfa_to_obj(dfa)
        if series is not None:
            obj["series"] = _series_obj(series, args.terms)
        out.write(json.dumps(obj, indent=2) + "\n")
        return 0
    out.write("kind=%s m=%d\n" % (dfa.kind, dfa.m))
    out.write("states: %d (distinct small sets: %d), final: %d, transitions: %d\n"
              % (len(dfa.states), dfa.set_count, len(dfa.finals),
                 len(dfa.transitions)))
    if series is not None:
        _print_series("series", series, args.terms, out)
    return 0


def cmd_reflections(args, out):
    system = _system(args.spec)
    ball = cayley_bfs(system, max_length=args.max_length, limit=args.max_elements)
    rows = []
    for w in ball:
        if is_reflection(w) is not None:
            rows.append(w)
    rows.sort(key=lambda w: (w.length, w.word))
    if args.json:
        obj = [
            {
                "word": _fmt(w.word, system.rank),
                "length": w.length,
                "palindrome": _fmt(palindromic_word(system, w), system.rank),
            }
            for w in rows
        ]
        out.write(json.dumps(obj, indent=2) + "\n")
        return 0
    counts = {}
    for w in rows:
        counts[w.length] = counts.get(w.length, 0) + 1
        out.write("%s  length=%d  palindrome=%s\n"
                  % (_fmt(w.word, system.rank), w.length,
                     _fmt(palindromic_word(system, w), system.rank)))
    census = " ".join("%d:%d" % (k, counts[k]) for k in sorted(counts))
    out.write("census by length: %s\n" % (census if census else "-"))
    return 0


def cmd_prefixes(args, out):
    system = _system(args.spec)
    w = system.element(parse_word(args.word, system.rank))
    if is_reflection(w) is not None:
        prefs = prefixes_of(system, w)
        pal = palindromic_word(system, w)
        if args.json:
            obj = {
                "reflection": _fmt(w.word, system.rank),
                "palindrome": _fmt(pal, system.rank),
                "prefixes": [_fmt(p.element.word, system.rank) for p in prefs],
            }
            out.write(json.dumps(obj, indent=2) + "\n")
            return 0
        out.write("reflection %s, palindromic word %s\n"
                  % (_fmt(w.word, system.rank), _fmt(pal, system.rank)))
        for p in prefs:
            out.write("  prefix %s\n" % _fmt(p.element.word, system.rank))
        out.write("%d prefixes\n" % len(prefs))
        return 0
    try:
        pref = is_reflection_prefix(system, w)
    except ValueError as exc:
        raise DomainError(str(exc))
    if args.json:
        obj = {"word": _fmt(w.word, system.rank), "is_prefix": pref is not None}
        if pref is not None:
            obj["reflection"] = _fmt(pref.reflection.word, system.rank)
        out.write(json.dumps(obj, indent=2) + "\n")
        return 0
    if pref is None:
        out.write("%s: not a reflection-prefix\n" % _fmt(w.word, system.rank))
    else:
        out.write("%s: reflection-prefix of %s\n"
                  % (_fmt(w.word, system.rank),
                     _fmt(pref.reflection.word, system.rank)))
    return 0


def cmd_dihedral(args, out):
    system = _system(args.spec)
    r = system.element(parse_word(args.word_r, system.rank))
    t = system.element(parse_word(args.word_t, system.rank))
    for w in (r, t):
        if is_reflection(w) is None:
            raise DomainError("%s is not a reflection" % _fmt(w.word, system.rank))
    sub = canonical_generators(system, r, t)
    free = canonical_generators_repfree(system, r, t)
    c1, c2 = sub.canonical
    f1, f2 = free.canonical
    if (c1, c2) != (f1, f2) or sub.order_m != free.order_m:
        raise ArithmeticError("the two canonical-generator paths disagree")
    if args.json:
        obj = {
            "generators": [_fmt(r.word, system.rank), _fmt(t.word, system.rank)],
            "canonical": [_fmt(c1.word, system.rank), _fmt(c2.word, system.rank)],
            "order_m": sub.order_m,
        }
        out.write(json.dumps(obj, indent=2) + "\n")
        return 0
    m = sub.order_m if sub.order_m else "infinite-or-large"
    out.write("canonical generators: {%s, %s}, m = %s\n"
              % (_fmt(c1.word, system.rank), _fmt(c2.word, system.rank), m))
    return 0


def cmd_affine(args, out):
    datum = affine_datum(args.type)
    if args.json:
        out.write(json.dumps(affine_to_obj(datum, args.terms), indent=2) + "\n")
        return 0
    out.write("type %s, %d positive finite roots, highest root (%s)\n"
              % (datum.name, len(datum.finite_poset.roots),
                 ", ".join(str(c) for c in datum.omega)))
    for i in range(len(datum.orbits)):
        d = orbit_series(datum, i)
        out.write("orbit %d (size %d): P = %s, M = %d\n"
                  % (i + 1, len(datum.orbits[i]),
                     [str(c) for c in d.p.coeffs], d.m))
    p, m = depth_polynomial(datum)
    out.write("combined: P = %s, M = %d\n" % ([str(c) for c in p.coeffs], m))
    _print_series("depth series", depth_series(datum), args.terms, out)
    _print_series("reflection series", reflection_series(datum), args.terms, out)
    return 0


def _add_common(sub):
    sub.add_argument("--json", action="store_true", help="JSON output")
    sub.add_argument("--max-elements", type=int, default=200000,
                     help="cap on enumerated group elements")
    sub.add_argument("--max-roots", type=int, default=100000,
                     help="cap on enumerated roots")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="coxkit",
        description="Exact combinatorics of Coxeter systems: root posets, "
                    "canonical automata, and Poincare series.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("roots", help="root poset by depth")
    p.add_argument("spec", help="preset name or Coxeter matrix JSON")
    p.add_argument("--max-depth", type=int, required=True)
    p.add_argument("--poset", action="store_true", help="show cover lists")
    p.add_argument("--dot", metavar="FILE", help="write DOT to FILE")
    _add_common(p)
    p.set_defaults(func=cmd_roots)

    p = subs.add_parser("automaton", help="canonical m-automaton")
    p.add_argument("spec")
    p.add_argument("--m", type=int, default=0)
    p.add_argument("--kind", choices=("red", "pref"), default="red")
    p.add_argument("--dot", metavar="FILE")
    p.add_argument("--series", action="store_true",
                   help="exact generating series of the language")
    p.add_argument("--terms", type=int, default=12)
    _add_common(p)
    p.set_defaults(func=cmd_automaton)

    p = subs.add_parser("reflections", help="reflection census in a ball")
    p.add_argument("spec")
    p.add_argument("--max-length", type=int, required=True)
    _add_common(p)
    p.set_defaults(func=cmd_reflections)

    p = subs.add_parser("prefixes", help="reflection-prefix listing or check")
    p.add_argument("spec")
    p.add_argument("word", help="reflection to list prefixes of, or word to check")
    _add_common(p)
    p.set_defaults(func=cmd_prefixes)

    p = subs.add_parser("dihedral", help="canonical generators of <r, t>")
    p.add_argument("spec")
    p.add_argument("word_r")
    p.add_argument("word_t")
    _add_common(p)
    p.set_defaults(func=cmd_dihedral)

    p = subs.add_parser("affine", help="affine closed forms")
    p.add_argument("type", help="affine type name such as ~B3")
    p.add_argument("--terms", type=int, default=12)
    _add_common(p)
    p.set_defaults(func=cmd_affine)

    return parser


def _apply_mem_cap():
    cap = os.environ.get("COXKIT_MAX_MEM")
    if not cap:
        return
    try:
        nbytes = int(cap)
    except ValueError:
        raise ValueError("COXKIT_MAX_MEM must be an integer byte count")
    try:
        import resource

        resource.setrlimit(resource.RLIMIT_AS, (nbytes, nbytes))
    except (ImportError, OSError):
        pass


def main(argv=None):
    try:
        _apply_mem_cap()
        args = build_parser().parse_args(argv)
        return args.func(args, sys.stdout)
    except DomainError as exc:
        sys.stderr.write("error: %s\n" % exc)
        return 4
    except LimitExceeded as exc:
        sys.stderr.write("error: %s\n" % exc)
        return 3
    except MemoryError:
        sys.stderr.write("error: memory cap exceeded\n")
        return 3
    except ValueError as exc:
        sys.stderr.write("error: %s\n" % exc)
        return 2


if __name__ == "__main__":
    sys.exit(main())
