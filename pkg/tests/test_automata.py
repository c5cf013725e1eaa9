"""Word acceptors built on small-root subsets."""

import json

import pytest

import coxkit as ck
from coxkit.automata import (
    accepts, build_automaton, count_by_length, dfa_to_dot, dfa_to_obj,
    low_elements,
)
from oracles import reduced_word_trie


def system(name):
    return ck.CoxeterSystem(matrix=ck.preset(name))


def test_red_accepts_empty_pref_does_not():
    sysm = system("A2")
    red = build_automaton(sysm, 0, "red")
    pref = build_automaton(sysm, 0, "pref")
    assert accepts(red, ())
    assert not accepts(pref, ())


def test_kind_validation():
    with pytest.raises(ValueError):
        build_automaton(system("A2"), 0, "blue")


def test_red_counts_words_not_elements():
    # the longest element of A2 has two reduced words
    red = build_automaton(system("A2"), 0, "red")
    assert count_by_length(red, 5) == [1, 2, 2, 2, 0, 0]


def test_red_counts_match_trie():
    for name in ("A3", "B3", "~A2"):
        sysm = system(name)
        red = build_automaton(sysm, 0, "red")
        by_len = {}
        for w, _ in reduced_word_trie(sysm, 8):
            by_len[len(w)] = by_len.get(len(w), 0) + 1
        got = count_by_length(red, 8)
        assert got == [by_len.get(k, 0) for k in range(9)], name


def test_transitions_deterministic_and_total_on_states():
    dfa = build_automaton(system("~C2"), 1, "red")
    seen = set()
    for src, s, dst in dfa.transitions:
        assert (src, s) not in seen
        seen.add((src, s))
        assert 0 <= dst < len(dfa.states)
        assert dfa.step(src, s) == dst


def test_pref_finals_carry_the_flag():
    dfa = build_automaton(system("~A2"), 0, "pref")
    for i, (key, flag) in enumerate(dfa.states):
        assert (i in dfa.finals) == bool(flag)


def test_larger_m_same_language():
    sysm = system("~A2")
    tries = [w for w, _ in reduced_word_trie(sysm, 7)]
    dfas = [build_automaton(sysm, m, "pref") for m in (0, 1, 2)]
    assert len(dfas[0].states) <= len(dfas[1].states) <= len(dfas[2].states)
    for w in tries:
        answers = {accepts(d, w) for d in dfas}
        assert len(answers) == 1, w


def test_set_count_collapses_pref_flags():
    dfa = build_automaton(system("~A2"), 0, "pref")
    assert dfa.set_count <= len(dfa.states)
    red = build_automaton(system("~A2"), 0, "red")
    assert red.set_count == len(red.states)


def test_state_labels_name_small_roots():
    dfa = build_automaton(system("A2"), 0, "red")
    assert dfa.state_label(0) == "{}"
    labels = [dfa.state_label(i) for i in range(len(dfa.states))]
    assert len(set(labels)) == len(labels)


def test_obj_uses_one_based_letters():
    dfa = build_automaton(system("A2"), 0, "red")
    obj = dfa_to_obj(dfa)
    text = json.dumps(obj)
    parsed = json.loads(text)
    letters = {t[1] for t in parsed["transitions"]}
    assert letters <= {1, 2}
    assert parsed["initial"] == 0
    assert parsed["kind"] == "red"
    assert len(parsed["states"]) == len(dfa.states)


def test_dot_smoke():
    dfa = build_automaton(system("A2"), 0, "pref")
    dot = dfa_to_dot(dfa)
    assert dot.startswith("digraph")
    # the initial state rejects, so it is drawn shaded
    assert "fillcolor=gray85" in dot
    assert dot.count("->") == len(dfa.transitions)


def test_low_elements_finite_group_lists_everyone():
    sysm = system("A2")
    low = low_elements(sysm, 0)
    assert len(low) == 6
    assert low[0].is_identity()
    lengths = [w.length for w in low]
    assert lengths == sorted(lengths)


def test_low_elements_distinct_small_sets():
    sysm = system("~A2")
    low = low_elements(sysm, 0)
    dfa = build_automaton(sysm, 0, "red")
    small = dfa.poset.index
    keys = set()
    for w in low:
        key = tuple(sorted(small[c] for c in w.inversion_set() if c in small))
        keys.add(key)
    assert len(keys) == len(low) == len(dfa.states)


def test_low_elements_limit():
    with pytest.raises(ck.LimitExceeded):
        low_elements(system("~B3"), 2, limit=3)
