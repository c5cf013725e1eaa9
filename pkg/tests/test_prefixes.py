"""Reflection prefixes and their palindromic closures."""

import random

import pytest

import coxkit as ck
from oracles import reduced_word_trie, is_prefix_brute


def system(name):
    return ck.CoxeterSystem(matrix=ck.preset(name))


def test_identity_has_no_closure():
    sysm = system("A2")
    with pytest.raises(ValueError):
        ck.is_reflection_prefix(sysm, sysm.identity)
    with pytest.raises(ValueError):
        ck.check_prefix_bilinear(sysm, sysm.identity)


def test_generators_are_prefixes_of_themselves():
    sysm = system("B3")
    for s in range(3):
        g = sysm.generator(s)
        p = ck.is_reflection_prefix(sysm, g)
        assert p is not None
        assert p.reflection == g
        assert p.descent == s
        assert p.root == sysm.simple_root(s)


def test_prefix_record_consistency():
    sysm = system("~A2")
    for word, el in reduced_word_trie(sysm, 6):
        if not word:
            continue
        p = ck.is_reflection_prefix(sysm, el)
        assert (p is not None) == is_prefix_brute(sysm, el)
        if p is None:
            continue
        assert p.element == el
        t = el * sysm.generator(p.descent) * el.inverse()
        assert p.reflection == t
        assert t.length == 2 * el.length - 1
        assert ck.is_reflection(t) == p.root


def test_bilinear_test_agrees():
    sysm = ck.CoxeterSystem(
        matrix=ck.CoxeterMatrix([[1, 3, 3], [3, 1, 4], [3, 4, 1]]))
    for word, el in reduced_word_trie(sysm, 6):
        if not word or len(el.right_descents()) != 1:
            continue
        assert ck.check_prefix_bilinear(sysm, el) == is_prefix_brute(sysm, el)


def test_prefixes_of_listing():
    sysm = system("A3")
    t = sysm.element("12321")
    got = ck.prefixes_of(sysm, t)
    words = {p.element.word for p in got}
    assert words == {(0, 1, 2), (0, 2, 1), (2, 1, 0)}
    for p in got:
        assert p.reflection == t
        q = ck.is_reflection_prefix(sysm, p.element)
        assert q is not None and q.reflection == t


def test_prefixes_of_rejects_non_reflections():
    sysm = system("A3")
    with pytest.raises(ValueError):
        ck.prefixes_of(sysm, sysm.element("12"))


def test_prefix_of_reflection_is_listed():
    sysm = system("~A2")
    for w in ck.cayley_bfs(sysm, max_length=7):
        root = ck.is_reflection(w)
        if root is None:
            continue
        one = ck.prefix_of_reflection(sysm, w)
        assert one.reflection == w
        assert one.element in {p.element for p in ck.prefixes_of(sysm, w)}


def test_palindromic_word_spells_reflection():
    sysm = system("B3")
    for w in ck.cayley_bfs(sysm):
        if ck.is_reflection(w) is None:
            continue
        word = ck.palindromic_word(sysm, w)
        assert word == word[::-1]
        assert len(word) == w.length
        assert sysm.element(word) == w


def test_dominance_set_of_reflection():
    sysm = system("~A2")
    rng = random.Random(11)
    refs = [w for w in ck.cayley_bfs(sysm, max_length=9)
            if ck.is_reflection(w) is not None]
    for t in rng.sample(refs, 6):
        out = ck.dominance_set(sysm, t)
        root = ck.is_reflection(t)
        assert root in out
        assert len(set(out)) == len(out)
        for a in out:
            assert ck.dominates(sysm, root, a)
