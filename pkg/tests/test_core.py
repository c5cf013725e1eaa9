"""Group arithmetic, normal forms, and enumeration."""

import random

import pytest

import coxkit as ck
from oracles import reduced_word_trie


def system(name):
    return ck.CoxeterSystem(matrix=ck.preset(name))


def test_preset_matrix_entries():
    m = ck.preset("B3")
    assert m.rank == 3
    assert m.entry(0, 1) == 4
    assert m.entry(1, 2) == 3
    assert m.entry(2, 1) == 3
    assert m.entry(0, 0) == 1
    inf = ck.preset("I2(inf)")
    assert inf.entry(0, 1) == 0


def test_matrix_validation():
    with pytest.raises(ValueError):
        ck.CoxeterMatrix([[1, 2], [3, 1]])
    with pytest.raises(ValueError):
        ck.CoxeterMatrix([[1, 3], [3, 2]])
    with pytest.raises(ValueError):
        ck.CoxeterMatrix([[1, 1], [1, 1]])


def test_descriptor_accepts_name_and_rows():
    a = ck.coxeter_matrix_from_descriptor("A3")
    b = ck.coxeter_matrix_from_descriptor("[[1,3,2],[3,1,3],[2,3,1]]")
    assert a.entries == b.entries


def test_parse_and_format_word_round_trip():
    assert ck.parse_word("121", 3) == (0, 1, 0)
    assert ck.parse_word("e", 3) == ()
    assert ck.parse_word("", 3) == ()
    assert ck.parse_word("1 2 1", 3) == (0, 1, 0)
    assert ck.format_word((0, 1, 0), 3) == "121"
    assert ck.format_word((), 3) == "e"
    with pytest.raises(ValueError):
        ck.parse_word("4", 3)


def test_identity_and_generators():
    w = system("A3")
    e = w.identity
    assert e.length == 0
    assert e.word == ()
    for s in range(3):
        g = w.generator(s)
        assert g.length == 1
        assert g * g == e
        assert g.inverse() == g


def test_element_word_is_shortlex_minimal():
    """The stored word is the lexicographically first reduced word."""
    sysm = system("A3")
    best = {}
    for word, el in reduced_word_trie(sysm, 6):
        if el not in best or word < best[el]:
            best[el] = word
    assert len(best) == 24
    for el, word in best.items():
        assert el.word == word
        assert el.length == len(word)


def test_length_is_inversion_count():
    sysm = system("B3")
    for word, el in reduced_word_trie(sysm, 7):
        inv = el.inversion_set()
        assert len(inv) == el.length
        assert len(set(inv)) == el.length


def test_braid_equal_words_collapse():
    sysm = system("~A2")
    u = sysm.element("2313")
    v = sysm.element("2131")
    assert u == v
    assert hash(u) == hash(v)
    assert u.word == v.word


def test_multiplication_against_words():
    sysm = system("H3")
    rng = random.Random(3)
    words = [w for w, _ in reduced_word_trie(sysm, 5)]
    for _ in range(40):
        a = rng.choice(words)
        b = rng.choice(words)
        assert sysm.element(a) * sysm.element(b) == sysm.element(a + b)


def test_right_descents_match_length_drop():
    sysm = system("~A2")
    for word, el in reduced_word_trie(sysm, 6):
        des = set(el.right_descents())
        for s in range(3):
            drops = el.times_gen(s).length < el.length
            assert (s in des) == drops


def test_act_preserves_form():
    sysm = system("H3")
    rng = random.Random(5)
    words = [w for w, _ in reduced_word_trie(sysm, 6)]
    for _ in range(25):
        el = sysm.element(rng.choice(words))
        a = sysm.simple_root(rng.randrange(3))
        b = sysm.simple_root(rng.randrange(3))
        assert sysm.bilinear(el.act(a), el.act(b)) == sysm.bilinear(a, b)


def test_cayley_bfs_order_and_count():
    sysm = system("A3")
    ball = ck.cayley_bfs(sysm)
    assert len(ball) == 24
    lengths = [w.length for w in ball]
    assert lengths == sorted(lengths)
    # shortlex within a length
    for i in range(len(ball) - 1):
        if ball[i].length == ball[i + 1].length:
            assert ball[i].word < ball[i + 1].word
    assert max(lengths) == 6


def test_cayley_bfs_radius():
    sysm = system("~A2")
    ball = ck.cayley_bfs(sysm, max_length=5)
    from oracles import reduced_word_trie as trie
    elements = {el for _, el in trie(sysm, 5)}
    assert set(ball) == elements


def test_cayley_bfs_limit():
    sysm = system("~A2")
    with pytest.raises(ck.LimitExceeded):
        ck.cayley_bfs(sysm, max_length=12, limit=50)


def test_weak_order():
    sysm = system("A3")
    e = sysm.identity
    w = sysm.element("121")
    assert ck.weak_order_leq(sysm.element("1"), w)
    assert ck.weak_order_leq(sysm.element("12"), w)
    # 212 is the other reduced word, so 21 is below as well
    assert ck.weak_order_leq(sysm.element("21"), w)
    assert not ck.weak_order_leq(sysm.element("13"), w)
    assert ck.weak_order_leq(e, w)


def test_reflection_round_trip():
    sysm = system("B3")
    seen = 0
    for w in ck.cayley_bfs(sysm):
        root = ck.is_reflection(w)
        if root is None:
            continue
        seen += 1
        assert ck.reflection_from_root(sysm, root) == w
        assert w * w == sysm.identity
    assert seen == 9


def test_reflection_from_root_rejects_scaled_vector():
    sysm = system("A2")
    a = sysm.simple_root(0)
    with pytest.raises(ValueError):
        ck.reflection_from_root(sysm, tuple(2 * x for x in a))


def test_custom_gram_mode():
    gram = [[1, -1], [-1, 1]]
    sysm = ck.CoxeterSystem(gram=gram)
    assert sysm.mode == "custom"
    assert sysm.matrix.entry(0, 1) == 0
    w = sysm.element("1212")
    assert w.length == 4


def test_unknown_preset():
    with pytest.raises(ValueError):
        ck.preset("Z9")
