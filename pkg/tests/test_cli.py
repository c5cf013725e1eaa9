"""Command-line behavior: output shape, exit codes, determinism."""

import json

import pytest

from coxkit.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_roots_text(capsys):
    code, out, err = run(capsys, "roots", "A3", "--max-depth", "6")
    assert code == 0
    assert "depth 0:" in out
    assert out.rstrip().endswith("6 roots")


def test_roots_json_and_covers(capsys):
    code, out, _ = run(capsys, "roots", "~A2", "--max-depth", "3", "--json")
    assert code == 0
    obj = json.loads(out)
    assert obj["rank"] == 3
    assert len(obj["roots"]) == 12
    letters = {c[2] for c in obj["covers"]}
    assert letters <= {1, 2, 3}


def test_roots_dot_file(tmp_path, capsys):
    target = tmp_path / "poset.dot"
    code, _, _ = run(capsys, "roots", "A2", "--max-depth", "3",
                     "--dot", str(target))
    assert code == 0
    assert target.read_text().startswith("digraph")


def test_automaton_series(capsys):
    code, out, _ = run(capsys, "automaton", "~A2", "--kind", "pref",
                       "--series", "--terms", "8")
    assert code == 0
    assert "states: 16" in out
    assert "series coefficients:" in out


def test_automaton_json(capsys):
    code, out, _ = run(capsys, "automaton", "A2", "--json", "--series")
    assert code == 0
    obj = json.loads(out)
    assert obj["kind"] == "red"
    assert obj["series"]["num"] == ["1", "2", "2", "2"]
    assert obj["series"]["den"] == ["1"]


def test_reflections_census(capsys):
    code, out, _ = run(capsys, "reflections", "A2", "--max-length", "3")
    assert code == 0
    assert "census by length: 1:2 3:1" in out


def test_prefixes_of_reflection(capsys):
    code, out, _ = run(capsys, "prefixes", "A3", "12321", "--json")
    assert code == 0
    obj = json.loads(out)
    assert sorted(obj["prefixes"]) == ["123", "132", "321"]
    assert obj["palindrome"] == "12321"


def test_prefixes_word_check(capsys):
    code, out, _ = run(capsys, "prefixes", "A3", "12")
    assert code == 0
    assert "reflection-prefix of" in out
    code, out, _ = run(capsys, "prefixes", "A3", "21")
    assert code == 0
    assert "reflection-prefix of" in out


def test_prefixes_identity_is_domain_error(capsys):
    code, _, err = run(capsys, "prefixes", "A3", "e")
    assert code == 4
    assert "error" in err


def test_dihedral_pinned(capsys):
    code, out, _ = run(capsys, "dihedral", "[[1,3,3],[3,1,4],[3,4,1]]",
                       "3123213", "3132313", "--json")
    assert code == 0
    obj = json.loads(out)
    assert obj["canonical"] == ["1", "31213"]
    assert obj["order_m"] == 4


def test_dihedral_rejects_non_reflection(capsys):
    code, _, err = run(capsys, "dihedral", "A3", "12", "2")
    assert code == 4


def test_affine_text(capsys):
    code, out, _ = run(capsys, "affine", "~A2", "--terms", "5")
    assert code == 0
    assert "orbit 1 (size 3)" in out
    assert "depth series" in out
    assert "reflection series" in out


def test_affine_json(capsys):
    code, out, _ = run(capsys, "affine", "~B3", "--json", "--terms", "4")
    assert code == 0
    obj = json.loads(out)
    assert obj["depth_period"] == 20
    assert obj["orbit_series"][0]["M"] in (3, 4)


def test_affine_rejects_finite_type(capsys):
    code, _, _ = run(capsys, "affine", "A3")
    assert code == 2


def test_bad_spec_exit_code(capsys):
    code, _, _ = run(capsys, "roots", "Z9", "--max-depth", "3")
    assert code == 2


def test_limit_exit_code(capsys):
    code, _, _ = run(capsys, "roots", "~A2", "--max-depth", "40",
                     "--max-roots", "20")
    assert code == 3


def test_mem_cap_must_be_integer(capsys, monkeypatch):
    monkeypatch.setenv("COXKIT_MAX_MEM", "lots")
    code, _, err = run(capsys, "roots", "A2", "--max-depth", "2")
    assert code == 2
    assert "COXKIT_MAX_MEM" in err


def test_output_is_deterministic(capsys):
    argv = ("automaton", "~C2", "--m", "1", "--kind", "pref", "--series",
            "--terms", "10", "--json")
    _, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv)
    assert first == second
