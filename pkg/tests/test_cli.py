import json

import pytest

from tanglemoves.cli import main
from tanglemoves.engine import apply_sequence, extract_trivial_pair
from tanglemoves.io import MoveDocument, serialize_move_document
from tanglemoves.moves import ArcDecomposition, standard_move
from tanglemoves.ops import rotation_word

A = ArcDecomposition.of


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out.strip(), out.err


def write(tmp_path, name, move):
    p = tmp_path / name
    p.write_text(serialize_move_document(MoveDocument(move)))
    return str(p)


def test_count(capsys):
    assert run(capsys, "count", "3")[:2] == (0, "2")
    assert run(capsys, "count", "6")[:2] == (0, "10")


def test_order(capsys):
    code, out, _ = run(capsys, "order", "2,2", "3")
    assert code == 0
    assert out.splitlines()[0] == "yes (sh-target criterion)"
    assert run(capsys, "order", "2", "3")[1].startswith("no")


def test_order_json(capsys):
    code, out, _ = run(capsys, "order", "1,2", "2", "--format", "json")
    assert json.loads(out)["value"] == "yes"


def test_equiv_rotations(capsys, tmp_path):
    m = standard_move(A(3))
    r = extract_trivial_pair(apply_sequence(m, rotation_word(3, 1)))
    a, b = write(tmp_path, "a.json", m), write(tmp_path, "b.json", r)
    assert run(capsys, "equiv", a, b)[:2] == (0, "true")
    c = write(tmp_path, "c.json", standard_move(A(1, 2)))
    assert run(capsys, "equiv", a, c)[:2] == (0, "false")


def test_classify_and_normalize(capsys, tmp_path):
    f = write(tmp_path, "m.json", standard_move(A(1, 2)))
    assert run(capsys, "classify", f)[1] == "<1,2> O-type"
    code, out, _ = run(capsys, "normalize", f, "--format", "json")
    assert json.loads(out)["partition"] == [1, 2]


def test_domain_error_exit_1(capsys):
    assert run(capsys, "u-index", "2")[0] == 1


def test_usage_errors_exit_2(capsys, tmp_path):
    assert run(capsys, "order", "x", "3")[0] == 2
    assert run(capsys, "classify", str(tmp_path / "missing.json"))[0] == 2
    with pytest.raises(SystemExit) as e:
        main(["nonsense"])
    assert e.value.code == 2


def test_bad_document_exit_1(capsys, tmp_path):
    p = tmp_path / "bad.json"
    p.write_text('{"n": 1, "top": [[1, 2]], "bottom": [[1, 2]]}')
    code, _, err = run(capsys, "classify", str(p))
    assert code == 1 and "initial" in err


def test_budget_env(capsys, tmp_path, monkeypatch):
    f = write(tmp_path, "m.json", standard_move(A(3)))
    monkeypatch.setenv("TANGLEMOVES_BUDGET", "oops")
    assert run(capsys, "classify", f)[0] == 2
    monkeypatch.setenv("TANGLEMOVES_BUDGET", "50")
    assert run(capsys, "classify", f)[:2] == (0, "<3> X-type")


def test_hasse_dot_and_enumerate(capsys):
    code, out, _ = run(capsys, "hasse", "--n-max", "3")
    assert code == 0 and out.startswith("digraph")
    code, out, _ = run(capsys, "enumerate", "3", "--up-to-equivalence")
    assert len(out.splitlines()) == 2


def test_examples_suite(capsys):
    code, out, _ = run(capsys, "examples")
    assert code == 0
    assert all(line.startswith("PASS") for line in out.splitlines())


def test_render(capsys):
    code, out, _ = run(capsys, "render", "3")
    assert code == 0 and "i" in out
