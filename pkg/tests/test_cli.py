import json
import random

import pytest

from diagramma import cli
from diagramma import diagrams as dg
from diagramma import sampling as sm
from diagramma.graphs import make_graph, pvt_graph, save_graph
from diagramma.presentations import make_presentation


@pytest.fixture
def path3(tmp_path):
    p = tmp_path / "path3.txt"
    save_graph(make_graph(3, [(0, 1), (1, 2)]), str(p))
    return str(p)


def run(capsys, *argv):
    code = cli.main(list(argv))
    return code, capsys.readouterr().out


def test_reduce_and_eq(tmp_path, capsys):
    P = make_presentation("abc", [("ab", "ba"), ("bc", "cb")])
    rnd = random.Random(40)
    D = sm.random_diagram(rnd, P, w=(0, 1, 2), steps=4)
    DD = dg.concatenate(D, dg.inverse(D))
    f1 = tmp_path / "dd.diagram"
    dg.save_diagram(DD, str(f1))
    out_path = tmp_path / "reduced.diagram"
    code, out = run(capsys, "reduce", str(f1), "--out", str(out_path))
    assert code == 0
    before = len(DD.transistors)
    assert "transistors: %d -> 0" % before in out
    assert "dipoles_reduced: %d" % (before // 2) in out
    red = dg.load_diagram(str(out_path))
    assert dg.canonical_form(red) == \
        dg.canonical_form(dg.identity_diagram(P, DD.top))

    f2 = tmp_path / "id.diagram"
    dg.save_diagram(dg.identity_diagram(P, DD.top), str(f2))
    code, out = run(capsys, "eq", str(f1), str(f2))
    assert code == 0 and "EQUAL" in out
    f3 = tmp_path / "d.diagram"
    dg.save_diagram(D, str(f3))
    if not dg.is_trivial(D):
        code, out = run(capsys, "eq", str(f3), str(f2))
        assert code == 1 and "DIFFERENT" in out


def test_eq_labeled_mismatch(tmp_path, capsys):
    P = make_presentation("a", [("a", "aa")])
    D = dg.identity_diagram(P, (0,))
    f1 = tmp_path / "plain.diagram"
    dg.save_diagram(D, str(f1))
    from diagramma.diagram_products import IntGroup, LabeledDiagram, save_labeled_diagram
    L = LabeledDiagram(D, (IntGroup(),), None)
    f2 = tmp_path / "labeled.diagram"
    save_labeled_diagram(L, str(f2))
    code = cli.main(["eq", str(f1), str(f2)])
    err = capsys.readouterr().err
    assert code == 2 and "error:" in err


def test_graph_commands(path3, tmp_path, capsys):
    code, out = run(capsys, "graph", "realize", path3)
    assert code == 0 and "ground:" in out and "vertex_map:" in out

    code, out = run(capsys, "graph", "odd-cycle", path3)
    assert code == 1 and "witness: NONE" in out
    pet = tmp_path / "petersen.txt"
    save_graph(pvt_graph(5), str(pet))
    code, out = run(capsys, "graph", "odd-cycle", str(pet), "--json")
    assert code == 0
    data = json.loads(out)
    assert len(data["witness"]) in (5, 7, 9)


def test_gp_commands(path3, capsys):
    code, out = run(capsys, "gp", "nf", "--graph", path3, "v0 v1 v0^-1")
    assert code == 0 and "nf: v1" in out and "syllables: 1" in out
    code, out = run(capsys, "gp", "nf", "--graph", path3, "v0 v0^-1")
    assert code == 0 and "nf: 1" in out
    code, out = run(capsys, "gp", "eq", "--graph", path3, "v0 v1", "v1 v0")
    assert code == 0 and "EQUAL" in out
    code, out = run(capsys, "gp", "eq", "--graph", path3, "v0 v2", "v2 v0")
    assert code == 1 and "DIFFERENT" in out


def test_raag_commands(path3, tmp_path, capsys):
    code, out = run(capsys, "raag", "wp", "--graph", path3,
                    "v0 v1 v0^-1 v1^-1")
    assert code == 0 and "TRIVIAL" in out
    code, out = run(capsys, "raag", "wp", "--graph", path3,
                    "v0 v2 v0^-1 v2^-1")
    assert code == 1 and "NONTRIVIAL" in out

    img = tmp_path / "image.diagram"
    code, out = run(capsys, "raag", "embed", "--graph", path3, "v1^2",
                    "--out", str(img))
    assert code == 0 and "transistors:" in out
    D = dg.load_diagram(str(img))
    assert not dg.is_trivial(D)
    assert not dg.find_dipoles(D)


def test_pvt_commands(tmp_path, capsys):
    code, out = run(capsys, "pvt", "wp", "--n", "3", "L1,2 L1,2^-1")
    assert code == 0 and "TRIVIAL" in out
    code, out = run(capsys, "pvt", "wp", "--n", "3", "L1,3")
    assert code == 1 and "NONTRIVIAL" in out
    code, out = run(capsys, "pvt", "wp", "--n", "3", "--vt", "s1 r1 r1 s1")
    assert code == 0 and "TRIVIAL" in out

    f = tmp_path / "pvt.diagram"
    code, out = run(capsys, "pvt", "diagram", "--n", "4", "L2,4", "--out", str(f))
    assert code == 0 and "transistors: 1" in out
    D = dg.load_diagram(str(f))
    assert D.top == (0, 1, 2, 3)

    code, out = run(capsys, "pvt", "relators", "--n", "4")
    assert code == 0 and "all_hold: true" in out and "FAIL" not in out
    code, out = run(capsys, "pvt", "relators", "--n", "3", "--json")
    data = json.loads(out)
    assert code == 0 and data["all_hold"] is True and data["failed"] == []


def test_suite_command(capsys):
    code, out = run(capsys, "suite", "group-laws", "--seed", "3", "--count", "5")
    assert code == 0
    assert "suite: group-laws" in out and "5/5 pass" in out
    code, out = run(capsys, "suite", "pvt-oracle", "--count", "4", "--json")
    data = json.loads(out)
    assert code == 0 and data["pass"] == 4 and data["fail"] == 0


def test_usage_and_error_exits(path3, capsys, tmp_path):
    assert cli.main(["no-such-command"]) == 2
    capsys.readouterr()
    assert cli.main(["gp", "nf", "--graph", path3, "v9"]) == 2
    assert "error:" in capsys.readouterr().err
    assert cli.main(["pvt", "wp", "--n", "3", "--vt", "s1"]) == 2
    assert "error:" in capsys.readouterr().err
    assert cli.main(["reduce", str(tmp_path / "missing.diagram")]) == 2
    assert "error:" in capsys.readouterr().err


def test_word_cap(path3, capsys, monkeypatch):
    monkeypatch.setattr(cli, "MAX_WORD_TOKENS", 3)
    assert cli.main(["gp", "nf", "--graph", path3, "v0 v1 v0 v1"]) == 2
    assert "exceeds 3 tokens" in capsys.readouterr().err
    monkeypatch.setattr(cli, "MAX_EXPONENT", 5)
    assert cli.main(["gp", "nf", "--graph", path3, "v0^9"]) == 2
    assert "exceeds 5" in capsys.readouterr().err
