import json
from pathlib import Path

import pytest

from gborsuk.cli import main

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_bounds(capsys):
    assert run(capsys, "cover", "bounds", "--group", "Z5", "--index", "2") == \
        (0, "lower 7, upper 10, conjectured 7\n", "")


def test_hom_dim(capsys):
    assert run(capsys, "hom", "dim", "--m", 2, "--t", 5)[:2] == (0, "3\n")


def test_pipeline_report(capsys, tmp_path):
    out = tmp_path / "rep.json"
    code, text, _ = run(capsys, "cover", "pipeline", "--group", "Z3", "--dim", 2, "--max-k", 4,
                        "--out", out)
    assert code == 0 and "verified cover with 5 colors" in text and "equality certified" in text
    rep = json.loads(out.read_text())
    assert rep["achieved"] == 5 and rep["cover"]["status"] == "verified"
    first = out.read_bytes()
    run(capsys, "cover", "pipeline", "--group", "Z3", "--dim", 2, "--out", out)
    assert out.read_bytes() == first


def test_pipeline_inconclusive(capsys):
    code, text, _ = run(capsys, "cover", "pipeline", "--group", "Z3", "--max-k", 1)
    assert code == 1 and "inconclusive" in text


def test_pipeline_timeout(capsys):
    code, text, _ = run(capsys, "cover", "pipeline", "--group", "Z5", "--budget", 1)
    assert code == 3


def test_usage_errors_name_the_flag(capsys):
    code, _, err = run(capsys, "cover", "bounds", "--group", "Q8")
    assert code == 2 and "--group" in err
    code, _, err = run(capsys, "cover", "circle", "--m", 3, "--n", 7)
    assert code == 2 and "--n" in err
    with pytest.raises(SystemExit) as info:
        main(["cover", "nope"])
    assert info.value.code == 2


def test_complex_chain(capsys, tmp_path):
    c, s = tmp_path / "c.json", tmp_path / "s.json"
    assert run(capsys, "complex", "build", "--group", "Z3", "--kind", "cycle", "--n", 12, "--out", c)[0] == 0
    assert run(capsys, "complex", "check-free", "--in", c)[0] == 0
    assert run(capsys, "complex", "subdivide", "--in", c, "--out", s, "--times", 1)[0] == 0
    code, text, _ = run(capsys, "complex", "info", "--in", s)
    assert code == 0 and "f-vector 24 24" in text
    code, text, _ = run(capsys, "quotient", "build", "--in", c)
    assert json.loads(text) == {"vertices": 12, "edges": 36, "loops": []}


def test_loopy_quotient_exit_code(capsys, tmp_path):
    c = tmp_path / "c3.json"
    run(capsys, "complex", "build", "--group", "Z3", "--dim", 1, "--out", c)
    assert run(capsys, "complex", "check-free", "--in", c)[0] == 1
    code, text, _ = run(capsys, "quotient", "export-dimacs", "--in", c)
    assert code == 1 and text.startswith("c ERROR")


def test_chromatic_roundtrip(capsys, tmp_path):
    c, g, lp, sol = (tmp_path / n for n in ("c.json", "g.col", "p.lp", "sol.txt"))
    run(capsys, "complex", "build", "--group", "Z3", "--kind", "cycle", "--n", 12, "--out", c)
    assert run(capsys, "quotient", "export-dimacs", "--in", c, "--out", g)[0] == 0
    code, text, _ = run(capsys, "chromatic", "exact", "--graph", g, "--out", sol)
    assert code == 0 and text == "chromatic number 4\n"
    assert run(capsys, "chromatic", "import-solution", "--graph", g, "--colors", 4, "--solution", sol)[0] == 0
    assert run(capsys, "chromatic", "import-solution", "--graph", g, "--colors", 3, "--solution", sol)[0] == 1
    assert run(capsys, "chromatic", "extend", "--graph", g, "--colors", 3)[:2] == (1, "UNSAT\n")
    assert run(capsys, "chromatic", "extend", "--graph", g, "--colors", 4, "--method", "milp")[0] == 0
    assert run(capsys, "chromatic", "export-ilp", "--graph", g, "--colors", 4, "--out", lp)[0] == 0
    assert lp.read_text().count(" e_") == 36 * 4
    code, _, err = run(capsys, "chromatic", "extend", "--graph", g)
    assert code == 2 and "--colors" in err


def test_cover_files(capsys, tmp_path):
    base, j = tmp_path / "b.json", tmp_path / "j.json"
    assert run(capsys, "cover", "circle", "--m", 2, "--out", base)[0] == 0
    assert base.read_text() == (GOLDEN / "circle_m2.json").read_text()
    code, text, _ = run(capsys, "cover", "join", "--base", base, "--out", j)
    assert code == 0 and text.startswith("verified: 4 colors")
    assert run(capsys, "cover", "verify", "--in", j)[0] == 0
    code, text, _ = run(capsys, "cover", "join", "--base", base, "--extra", 0)
    assert code == 1 and "witness" in text
    assert run(capsys, "cover", "onedim", "--group", "S3")[1].startswith("verified: 7 colors")


def test_hom_outputs(capsys, tmp_path):
    out = tmp_path / "cells.json"
    assert run(capsys, "hom", "cells", "--m", 2, "--t", 3, "--out", out)[0] == 0
    assert out.read_text() == (GOLDEN / "hom_k2_k3.json").read_text()
    code, text, _ = run(capsys, "hom", "skeleton", "--m", 2, "--t", 3)
    assert "p edge 6 6" in text


def test_random_golden(capsys, tmp_path, monkeypatch):
    csv, js = tmp_path / "s.csv", tmp_path / "s.json"
    monkeypatch.setenv("GBORSUK_SEED", "1")
    assert run(capsys, "random", "sweep", "--m", 3, "--n", 300, "--trials", 3,
               "--csv", csv, "--json", js)[0] == 0
    assert csv.read_bytes() == (GOLDEN / "sweep_z3.csv").read_bytes()
    assert js.read_bytes() == (GOLDEN / "sweep_z3.json").read_bytes()
    monkeypatch.setenv("GBORSUK_SEED", "x")
    assert run(capsys, "random", "sweep", "--n", 10, "--trials", 1)[0] == 2


def test_random_clique_and_net(capsys):
    code, text, _ = run(capsys, "random", "clique", "--m", 2, "--n", 200, "--trials", 2, "--seed", 0)
    assert code == 0 and json.loads(text)["verdicts"] == {"omega=2": 2}
    code, text, _ = run(capsys, "random", "net", "--delta", 0.5)
    assert code == 0 and json.loads(text)["ok"]


def test_render_golden(capsys, tmp_path):
    out = tmp_path / "z3.svg"
    assert run(capsys, "render", "--group", "Z3", "--mesh", 60, "--out", out)[0] == 0
    assert out.read_bytes() == (GOLDEN / "render_z3_mesh60.svg").read_bytes()


def test_group_commands(capsys, tmp_path):
    g = tmp_path / "g.json"
    assert run(capsys, "group", "build", "--group", "S3", "--out", g)[0] == 0
    code, text, _ = run(capsys, "group", "show", "--group-file", g)
    assert text.startswith("order 6, non-abelian")
    t = tmp_path / "t.json"
    t.write_text("[[0, 1], [0, 1]]")
    assert run(capsys, "group", "build", "--table", t)[0] == 1


def test_pipeline_export_files(capsys, tmp_path):
    lp, col, pre, sol = (tmp_path / n for n in ("p.lp", "h.col", "pre.txt", "sol.txt"))
    code, text, _ = run(capsys, "cover", "pipeline", "--group", "Z3", "--dim", 2, "--ilp-out", lp,
                        "--dimacs-out", col, "--precolor-out", pre)
    assert code == 0 and "exported ILP with 69 vertices and 5 colors" in text
    assert run(capsys, "chromatic", "extend", "--graph", col, "--colors", 5, "--precolor", pre,
               "--out", sol)[0] == 0
    assert run(capsys, "chromatic", "import-solution", "--graph", col, "--colors", 5,
               "--precolor", pre, "--solution", sol)[0] == 0
    lines = lp.read_text().splitlines()
    fixed = lines[lines.index("Bounds") + 1:lines.index("Binary")]
    assert len(fixed) == len(pre.read_text().splitlines()) == 31
