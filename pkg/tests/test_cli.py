from __future__ import annotations

import json

import pytest

from pcgraph.cli import main
from pcgraph.formats import parse_document, parse_graph
from pcgraph.walks import make_path, verify_pc_path


def run(capsys, *argv: str) -> tuple[int, str]:
    code = main(list(argv))
    return code, capsys.readouterr().out


@pytest.fixture
def write(tmp_path):
    def _write(name: str, text: str) -> str:
        p = tmp_path / name
        p.write_text(text)
        return str(p)

    return _write


def test_detect_finds_a_cycle_and_certificate_verifies(capsys, write):
    g = write("tri.ecg", "n 3\ne 0 1 1\ne 1 2 2\ne 0 2 3\n")
    code, out = run(capsys, "detect", "--json", g)
    assert code == 0
    data = json.loads(out)
    assert sorted(data["pc_cycle"]) == [0, 1, 2]
    cert = write("cert.json", json.dumps(data["certificate"]))
    assert run(capsys, "verify", g, cert)[0] == 0


def test_detect_negative_gives_elimination_certificate(capsys, write):
    g = write("star.ecg", "n 4\ne 0 1 1\ne 0 2 1\ne 0 3 1\n")
    code, out = run(capsys, "detect", "--json", g)
    assert code == 1
    cert = write("cert.json", json.dumps(json.loads(out)["certificate"]))
    code, out = run(capsys, "verify", g, cert)
    assert code == 0 and out.strip() == "ok"
    other = write("tri.ecg", "n 4\ne 0 1 1\ne 1 2 2\ne 0 2 3\n")
    assert run(capsys, "verify", other, cert)[0] == 1


def test_yeo_and_closure(capsys, write):
    g = write("p.ecg", "n 3\ne 0 1 1\ne 1 2 1\n")
    code, out = run(capsys, "yeo", "--json", g)
    assert code == 0 and json.loads(out)["separator"] == 0
    code, out = run(capsys, "closure", g)
    assert code == 0 and parse_graph(out).has_edge(0, 2)
    tri = write("tri.ecg", "n 3\ne 0 1 1\ne 1 2 2\ne 0 2 3\n")
    assert run(capsys, "yeo", tri)[0] == 1
    assert run(capsys, "closure", tri)[0] == 1


def test_gen_then_merge_and_hamilton(capsys, write):
    code, text = run(capsys, "gen", "thm12", "--seed", "3", "--m", "4", "--nc", "5")
    assert code == 0
    g = write("t.ecg", text)
    code, out = run(capsys, "merge", "--json", "--trace", g)
    data = json.loads(out)
    doc = parse_document(text)
    assert code == 0 and sorted(data["path"]) == list(range(doc.graph.n))
    assert data["trace"][0]["label"] == "enter" and data["fallback_fired"] is False

    _, text = run(capsys, "gen", "planted-factor", "--seed", "1", "--n", "10", "--k", "2")
    code, out = run(capsys, "hamilton", "--json", write("f.ecg", text))
    assert code == 0 and len(json.loads(out)["path"]) == 10


def test_gen_is_deterministic(capsys):
    first = run(capsys, "gen", "yeo-free", "--seed", "5", "--n", "7")
    assert first == run(capsys, "gen", "yeo-free", "--seed", "5", "--n", "7")
    code, out = run(capsys, "gen", "construction1", "--seed", "0")
    assert code == 0 and parse_graph(out).n == 6


def test_encode(capsys, write):
    _, text = run(capsys, "gen", "tournament", "--seed", "2", "--parts", "1,2,2")
    code, out = run(capsys, "encode", write("t.txt", text))
    assert code == 0 and parse_graph(out).n == 5


def test_exit_codes_for_bad_input(capsys, write):
    bad = write("bad.ecg", "n 2\ne 0 7 1\n")
    assert main(["detect", bad]) == 2
    assert "line 2" in capsys.readouterr().err
    assert main(["detect", "/nonexistent/file"]) == 2
    no_factor = write("g.ecg", "n 2\ne 0 1 1\n")
    assert main(["merge", no_factor]) == 2
    with pytest.raises(SystemExit):
        main(["gen", "thm12"])


def test_size_guard_is_an_input_error(capsys, write):
    edges = "".join(f"e {i} {i + 1} {i % 2}\n" for i in range(19))
    g = write("long.ecg", f"n 20\n{edges}e 0 19 1\ne 0 2 2\n")
    assert main(["yeo", g]) == 2
    assert "desk-scale" in capsys.readouterr().err


def test_hamilton_output_verifies(capsys, write):
    _, text = run(capsys, "gen", "planted-factor", "--seed", "4", "--n", "11", "--k", "3", "--colors", "4")
    code, out = run(capsys, "hamilton", "--json", write("f.ecg", text))
    G = parse_document(text).graph
    assert code == 0 and verify_pc_path(G, make_path(G, json.loads(out)["path"]))
