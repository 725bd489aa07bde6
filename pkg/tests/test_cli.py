import json
from pathlib import Path

import pytest

from surfcount.cli import main
from surfcount.graph import complete_graph, path_graph, serialize_graph

DATA = Path(__file__).parent / "data"


@pytest.fixture
def k5_file(tmp_path):
    p = tmp_path / "k5.g"
    p.write_text(serialize_graph(complete_graph(5)))
    return str(p)


@pytest.fixture
def p5_file(tmp_path):
    p = tmp_path / "p5.g"
    p.write_text(serialize_graph(path_graph(5)))
    return str(p)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_flap_number_and_snp(capsys, k5_file, p5_file):
    code, out, _ = run(capsys, "flap-number", k5_file)
    assert code == 0 and out.strip() == "0"
    code, out, _ = run(capsys, "flap-number", p5_file)
    assert code == 0 and out.strip() == "3"
    code, out, _ = run(capsys, "snp", k5_file)
    assert code == 0 and out.strip() == "true"


def test_beta_and_domain_error(capsys, k5_file, p5_file):
    code, out, _ = run(capsys, "beta", p5_file)
    assert code == 0 and out.strip() == "3"
    code, out, err = run(capsys, "beta", k5_file)
    assert code == 1 and out == "" and "not a tree" in err


def test_usage_error_exit_2(capsys):
    code = main(["definitely-not-a-command"])
    assert code == 2


def test_missing_file(capsys):
    code, out, err = run(capsys, "flap-number", "/no/such/file.g")
    assert code == 1 and "no such file" in err


def test_count_and_hom(capsys, tmp_path, k5_file):
    p3 = tmp_path / "p3.g"
    p3.write_text(serialize_graph(path_graph(3)))
    code, out, _ = run(capsys, "count", str(p3), k5_file)
    assert code == 0 and out.strip() == "30"
    code, out, _ = run(capsys, "hom", str(p3), k5_file)
    assert code == 0 and out.strip() == "80"  # 5*4*4
    code, out, _ = run(capsys, "--json", "count", str(p3), k5_file)
    assert json.loads(out) == {"count": "30"}


def test_table_sphere(capsys):
    code, out, _ = run(capsys, "table", "--surface", "sphere")
    assert code == 0
    assert "3n-8" in out and "n-3" in out and "8n-16" in out
    code, json_out, _ = run(capsys, "--json", "table", "--surface", "sphere")
    record = json.loads(json_out)
    assert record["entries"]["3"] == {"a": 3, "b": -8}
    assert record["total"] == {"a": 8, "b": -16}


def test_table_text_and_json_agree(capsys):
    fixture = str(DATA / "projective_irreducible_7.emb")
    code, text, _ = run(capsys, "table", "--surface", "n1", "--list", fixture,
                        "--complete")
    assert code == 0
    code, json_out, _ = run(capsys, "--json", "table", "--surface", "n1",
                            "--list", fixture, "--complete")
    record = json.loads(json_out)
    cells = text.splitlines()[1].split()
    # text row: name, s=0..6 entries, total; compare a couple
    assert cells[4] == "3n+2" and record["entries"]["3"] == {"a": 3, "b": 2}
    assert cells[-1] == "8n+16" and record["total"] == {"a": 8, "b": 16}
    assert record["complete"] is True


def test_census_partial_mode(capsys):
    code, out, _ = run(capsys, "--json", "census", "--surface", "n1")
    record = json.loads(out)
    assert record["complete"] is False
    assert record["entries"]["3"] == {"a": 3, "b": 2}


def test_grow_and_genus_roundtrip(capsys, tmp_path):
    code, out, _ = run(capsys, "grow", "k6-projective", "9")
    assert code == 0
    emb = tmp_path / "grown.emb"
    emb.write_text(out)
    code, out, _ = run(capsys, "genus", str(emb))
    assert code == 0 and out.strip() == "1"
    code, out, _ = run(capsys, "faces", str(emb))
    assert code == 0 and all(len(ln.split()) == 3 for ln in out.splitlines())


def test_construct(capsys, tmp_path):
    p3 = tmp_path / "p3.g"
    p3.write_text(serialize_graph(path_graph(3)))
    code, out, _ = run(capsys, "construct", "tree-blowup", str(p3), "10")
    assert code == 0
    header = out.splitlines()[0].split()
    assert int(header[0]) <= 10
    code, out, _ = run(capsys, "construct", "paste", str(p3), "12")
    assert code == 0


def test_bounds_output(capsys):
    code, out, _ = run(capsys, "bounds", "--genus", "1", "--s", "5")
    assert code == 0
    kv = dict(ln.split("=") for ln in out.strip().splitlines())
    assert float(kv["upper"]) == 60.0 ** 5
    code, out, _ = run(capsys, "--json", "bounds", "--genus", "1", "--s", "3", "--n", "100")
    record = json.loads(out)
    assert abs(record["lower"] - (300 + 6 ** 0.5)) < 1e-9


def test_inequality(capsys, k5_file):
    code, out, _ = run(capsys, "inequality", "goodman", k5_file)
    kv = dict(ln.split("=") for ln in out.strip().splitlines())
    assert kv["holds"] == "true" and kv["lhs"] == "300"
    code, out, _ = run(capsys, "inequality", "genus-triangle", k5_file, "--genus", "1")
    kv = dict(ln.split("=") for ln in out.strip().splitlines())
    assert kv["holds"] == "true"


def test_contract_split_cli(capsys, tmp_path):
    code, grown, _ = run(capsys, "grow", "k4-sphere", "5")
    emb = tmp_path / "g.emb"
    emb.write_text(grown)
    code, out, _ = run(capsys, "contract", str(emb), "0", "4")
    assert code == 0
    back = tmp_path / "back.emb"
    back.write_text(out)
    code, out2, _ = run(capsys, "split", str(back), "1", "0", "2", "--triangle")
    assert code == 0


def test_scaling_cli(capsys, tmp_path):
    p3 = tmp_path / "p3.g"
    p3.write_text(serialize_graph(path_graph(3)))
    code, out, _ = run(capsys, "scaling", "--graph", str(p3),
                       "--generator", "tree-blowup", "--sizes", "20,40,80")
    assert code == 0
    kv = dict(ln.split("=") for ln in out.strip().splitlines())
    assert 1.5 <= float(kv["slope"]) <= 2.5


def test_deterministic_output(capsys, p5_file):
    runs = {run(capsys, "spqrk", p5_file)[1] for _ in range(3)}
    assert len(runs) == 1
