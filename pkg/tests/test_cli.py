import json

from coxdim.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def write_example(tmp_path, name):
    code = main(["example", "--name", name, "--output", str(tmp_path / f"{name}.json")])
    assert code == 0
    return str(tmp_path / f"{name}.json")


def test_example_roundtrip(tmp_path, capsys):
    code, out, _ = run_cli(capsys, "example", "--name", "a_3")
    assert code == 0
    doc = json.loads(out)
    assert doc["generators"] == ["a", "b", "c"]


def test_report_command(tmp_path, capsys):
    path = write_example(tmp_path, "a_3")
    code, out, _ = run_cli(capsys, "report", "--input", path)
    assert code == 0
    doc = json.loads(out)
    assert doc["spherical"] is True
    assert doc["actdim_exact"]["value"] == 5


def test_subdivide_matches_figure(tmp_path, capsys):
    path = write_example(tmp_path, "a_3")
    code, out, _ = run_cli(capsys, "subdivide", "--input", path)
    assert code == 0
    doc = json.loads(out)
    assert [len(level) for level in doc["faces_by_dim"]] == [6, 10, 5]
    assert ["a"] in doc["vertices"] and ["a", "b", "c"] in doc["vertices"]


def test_output_deterministic(tmp_path, capsys):
    path = write_example(tmp_path, "pentagon-3")
    _, first, _ = run_cli(capsys, "subdivide", "--input", path)
    _, second, _ = run_cli(capsys, "subdivide", "--input", path)
    assert first == second


def test_homology_command(tmp_path, capsys):
    path = write_example(tmp_path, "raag-cycle-4")
    code, out, _ = run_cli(capsys, "homology", "--input", path)
    assert code == 0
    doc = json.loads(out)
    assert doc["nerve"]["reduced_betti_mod2"] == [0, 1]
    assert doc["subdivision"]["reduced_betti_mod2"] == [0, 1]
    assert doc["nerve"]["top_integral_cohomology"] == {"rank": 1, "torsion": []}


def test_roots_command(tmp_path, capsys):
    path = write_example(tmp_path, "a_2")
    code, out, _ = run_cli(capsys, "roots", "--input", path)
    assert code == 0
    doc = json.loads(out)
    assert len(doc["reflections"]) == 3
    words = {tuple(r["word"]) for r in doc["reflections"]}
    assert ("a", "b", "a") in words
    for r in doc["reflections"]:
        assert r["support"] and all(isinstance(c, float) or isinstance(c, int) for c in r["coeffs"])


def test_octahedralize_command(tmp_path, capsys):
    path = write_example(tmp_path, "a_2")
    code, out, _ = run_cli(capsys, "octahedralize", "--input", path, "--of", "nerve")
    assert code == 0
    doc = json.loads(out)
    assert [len(level) for level in doc["faces_by_dim"]] == [4, 4]


def test_missing_input_is_validation_error(capsys):
    code, _, err = run_cli(capsys, "report", "--input", "/nonexistent.json")
    assert code == 1
    assert "error" in err


def test_schema_error_exit_code(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text('{"generators": ["a", "a"], "default": 2, "relations": []}')
    code, _, err = run_cli(capsys, "report", "--input", str(bad))
    assert code == 1
    assert "duplicate" in err


def test_generator_guard(tmp_path, capsys):
    path = write_example(tmp_path, "rp2-nerve")   # 21 generators
    code, _, err = run_cli(capsys, "report", "--input", path)
    assert code == 1 and "max-generators" in err
    code, out, _ = run_cli(capsys, "report", "--input", path, "--max-generators", "24")
    assert code == 0
    assert json.loads(out)["actdim_exact"]["value"] == 6


def test_verify_quick(tmp_path, capsys):
    path = write_example(tmp_path, "a_2")
    code, out, err = run_cli(capsys, "verify", "--input", path, "--quick", "--seed", "3")
    assert code == 0
    doc = json.loads(out)
    assert doc["passed"] is True
    names = {c["name"] for c in doc["checks"]}
    assert {"classification-oracle", "j-matrix-rank", "lattice-intersections",
            "nested-equivalence", "subdivision-flag", "subdivision-betti"} <= names
    assert "pass" in err
