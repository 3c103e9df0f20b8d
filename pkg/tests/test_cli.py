import json

from arrgr.arrangement import arrangement_from_json, braid, save_arrangement
from arrgr.circuits import circuits_from_arrangement, circuits_from_json
from arrgr.cli import main
from arrgr.corpus import parallel_pair


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_chambers_text(capsys):
    code, out, _ = run(capsys, "--braid", "3", "chambers")
    assert code == 0
    assert out.splitlines()[:2] == ["+++", "++-"]
    assert "count: 6" in out


def test_chambers_json_roundtrips_arrangement(capsys):
    code, out, _ = run(capsys, "--braid", "3", "chambers", "--json")
    assert code == 0
    data = json.loads(out)
    assert arrangement_from_json(data["arrangement"]) == braid(3)
    assert data["count"] == 6


def test_circuits_json_roundtrips(capsys):
    code, out, _ = run(capsys, "--json", "--braid", "4", "circuits")
    assert code == 0
    data = json.loads(out)
    assert data["axioms_ok"] is True
    assert circuits_from_json(data) == circuits_from_arrangement(braid(4))


def test_vg_json_schema(capsys):
    code, out, _ = run(capsys, "--braid", "3", "vg", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["dims"] == [1, 4, 6, 6]
    assert data["gr"] == [1, 3, 2, 0]
    assert data["chambers"] == 6
    assert data["presentation_dim"] == 6


def test_vg_point_example(capsys):
    path = "/tmp/point.json"
    save_arrangement(
        arrangement_from_json({"dim": 1, "forms": [
            {"linear": ["1"], "constant": "0", "label": "x"}]}), path)
    code, out, _ = run(capsys, "--file", path, "vg")
    assert code == 0
    assert "dims:   1 2" in out
    assert "ex^2 - ex" in out


def test_poincare_text(capsys):
    code, out, _ = run(capsys, "--semiorder", "3", "poincare")
    assert code == 0
    assert out.strip() == "1 + 6t^2 + 12t^4"


def test_characters_b4_table(capsys):
    code, out, _ = run(capsys, "--braid", "4", "characters",
                       "--group", "Sn-coordinates")
    assert code == 0
    assert "grade 2: (3,1):1  (2,2):2  (2,1,1):1  (1,1,1,1):1" in out
    assert "chamber char: 24  0  0  0  0" in out


def test_order_flag(capsys):
    code, out, _ = run(capsys, "--braid", "3", "nbc", "--order", "23,13,12")
    assert code == 0
    assert "grade 1: 3" in out
    code, _, err = run(capsys, "--braid", "3", "nbc", "--order", "23,13")
    assert code == 2


def test_rees_and_cordovil_pass(capsys):
    assert run(capsys, "--semiorder", "2", "rees")[0] == 0
    assert run(capsys, "--braid", "3", "cordovil")[0] == 0


def test_input_errors_exit_2(capsys, tmp_path):
    assert run(capsys, "--braid", "1", "chambers")[0] == 2
    assert run(capsys, "chambers")[0] == 2  # no source
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run(capsys, "--file", str(bad), "chambers")[0] == 2
    missing = tmp_path / "missing.json"
    assert run(capsys, "--file", str(missing), "chambers")[0] == 2


def test_resource_bound_exit_3(capsys):
    assert run(capsys, "--braid", "20", "chambers")[0] == 3
    assert run(capsys, "--braid", "3", "--nmax", "2", "chambers")[0] == 3


def test_file_source(capsys, tmp_path):
    path = tmp_path / "pair.json"
    save_arrangement(parallel_pair(), path)
    code, out, _ = run(capsys, "--file", str(path), "chambers")
    assert code == 0
    assert "count: 3" in out


def test_json_flag_before_subcommand(capsys):
    code, out, _ = run(capsys, "--json", "--braid", "2", "poincare")
    assert code == 0
    assert json.loads(out)["coeffs"] == [1, 1]
