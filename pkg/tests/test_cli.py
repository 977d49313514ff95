import csv
import io
import json
import subprocess
import sys

import pytest

from flaggamma.cli import load_complex, main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv)
    return code, json.loads(out)


class TestInvariants:
    def test_pentagon(self, capsys):
        code, data = run_json(capsys, "invariants", "polygon:5")
        assert code == 0
        assert data["f"] == [5, 5] and data["h"] == [1, 3, 1] and data["gamma"] == [1, 1] and data["flag"]

    def test_cross(self, capsys):
        _, data = run_json(capsys, "invariants", "cross:3")
        assert data["h"] == [1, 3, 3, 1] and data["gamma"] == [1, 0]
        assert data["homology"] == {"betti": [0, 0, 1], "sphere": True}

    def test_non_flag(self, capsys, tmp_path):
        path = tmp_path / "triangle.txt"
        path.write_text("# hollow triangle\n1 2\n2 3\n1 3\n")
        code, data = run_json(capsys, "invariants", str(path))
        assert code == 0 and data["flag"] is False and data["witness"] == [[1, 2, 3]]

    def test_csv(self, capsys):
        code, out, _ = run(capsys, "invariants", "polygon:6", "--format", "csv")
        rows = dict(csv.reader(io.StringIO(out)))
        assert rows["gamma"] == "[1, 2]" and rows["flag"] == "True"

    def test_out_file(self, capsys, tmp_path):
        target = tmp_path / "r.json"
        code, out, _ = run(capsys, "invariants", "polygon:7", "--out", str(target))
        assert code == 0 and out == ""
        assert json.loads(target.read_text())["gamma"] == [1, 3]


class TestErrors:
    def test_parse_error_exit_2(self, capsys, tmp_path):
        path = tmp_path / "bad.txt"
        path.write_text("1 2\n2 q\n")
        code, _, err = run(capsys, "invariants", str(path))
        assert code == 2 and "line 2" in err

    def test_unknown_generator(self, capsys):
        code, _, err = run(capsys, "invariants", "torus:3")
        assert code == 2 and "no such file" in err

    def test_quiet(self, capsys):
        code, out, err = run(capsys, "invariants", "polygon:x", "--quiet")
        assert code == 2 and out == err == ""

    def test_argparse_usage(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["frobnicate"])
        assert exc.value.code == 2

    def test_bad_compress(self, capsys):
        code, _, _ = run(capsys, "decompose", "compress:1,1,1,1")
        assert code == 2


class TestGenerators:
    def test_specs(self, tmp_path):
        assert load_complex("polygon:64").num_vertices == 64
        assert load_complex("simplex:3").facet_lists() == [[1, 2, 3]]
        assert load_complex("sd:boundary:4").num_vertices == 14
        j = load_complex("join:polygon:5,polygon:5")
        assert j.num_vertices == 10 and j.dim == 3
        assert load_complex("join:compress:1,2,1,polygon:4").dim == 3
        path = tmp_path / "sq.txt"
        path.write_text("1 2\n2 3\n3 4\n4 1\n")
        assert load_complex(f"sd:{path}").num_vertices == 8
        assert load_complex(f"join:{path},{path}").num_vertices == 8


class TestDecompose:
    def test_compress(self, capsys):
        code, data = run_json(capsys, "decompose", "compress:1,3,1", "--d", "2")
        assert code == 0 and data["f_S"] == [1] and data["gamma"] == [1, 1]

    def test_simplex(self, capsys):
        code, data = run_json(capsys, "decompose", "simplex:4")
        assert code == 0 and data["S_facets"] == [[]] and data["f_S"] == []

    def test_square_fails(self, capsys):
        code, data = run_json(capsys, "decompose", "polygon:4")
        assert code == 1 and data["reason"] == "ambiguous Boolean part"


class TestOther:
    def test_survey(self, capsys):
        code, data = run_json(capsys, "survey", "join:polygon:4,polygon:5", "--shallow")
        assert code == 0 and data["ok"] and len(data["edges"]) == 4 + 5 + 20

    def test_artinian(self, capsys):
        code, data = run_json(capsys, "artinian", "cross:3", "--lsop", "coloring", "--dump-vertex", "1")
        assert code == 0 and data["dims"] == [1, 3, 3, 1]
        assert data["matrix"].startswith("degree 1")

    def test_artinian_no_coloring(self, capsys):
        code, data = run_json(capsys, "artinian", "polygon:5", "--lsop", "coloring")
        assert code == 1 and not data["ok"]

    def test_suite_json(self, capsys):
        code, data = run_json(capsys, "suite", "polygons", "--param", "n_max=10", "--no-timing")
        assert code == 0 and data["total"] == 7 and "wall_time" not in data

    def test_suite_seed_default_theta(self, capsys):
        _, data = run_json(capsys, "suite", "theta", "--param", "count=3")
        assert data["seed"] == 7

    def test_suite_csv(self, capsys):
        code, out, _ = run(capsys, "suite", "controls", "--format", "csv")
        rows = list(csv.DictReader(io.StringIO(out)))
        assert code == 0 and len(rows) == 3 and {r["pass"] for r in rows} == {"True"}

    def test_suite_bad_param(self, capsys):
        code, _, _ = run(capsys, "suite", "polygons", "--param", "bogus=1")
        assert code == 2

    def test_suite_deterministic(self, capsys):
        _, a, _ = run(capsys, "suite", "completion", "--param", "count=5", "--seed", "4", "--no-timing")
        _, b, _ = run(capsys, "suite", "completion", "--param", "count=5", "--seed", "4", "--no-timing")
        assert a == b

    def test_module_entry_point(self):
        proc = subprocess.run([sys.executable, "-m", "flaggamma", "invariants", "polygon:8"],
                              capture_output=True, text=True, check=False)
        assert proc.returncode == 0 and json.loads(proc.stdout)["gamma"] == [1, 4]
