import json
import subprocess
import sys

import pytest

from cosetduality import catalog
from cosetduality.cli import main
from cosetduality.functor_w import build_w
from cosetduality.groupoid import UNDEFINED, MeetGroupoid, check_axioms
from cosetduality.perm import all_subgroups
from cosetduality.profinite import two_adic_tower


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--json")
    return code, json.loads(out)


class TestW:
    @pytest.mark.parametrize("name,size", [("S3", 19), ("Z2", 4), ("trivial", 2)])
    def test_sizes(self, capsys, name, size):
        code, data = run_json(capsys, "w", "--group", name, "--basis", "all")
        assert code == 0
        assert data["size"] == size and data["report"]["passed"]
        M = MeetGroupoid.from_json(data["groupoid"])
        assert M.size == size

    def test_large_gate(self, capsys):
        code, out, err = run(capsys, "w", "--group", "S4")
        assert code == 2 and "--large" in err

    def test_unknown_group(self, capsys):
        code, out, err = run(capsys, "w", "--group", "Z5")
        assert code == 2 and "Z5" in err


class TestRoundtrip:
    def test_s3(self, capsys):
        code, data = run_json(capsys, "roundtrip", "--group", "S3", "--samples", "5")
        assert code == 0 and data["passed"]

    def test_z8_cardinalities(self, capsys):
        code, data = run_json(capsys, "roundtrip", "--group", "Z8", "--samples", "3")
        assert code == 0
        assert data["cardinalities"]["aut"] == 4 and data["cardinalities"]["out"] == 4

    def test_non_separating_refused(self, capsys, tmp_path):
        basis = tmp_path / "basis.json"
        basis.write_text(json.dumps([["(0 1 2 3)"], ["(0 2)(1 3)"]]))
        code, out, err = run(capsys, "roundtrip", "--group", "Z4", "--basis", "file",
                             "--basis-file", str(basis))
        assert code == 2 and "separating" in err

    def test_verify_duality_file(self, capsys, tmp_path):
        path = tmp_path / "g.json"
        path.write_text(json.dumps(catalog.group_to_json(catalog.get("Q8"))))
        code, data = run_json(capsys, "verify-duality", str(path), "--basis", "chain",
                              "--samples", "4")
        assert code == 0 and data["passed"]

    def test_file_basis_closes(self, capsys, tmp_path):
        basis = tmp_path / "basis.json"
        basis.write_text(json.dumps([["(0 1 2)"], ["(0 1)"], []]))
        code, data = run_json(capsys, "w", "--group", "S3", "--basis", "file",
                              "--basis-file", str(basis))
        assert code == 0
        # conjugates of the reflection subgroup join: A3, three reflections, trivial
        assert data["cardinalities"]["idempotents"] == 5


class TestAut:
    def test_z4(self, capsys):
        code, data = run_json(capsys, "aut", "--group", "Z4")
        assert code == 0
        checks = {c["name"]: c for c in data["checks"]}
        assert checks["gamma-after-delta-is-identity"]["detail"]["automorphisms"] == 2
        assert checks["HC-equals-normalizer"]["passed"]
        assert data["cardinalities"]["omega"] == 7

    @pytest.mark.parametrize("name,out", [("D4", 2), ("S3", 1)])
    def test_out(self, capsys, name, out):
        code, data = run_json(capsys, "aut", "--group", name)
        assert code == 0 and data["cardinalities"]["out"] == out

    def test_human_output(self, capsys):
        code, out, err = run(capsys, "aut", "--group", "Z3")
        assert code == 0
        assert "[pass] centralizer-is-kernel-of-gamma" in out
        assert out.rstrip().endswith("passed")


def _write(tmp_path, M, name="m.json"):
    path = tmp_path / name
    path.write_text(json.dumps(M.to_json()))
    return str(path)


class TestValidateExport:
    def test_valid(self, capsys, tmp_path):
        G = catalog.get("S3")
        path = _write(tmp_path, build_w(G, all_subgroups(G)))
        code, out, err = run(capsys, "validate", path)
        assert code == 0

    def test_broken_associativity(self, capsys, tmp_path):
        G = catalog.get("Z4")
        M = build_w(G, all_subgroups(G))
        P = M.product_table.copy()
        a, b = 5, 6                      # two singleton cosets
        assert P[a, b] != UNDEFINED
        P[a, b] = next(c for c in range(5, 9) if c != P[a, b])
        bad = MeetGroupoid(P, M.inverse_table, M.meet_table)
        assert "(a)" in check_axioms(bad).tags()
        code, out, err = run(capsys, "validate", _write(tmp_path, bad))
        assert code == 1
        assert "axiom (a)" in out and "witness" in out

    def test_dot_chain(self, capsys):
        code, out, err = run(capsys, "export", "--group", "Z4", "--dot")
        assert code == 0
        assert out.count("label=") == 3 and out.count("->") == 2

    def test_export_json_file(self, capsys, tmp_path):
        G = catalog.get("Z2")
        path = _write(tmp_path, build_w(G, all_subgroups(G)))
        code, out, err = run(capsys, "export", path)
        assert code == 0 and json.loads(out)["size"] == 4

    def test_malformed_file(self, capsys, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("{not json")
        code, out, err = run(capsys, "validate", str(path))
        assert code == 2


class TestProfiniteCatalog:
    def test_demo(self, capsys):
        code, data = run_json(capsys, "profinite", "demo", "--tower", "2adic", "--depth", "3")
        assert code == 0
        assert [r["filters"] for r in data["levels"]] == [1, 2, 4, 8]

    def test_tower_file(self, capsys, tmp_path):
        path = tmp_path / "t.json"
        path.write_text(json.dumps(two_adic_tower(3).to_json()))
        code, data = run_json(capsys, "profinite", "demo", "--tower-file", str(path), "--depth", "2")
        assert code == 0

    def test_unknown_tower(self, capsys):
        code, out, err = run(capsys, "profinite", "demo", "--tower", "5adic")
        assert code == 2

    def test_depth_beyond_file(self, capsys, tmp_path):
        path = tmp_path / "t.json"
        path.write_text(json.dumps(two_adic_tower(1).to_json()))
        code, out, err = run(capsys, "profinite", "demo", "--tower-file", str(path), "--depth", "3")
        assert code == 2

    def test_catalog(self, capsys):
        code, out, err = run(capsys, "catalog", "list")
        assert code == 0 and "S4" not in out and "Q8" in out
        code, out, err = run(capsys, "catalog", "list", "--large")
        assert "S4" in out


def test_deterministic(capsys):
    outs = [run(capsys, "roundtrip", "--group", "D4", "--json", "--samples", "4")[1]
            for _ in range(2)]
    assert outs[0] == outs[1]


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "cosetduality", "w", "--group", "Z3"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and "size: 5" in res.stdout
