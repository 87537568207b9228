import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from foldchi.cli import run

FIX = Path(__file__).parent / "fixtures"
D4 = str(FIX / "d4.json")
S4 = str(FIX / "s4_extension.json")


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def write(tmp_path, name, obj):
    p = tmp_path / name
    p.write_text(json.dumps(obj) if not isinstance(obj, str) else obj)
    return str(p)


class TestFixtureCommands:
    def test_euler_d4(self):
        assert call("euler", D4)[:2] == (0, "1\n")

    def test_extension_obstructed(self):
        assert call("extension-check", "--chi", "6", S4)[:2] == (1, "Obstructed(3, 1)\n")

    def test_compose_empty(self):
        assert call("plumb", "compose", "[]")[:2] == (0, "[[0, 1], [1, 0]]\n")


class TestGraphCommands:
    def test_validate_ok(self):
        assert call("validate", D4)[:2] == (0, "ok\n")

    def test_validate_bad(self, tmp_path):
        d = json.loads(Path(D4).read_text())
        d["edges"].append({"from": "v1", "to": "v7", "lambda": "max", "sigma": "-", "chiS": 0})
        code, out, _ = call("validate", write(tmp_path, "g.json", d))
        assert code == 1 and "DanglingEdge" in out

    def test_euler_on_invalid_graph_is_input_error(self, tmp_path):
        d = json.loads(Path(D4).read_text())
        d["root"] = "nowhere"
        code, out, err = call("euler", write(tmp_path, "g.json", d))
        assert code == 2 and out == "" and err

    def test_fiber(self):
        code, out, _ = call("--format", "json", "fiber", "--vertex", "v1", D4)
        data = json.loads(out)["outputs"]
        assert code == 0 and data["chi"] == data["walk_chi"] == 1  # fiber is a disk

    def test_fiber_unknown_vertex(self):
        assert call("fiber", "--vertex", "zz", D4)[0] == 2

    def test_mod2(self):
        assert call("mod2", D4)[:2] == (0, "1\n")

    def test_sc_mod2_requires_k3(self):
        assert call("sc-mod2", D4)[0] == 2

    def test_sc_mod2(self, tmp_path):
        g = {"n": 5, "k": 3, "root": "v0", "vertices": [{"id": "v0", "chi": 0}, {"id": "v1", "chi": 1}],
             "edges": [{"from": "v0", "to": "v1", "lambda": "min", "sigma": "+", "chiS": 2}]}
        assert call("sc-mod2", write(tmp_path, "g.json", g))[:2] == (0, "1\n")  # D^5

    def test_extension_consistent(self):
        assert call("extension-check", "--chi", "2", S4)[:2] == (0, "Consistent(1)\n")

    def test_extension_even_n(self):
        assert call("extension-check", "--chi", "2", D4)[0] == 2

    def test_export_dot(self, tmp_path):
        target = tmp_path / "out.dot"
        code, out, _ = call("export-dot", D4, "-o", str(target))
        golden = (Path(__file__).parent / "golden" / "d4.dot").read_text()
        assert code == 0 and out == golden and target.read_text() == golden

    def test_export_plumbing_dot(self, tmp_path):
        code, out, _ = call("plumb", "graph", "--g", "2", "--b", "3", "--format", "json")
        pg = json.loads(out)["outputs"]["plumbing_graph"]
        code, out, _ = call("export-dot", write(tmp_path, "p.json", pg))
        assert code == 0 and out.startswith("digraph plumbing_graph")

    def test_stdin(self, monkeypatch):
        monkeypatch.setattr(sys, "stdin", io.StringIO(Path(D4).read_text()))
        assert call("euler", "-")[:2] == (0, "1\n")


class TestUsageErrors:
    @pytest.mark.parametrize(
        "argv",
        [
            [],
            ["bogus"],
            ["euler"],
            ["euler", "/nonexistent/file.json"],
            ["fiber", D4],
            ["extension-check", D4],
            ["extension-check", "--chi", "x", D4],
            ["plumb", "factor"],
            ["plumb", "factor", "[[1, 0], [0, 1]]"],
            ["plumb", "factor", "not json"],
            ["plumb", "compose", "[1, true]"],
            ["plumb", "graph", "--b", "1", "--attachings", "[[[0,1],[1,0]],[[0,1],[1,0]]]"],
            ["arrange", "round", "--n", "4"],
            ["arrange", "round", "--n", "3", "--k", "2", "--labels", "min+"],
            ["arrange", "forest"],
            ["surface-gen", "--b", "0"],
            ["--format", "xml", "euler", D4],
        ],
    )
    def test_exit_2(self, argv):
        code, out, err = call(*argv)
        assert code == 2 and out == "" and err.strip()

    def test_schema_error_names_pointer(self, tmp_path):
        d = json.loads(Path(D4).read_text())
        del d["root"]
        code, _, err = call("euler", write(tmp_path, "g.json", d))
        assert code == 2 and "/root" in err

    def test_syntax_error(self, tmp_path):
        assert call("euler", write(tmp_path, "g.json", "{"))[0] == 2


class TestMfunc:
    def seq(self, tmp_path, n, events):
        evs = [{"lambda": e[:3], "sigma": e[3]} for e in events]
        return write(tmp_path, "s.json", {"n": n, "events": evs})

    def test_validate(self, tmp_path):
        assert call("mfunc", "validate", self.seq(tmp_path, 3, ["min+", "max-"]))[:2] == (0, "ok\n")

    def test_validate_bad(self, tmp_path):
        code, out, _ = call("mfunc", "validate", self.seq(tmp_path, 3, ["max-"]))
        assert code == 1 and "NegativeComponents" in out

    def test_handles(self, tmp_path):
        code, out, _ = call("mfunc", "handles", self.seq(tmp_path, 3, ["min+", "max+", "max+", "max-"]))
        assert (code, out) == (0, "1 x 0-handle, 2 x 2-handle; chi = 3\n")

    def test_diffeotype(self, tmp_path):
        code, out, _ = call("mfunc", "diffeotype", self.seq(tmp_path, 5, ["min+", "max+", "max+", "max-"]))
        assert (code, out) == (0, "SphereMinusBalls(5, 3)\n")

    def test_diffeotype_convention_flag(self, tmp_path):
        path = self.seq(tmp_path, 5, ["min+", "max+", "max+", "max-"])
        assert call("mfunc", "diffeotype", path, "--ball-count-convention", "theorem_text")[1] == (
            "SphereMinusBalls(5, 1)\n"
        )

    def test_diffeotype_convention_env(self, tmp_path, monkeypatch):
        monkeypatch.setenv("FOLDCHI_CONVENTION", "theorem_text")
        path = self.seq(tmp_path, 3, ["min+", "max-"])
        code, _, err = call("mfunc", "diffeotype", path)
        assert code == 2 and "TheoremTextConventionUnderflow" in err
        assert call("mfunc", "diffeotype", path, "--ball-count-convention", "handle_proof")[0] == 0

    def test_diffeotype_invalid(self, tmp_path):
        assert call("mfunc", "diffeotype", self.seq(tmp_path, 3, ["max-"]))[0] == 2

    def test_surface_gen(self):
        code, out, _ = call("surface-gen", "--g", "1", "--s", "0", "--b", "1")
        assert code == 0 and out == "Base GenusHandle Cap; chi = -1\n"


class TestArrangeAndPlumb:
    def test_round(self):
        code, out, _ = call("arrange", "round", "--n", "5", "--k", "3", "--labels", "min+,max+")
        doc = json.loads(out)
        assert code == 0 and [v["chi"] for v in doc["vertices"]] == [0, 2, 1]

    def test_round_feeds_euler(self, tmp_path):
        _, out, _ = call("arrange", "round", "--n", "5", "--k", "3", "--labels", "min+,max+")
        assert call("euler", write(tmp_path, "g.json", out))[1] == "2\n"

    def test_forest(self, tmp_path):
        f = {"n": 4, "k": 2, "spheres": [{"id": "o", "lambda": "min", "sigma": "+"},
                                         {"id": "x", "parent": "o", "lambda": "min", "sigma": "+"},
                                         {"id": "y", "parent": "o", "lambda": "min", "sigma": "+"}]}
        code, out, _ = call("arrange", "forest", write(tmp_path, "f.json", f))
        chis = {v["id"]: v["chi"] for v in json.loads(out)["vertices"]}
        assert code == 0 and chis["o"] == -1

    def test_factor(self):
        assert call("plumb", "factor", "[[-1, 0], [-1, 1]]")[:2] == (0, "[1, 1]\n")

    def test_compose(self):
        assert call("plumb", "compose", "[2]")[:2] == (0, "[[1, -2], [0, -1]]\n")

    def test_graph(self):
        code, out, _ = call("plumb", "graph", "--g", "1", "--b", "2", "--attachings",
                            "[[[-1, 0], [-1, 1]], [[1, -2], [0, -1]]]")
        doc = json.loads(out)
        assert code == 0 and doc["chains"] == [[-1, -1], [-2]] and doc["boundary_arrows"] == 0


class TestJsonMode:
    def test_envelope(self):
        code, out, _ = call("--format", "json", "euler", D4)
        doc = json.loads(out)
        assert code == 0
        assert set(doc) == {"command", "inputs_digest", "outputs", "warnings"}
        assert doc["command"] == "euler" and doc["outputs"] == {"chi": 1}

    def test_stable(self):
        assert call("--format", "json", "euler", D4) == call("euler", D4, "--format", "json")

    def test_digest_ignores_path(self, tmp_path):
        copy = write(tmp_path, "copy.json", Path(D4).read_text())
        a = json.loads(call("--format", "json", "euler", D4)[1])
        b = json.loads(call("--format", "json", "euler", copy)[1])
        assert a["inputs_digest"] == b["inputs_digest"]

    def test_digest_tracks_options(self):
        a = json.loads(call("--format", "json", "extension-check", "--chi", "2", S4)[1])
        b = json.loads(call("--format", "json", "extension-check", "--chi", "4", S4)[1])
        assert a["inputs_digest"] != b["inputs_digest"]

    def test_obstruction_still_reported(self):
        code, out, _ = call("--format", "json", "extension-check", "--chi", "6", S4)
        assert code == 1 and json.loads(out)["outputs"] == {"verdict": "Obstructed", "lhs": "3", "rhs": 1}

    def test_warnings_in_envelope(self, tmp_path):
        g = {"n": 4, "k": 2, "root": "v0", "vertices": [{"id": "v0", "chi": 0}, {"id": "v1", "chi": 1}],
             "edges": [{"from": "v0", "to": "v1", "lambda": "max", "sigma": "+", "chiS": 0}]}
        doc = json.loads(call("--format", "json", "euler", write(tmp_path, "g.json", g))[1])
        assert doc["warnings"]


def test_console_script_entry_point():
    proc = subprocess.run([sys.executable, "-m", "foldchi.cli", "euler", D4], capture_output=True, text=True)
    assert (proc.returncode, proc.stdout) == (0, "1\n")
