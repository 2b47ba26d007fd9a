import json
import subprocess
import sys

import pytest

from diffeolin.cli import load_space, main, space_from_document, space_to_document, InputError
from diffeolin.diffeospace import DiffSpace

E3_DOC = {"dimension": 3, "generators": [{"symbol": "abs", "vector": ["0", "1", "1"]}]}
A_DOC = [["2", "1", "-1"], ["1", "2", "-2"], ["-1", "-2", "2"]]


@pytest.fixture
def files(tmp_path):
    def write(name, obj):
        p = tmp_path / name
        p.write_text(obj if isinstance(obj, str) else json.dumps(obj), encoding="utf-8")
        return str(p)

    return {
        "e3": write("e3.json", E3_DOC),
        "e0": write("e0.json", {"dimension": 2, "generators": []}),
        "a": write("a.json", A_DOC),
        "id3": write("id3.json", [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]]),
        "full2": write("full2.json", [["1", "0"], ["0", "1"]]),
        "zero": write("zero.json", []),
        "v0": write("v0.json", [["1", "0", "0"], ["0", "1", "-1"], ["2", "1", "-1"]]),
        "v1": write("v1.json", [["0", "2", "2"]]),
        "e12": write("e12.json", [["1", "0", "0"], ["0", "1", "0"]]),
        "e3only": write("e3only.json", [["0", "0", "1"]]),
        "bad_json": write("bad.json", '{"dimension": 3,\n  "generators": [}'),
        "exp": write("exp.json", {"dimension": 3, "generators": [{"symbol": "exp", "vector": ["1", "0", "0"]}]}),
        "float": write("float.json", {"dimension": 1, "generators": [{"symbol": "abs", "vector": [0.5]}]}),
        "dm": write("dm.json", [["2/3", "-1/3"], ["-1/3", "2/3"]]),
        "indef": write("indef.json", [["1", "2"], ["2", "1"]]),
        "write": write,
    }


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


class TestLoad:
    def test_e3(self, files):
        assert load_space(files["e3"]) == DiffSpace.of(3, ("abs", (0, 1, 1)))

    def test_e0(self, files):
        assert load_space(files["e0"]) == DiffSpace.standard(2)

    def test_unknown_symbol(self, files):
        with pytest.raises(InputError, match="unknown symbol"):
            load_space(files["exp"])

    def test_parse_error_position(self, files):
        with pytest.raises(InputError, match=r"line 2 column \d+"):
            load_space(files["bad_json"])

    def test_floats_rejected(self, files):
        with pytest.raises(InputError, match="not a rational"):
            load_space(files["float"])

    def test_multi_term(self):
        doc = {"dimension": 2, "generators": [{"terms": [{"symbol": "abs", "vector": ["1", "0"]},
                                                        {"symbol": "smooth", "vector": ["0", "1"]},
                                                        {"symbol": "cbrt", "vector": ["1", "1"]}]}]}
        space = space_from_document(doc)
        assert [g.symbol for g in space.generators] == ["abs", "cbrt"]

    def test_document_round_trip(self, files):
        space = load_space(files["e3"])
        assert space_from_document(space_to_document(space)) == space


class TestCommands:
    def test_dual(self, files, capsys):
        code, out, _ = run(["dual", files["e3"], "--json"], capsys)
        assert code == 0
        assert json.loads(out) == {"k": 2, "rows": [["1", "0", "0"], ["0", "1", "-1"]]}

    def test_flags_before_subcommand(self, files, capsys):
        before = run(["--json", "dual", files["e3"]], capsys)[1]
        after = run(["dual", files["e3"], "--json"], capsys)[1]
        assert before == after and json.loads(before)["k"] == 2

    def test_dual_text(self, files, capsys):
        code, out, _ = run(["dual", files["e3"]], capsys)
        assert code == 0 and "[[1, 0, 0], [0, 1, -1]]" in out

    def test_forms(self, files, capsys):
        code, out, _ = run(["forms", files["e3"], "--json"], capsys)
        assert code == 0 and json.loads(out)["dimension"] == 3

    def test_check_form(self, files, capsys):
        assert run(["check-form", files["e3"], files["a"]], capsys)[0] == 0
        assert run(["check-form", files["e3"], files["id3"]], capsys)[0] == 1

    def test_pseudometric(self, files, capsys):
        code, out, _ = run(["pseudometric", files["e3"], "--json"], capsys)
        assert json.loads(out)["matrix"] == [["1", "0", "0"], ["0", "1", "-1"], ["0", "-1", "1"]]

    def test_check_pm(self, files, capsys):
        code, out, _ = run(["check-pm", files["e3"], files["id3"], "--json"], capsys)
        assert code == 1 and json.loads(out)["reason"] == "form not smooth"
        code, out, _ = run(["check-pm", files["e3"], files["a"], "--json"], capsys)
        assert code == 0 and json.loads(out)["pseudo_metric"] is True

    def test_decompose(self, files, capsys):
        code, out, _ = run(["decompose", files["e3"], files["a"], "--json"], capsys)
        data = json.loads(out)
        assert code == 0
        assert data["V0"]["basis"] == [["1", "0", "0"], ["0", "1", "-1"]]
        assert data["V1"]["basis"] == [["0", "1", "1"]]
        assert data["eigenvalues"] == [4.732050808, 1.267949192, 0.0]

    def test_decompose_not_pseudo_metric_is_input_error(self, files, capsys):
        code, _, err = run(["decompose", files["e3"], files["id3"]], capsys)
        assert code == 2 and "not a pseudo-metric" in err

    def test_check_split(self, files, capsys):
        code, out, _ = run(["check-split", files["e0"], files["full2"], files["zero"], "--json"], capsys)
        assert code == 0 and json.loads(out)["verdict"] is True
        assert run(["check-split", files["e3"], files["v0"], files["v1"]], capsys)[0] == 0
        assert run(["check-split", files["e3"], files["e12"], files["e3only"]], capsys)[0] == 1

    def test_check_split_not_direct(self, files, capsys):
        code, _, err = run(["check-split", files["e3"], files["v0"], files["e12"]], capsys)
        assert code == 2 and "not a direct sum" in err

    def test_invariant_part(self, files, capsys):
        code, out, _ = run(["invariant-part", files["e3"], "--json"], capsys)
        assert json.loads(out)["subspace"]["basis"] == [["1", "0", "0"], ["0", "1", "-1"]]

    def test_dual_metric(self, files, capsys):
        code, out, _ = run(["dual-metric", files["e3"], files["a"], "--json"], capsys)
        assert code == 0 and json.loads(out)["matrix"] == [["2/3", "-1/3"], ["-1/3", "2/3"]]

    def test_from_dual_metric(self, files, capsys):
        code, out, _ = run(["from-dual-metric", files["e3"], files["dm"], "--json"], capsys)
        assert code == 0 and json.loads(out)["matrix"] == A_DOC
        code, _, err = run(["from-dual-metric", files["e3"], files["indef"]], capsys)
        assert code == 2 and "not positive definite" in err

    def test_report(self, capsys):
        code, out, _ = run(["report", "--json"], capsys)
        data = json.loads(out)
        assert code == 0 and len(data["discrepancies"]) == 1

    def test_probe(self, files, capsys):
        code, out, _ = run(["probe", "--seed", "42", "--trials", "3", files["e3"]], capsys)
        assert code == 0 and "all properties pass: true" in out
        assert run(["probe", "--seed", "1", "--trials", "0"], capsys)[0] == 2


class TestExitCodes:
    def test_missing_file(self, capsys):
        assert run(["dual", "/nonexistent.json"], capsys)[0] == 2

    def test_malformed(self, files, capsys):
        code, _, err = run(["dual", files["bad_json"]], capsys)
        assert code == 2 and "parse error" in err

    def test_unknown_symbol(self, files, capsys):
        code, _, err = run(["dual", files["exp"]], capsys)
        assert code == 2 and "unknown symbol" in err

    def test_usage(self, capsys):
        assert run([], capsys)[0] == 2
        assert run(["nope"], capsys)[0] == 2

    def test_matrix_wrong_shape(self, files, capsys):
        assert run(["check-pm", files["e3"], files["full2"]], capsys)[0] == 2


class TestDeterminismAndJson:
    @pytest.mark.parametrize("cmd", ["dual", "decompose"])
    def test_json_round_trip(self, files, capsys, cmd):
        argv = [cmd, files["e3"]] + ([files["a"]] if cmd == "decompose" else []) + ["--json"]
        _, out, _ = run(argv, capsys)
        once = json.dumps(json.loads(out), indent=2) + "\n"
        assert once == out
        assert json.dumps(json.loads(once), indent=2) + "\n" == once

    def test_byte_identical_runs(self, files, capsys):
        outs = {run(["probe", "--seed", "5", "--trials", "4", files["e3"]], capsys)[1] for _ in range(2)}
        assert len(outs) == 1

    def test_console_entry_point(self, files):
        res = subprocess.run([sys.executable, "-m", "diffeolin.cli", "dual", files["e3"]], capture_output=True, text=True)
        assert res.returncode == 0 and "k: 2" in res.stdout
