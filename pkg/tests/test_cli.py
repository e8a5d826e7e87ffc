import json
from pathlib import Path

import jsonschema
import pytest

from qclean.cli import main
from qclean.codes import StabilizerCode, SubsystemCode, css_to_stabilizer
from qclean.errors import ParseError
from qclean.fileio import parse_code_file, serialize
from qclean.generators import example_42, random_stabilizer, random_subsystem, toric

SCHEMA = json.loads(
    (Path(__file__).parent.parent / "src/qclean/schemas/report.schema.json").read_text()
)


@pytest.fixture()
def toric2_file(tmp_path):
    path = tmp_path / "toric2.code"
    path.write_text(serialize(toric(2)))
    return str(path)


@pytest.fixture()
def repetition_file(tmp_path):
    code = StabilizerCode.from_generators(
        [[0, 0, 0, 1, 1, 0], [0, 0, 0, 0, 1, 1]], 3
    )
    path = tmp_path / "rep.code"
    path.write_text(serialize(code))
    return str(path)


def run_json(capsys, argv):
    rc = main(["--json"] + argv)
    out = capsys.readouterr().out
    report = json.loads(out)
    jsonschema.validate(report, SCHEMA)
    return rc, report


class TestFileFormat:
    def test_roundtrip_css(self):
        code = toric(3)
        again = parse_code_file(serialize(code))
        assert again.hx == code.hx and again.hz == code.hz

    def test_roundtrip_stabilizer(self):
        code = random_stabilizer(5, 3, seed=4)
        again = parse_code_file(serialize(code))
        assert again.stabilizer == code.stabilizer

    def test_roundtrip_subsystem(self):
        code = random_subsystem(4, 5, seed=4)
        again = parse_code_file(serialize(code))
        assert isinstance(again, SubsystemCode)
        assert again.gauge == code.gauge

    def test_comments_and_blanks_ignored(self):
        text = "# a comment\n\nCSS n=2\nHX:\n# another\n11\nHZ:\n"
        code = parse_code_file(text)
        assert code.n == 2 and code.k == 1

    def test_parse_errors_carry_line(self):
        with pytest.raises(ParseError) as err:
            parse_code_file("CSS n=2\nHX:\n101\n")
        assert err.value.line == 3
        with pytest.raises(ParseError):
            parse_code_file("BOGUS n=2\n")
        with pytest.raises(ParseError):
            parse_code_file("")


class TestSubcommands:
    def test_info(self, capsys, toric2_file):
        rc, report = run_json(capsys, ["info", toric2_file])
        assert rc == 0 and report["n"] == 8 and report["k"] == 2

    def test_region_repetition(self, capsys, repetition_file):
        rc, report = run_json(capsys, ["region", repetition_file, "--qubits", "1"])
        assert rc == 0
        assert report["ell"] == 1 and report["correctable"] is False

    def test_clean_infeasible_exit4(self, capsys, repetition_file):
        rc, report = run_json(
            capsys,
            ["clean", repetition_file, "--qubits", "1,2,3", "--op", "000100"],
        )
        assert rc == 4 and report["status"] == "infeasible"

    def test_clean_ok(self, capsys, repetition_file):
        rc, report = run_json(
            capsys, ["clean", repetition_file, "--qubits", "1", "--op", "000100"]
        )
        assert rc == 0 and report["cleaned"] is not None
        assert report["cleaned"][3] == "0"  # z bit of qubit 1 cleared

    def test_distance(self, capsys, toric2_file):
        rc, report = run_json(capsys, ["distance", toric2_file])
        assert rc == 0 and report["distance"] == 2
        rc, report = run_json(
            capsys,
            ["distance", toric2_file, "--method", "certify", "--max-weight", "1"],
        )
        assert rc == 0 and report["certified"] is True

    def test_tripartition(self, capsys, toric2_file):
        rc, report = run_json(
            capsys,
            ["tripartition", toric2_file, "--A", "1", "--B", "2", "--C", "3-8"],
        )
        assert rc == 0 and report["verified"] is True

    def test_homology(self, capsys, toric2_file):
        rc, report = run_json(
            capsys, ["homology", toric2_file, "--alpha-qubits", "1,2"]
        )
        assert rc == 0 and report["betti1"] == 2 and report["duality"] is True

    def test_universal(self, capsys, toric2_file):
        rc, report = run_json(capsys, ["universal", toric2_file])
        assert rc == 0 and report["ell_x"] + report["ell_z"] == 2

    def test_gen_roundtrip(self, capsys, tmp_path):
        out = tmp_path / "gen.code"
        rc, report = run_json(capsys, ["gen", "random-css", "8", "3", "3", "7", "-o", str(out)])
        assert rc == 0
        code = parse_code_file(out.read_text())
        assert code.n == 8

    def test_verify_suite(self, capsys):
        rc, report = run_json(capsys, ["verify", "--suite", "cl", "--trials", "10", "--seed", "7"])
        assert rc == 0 and report["failures"] == 0

    def test_abelian(self, capsys):
        rc, report = run_json(
            capsys,
            [
                "abelian",
                "--moduli",
                "4,4",
                "--subgroup-gens",
                "2:0,0:2",
                "--factors",
                "1",
            ],
        )
        assert rc == 0 and report["ell_m"] * report["ell_mc"] == report["quotient"]


class TestExitCodes:
    def test_usage_error(self, capsys, toric2_file):
        assert main(["region", toric2_file]) == 1

    def test_parse_error(self, tmp_path, capsys):
        bad = tmp_path / "bad.code"
        bad.write_text("CSS n=2\nHX:\n111\n")
        assert main(["info", str(bad)]) == 2

    def test_missing_file(self, capsys, tmp_path):
        assert main(["info", str(tmp_path / "nope.code")]) == 2

    def test_invariant_violation(self, tmp_path, capsys):
        bad = tmp_path / "bad.code"
        bad.write_text("CSS n=2\nHX:\n11\nHZ:\n10\n")
        assert main(["info", str(bad)]) == 3

    def test_budget_exceeded(self, capsys, toric2_file):
        rc = main(["--budget", "1", "distance", toric2_file])
        assert rc == 5

    def test_gen_human_output_is_file_text(self, capsys):
        assert main(["gen", "example42", "1"]) == 0
        out = capsys.readouterr().out
        assert parse_code_file(out).k == 1
