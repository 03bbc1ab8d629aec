import csv
import io
import json
from importlib import resources

import jsonschema
import pytest

from plethysm.cli import main


@pytest.fixture(scope="module")
def schema():
    with resources.files("plethysm").joinpath("schema.json").open() as fh:
        return json.load(fh)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, schema, *argv):
    code, out, err = run(capsys, *argv, "--format", "json")
    record = json.loads(out)
    jsonschema.validate(record, schema)
    return code, record, out


class TestStable:
    def test_known_value(self, capsys):
        code, out, _ = run(capsys, "stable", "--lambda", "6,2")
        assert code == 0 and out.strip() == "8"

    def test_zero_value(self, capsys):
        code, out, _ = run(capsys, "stable", "--lambda", "1")
        assert code == 0 and out.strip() == "0"

    def test_hook(self, capsys):
        code, out, _ = run(capsys, "stable", "--lambda", "4,3,1")
        assert code == 0 and out.strip() == "1"

    def test_json(self, capsys, schema):
        code, record, _ = run_json(capsys, schema, "stable", "--lambda", "4")
        assert code == 0
        assert record == {"command": "stable", "query": {"lambda": "4"}, "result": 2}

    def test_parse_error_exit_code(self, capsys):
        code, _, err = run(capsys, "stable", "--lambda", "x,y")
        assert code == 1 and "cannot parse" in err


class TestCoeff:
    def test_ten_by_ten(self, capsys):
        code, out, _ = run(capsys, "coeff", "--m", "10", "--n", "10", "--lambda", "4,4,2")
        assert code == 0 and out.strip().startswith("6")

    def test_oracle_path(self, capsys, schema):
        code, record, _ = run_json(
            capsys, schema, "coeff", "--m", "2", "--n", "3", "--lambda", "3"
        )
        assert code == 0 and record["regime"] == "oracle"

    def test_stable_path_reported(self, capsys, schema):
        code, record, _ = run_json(
            capsys, schema, "coeff", "--m", "2", "--n", "2", "--lambda", "2"
        )
        assert code == 0
        assert record["result"] == 1 and record["regime"] == "stable"

    def test_unsupported_regime_exit_code(self, capsys):
        code, _, err = run(capsys, "coeff", "--m", "3", "--n", "2", "--lambda", "4,4")
        assert code == 2 and "error" in err

    def test_usage_error_exit_code(self, capsys):
        code, _, _ = run(capsys, "coeff", "--m", "3")
        assert code == 1


class TestTable:
    def test_rank1_single_zero_row(self, capsys):
        code, out, _ = run(capsys, "table", "--r", "1")
        assert code == 0
        assert out.strip().split() == ["1", "0"]

    def test_rank4_text(self, capsys):
        code, out, _ = run(capsys, "table", "--r", "4")
        values = [line.split()[-1] for line in out.strip().splitlines()]
        assert code == 0 and values == ["2", "0", "1", "0", "0"]

    def test_rank8_json_nonzero_count(self, capsys, schema):
        code, record, _ = run_json(capsys, schema, "table", "--r", "8")
        assert code == 0
        nonzero = [row for row in record["result"] if row["value"]]
        assert len(nonzero) == 9

    def test_reverse_lex_row_order(self, capsys, schema):
        _, record, _ = run_json(capsys, schema, "table", "--r", "5")
        labels = [row["lambda"] for row in record["result"]]
        parsed = [tuple(int(x) for x in s.split(",")) for s in labels]
        assert parsed == sorted(parsed, reverse=True)

    def test_csv(self, capsys):
        code, out, _ = run(capsys, "table", "--r", "2", "--format", "csv")
        rows = list(csv.reader(io.StringIO(out)))
        assert rows == [["lambda", "value"], ["2", "1"], ["1,1", "0"]]

    def test_cap_exit_code(self, capsys):
        code, _, _ = run(capsys, "table", "--r", "99")
        assert code == 3

    def test_byte_identical_reruns(self, capsys):
        code1, out1, _ = run(capsys, "table", "--r", "6", "--format", "json")
        code2, out2, _ = run(capsys, "table", "--r", "6", "--format", "json")
        assert code1 == code2 == 0 and out1 == out2


class TestModule:
    def test_dims(self, capsys):
        code, out, _ = run(capsys, "module", "--r", "4", "--info", "dims")
        assert code == 0 and out.strip() == "60 / 56 / 4"

    def test_matrices_json(self, capsys, schema):
        code, record, _ = run_json(capsys, schema, "module", "--r", "2", "--info", "matrices")
        assert code == 0
        matrices = record["result"]["matrices"]
        assert set(matrices) == {"p1", "p12", "s1"}
        assert matrices["p1"] == [
            [1, 0, "1*d1^0*d2^0"],
            [1, 1, "1*d1^1*d2^1"],
            [1, 2, "1*d1^1*d2^0"],
        ]
        assert record["result"]["basis"] == [
            "{1,2} ; {1,2}",
            "{1|2} ; {1|2}",
            "{1|2} ; {1,2}",
        ]

    def test_dq(self, capsys, schema):
        code, record, _ = run_json(capsys, schema, "module", "--r", "4", "--info", "dq")
        shapes = {row["shape"]: row["orbit_size"] for row in record["result"]}
        assert code == 0 and shapes == {"4": 1, "2,2": 3}

    def test_filtration(self, capsys, schema):
        code, record, _ = run_json(
            capsys, schema, "module", "--r", "3", "--info", "filtration"
        )
        assert code == 0
        assert [row["dimension"] for row in record["result"]] == [5, 6, 1]

    def test_cap_exit_code(self, capsys):
        code, _, _ = run(capsys, "module", "--r", "7", "--info", "dims")
        assert code == 3


class TestVerify:
    def test_fast_suite_passes(self, capsys, schema):
        code, record, _ = run_json(capsys, schema, "verify", "--suite", "fast")
        assert code == 0
        assert record["ok"] is True
        assert all(check["ok"] for check in record["result"])
        assert len(record["result"]) == 30

    def test_injected_failure_exit_code(self, capsys):
        code, out, _ = run(capsys, "verify", "--suite", "fast", "--inject-failure")
        assert code == 4
        assert "FAIL injected-failure" in out
