import json
from pathlib import Path

import pytest

from wordavoid.cli import main

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    rc = main(list(argv))
    captured = capsys.readouterr()
    return rc, captured.out, captured.err


class TestGoldenOutputs:
    def test_table_csv(self, capsys):
        rc, out, _ = run(capsys, "table", "11100", "7", "csv")
        assert rc == 0
        assert out == (GOLDEN / "table2_11100.csv").read_text()

    def test_lower_triangle_csv(self, capsys):
        rc, out, _ = run(capsys, "triangle", "--j", "2", "7", "csv")
        assert rc == 0
        assert out == (GOLDEN / "table3_11100.csv").read_text()

    def test_upper_triangle_csv(self, capsys):
        rc, out, _ = run(capsys, "triangle", "--bar", "11100", "7", "csv")
        assert rc == 0
        assert out == (GOLDEN / "table4_11100.csv").read_text()

    def test_lower_triangle_from_pattern_agrees(self, capsys):
        _, from_j, _ = run(capsys, "triangle", "--j", "2", "7", "csv")
        _, from_pattern, _ = run(capsys, "triangle", "11100", "7", "csv")
        assert from_j == from_pattern

    def test_deterministic(self, capsys):
        _, first, _ = run(capsys, "table", "11100", "7", "csv")
        _, second, _ = run(capsys, "table", "11100", "7", "csv")
        assert first == second


class TestAutocorr:
    def test_periodic_pattern(self, capsys):
        rc, out, _ = run(capsys, "autocorr", "101010")
        assert rc == 0
        assert out == "c=(1,0,1,0,1,0); C=1+xy+x^2y^2\n"

    def test_trivial_overlap(self, capsys):
        assert run(capsys, "autocorr", "11100")[1] == "c=(1,0,0,0,0); C=1\n"
        assert run(capsys, "autocorr", "1")[1] == "c=(1); C=1\n"

    def test_json(self, capsys):
        _, out, _ = run(capsys, "autocorr", "101010", "json")
        assert json.loads(out) == {
            "c": [1, 0, 1, 0, 1, 0],
            "terms": [[0, 0], [1, 1], [2, 2]],
        }


class TestSeries:
    def test_a_csv(self, capsys):
        rc, out, _ = run(capsys, "series", "a", "csv", "--j", "2")
        assert rc == 0
        assert out == "1,1,0,2,-1,7,-12,38,-99,281\n"

    def test_d_json(self, capsys):
        _, out, _ = run(capsys, "series", "d", "--j", "2", "--order", "7",
                        "--format", "json")
        assert json.loads(out) == [1, 2, 6, 18, 58, 192, 650, 2232]

    def test_text_default(self, capsys):
        _, out, _ = run(capsys, "series", "h", "--j", "1", "--order", "3")
        assert out == "0 + 1*t + 0*t^2 + 0*t^3\n"


class TestRule:
    def test_avoid_census_csv(self, capsys):
        rc, out, _ = run(capsys, "rule", "avoid", "3", "csv", "--j", "2")
        assert rc == 0
        assert out == "1,0,0,0\n2,1,0,0\n6,3,1,0\n18,9,4,1\n"

    def test_avoid_needs_j(self, capsys):
        rc, _, err = run(capsys, "rule", "avoid", "3")
        assert rc == 2
        assert err.startswith("error:")

    def test_named_rule(self, capsys):
        _, out, _ = run(capsys, "rule", "catalan-plain", "4", "json")
        rows = json.loads(out)
        assert [sum(row) for row in rows] == [1, 2, 5, 14, 42]


class TestConstruct:
    def test_survivors_sorted_lines(self, capsys):
        rc, out, _ = run(capsys, "construct", "--j", "1", "--level", "2")
        assert rc == 0
        assert out == "0011\n0101\n011\n1001\n101\n1010\n11\n"

    def test_survivors_json(self, capsys):
        _, out, _ = run(capsys, "construct", "survivors", "--format", "json",
                        "--j", "1", "--level", "2")
        assert sorted(json.loads(out)) == sorted(
            ["11", "011", "101", "0011", "0101", "1001", "1010"]
        )

    def test_census_matches_rule(self, capsys):
        _, from_tree, _ = run(capsys, "construct", "census", "--format", "csv",
                              "--j", "1", "--level", "4")
        _, from_rule, _ = run(capsys, "rule", "avoid", "4", "csv", "--j", "1")
        assert from_tree == from_rule

    def test_nodes_csv_shape(self, capsys):
        _, out, _ = run(capsys, "construct", "nodes", "--format", "csv",
                        "--j", "1", "--level", "1")
        lines = sorted(out.splitlines())
        assert lines == ["01,,0,zero1,False", "1,,1,plain,False",
                         "10,,0,zero2,False"]


class TestVerify:
    def test_passes(self, capsys):
        rc, out, _ = run(capsys, "verify", "--j", "1", "--levels", "4")
        assert rc == 0
        lines = out.splitlines()
        assert lines and all(line.startswith("PASS") for line in lines)

    def test_json_shape(self, capsys):
        _, out, _ = run(capsys, "verify", "--format", "json", "--j", "2",
                        "--levels", "3")
        results = json.loads(out)
        assert all(r["passed"] for r in results)
        assert {"name", "passed", "detail"} == set(results[0])


class TestUsageErrors:
    def test_bad_j(self, capsys):
        rc, _, err = run(capsys, "verify", "--j", "0", "--levels", "3")
        assert rc == 2
        assert err.startswith("error:")

    def test_triangle_needs_exactly_one_source(self, capsys):
        assert run(capsys, "triangle", "5")[0] == 2
        assert run(capsys, "triangle", "11100", "5", "--j", "2")[0] == 2

    def test_guard_beyond_levels(self, capsys):
        rc, _, err = run(capsys, "construct", "--j", "1", "--level", "10")
        assert rc == 2
        assert "error:" in err

    def test_bad_pattern_rejected_by_parser(self, capsys):
        with pytest.raises(SystemExit) as info:
            main(["table", "2100", "5"])
        assert info.value.code == 2

    def test_order_cap(self, capsys):
        with pytest.raises(SystemExit) as info:
            main(["table", "11100", "41"])
        assert info.value.code == 2

    def test_missing_subcommand(self, capsys):
        with pytest.raises(SystemExit):
            main([])
