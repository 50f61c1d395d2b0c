import json
import os
import subprocess
import sys

import pytest

SRC = os.path.join(os.path.dirname(__file__), os.pardir, "src")


def run_cli(*args, expect=0):
    env = dict(os.environ, PYTHONPATH=SRC)
    proc = subprocess.run(
        [sys.executable, "-m", "prefixcodes", *args],
        capture_output=True, text=True, env=env,
    )
    assert proc.returncode == expect, (proc.returncode, proc.stderr)
    return proc


def solve_json(*args, expect=0):
    return json.loads(run_cli("solve", *args, expect=expect).stdout)


class TestSolve:
    def test_huffman(self):
        doc = solve_json("--problem", "huffman", "--radix", "2", "--weights", "3 2 1 1")
        assert doc["cost"] == 13
        assert doc["n"] == 4
        assert sorted(doc["lengths"]) == [1, 2, 3, 3]
        assert doc["elapsed"] is None
        assert doc["cells_updated"] > 0

    def test_reserved_given(self):
        doc = solve_json("--problem", "reserved-given", "--radix", "2",
                         "--lengths", "2", "--weights", "1 2 3 4")
        assert doc["cost"] == 20
        assert sorted(doc["codewords"]) == ["00", "01", "10", "11"]

    def test_one_ended(self):
        doc = solve_json("--problem", "one-ended", "--weights", "1 1 1")
        assert doc["cost"] == 6
        assert sorted(doc["codewords"]) == ["001", "01", "1"]

    def test_caller_order_preserved(self):
        doc = solve_json("--problem", "huffman", "--weights", "1 3 2")
        # weight 3 gets the shortest word, order follows the input
        assert doc["lengths"] == [2, 1, 2]

    def test_mixed_radix(self):
        doc = solve_json("--problem", "mixed-radix", "--arities", "4",
                         "--weights", "1 1 1")
        assert doc["cost"] == 3
        assert sorted(doc["codewords"]) == ["0", "1", "2"]

    def test_reserved_g(self):
        doc = solve_json("--problem", "reserved-g", "--g", "2", "--weights", "4 1 1")
        assert doc["cost"] == 8

    def test_output_modes(self):
        cost = solve_json("--problem", "huffman", "--weights", "3 2 1 1",
                          "--output", "cost")
        assert cost["cost"] == 13 and cost["lengths"] is None and "codewords" not in cost
        seq = solve_json("--problem", "huffman", "--weights", "3 2 1 1",
                         "--output", "leafseq")
        assert seq["leaf_sequence"] == {"1": 1, "2": 1, "3": 2}
        trace = solve_json("--problem", "huffman", "--weights", "3 2 1 1",
                           "--output", "trace")
        assert trace["expansions"][0] == [0, 1]
        assert trace["expansions"][-1] == [4, 0]

    def test_naive_and_batched_print_identical_results(self):
        for problem, extra in [
            ("huffman", []),
            ("one-ended", []),
            ("reserved-given", ["--lengths", "1 3 6"]),
            ("reserved-g", ["--g", "2"]),
            ("mixed-radix", ["--arities", "2 3"]),
        ]:
            a = solve_json("--problem", problem, "--weights", "9 5 3 2 1 1", *extra,
                           "--algorithm", "naive")
            b = solve_json("--problem", problem, "--weights", "9 5 3 2 1 1", *extra,
                           "--algorithm", "batched")
            for key in ("cost", "lengths", "codewords"):
                assert a.get(key) == b.get(key)

    def test_byte_identical_across_runs(self):
        args = ("--problem", "huffman", "--weights", "3 2 1 1")
        assert run_cli("solve", *args).stdout == run_cli("solve", *args).stdout

    def test_timing_flag_fills_elapsed(self):
        doc = solve_json("--problem", "huffman", "--weights", "1 1", "--timing")
        assert isinstance(doc["elapsed"], float)


class TestWeightInputs:
    def test_file_with_lines(self, tmp_path):
        path = tmp_path / "w.txt"
        path.write_text("3\n2\n1\n1\n")
        doc = solve_json("--problem", "huffman", "--weights-file", str(path))
        assert doc["cost"] == 13

    def test_file_with_json_array(self, tmp_path):
        path = tmp_path / "w.json"
        path.write_text("[3, 2, 1, 1]")
        doc = solve_json("--problem", "huffman", "--weights-file", str(path))
        assert doc["cost"] == 13

    def test_missing_weights(self):
        run_cli("solve", "--problem", "huffman", expect=2)

    def test_negative_weight(self):
        run_cli("solve", "--problem", "huffman", "--weights", "3 -1", expect=2)


class TestExitCodes:
    def test_usage_error(self):
        run_cli("solve", "--problem", "nonsense", "--weights", "1", expect=2)

    def test_infeasible_is_3(self):
        run_cli("solve", "--problem", "reserved-given", "--lengths", "1",
                "--weights", "1 1 1", expect=3)

    def test_overflow_is_4(self):
        run_cli("solve", "--problem", "reserved-given", "--lengths", "1 1000",
                "--weights", "1 1", expect=4)

    def test_budget_is_5(self):
        run_cli("verify", "--problem", "gmr",
                "--weights", "1 2 3 4 5 6 7 8 9 10 11 12", expect=5)


class TestVerify:
    def test_gmr_binary(self):
        proc = run_cli("verify", "--problem", "gmr", "--spec", "binary",
                       "--weights", "3 2 1 1")
        doc = json.loads(proc.stdout)
        assert doc["agree"] and doc["solver_cost"] == doc["oracle_cost"] == 13

    def test_one_ended(self):
        proc = run_cli("verify", "--problem", "one-ended", "--weights", "2 1")
        doc = json.loads(proc.stdout)
        assert doc["agree"] and doc["solver_cost"] == 4

    @pytest.mark.parametrize("problem,extra", [
        ("huffman", ["--radix", "3"]),
        ("mixed-radix", ["--arities", "2 3"]),
        ("reserved-given", ["--lengths", "1 3"]),
        ("reserved-g", ["--g", "2"]),
    ])
    def test_other_problems(self, problem, extra):
        proc = run_cli("verify", "--problem", problem, "--weights", "5 3 2 1", *extra)
        assert json.loads(proc.stdout)["agree"]


class TestBench:
    def test_csv_with_slope(self):
        proc = run_cli("bench", "--problem", "one-ended", "--sizes", "16 32",
                       "--algorithms", "batched", "--seed", "3")
        lines = proc.stdout.strip().splitlines()
        assert lines[0] == "problem,algorithm,n,cells_updated,wall_time"
        assert lines[1].startswith("one-ended,batched,16,")
        assert any(line.startswith("# slope problem=one-ended") for line in lines)

    def test_single_size_omits_slope(self):
        proc = run_cli("bench", "--problem", "one-ended", "--sizes", "16",
                       "--algorithms", "batched")
        assert not any("# slope" in line for line in proc.stdout.splitlines())

    def test_deterministic_without_timing(self):
        args = ("bench", "--problem", "huffman", "--sizes", "8 16",
                "--algorithms", "naive batched", "--seed", "11")
        assert run_cli(*args).stdout == run_cli(*args).stdout
