"""Test suite for the command line interface"""

# pylint: disable=too-few-public-methods,invalid-name,redefined-outer-name

import pytest

from upcover.__main__ import main
from upcover.formats import format_instance, parse_instance, parse_solution
from upcover.model import EdgeAttrs, Instance
from upcover.scripts.check import report


@pytest.fixture
def tree_file(tmp_path, example_tree):
    path = tmp_path / "tree.txt"
    path.write_text(format_instance(example_tree), encoding="utf-8")
    return str(path)


class TestMain:
    """Test cases for the subcommand dispatcher"""

    def test_unknown_command(self, capsys):
        """Unknown commands print the help and fail"""
        assert main(["frobnicate"]) == 1
        assert "upcover <command>" in capsys.readouterr().out


class TestSolve:
    """Test cases for the solve command"""

    def test_tree(self, capsys, tree_file, example_tree):
        """The example solves to 7 and the printed solution verifies"""
        assert main(["solve", tree_file, "--algo", "tree"]) == 0
        out = capsys.readouterr().out
        assert out.splitlines()[0] == "7"
        assert parse_solution(out, example_tree).verify(example_tree)

    def test_verify(self, capsys, tree_file):
        """--verify reports agreement with the oracle"""
        assert main(["solve", tree_file, "--verify", "--rebuild"]) == 0
        assert "# verified: yes" in capsys.readouterr().out

    def test_output_file(self, tmp_path, tree_file):
        """--output writes the solution to a file"""
        out = tmp_path / "solution.txt"
        assert main(["solve", tree_file, "--output", str(out)]) == 0
        assert out.read_text(encoding="utf-8").startswith("7\n")

    def test_not_applicable(self, capsys, tmp_path, example_star):
        """A weighted star refused by the star solver exits with 2"""
        weighted = Instance((1, 2, 1, 1), example_star.edges, 2, 3, 1, True)
        path = tmp_path / "star.txt"
        path.write_text(format_instance(weighted), encoding="utf-8")
        assert main(["solve", str(path), "--algo", "star"]) == 2
        assert capsys.readouterr().err.startswith("error:")

    def test_bad_input(self, tmp_path):
        """Malformed, invalid and missing files exit with 1"""
        garbage = tmp_path / "garbage.txt"
        garbage.write_text("hello\n", encoding="utf-8")
        assert main(["solve", str(garbage)]) == 1
        invalid = tmp_path / "invalid.txt"
        invalid.write_text("upmclp 1\n2 1 1 2 1 1\n0 1\n1 1\n0 1 2 2 1\n", encoding="utf-8")
        assert main(["solve", str(invalid)]) == 1
        assert main(["solve", str(tmp_path / "missing.txt")]) == 1

    def test_work_bound(self, tree_file):
        """The oracle refusing a large enumeration exits with 2"""
        assert main(["solve", tree_file, "--algo", "brute", "--work-bound", "10"]) == 2


class TestDecide:
    """Test cases for the decide command"""

    def test_thresholds(self, capsys, tree_file):
        """true at the optimum, false above it"""
        assert main(["decide", tree_file, "--threshold", "7"]) == 0
        assert capsys.readouterr().out == "true\n"
        assert main(["decide", tree_file, "--threshold", "15/2"]) == 0
        assert capsys.readouterr().out == "false\n"
        assert main(["decide", tree_file, "--threshold", "10", "-p", "2"]) == 0
        assert capsys.readouterr().out == "true\n"


class TestGen:
    """Test cases for the gen command"""

    def test_deterministic(self, tmp_path):
        """Same seed, byte-identical files"""
        first, second = tmp_path / "a.txt", tmp_path / "b.txt"
        for out in (first, second):
            assert main(["gen", "--shape", "tree", "--n", "7", "--seed", "1", "--output", str(out)]) == 0
        assert first.read_bytes() == second.read_bytes()
        assert parse_instance(first.read_text(encoding="utf-8")).n == 7

    def test_uniform_weights(self, capsys):
        """--uniform-weights gives equal weights"""
        assert main(["gen", "--shape", "star", "--n", "5", "--uniform-weights"]) == 0
        assert parse_instance(capsys.readouterr().out).is_uniform_weight

    def test_bad_range(self):
        """Empty ranges exit with 1"""
        assert main(["gen", "--shape", "tree", "--n", "4", "--max-length", "0"]) == 1


class TestReduce:
    """Test cases for the reduce command"""

    def test_star(self, capsys, tmp_path):
        """The gadget instance carries threshold and p in its header comment"""
        knapsack = tmp_path / "ks.txt"
        knapsack.write_text("2 3 4\n2 3\n3 4\n", encoding="utf-8")
        assert main(["reduce", str(knapsack), "--to", "star"]) == 0
        out = capsys.readouterr().out
        assert out.startswith("# knapsack gadget: to=star threshold=12 p=1\n")
        assert parse_instance(out).weights == (8, 3, 4)

    def test_path(self, capsys, tmp_path):
        """Path gadgets need one facility per item"""
        knapsack = tmp_path / "ks.txt"
        knapsack.write_text("2 3 4\n2 3\n3 4\n", encoding="utf-8")
        assert main(["reduce", str(knapsack), "--from", "knapsack", "--to", "path"]) == 0
        out = capsys.readouterr().out
        assert "threshold=20 p=2" in out
        assert parse_instance(out).facilities == 2


class TestBench:
    """Test cases for the bench command"""

    def test_files(self, capsys, tree_file):
        """One row per file and algorithm"""
        assert main(["bench", tree_file, "--algo", "tree", "--algo", "brute", "--verify"]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "instance,algo,n,m,p,R,B,value,usec,verified"
        assert len(lines) == 3
        assert all(line.endswith(",1") for line in lines[1:])

    def test_generated_suite(self, capsys):
        """--shape generates count instances per size"""
        argv = ["bench", "--shape", "path", "--sizes", "5", "6", "--count", "2", "--seed", "3", "--verify"]
        assert main(argv) == 0
        lines = capsys.readouterr().out.splitlines()
        assert len(lines) == 5
        assert lines[1].startswith("path-n00005-s3,auto,5,4,")
        assert all(line.endswith(",1") for line in lines[1:])

    def test_empty(self, capsys):
        """No instances, header only"""
        assert main(["bench"]) == 0
        assert capsys.readouterr().out == "instance,algo,n,m,p,R,B,value,usec,verified\n"


class TestCheck:
    """Test cases for the check command"""

    def test_valid(self, capsys, tree_file):
        """Topology, algorithms and reach counts"""
        assert main(["check", tree_file]) == 0
        out = capsys.readouterr().out
        assert "topology: tree" in out
        assert "algorithms: tree brute" in out
        assert "  node 0: 7 node(s) reachable within budget" in out

    def test_invalid(self, capsys, tmp_path):
        """Violations are listed and the exit code is 1"""
        path = tmp_path / "invalid.txt"
        path.write_text("upmclp 1\n2 1 1 2 1 1\n0 1\n1 1\n0 1 2 2 1\n", encoding="utf-8")
        assert main(["check", str(path)]) == 1
        assert "edge (0, 1): bound not < length" in capsys.readouterr().out

    def test_normalization_report(self):
        """Capped bounds and uncrossable edges are reported"""
        edges = (EdgeAttrs((0, 1), 5, 4, 2), EdgeAttrs((1, 2), 3, 1, 1))
        lines, valid = report(Instance((1, 1, 1), edges, 2, 3, 1, True))
        assert valid
        assert "  edge (0, 1): bound 4 -> 1" in lines
        assert "  edge (0, 1): uncrossable for coverage" in lines
        assert "topology: star" in lines
