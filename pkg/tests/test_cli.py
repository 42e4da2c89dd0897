import json
import math

import pytest

from wproj.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run_cli(capsys, *argv)
    assert code == 0, err
    return json.loads(out)


class TestNormalize:
    def test_example(self, capsys):
        report = run_json(capsys, "normalize", "6,10,15")
        assert report["schema_version"] == 1
        assert report["normalized"] == ["1", "1", "1"]

    def test_moves_listed(self, capsys):
        report = run_json(capsys, "normalize", "2,4,6")
        assert report["moves"][0] == {"op": "scale", "divisor": "2"}

    def test_bad_input_exit_2(self, capsys):
        code, out, err = run_cli(capsys, "normalize", "1,x")
        assert code == 2 and out == "" and "invalid input" in err


class TestCompare:
    def test_witness_pair(self, capsys):
        report = run_json(capsys, "compare", "1,2,3,4", "1,1,2,12")
        assert report["homeomorphic"] is False
        assert report["homotopy_equivalent"] is True

    def test_homeomorphic_pair(self, capsys):
        report = run_json(capsys, "compare", "2,4,6", "1,2,3")
        assert report["homeomorphic"] is True
        assert report["homotopy_equivalent"] is True


class TestInvariants:
    def test_projective_plane(self, capsys):
        report = run_json(capsys, "invariants", "1,1,1")
        assert report["pullback_coefficients"] == ["1", "1", "1"]
        assert all(entry["value"] == "1" for entry in report["structure_constants"])
        assert report["divisor_chain_form"] == ["1", "1", "1"]

    def test_cross_field_consistency(self, capsys):
        report = run_json(capsys, "invariants", "8,12,18,30")
        normalized = [int(x) for x in report["normalized"]]
        star = [int(x) for x in report["divisor_chain_form"]]
        l = [int(x) for x in report["pullback_coefficients"]]
        constants = {(e["i"], e["j"]): int(e["value"]) for e in report["structure_constants"]}
        # star entries' p-parts reproduce the sorted p-content columns
        for p_text, column in report["p_content"].items():
            p = int(p_text)
            sorted_col = [int(x) for x in column["sorted"]]
            star_parts = []
            for x in star:
                q = 1
                while x % p == 0:
                    x //= p
                    q *= p
                star_parts.append(q)
            assert star_parts == sorted_col
            assert sorted([int(x) for x in column["parts"]]) == sorted_col
        # multiplier sequence against the structure constants
        for (i, j), c in constants.items():
            assert c * l[i + j] == l[i] * l[j]
        assert l[1] == math.lcm(*normalized)
        # canonical forms agree with the fields they summarize
        assert report["homeo_canonical_form"] == sorted(report["normalized"], key=int)
        assert [int(x) for x in report["homotopy_canonical_form"]] == star
        degrees = sorted(int(d) for d in report["additive_cohomology"])
        assert degrees == [2 * i for i in range(len(normalized))]


class TestLens:
    def test_example(self, capsys):
        report = run_json(capsys, "lens", "2", "1,1,2")
        assert report["groups"] == {"0": "0", "2": "1", "4": "2", "5": "0"}

    def test_zero_order_exit_2(self, capsys):
        code, _, err = run_cli(capsys, "lens", "0", "1,1")
        assert code == 2 and "invalid input" in err


class TestStratum:
    def test_example(self, capsys):
        report = run_json(capsys, "stratum", "1,2,3,4", "--support", "1,3")
        assert report["torus_rank"] == 1
        assert report["cyclic_order"] == "2"
        assert report["cone_weights"] == ["1", "3"]
        assert report["local_homology_order"] == "2"

    def test_unnormalized_input_has_no_order(self, capsys):
        report = run_json(capsys, "stratum", "2,4,6", "--support", "0,1")
        assert report["normalized"] is False
        assert report["local_homology_order"] is None
        assert report["cyclic_order"] == "2"

    def test_bad_support_exit_2(self, capsys):
        code, _, err = run_cli(capsys, "stratum", "1,2,3", "--support", "7")
        assert code == 2


class TestCells:
    def test_example(self, capsys):
        report = run_json(capsys, "cells", "1,1,2,12")
        assert report["cells"] == [0, 1, 2, 3]
        assert report["filtration"][1] == {"subspace": ["2", "12"], "rescaled": ["1", "6"]}

    def test_non_chain_exit_2(self, capsys):
        code, _, err = run_cli(capsys, "cells", "1,2,3")
        assert code == 2 and "divisor chain" in err


class TestCensus:
    def test_small_census(self, capsys):
        report = run_json(capsys, "census", "--dim", "1", "--max-weight", "3")
        assert report["total"] == 6
        assert report["homeo_classes"] == 1
        assert report["classes"][0]["members"] == [
            ["1", "1"], ["1", "2"], ["1", "3"], ["2", "2"], ["2", "3"], ["3", "3"],
        ]

    def test_no_members(self, capsys):
        report = run_json(capsys, "census", "--dim", "1", "--max-weight", "3", "--no-members")
        assert "members" not in report["classes"][0]
        assert report["classes"][0]["size"] == 6

    def test_table_mode(self, capsys):
        code, out, _ = run_cli(capsys, "census", "--dim", "1", "--max-weight", "3", "--table")
        assert code == 0
        assert "homotopy class" in out.splitlines()[0]
        assert out.strip().endswith("homotopy classes 1")

    def test_limit_exit_3(self, capsys):
        code, out, err = run_cli(capsys, "census", "--dim", "3", "--max-weight", "500")
        assert code == 3 and "resource limit" in err

    def test_limit_flag(self, capsys):
        code, *_ = run_cli(capsys, "census", "--dim", "1", "--max-weight", "4", "--limit", "5")
        assert code == 3

    def test_limit_env(self, capsys, monkeypatch):
        monkeypatch.setenv("WPROJ_CENSUS_LIMIT", "5")
        code, *_ = run_cli(capsys, "census", "--dim", "1", "--max-weight", "4")
        assert code == 3
        monkeypatch.setenv("WPROJ_CENSUS_LIMIT", "1000")
        code, *_ = run_cli(capsys, "census", "--dim", "1", "--max-weight", "4")
        assert code == 0


class TestSplit:
    def test_example(self, capsys):
        report = run_json(capsys, "split", "6/5", "--primes", "2,3")
        assert report["unit"] == "1/5"
        assert report["supported"] == "6/1"

    def test_negative(self, capsys):
        report = run_json(capsys, "split", "-4/9", "--primes", "2")
        assert report["unit"] == "-1/9"
        assert report["supported"] == "4/1"

    def test_zero_exit_2(self, capsys):
        code, _, err = run_cli(capsys, "split", "0", "--primes", "2")
        assert code == 2

    def test_bad_rational_exit_2(self, capsys):
        code, _, err = run_cli(capsys, "split", "x/y", "--primes", "2")
        assert code == 2


class TestDeterminism:
    @pytest.mark.parametrize(
        "argv",
        [
            ("invariants", "8,12,18,30"),
            ("census", "--dim", "2", "--max-weight", "6"),
            ("census", "--dim", "2", "--max-weight", "6", "--table"),
            ("normalize", "252,294,308"),
        ],
    )
    def test_byte_identical_reruns(self, capsys, argv):
        first = run_cli(capsys, *argv)
        second = run_cli(capsys, *argv)
        assert first == second
        assert first[0] == 0
