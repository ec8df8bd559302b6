import json

import pytest

from optsl2.cli import main
from optsl2.partitions import partitions_of


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_verify_json_is_byte_reproducible(capsys):
    argv = ("verify", "epsilon", "--n-max", "3", "--primes", "2",
            "--format", "json")
    code1, out1, _ = run_cli(capsys, *argv)
    code2, out2, _ = run_cli(capsys, *argv)
    assert code1 == code2 == 0
    assert out1 == out2
    obj = json.loads(out1)
    assert obj["schema"] == 1
    assert obj["suite"] == "epsilon"
    assert obj["summary"]["falsified"] == 0
    assert all(r["runtime"] is None for r in obj["records"])


def test_verify_seed_changes_the_report(capsys):
    base = ("verify", "untwist", "--primes", "3", "--format", "json")
    _, out5a, _ = run_cli(capsys, *base, "--seed", "5")
    _, out5b, _ = run_cli(capsys, *base, "--seed", "5")
    _, out6, _ = run_cli(capsys, *base, "--seed", "6")
    assert out5a == out5b
    assert out5a != out6
    assert json.loads(out6)["seed"] == 6


def test_verify_timings_flag(capsys):
    argv = ("verify", "weight-bound", "--n-max", "3", "--primes", "2",
            "--format", "json", "--timings")
    code, out, _ = run_cli(capsys, *argv)
    assert code == 0
    obj = json.loads(out)
    assert all(isinstance(r["runtime"], float) for r in obj["records"])


def test_verify_text_output(capsys):
    code, out, err = run_cli(capsys, "verify", "order-formula",
                             "--n-max", "3", "--primes", "2,3")
    assert code == 0
    assert err == ""
    assert "suite: order-formula" in out
    assert "summary:" in out
    assert "note:" in out
    # text mode always carries per-record timings
    assert "s)" in out
    assert "FAIL" not in out


def test_orbit_table_text(capsys):
    code, out, _ = run_cli(capsys, "orbit-table", "--n", "5", "--p", "3")
    assert code == 0
    assert "(3, 2)" in out
    assert "(1, 1, 1, 1, 1)" in out
    assert "partition" in out


def test_orbit_table_json(capsys):
    code, out, _ = run_cli(capsys, "orbit-table", "--n", "5", "--p", "3",
                           "--format", "json")
    assert code == 0
    obj = json.loads(out)
    assert obj["schema"] == 1
    assert len(obj["rows"]) == len(list(partitions_of(5)))
    row = next(r for r in obj["rows"] if r["partition"] == [3, 2])
    assert row["dim_c"] == 9
    assert row["parabolic_block_type"] == [1, 1, 1, 1, 1]
    assert run_cli(capsys, "orbit-table", "--n", "13", "--p", "2")[0] == 2


def test_tilt_goldens(capsys):
    code, out, _ = run_cli(capsys, "tilt", "--partition", "2", "--p", "2",
                           "--format", "json")
    assert code == 0
    obj = json.loads(out)
    assert obj["decomposition"]["summands"] == ["T(2)"]
    assert obj["certified"] is True
    assert obj["fix_p"] == obj["fix_0"] == 2

    code, out, _ = run_cli(capsys, "tilt", "--partition", "3", "--p", "3")
    assert code == 0
    assert "T(4) + L(2)" in out
    assert "certified tilting: yes" in out


def test_tilt_inadmissible_partition_is_a_usage_error(capsys):
    code, _, err = run_cli(capsys, "tilt", "--partition", "3", "--p", "2")
    assert code == 2
    assert "error" in err


def test_optimal_build(capsys):
    code, out, _ = run_cli(capsys, "optimal", "build", "--partition", "2,1",
                           "--p", "3", "--format", "json")
    assert code == 0
    obj = json.loads(out)
    assert obj["verified"] is True
    assert obj["witness"]["torus_weights"] == [1, -1, 0]
    assert all(obj["witness"][k] for k in
               ("dx_matches", "triple_brackets", "torus_associated",
                "exp_aligned", "multiplicative"))


def test_optimal_conjugacy(capsys):
    code, out, _ = run_cli(capsys, "optimal", "conjugacy", "--n", "3",
                           "--p", "2", "--format", "json")
    assert code == 0
    obj = json.loads(out)
    assert obj["records"]
    for r in obj["records"]:
        assert r["verified"] is not False


def test_optimal_gcr(capsys):
    code, out, _ = run_cli(capsys, "optimal", "gcr", "--partition", "2",
                           "--p", "2", "--format", "json")
    assert code == 0
    obj = json.loads(out)
    assert obj["verified"] is True
    assert obj["witness"]["subspaces"] == 5


def test_springer_subcommand(capsys):
    code, out, _ = run_cli(capsys, "springer", "--p", "3",
                           "--partition", "2,1", "--a", "1,2",
                           "--format", "json")
    assert code == 0
    obj = json.loads(out)
    assert obj["verified"] is True
    assert obj["witness"]["roundtrip"] is True
    assert obj["witness"]["partition_preserved"] is True

    code, out, _ = run_cli(capsys, "springer", "--q", "--partition", "3",
                           "--a", "1/2,1/3")
    assert code == 0
    assert "round trip: True" in out

    code, _, err = run_cli(capsys, "springer", "--p", "3",
                           "--partition", "2,1", "--a", "1")
    assert code == 2
    assert "coefficients" in err


def test_demo_springer_tangent(capsys):
    code, out, _ = run_cli(capsys, "demo", "springer-tangent",
                           "--format", "json")
    assert code == 0
    obj = json.loads(out)
    assert obj["schema"] == 1
    assert len(obj["records"]) == 16
    for r in obj["records"]:
        assert isinstance(r["is_scalar"], bool)
        assert "entries" in r["matrix"]
        if r["is_scalar"]:
            assert r["scalar"] is not None

    code, out, _ = run_cli(capsys, "demo", "springer-tangent")
    assert code == 0
    assert "none is asserted" in out
    assert "of 16 runs" in out


def test_exit_codes(capsys):
    # invalid prime in the grid: usage error
    code, _, err = run_cli(capsys, "verify", "epsilon", "--primes", "9")
    assert code == 2
    assert "error" in err
    # enumeration too large for the budget
    code, _, err = run_cli(capsys, "verify", "gcr", "--n-max", "2",
                           "--primes", "2", "--budget", "3")
    assert code == 3
    assert "budget" in err
    # unknown suite is rejected by argparse itself
    with pytest.raises(SystemExit) as exc:
        main(["verify", "frobnicate"])
    assert exc.value.code == 2
    capsys.readouterr()
