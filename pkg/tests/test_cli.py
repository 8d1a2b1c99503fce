import json

import pytest

from circlering.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_circle_enum_golden(capsys):
    code, out, _ = run_cli(capsys, "circle", "enum", "--field", "Fp:7", "--center", "0,0", "--radius", "1")
    assert code == 0
    doc = json.loads(out)
    assert doc["count"] == 8
    assert doc["points"] == [
        {"x": "0", "y": "1"}, {"x": "0", "y": "6"}, {"x": "1", "y": "0"},
        {"x": "2", "y": "2"}, {"x": "2", "y": "5"}, {"x": "5", "y": "2"},
        {"x": "5", "y": "5"}, {"x": "6", "y": "0"},
    ]


def test_circle_partition(capsys):
    code, out, _ = run_cli(capsys, "circle", "partition", "--field", "Fp:13",
                           "--center", "7,11", "--radius", "6")
    assert code == 0
    doc = json.loads(out)
    assert doc["class_size"] == 6 and doc["theorem_expected"] == 6 and doc["match"]
    assert sorted(len(cls) for cls in doc["classes"]) == [6, 6]


def test_circle_cliques(capsys):
    code, out, _ = run_cli(capsys, "circle", "cliques", "--field", "Fp2:7,x^2+1",
                           "--center", "0,0", "--radius", "1", "--seed-point", "4+a,2+5a")
    assert code == 0
    doc = json.loads(out)
    assert [s["size"] for s in doc["sets"]] == [4, 2, 2]
    assert doc["sets"][0]["status"] == "c-maximal"


def test_perfect(capsys):
    code, out, _ = run_cli(capsys, "perfect", "--field", "Fp:7", "--radius", "1")
    assert code == 0
    doc = json.loads(out)
    assert doc["perfect"] == ["2", "4"]


def test_verify_prime_theorem_small(capsys):
    code, out, _ = run_cli(capsys, "verify", "prime-theorem", "--pmax", "40")
    assert code == 0
    lines = out.strip().splitlines()
    summary = json.loads(lines[-1])["summary"]
    assert summary["mismatches"] == 0
    assert summary["records"] == len(lines) - 1
    first = json.loads(lines[0])
    assert first["p"] == 3 and first["match"]


def test_verify_prime_theorem_parallel(capsys):
    code, out, _ = run_cli(capsys, "verify", "prime-theorem", "--pmax", "30", "--parallel", "2")
    assert code == 0
    ps = [json.loads(line)["p"] for line in out.strip().splitlines()[:-1]]
    assert ps == sorted(ps)


def test_verify_table(capsys):
    code, out, _ = run_cli(capsys, "verify", "table")
    assert code == 0
    assert json.loads(out.strip().splitlines()[-1])["summary"]["mismatches"] == 0


def test_verify_mod4(capsys):
    code, out, _ = run_cli(capsys, "verify", "mod4", "--pmax", "300")
    assert code == 0
    assert json.loads(out.strip().splitlines()[-1])["summary"]["mismatches"] == 0


def test_rot_commands(capsys):
    code, out, _ = run_cli(capsys, "rot", "pow", "--field", "Fp:13", "--radius", "1",
                           "--point", "2,6", "--exp", "3")
    assert code == 0
    assert json.loads(out) == {"result": {"x": "0", "y": "12"}, "checks": {"on_circle": True}}
    code, out, _ = run_cli(capsys, "rot", "mul", "--field", "Q", "--radius", "2",
                           "--point", "8/5,6/5", "--point2", "8/5,6/5")
    assert json.loads(out)["result"] == {"x": "14/25", "y": "48/25"}
    code, out, _ = run_cli(capsys, "rot", "sqrt", "--field", "Fp:13", "--radius", "1",
                           "--point", "7,11")
    assert json.loads(out)["result"] == {"x": "2", "y": "6"}
    code, out, _ = run_cli(capsys, "rot", "order", "--field", "Fp:13", "--radius", "1",
                           "--point", "2,6")
    assert json.loads(out)["order"] == 12
    # non-perfect induced distance: sqrt reports null
    code, out, _ = run_cli(capsys, "rot", "sqrt", "--field", "Fp:7", "--radius", "1",
                           "--point", "2,2")
    assert code == 0 and json.loads(out)["result"] is None


def test_keyex_demo_deterministic(capsys):
    args = ("keyex", "demo", "--field", "Fp:1000003", "--radius", "1",
            "--point", "400002,800003", "--seed-a", "5", "--seed-b", "6",
            "--dlog-cap", "0")
    code1, out1, _ = run_cli(capsys, *args)
    code2, out2, _ = run_cli(capsys, *args)
    assert code1 == code2 == 0
    assert out1 == out2
    doc = json.loads(out1)
    assert doc["equal"] is True


def test_env_seed_default(capsys, monkeypatch):
    monkeypatch.setenv("CIRCLERING_SEED", "123")
    code, out, _ = run_cli(capsys, "keyex", "demo", "--field", "Fp:13", "--radius", "1",
                           "--point", "2,6")
    assert code == 0
    assert json.loads(out)["equal"] is True


def test_usage_errors(capsys):
    code, _, err = run_cli(capsys, "circle", "enum", "--field", "Fp:15", "--radius", "1")
    assert code == 2 and "error:" in err
    code, _, err = run_cli(capsys, "circle", "enum", "--field", "Q", "--radius", "1")
    assert code == 2 and "InfiniteField" in err
    code, _, err = run_cli(capsys, "circle", "enum", "--field", "Fp:7", "--radius", "0")
    assert code == 2 and "ZeroRadius" in err
    with pytest.raises(SystemExit) as exc:
        main(["circle", "bogus"])
    assert exc.value.code == 2


def test_config_file(capsys, tmp_path):
    cfg = tmp_path / "rc.conf"
    cfg.write_text("# comment\nclique_cap = 16\nfactor_bound=1000000\nq_prefix=8\n")
    code, out, _ = run_cli(capsys, "circle", "cliques", "--config", str(cfg),
                           "--field", "Fp:7", "--center", "0,0", "--radius", "1",
                           "--seed-point", "0,1")
    assert code == 0
    assert json.loads(out)["sets"][0]["size"] == 4
    # cap from the config is honored: an 8-point circle under a cap of 4 errors
    cfg.write_text("clique_cap=4\n")
    code, _, err = run_cli(capsys, "circle", "cliques", "--config", str(cfg),
                           "--field", "Fp:7", "--center", "0,0", "--radius", "1",
                           "--seed-point", "0,1")
    assert code == 2 and "CircleTooLarge" in err


def test_pretty_mode(capsys):
    code, out, _ = run_cli(capsys, "perfect", "--field", "Fp:7", "--radius", "1", "--pretty")
    assert code == 0
    assert out.startswith("{\n")
    assert json.loads(out)["perfect"] == ["2", "4"]
    doc = json.loads(out)
    assert all("witness_triangle" in d for d in doc["details"])
    # --json names the default compact mode and is accepted anywhere
    code, out, _ = run_cli(capsys, "perfect", "--field", "Fp:7", "--radius", "1", "--json")
    assert code == 0 and out.count("\n") == 1


def test_keyex_demo_over_q(capsys):
    code, out, _ = run_cli(capsys, "keyex", "demo", "--field", "Q", "--radius", "2",
                           "--point", "8/5,6/5", "--seed-a", "3", "--seed-b", "4",
                           "--exp-cap", "32")
    assert code == 0
    assert json.loads(out)["equal"] is True
