import json

import pytest

from revcond.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_structures_listing(capsys):
    code, out, _ = run(capsys, "structures")
    assert code == 0
    lines = out.splitlines()
    assert any(l.startswith("divisibility -> well-founded") for l in lines)
    assert "zxz -> convex, product-lift" in lines
    assert any(l.startswith("random-poset -> universal") for l in lines)


def test_structures_json(capsys):
    code, out, _ = run(capsys, "structures", "--json")
    rows = [json.loads(l) for l in out.splitlines()]
    assert code == 0 and {r["id"] for r in rows} >= {"divisibility", "qxq", "random-poset"}


def test_run_and_verify(capsys, tmp_path):
    path = tmp_path / "div.json"
    code, out, _ = run(capsys, "run", "--structure", "divisibility", "--strategy", "well-founded",
                       "--steps", "40", "--out", str(path), "--verify")
    assert code == 0 and path.exists() and "certificate OK" in out
    code, out, _ = run(capsys, "verify", str(path))
    assert code == 0


def test_run_incompatible_is_usage_error(capsys):
    code, _, err = run(capsys, "run", "--structure", "divisibility", "--strategy", "convex",
                       "--steps", "3")
    assert code == 2 and "usage error" in err


def test_run_unknown_structure_is_usage_error(capsys):
    code, _, _ = run(capsys, "run", "--structure", "nope", "--strategy", "convex", "--steps", "3")
    assert code == 2


def test_short_flags_rejected(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["run", "--struct", "divisibility", "--strategy", "well-founded", "--steps", "1"])
    assert exc.value.code == 2


def test_seed_only_run(capsys):
    code, out, _ = run(capsys, "run", "--structure", "divisibility", "--strategy", "well-founded",
                       "--steps", "0")
    data = json.loads(out)
    assert code == 0 and data["steps"] == [] and data["final"] == data["seed"]


def test_seed_spec(capsys):
    code, out, _ = run(capsys, "run", "--structure", "divisibility", "--strategy", "well-founded",
                       "--steps", "0", "--seed-spec", '{"a0": "5", "a1": "7", "b0": "10"}')
    assert code == 0 and ["5", "10"] in json.loads(out)["seed"]
    code, _, _ = run(capsys, "run", "--structure", "divisibility", "--strategy", "well-founded",
                     "--steps", "0", "--seed-spec", '{"a0": "2", "a1": "3", "b0": "2"}')
    assert code == 2


def test_verify_tampered_and_malformed(capsys, tmp_path):
    path = tmp_path / "c.json"
    run(capsys, "run", "--structure", "divisibility", "--strategy", "well-founded",
        "--steps", "20", "--out", str(path))
    data = json.loads(path.read_text())
    data["steps"][2]["added"][0][1] = "7"
    bad = tmp_path / "t.json"
    bad.write_text(json.dumps(data))
    code, out, _ = run(capsys, "verify", str(bad))
    assert code == 1 and "FAIL condensation" in out
    junk = tmp_path / "j.json"
    junk.write_text('{"structure": 3}')
    code, _, err = run(capsys, "verify", str(junk))
    assert code == 4 and "malformed" in err
    code, _, _ = run(capsys, "verify", str(tmp_path / "missing.json"))
    assert code == 2


def test_oracle_finite(capsys):
    code, out, _ = run(capsys, "oracle", "finite", "--max-size", "4")
    assert code == 0 and json.loads(out)["bad"] == 0
    code, _, err = run(capsys, "oracle", "finite", "--max-size", "9")
    assert code == 2 and "limited" in err


def test_oracle_witnesses_reproducible(capsys):
    argv = ("oracle", "witnesses", "--structure", "random-poset", "--trials", "100", "--seed", "7")
    code, first, err = run(capsys, *argv)
    assert code == 0 and "seed 7" in err
    _, second, _ = run(capsys, *argv)
    assert first == second and json.loads(first)["ok"]


def test_oracle_witnesses_fault(capsys):
    code, _, _ = run(capsys, "oracle", "witnesses", "--structure", "zxz", "--trials", "50",
                     "--fault", "corrupt-leq")
    assert code == 1


def test_lift_commands(capsys, tmp_path):
    src = tmp_path / "fs.json"
    run(capsys, "run", "--structure", "finite-sets", "--strategy", "well-founded",
        "--steps", "60", "--out", str(src))
    code, out, _ = run(capsys, "lift", "subset", "--from", str(src), "--prefix", "32", "--verify")
    assert code == 0 and "certificate OK" in out
    out_path = tmp_path / "p.json"
    code, _, _ = run(capsys, "lift", "product", "--from", str(src), "--factor", "z",
                     "--prefix", "50", "--out", str(out_path))
    assert code == 0 and out_path.exists()


def test_grow_random(capsys):
    code, out, _ = run(capsys, "grow-random", "--steps", "10", "--seed", "3")
    assert code == 0 and len(json.loads(out)["vertices"]) == 10
