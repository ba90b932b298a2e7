import io
import json

import pytest

from sl2lift.cli import EXIT_BAD_PRIME, EXIT_FAIL, EXIT_OK, EXIT_USAGE, main


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_orbits_a3(capsys):
    code, out, _ = run(["orbits", "--type", "A3"], capsys)
    assert code == EXIT_OK
    assert len(json.loads(out)) == 5


def test_triple_g2(capsys):
    code, out, _ = run(["triple", "--type", "G2", "--levi", "all", "--parabolic", "empty",
                        "--prime", "7"], capsys)
    data = json.loads(out)
    assert code == EXIT_OK
    assert data["reductions"][0]["pass"] and data["rational_check"]


def test_bad_prime(capsys):
    code, out, err = run(["orbits", "--type", "G2", "--prime", "2"], capsys)
    assert code == EXIT_BAD_PRIME and "2 is bad" in err and out == ""


def test_usage_errors(capsys):
    assert run(["orbits", "--type", "Q7"], capsys)[0] == EXIT_USAGE
    assert run(["triple", "--type", "A2", "--parabolic", "1"], capsys)[0] == EXIT_USAGE
    assert run(["verify", "--type", "A2"], capsys)[0] == EXIT_USAGE
    assert run(["springer-check", "--family", "SL", "--n", "3", "--prime", "3"], capsys)[0] == EXIT_USAGE
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_verify_reports(capsys):
    code, out, _ = run(["verify", "--type", "B2", "--prime", "5", "--prime", "7"], capsys)
    data = json.loads(out)
    assert code == EXIT_OK
    assert [r["p"] for r in data["reports"]] == [5, 7]
    assert all(r["sign"] == -1 and "seconds" in r for r in data["reports"])


def test_verify_gate_failure(capsys):
    code, out, _ = run(["verify", "--type", "G2", "--prime", "5"], capsys)
    assert code == EXIT_FAIL
    assert json.loads(out)["reports"][0]["gate"] == "order_p"


def test_springer_check(capsys, tmp_path):
    target = tmp_path / "s.json"
    code, out, _ = run(["springer-check", "--family", "SO", "--n", "5", "--prime", "7",
                        "--samples", "10", "--out", str(target)], capsys)
    assert code == EXIT_OK and out == ""
    assert json.loads(target.read_text())["all_pass"]


def test_output_byte_stable(capsys):
    a = run(["orbits", "--type", "F4", "--prime", "5", "--prime", "7"], capsys)[1]
    b = run(["orbits", "--type", "F4", "--prime", "5", "--prime", "7"], capsys)[1]
    assert a == b
