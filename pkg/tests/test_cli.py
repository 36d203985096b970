import csv
import io
import json

import pytest

from superjack import __version__
from superjack.cli import REGISTRY, main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_jack_evaluation(capsys):
    assert run(capsys, "jack", "--kappa", "2,1", "--alpha", "1", "--eval", "1,1,1")[:2] == (0, "8\n")


def test_jack_expansion_formats(capsys):
    code, out, _ = run(capsys, "jack", "--kappa", "2", "--alpha", "1/2")
    assert code == 0 and out.strip() == "m[2] + 4/3·m[1,1]"
    code, out, _ = run(capsys, "jack", "--kappa", "2", "--alpha", "1", "--basis", "powersum", "--format", "json")
    doc = json.loads(out)
    assert doc["schema"] == 1 and doc["version"] == __version__
    assert doc["terms"] == {"2": "1/2", "1,1": "1/2"}
    assert doc["config"]["alpha"] == "1" and doc["config"]["command"] == "jack"


def test_decimals_need_float_flag(capsys):
    code, _, err = run(capsys, "jack", "--kappa", "2", "--alpha", "0.5")
    assert code == 1 and "--float" in err
    code, out, _ = run(capsys, "jack", "--kappa", "2", "--alpha", "0.5", "--float")
    assert code == 0 and "4/3" in out


def test_usage_errors_exit_one(capsys):
    assert run(capsys, "nonsense")[0] == 1
    assert run(capsys, "series", "--type", "2SF1", "--a", "1/3", "--alpha", "2")[0] == 1
    assert run(capsys, "series", "--type", "xyz", "--alpha", "2")[0] == 1


def test_superjack_routes_agree(capsys):
    common = ("superjack", "--kappa", "2,1", "--alpha", "1/2", "--t", "1/3,1/5", "--s", "1/7")
    _, branching, _ = run(capsys, *common)
    _, powersum, _ = run(capsys, *common, "--method", "powersum")
    assert branching == powersum == "13/735\n"


@pytest.mark.parametrize("check", ["duality", "pfaff1", "pfaff2", "pfaff3"])
def test_series_checks(capsys, check):
    code, out, _ = run(capsys, "series", "--type", "2SF1", "--a", "1/3", "--b=-2/7", "--c", "17/11", "--alpha", "2",
                       "--t", "1/50", "--s", "1/100", "--check", check)
    assert code == 0 and "[PASS]" in out


def test_series_closed_form_and_kummer(capsys):
    code, out, _ = run(capsys, "series", "--type", "1SF0", "--a", "1/2", "--alpha", "2", "--t", "1/50",
                       "--s", "1/100", "--check", "closed-form")
    assert code == 0 and "[PASS]" in out
    code, out, _ = run(capsys, "series", "--type", "1SF1", "--a", "1/3", "--c", "17/11", "--alpha", "2",
                       "--t", "1/50", "--s", "1/100", "--check", "kummer")
    assert code == 0 and "[PASS]" in out


def test_series_outside_radius_is_a_usage_error(capsys):
    code, _, err = run(capsys, "series", "--type", "1SF0", "--a", "1/2", "--alpha", "2", "--t", "1/5", "--s", "1/10")
    assert code == 1 and "radius" in err


@pytest.mark.parametrize("identity", sorted(REGISTRY))
def test_verify_passes_and_fudge_fails(capsys, identity):
    code, out, _ = run(capsys, "verify", identity)
    assert code == 0, out
    code, out, _ = run(capsys, "verify", identity, "--fudge", "1.001")
    assert code == 2 and "[FAIL]" in out


def test_verify_csv_columns(capsys):
    code, out, _ = run(capsys, "verify", "pfaff-euler", "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert code == 0 and rows[0] == ["id", "lhs", "rhs", "abs_err", "tol", "pass"]
    assert len(rows) == 4 and all(r[5] == "True" for r in rows[1:])


def test_sampling_is_deterministic(capsys, tmp_path):
    args = ("sample", "--family", "laguerre", "--N", "3", "--beta", "1", "--lam1", "1/2", "--seed", "5",
            "--count", "4", "--format", "json")
    run(capsys, *args, "--output", str(tmp_path / "a.json"))
    run(capsys, *args, "--output", str(tmp_path / "b.json"))
    a, b = (tmp_path / "a.json").read_bytes(), (tmp_path / "b.json").read_bytes()
    assert a == b
    assert len(json.loads(a)["samples"]) == 4


def test_expect_compares_with_series(capsys):
    code, out, _ = run(capsys, "expect", "--family", "jacobi", "--N", "2", "--lam1", "1/2", "--lam2", "1/2",
                       "--t", "1/5", "--s=-1/10", "--samples", "40000", "--seed", "3", "--compare")
    assert code == 0 and "[PASS] ensemble-jacobi" in out


def test_acceptance_filter_and_json(capsys, tmp_path):
    path = tmp_path / "report.json"
    code, out, _ = run(capsys, "acceptance", "fast", "--filter", "selberg-constant", "--json", str(path))
    assert code == 0 and "[PASS] criterion  1" in out
    doc = json.loads(path.read_text())
    assert doc["schema"] == 1 and doc["pass"] and [c["criterion"] for c in doc["criteria"]] == [1]
    again = tmp_path / "again.json"
    run(capsys, "acceptance", "fast", "--filter", "selberg-constant", "--json", str(again))
    assert path.read_bytes() == again.read_bytes()
    assert run(capsys, "acceptance", "fast", "--filter", "no-such-criterion")[0] == 1
