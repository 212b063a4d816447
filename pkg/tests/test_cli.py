"""The command-line surface: outputs, exit codes, determinism."""

import json

import pytest

from jacobiforms.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_cohen(capsys):
    code, out, _ = run(capsys, "cohen", "--r", "3", "--N", "3")
    assert code == 0 and out.strip() == "-2/9"
    code, out, _ = run(capsys, "cohen", "--r", "3", "--N", "9/4")
    assert code == 0 and out.strip() == "0"


def test_cohen_precondition(capsys):
    code, _, err = run(capsys, "cohen", "--r", "3", "--N", "-2")
    assert code == 3 and "N >= 0" in err


def test_tau(capsys):
    code, out, _ = run(capsys, "tau", "--n", "1")
    assert code == 0 and out.strip() == "1"
    code, out, _ = run(capsys, "tau", "--n", "2", "--route", "direct")
    assert code == 0 and out.strip() == "-24"
    code, out, _ = run(capsys, "tau", "--n", "3", "--json")
    payload = json.loads(out)
    assert payload["value"] == "252"
    assert payload["routes"]["via_h3_closed"] == "252"
    assert set(payload["query"]) == {"n"}


def test_tau_side_condition_exit(capsys):
    code, _, err = run(capsys, "tau", "--n", "4", "--route", "via_h3_closed")
    assert code == 3 and "odd" in err


def test_expand_human_and_json(capsys):
    code, out, _ = run(capsys, "expand", "--form", "jacobi_eis:4,1", "--prec", "2")
    assert code == 0
    assert "zeta^(+-2) + 56*zeta^(+-1) + 126" in out
    code, out, _ = run(capsys, "expand", "--form", "eta", "--prec", "2", "--json")
    payload = json.loads(out)
    assert payload["qscale"] == 24 and payload["terms"][0] == [1, "1"]


def test_expand_unknown_form(capsys):
    code, _, err = run(capsys, "expand", "--form", "zeta_function", "--prec", "3")
    assert code == 2 and "unknown" in err


def test_verify_pass_and_fail_codes(capsys):
    code, out, _ = run(capsys, "verify", "--id", "T31-theta8", "--prec", "6")
    assert code == 0 and "pass" in out
    code, out, _ = run(capsys, "verify", "--id", "INTRO-*", "--prec", "4", "--json")
    assert code == 0
    payload = json.loads(out)
    assert {p["id"] for p in payload} == {"INTRO-r8", "INTRO-delta8"}
    assert all(p["status"] == "pass" for p in payload)
    code, _, err = run(capsys, "verify", "--id", "NOPE", "--prec", "4")
    assert code == 2
    code, _, err = run(capsys, "verify", "--id", "T31-theta8", "--prec", "0")
    assert code == 3


def test_count(capsys):
    code, out, _ = run(capsys, "count", "r8", "--n", "5", "--oracle")
    lines = out.splitlines()
    assert code == 0 and lines[0] == "2016" and "agrees" in lines[1]
    code, out, _ = run(capsys, "count", "delta8", "--n", "3")
    assert code == 0 and out.strip() == "64"
    # f_1(1) = 0, so odd-argument tuples can pad with zeros: the count is 126
    code, out, _ = run(capsys, "count", "figurate", "--a", "1", "--n", "4", "--odd", "--json")
    payload = json.loads(out)
    assert payload["query"]["odd"] is True and payload["value"] == "126"
    code, _, err = run(capsys, "count", "figurate", "--n", "4")
    assert code == 3 and "--a" in err


def test_lattice_json(capsys):
    code, out, _ = run(capsys, "lattice", "E7", "--max-norm", "4")
    assert code == 0
    payload = json.loads(out)
    assert payload == {"0": "1", "2": "126", "4": "756"}


def test_env_default_prec(capsys, monkeypatch):
    monkeypatch.setenv("JF_DEFAULT_PREC", "3")
    code, out, _ = run(capsys, "expand", "--form", "ek:4", "--json")
    payload = json.loads(out)
    assert payload["prec"] == 3


def test_output_is_byte_stable(capsys):
    outputs = set()
    for _ in range(2):
        _, out, _ = run(capsys, "expand", "--form", "jacobi_eis:4,4", "--prec", "4", "--json")
        outputs.add(out)
    assert len(outputs) == 1
    for _ in range(2):
        _, out, _ = run(capsys, "lattice", "A7", "--max-norm", "6")
        outputs.add(out)
    assert len(outputs) == 2


def test_selftest_check_groups():
    from jacobiforms.cli import _selftest_checks
    names = [name for name, _ in _selftest_checks()]
    # superset of the acceptance suite: registry, fixtures, counting, tau,
    # lattice, plus the cohen/catalog/series property groups
    assert names == ["identity registry", "printed fixtures", "cohen dual definition",
                     "counting oracles", "tau routes", "lattice fixtures",
                     "catalog invariants", "series properties"]


def test_expand_json_round_trips(capsys):
    from jacobiforms.series import FJExp, QSeries
    from jacobiforms import catalog
    _, out, _ = run(capsys, "expand", "--form", "theta", "--prec", "3", "--json")
    parsed = FJExp.from_json_dict(json.loads(out))
    assert parsed.terms == catalog.theta(3).terms
    _, out, _ = run(capsys, "expand", "--form", "delta", "--prec", "5", "--json")
    assert QSeries.from_json_dict(json.loads(out)) == catalog.delta(5)
