"""Command-line interface, configuration validation and the check registry."""

import json

import pytest

from carlitzrep.checks import ANCHORS, CHECKS, CheckReport, RunConfig, parse_rep, run_single
from carlitzrep.cli import main
from carlitzrep.errors import ConfigError, UnknownCheck
from carlitzrep.fields import get_field


def _json_out(capsys):
    return json.loads(capsys.readouterr().out)


def test_every_check_has_an_anchor():
    assert set(CHECKS) == set(ANCHORS)


def test_unknown_check():
    with pytest.raises(UnknownCheck):
        run_single("nope")
    assert main(["run", "nope"]) == 2


def test_report_status_validated():
    with pytest.raises(ValueError):
        CheckReport("x", "a", {}, 0, 0, "maybe")


def test_run_config_validation():
    with pytest.raises(ConfigError):
        RunConfig(s=0).validate()
    with pytest.raises(ConfigError):
        RunConfig(format="xml").validate()


@pytest.mark.parametrize("argv", [
    ["--q", "6", "verify"],
    ["--p", "2", "--e", "2", "--modulus", "1,0,1", "verify"],  # x^2 + 1 = (x + 1)^2 over F_2
    ["--p", "3", "--e", "2", "--modulus", "x^2 + 1 +", "verify"],
    ["--q", "4", "--p", "3", "verify"],
])
def test_bad_configuration_exits_2(argv, capsys):
    assert main(argv) == 2
    assert "error" in capsys.readouterr().err


def test_config_file(tmp_path, capsys):
    cfg = tmp_path / "c.json"
    cfg.write_text(json.dumps({"q": 2, "seed": 3}))
    assert main(["--config", str(cfg), "run", "digits", "--param", "p=2"]) == 0
    doc = _json_out(capsys)
    assert doc["config"]["q"] == 2 and doc["config"]["seed"] == 3
    cfg.write_text(json.dumps({"bogus": 1}))
    assert main(["--config", str(cfg), "verify"]) == 2


def test_run_check_json(capsys):
    assert main(["run", "taelman", "--q", "3", "--s", "3"]) == 0
    doc = _json_out(capsys)
    assert doc["schema"] == "carlitzrep.report/1"
    (r,) = doc["reports"]
    assert r["id"] == "taelman" and r["status"] == "pass" and "runtime" not in r


def test_flags_after_subcommand_and_text_format(capsys):
    assert main(["run", "essdim", "--rep", "tautological", "--format", "text"]) == 0
    assert capsys.readouterr().out.startswith("PASS")


def test_output_file(tmp_path):
    out = tmp_path / "r.json"
    assert main(["run", "carry_free", "--q", "2", "--out", str(out)]) == 0
    assert json.loads(out.read_text())["reports"][0]["status"] == "pass"


def test_amalgam_subcommands(capsys):
    assert main(["amalgam", "decompose", "--q", "3", "--matrix", "1;0;t;1"]) == 0
    assert len(_json_out(capsys)["factors"]) == 3
    assert main(["amalgam", "phi", "--q", "3", "--matrix", "1;t^2;0;1", "--format", "text"]) == 0
    assert "x" in capsys.readouterr().out
    assert main(["amalgam", "phi", "--q", "3", "--matrix", "1;t"]) == 2


def test_parse_rep_variants():
    F = get_field(3)
    assert parse_rep(F, "tautological").dim == 2
    assert parse_rep(F, "sym:3").dim == 4
    assert parse_rep(F, "digits:4").dim == 4
    assert parse_rep(F, "rho_II:1,2").dim == 6
    assert parse_rep(F, "rho_sigma:x^2-t").dim == 4
    assert parse_rep(F, "twist:1:tautological").dim == 2
    with pytest.raises(ConfigError):
        parse_rep(F, "bogus")
