"""Command-line interface: schema, determinism, exit codes."""

import json

import pytest

from qkirby import cli, corpus
from qkirby import diagrams as dg

SCHEMA_KEYS = {"p", "variant", "mode", "omega", "value_exact",
               "value_approx", "sigma", "chi", "diagnostics"}


@pytest.fixture
def hopf_file(tmp_path):
    path = tmp_path / "hopf00.dg"
    path.write_text(dg.render(corpus.diagram("hopf00")))
    return str(path)


@pytest.fixture
def dotted_file(tmp_path):
    path = tmp_path / "dot_cancel.dg"
    path.write_text(dg.render(corpus.diagram("dot_cancel")))
    return str(path)


def run(capsys, argv):
    code = cli.main(argv)
    out = capsys.readouterr().out
    return code, out


def test_invariant_json_schema_and_determinism(capsys, hopf_file):
    argv = ["invariant", hopf_file, "--p", "2", "--format", "json"]
    code1, out1 = run(capsys, argv)
    code2, out2 = run(capsys, argv)
    assert code1 == code2 == 0
    assert out1 == out2
    payload = json.loads(out1)
    assert set(payload) == SCHEMA_KEYS
    assert payload["p"] == 2
    assert payload["value_exact"] == "1 [N=16]"
    assert payload["value_approx"] == [1.0, 0.0]
    assert payload["sigma"] == 0
    assert payload["chi"] == 3


def test_invariant_text_output(capsys, hopf_file):
    code, out = run(capsys, ["invariant", hopf_file, "--p", "2"])
    assert code == 0
    assert "J = 1 [N=16]" in out


def test_invariant_omega_override(capsys, hopf_file):
    code, out = run(capsys, ["invariant", hopf_file, "--p", "2",
                             "--omega", "1,1", "--format", "json"])
    assert code == 0
    assert json.loads(out)["omega"] == [[1], [1]]


def test_invariant_small_variant(capsys, hopf_file):
    code, out = run(capsys, ["invariant", hopf_file, "--p", "2",
                             "--variant", "small", "--mode", "unrefined",
                             "--format", "json"])
    assert code == 0
    assert json.loads(out)["value_exact"] == "1 [N=16]"


def test_refined_rejected_at_odd_p(capsys, hopf_file):
    code, _ = run(capsys, ["invariant", hopf_file, "--p", "3"])
    assert code == 2
    code, out = run(capsys, ["invariant", hopf_file, "--p", "3",
                             "--mode", "unrefined", "--format", "json"])
    assert code == 0
    assert json.loads(out)["value_exact"] == "1 [N=24]"


def test_boundary_subcommand(capsys, hopf_file):
    code, out = run(capsys, ["boundary", hopf_file, "--p", "2",
                             "--mode", "boundary-coh", "--omega", "0,0",
                             "--format", "json"])
    assert code == 0
    assert json.loads(out)["mode"] == "boundary-coh"
    # spin structures do not exist at p = 2 mod 4
    code, _ = run(capsys, ["boundary", hopf_file, "--p", "2",
                           "--mode", "boundary-spin", "--omega", "0,0"])
    assert code == 2


def test_decompose_subcommand(capsys, dotted_file):
    code, out = run(capsys, ["decompose", dotted_file, "--p", "2",
                             "--format", "json"])
    assert code == 0
    checks = json.loads(out)["diagnostics"]["checks"]
    assert checks and all(c["ok"] for c in checks)


def test_rescale_subcommand_and_zero_xi(capsys, dotted_file):
    code, _ = run(capsys, ["rescale-check", dotted_file, "--p", "2",
                           "--xi", "i"])
    assert code == 0
    code, _ = run(capsys, ["rescale-check", dotted_file, "--p", "2",
                           "--xi", "0"])
    assert code == 2


def test_trade_round_trips(capsys, dotted_file):
    code, out = run(capsys, ["trade", dotted_file, "--format", "json"])
    assert code == 0
    traded = dg.parse(json.loads(out)["diagnostics"]["diagram"])
    assert traded.n_dots == 0
    assert traded.n_components == 2


def test_verify_quick(capsys):
    code, out = run(capsys, ["verify", "--p", "3", "--quick",
                             "--format", "json"])
    assert code == 0
    checks = json.loads(out)["diagnostics"]["checks"]
    assert checks and all(c["ok"] for c in checks)


def test_bad_inputs_exit_2(capsys, tmp_path, hopf_file):
    code, _ = run(capsys, ["invariant", str(tmp_path / "missing.dg"),
                           "--p", "2"])
    assert code == 2
    bad = tmp_path / "bad.dg"
    bad.write_text("cup> frob\n")
    code, _ = run(capsys, ["invariant", str(bad), "--p", "2"])
    assert code == 2
    code, _ = run(capsys, ["invariant", hopf_file, "--p", "2",
                           "--omega", "1"])
    assert code == 2
    code, _ = run(capsys, ["verify", "--p", "1"])
    assert code == 2
