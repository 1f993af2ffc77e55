import json

import pytest

from hvkit.cli import main, run_config
from hvkit.errors import ConfigurationError
from hvkit.modules import module_from_descriptor

OMEGA = {"family": "omega", "lambda": "2", "alpha": "3", "mu": ["1"], "beta": "0"}
INTERMEDIATE = {"family": "intermediate", "alpha": "0", "beta": "0", "F": "0"}
VERMA = {
    "family": "verma",
    "quotients": [{"point": ["0"], "order": 2}],
    "max_level": 4,
    "phi": [
        {"gen": "d0", "point": 0, "exp": [0], "value": "1"},
        {"gen": "I0", "point": 0, "exp": [1], "value": "2"},
    ],
}
EVAL1 = {
    "family": "evaluation",
    "point": ["2"],
    "order": 1,
    "inner": {"family": "intermediate", "alpha": "1/2", "beta": "0", "F": "1"},
}


def test_check_axioms_passes():
    code, text = run_config(
        {"command": "check-axioms", "module": OMEGA, "bounds": {"index": 3, "monomial": 1, "window": 3}}
    )
    assert code == 0
    report = json.loads(text)
    assert report["violations"] == 0
    assert report["triples_checked"] > 0


def test_check_axioms_zero_lambda_rejected():
    bad = dict(OMEGA, **{"lambda": "0"})
    with pytest.raises(ConfigurationError, match="lambda must be nonzero"):
        run_config({"command": "check-axioms", "module": bad})


def test_probe_irreducible_reports_witness():
    code, text = run_config({"command": "probe-irreducible", "module": INTERMEDIATE})
    assert code == 0
    report = json.loads(text)
    assert report["verdict"] == "reducible-with-witness"
    assert report["witness"] == {"kind": "lines", "lines": [0]}


def test_weights_tsv():
    code, text = run_config(
        {"command": "weights", "module": EVAL1["inner"], "bounds": {"window": 2}},
        out_format="tsv",
    )
    assert code == 0
    lines = text.strip().split("\n")
    assert lines[0] == "d0\tI0\tC\tCI\tCD\tdimension"
    assert len(lines) == 6  # five weight lines in the window
    assert all(line.endswith("\t1") for line in lines[1:])


def test_singular_vectors_command():
    code, text = run_config(
        {"command": "singular-vectors", "module": VERMA, "bounds": {"level": 1}}
    )
    assert code == 0
    report = json.loads(text)
    assert report["level"] == 1
    assert report["dimension"] == len(report["vectors"])


def test_singular_vectors_requires_verma():
    with pytest.raises(ConfigurationError, match="module.family"):
        run_config({"command": "singular-vectors", "module": OMEGA})


def test_hc_suite_command():
    cfg = {
        "command": "hc-suite",
        "module": VERMA,
        "f": {"terms": [{"exp": [1], "coeff": "1"}]},
    }
    code, text = run_config(cfg)
    assert code == 0
    report = json.loads(text)
    assert report["passed"] is True
    assert set(report["identities"]) == {
        "d2.(d-2(x)f)",
        "d1.d1.(d-2(x)f)",
        "I2.(d-2(x)f)",
        "d2.(I-2(x)f)",
        "I2.(I-2(x)f)",
    }


def test_hc_suite_requires_f():
    with pytest.raises(ConfigurationError, match="f"):
        run_config({"command": "hc-suite", "module": VERMA})


def test_invariants_command():
    code, text = run_config({"command": "invariants", "module": OMEGA})
    assert code == 0
    report = json.loads(text)
    assert (report["lambda"], report["alpha"], report["mu"], report["beta"]) == (
        "2",
        "3",
        ["1"],
        "0",
    )


def test_annihilator_command():
    cfg = {
        "command": "annihilator",
        "module": EVAL1,
        "generators": [
            {"terms": [{"exp": [1], "coeff": "1"}, {"exp": [0], "coeff": "-2"}]},
            {"terms": [{"exp": [0], "coeff": "1"}]},
        ],
    }
    code, text = run_config(cfg)
    assert code == 0
    report = json.loads(text)
    flags = [g["annihilates"] for g in report["generators"]]
    assert flags == [True, False]


def test_jacobi_sweep_command():
    code, text = run_config({"command": "jacobi-sweep", "bounds": {"index": 2, "monomial": 1, "k": 1}})
    assert code == 0
    report = json.loads(text)
    assert report["jacobi_violations"] == 0
    assert report["antisymmetry_violations"] == 0


def test_unknown_top_level_field():
    with pytest.raises(ConfigurationError, match="bogus"):
        run_config({"command": "invariants", "module": OMEGA, "bogus": 1})


def test_unknown_bound_field():
    with pytest.raises(ConfigurationError, match="bounds.bad"):
        run_config({"command": "jacobi-sweep", "bounds": {"bad": 1}})


def test_unknown_command():
    with pytest.raises(ConfigurationError, match="command"):
        run_config({"command": "destroy"})


def test_missing_module():
    with pytest.raises(ConfigurationError, match="module"):
        run_config({"command": "weights"})


def test_byte_identical_reports_across_runs_and_seeds():
    cfg = {"command": "check-axioms", "module": OMEGA, "bounds": {"index": 2, "monomial": 1, "window": 2}}
    outputs = {run_config(cfg, seed=s)[1] for s in (None, 0, 1, 12345)}
    assert len(outputs) == 1


def test_descriptor_normalization_round_trip():
    # serialize(parse(config)) is a fixed point
    for desc in (OMEGA, INTERMEDIATE, VERMA, EVAL1):
        normalized = module_from_descriptor(desc).describe()
        again = module_from_descriptor(normalized).describe()
        assert normalized == again


def test_main_end_to_end(tmp_path, capsys):
    path = tmp_path / "cfg.json"
    path.write_text(json.dumps({"command": "invariants", "module": OMEGA}))
    assert main(["--config", str(path)]) == 0
    out = capsys.readouterr().out
    assert json.loads(out)["lambda"] == "2"

    assert main(["--config", str(path), "--out", "tsv"]) == 0
    out = capsys.readouterr().out
    assert "lambda\t2" in out


def test_main_bad_config_file(tmp_path, capsys):
    path = tmp_path / "cfg.json"
    path.write_text("{not json")
    assert main(["--config", str(path)]) == 2
    assert "config error" in capsys.readouterr().err

    missing = tmp_path / "nope.json"
    assert main(["--config", str(missing)]) == 2


def test_main_single_line_diagnostic(tmp_path, capsys):
    path = tmp_path / "cfg.json"
    path.write_text(
        json.dumps({"command": "check-axioms", "module": dict(OMEGA, **{"lambda": "0"})})
    )
    assert main(["--config", str(path)]) == 2
    err = capsys.readouterr().err
    assert err.strip() == "config error: lambda must be nonzero"
    assert err.count("\n") == 1
