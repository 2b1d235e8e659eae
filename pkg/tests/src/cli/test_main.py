import json

import numpy as np
import pytest

from src.cli.main import build_config, main, parse_arguments
from src.constants import OutputFormat
from src.exceptions import UsageError


def _run(capsys, argv):
    code = main(argv)
    return code, capsys.readouterr().out


def _json(capsys, argv):
    code, out = _run(capsys, argv)
    return code, json.loads(out)


def _flat(rows):
    return [v for row in rows for v in row]


def test_spectrum_headline(capsys):
    code, payload = _json(capsys, ["spectrum"])
    assert code == 0
    assert payload["agree"]
    assert [row["energy"] for row in payload["levels"]] == pytest.approx([-6.0, -4.0, 0.0, 2.0, 12.0], abs=1e-9)
    assert [row["multiplicity"] for row in payload["levels"]] == [4, 2, 4, 4, 2]


def test_spectrum_zero_couplings(capsys):
    code, payload = _json(capsys, ["spectrum", "--jx", "0", "--jy", "0", "--jz", "0", "--jp", "0"])
    assert code == 0
    assert [row["multiplicity"] for row in payload["levels"]] == [16]
    assert payload["levels"][0]["energy"] == pytest.approx(0.0, abs=1e-12)


def test_spectrum_csv(capsys):
    code, out = _run(capsys, ["spectrum", "--format", "csv"])
    lines = out.strip().splitlines()
    assert code == 0
    assert lines[0] == "energy,multiplicity,label"
    assert len(lines) == 6


def test_spectrum_csv_in_jx_units(capsys):
    code, out = _run(capsys, ["spectrum", "--jx", "2", "--jy", "4", "--jz", "4", "--jp", "4", "--format", "csv"])
    rows = [line.split(",") for line in out.strip().splitlines()[1:]]
    assert code == 0
    assert [float(r[0]) for r in rows] == pytest.approx([-6.0, -4.0, 0.0, 2.0, 12.0], abs=1e-9)
    assert [int(r[1]) for r in rows] == [4, 2, 4, 4, 2]


def test_spectrum_json_in_jx_units(capsys):
    code, payload = _json(capsys, ["spectrum", "--jx", "2", "--jy", "4", "--jz", "4", "--jp", "4"])
    assert code == 0
    assert payload["agree"]
    assert [row["energy"] for row in payload["levels"]] == pytest.approx([-6.0, -4.0, 0.0, 2.0, 12.0], abs=1e-9)
    assert "E_y^-" in payload["levels"][0]["label"]


def test_output_is_deterministic(capsys):
    _, first = _run(capsys, ["jw"])
    _, second = _run(capsys, ["jw"])
    assert first == second


def test_verify_passes(capsys):
    code, payload = _json(capsys, ["verify"])
    assert code == 0
    assert payload["passed"]
    assert payload["failing"] == []


def test_verify_tiny_tolerance(capsys):
    code, payload = _json(capsys, ["verify", "--tol", "1e-30"])
    assert code == 2
    assert not payload["passed"]


def test_verify_corrupted_catalog(capsys, corrupted_catalog_file):
    code, payload = _json(capsys, ["verify", "--catalog", corrupted_catalog_file])
    assert code == 2
    assert "catalog" in payload["failing"]
    assert "g1" in payload["checks"]["catalog"]["failing"]


@pytest.mark.parametrize("body", ["g1: [1, 2]\n", "g1:\n  energy: -6\n  terms: 5\n"])
def test_verify_malformed_catalog(tmp_path, capsys, body):
    path = tmp_path / "malformed.yaml"
    path.write_text(body, encoding="utf-8")
    code, payload = _json(capsys, ["verify", "--catalog", str(path)])
    assert code == 2
    assert payload["error"] == "CatalogError"
    assert payload["state"] == "g1"


def test_stats_g2_g4(capsys):
    code, payload = _json(capsys, ["stats", "--basis", "g2,g4", "--perm", "pair"])
    assert code == 0
    assert payload["closed"] is True
    assert payload["eta"]["rows"] == payload["eta"]["cols"] == 2
    assert _flat(payload["eta"]["re"]) == pytest.approx([-1.0, 0.0, 0.0, 1.0], abs=1e-12)
    assert _flat(payload["eta"]["im"]) == pytest.approx([0.0, 0.0, 0.0, 0.0], abs=1e-12)
    assert payload["class"] == "exotic"
    assert payload["mapping"] == [3, 4, 1, 2]


def test_stats_strict_oblique_basis(capsys):
    code, payload = _json(capsys, ["stats", "--basis", "o1,o2,o3,o4", "--perm", "pair", "--strict"])
    assert code == 2
    assert payload["error"] == "NotOrthonormal"


def test_stats_open_span(capsys):
    code, payload = _json(capsys, ["stats", "--basis", "g1,g2", "--perm", "pair"])
    assert code == 0
    assert payload["closed"] is False
    assert payload["eta"] is None
    assert payload["class"] is None
    assert payload["residual"] > 0.5


def test_stats_oblique_basis_reports_metric_eta(capsys):
    code, payload = _json(capsys, ["stats", "--basis", "o1,o2,o3,o4", "--perm", "pair"])
    assert code == 0
    assert payload["closed"] and payload["oblique"]
    assert _flat(payload["eta"]["re"]) == pytest.approx(list(np.eye(4).ravel()), abs=1e-10)
    assert payload["class"] == "boson"


def test_phase_map(capsys):
    code, payload = _json(capsys, ["phase", "--state", "S+B", "--perm", "s1s2"])
    assert code == 0
    assert not payload["constant"]
    configurations = {row["configuration"]: row["ratio"] for row in payload["ratios"]}
    assert configurations["⇑⇓"] == {"re": 0.0, "im": 1.0}
    assert configurations["●●"] == {"re": 0.0, "im": -1.0}


def test_jw_report(capsys):
    code, payload = _json(capsys, ["jw"])
    assert code == 0
    assert payload["clifford_ok"] and payload["bond_ok"]
    assert payload["plaquette_scalars"] == [-1.0, 1.0, 1.0, 1.0]
    assert payload["term_scalars"]["i Jx [S1S2] b1 b3"] == -1.0
    assert sorted(payload["bond_printed_failures"]) == payload["bond_printed_failures"]
    assert len(payload["sector_table"]) == 8


def test_entropy_printed_marginal(capsys):
    code, payload = _json(capsys, ["entropy", "--state", "S+B", "--keep", "2,3,4"])
    assert code == 0
    assert payload["entropy_nats"] == pytest.approx(0.693147180559945)
    assert payload["entropy_bits"] == pytest.approx(1.0)
    assert payload["paper_convention_magnitude"] == pytest.approx(0.980258, abs=1e-6)


def test_entropy_other_marginal(capsys):
    code, payload = _json(capsys, ["entropy", "--state", "GHZ", "--keep", "1"])
    assert code == 0
    assert payload["paper_convention_magnitude"] is None
    assert payload["eigenvalues"] == pytest.approx([0.5, 0.5])


def test_sweep_csv(capsys):
    code, out = _run(capsys, ["sweep", "--param", "jp", "--from", "0", "--to", "2", "--steps", "3"])
    lines = out.strip().splitlines()
    assert code == 0
    assert lines[0] == ",".join(["param"] + [f"e{k}" for k in range(1, 17)])
    assert len(lines) == 4


def test_sweep_json(capsys):
    code, payload = _json(
        capsys, ["sweep", "--param", "jx", "--from", "1", "--to", "1", "--steps", "1", "--format", "json"]
    )
    assert code == 0
    assert payload["param"] == "jx"
    assert payload["rows"][0]["e1"] == pytest.approx(-6.0)


@pytest.mark.parametrize(
    "argv, error",
    [
        (["entropy", "--state", "nope", "--keep", "1"], "UnknownName"),
        (["entropy", "--state", "GHZ", "--keep", "1,2,3,4"], "BadSubsystem"),
        (["spectrum", "--bogus"], "UsageError"),
        (["jw", "--format", "csv"], "UsageError"),
        (["stats", "--basis", "g1,g3", "--perm", "t11"], "UsageError"),
        (["sweep", "--param", "jx", "--from", "0", "--to", "1", "--steps", "0"], "UsageError"),
        (["verify", "--tol", "-1"], "UsageError"),
        (["verify", "--tol", "0"], "UsageError"),
        (["verify", "--tol", "nan"], "UsageError"),
    ],
)
def test_usage_errors(capsys, argv, error):
    code, payload = _json(capsys, argv)
    assert code == 1
    assert payload["error"] == error


def test_output_file(tmp_path, capsys):
    target = tmp_path / "out" / "spectrum.json"
    assert main(["spectrum", "--output", str(target)]) == 0
    assert capsys.readouterr().out == ""
    assert json.loads(target.read_text(encoding="utf-8"))["agree"]


def test_config_file_then_flags(tmp_path):
    config_file = tmp_path / "run.json"
    config_file.write_text(json.dumps({"couplings": {"jx": 1, "jy": 1, "jz": 1, "jp": 0}, "output_format": "csv"}))
    args = parse_arguments(["spectrum", "--config", str(config_file), "--jp", "0.5"])
    config = build_config(args)
    assert config.couplings.jy == 1.0
    assert config.couplings.jp == 0.5
    assert config.output_format is OutputFormat.CSV


def test_invalid_config_file(tmp_path, capsys):
    config_file = tmp_path / "run.json"
    config_file.write_text(json.dumps({"tolerances": {"identity": -1}}))
    code, payload = _json(capsys, ["spectrum", "--config", str(config_file)])
    assert code == 1
    assert payload["error"] == "UsageError"


def test_missing_subcommand():
    with pytest.raises(UsageError):
        parse_arguments([])
