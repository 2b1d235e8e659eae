import numpy as np
import pytest

from src.exceptions import UsageError
from src.pipeline.sweep.run import SpectrumSweep
from src.pipeline.utils import load_config, pipeline_logger


def test_sweep_rows_are_in_parameter_order():
    df = SpectrumSweep(run_id="test", max_workers=3).run("jp", 0.0, 2.0, 5)
    assert list(df.columns) == ["param"] + [f"e{k}" for k in range(1, 17)]
    assert df["param"].tolist() == pytest.approx([0.0, 0.5, 1.0, 1.5, 2.0])
    energies = df.drop(columns="param").to_numpy()
    assert np.all(np.diff(energies, axis=1) >= -1e-12)


def test_sweep_end_point_matches_headline():
    df = SpectrumSweep(run_id="test").run("jp", 2.0, 2.0, 1)
    assert df.iloc[0, 1] == pytest.approx(-6.0)
    assert df.iloc[0, -1] == pytest.approx(12.0)


@pytest.mark.parametrize(
    "args",
    [("jq", 0.0, 1.0, 3), ("jx", 0.0, 1.0, 0), ("jx", 0.0, float("inf"), 3)],
)
def test_sweep_usage_errors(args):
    with pytest.raises(UsageError):
        SpectrumSweep(run_id="test").run(*args)


def test_sweep_settings():
    assert SpectrumSweep(run_id="test").max_workers == 4


def test_load_config_missing_file_returns_empty():
    assert load_config("does/not/exist.yaml") == {}


def test_load_config_relative_to_pipeline_package():
    config = load_config("verification/settings.yaml")
    assert config["tolerances"]["eigen"] == 1e-9


def test_load_config_rejects_non_mappings(tmp_path):
    path = tmp_path / "list.yaml"
    path.write_text("- a\n- b\n", encoding="utf-8")
    assert load_config(str(path)) == {}


def test_pipeline_logger_uses_settings():
    logger = pipeline_logger({"run": {"logging": {"name": "sweep-test", "level": "DEBUG"}}}, "sweep")
    assert logger.name == "sweep-test"
    assert pipeline_logger({}, "fallback-test").name == "fallback-test"
