# type: ignore
"""

    test_settings.py

    Tests for the configuration file reader

    Copyright (C) 2026 LevyFock developers.

    This software is licensed under the MIT License, see LICENSE.txt.

"""

import pytest

from levy_fock import ConfigError, Settings


def write_conf(tmp_path, text):
    path = tmp_path / "override.conf"
    path.write_text(text, encoding="utf-8")
    return str(path)


def test_packaged_defaults():
    assert Settings.loaded
    eff = Settings.effective()
    assert eff["quadrature.tolerance"] == 1e-10
    assert eff["tolerances.psd"] == 1e-8
    assert eff["sampler.block_size"] == 4096
    assert eff["fock.degree"] == 12


def test_override_and_restore(tmp_path):
    snap = Settings.snapshot()
    try:
        Settings.read_file(
            write_conf(
                tmp_path,
                "# Looser positivity\n[tolerances]\npsd = 1e-6  # comment\n\n[sampler]\ndelta = 0.05\n",
            )
        )
        assert Settings.PSD_TOL == 1e-6
        assert Settings.SAMPLER_DELTA == 0.05
        assert Settings.effective()["tolerances.psd"] == 1e-6
    finally:
        Settings.restore(snap)
    assert Settings.PSD_TOL == 1e-8
    assert Settings.SAMPLER_DELTA == 0.01


@pytest.mark.parametrize(
    "text, message",
    [
        ("[nonsense]\n", "Unknown section"),
        ("psd = 1e-6\n", "No handler"),
        ("[tolerances]\nepsilon = 1\n", "Unknown parameter"),
        ("[tolerances]\npsd = -1\n", "Invalid parameter value"),
        ("[quadrature]\norder = many\n", "Invalid parameter value"),
        ("[sampler]\ndelta = -0.5\n", "nonnegative"),
        ("[fock]\ndegree = -1\n", "nonnegative"),
        ("[tolerances]\npsd\n", "Expected 'name = value'"),
    ],
)
def test_config_errors(tmp_path, text, message):
    snap = Settings.snapshot()
    path = write_conf(tmp_path, text)
    try:
        with pytest.raises(ConfigError) as e:
            Settings.read_file(path)
    finally:
        Settings.restore(snap)
    assert message in e.value.description
    assert e.value.fname == path
    assert e.value.line >= 1


def test_missing_file(tmp_path):
    with pytest.raises(ConfigError):
        Settings.read_file(str(tmp_path / "nowhere.conf"))
