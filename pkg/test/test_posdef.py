# type: ignore
"""

    test_posdef.py

    Tests for Gram matrices, logarithm branches and divisibility

    Copyright (C) 2026 LevyFock developers.

    This software is licensed under the MIT License, see LICENSE.txt.

"""

import numpy as np
import pytest

from levy_fock import (
    AliasingError,
    GridFunction,
    LevyMeasure,
    LevyTriplet,
    NonHermitianError,
    Settings,
    UnevaluableError,
    ZeroCrossingError,
    coboundary_multiplier,
    conditional_psd_check,
    gram,
    infinite_divisibility_check,
    log_branch,
    multiplier_residual,
    psd_check,
)
from levy_fock.basics import ParameterError
from levy_fock.posdef import conditional_matrix

from test_exponent import random_triplet


GRID = np.arange(-2.0, 2.25, 0.5)


def sinc_grid():
    """sin t / t on 0..8, which changes sign between 3 and 3.25"""
    t = np.arange(0.0, 8.25, 0.25)
    return GridFunction(t, np.sinc(t / np.pi))


def test_psd_check():
    v = psd_check(np.array([[1.0, 2.0], [2.0, 1.0]]))
    assert not v.is_psd
    assert v.min_eigenvalue == pytest.approx(-1.0, abs=1e-14)
    assert v.scale == pytest.approx(3.0, abs=1e-14)
    assert psd_check(np.eye(3)).is_psd
    assert psd_check(np.zeros((0, 0))).is_psd
    # Within the relative tolerance
    assert psd_check(np.diag([1.0, -1e-10])).is_psd
    with pytest.raises(NonHermitianError):
        psd_check(np.array([[1.0, 1.0], [0.0, 1.0]]))
    with pytest.raises(ParameterError):
        psd_check(np.ones(3))


def test_grid_function_validation():
    with pytest.raises(ParameterError):
        GridFunction([0.0, 1.0], [0.9, 0.5])
    with pytest.raises(ParameterError):
        GridFunction([1.0, 0.0], [0.5, 1.0])
    with pytest.raises(ParameterError):
        GridFunction([0.0, 1.0], [1.0])
    with pytest.raises(ParameterError):
        GridFunction([0.0], [0.0], kind="density")
    F = GridFunction([0.0], [1.0 + 1e-12])
    assert F.values[0] == 1.0


def test_evaluate_by_symmetry():
    F = GridFunction([0.0, 1.0, 2.0], [1.0, 0.5 + 0.1j, 0.2 - 0.3j])
    np.testing.assert_array_equal(
        F.evaluate([-2.0, -1.0, 0.0, 1.0]), [0.2 + 0.3j, 0.5 - 0.1j, 1.0, 0.5 + 0.1j]
    )
    with pytest.raises(UnevaluableError) as e:
        F.evaluate([0.5])
    assert e.value.detail["t"] == 0.5
    assert "t = 0.5" in str(e.value)
    assert "float64" not in str(e.value)
    # A triplet-backed function is evaluated anywhere
    trip = LevyTriplet(a=1.0)
    G = GridFunction.from_triplet(trip, [0.0, 1.0])
    assert G.evaluate([3.0])[0] == pytest.approx(np.exp(-4.5), rel=1e-14)


def test_gram():
    F = GridFunction.from_triplet(LevyTriplet(a=1.0), GRID)
    m = gram(F)
    d = GRID[np.newaxis, :] - GRID[:, np.newaxis]
    np.testing.assert_allclose(m, np.exp(-0.5 * d * d), rtol=1e-14)
    assert psd_check(m).is_psd
    # The trivial coboundary of a character leaves the Gram matrix alone
    sigma = coboundary_multiplier(lambda t: np.exp(0.3j * t))
    np.testing.assert_allclose(gram(F, sigma), m, atol=1e-14)
    with pytest.raises(ParameterError):
        gram(GridFunction.from_triplet(LevyTriplet(a=1.0), GRID, "exponent"))


def test_gram_of_triplets_is_psd():
    rng = np.random.default_rng(3)
    for _ in range(8):
        F = GridFunction.from_triplet(random_triplet(rng), GRID)
        assert psd_check(gram(F)).is_psd


def test_log_branch():
    t = np.arange(-3.0, 3.25, 0.5)
    f = log_branch(GridFunction(t, np.exp(1j * t)))
    assert f.kind == "exponent"
    np.testing.assert_allclose(f.values, 1j * t, atol=1e-12)
    # The branch continues past pi
    t = np.arange(-6.0, 6.5, 0.5)
    f = log_branch(GridFunction(t, np.exp(1j * t - 0.1 * t * t)))
    np.testing.assert_allclose(f.values, 1j * t - 0.1 * t * t, atol=1e-12)


def test_log_branch_steps_below_pi():
    f = log_branch(GridFunction([0.0, 2.8], np.exp(1j * np.array([0.0, 2.8]))))
    assert f.values[1] == pytest.approx(2.8j, abs=1e-12)
    t = np.arange(-2.0, 3.0, 1.0)
    f = log_branch(GridFunction(t, np.exp(3j * t)))
    np.testing.assert_allclose(f.values, 3j * t, atol=1e-12)
    # A lower configured step turns the same grid into aliasing
    snap = Settings.snapshot()
    try:
        Settings.MAX_PHASE_STEP = 2.5
        with pytest.raises(AliasingError):
            log_branch(GridFunction(t, np.exp(3j * t)))
    finally:
        Settings.restore(snap)


def test_log_branch_failures():
    with pytest.raises(ZeroCrossingError):
        log_branch(sinc_grid())
    t = np.arange(-2.0, 3.0, 1.0)
    with pytest.raises(AliasingError):
        log_branch(GridFunction(t, np.exp(3j * t)), max_step=2.5)
    with pytest.raises(ZeroCrossingError) as e:
        log_branch(GridFunction([0.0, 1.0], [1.0, 1e-9]))
    assert e.value.detail["t"] == 1.0
    with pytest.raises(UnevaluableError):
        log_branch(GridFunction([1.0, 2.0], [0.5, 0.25]))


def test_conditional_psd():
    rng = np.random.default_rng(5)
    for _ in range(6):
        f = GridFunction.from_triplet(random_triplet(rng), GRID, "exponent")
        assert conditional_psd_check(f).is_psd
    # f(t) = t^2 / 2 gives C_jk = -t_j t_k
    f = GridFunction([0.0, 1.0, 2.0], [0.0, 0.5, 2.0], "exponent")
    np.testing.assert_allclose(
        conditional_matrix(f), -np.outer([0.0, 1.0, 2.0], [0.0, 1.0, 2.0]), atol=1e-15
    )
    v = conditional_psd_check(f)
    assert not v.is_psd
    assert v.min_eigenvalue == pytest.approx(-5.0, abs=1e-12)


def test_infinite_divisibility():
    F = GridFunction.from_triplet(LevyTriplet(0.2, 1.0, LevyMeasure([(1.0, 0.5)])), GRID)
    report = infinite_divisibility_check(F, 4)
    assert report.passed
    assert [n for n, _ in report.verdicts] == [1, 2, 3, 4]
    assert report.to_dict()["pass"]
    report = infinite_divisibility_check(sinc_grid(), 8)
    assert not report.passed
    assert report.verdicts == []
    assert "P003" in report.failure
    with pytest.raises(ParameterError):
        infinite_divisibility_check(F, 0)


def test_multipliers():
    sigma = coboundary_multiplier(lambda t: np.exp(1j * t * t))
    assert multiplier_residual(sigma, GRID) <= 1e-12
    # exp(i g h^2) fails the cocycle identity by the phase 2 g h k
    assert multiplier_residual(lambda g, h: np.exp(1j * g * h * h), [0.0, 0.5, 1.0]) > 0.1
    # Not normalized
    assert multiplier_residual(lambda g, h: 2.0, [0.0, 1.0]) == pytest.approx(1.0)
