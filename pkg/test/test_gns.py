# type: ignore
"""

    test_gns.py

    Tests for the cocycle kernel and its finite-rank realization

    Copyright (C) 2026 LevyFock developers.

    This software is licensed under the MIT License, see LICENSE.txt.

"""

import math

import numpy as np
import pytest

from levy_fock import (
    GridFunction,
    LevyMeasure,
    LevyTriplet,
    NotPsdError,
    UnevaluableError,
    coboundary_residual,
    convert,
    group_law_residual,
    kernel,
    kernel_matrix,
    realize_cocycle,
    shift_covariance_residual,
    shift_operator,
    triplet_kernel_matrix,
)
from levy_fock.basics import ParameterError
from levy_fock.gns import KernelMatrix
from levy_fock.serializers import reference_triplet

from test_exponent import random_triplet


GRID = np.arange(-2.0, 2.25, 0.5)


def test_kernel_examples():
    assert kernel(LevyTriplet(a=1.0), 2.0, 3.0) == 6.0
    trip = LevyTriplet(0.0, 0.0, LevyMeasure([(1.0, 1.0)]))
    assert kernel(trip, 1.0, 1.0) == pytest.approx(2.0 - 2.0 * math.cos(1.0), abs=1e-15)
    assert kernel(trip, 0.0, 1.5) == 0.0


def test_kernel_ignores_drift_and_convention():
    rng = np.random.default_rng(17)
    for _ in range(5):
        trip = random_triplet(rng)
        k0 = triplet_kernel_matrix(trip, GRID).K
        for target in ("levy", "kolmogorov", "definetti"):
            conv = convert(trip, target).replace(b=trip.b + 1.0)
            np.testing.assert_allclose(triplet_kernel_matrix(conv, GRID).K, k0, atol=1e-12)


def test_kernel_from_exponent():
    rng = np.random.default_rng(19)
    for _ in range(5):
        trip = random_triplet(rng)
        f = GridFunction.from_triplet(trip, GRID, "exponent")
        km = kernel_matrix(f)
        exact = triplet_kernel_matrix(trip, GRID)
        assert km.size == len(GRID)
        assert np.max(np.abs(km.K - exact.K)) <= 1e-9 * (1.0 + exact.max_abs)


def test_realization():
    rng = np.random.default_rng(23)
    for _ in range(5):
        trip = random_triplet(rng)
        km = triplet_kernel_matrix(trip, GRID)
        real = realize_cocycle(km)
        assert real.gram_error <= 1e-8 * max(1.0, float(real.eigenvalues[-1]))
        np.testing.assert_allclose(real.gram(), km.K, atol=1e-8 * (1.0 + km.max_abs))
        assert np.all(real.psi(0.0) == 0.0)
    # K = a s t has rank one
    real = realize_cocycle(triplet_kernel_matrix(LevyTriplet(a=2.0), GRID))
    assert real.rank == 1
    np.testing.assert_allclose(real.norms(), np.sqrt(2.0) * np.abs(GRID), atol=1e-12)
    with pytest.raises(UnevaluableError):
        real.psi(0.25)


def test_not_psd():
    km = KernelMatrix(np.array([1.0, 2.0]), np.array([[1.0, 0.0], [0.0, -1.0]]))
    with pytest.raises(NotPsdError) as e:
        realize_cocycle(km)
    assert e.value.exit_code == 1
    assert e.value.detail["min_eigenvalue"] == pytest.approx(-1.0)


def test_shift_covariance():
    rng = np.random.default_rng(29)
    for _ in range(5):
        trip = random_triplet(rng)
        for h in (0.5, -1.0, 0.3):
            res = shift_covariance_residual(trip, GRID, h)
            assert res <= 1e-9 * (1.0 + triplet_kernel_matrix(trip, GRID).max_abs)
    # The same from exponent values on a grid closed under the shift
    trip = reference_triplet("mixed")
    f = GridFunction.from_triplet(trip, np.arange(-4.0, 4.25, 0.5), "exponent")
    assert shift_covariance_residual(f, GRID, 0.5) <= 1e-8


def test_gaussian_is_not_a_coboundary():
    real = realize_cocycle(triplet_kernel_matrix(reference_triplet("gaussian"), GRID))
    cb = coboundary_residual(real)
    assert cb.normalized > 0.1
    # psi(t) = sqrt(a) t: every shift acts as the identity
    op = shift_operator(real, 0.5)
    np.testing.assert_allclose(op.matrix, [[1.0]], atol=1e-8)
    assert op.action_residual <= 1e-10


def test_gaussian_fit_ignores_rounding():
    # (V(g) - I) psi(h) vanishes up to rounding; no psi0 may be fitted to it
    grid = np.arange(0.0, 3.25, 0.5)
    real = realize_cocycle(triplet_kernel_matrix(LevyTriplet(a=1.0), grid))
    cb = coboundary_residual(real)
    assert cb.normalized >= 0.1
    assert np.max(np.abs(cb.psi0)) <= 1e-6
    # A Gaussian part keeps a mixed cocycle away from the coboundaries
    real = realize_cocycle(triplet_kernel_matrix(reference_triplet("mixed"), grid))
    assert coboundary_residual(real).normalized >= 0.01


def test_compound_poisson_is_a_coboundary():
    # psi(t) = e^{ipt} - 1 = (V(t) - I) 1 in L^2(nu)
    for name in ("poisson", "point_mass"):
        real = realize_cocycle(triplet_kernel_matrix(reference_triplet(name), GRID))
        cb = coboundary_residual(real)
        assert cb.normalized <= 1e-4
    real = realize_cocycle(triplet_kernel_matrix(reference_triplet("point_mass"), GRID))
    assert real.rank == 0


def test_coboundary_needs_a_triplet():
    # Gaussian exponent values only; negative points are reached by symmetry
    t = np.arange(0.0, 2.25, 0.5)
    real = realize_cocycle(kernel_matrix(GridFunction(t, -0.5 * t * t, "exponent")))
    assert real.rank == 1
    with pytest.raises(ParameterError):
        coboundary_residual(real)


def test_shift_operator():
    real = realize_cocycle(triplet_kernel_matrix(reference_triplet("mixed"), GRID))
    op = shift_operator(real, 0.5)
    assert len(op.domain) == len(GRID) - 1
    assert op.isometry_residual <= 1e-8
    assert op.action_residual <= 1e-6
    assert group_law_residual(real, 0.5, 0.5) <= 1e-6
    assert group_law_residual(real, 0.5, -0.5) <= 1e-6
    with pytest.raises(UnevaluableError):
        shift_operator(real, 0.25)
    with pytest.raises(ParameterError):
        shift_operator(
            realize_cocycle(triplet_kernel_matrix(reference_triplet("mixed"), [0.0, 1.0, 3.0])),
            1.0,
        )
