# type: ignore
"""

    test_quadrature.py

    Tests for the adaptive quadrature module

    Copyright (C) 2026 LevyFock developers.

    This software is licensed under the MIT License, see LICENSE.txt.

"""

import math

import numpy as np
import pytest

from levy_fock.basics import ParameterError, QuadratureError
from levy_fock.quadrature import (
    QuadratureSpec,
    fourier_tail,
    gauss_legendre,
    integrate,
)


def test_polynomial():
    r = gauss_legendre(lambda x: x ** 3, 0.0, 2.0)
    assert r.value == pytest.approx(4.0, abs=1e-13)
    assert r.intervals == 1


def test_reversed_and_empty_limits():
    r = gauss_legendre(np.exp, 1.0, 0.0)
    assert r.value == pytest.approx(1.0 - math.e, abs=1e-12)
    assert gauss_legendre(np.exp, 1.0, 1.0).value == 0.0


def test_vector_integrand():
    r = gauss_legendre(lambda x: np.stack([x, x * x]), 0.0, 1.0)
    np.testing.assert_allclose(r.value, [0.5, 1.0 / 3.0], atol=1e-14)


def test_adaptive_refinement():
    # sqrt has an unbounded derivative at 0: the rule must bisect towards it
    r = gauss_legendre(np.sqrt, 0.0, 1.0)
    assert r.value == pytest.approx(2.0 / 3.0, abs=1e-10)
    assert r.intervals > 1


def test_tail():
    r = integrate(lambda p: np.exp(-p), 1.0, math.inf)
    assert r.value == pytest.approx(math.exp(-1.0), abs=1e-10)
    r = integrate(lambda p: p ** -2.0, -math.inf, -2.0)
    assert r.value == pytest.approx(0.5, abs=1e-10)


def test_tail_must_avoid_origin():
    with pytest.raises(ParameterError):
        integrate(np.exp, 0.0, math.inf)
    with pytest.raises(ParameterError):
        integrate(np.exp, -math.inf, math.inf)


def test_divergence():
    # int_1^inf dp / p diverges: the node budget runs out
    with pytest.raises(QuadratureError):
        integrate(lambda p: 1.0 / p, 1.0, math.inf)
    # So does int_0^1 p^-1.5 dp, at the origin
    with pytest.raises(QuadratureError):
        gauss_legendre(lambda p: p ** -1.5, 0.0, 1.0, QuadratureSpec(max_intervals=200))


def test_fourier_tail():
    rho = lambda p: np.exp(-np.asarray(p))
    out = fourier_tail(rho, 1.0, [1.0, -1.0, 0.0])
    exact = np.exp(-1.0 + 1.0j) / (1.0 - 1.0j)
    assert abs(out[0] - exact) < 1e-8
    assert abs(out[1] - np.conj(exact)) < 1e-8
    assert out[2] == pytest.approx(math.exp(-1.0), abs=1e-10)


def test_spec_validation():
    with pytest.raises(ParameterError):
        QuadratureSpec(order=1)
    with pytest.raises(ParameterError):
        QuadratureSpec(max_intervals=0)
    with pytest.raises(ParameterError):
        QuadratureSpec(tolerance=0.0)
    spec = QuadratureSpec(order=10).with_breakpoints([0.5])
    assert spec.breakpoints == (0.5,)
    assert spec.to_dict()["order"] == 10
