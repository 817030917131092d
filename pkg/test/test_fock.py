# type: ignore
"""

    test_fock.py

    Tests for the truncated Fock space and the Weyl operators

    Copyright (C) 2026 LevyFock developers.

    This software is licensed under the MIT License, see LICENSE.txt.

"""

import math

import numpy as np
import pytest

from levy_fock import (
    LevyTriplet,
    TruncatedFock,
    TruncationOverflowError,
    VanishingCharFnError,
    char_fn,
    coherent_gram,
    coherent_inner,
    coherent_vector,
    embedding_gram,
    realize_cocycle,
    representation_residual,
    triplet_kernel_matrix,
    vacuum_expectation,
    weyl_gram,
    weyl_unitarity_residual,
)
from levy_fock.basics import ParameterError
from levy_fock.fock import fock_dimension, truncation_bound
from levy_fock.serializers import reference_triplet

from test_exponent import random_triplet


GRID = np.arange(-2.0, 2.25, 0.5)


def test_dimension():
    assert fock_dimension(2, 2) == 6
    assert fock_dimension(0, 5) == 1
    assert fock_dimension(3, 0) == 1
    assert TruncatedFock(4, 3).dimension == 1 + 4 + 10 + 20
    with pytest.raises(TruncationOverflowError) as e:
        TruncatedFock(10, 10, budget=100)
    assert e.value.detail["dimension"] == fock_dimension(10, 10)
    with pytest.raises(ParameterError):
        TruncatedFock(-1, 2)


def test_graded_basis():
    fock = TruncatedFock(3, 2)
    assert [tuple(row) for row in fock.graded(2)] == [
        (0, 0),
        (0, 1),
        (1, 1),
        (0, 2),
        (1, 2),
        (2, 2),
    ]
    basis = fock.basis()
    assert basis[0] == ()
    assert basis[1:4] == [(0,), (1,), (2,)]
    assert len(basis) == fock.dimension
    np.testing.assert_array_equal(fock.occupations(2)[1], [1, 1, 0])
    assert TruncatedFock(0, 3).basis() == [()]


def test_coherent_vector():
    vec = coherent_vector([1.0], 10)
    assert vec.norm2() == pytest.approx(sum(1.0 / math.factorial(n) for n in range(11)))
    vec = coherent_vector([2.0, 1j], 2)
    # 1; psi_0, psi_1; psi_0^2 / sqrt 2, psi_0 psi_1, psi_1^2 / sqrt 2 in colex order
    np.testing.assert_allclose(
        vec.coefficients,
        [1.0, 2.0, 1j, 4.0 / math.sqrt(2.0), 2j, -1.0 / math.sqrt(2.0)],
        atol=1e-15,
    )


def test_coherent_inner():
    r = coherent_inner([1.0], [1.0], 10)
    assert abs(r.value - math.e) <= 2.8e-8
    assert abs(r.value - math.e) <= r.bound
    assert r.bound == pytest.approx(math.e / math.factorial(11))
    psi = np.array([0.3 + 0.2j, -0.5])
    phi = np.array([0.1j, 0.4])
    r = coherent_inner(psi, phi, 8)
    assert abs(r.value - np.exp(np.vdot(psi, phi))) <= r.bound
    assert coherent_inner([0.0], [5.0], 0).bound == 0.0
    with pytest.raises(ParameterError):
        coherent_inner([1.0], [1.0, 2.0], 3)
    with pytest.raises(ParameterError):
        coherent_inner([1.0], [1.0], -1)


def test_truncation_bound():
    assert truncation_bound(1.0, 1.0, 10) == pytest.approx(math.e / math.factorial(11))
    # Large degrees stay finite
    assert 0.0 < truncation_bound(3.0, 2.0, 200) < 1e-200


def test_weyl_gram():
    trip = reference_triplet("gaussian")
    assert weyl_gram(trip, [0.0], 1.0)[0, 0] == pytest.approx(math.exp(-0.5), rel=1e-14)
    # F(1.5) / F(0.5) exp K(0.5, 1.5) = exp(-1 + 0.75)
    assert weyl_gram(trip, [0.5], 1.0)[0, 0] == pytest.approx(math.exp(-0.25), rel=1e-14)
    np.testing.assert_allclose(
        coherent_gram(trip, [1.0, 2.0]), np.exp([[1.0, 2.0], [2.0, 4.0]]), rtol=1e-14
    )


def test_weyl_identities():
    rng = np.random.default_rng(31)
    for _ in range(6):
        trip = random_triplet(rng)
        scale = 1.0 + float(np.max(np.abs(coherent_gram(trip, GRID))))
        assert weyl_unitarity_residual(trip, GRID, 0.5) <= 1e-8 * scale
        assert representation_residual(trip, GRID, 0.5, -1.0) <= 1e-8 * scale
        for t in (-1.5, 0.0, 0.7):
            assert abs(vacuum_expectation(trip, t) - char_fn(trip, t)) <= 1e-12


def test_vanishing_charfn():
    trip = LevyTriplet(a=100.0)
    with pytest.raises(VanishingCharFnError) as e:
        weyl_gram(trip, [1.0], 0.5)
    assert e.value.detail["t"] == 1.0


@pytest.mark.parametrize("name", ["gaussian", "poisson", "mixed"])
def test_embedding(name):
    real = realize_cocycle(triplet_kernel_matrix(reference_triplet(name), [-1.0, -0.5, 0.0, 0.5, 1.0]))
    span = embedding_gram(real, 12)
    assert span.within_bound
    assert span.fock.r == real.rank
    assert span.vectors.shape == (5, span.fock.dimension)
    assert span.to_dict()["within_bound"]
