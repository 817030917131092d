# type: ignore
"""

    test_exponent.py

    Tests for Lévy triplets and the characteristic exponent

    Copyright (C) 2026 LevyFock developers.

    This software is licensed under the MIT License, see LICENSE.txt.


    random_triplet() is shared with the other test modules.

"""

import cmath
import math

import numpy as np
import pytest

from levy_fock import (
    CharExponentGrid,
    Convention,
    DivergentMomentError,
    InadmissibleConventionError,
    IntegrabilityError,
    LevyMeasure,
    LevyTriplet,
    PowerDensity,
    UniformDensity,
    char_fn,
    convert,
    cumulants,
    eval_exponent,
    eval_exponent_grid,
    levy_measure_moments,
    validate_triplet,
)
from levy_fock.basics import InvalidMomentError, ParameterError, UnknownKeyError
from levy_fock.exponent import MomentKind


CONVENTIONS = list(Convention)
SYMMETRIC_GRID = np.arange(-3.0, 3.25, 0.25)


def random_triplet(rng, convention=None):
    """A triplet with up to three atoms and, half the time, a uniform
    density; its Lévy measure is finite, so every convention applies"""
    k = int(rng.integers(0, 4))
    atoms = list(zip(rng.uniform(-3.0, 3.0, size=k), rng.uniform(0.1, 2.0, size=k)))
    density = None
    if rng.random() < 0.5:
        lo = float(rng.uniform(-2.0, 0.5))
        density = UniformDensity(lo, lo + float(rng.uniform(0.2, 2.0)), rng.uniform(0.1, 1.0))
    if convention is None:
        convention = CONVENTIONS[int(rng.integers(len(CONVENTIONS)))]
    return LevyTriplet(
        float(rng.normal()),
        float(rng.uniform(0.0, 1.5)),
        LevyMeasure(atoms, density),
        convention,
    )


def atom(p, w, convention="levy", b=0.0):
    return LevyTriplet(b, 0.0, LevyMeasure([(p, w)]), convention)


def harmonic_tail(convention):
    """nu = p^-2 dp on [1, inf)"""
    return LevyTriplet(
        0.0,
        0.0,
        LevyMeasure(density=PowerDensity(2.0, None, lower=1.0, symmetric=False)),
        convention,
    )


def test_moments():
    nu = LevyMeasure([(1.0, 2.0)])
    assert levy_measure_moments(nu, "p3_over_1p2") == pytest.approx(1.0, abs=1e-15)
    for kind in ("total_mass", "min1p2", "p_over_1p2", "trunc_var(0.5)"):
        assert levy_measure_moments(LevyMeasure(), kind) == 0.0
    nu = LevyMeasure(density=UniformDensity(1.0, 2.0))
    assert levy_measure_moments(nu, "p_over_1p2") == pytest.approx(
        0.5 * math.log(2.5), abs=1e-10
    )
    # The small-jump variance counts only |p| < delta
    nu = LevyMeasure([(0.1, 1.0), (1.0, 1.0)], UniformDensity(-1.0, 1.0))
    assert nu.moment("trunc_var(0.5)") == pytest.approx(0.01 + 2.0 * 0.125 / 3.0, abs=1e-10)


def test_moment_kinds():
    assert MomentKind.parse("trunc_var(0.01)") == MomentKind("trunc_var", 0.01)
    assert str(MomentKind.parse(" total_mass ")) == "total_mass"
    for bad in ("no_such_moment", "trunc_var", "total_mass(0.5)", "trunc_var(-1)", "((", 3):
        with pytest.raises(InvalidMomentError):
            MomentKind.parse(bad)


def test_divergent_moment():
    # |p|^-1.5 near the origin: nu(R) diverges, int min(1, p^2) dnu = 4/3
    nu = LevyMeasure(density=PowerDensity(1.5, 1.0))
    with pytest.raises(DivergentMomentError):
        nu.moment("total_mass")
    # Cached divergences are reported again
    with pytest.raises(DivergentMomentError):
        levy_measure_moments(nu, "total_mass")
    assert nu.moment("min1p2") == pytest.approx(4.0 / 3.0, abs=1e-9)
    assert nu.admits(Convention.LEVY)
    assert not nu.admits(Convention.DEFINETTI)


def test_measure_validation():
    with pytest.raises(ParameterError):
        LevyMeasure([(0.0, 1.0)])
    with pytest.raises(ParameterError):
        LevyMeasure([(1.0, 0.0)])
    with pytest.raises(ParameterError):
        LevyMeasure([(1.0, 1.0), (1.0, 2.0)])
    with pytest.raises(ParameterError):
        LevyTriplet(0.0, -1.0)


def test_eval_examples():
    assert eval_exponent(LevyTriplet(), 7.3) == 0.0
    assert eval_exponent(LevyTriplet(a=1.0), 1.0) == -0.5
    z = eval_exponent(atom(1.0, 1.0, "definetti"), math.pi)
    assert abs(z - (-2.0)) < 1e-12
    z = eval_exponent(atom(1.0, 1.0, "levy"), math.pi)
    assert abs(z - complex(-2.0, -math.pi / 2.0)) < 1e-12


def test_char_fn_examples(verbose=False):
    rng = np.random.default_rng(11)
    for _ in range(5):
        trip = random_triplet(rng)
        if verbose:
            print(trip)
        assert char_fn(trip, 0.0) == 1.0
    assert char_fn(LevyTriplet(a=1.0), 1.0) == pytest.approx(math.exp(-0.5), abs=1e-15)
    assert abs(char_fn(atom(1.0, 1.0, "definetti"), 2.0 * math.pi) - 1.0) < 1e-12


def test_gaussian_closed_form():
    trip = LevyTriplet(0.7, 2.0)
    t = np.linspace(-5.0, 5.0, 41)
    np.testing.assert_allclose(
        eval_exponent_grid(trip, t), 0.7j * t - t * t, rtol=1e-15, atol=0.0
    )


def test_exponent_properties():
    rng = np.random.default_rng(2026)
    for _ in range(12):
        trip = random_triplet(rng)
        f = eval_exponent_grid(trip, SYMMETRIC_GRID)
        # f(0) = 0 exactly
        assert f[SYMMETRIC_GRID == 0.0][0] == 0.0
        # Hermitian symmetry and negativity
        assert np.max(np.abs(f[::-1] - np.conj(f))) <= 1e-9
        assert np.max(f.real) <= 1e-12
        ex = CharExponentGrid.evaluate(trip, SYMMETRIC_GRID)
        assert ex.hermitian_residual() <= 1e-9


def test_convert_examples():
    assert convert(atom(1.0, 1.0, "kolmogorov"), "levy").b == pytest.approx(-0.5, abs=1e-15)
    sym = LevyTriplet(0.0, 0.0, LevyMeasure([(-1.0, 1.0), (1.0, 1.0)]), "kolmogorov")
    assert convert(sym, Convention.LEVY).b == pytest.approx(0.0, abs=1e-15)
    trip = convert(atom(2.0, 3.0, "definetti", b=1.0), "Levy")
    assert trip.b == pytest.approx(2.2, abs=1e-14)
    assert trip.convention is Convention.LEVY
    assert trip.a == 0.0 and trip.nu.atoms == ((2.0, 3.0),)


@pytest.mark.parametrize("target", CONVENTIONS)
def test_convention_equivalence(target):
    rng = np.random.default_rng(7)
    for _ in range(6):
        trip = random_triplet(rng)
        conv = convert(trip, target)
        f0 = eval_exponent_grid(trip, SYMMETRIC_GRID)
        f1 = eval_exponent_grid(conv, SYMMETRIC_GRID)
        assert np.max(np.abs(f1 - f0)) <= 1e-9 * (1.0 + np.max(np.abs(f0)))
        back = convert(conv, trip.convention)
        assert back.b == pytest.approx(trip.b, abs=1e-10)


def test_inadmissible_conversion():
    # Infinite mass near the origin: no DeFinetti form
    trip = LevyTriplet(0.0, 0.0, LevyMeasure(density=PowerDensity(1.5, 1.0)), "levy")
    with pytest.raises(InadmissibleConventionError):
        convert(trip, "definetti")
    # A heavy tail has no Kolmogorov form
    with pytest.raises(InadmissibleConventionError) as e:
        convert(harmonic_tail("levy"), Convention.KOLMOGOROV)
    assert e.value.detail["kind"] == "abs_p_tail"


def test_validate():
    for conv in CONVENTIONS:
        diags = validate_triplet(LevyTriplet(convention=conv))
        assert diags.passed
    diags = validate_triplet(harmonic_tail("kolmogorov"))
    assert not diags.passed
    assert not diags["abs_p_tail"].passed
    assert diags["abs_p_tail"].value == math.inf
    assert diags["abs_p_tail"].to_dict()["value"] is None
    diags = validate_triplet(harmonic_tail("levy"))
    assert diags.passed
    assert diags["min1p2"].value == pytest.approx(1.0, abs=1e-10)


def test_heavy_tail():
    trip = harmonic_tail("levy")
    t = np.array([-2.0, -1.0, 0.0, 1.0, 2.0])
    f = eval_exponent_grid(trip, t)
    assert np.max(np.abs(f[::-1] - np.conj(f))) <= 1e-8
    assert np.max(f.real) <= 1e-12
    assert f[2] == 0.0
    with pytest.raises(IntegrabilityError):
        eval_exponent(harmonic_tail("kolmogorov"), 1.0)


def test_cumulants():
    # Compound Poisson in the Levy form with b = 0: mean 1 - 1/2
    c = cumulants(atom(1.0, 1.0))
    assert c.mean == pytest.approx(0.5, abs=1e-15)
    assert c.variance == pytest.approx(1.0, abs=1e-15)
    c = cumulants(LevyTriplet(0.3, 2.0))
    assert c.mean == 0.3 and c.variance == 2.0
    # No variance for a p^-2 tail, and no mean either
    c = cumulants(harmonic_tail("levy"))
    assert c.mean is None and c.variance is None


def test_from_dict():
    trip = LevyTriplet.from_dict(
        {
            "b": 1,
            "a": 0.5,
            "convention": "de_finetti",
            "atoms": [[2, 1.5]],
            "density": {"family": "uniform", "lo": 1.0, "hi": 2.0},
            "quadrature": {"order": 10},
        }
    )
    assert trip.convention is Convention.DEFINETTI
    assert trip.nu.atoms == ((2.0, 1.5),)
    assert trip.nu.quadrature.order == 10
    assert trip.to_dict()["quadrature"]["order"] == 10
    with pytest.raises(UnknownKeyError):
        LevyTriplet.from_dict({"b": 0.0, "c": 1.0})
    with pytest.raises(UnknownKeyError):
        LevyTriplet.from_dict({"density": {"family": "uniform", "lo": 0, "hi": 1, "x": 0}})
    with pytest.raises(ParameterError):
        LevyTriplet.from_dict({"convention": "ito"})
    with pytest.raises(ParameterError):
        LevyTriplet.from_dict({"a": "1.0"})
    with pytest.raises(ParameterError):
        LevyTriplet.from_dict({"density": {"family": "cauchy"}})


def test_scaled():
    trip = LevyTriplet(0.5, 1.0, LevyMeasure([(1.0, 2.0)]))
    t = np.array([0.5, 1.5])
    np.testing.assert_allclose(
        eval_exponent_grid(trip.scaled(3.0), t),
        3.0 * eval_exponent_grid(trip, t),
        rtol=1e-13,
    )
    assert cmath.isclose(char_fn(trip.scaled(0.5), 1.0) ** 2, char_fn(trip, 1.0))
