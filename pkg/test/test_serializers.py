# type: ignore
"""

    test_serializers.py

    Tests for reading and writing triplets, grid functions and tables

    Copyright (C) 2026 LevyFock developers.

    This software is licensed under the MIT License, see LICENSE.txt.

"""

import json
import math

import numpy as np
import pytest

from levy_fock import Convention, LevyTriplet, reference_triplet
from levy_fock.basics import InputError, ParameterError, UnknownKeyError, ZeroCrossingError
from levy_fock.serializers import (
    digest,
    dumps,
    dumps_triplet,
    fmt,
    grid_table,
    jsonable,
    load_grid_function,
    loads_triplet,
    parse_grid,
    read_grid_function,
    reference_document,
    reference_names,
    table_text,
)


def test_triplet_document():
    text = """
        {
          "b": 0.25,
          "a": 1,
          "convention": "kolmogorov",
          "atoms": [[-1.5, 0.5], [2.0, 1.0]],
          "density": {"family": "gaussian_l2", "scale": 0.5, "weight": 2.0}
        }
    """
    trip = loads_triplet(text)
    assert trip.convention is Convention.KOLMOGOROV
    assert trip.a == 1.0
    assert trip.nu.density.family == "gaussian_l2"
    again = loads_triplet(dumps_triplet(trip))
    assert again.to_dict() == trip.to_dict()


@pytest.mark.parametrize(
    "text, error",
    [
        ('{"b": 0.0,', InputError),
        ("[1, 2]", InputError),
        ('{"b": 0.0, "sigma": 1.0}', UnknownKeyError),
        ('{"atoms": [[0.0, 1.0]]}', ParameterError),
        ('{"atoms": [1.0, 2.0]}', InputError),
        ('{"a": -1.0}', ParameterError),
        ('{"quadrature": {"nodes": 5}}', UnknownKeyError),
        ('{"quadrature": {"order": 1}}', ParameterError),
    ],
)
def test_malformed_triplets(text, error):
    with pytest.raises(error) as e:
        loads_triplet(text, "bad.json")
    # Every input problem maps to the usage exit code
    assert e.value.exit_code == 2


def test_references():
    assert reference_names() == ["gaussian", "mixed", "point_mass", "poisson", "power"]
    for name in reference_names():
        trip = reference_triplet(name)
        assert isinstance(trip, LevyTriplet)
        assert trip.is_valid
    assert reference_triplet("poisson").convention is Convention.DEFINETTI
    doc = reference_document("gaussian")
    doc["a"] = 7.0
    # The stored documents are not modified through the copy
    assert reference_document("gaussian")["a"] == 1.0
    with pytest.raises(ParameterError):
        reference_triplet("cauchy")


def test_read_grid_function():
    lines = ["t,re,im", "1.0,0.5,0.1", "", "0.0,1.0,0.0", "-1.0,0.5,-0.1"]
    F = read_grid_function(lines)
    np.testing.assert_array_equal(F.points, [-1.0, 0.0, 1.0])
    np.testing.assert_array_equal(F.values, [0.5 - 0.1j, 1.0, 0.5 + 0.1j])
    # The imaginary column is optional
    F = read_grid_function(["0,1", "2,0.25"])
    assert F.values[1] == 0.25
    with pytest.raises(InputError):
        read_grid_function(["0,1,0", "0,1,0"])
    with pytest.raises(InputError):
        read_grid_function(["0,1,0", "1,x,0"])
    with pytest.raises(InputError):
        read_grid_function(["0,1,0,4"])
    with pytest.raises(InputError):
        read_grid_function(["t,re,im"])
    # F(0) must be 1
    with pytest.raises(InputError):
        read_grid_function(["0,0.5,0"])


def test_load_grid_function(tmp_path):
    t = np.arange(0.0, 8.25, 0.25)
    path = tmp_path / "sinc.csv"
    path.write_text(table_text(grid_table(t, np.sinc(t / np.pi))), encoding="utf-8")
    F = load_grid_function(str(path))
    assert len(F) == len(t)
    np.testing.assert_array_equal(F.values.real, np.sinc(t / np.pi))
    with pytest.raises(InputError):
        load_grid_function(str(tmp_path / "missing.csv"))


def test_parse_grid():
    np.testing.assert_array_equal(parse_grid("-1:1:0.5"), [-1.0, -0.5, 0.0, 0.5, 1.0])
    g = parse_grid("-3:3:0.3")
    assert len(g) == 21
    assert 0.0 in g
    assert parse_grid("2:2:1").tolist() == [2.0]
    for bad in ("1:2", "a:b:c", "0:1:0", "1:0:0.5", "0:1:0.3", "0:inf:1"):
        with pytest.raises(InputError):
            parse_grid(bad)


def test_jsonable():
    data = jsonable(
        {
            "z": 1 + 2j,
            "x": np.float64(0.5),
            "n": np.int64(3),
            "inf": math.inf,
            "array": np.array([1.0, math.nan]),
            "flag": np.bool_(True),
            "convention": Convention.LEVY,
            "error": ZeroCrossingError("F vanishes", t=1.0),
        }
    )
    assert data == {
        "z": [1.0, 2.0],
        "x": 0.5,
        "n": 3,
        "inf": None,
        "array": [1.0, None],
        "flag": True,
        "convention": "levy",
        "error": {"code": "P003", "descr": "F vanishes", "detail": {"t": 1.0}},
    }
    assert json.loads(dumps(data)) == data
    with pytest.raises(TypeError):
        jsonable(object())


def test_formats():
    assert fmt(0.1) == "0.10000000000000001"
    assert float(fmt(math.pi)) == math.pi
    assert digest("abc") == digest(b"abc")
    assert len(digest("abc")) == 64
    text = table_text((["t", "value"], [["0", "1"], ["1", "2"]]))
    assert text == "t,value\n0,1\n1,2\n"
