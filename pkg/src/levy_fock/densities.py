"""

    LevyFock: Lévy processes, cocycles and Fock space

    Built-in Lévy densities

    Copyright (C) 2026 LevyFock developers.

    This software is licensed under the MIT License, see LICENSE.txt.


    This module defines the density families that may make up the
    absolutely continuous part of a Lévy measure, dnu = rho(p) dp.
    Each family declares its support as a list of segments, which may
    reach to infinity when the family has a declared tail, so that every
    integral against the density is a finite sum of one-dimensional
    quadratures.

    Families:

    uniform:      rho = weight on [lo, hi]
    power:        rho = weight * |p|^(-exponent) on lower <= |p| <= cutoff
                  (cutoff may be None: a power tail reaching to infinity;
                  symmetric = False keeps p > 0 only)
    gaussian_l2:  rho = weight * exp(-(p / scale)^2), the squared modulus
                  of a Gaussian amplitude

    Every family also knows how to draw jump sizes from its restriction to
    |p| >= delta, which is what the compound Poisson sampler needs.

"""

from typing import Any, Dict, List, Mapping, Optional, Tuple, Type, TypeVar, cast

import math
from abc import ABC, abstractmethod

import numpy as np
from scipy.special import ndtr, ndtri

from .basics import ParameterError, SamplingError, UnknownKeyError


# A support segment (lo, hi); at most one end may be infinite
Segment = Tuple[float, float]

# Beyond this many scale units the Gaussian family is below 1e-27 of its peak
GAUSSIAN_CUTOFF = 8.0

DensityType = Type["Density"]
DENSITY_FAMILIES: Dict[str, DensityType] = dict()

_DensityClass = TypeVar("_DensityClass", bound=DensityType)


def register_density(cls: _DensityClass) -> _DensityClass:
    """A decorator that registers a density family under its name,
    for use by the JSON reader"""
    DENSITY_FAMILIES[cast(Any, cls).family] = cast(DensityType, cls)
    return cls


def _number(d: Mapping[str, Any], key: str, default: Optional[float] = None) -> float:
    val = d.get(key, default)
    if val is None or isinstance(val, bool) or not isinstance(val, (int, float)):
        raise ParameterError("Density parameter '{0}' must be a number".format(key))
    if not math.isfinite(val):
        raise ParameterError("Density parameter '{0}' must be finite".format(key))
    return float(val)


class Density(ABC):

    """Base class for the absolutely continuous part of a Lévy measure"""

    family = ""
    _keys: Tuple[str, ...] = ("family", "weight")

    def __init__(self, weight: float = 1.0) -> None:
        if not weight > 0.0:
            raise ParameterError("Density weight must be positive")
        self._weight = float(weight)

    @property
    def weight(self) -> float:
        return self._weight

    @abstractmethod
    def __call__(self, p: np.ndarray) -> np.ndarray:
        """Evaluate rho at an array of points; zero off the support"""
        ...

    @abstractmethod
    def segments(self) -> List[Segment]:
        """The support, as sorted segments that do not straddle 0"""
        ...

    @property
    def infinite_activity(self) -> bool:
        """True if the density has infinite mass near the origin"""
        return False

    def sample(self, rng: np.random.Generator, size: int, delta: float) -> np.ndarray:
        """Draw jump sizes from the normalized restriction of rho to |p| >= delta"""
        raise SamplingError(
            "Density family '{0}' does not support sampling".format(self.family)
        )

    @abstractmethod
    def params(self) -> Dict[str, Any]:
        ...

    def to_dict(self) -> Dict[str, Any]:
        d: Dict[str, Any] = {"family": self.family}
        d.update(self.params())
        d["weight"] = self._weight
        return d

    def __repr__(self) -> str:
        return "<{0} {1}>".format(self.__class__.__name__, self.to_dict())

    def scaled(self, c: float) -> "Density":
        """The same family with its weight multiplied by c"""
        d = self.to_dict()
        d["weight"] = self._weight * c
        return Density.from_dict(d)

    @classmethod
    def from_dict(cls, d: Mapping[str, Any]) -> "Density":
        """Construct a density from its JSON object form"""
        family = d.get("family")
        if not isinstance(family, str) or family not in DENSITY_FAMILIES:
            raise ParameterError(
                "Unknown density family '{0}'; expected one of {1}".format(
                    family, ", ".join(sorted(DENSITY_FAMILIES))
                )
            )
        klass = DENSITY_FAMILIES[family]
        unknown = set(d) - set(klass._keys)
        if unknown:
            raise UnknownKeyError(
                "Unknown key(s) {0} for density family '{1}'".format(
                    ", ".join(sorted(unknown)), family
                )
            )
        return klass._from_params(d)

    @classmethod
    @abstractmethod
    def _from_params(cls, d: Mapping[str, Any]) -> "Density":
        ...


def _split_at_zero(lo: float, hi: float) -> List[Segment]:
    if lo < 0.0 < hi:
        return [(lo, 0.0), (0.0, hi)]
    return [(lo, hi)]


@register_density
class UniformDensity(Density):

    """A constant density on an interval"""

    family = "uniform"
    _keys = ("family", "weight", "lo", "hi")

    def __init__(self, lo: float, hi: float, weight: float = 1.0) -> None:
        super().__init__(weight)
        if not lo < hi:
            raise ParameterError("Uniform density needs lo < hi")
        self._lo = float(lo)
        self._hi = float(hi)

    def __call__(self, p: np.ndarray) -> np.ndarray:
        p = np.asarray(p, dtype=float)
        return np.where((p >= self._lo) & (p <= self._hi), self._weight, 0.0)

    def segments(self) -> List[Segment]:
        return _split_at_zero(self._lo, self._hi)

    def params(self) -> Dict[str, Any]:
        return {"lo": self._lo, "hi": self._hi}

    def sample(self, rng: np.random.Generator, size: int, delta: float) -> np.ndarray:
        # The part of [lo, hi] outside (-delta, delta), as up to two pieces
        pieces = [
            (lo, hi)
            for lo, hi in (
                (self._lo, min(self._hi, -delta)),
                (max(self._lo, delta), self._hi),
            )
            if hi > lo
        ]
        if not pieces:
            raise SamplingError("Uniform density has no mass outside (-delta, delta)")
        lengths = np.array([hi - lo for lo, hi in pieces])
        which = rng.choice(len(pieces), size=size, p=lengths / lengths.sum())
        u = rng.random(size)
        los = np.array([lo for lo, _ in pieces])[which]
        return los + u * lengths[which]

    @classmethod
    def _from_params(cls, d: Mapping[str, Any]) -> "Density":
        return cls(_number(d, "lo"), _number(d, "hi"), _number(d, "weight", 1.0))


@register_density
class PowerDensity(Density):

    """A power law |p|^(-exponent), between a lower cutoff (possibly 0)
    and an upper cutoff (possibly infinite)"""

    family = "power"
    _keys = ("family", "weight", "exponent", "cutoff", "lower", "symmetric")

    def __init__(
        self,
        exponent: float,
        cutoff: Optional[float],
        lower: float = 0.0,
        symmetric: bool = True,
        weight: float = 1.0,
    ) -> None:
        super().__init__(weight)
        if lower < 0.0:
            raise ParameterError("Power density lower cutoff must be nonnegative")
        if cutoff is not None and not cutoff > lower:
            raise ParameterError("Power density needs lower < cutoff")
        if cutoff is None and lower <= 0.0:
            raise ParameterError(
                "A power tail to infinity needs a positive lower cutoff"
            )
        self._exponent = float(exponent)
        self._cutoff = None if cutoff is None else float(cutoff)
        self._lower = float(lower)
        self._symmetric = bool(symmetric)

    @property
    def exponent(self) -> float:
        return self._exponent

    @property
    def infinite_activity(self) -> bool:
        return self._lower == 0.0 and self._exponent >= 1.0

    def __call__(self, p: np.ndarray) -> np.ndarray:
        p = np.asarray(p, dtype=float)
        a = np.abs(p)
        inside = a >= self._lower
        if self._cutoff is not None:
            inside &= a <= self._cutoff
        if not self._symmetric:
            inside &= p > 0.0
        with np.errstate(divide="ignore", over="ignore"):
            val = self._weight * np.where(inside & (a > 0.0), a, 1.0) ** (-self._exponent)
        return np.where(inside & (a > 0.0), val, 0.0)

    def segments(self) -> List[Segment]:
        hi = math.inf if self._cutoff is None else self._cutoff
        right = (self._lower, hi)
        if self._symmetric:
            return [(-hi, -self._lower), right]
        return [right]

    def params(self) -> Dict[str, Any]:
        return {
            "exponent": self._exponent,
            "cutoff": self._cutoff,
            "lower": self._lower,
            "symmetric": self._symmetric,
        }

    def _inverse_cdf(self, u: np.ndarray, a: float, b: float) -> np.ndarray:
        """Inverse of the normalized CDF of p^(-exponent) on [a, b]"""
        s = 1.0 - self._exponent
        if s == 0.0:
            return a * (b / a) ** u
        if math.isinf(b):
            # s < 0 here, since the tail must be integrable
            return (a ** s * (1.0 - u)) ** (1.0 / s)
        return (a ** s + u * (b ** s - a ** s)) ** (1.0 / s)

    def sample(self, rng: np.random.Generator, size: int, delta: float) -> np.ndarray:
        a = max(self._lower, delta)
        b = math.inf if self._cutoff is None else self._cutoff
        if a <= 0.0:
            raise SamplingError(
                "A power density reaching the origin needs delta > 0 to be sampled"
            )
        if not b > a:
            raise SamplingError("Power density has no mass outside (-delta, delta)")
        if math.isinf(b) and self._exponent <= 1.0:
            raise SamplingError("Power tail is not integrable and cannot be sampled")
        mags = self._inverse_cdf(rng.random(size), a, b)
        if self._symmetric:
            mags = np.where(rng.random(size) < 0.5, -mags, mags)
        return mags

    @classmethod
    def _from_params(cls, d: Mapping[str, Any]) -> "Density":
        cutoff = d.get("cutoff")
        symmetric = d.get("symmetric", True)
        if not isinstance(symmetric, bool):
            raise ParameterError("Density parameter 'symmetric' must be true or false")
        return cls(
            _number(d, "exponent"),
            None if cutoff is None else _number(d, "cutoff"),
            lower=_number(d, "lower", 0.0),
            symmetric=symmetric,
            weight=_number(d, "weight", 1.0),
        )


@register_density
class GaussianL2Density(Density):

    """The squared modulus of a Gaussian amplitude, exp(-(p / scale)^2)"""

    family = "gaussian_l2"
    _keys = ("family", "weight", "scale")

    def __init__(self, scale: float, weight: float = 1.0) -> None:
        super().__init__(weight)
        if not scale > 0.0:
            raise ParameterError("Gaussian density scale must be positive")
        self._scale = float(scale)

    def __call__(self, p: np.ndarray) -> np.ndarray:
        p = np.asarray(p, dtype=float)
        return self._weight * np.exp(-((p / self._scale) ** 2))

    def segments(self) -> List[Segment]:
        # Declared decay: the density is negligible beyond the cutoff
        edge = GAUSSIAN_CUTOFF * self._scale
        return [(-edge, 0.0), (0.0, edge)]

    def params(self) -> Dict[str, Any]:
        return {"scale": self._scale}

    def sample(self, rng: np.random.Generator, size: int, delta: float) -> np.ndarray:
        # rho is proportional to a normal density with this standard deviation
        sd = self._scale / math.sqrt(2.0)
        # |p| from the normal tail beyond delta, by inversion of the survival function
        q = (1.0 - rng.random(size)) * ndtr(-delta / sd)
        mags = -sd * ndtri(q)
        return np.where(rng.random(size) < 0.5, -mags, mags)

    @classmethod
    def _from_params(cls, d: Mapping[str, Any]) -> "Density":
        return cls(_number(d, "scale"), _number(d, "weight", 1.0))
