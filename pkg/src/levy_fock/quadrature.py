"""

    LevyFock: Lévy processes, cocycles and Fock space

    Quadrature module

    Copyright (C) 2026 LevyFock developers.

    This software is licensed under the MIT License, see LICENSE.txt.


    This module integrates the one-dimensional integrands that arise from
    Lévy measures: smooth functions of the jump size p, possibly with an
    integrable singularity at p = 0, over finite intervals or over
    declared tails reaching to infinity.

    Finite intervals use adaptive Gauss-Legendre quadrature: each
    subinterval is integrated with an n-point and a 2n-point rule, the
    difference is the error estimate, and the subinterval with the largest
    error is bisected until the total error drops below
    tolerance * (1 + |result|). Running out of subintervals means the
    integral is declared divergent (or at least not computable within the
    node budget), which is how divergent moments are detected.

    Tails [L, inf) with L > 0 are mapped onto (0, 1] by p = L/u before the
    same rule is applied. Oscillatory tails, i.e. Fourier integrals of a
    decaying density, go through QUADPACK's QAWF routine via
    scipy.integrate.quad.

"""

from typing import Callable, List, NamedTuple, Optional, Sequence, Tuple

import heapq
import logging
import math
import warnings
from dataclasses import dataclass, field, replace
from functools import lru_cache

import numpy as np
from scipy.integrate import IntegrationWarning, quad

from .basics import ParameterError, QuadratureError
from .settings import Settings


logger = logging.getLogger(__name__)

# A vectorized integrand: maps nodes of shape (m,) to values of shape (..., m)
Integrand = Callable[[np.ndarray], np.ndarray]


@dataclass(frozen=True)
class QuadratureSpec:

    """Node counts, node budget, tolerance and extra domain splits
    for the adaptive rule"""

    order: int = field(default_factory=lambda: Settings.QUAD_ORDER)
    max_intervals: int = field(default_factory=lambda: Settings.QUAD_MAX_INTERVALS)
    tolerance: float = field(default_factory=lambda: Settings.QUAD_TOLERANCE)
    breakpoints: Tuple[float, ...] = ()

    def __post_init__(self) -> None:
        if self.order < 2:
            raise ParameterError("Quadrature order must be at least 2")
        if self.max_intervals < 1:
            raise ParameterError("Quadrature node budget must be positive")
        if not self.tolerance > 0.0:
            raise ParameterError("Quadrature tolerance must be positive")
        if any(not math.isfinite(x) for x in self.breakpoints):
            raise ParameterError("Quadrature breakpoints must be finite")

    def with_breakpoints(self, extra: Sequence[float]) -> "QuadratureSpec":
        return replace(self, breakpoints=tuple(self.breakpoints) + tuple(extra))

    def to_dict(self) -> dict:
        d = {
            "order": self.order,
            "max_intervals": self.max_intervals,
            "tolerance": self.tolerance,
        }
        if self.breakpoints:
            d["breakpoints"] = list(self.breakpoints)
        return d


class QuadResult(NamedTuple):
    value: np.ndarray
    error: float
    intervals: int


@lru_cache(maxsize=16)
def _rules(order: int) -> Tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """Return the nodes and weights of the n-point and 2n-point
    Gauss-Legendre rules on [-1, 1]"""
    x1, w1 = np.polynomial.legendre.leggauss(order)
    x2, w2 = np.polynomial.legendre.leggauss(2 * order)
    return x1, w1, x2, w2


def _panel(func: Integrand, lo: float, hi: float, order: int) -> Tuple[np.ndarray, float]:
    """Integrate func over [lo, hi] with the paired rules, returning the
    fine estimate and the coarse/fine discrepancy"""
    x1, w1, x2, w2 = _rules(order)
    half = 0.5 * (hi - lo)
    mid = 0.5 * (hi + lo)
    coarse = np.asarray(np.asarray(func(mid + half * x1)) @ w1 * half)
    fine = np.asarray(np.asarray(func(mid + half * x2)) @ w2 * half)
    err = float(np.max(np.abs(fine - coarse))) if np.size(fine) else 0.0
    return fine, err


def gauss_legendre(
    func: Integrand, lo: float, hi: float, spec: Optional[QuadratureSpec] = None
) -> QuadResult:
    """Adaptive Gauss-Legendre quadrature of func over the finite interval
    [lo, hi]. func may return any trailing-axis vectorized array; the error
    is the largest componentwise error estimate."""
    spec = spec or QuadratureSpec()
    if not (math.isfinite(lo) and math.isfinite(hi)):
        raise ParameterError("gauss_legendre() needs finite limits")
    if hi <= lo:
        if hi == lo:
            return QuadResult(np.asarray(func(np.array([lo]))[..., 0] * 0.0), 0.0, 0)
        r = gauss_legendre(func, hi, lo, spec)
        return QuadResult(-r.value, r.error, r.intervals)
    with np.errstate(over="ignore", invalid="ignore", divide="ignore"):
        value, err = _panel(func, lo, hi, spec.order)
        # Max-heap of panels keyed on error; the counter keeps ordering stable
        heap: List[Tuple[float, int, float, float, np.ndarray, float]] = [
            (-err, 0, lo, hi, value, err)
        ]
        total = value.copy()
        total_err = err
        count = 1
        while True:
            if not np.all(np.isfinite(total)) or not math.isfinite(total_err):
                raise QuadratureError(
                    "Integral over [{0}, {1}] is not finite".format(lo, hi)
                )
            scale = float(np.max(np.abs(total))) if np.size(total) else 0.0
            if total_err <= spec.tolerance * (1.0 + scale):
                break
            if len(heap) >= spec.max_intervals:
                raise QuadratureError(
                    "No convergence over [{0}, {1}] within {2} subintervals".format(
                        lo, hi, spec.max_intervals
                    ),
                    error=total_err,
                )
            _, _, a, b, v, e = heapq.heappop(heap)
            m = 0.5 * (a + b)
            vl, el = _panel(func, a, m, spec.order)
            vr, er = _panel(func, m, b, spec.order)
            total = total + vl + vr - v
            total_err += el + er - e
            heapq.heappush(heap, (-el, count, a, m, vl, el))
            heapq.heappush(heap, (-er, count + 1, m, b, vr, er))
            count += 2
        # Resum to shed the rounding of the running total
        total = sum((item[4] for item in heap[1:]), heap[0][4].copy())
        total_err = sum(item[5] for item in heap)
    if len(heap) > spec.max_intervals // 2:
        logger.warning(
            "Quadrature over [%g, %g] used %d of %d subintervals",
            lo,
            hi,
            len(heap),
            spec.max_intervals,
        )
    return QuadResult(total, total_err, len(heap))


def integrate(
    func: Integrand, lo: float, hi: float, spec: Optional[QuadratureSpec] = None
) -> QuadResult:
    """Integrate over [lo, hi], where one of the limits may be infinite.
    An infinite tail must start away from the origin: [L, inf) with L > 0
    or (-inf, -L] with L > 0."""
    if math.isfinite(lo) and math.isfinite(hi):
        return gauss_legendre(func, lo, hi, spec)
    if math.isfinite(lo) and hi == math.inf:
        if lo <= 0.0:
            raise ParameterError("Tail integrals must start at a positive point")
        L = lo

        def mapped(u: np.ndarray) -> np.ndarray:
            return np.asarray(func(L / u)) * (L / (u * u))

        return gauss_legendre(mapped, 0.0, 1.0, spec)
    if lo == -math.inf and math.isfinite(hi):
        if hi >= 0.0:
            raise ParameterError("Tail integrals must start at a negative point")
        L = -hi

        def mapped_neg(u: np.ndarray) -> np.ndarray:
            return np.asarray(func(-L / u)) * (L / (u * u))

        return gauss_legendre(mapped_neg, 0.0, 1.0, spec)
    raise ParameterError("Unsupported integration limits [{0}, {1}]".format(lo, hi))


def fourier_tail(
    rho: Integrand,
    lower: float,
    omegas: Sequence[float],
    spec: Optional[QuadratureSpec] = None,
) -> np.ndarray:
    """Return the Fourier integrals of a decaying density over a tail,
    int_lower^inf rho(p) exp(i omega p) dp, for each omega.
    omega = 0 is the plain mass of the tail."""
    spec = spec or QuadratureSpec()
    if lower <= 0.0:
        raise ParameterError("Fourier tails must start at a positive point")

    def scalar_rho(p: float) -> float:
        return float(rho(np.array([p]))[0])

    out = np.zeros(len(omegas), dtype=complex)
    mass: Optional[float] = None
    with warnings.catch_warnings():
        # QUADPACK reports trouble through warnings: make them errors
        warnings.simplefilter("error", IntegrationWarning)
        for ix, omega in enumerate(omegas):
            if omega == 0.0:
                if mass is None:
                    mass = float(integrate(rho, lower, math.inf, spec).value)
                out[ix] = mass
                continue
            w = abs(omega)
            try:
                re, _ = quad(
                    scalar_rho, lower, math.inf, weight="cos", wvar=w,
                    epsabs=spec.tolerance, limlst=200,
                )
                im, _ = quad(
                    scalar_rho, lower, math.inf, weight="sin", wvar=w,
                    epsabs=spec.tolerance, limlst=200,
                )
            except IntegrationWarning as e:
                raise QuadratureError(
                    "Fourier tail integral failed at omega = {0}: {1}".format(omega, e)
                )
            # sin is odd in omega, cos is even
            out[ix] = re + 1j * (im if omega > 0.0 else -im)
    return out
