"""

    LevyFock: Lévy processes, cocycles and Fock space

    Sampler module

    Copyright (C) 2026 LevyFock developers.

    This software is licensed under the MIT License, see LICENSE.txt.


    This module draws increments and paths of the Lévy process with a
    given triplet, and compares their empirical characteristic function
    with exp(T f(t)).

    Sampling always works from the Levy form of the triplet. An increment
    over dt is

        b_eff dt + sqrt((a + s2) dt) N(0, 1)
            + sum over atoms k of p_k Poisson(w_k dt)
            + sum of Poisson(L dt) jumps drawn from the density on |p| >= delta

    where L = nu{|p| >= delta} for the density part, s2 is the density's
    variance below delta (the small jumps, replaced by a Gaussian of the
    same variance) and

        b_eff = b - int_{big} p / (1 + p^2) dnu + int_{|p| < delta} p^3 / (1 + p^2) dnu

    compensates both the big jumps and the small-jump substitution, so that
    the increments have characteristic function exp(dt f(t)) up to the
    small-jump approximation. Atoms are always sampled exactly.

    Random streams: numpy's counter-based Philox generator, seeded with
    numpy.random.SeedSequence(seed, spawn_key=(stream, block)). Increments
    are drawn in blocks of a fixed size, each block from its own stream, so
    that results do not depend on how blocks are scheduled.

"""

from typing import Any, Dict, List, NamedTuple, Optional, Sequence

import logging
import math
from dataclasses import dataclass, field

import numpy as np

from .basics import ConsistencyError, ParameterError, SamplingError
from .exponent import Convention, LevyTriplet, convert, eval_exponent_grid
from .settings import Settings


logger = logging.getLogger(__name__)

# Agreement required between prod F(g_j) and exp(sum f(g_j))
_PRODUCT_TOL = 1e-10


class _Plan(NamedTuple):

    """Everything needed to draw increments, per unit time"""

    b_eff: float
    variance: float
    atom_p: np.ndarray
    atom_w: np.ndarray
    # Rate of density jumps with |p| >= delta
    big_rate: float
    triplet: LevyTriplet
    delta: float


def _plan(trip: LevyTriplet, delta: float) -> _Plan:
    if delta < 0.0 or not math.isfinite(delta):
        raise ParameterError("The small-jump threshold delta must be finite and >= 0")
    lev = convert(trip, Convention.LEVY)
    nu = lev.nu
    p, w = nu.atom_positions, nu.atom_weights
    b_eff = lev.b - float(np.sum(w * p / (1.0 + p * p)))
    variance = lev.a
    big_rate = 0.0
    if nu.density is not None:
        if delta == 0.0 and nu.density.infinite_activity:
            raise SamplingError(
                "The density has infinitely many small jumps: delta must be positive"
            )
        dens = nu.density_only()
        big_rate = dens.moment(("tail_mass", delta))
        small_var = dens.moment(("trunc_var", delta)) if delta > 0.0 else 0.0
        variance += small_var
        b_eff += dens.moment(("trunc_p3_over_1p2", delta)) - dens.moment(
            ("tail_p_over_1p2", delta)
        )
        logger.debug(
            "Sampler: delta = %g, big jump rate %.6g, small jump variance %.6g",
            delta,
            big_rate,
            small_var,
        )
    logger.debug("Sampler: effective drift %.17g, Gaussian variance %.17g", b_eff, variance)
    return _Plan(b_eff, variance, p, w, big_rate, trip, delta)


def _stream(seed: int, stream: int, block: int) -> np.random.Generator:
    ss = np.random.SeedSequence(seed, spawn_key=(stream, block))
    return np.random.Generator(np.random.Philox(ss))


def _draw_block(plan: _Plan, rng: np.random.Generator, dt: float, size: int) -> np.ndarray:
    x = np.full(size, plan.b_eff * dt)
    if plan.variance > 0.0:
        x += math.sqrt(plan.variance * dt) * rng.standard_normal(size)
    if plan.atom_p.size:
        counts = rng.poisson(plan.atom_w * dt, size=(size, plan.atom_p.size))
        x += counts @ plan.atom_p
    if plan.big_rate > 0.0:
        density = plan.triplet.nu.density
        assert density is not None
        n = rng.poisson(plan.big_rate * dt, size=size)
        total = int(n.sum())
        if total:
            jumps = density.sample(rng, total, plan.delta)
            owner = np.repeat(np.arange(size), n)
            x += np.bincount(owner, weights=jumps, minlength=size)
    return x


def sample_increments(
    trip: LevyTriplet,
    dt: float,
    count: int,
    seed: int,
    delta: Optional[float] = None,
    stream: int = 0,
) -> np.ndarray:
    """Draw count i.i.d. increments X(t + dt) - X(t)"""
    delta = Settings.SAMPLER_DELTA if delta is None else delta
    if count < 1:
        raise ParameterError("The sample count must be at least 1")
    if not dt > 0.0:
        raise ParameterError("The time step dt must be positive")
    if seed < 0:
        raise ParameterError("The seed must be nonnegative")
    plan = _plan(trip, delta)
    block_size = Settings.SAMPLER_BLOCK_SIZE
    blocks: List[np.ndarray] = []
    for block, start in enumerate(range(0, count, block_size)):
        size = min(block_size, count - start)
        blocks.append(_draw_block(plan, _stream(seed, stream, block), dt, size))
    return np.concatenate(blocks)


@dataclass(frozen=True)
class SamplePath:

    """A discretized path with X(0) = 0 and i.i.d. increments"""

    times: np.ndarray
    values: np.ndarray
    seed: int
    triplet: LevyTriplet = field(compare=False)
    delta: float


def sample_path(
    trip: LevyTriplet,
    horizon: float,
    steps: int,
    seed: int,
    delta: Optional[float] = None,
) -> SamplePath:
    """Sample one path on an equidistant grid of steps intervals over [0, horizon]"""
    delta = Settings.SAMPLER_DELTA if delta is None else delta
    if steps < 1:
        raise ParameterError("A path needs at least one step")
    inc = sample_increments(trip, horizon / steps, steps, seed, delta)
    times = np.linspace(0.0, horizon, steps + 1)
    values = np.concatenate([[0.0], np.cumsum(inc)])
    return SamplePath(times, values, seed, trip, delta)


def sample_terminal(
    trip: LevyTriplet,
    horizon: float,
    count: int,
    seed: int,
    delta: Optional[float] = None,
    steps: int = 1,
    stream: int = 0,
) -> np.ndarray:
    """X(horizon) for count independent paths of steps increments each"""
    if steps < 1:
        raise ParameterError("A path needs at least one step")
    inc = sample_increments(trip, horizon / steps, count * steps, seed, delta, stream)
    return inc.reshape(count, steps).sum(axis=1)


@dataclass(frozen=True)
class EcfReport:

    """The empirical characteristic function of a sample on a t grid"""

    tgrid: np.ndarray
    values: np.ndarray
    n: int
    radius: np.ndarray

    def deviation(self, target: Sequence[complex]) -> float:
        return float(np.max(np.abs(self.values - np.asarray(target))))


def ecf(samples: Sequence[float], tgrid: Sequence[float]) -> EcfReport:
    """ECF(t) = (1/n) sum_k exp(i t X_k), with confidence radius
    ecf_radius / sqrt(n)"""
    x = np.asarray(samples, dtype=float).ravel()
    t = np.asarray(tgrid, dtype=float).ravel()
    n = x.size
    if n == 0:
        raise SamplingError("The empirical characteristic function needs samples")
    values = np.empty(t.size, dtype=complex)
    for j, tj in enumerate(t):
        if tj == 0.0:
            values[j] = 1.0
            continue
        phase = tj * x
        values[j] = complex(np.mean(np.cos(phase)), np.mean(np.sin(phase)))
    radius = np.full(t.size, Settings.ECF_RADIUS / math.sqrt(n))
    return EcfReport(t, values, n, radius)


@dataclass(frozen=True)
class EcfComparison:

    """An ECF against the characteristic function exp(T f(t))"""

    report: EcfReport
    target: np.ndarray
    deviation: float
    bound: float
    horizon: float

    @property
    def passed(self) -> bool:
        return self.deviation <= self.bound

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": self.report.n,
            "horizon": self.horizon,
            "max_deviation": self.deviation,
            "bound": self.bound,
            "pass": self.passed,
        }


def ecf_compare(
    trip: LevyTriplet,
    tgrid: Sequence[float],
    count: int,
    seed: int,
    delta: Optional[float] = None,
    horizon: float = 1.0,
    multiplier: Optional[float] = None,
) -> EcfComparison:
    """Sample X(horizon) count times and compare the ECF with exp(T f(t));
    the comparison passes within multiplier / sqrt(count)"""
    multiplier = Settings.ECF_MULTIPLIER if multiplier is None else multiplier
    samples = sample_terminal(trip, horizon, count, seed, delta)
    report = ecf(samples, tgrid)
    target = np.exp(horizon * eval_exponent_grid(trip, report.tgrid))
    return EcfComparison(
        report,
        target,
        report.deviation(target),
        multiplier / math.sqrt(count),
        horizon,
    )


def product_charfn(trip: LevyTriplet, g_list: Sequence[float]) -> complex:
    """The characteristic function of the tensor power at (g_1, ..., g_n),
    prod F(g_j), checked against exp(sum f(g_j))"""
    g = np.asarray(g_list, dtype=float).ravel()
    if g.size == 0:
        return 1.0 + 0j
    f = eval_exponent_grid(trip, g)
    product = complex(np.prod(np.exp(f)))
    direct = complex(np.exp(np.sum(f)))
    if abs(product - direct) > _PRODUCT_TOL * max(1.0, abs(direct)):
        raise ConsistencyError(
            "Product of characteristic function values {0} differs from "
            "exp of the summed exponent {1}".format(product, direct)
        )
    return product


class DivisibilityInLaw(NamedTuple):
    # max |ECF of dt increments - ECF of sums of two dt/2 increments|
    deviation: float
    bound: float
    passed: bool


def divisibility_in_law(
    trip: LevyTriplet,
    dt: float,
    count: int,
    seed: int,
    tgrid: Sequence[float],
    delta: Optional[float] = None,
) -> DivisibilityInLaw:
    """Compare increments over dt with sums of two independent increments
    over dt / 2, drawn from separate streams"""
    whole = sample_increments(trip, dt, count, seed, delta, stream=0)
    halves = sample_terminal(trip, dt, count, seed, delta, steps=2, stream=1)
    dev = float(np.max(np.abs(ecf(whole, tgrid).values - ecf(halves, tgrid).values)))
    bound = 6.0 / math.sqrt(count)
    return DivisibilityInLaw(dev, bound, dev <= bound)
