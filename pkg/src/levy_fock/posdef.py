"""

    LevyFock: Lévy processes, cocycles and Fock space

    Positive definiteness module

    Copyright (C) 2026 LevyFock developers.

    This software is licensed under the MIT License, see LICENSE.txt.


    This module contains the finite-grid positivity machinery:

    * Gram matrices M_ij = sigma(-t_i, t_j) F(t_j - t_i) of a function F on
      the real line, optionally twisted by a multiplier sigma;
    * eigenvalue-based positive semidefiniteness verdicts;
    * continuous logarithm branches f = log F with f(0) = 0, obtained by
      unwrapping the phase outward from the origin;
    * the conditional matrix C_jk = f(t_k - t_j) - f(-t_j) - f(t_k), whose
      positivity is conditional positive definiteness of f;
    * the n-th root test of infinite divisibility: exp(f / n) must be
      positive definite for every n.

    A GridFunction holds values on an ordered grid. When it was produced
    from a Lévy triplet it can be evaluated anywhere; otherwise points off
    the grid are reached through the Hermitian symmetry F(-t) = conj F(t)
    and the normalization at t = 0.

"""

from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

import logging
import math
from dataclasses import dataclass, field

import numpy as np
from scipy import linalg

from .basics import (
    AliasingError,
    NonHermitianError,
    ParameterError,
    UnevaluableError,
    ZeroCrossingError,
)
from .exponent import LevyTriplet, char_fn_grid, eval_exponent_grid
from .settings import Settings


logger = logging.getLogger(__name__)

# A two-argument multiplier sigma(g, h) on the real line
Multiplier = Callable[[float, float], complex]

KINDS = ("charfn", "exponent")

# Relative tolerance used to match computed differences to grid points
_POINT_MATCH = 1e-9
# Ratio steps this close to pi are sign changes of F rather than aliasing
_SIGN_FLIP = 1e-6


class GridFunction:

    """A characteristic function F or exponent f sampled on an ordered grid"""

    def __init__(
        self,
        points: Sequence[float],
        values: Sequence[complex],
        kind: str = "charfn",
        source: Optional[LevyTriplet] = None,
    ) -> None:
        if kind not in KINDS:
            raise ParameterError("Grid function kind must be 'charfn' or 'exponent'")
        pts = np.asarray(points, dtype=float)
        vals = np.array(values, dtype=complex)
        if pts.ndim != 1 or vals.shape != pts.shape:
            raise ParameterError("Grid points and values must be 1-D and of equal length")
        if pts.size == 0:
            raise ParameterError("A grid function needs at least one point")
        if not np.all(np.isfinite(pts)) or not np.all(np.isfinite(vals)):
            raise ParameterError("Grid points and values must be finite")
        if np.any(np.diff(pts) <= 0.0):
            raise ParameterError("Grid points must be strictly increasing")
        self._points = pts
        self._kind = kind
        self._source = source
        # Exponent of the source is multiplied by this factor
        self._factor = 1.0
        # Exponent values of the source, keyed by the bytes of a point array
        self._memo: Dict[bytes, np.ndarray] = {}
        self._tol = _POINT_MATCH * max(1.0, float(np.max(np.abs(pts))))
        i0 = self.index_of(0.0)
        if i0 is not None:
            unit = self.unit
            if abs(vals[i0] - unit) > 1e-9:
                raise ParameterError(
                    "A grid {0} must equal {1} at t = 0, not {2}".format(
                        "characteristic function" if kind == "charfn" else "exponent",
                        unit.real,
                        vals[i0],
                    )
                )
            vals[i0] = unit
        self._values = vals

    @classmethod
    def from_triplet(
        cls, trip: LevyTriplet, points: Sequence[float], kind: str = "charfn"
    ) -> "GridFunction":
        """Sample char_fn (or eval_exponent) of a triplet on a grid"""
        pts = np.asarray(points, dtype=float)
        vals = char_fn_grid(trip, pts) if kind == "charfn" else eval_exponent_grid(trip, pts)
        return cls(pts, vals, kind, trip)

    @property
    def points(self) -> np.ndarray:
        return self._points

    @property
    def values(self) -> np.ndarray:
        return self._values

    @property
    def kind(self) -> str:
        return self._kind

    @property
    def source(self) -> Optional[LevyTriplet]:
        """The triplet whose exponent (or its exponential) this function samples"""
        if self._source is None or self._factor == 1.0:
            return self._source
        return self._source.scaled(self._factor)

    @property
    def unit(self) -> complex:
        """The value at t = 0: 1 for F, 0 for f"""
        return 1.0 + 0j if self._kind == "charfn" else 0j

    def __len__(self) -> int:
        return len(self._points)

    def index_of(self, t: float) -> Optional[int]:
        ix = self._locate(np.array([t]))[0]
        return None if ix < 0 else int(ix)

    def _locate(self, ts: np.ndarray) -> np.ndarray:
        """Index of the grid point matching each t, or -1"""
        pts = self._points
        ix = np.clip(np.searchsorted(pts, ts), 1, max(len(pts) - 1, 1))
        lo = np.clip(ix - 1, 0, len(pts) - 1)
        hi = np.clip(ix, 0, len(pts) - 1)
        use_hi = np.abs(pts[hi] - ts) < np.abs(pts[lo] - ts)
        best = np.where(use_hi, hi, lo)
        return np.where(np.abs(pts[best] - ts) <= self._tol, best, -1)

    def evaluate(self, ts: Sequence[float]) -> np.ndarray:
        """Return the function at arbitrary points, raising UnevaluableError
        if a point is neither on the grid nor reachable by symmetry"""
        t = np.asarray(ts, dtype=float)
        shape = t.shape
        t = t.ravel()
        if self._source is not None:
            unique, inverse = np.unique(t, return_inverse=True)
            key = unique.tobytes()
            f = self._memo.get(key)
            if f is None:
                f = eval_exponent_grid(self._source, unique)
                self._memo[key] = f
            vals = self._factor * f
            if self._kind == "charfn":
                vals = np.exp(vals)
            return vals[inverse].reshape(shape)
        out = np.empty(t.shape, dtype=complex)
        direct = self._locate(t)
        mirror = self._locate(-t)
        for k in range(len(t)):
            if direct[k] >= 0:
                out[k] = self._values[direct[k]]
            elif mirror[k] >= 0:
                out[k] = np.conj(self._values[mirror[k]])
            elif abs(t[k]) <= self._tol:
                out[k] = self.unit
            else:
                raise UnevaluableError(
                    "The grid function cannot be evaluated at t = {0!r}".format(float(t[k])),
                    t=float(t[k]),
                )
        return out.reshape(shape)

    def exp(self) -> "GridFunction":
        """exp f as a characteristic function"""
        if self._kind != "exponent":
            raise ParameterError("exp() applies to exponent grid functions")
        return self._derive(np.exp(self._values), "charfn", self._factor)

    def scaled(self, c: float) -> "GridFunction":
        """c * f, for an exponent grid function and c > 0"""
        if self._kind != "exponent":
            raise ParameterError("scaled() applies to exponent grid functions")
        if not c > 0.0:
            raise ParameterError("An exponent can only be scaled by c > 0")
        return self._derive(c * self._values, "exponent", c * self._factor)

    def _derive(self, values: np.ndarray, kind: str, factor: float) -> "GridFunction":
        g = GridFunction(self._points, values, kind, self._source)
        g._factor = factor
        # Derived functions share the exponent values of the source
        g._memo = self._memo
        return g

    def __repr__(self) -> str:
        return "<GridFunction {0} on {1} points{2}>".format(
            self._kind, len(self), " (triplet)" if self._source is not None else ""
        )


@dataclass(frozen=True)
class PsdVerdict:

    """The outcome of an eigenvalue positivity test"""

    is_psd: bool
    min_eigenvalue: float
    # Largest |eigenvalue|
    scale: float
    tolerance: float
    eigenvalues: np.ndarray = field(
        default_factory=lambda: np.zeros(0), compare=False, repr=False
    )

    def to_dict(self) -> Dict[str, Any]:
        return {
            "pass": self.is_psd,
            "min_eigenvalue": self.min_eigenvalue,
            "scale": self.scale,
            "tolerance": self.tolerance,
        }


def _require_hermitian(m: np.ndarray, tol: float, what: str) -> None:
    scale = max(1.0, float(np.max(np.abs(m)))) if m.size else 1.0
    dev = float(np.max(np.abs(m - m.conj().T))) if m.size else 0.0
    if dev > tol * scale:
        raise NonHermitianError(
            "The {0} is not Hermitian: deviation {1:.3g}".format(what, dev),
            deviation=dev,
        )


def _differences(points: np.ndarray) -> np.ndarray:
    """[i, j] -> t_j - t_i"""
    return points[np.newaxis, :] - points[:, np.newaxis]


def _sigma_matrix(sigma: Multiplier, s: np.ndarray, t: np.ndarray) -> np.ndarray:
    return np.vectorize(sigma, otypes=[complex])(s, t)


def gram(F: GridFunction, sigma: Optional[Multiplier] = None) -> np.ndarray:
    """Return the (sigma-twisted) Gram matrix sigma(-t_i, t_j) F(t_j - t_i)"""
    if F.kind != "charfn":
        raise ParameterError("gram() needs a characteristic function, not an exponent")
    pts = F.points
    m = F.evaluate(_differences(pts))
    if sigma is not None:
        m = m * _sigma_matrix(sigma, -pts[:, np.newaxis], pts[np.newaxis, :])
    _require_hermitian(m, Settings.HERMITIAN_TOL, "Gram matrix")
    return m


def psd_check(m: np.ndarray, tol: Optional[float] = None) -> PsdVerdict:
    """Test a Hermitian matrix for positive semidefiniteness: the smallest
    eigenvalue may not fall below -tol * max(1, largest |eigenvalue|)"""
    tol = Settings.PSD_TOL if tol is None else tol
    m = np.asarray(m)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ParameterError("psd_check() needs a square matrix")
    if m.size == 0:
        return PsdVerdict(True, 0.0, 0.0, tol)
    _require_hermitian(m, 1e-10, "matrix")
    eig = linalg.eigvalsh(m)
    lo = float(eig[0])
    scale = float(np.max(np.abs(eig)))
    return PsdVerdict(lo >= -tol * max(1.0, scale), lo, scale, tol, eig)


def log_branch(
    F: GridFunction,
    floor: Optional[float] = None,
    max_step: Optional[float] = None,
) -> GridFunction:
    """Return the continuous branch f of log F with f(0) = 0, unwrapping
    the phase from 0 outward in both directions"""
    if F.kind != "charfn":
        raise ParameterError("log_branch() needs a characteristic function")
    floor = Settings.BRANCH_FLOOR if floor is None else floor
    max_step = Settings.MAX_PHASE_STEP if max_step is None else max_step
    i0 = F.index_of(0.0)
    if i0 is None:
        raise UnevaluableError("log_branch() needs t = 0 on the grid")
    pts, vals = F.points, F.values
    modulus = np.abs(vals)
    low = np.flatnonzero(modulus <= floor)
    if low.size:
        t = float(pts[low[0]])
        raise ZeroCrossingError(
            "|F({0!r})| = {1:.3g} is at or below the branch floor".format(
                t, modulus[low[0]]
            ),
            t=t,
        )
    phase = np.zeros(len(pts))

    def step(j: int, k: int) -> float:
        # Phase increment from t_k to its neighbour t_j
        d = float(np.angle(vals[j] / vals[k]))
        if abs(abs(d) - math.pi) <= _SIGN_FLIP:
            raise ZeroCrossingError(
                "F changes sign between t = {0!r} and t = {1!r}".format(
                    float(pts[k]), float(pts[j])
                ),
                t=float(pts[j]),
            )
        if abs(d) >= max_step:
            raise AliasingError(
                "Phase step {0:.3g} between t = {1!r} and t = {2!r} "
                "reaches {3:.3g}".format(d, float(pts[k]), float(pts[j]), max_step),
                t=float(pts[j]),
            )
        return d

    for j in range(i0 + 1, len(pts)):
        phase[j] = phase[j - 1] + step(j, j - 1)
    for j in range(i0 - 1, -1, -1):
        phase[j] = phase[j + 1] + step(j, j + 1)
    f = np.log(modulus) + 1j * phase
    f[i0] = 0.0
    return GridFunction(pts, f, "exponent", F.source)


def conditional_matrix(f: GridFunction) -> np.ndarray:
    """Return C_jk = f(t_k - t_j) - f(-t_j) - f(t_k)"""
    if f.kind != "exponent":
        raise ParameterError("conditional_matrix() needs an exponent grid function")
    pts = f.points
    diff = f.evaluate(_differences(pts))
    neg = f.evaluate(-pts)
    at = f.evaluate(pts)
    c = diff - neg[:, np.newaxis] - at[np.newaxis, :]
    _require_hermitian(c, Settings.HERMITIAN_TOL, "conditional matrix")
    return c


def conditional_psd_check(f: GridFunction, tol: Optional[float] = None) -> PsdVerdict:
    """Test f for conditional positive semidefiniteness on its grid"""
    return psd_check(conditional_matrix(f), tol)


@dataclass
class DivisibilityReport:

    """Per-n positivity verdicts of the n-th roots of F"""

    verdicts: List[Tuple[int, PsdVerdict]]
    passed: bool
    # Set when the logarithm branch could not be formed
    failure: Optional[str] = None

    def to_dict(self) -> Dict[str, Any]:
        d: Dict[str, Any] = {
            "pass": self.passed,
            "verdicts": [
                {
                    "n": n,
                    "min_eigenvalue": v.min_eigenvalue,
                    "scale": v.scale,
                    "pass": v.is_psd,
                }
                for n, v in self.verdicts
            ],
        }
        if self.failure:
            d["failure"] = self.failure
        return d


def infinite_divisibility_check(
    F: GridFunction, n_max: int, tol: Optional[float] = None
) -> DivisibilityReport:
    """Test exp(f / n) for positive definiteness for n = 1..n_max.
    A zero of F counts as a failure of divisibility."""
    if n_max < 1:
        raise ParameterError("n_max must be at least 1")
    try:
        f = log_branch(F)
    except ZeroCrossingError as e:
        logger.debug("Divisibility fails at the branch: %s", e)
        return DivisibilityReport([], False, str(e))
    verdicts: List[Tuple[int, PsdVerdict]] = []
    for n in range(1, n_max + 1):
        root = f.scaled(1.0 / n).exp()
        verdicts.append((n, psd_check(gram(root), tol)))
    return DivisibilityReport(verdicts, all(v.is_psd for _, v in verdicts))


def multiplier_residual(sigma: Multiplier, points: Sequence[float]) -> float:
    """Return the largest deviation of sigma from a normalized, unit-modulus
    two-cocycle on the grid: sigma(0, g) = sigma(g, 0) = 1 and
    sigma(g, h) sigma(g + h, k) = sigma(g, h + k) sigma(h, k)"""
    pts = np.asarray(points, dtype=float)
    sig = np.vectorize(sigma, otypes=[complex])
    g = pts[:, None]
    h = pts[None, :]
    zero = np.zeros_like(pts)
    res = max(
        float(np.max(np.abs(sig(zero, pts) - 1.0))),
        float(np.max(np.abs(sig(pts, zero) - 1.0))),
        float(np.max(np.abs(np.abs(sig(g, h)) - 1.0))),
    )
    gg = pts[:, None, None]
    hh = pts[None, :, None]
    kk = pts[None, None, :]
    lhs = sig(gg, hh) * sig(gg + hh, kk)
    rhs = sig(gg, hh + kk) * sig(hh, kk)
    return max(res, float(np.max(np.abs(lhs - rhs))))


def coboundary_multiplier(beta: Callable[[float], complex]) -> Multiplier:
    """Return sigma(g, h) = beta(g + h) / (beta(g) beta(h))"""

    def sigma(g: float, h: float) -> complex:
        return complex(beta(g + h) / (beta(g) * beta(h)))

    return sigma
