"""

    LevyFock: Lévy processes, cocycles and Fock space

    Truncated Fock space module

    Copyright (C) 2026 LevyFock developers.

    This software is licensed under the MIT License, see LICENSE.txt.


    The symmetric Fock space over an r-dimensional one-particle space is
    the direct sum of its symmetric tensor powers. Its coherent vectors

        EXP psi = sum_n psi^{(x)n} / n!

    satisfy <EXP psi, EXP phi> = exp <psi, phi>. Given a cocycle psi of a
    Lévy exponent f, with kernel K(s, t) = <psi(s), psi(t)>, the operators

        W(h) EXP psi(g) = F(h + g) / F(g) EXP psi(h + g)

    form a unitary representation whose vacuum expectation is F = exp f.

    Two computation paths are kept apart here. Matrix elements of W(h)
    between coherent vectors are computed at the Gram level, from exp K and
    ratios of F, with no truncation at all. Materialized coherent vectors,
    truncated at a degree N, are only used to check the exponential inner
    product identity and the graded indexing.

    The graded basis of degree n consists of the multisets of size n drawn
    from {0, ..., r - 1}, as nondecreasing index tuples, in colexicographic
    order; the orthonormal basis vector of a multiset with occupation
    numbers m_i carries the coefficient prod psi_i^{m_i} / sqrt(prod m_i!)
    in EXP psi.

"""

from typing import Any, Dict, List, NamedTuple, Optional, Sequence, Tuple

import itertools
import logging
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.special import gammaln

from .basics import (
    ConsistencyError,
    ParameterError,
    TruncationOverflowError,
    VanishingCharFnError,
)
from .exponent import LevyTriplet, eval_exponent_grid
from .gns import CocycleRealization, kernel_values
from .settings import Settings


logger = logging.getLogger(__name__)

# Agreement required between the series and the coefficient contraction
_CONTRACTION_TOL = 1e-12


def fock_dimension(r: int, degree: int) -> int:
    """sum_{n=0..degree} C(r + n - 1, n)"""
    if r == 0:
        return 1
    return sum(math.comb(r + n - 1, n) for n in range(degree + 1))


@lru_cache(maxsize=64)
def _multisets(r: int, n: int) -> np.ndarray:
    """The multisets of size n from range(r), one per row, in colex order"""
    if n == 0:
        return np.zeros((1, 0), dtype=np.intp)
    rows = np.array(
        list(itertools.combinations_with_replacement(range(r), n)), dtype=np.intp
    ).reshape(-1, n)
    # lexsort takes its primary key last: the last index decides first
    return rows[np.lexsort(rows.T)]


class TruncatedFock:

    """The symmetric Fock space over C^r, truncated at degree N"""

    def __init__(self, r: int, degree: int, budget: Optional[int] = None) -> None:
        if r < 0 or degree < 0:
            raise ParameterError("Fock space dimension and degree must be nonnegative")
        budget = Settings.FOCK_DIMENSION_BUDGET if budget is None else budget
        self._r = r
        self._degree = degree
        self._dimension = fock_dimension(r, degree)
        if self._dimension > budget:
            raise TruncationOverflowError(
                "Truncated Fock space of rank {0} and degree {1} has dimension {2}, "
                "above the budget of {3}".format(r, degree, self._dimension, budget),
                dimension=self._dimension,
                budget=budget,
            )

    @property
    def r(self) -> int:
        return self._r

    @property
    def degree(self) -> int:
        return self._degree

    @property
    def dimension(self) -> int:
        return self._dimension

    def graded(self, n: int) -> np.ndarray:
        """The degree-n basis multisets, in colex order"""
        if self._r == 0:
            return _multisets(0, 0) if n == 0 else np.zeros((0, n), dtype=np.intp)
        return _multisets(self._r, n)

    def basis(self) -> List[Tuple[int, ...]]:
        """All basis multisets, by degree, each degree in colex order"""
        return [
            tuple(int(i) for i in row)
            for n in range(self._degree + 1)
            for row in self.graded(n)
        ]

    def occupations(self, n: int) -> np.ndarray:
        """Occupation numbers m_i of the degree-n basis multisets"""
        rows = self.graded(n)
        if self._r == 0:
            return np.zeros((len(rows), 0), dtype=np.intp)
        return np.stack([np.sum(rows == i, axis=1) for i in range(self._r)], axis=1).reshape(
            len(rows), self._r
        )

    def __repr__(self) -> str:
        return "<TruncatedFock r={0} N={1} dim={2}>".format(
            self._r, self._degree, self._dimension
        )


@dataclass(frozen=True)
class CoherentVector:

    """EXP psi in the orthonormal graded basis, truncated at a degree"""

    psi: np.ndarray
    fock: TruncatedFock
    coefficients: np.ndarray

    @property
    def degree(self) -> int:
        return self.fock.degree

    def norm2(self) -> float:
        return float(np.vdot(self.coefficients, self.coefficients).real)


def coherent_vector(psi: Sequence[complex], degree: int, budget: Optional[int] = None) -> CoherentVector:
    """Materialize the truncated coherent vector EXP psi"""
    v = np.asarray(psi, dtype=complex).ravel()
    fock = TruncatedFock(len(v), degree, budget)
    parts: List[np.ndarray] = []
    for n in range(degree + 1):
        rows = fock.graded(n)
        if not len(rows):
            continue
        m = fock.occupations(n)
        log_norm = 0.5 * np.sum(gammaln(m + 1.0), axis=1)
        parts.append(np.prod(v[rows], axis=1) * np.exp(-log_norm))
    return CoherentVector(v, fock, np.concatenate(parts))


class CoherentInner(NamedTuple):
    # sum_{n <= N} <psi, phi>^n / n!
    value: complex
    # Bound on |value - exp <psi, phi>|
    bound: float


def truncation_bound(norm_psi: float, norm_phi: float, degree: int) -> float:
    """(|psi| |phi|)^(N+1) / (N+1)! * exp(|psi| |phi|)"""
    x = norm_psi * norm_phi
    if x == 0.0:
        return 0.0
    return math.exp((degree + 1) * math.log(x) - math.lgamma(degree + 2) + x)


def coherent_inner(
    psi: Sequence[complex], phi: Sequence[complex], degree: int, budget: Optional[int] = None
) -> CoherentInner:
    """<EXP psi, EXP phi> truncated at degree N, by the power series and by
    contracting the materialized coefficient arrays"""
    if degree < 0:
        raise ParameterError("The truncation degree must be nonnegative")
    x = np.asarray(psi, dtype=complex).ravel()
    y = np.asarray(phi, dtype=complex).ravel()
    if x.shape != y.shape:
        raise ParameterError("Coherent vectors must live in the same one-particle space")
    z = complex(np.vdot(x, y))
    nx, ny = float(np.linalg.norm(x)), float(np.linalg.norm(y))
    term = 1.0 + 0j
    series = term
    # Scale of the terms summed by the contraction
    magnitude = bound_term = 1.0
    for n in range(1, degree + 1):
        term *= z / n
        series += term
        bound_term *= nx * ny / n
        magnitude += bound_term
    contraction = complex(
        np.vdot(
            coherent_vector(x, degree, budget).coefficients,
            coherent_vector(y, degree, budget).coefficients,
        )
    )
    if abs(series - contraction) > _CONTRACTION_TOL * magnitude:
        raise ConsistencyError(
            "Coherent inner product: series {0} and contraction {1} disagree".format(
                series, contraction
            )
        )
    bound = truncation_bound(nx, ny, degree)
    return CoherentInner(series, bound)


def _ratios(trip: LevyTriplet, points: np.ndarray, shifted: np.ndarray) -> np.ndarray:
    """c_k = F(shifted_k) / F(points_k), through the exponent"""
    f = eval_exponent_grid(trip, np.concatenate([points, shifted]))
    base, moved = f[: len(points)], f[len(points) :]
    floor = math.log(Settings.BRANCH_FLOOR)
    low = np.flatnonzero(base.real <= floor)
    if low.size:
        t = float(points[low[0]])
        raise VanishingCharFnError(
            "|F({0!r})| is below the branch floor".format(t), t=t
        )
    return np.exp(moved - base)


def _coherent_elements(trip: LevyTriplet, left: np.ndarray, right: np.ndarray) -> np.ndarray:
    """exp K(left_j, right_k)"""
    s, t = np.meshgrid(left, right, indexing="ij")
    return np.exp(kernel_values(trip, s, t))


def _grid(grid: Sequence[float]) -> np.ndarray:
    pts = np.asarray(grid, dtype=float).ravel()
    if pts.size == 0:
        raise ParameterError("The grid must not be empty")
    return pts


def weyl_gram(trip: LevyTriplet, grid: Sequence[float], h: float) -> np.ndarray:
    """Matrix elements <EXP psi(t_j), W(h) EXP psi(t_k)>
    = F(h + t_k) / F(t_k) * exp K(t_j, h + t_k)"""
    pts = _grid(grid)
    shifted = h + pts
    c = _ratios(trip, pts, shifted)
    return _coherent_elements(trip, pts, shifted) * c[np.newaxis, :]


def coherent_gram(trip: LevyTriplet, grid: Sequence[float]) -> np.ndarray:
    """The Gram matrix exp K(t_j, t_k) of the coherent vectors"""
    return _coherent_elements(trip, _grid(grid), _grid(grid))


def weyl_unitarity_residual(trip: LevyTriplet, grid: Sequence[float], h: float) -> float:
    """max |conj(c_j) c_k exp K(h + t_j, h + t_k) - exp K(t_j, t_k)|"""
    pts = _grid(grid)
    shifted = h + pts
    c = _ratios(trip, pts, shifted)
    moved = _coherent_elements(trip, shifted, shifted) * np.outer(c.conj(), c)
    return float(np.max(np.abs(moved - _coherent_elements(trip, pts, pts))))


def vacuum_expectation(trip: LevyTriplet, t: float) -> complex:
    """<EXP psi(0), W(t) EXP psi(0)>, which is F(t) since psi(0) = 0"""
    return complex(weyl_gram(trip, [0.0], t)[0, 0])


def representation_residual(
    trip: LevyTriplet, grid: Sequence[float], h1: float, h2: float
) -> float:
    """Largest deviation between the matrix elements of W(h1) W(h2) and of
    W(h1 + h2) between coherent vectors on the grid"""
    pts = _grid(grid)
    mid = h2 + pts
    end = h1 + mid
    composed = _ratios(trip, pts, mid) * _ratios(trip, mid, end)
    direct_end = (h1 + h2) + pts
    direct = _ratios(trip, pts, direct_end)
    left = _coherent_elements(trip, pts, end) * composed[np.newaxis, :]
    right = _coherent_elements(trip, pts, direct_end) * direct[np.newaxis, :]
    return float(np.max(np.abs(left - right)))


@dataclass(frozen=True)
class CoherentSpan:

    """Truncated coherent vectors EXP psi(t_j) of a cocycle realization,
    with their Gram matrix against the exact exp K"""

    grid: np.ndarray
    fock: TruncatedFock
    # One row of graded coefficients per grid point
    vectors: np.ndarray
    gram: np.ndarray
    exact: np.ndarray
    bounds: np.ndarray

    @property
    def excess(self) -> float:
        """max(|gram - exact| - bound); nonpositive when every entry is within its bound"""
        return float(np.max(np.abs(self.gram - self.exact) - self.bounds))

    @property
    def within_bound(self) -> bool:
        return self.excess <= 1e-12 * max(1.0, float(np.max(np.abs(self.exact))))

    def to_dict(self) -> Dict[str, Any]:
        return {
            "rank": self.fock.r,
            "degree": self.fock.degree,
            "dimension": self.fock.dimension,
            "excess": self.excess,
            "within_bound": self.within_bound,
        }


def embedding_gram(
    real: CocycleRealization, degree: Optional[int] = None, budget: Optional[int] = None
) -> CoherentSpan:
    """Materialize EXP psi(t_j) for every grid point and compare their
    truncated Gram matrix with exp K, entry by entry"""
    degree = Settings.FOCK_DEGREE if degree is None else degree
    rows = [coherent_vector(v, degree, budget) for v in real.vectors]
    fock = rows[0].fock if rows else TruncatedFock(real.rank, degree, budget)
    vectors = np.array([row.coefficients for row in rows])
    gram = vectors.conj() @ vectors.T
    exact = np.exp(real.gram())
    norms = real.norms()
    bounds = np.array(
        [[truncation_bound(float(x), float(y), degree) for y in norms] for x in norms]
    )
    logger.debug("Embedded %d coherent vectors in %r", len(rows), fock)
    return CoherentSpan(real.grid, fock, vectors, gram, exact, bounds)
