"""

    LevyFock: Lévy processes, cocycles and Fock space

    Cocycle kernel and GNS realization module

    Copyright (C) 2026 LevyFock developers.

    This software is licensed under the MIT License, see LICENSE.txt.


    A conditionally positive definite exponent f defines the kernel

        K(s, t) = f(t - s) - f(-s) - f(t)

    which is positive semidefinite and is the Gram kernel of a one-cocycle
    psi: for a triplet (b, a, nu) it has the closed form

        K(s, t) = a s t + int (e^{-ips} - 1)(e^{ipt} - 1) dnu(p),

    independent of b and of the centering convention.

    This module builds K on finite grids, realizes psi as concrete vectors
    of a finite-rank space by eigendecomposition, checks the shift
    covariance that makes V(h) psi(g) = psi(g + h) - psi(h) unitary, and
    measures how far psi is from a coboundary psi(g) = (V(g) - I) psi0.

    The inner product <x, y> is conjugate linear in x.

"""

from typing import NamedTuple, Optional, Sequence, Tuple, Union

import logging
import math
from dataclasses import dataclass, field

import numpy as np
from scipy import linalg

from .basics import NotPsdError, ParameterError, UnevaluableError
from .exponent import LevyMeasure, LevyTriplet
from .posdef import GridFunction, conditional_matrix
from .settings import Settings


logger = logging.getLogger(__name__)

KernelSource = Union[LevyTriplet, GridFunction]

# Relative tolerance for grid arithmetic (equal steps, shifts on the grid)
_GRID_MATCH = 1e-9


@dataclass(frozen=True)
class KernelMatrix:

    """The cocycle kernel sampled on a grid, K[j, k] = K(t_j, t_k)"""

    grid: np.ndarray
    K: np.ndarray
    # The triplet it was computed from, if any
    source: Optional[LevyTriplet] = field(default=None, compare=False)

    @property
    def size(self) -> int:
        return len(self.grid)

    @property
    def max_abs(self) -> float:
        return float(np.max(np.abs(self.K))) if self.K.size else 0.0


@dataclass(frozen=True)
class CocycleRealization:

    """Vectors psi(t_j), one row per grid point, with
    <psi(t_j), psi(t_k)> = K(t_j, t_k)"""

    grid: np.ndarray
    vectors: np.ndarray
    eigenvalues: np.ndarray
    eigen_floor: float
    # Largest entrywise deviation of the realized Gram matrix from K
    gram_error: float
    source: Optional[LevyTriplet] = field(default=None, compare=False)

    @property
    def rank(self) -> int:
        return self.vectors.shape[1]

    def gram(self) -> np.ndarray:
        return self.vectors.conj() @ self.vectors.T

    def norms(self) -> np.ndarray:
        return np.linalg.norm(self.vectors, axis=1)

    def psi(self, t: float) -> np.ndarray:
        """The vector psi(t) for a grid point t"""
        return self.vectors[_grid_index(self.grid, t)]


def _grid_index(grid: np.ndarray, t: float) -> int:
    tol = _GRID_MATCH * max(1.0, float(np.max(np.abs(grid))) if grid.size else 1.0)
    ix = int(np.argmin(np.abs(grid - t))) if grid.size else -1
    if ix < 0 or abs(grid[ix] - t) > tol:
        raise UnevaluableError("t = {0!r} is not a grid point".format(float(t)), t=float(t))
    return ix


def _expm1i(x: np.ndarray) -> np.ndarray:
    """e^{ix} - 1, accurate for small x"""
    return -2.0 * np.sin(0.5 * x) ** 2 + 1j * np.sin(x)


def _jump_kernel(nu: LevyMeasure, s: np.ndarray, t: np.ndarray) -> np.ndarray:
    """int (e^{-ips} - 1)(e^{ipt} - 1) dnu for paired arrays s, t"""

    def func(p: np.ndarray) -> np.ndarray:
        p = np.asarray(p, dtype=float)
        return np.conj(_expm1i(np.multiply.outer(s, p))) * _expm1i(np.multiply.outer(t, p))

    total = nu.integrate(func, tails=False)
    if nu.has_tails:
        # Over a tail: Phi(t - s) - Phi(-s) - Phi(t) + Phi(0), Phi the Fourier
        # transform of the density
        k = len(s)
        phi = nu.tail_fourier(np.concatenate([t - s, -s, t, [0.0]]))
        total = total + phi[:k] - phi[k : 2 * k] - phi[2 * k : 3 * k] + phi[-1]
    return total


def kernel_values(trip: LevyTriplet, s: Sequence[float], t: Sequence[float]) -> np.ndarray:
    """Closed-form K(s_k, t_k) for paired arrays of points"""
    trip.check()
    s_arr = np.asarray(s, dtype=float)
    t_arr = np.asarray(t, dtype=float)
    if s_arr.shape != t_arr.shape:
        raise ParameterError("kernel_values() needs arrays of equal shape")
    shape = s_arr.shape
    s_arr, t_arr = s_arr.ravel(), t_arr.ravel()
    out = np.asarray(trip.a * s_arr * t_arr, dtype=complex)
    if not trip.nu.is_empty and s_arr.size:
        out = out + _jump_kernel(trip.nu, s_arr, t_arr)
    out[(s_arr == 0.0) | (t_arr == 0.0)] = 0.0
    return out.reshape(shape)


def kernel(trip: LevyTriplet, s: float, t: float) -> complex:
    """Return K(s, t) = a s t + int (e^{-ips} - 1)(e^{ipt} - 1) dnu(p)"""
    return complex(kernel_values(trip, [s], [t])[0])


def _check_grid(grid: Sequence[float]) -> np.ndarray:
    pts = np.asarray(grid, dtype=float)
    if pts.ndim != 1 or pts.size == 0:
        raise ParameterError("A kernel grid must be a nonempty 1-D array")
    if np.any(np.diff(pts) <= 0.0):
        raise ParameterError("Grid points must be strictly increasing")
    return pts


def triplet_kernel_matrix(trip: LevyTriplet, grid: Sequence[float]) -> KernelMatrix:
    """The kernel matrix on a grid, from the closed form"""
    pts = _check_grid(grid)
    s, t = np.meshgrid(pts, pts, indexing="ij")
    return KernelMatrix(pts, kernel_values(trip, s, t), trip)


def _exponent_kernel(f: GridFunction, pts: np.ndarray) -> np.ndarray:
    """f(t_k - t_j) - f(-t_j) - f(t_k) on arbitrary points"""
    diff = f.evaluate(pts[np.newaxis, :] - pts[:, np.newaxis])
    return diff - f.evaluate(-pts)[:, np.newaxis] - f.evaluate(pts)[np.newaxis, :]


def kernel_matrix(f: GridFunction) -> KernelMatrix:
    """The kernel matrix from exponent values alone"""
    c = conditional_matrix(f)
    i0 = f.index_of(0.0)
    if i0 is not None:
        c[i0, :] = 0.0
        c[:, i0] = 0.0
    return KernelMatrix(f.points, c, f.source)


def realize_cocycle(
    K: KernelMatrix, eigen_floor: Optional[float] = None, tol: Optional[float] = None
) -> CocycleRealization:
    """Factor K through a finite-rank space: keep the eigenpairs with
    eigenvalue above eigen_floor * largest, psi(t_j)_i = sqrt(l_i) conj(u_i[j])"""
    eigen_floor = Settings.EIGEN_FLOOR if eigen_floor is None else eigen_floor
    tol = Settings.PSD_TOL if tol is None else tol
    n = K.size
    lam, u = linalg.eigh(K.K)
    lam_max = float(lam[-1]) if n else 0.0
    scale = float(np.max(np.abs(lam))) if n else 0.0
    if n and lam[0] < -tol * max(1.0, scale):
        raise NotPsdError(
            "The kernel is not positive semidefinite: eigenvalue {0:.6g}".format(lam[0]),
            min_eigenvalue=float(lam[0]),
            scale=scale,
        )
    keep = lam > eigen_floor * lam_max if lam_max > 0.0 else np.zeros(n, dtype=bool)
    vectors = np.sqrt(lam[keep])[np.newaxis, :] * np.conj(u[:, keep])
    i0 = np.flatnonzero(K.grid == 0.0)
    vectors[i0, :] = 0.0
    gram = vectors.conj() @ vectors.T
    err = float(np.max(np.abs(gram - K.K))) if n else 0.0
    if err > Settings.GRAM_REPRODUCTION_TOL * max(lam_max, 1.0):
        logger.warning("Realized Gram matrix deviates from the kernel by %.3g", err)
    logger.debug("Realized cocycle on %d points with rank %d", n, int(np.sum(keep)))
    return CocycleRealization(K.grid, vectors, lam[keep], eigen_floor, err, K.source)


def _kernel_on(source: KernelSource, pts: np.ndarray) -> np.ndarray:
    if isinstance(source, LevyTriplet):
        return triplet_kernel_matrix(source, pts).K
    if source.kind != "exponent":
        raise ParameterError("A grid kernel source must be an exponent")
    return _exponent_kernel(source, pts)


def shift_covariance_residual(source: KernelSource, grid: Sequence[float], h: float) -> float:
    """Return max |K(h+s, h+t) - K(h+s, h) - K(h, h+t) + K(h, h) - K(s, t)|
    over pairs of grid points"""
    pts = _check_grid(grid)
    union = np.unique(np.concatenate([pts, pts + h, [h]]))
    k = _kernel_on(source, union)
    s = np.searchsorted(union, pts)
    sh = np.searchsorted(union, pts + h)
    ih = int(np.searchsorted(union, h))
    lhs = (
        k[np.ix_(sh, sh)]
        - k[sh, ih][:, np.newaxis]
        - k[ih, sh][np.newaxis, :]
        + k[ih, ih]
    )
    return float(np.max(np.abs(lhs - k[np.ix_(s, s)])))


class CoboundaryResult(NamedTuple):
    # Root mean square of psi(g) - (V(g) - I) psi0 over the grid
    residual: float
    # residual / max |psi(g)|
    normalized: float
    # The minimizer, in the coordinates of the realization
    psi0: np.ndarray


def coboundary_residual(real: CocycleRealization) -> CoboundaryResult:
    """Least-squares fit of psi(g) = (V(g) - I) psi0 over the grid, with
    psi0 in the span of the grid vectors. V is applied through shifted
    evaluations of the source triplet, (V(g) - I) psi(h) =
    psi(g + h) - psi(g) - psi(h), on the grid extended by all sums."""
    trip = real.source
    if trip is None:
        raise ParameterError("Coboundary detection needs a triplet-backed realization")
    grid = real.grid
    n = len(grid)
    if real.rank == 0:
        return CoboundaryResult(0.0, 0.0, np.zeros(0, dtype=complex))
    sums = (grid[:, np.newaxis] + grid[np.newaxis, :]).ravel()
    ext = np.unique(np.concatenate([grid, sums]))
    big = realize_cocycle(triplet_kernel_matrix(trip, ext), real.eigen_floor)
    psi = big.vectors
    ig = np.searchsorted(ext, grid)
    igh = np.searchsorted(ext, sums).reshape(n, n)
    # a[g, h, :] = (V(g) - I) psi(h)
    a = psi[igh] - psi[ig][:, np.newaxis, :] - psi[ig][np.newaxis, :, :]
    design = a.transpose(0, 2, 1).reshape(n * big.rank, n)
    target = psi[ig].reshape(n * big.rank)
    top = float(np.max(real.norms()))
    # Minimum-norm solution; singular values at rounding level relative
    # to the cocycle's own size are dropped
    u, sv, vh = linalg.svd(design, full_matrices=False)
    keep = sv > math.sqrt(real.eigen_floor) * top
    coef = vh[keep].conj().T @ ((u[:, keep].conj().T @ target) / sv[keep])
    fit = design @ coef - target
    residual = math.sqrt(float(np.sum(np.abs(fit) ** 2)) / n)
    normalized = residual / top if top > 0.0 else 0.0
    logger.debug("Coboundary residual %.3g (normalized %.3g)", residual, normalized)
    return CoboundaryResult(residual, normalized, coef @ real.vectors)


@dataclass(frozen=True)
class ShiftOperator:

    """The matrix of V(h) on the realized space, determined on the span
    of psi(t) for the grid points t with t + h on the grid"""

    h: float
    domain: np.ndarray
    matrix: np.ndarray
    # max |<V psi(s), V psi(t)> - <psi(s), psi(t)>| over the domain
    isometry_residual: float
    # max |V psi(t) - (psi(t + h) - psi(h))| over the domain
    action_residual: float


def _grid_step(grid: np.ndarray) -> float:
    if len(grid) < 2:
        raise ParameterError("Shift operators need a grid of at least two points")
    steps = np.diff(grid)
    step = float(steps[0])
    if np.max(np.abs(steps - step)) > _GRID_MATCH * max(1.0, step):
        raise ParameterError("Shift operators need an arithmetic grid")
    return step


def _shift_indices(grid: np.ndarray, h: float) -> Tuple[int, np.ndarray, np.ndarray]:
    """Index of h, and the indices of the points t with t + h on the grid
    together with the indices of t + h"""
    step = _grid_step(grid)
    m = h / step
    if abs(m - round(m)) > _GRID_MATCH * max(1.0, abs(m)):
        raise UnevaluableError(
            "The shift h = {0!r} is not a multiple of the grid step".format(float(h)), h=float(h)
        )
    ih = _grid_index(grid, h)
    shift = int(round(m))
    dom = np.arange(max(0, -shift), min(len(grid), len(grid) - shift))
    return ih, dom, dom + shift


def shift_operator(real: CocycleRealization, h: float) -> ShiftOperator:
    """The matrix V(h) with V(h) psi(t) = psi(t + h) - psi(h)"""
    grid = real.grid
    ih, dom, img = _shift_indices(grid, h)
    if dom.size == 0:
        raise UnevaluableError("No grid point stays on the grid under the shift", h=h)
    psi_in = real.vectors[dom].T
    psi_out = (real.vectors[img] - real.vectors[ih]).T
    v = psi_out @ linalg.pinv(psi_in, rtol=math.sqrt(real.eigen_floor))
    g_in = psi_in.conj().T @ psi_in
    g_out = psi_out.conj().T @ psi_out
    return ShiftOperator(
        h,
        grid[dom],
        v,
        float(np.max(np.abs(g_out - g_in))),
        float(np.max(np.abs(v @ psi_in - psi_out))),
    )


def group_law_residual(real: CocycleRealization, h1: float, h2: float) -> float:
    """Return max |V(h1) V(h2) psi(t) - V(h1 + h2) psi(t)| over the grid
    points where both sides are determined"""
    v1 = shift_operator(real, h1)
    v2 = shift_operator(real, h2)
    v12 = shift_operator(real, h1 + h2)
    _, dom1, _ = _shift_indices(real.grid, h1)
    _, dom2, img2 = _shift_indices(real.grid, h2)
    _, dom12, _ = _shift_indices(real.grid, h1 + h2)
    known = set(dom1.tolist())
    direct = set(dom12.tolist())
    res = 0.0
    count = 0
    for j, jh in zip(dom2.tolist(), img2.tolist()):
        # V(h2) psi(t) = psi(t + h2) - psi(h2) must lie where V(h1) is determined
        if jh not in known or j not in direct:
            continue
        x = real.vectors[j]
        lhs = v1.matrix @ (v2.matrix @ x)
        rhs = v12.matrix @ x
        if x.size:
            res = max(res, float(np.max(np.abs(lhs - rhs))))
        count += 1
    if count == 0:
        raise UnevaluableError("The shifts leave no common grid domain", h1=h1, h2=h2)
    return res
