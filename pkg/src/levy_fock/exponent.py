"""

    LevyFock: Lévy processes, cocycles and Fock space

    Characteristic exponent module

    Copyright (C) 2026 LevyFock developers.

    This software is licensed under the MIT License, see LICENSE.txt.


    This module represents Lévy triplets (b, a, nu) and evaluates the
    characteristic exponent

        f(t) = i b t - a t^2 / 2 + int M(p, t) dnu(p)

    of an infinitely divisible law, where the jump integrand M depends on
    the centering convention:

        DeFinetti:   M = e^{ipt} - 1
        Kolmogorov:  M = e^{ipt} - 1 - ipt
        Levy:        M = e^{ipt} - 1 - ipt / (1 + p^2)

    Each convention places its own integrability condition on nu, and
    moving between conventions only changes the drift b.

    The Lévy measure is a finite set of atoms plus an optional density
    from one of the families in densities.py. Integrals against the
    density are computed piecewise with adaptive Gauss-Legendre
    quadrature, split at 0, at p = +/-1 and at any declared breakpoints;
    oscillatory integrals over declared infinite tails are done as
    Fourier integrals.

"""

from typing import (
    Any,
    Callable,
    Dict,
    Iterable,
    List,
    Mapping,
    NamedTuple,
    Optional,
    Sequence,
    Tuple,
    Union,
)

import logging
import math
import re
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .basics import (
    DivergentMomentError,
    InadmissibleConventionError,
    InputError,
    IntegrabilityError,
    InvalidMomentError,
    ParameterError,
    QuadratureError,
    UnknownKeyError,
)
from .densities import Density, Segment
from .diagnostics import Diagnostic, Diagnostics
from .quadrature import Integrand, QuadratureSpec, fourier_tail, gauss_legendre, integrate


logger = logging.getLogger(__name__)

# A jump of size p (nonzero) carrying weight w (positive)
Atom = Tuple[float, float]


class Convention(Enum):

    """The centering convention of the jump integrand"""

    DEFINETTI = "definetti"
    KOLMOGOROV = "kolmogorov"
    LEVY = "levy"

    @classmethod
    def parse(cls, name: Union[str, "Convention"]) -> "Convention":
        """Accept 'levy', 'Levy', 'de_finetti', 'DeFinetti' and so on"""
        if isinstance(name, Convention):
            return name
        if isinstance(name, str):
            key = re.sub(r"[\s_\-]", "", name).lower()
            for conv in cls:
                if conv.value == key:
                    return conv
        raise ParameterError(
            "Unknown convention '{0}'; expected levy, kolmogorov or definetti".format(
                name
            )
        )

    @property
    def label(self) -> str:
        return {"definetti": "DeFinetti", "kolmogorov": "Kolmogorov", "levy": "Levy"}[
            self.value
        ]

    def __str__(self) -> str:
        return self.value


# Moment kinds whose integrability each convention requires
CONVENTION_CONDITIONS: Dict[Convention, Tuple[str, ...]] = {
    Convention.LEVY: ("min1p2",),
    Convention.KOLMOGOROV: ("min1p2", "abs_p_tail"),
    Convention.DEFINETTI: ("min1p2", "total_mass"),
}


def _in_ball(p: np.ndarray, delta: float) -> np.ndarray:
    return np.abs(p) < delta


# name -> (integrand m(p, delta), takes a delta parameter)
_MOMENTS: Dict[str, Tuple[Callable[[np.ndarray, float], np.ndarray], bool]] = {
    "total_mass": (lambda p, d: np.ones_like(p), False),
    "min1p2": (lambda p, d: np.minimum(1.0, p * p), False),
    "p_over_1p2": (lambda p, d: p / (1.0 + p * p), False),
    "p3_over_1p2": (lambda p, d: p ** 3 / (1.0 + p * p), False),
    "abs_p_tail": (lambda p, d: np.where(np.abs(p) >= 1.0, np.abs(p), 0.0), False),
    "p2": (lambda p, d: p * p, False),
    "trunc_var": (lambda p, d: np.where(_in_ball(p, d), p * p, 0.0), True),
    "tail_mass": (lambda p, d: np.where(_in_ball(p, d), 0.0, 1.0), True),
    "tail_p_over_1p2": (
        lambda p, d: np.where(_in_ball(p, d), 0.0, p / (1.0 + p * p)),
        True,
    ),
    "trunc_p3_over_1p2": (
        lambda p, d: np.where(_in_ball(p, d), p ** 3 / (1.0 + p * p), 0.0),
        True,
    ),
}

_MOMENT_RE = re.compile(r"^\s*([a-z0-9_]+)\s*(?:\(\s*([^()]*?)\s*\))?\s*$")


class MomentKind(NamedTuple):

    """A moment selector, such as total_mass or trunc_var(0.01)"""

    name: str
    delta: Optional[float] = None

    def __str__(self) -> str:
        if self.delta is None:
            return self.name
        return "{0}({1!r})".format(self.name, self.delta)

    @classmethod
    def parse(cls, kind: Union[str, "MomentKind", Tuple[str, float]]) -> "MomentKind":
        if isinstance(kind, MomentKind):
            name, delta = kind.name, kind.delta
        elif isinstance(kind, tuple) and len(kind) == 2:
            name, delta = kind[0], float(kind[1])
        elif isinstance(kind, str):
            m = _MOMENT_RE.match(kind)
            if m is None:
                raise InvalidMomentError("Malformed moment kind '{0}'".format(kind))
            name = m.group(1)
            try:
                delta = None if m.group(2) is None else float(m.group(2))
            except ValueError:
                raise InvalidMomentError(
                    "Malformed moment parameter in '{0}'".format(kind)
                )
        else:
            raise InvalidMomentError("Invalid moment kind {0!r}".format(kind))
        if name not in _MOMENTS:
            raise InvalidMomentError(
                "Unknown moment kind '{0}'; expected one of {1}".format(
                    name, ", ".join(sorted(_MOMENTS))
                )
            )
        if _MOMENTS[name][1]:
            if delta is None or not math.isfinite(delta) or delta < 0.0:
                raise InvalidMomentError(
                    "Moment kind '{0}' needs a nonnegative parameter, "
                    "as in {0}(0.01)".format(name)
                )
        elif delta is not None:
            raise InvalidMomentError("Moment kind '{0}' takes no parameter".format(name))
        return cls(name, delta)


class LevyMeasure:

    """A Lévy measure: finitely many atoms plus an optional density"""

    def __init__(
        self,
        atoms: Iterable[Atom] = (),
        density: Optional[Density] = None,
        quadrature: Optional[QuadratureSpec] = None,
    ) -> None:
        checked: List[Atom] = []
        for atom in atoms:
            try:
                p, w = float(atom[0]), float(atom[1])
            except (TypeError, ValueError, IndexError):
                raise ParameterError("An atom must be a pair [p, w] of numbers")
            if not (math.isfinite(p) and math.isfinite(w)):
                raise ParameterError("Atom ({0}, {1}) is not finite".format(p, w))
            if p == 0.0:
                raise ParameterError("The Lévy measure cannot have an atom at p = 0")
            if not w > 0.0:
                raise ParameterError("Atom at p = {0} has nonpositive weight".format(p))
            checked.append((p, w))
        if len({p for p, _ in checked}) != len(checked):
            raise ParameterError("Atom positions must be pairwise distinct")
        self._atoms = tuple(checked)
        self._p = np.array([p for p, _ in checked], dtype=float)
        self._w = np.array([w for _, w in checked], dtype=float)
        self._density = density
        self._quadrature = quadrature or QuadratureSpec()
        # Moment kind -> value; math.inf records a divergent moment
        self._moments: Dict[MomentKind, float] = {}

    @property
    def atoms(self) -> Tuple[Atom, ...]:
        return self._atoms

    @property
    def atom_positions(self) -> np.ndarray:
        return self._p

    @property
    def atom_weights(self) -> np.ndarray:
        return self._w

    @property
    def density(self) -> Optional[Density]:
        return self._density

    @property
    def quadrature(self) -> QuadratureSpec:
        return self._quadrature

    @property
    def is_empty(self) -> bool:
        return not self._atoms and self._density is None

    @property
    def has_tails(self) -> bool:
        return bool(self.pieces()[1])

    def scaled(self, c: float) -> "LevyMeasure":
        """The measure c * nu, for c > 0"""
        if not c > 0.0:
            raise ParameterError("A Lévy measure can only be scaled by c > 0")
        return LevyMeasure(
            [(p, w * c) for p, w in self._atoms],
            None if self._density is None else self._density.scaled(c),
            self._quadrature,
        )

    def atoms_only(self) -> "LevyMeasure":
        return LevyMeasure(self._atoms, None, self._quadrature)

    def density_only(self) -> "LevyMeasure":
        return LevyMeasure((), self._density, self._quadrature)

    def pieces(self, breakpoints: Sequence[float] = ()) -> Tuple[List[Segment], List[Segment]]:
        """Split the density support into finite pieces and infinite tails,
        cutting at p = +/-1 and at +/-each breakpoint"""
        if self._density is None:
            return [], []
        cuts = {-1.0, 1.0}
        for x in tuple(breakpoints) + tuple(self._quadrature.breakpoints):
            if x != 0.0:
                cuts.update((abs(x), -abs(x)))
        finite: List[Segment] = []
        tails: List[Segment] = []
        for lo, hi in self._density.segments():
            inner = sorted(c for c in cuts if lo < c < hi)
            edges = [lo] + inner + [hi]
            for a, b in zip(edges[:-1], edges[1:]):
                if math.isinf(a) or math.isinf(b):
                    tails.append((a, b))
                else:
                    finite.append((a, b))
        return finite, tails

    def _weighted(self, func: Integrand) -> Integrand:
        density = self._density
        assert density is not None

        def wrapped(p: np.ndarray) -> np.ndarray:
            return np.asarray(func(p)) * density(p)

        return wrapped

    def integrate(
        self, func: Integrand, breakpoints: Sequence[float] = (), tails: bool = True
    ) -> np.ndarray:
        """Return int func dnu: the atom sum plus quadrature of func * rho.
        With tails=False the infinite tails of the density are left out."""
        total = np.asarray(func(np.empty(0))) @ np.empty(0)
        if self._atoms:
            total = total + np.asarray(func(self._p)) @ self._w
        if self._density is None:
            return total
        finite, tail_pieces = self.pieces(breakpoints)
        weighted = self._weighted(func)
        for lo, hi in finite:
            total = total + gauss_legendre(weighted, lo, hi, self._quadrature).value
        if tails:
            for lo, hi in tail_pieces:
                total = total + integrate(weighted, lo, hi, self._quadrature).value
        return total

    def tail_integrate(self, func: Integrand) -> np.ndarray:
        """Integrate func * rho over the infinite tails only"""
        total = np.asarray(func(np.empty(0))) @ np.empty(0)
        if self._density is None:
            return total
        weighted = self._weighted(func)
        for lo, hi in self.pieces()[1]:
            total = total + integrate(weighted, lo, hi, self._quadrature).value
        return total

    def tail_fourier(self, omegas: Sequence[float]) -> np.ndarray:
        """Return int_tails rho(p) e^{i omega p} dp for each omega"""
        omegas = np.asarray(omegas, dtype=float)
        out = np.zeros(omegas.shape, dtype=complex)
        density = self._density
        if density is None:
            return out
        unique, inverse = np.unique(omegas, return_inverse=True)
        acc = np.zeros(unique.shape, dtype=complex)
        for lo, hi in self.pieces()[1]:
            if math.isinf(hi):
                acc += fourier_tail(density, lo, unique, self._quadrature)
            else:
                # Reflect (-inf, -L] onto [L, inf): p = -q, so omega flips sign
                def reflected(q: np.ndarray) -> np.ndarray:
                    return density(-np.asarray(q))

                acc += fourier_tail(reflected, -hi, -unique, self._quadrature)
        return acc[inverse].reshape(omegas.shape)

    def moment(self, kind: Union[str, MomentKind]) -> float:
        """Return int m_kind dnu, raising DivergentMomentError if it diverges"""
        mk = MomentKind.parse(kind)
        val = self._moments.get(mk)
        if val is None:
            m, _ = _MOMENTS[mk.name]
            delta = 0.0 if mk.delta is None else mk.delta

            def func(p: np.ndarray) -> np.ndarray:
                return m(np.asarray(p, dtype=float), delta)

            try:
                val = float(self.integrate(func, breakpoints=(delta,) if delta else ()))
            except QuadratureError as e:
                logger.debug("Moment %s diverges: %s", mk, e.description)
                val = math.inf
            self._moments[mk] = val
        if math.isinf(val):
            raise DivergentMomentError(
                "The moment {0} of the Lévy measure diverges".format(mk), kind=str(mk)
            )
        return val

    def admits(self, convention: Convention) -> bool:
        """True if the measure meets the integrability conditions of the convention"""
        try:
            for kind in CONVENTION_CONDITIONS[convention]:
                self.moment(kind)
        except DivergentMomentError:
            return False
        return True

    def to_dict(self) -> Dict[str, Any]:
        d: Dict[str, Any] = {}
        if self._atoms:
            d["atoms"] = [[p, w] for p, w in self._atoms]
        if self._density is not None:
            d["density"] = self._density.to_dict()
        return d

    def __repr__(self) -> str:
        return "<LevyMeasure atoms={0} density={1!r}>".format(
            list(self._atoms), self._density
        )


def levy_measure_moments(nu: LevyMeasure, kind: Union[str, MomentKind]) -> float:
    """Return int m_kind(p) dnu(p) for the given moment selector"""
    return nu.moment(kind)


class LevyTriplet:

    """A Lévy triplet (b, a, nu) under a centering convention"""

    def __init__(
        self,
        b: float = 0.0,
        a: float = 0.0,
        nu: Optional[LevyMeasure] = None,
        convention: Union[str, Convention] = Convention.LEVY,
    ) -> None:
        if not math.isfinite(b):
            raise ParameterError("Drift b must be finite")
        if not (math.isfinite(a) and a >= 0.0):
            raise ParameterError("Diffusion coefficient a must be finite and >= 0")
        self._b = float(b)
        self._a = float(a)
        self._nu = nu if nu is not None else LevyMeasure()
        self._convention = Convention.parse(convention)

    @property
    def b(self) -> float:
        return self._b

    @property
    def a(self) -> float:
        return self._a

    @property
    def nu(self) -> LevyMeasure:
        return self._nu

    @property
    def convention(self) -> Convention:
        return self._convention

    def replace(
        self,
        *,
        b: Optional[float] = None,
        a: Optional[float] = None,
        nu: Optional[LevyMeasure] = None,
        convention: Optional[Convention] = None,
    ) -> "LevyTriplet":
        return LevyTriplet(
            self._b if b is None else b,
            self._a if a is None else a,
            self._nu if nu is None else nu,
            self._convention if convention is None else convention,
        )

    def scaled(self, c: float) -> "LevyTriplet":
        """The triplet of exponent c * f, i.e. of the law at time c"""
        return LevyTriplet(self._b * c, self._a * c, self._nu.scaled(c), self._convention)

    def check(self) -> None:
        """Raise IntegrabilityError unless nu meets the conditions
        of the triplet's convention"""
        for kind in CONVENTION_CONDITIONS[self._convention]:
            try:
                self._nu.moment(kind)
            except DivergentMomentError:
                raise IntegrabilityError(
                    "The Lévy measure violates the {0} condition: {1} diverges".format(
                        self._convention.label, kind
                    ),
                    kind=kind,
                    convention=str(self._convention),
                )

    @property
    def is_valid(self) -> bool:
        return self._nu.admits(self._convention)

    def to_dict(self) -> Dict[str, Any]:
        d: Dict[str, Any] = {
            "b": self._b,
            "a": self._a,
            "convention": str(self._convention),
        }
        d.update(self._nu.to_dict())
        q = self._nu.quadrature.to_dict()
        if q != QuadratureSpec().to_dict():
            d["quadrature"] = q
        return d

    @classmethod
    def from_dict(cls, d: Mapping[str, Any]) -> "LevyTriplet":
        """Construct a triplet from its JSON document form"""
        if not isinstance(d, Mapping):
            raise InputError("A triplet document must be a JSON object")
        unknown = set(d) - set(TRIPLET_KEYS)
        if unknown:
            raise UnknownKeyError(
                "Unknown key(s) in triplet document: {0}".format(
                    ", ".join(sorted(unknown))
                )
            )
        atoms = d.get("atoms", [])
        if not isinstance(atoms, list) or any(
            not isinstance(x, list) or len(x) != 2 for x in atoms
        ):
            raise InputError("'atoms' must be an array of [p, w] pairs")
        density = d.get("density")
        if density is not None and not isinstance(density, Mapping):
            raise InputError("'density' must be a JSON object")
        quad = _quadrature_from_dict(d.get("quadrature", {}))
        nu = LevyMeasure(
            [(_as_float(p, "atom p"), _as_float(w, "atom w")) for p, w in atoms],
            None if density is None else Density.from_dict(density),
            quad,
        )
        return cls(
            _as_float(d.get("b", 0.0), "b"),
            _as_float(d.get("a", 0.0), "a"),
            nu,
            d.get("convention", "levy"),
        )

    def __repr__(self) -> str:
        return "<LevyTriplet b={0!r} a={1!r} {2} {3!r}>".format(
            self._b, self._a, self._convention.label, self._nu
        )


TRIPLET_KEYS = ("b", "a", "convention", "atoms", "density", "quadrature")
_QUADRATURE_KEYS = ("order", "max_intervals", "tolerance", "breakpoints")


def _as_float(val: Any, what: str) -> float:
    if isinstance(val, bool) or not isinstance(val, (int, float)):
        raise ParameterError("'{0}' must be a number".format(what))
    return float(val)


def _quadrature_from_dict(d: Any) -> QuadratureSpec:
    if not isinstance(d, Mapping):
        raise InputError("'quadrature' must be a JSON object")
    unknown = set(d) - set(_QUADRATURE_KEYS)
    if unknown:
        raise UnknownKeyError(
            "Unknown key(s) in quadrature overrides: {0}".format(
                ", ".join(sorted(unknown))
            )
        )
    kw: Dict[str, Any] = {}
    for key in ("order", "max_intervals"):
        if key in d:
            if isinstance(d[key], bool) or not isinstance(d[key], int):
                raise ParameterError("'{0}' must be an integer".format(key))
            kw[key] = d[key]
    if "tolerance" in d:
        kw["tolerance"] = _as_float(d["tolerance"], "tolerance")
    if "breakpoints" in d:
        if not isinstance(d["breakpoints"], list):
            raise InputError("'breakpoints' must be an array of numbers")
        kw["breakpoints"] = tuple(_as_float(x, "breakpoint") for x in d["breakpoints"])
    return QuadratureSpec(**kw)


def _sin_minus_x(x: np.ndarray) -> np.ndarray:
    """sin(x) - x without cancellation for small |x|"""
    x2 = x * x
    series = -x * x2 / 6.0 * (1.0 - x2 / 20.0 * (1.0 - x2 / 42.0 * (1.0 - x2 / 72.0)))
    return np.where(np.abs(x) < 0.1, series, np.sin(x) - x)


def _jump_integrand(convention: Convention, ts: np.ndarray) -> Integrand:
    """Return M(p, t) for all t at once, shaped (len(ts), len(p))"""

    def func(p: np.ndarray) -> np.ndarray:
        p = np.asarray(p, dtype=float)
        x = np.multiply.outer(ts, p)
        # e^{ix} - 1 = -2 sin^2(x/2) + i sin(x), accurate for small x
        real = -2.0 * np.sin(0.5 * x) ** 2
        if convention is Convention.DEFINETTI:
            imag = np.sin(x)
        elif convention is Convention.KOLMOGOROV:
            imag = _sin_minus_x(x)
        else:
            # sin(x) - x / (1 + p^2) = (sin(x) - x) + t p^3 / (1 + p^2)
            imag = _sin_minus_x(x) + np.multiply.outer(ts, p ** 3 / (1.0 + p * p))
        return real + 1j * imag

    return func


_COMPENSATORS: Dict[Convention, Optional[Callable[[np.ndarray], np.ndarray]]] = {
    Convention.DEFINETTI: None,
    Convention.KOLMOGOROV: lambda p: np.asarray(p, dtype=float),
    Convention.LEVY: lambda p: np.asarray(p, dtype=float) / (1.0 + np.asarray(p) ** 2),
}


def _jump_part(nu: LevyMeasure, convention: Convention, ts: np.ndarray) -> np.ndarray:
    total = nu.integrate(_jump_integrand(convention, ts), tails=False)
    if nu.has_tails:
        # Over a tail the integrand splits into a Fourier integral of rho,
        # minus the tail mass, minus i t times the compensator moment
        phi = nu.tail_fourier(np.append(ts, 0.0))
        total = total + (phi[:-1] - phi[-1])
        comp = _COMPENSATORS[convention]
        if comp is not None:
            total = total - 1j * ts * complex(nu.tail_integrate(comp))
    return total


def eval_exponent_grid(trip: LevyTriplet, ts: Sequence[float]) -> np.ndarray:
    """Evaluate f(t) at every point of ts in one adaptive pass"""
    trip.check()
    t = np.asarray(ts, dtype=float)
    shape = t.shape
    t = t.ravel()
    out = 1j * trip.b * t - 0.5 * trip.a * t * t
    if not trip.nu.is_empty and t.size:
        out = out + _jump_part(trip.nu, trip.convention, t)
    out = np.asarray(out, dtype=complex)
    out[t == 0.0] = 0.0
    return out.reshape(shape)


def eval_exponent(trip: LevyTriplet, t: float) -> complex:
    """Return the characteristic exponent f(t)"""
    return complex(eval_exponent_grid(trip, [t])[0])


def char_fn_grid(trip: LevyTriplet, ts: Sequence[float]) -> np.ndarray:
    return np.exp(eval_exponent_grid(trip, ts))


def char_fn(trip: LevyTriplet, t: float) -> complex:
    """Return the characteristic function F(t) = exp f(t)"""
    return complex(char_fn_grid(trip, [t])[0])


@dataclass(frozen=True)
class CharExponentGrid:

    """Values of the characteristic exponent on an ordered grid"""

    points: np.ndarray
    values: np.ndarray

    @classmethod
    def evaluate(cls, trip: LevyTriplet, points: Sequence[float]) -> "CharExponentGrid":
        pts = np.asarray(points, dtype=float)
        if pts.ndim != 1 or np.any(np.diff(pts) <= 0.0):
            raise ParameterError("Grid points must be strictly increasing")
        return cls(pts, eval_exponent_grid(trip, pts))

    def hermitian_residual(self) -> float:
        """Largest |f(-t) - conj f(t)| over the points whose mirror is on the grid"""
        lookup = {float(t): v for t, v in zip(self.points, self.values)}
        res = 0.0
        for t, v in lookup.items():
            if -t in lookup:
                res = max(res, abs(lookup[-t] - np.conj(v)))
        return res


def _to_levy_shift(nu: LevyMeasure, convention: Convention) -> float:
    """Return the amount added to b when moving from convention to Levy"""
    if convention is Convention.DEFINETTI:
        return nu.moment("p_over_1p2")
    if convention is Convention.KOLMOGOROV:
        return -nu.moment("p3_over_1p2")
    return 0.0


def convert(trip: LevyTriplet, target: Union[str, Convention]) -> LevyTriplet:
    """Re-express the triplet under another convention; only b changes"""
    target = Convention.parse(target)
    trip.check()
    if target is trip.convention:
        return trip
    for kind in CONVENTION_CONDITIONS[target]:
        try:
            trip.nu.moment(kind)
        except DivergentMomentError:
            raise InadmissibleConventionError(
                "Cannot convert to {0}: {1} of the Lévy measure diverges".format(
                    target.label, kind
                ),
                kind=kind,
                target=str(target),
            )
    b_levy = trip.b + _to_levy_shift(trip.nu, trip.convention)
    b_new = b_levy - _to_levy_shift(trip.nu, target)
    logger.debug(
        "Converted b = %r (%s) to b = %r (%s)",
        trip.b,
        trip.convention.label,
        b_new,
        target.label,
    )
    return trip.replace(b=b_new, convention=target)


def validate_triplet(trip: LevyTriplet) -> Diagnostics:
    """Report each integrability condition of the triplet's convention"""
    diags = Diagnostics()
    diags.add(
        Diagnostic(
            code="diffusion",
            text="diffusion coefficient a >= 0",
            passed=trip.a >= 0.0,
            value=trip.a,
        )
    )
    texts = {
        "min1p2": "int min(1, p^2) dnu is finite",
        "abs_p_tail": "int_{|p|>=1} |p| dnu is finite",
        "total_mass": "nu(R) is finite",
    }
    for kind in CONVENTION_CONDITIONS[trip.convention]:
        try:
            value = trip.nu.moment(kind)
            passed = True
        except DivergentMomentError:
            value, passed = math.inf, False
        diags.add(
            Diagnostic(
                code=kind,
                text=texts[kind],
                passed=passed,
                value=value,
                detail=trip.convention.label,
            )
        )
    return diags


class Cumulants(NamedTuple):
    """Mean and variance of X(1); None where the moment does not exist"""

    mean: Optional[float]
    variance: Optional[float]


def cumulants(trip: LevyTriplet) -> Cumulants:
    """Return the mean and variance of the law with exponent f"""
    trip.check()
    mean: Optional[float] = None
    variance: Optional[float] = None
    if trip.nu.admits(Convention.KOLMOGOROV):
        # In the Kolmogorov form f'(0) = i b
        mean = convert(trip, Convention.KOLMOGOROV).b
    try:
        variance = trip.a + trip.nu.moment("p2")
    except DivergentMomentError:
        pass
    return Cumulants(mean, variance)
