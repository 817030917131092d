"""

    LevyFock: Lévy processes, cocycles and Fock space

    Wrapper functions module

    Copyright (C) 2026 LevyFock developers.

    This software is licensed under the MIT License, see LICENSE.txt.


    This module exposes one pipeline per command of the levyfock tool.
    Each pipeline takes keyword options and returns a Report, which holds
    the named checks with their verdicts, a summary, the data of the
    result and a plot-ready table. Nothing is written here: the caller
    decides where the rendered report goes.

    The following options are defined:

    triplet:    A LevyTriplet. Required by eval, convert, embed-verify,
                sample and ecf-compare.
    function:   A GridFunction (a characteristic function read from CSV),
                accepted instead of a triplet by check-pd, check-id and gns.
    grid:       Grid points (array). Defaults to -4:4:0.5, or -3:3:0.3 for
                the t grid of ecf-compare.
    nmax:       Largest root order n for check-id. Default 16.
    tol:        PSD tolerance. Default from the [tolerances] settings.
    target:     Target convention for convert.
    shift:      Shift h for gns and embed-verify. Default: the grid step.
    shift2:     Second shift for composition checks. Default: shift.
    threshold:  Normalized residual below which gns calls a cocycle a
                coboundary. Default from the settings.
    degree:     Fock truncation degree. Default from the settings.
    seed:       Master seed of the sampler. Default 0.
    delta:      Small-jump threshold. Default from the settings.
    samples:    Number of sampled paths. Default 1 for sample,
                100000 for ecf-compare.
    horizon:    Time horizon T. Default 1.
    steps:      Steps per path. Default 1, or 100 for a single path.
    multiplier: ecf-compare passes within multiplier / sqrt(samples).

"""

from typing import Any, Callable, Dict, List, Optional, Sequence

import logging

import numpy as np
from typing_extensions import TypedDict

from .basics import (
    AliasingError,
    InputError,
    NotPsdError,
    ParameterError,
    UnevaluableError,
    VanishingCharFnError,
    ZeroCrossingError,
)
from .diagnostics import Diagnostic, Diagnostics
from .exponent import (
    CharExponentGrid,
    Convention,
    LevyTriplet,
    char_fn_grid,
    convert,
    cumulants,
    eval_exponent_grid,
    validate_triplet,
)
from .fock import (
    coherent_gram,
    embedding_gram,
    fock_dimension,
    representation_residual,
    vacuum_expectation,
    weyl_unitarity_residual,
)
from .gns import (
    coboundary_residual,
    group_law_residual,
    kernel_matrix,
    realize_cocycle,
    shift_covariance_residual,
    shift_operator,
    triplet_kernel_matrix,
)
from .posdef import (
    GridFunction,
    PsdVerdict,
    conditional_psd_check,
    gram,
    infinite_divisibility_check,
    log_branch,
    psd_check,
)
from .sampler import divisibility_in_law, ecf_compare, sample_path, sample_terminal
from .serializers import (
    Table,
    complex_pair,
    dumps,
    ecf_table,
    ecf_to_dict,
    fmt,
    jsonable,
    kernel_to_dict,
    parse_grid,
    path_table,
    path_to_dict,
    realization_table,
    realization_to_dict,
    table_text,
)
from .settings import Settings


logger = logging.getLogger(__name__)

DEFAULT_GRID = "-4:4:0.5"
DEFAULT_TGRID = "-3:3:0.3"
DEFAULT_NMAX = 16
DEFAULT_ECF_SAMPLES = 100000
DEFAULT_PATH_STEPS = 100

FORMATS = ("json", "csv")

# Residuals of identities that hold exactly are compared with
# these multiples of (1 + the largest entry involved)
_COVARIANCE_TOL = 1e-8
_UNITARITY_TOL = 1e-7
_ROUND_TRIP_TOL = 1e-10


CheckDict = TypedDict(
    "CheckDict",
    {
        "code": str,
        "text": str,
        "pass": bool,
        "value": Optional[float],
        "bound": Optional[float],
        "detail": str,
    },
    total=False,
)

ReportDict = TypedDict(
    "ReportDict",
    {
        "command": str,
        "pass": bool,
        "checks": List[CheckDict],
        "summary": Dict[str, Any],
        "data": Dict[str, Any],
    },
)


class Report:

    """The complete outcome of one command"""

    def __init__(
        self,
        command: str,
        checks: Diagnostics,
        summary: Dict[str, Any],
        data: Dict[str, Any],
        table: Table,
    ) -> None:
        self._command = command
        self._checks = checks
        self._summary = summary
        self._data = data
        self._table = table

    @property
    def command(self) -> str:
        return self._command

    @property
    def checks(self) -> Diagnostics:
        return self._checks

    @property
    def passed(self) -> bool:
        return self._checks.passed

    @property
    def summary(self) -> Dict[str, Any]:
        return self._summary

    @property
    def data(self) -> Dict[str, Any]:
        return self._data

    @property
    def table(self) -> Table:
        return self._table

    def to_dict(self) -> ReportDict:
        d: ReportDict = {
            "command": self._command,
            "pass": self.passed,
            "checks": jsonable(self._checks.to_dict()["checks"]),
            "summary": jsonable(self._summary),
            "data": jsonable(self._data),
        }
        return d

    def render(self, format: str = "json") -> str:
        """The report as a JSON document, or its table as CSV"""
        if format == "json":
            return dumps(self.to_dict(), indent=2) + "\n"
        if format == "csv":
            return table_text(self._table)
        raise ParameterError(
            "Unknown output format '{0}'; expected json or csv".format(format)
        )

    def __str__(self) -> str:
        return "{0}: {1}\n{2}".format(
            self._command, "pass" if self.passed else "FAIL", self._checks
        )


def _check(
    code: str,
    text: str,
    value: float,
    bound: float,
    detail: Optional[str] = None,
) -> Diagnostic:
    """A residual check: passes when value <= bound"""
    return Diagnostic(
        code=code, text=text, passed=value <= bound, value=value, bound=bound, detail=detail
    )


def _triplet(options: Dict[str, Any], command: str) -> LevyTriplet:
    trip = options.get("triplet")
    if trip is None:
        raise InputError("The {0} command needs a triplet document".format(command))
    trip.check()
    return trip


def _grid(options: Dict[str, Any], default: str = DEFAULT_GRID) -> np.ndarray:
    grid = options.get("grid")
    return parse_grid(default) if grid is None else np.asarray(grid, dtype=float)


def _tol(options: Dict[str, Any]) -> float:
    tol = options.get("tol")
    return Settings.PSD_TOL if tol is None else float(tol)


def _charfn(options: Dict[str, Any], command: str) -> GridFunction:
    """The characteristic function to test: from the triplet on the grid,
    or as read from a CSV file"""
    F = options.get("function")
    if F is not None:
        if options.get("grid") is not None:
            logger.warning("A grid function carries its own grid; --grid is ignored")
        return F
    return GridFunction.from_triplet(_triplet(options, command), _grid(options))


def _shift(options: Dict[str, Any], grid: np.ndarray) -> float:
    h = options.get("shift")
    if h is not None:
        return float(h)
    if len(grid) < 2:
        raise ParameterError("A shift is needed for a single-point grid")
    return float(grid[1] - grid[0])


def _pairs(values: Sequence[complex]) -> List[Any]:
    return [complex_pair(complex(z)) for z in values]


def eval_command(**options: Any) -> Report:
    """Evaluate f and F = exp f on the grid"""
    trip = _triplet(options, "eval")
    grid = _grid(options)
    checks = validate_triplet(trip)
    ex = CharExponentGrid.evaluate(trip, grid)
    f = ex.values
    F = np.exp(f)
    scale = 1.0 + float(np.max(np.abs(f)))
    checks.add(
        _check(
            "hermitian",
            "f(-t) = conj f(t) on the grid",
            ex.hermitian_residual(),
            Settings.IDENTITY_TOL * scale,
        )
    )
    cum = cumulants(trip)
    summary = {
        "convention": str(trip.convention),
        "points": len(grid),
        "mean": cum.mean,
        "variance": cum.variance,
    }
    data = {
        "triplet": trip.to_dict(),
        "t": grid,
        "exponent": _pairs(f),
        "charfn": _pairs(F),
    }
    rows = [
        [fmt(t), fmt(fz.real), fmt(fz.imag), fmt(Fz.real), fmt(Fz.imag)]
        for t, fz, Fz in zip(grid, f, F)
    ]
    return Report("eval", checks, summary, data, (["t", "f_re", "f_im", "F_re", "F_im"], rows))


def convert_command(**options: Any) -> Report:
    """Re-express a triplet in the target convention and verify the round trip"""
    trip = _triplet(options, "convert")
    target = options.get("target")
    if target is None:
        raise ParameterError("The convert command needs a target convention")
    target = Convention.parse(target)
    grid = _grid(options)
    conv = convert(trip, target)
    back = convert(conv, trip.convention)
    checks = Diagnostics()
    checks.add(
        _check(
            "round_trip",
            "b survives the conversion back to {0}".format(trip.convention.label),
            abs(back.b - trip.b),
            _ROUND_TRIP_TOL * max(1.0, abs(trip.b)),
        )
    )
    f0 = eval_exponent_grid(trip, grid)
    f1 = eval_exponent_grid(conv, grid)
    dev = np.abs(f1 - f0) / np.maximum(1.0, np.abs(f0))
    checks.add(
        _check(
            "pointwise",
            "the exponent is unchanged by the conversion",
            float(np.max(dev)),
            Settings.IDENTITY_TOL,
        )
    )
    summary = {
        "from": str(trip.convention),
        "to": str(target),
        "b_from": trip.b,
        "b_to": conv.b,
    }
    rows = [
        [fmt(t), fmt(z.real), fmt(z.imag), fmt(d)] for t, z, d in zip(grid, f1, dev)
    ]
    data = {"triplet": conv.to_dict(), "source": trip.to_dict()}
    return Report("convert", checks, summary, data, (["t", "f_re", "f_im", "deviation"], rows))


def _verdict_diag(code: str, text: str, v: PsdVerdict) -> Diagnostic:
    return Diagnostic(
        code=code,
        text=text,
        passed=v.is_psd,
        value=v.min_eigenvalue,
        bound=-v.tolerance * max(1.0, v.scale),
    )


def check_pd_command(**options: Any) -> Report:
    """The Gram matrix of F, and for triplets also the conditional
    positivity of f, tested by eigenvalues"""
    F = _charfn(options, "check-pd")
    tol = _tol(options)
    checks = Diagnostics()
    verdict = psd_check(gram(F), tol)
    checks.add(_verdict_diag("gram_psd", "the Gram matrix of F is PSD", verdict))
    rows = [["gram", str(i), fmt(x)] for i, x in enumerate(verdict.eigenvalues)]
    summary: Dict[str, Any] = {"points": len(F), "gram": verdict.to_dict()}
    trip = options.get("triplet")
    if trip is not None:
        f = GridFunction.from_triplet(trip, F.points, "exponent")
        cond = conditional_psd_check(f, tol)
        checks.add(
            _verdict_diag(
                "conditional_psd", "f is conditionally positive semidefinite", cond
            )
        )
        rows += [["conditional", str(i), fmt(x)] for i, x in enumerate(cond.eigenvalues)]
        summary["conditional"] = cond.to_dict()
    data = {"t": F.points}
    return Report("check-pd", checks, summary, data, (["matrix", "index", "eigenvalue"], rows))


def check_id_command(**options: Any) -> Report:
    """Positivity of the n-th roots exp(f / n) for n = 1..nmax"""
    F = _charfn(options, "check-id")
    nmax = options.get("nmax") or DEFAULT_NMAX
    tol = _tol(options)
    result = infinite_divisibility_check(F, nmax, tol)
    checks = Diagnostics()
    if result.failure:
        checks.add(
            Diagnostic(
                code="branch",
                text="a continuous logarithm of F exists on the grid",
                passed=False,
                detail=result.failure,
            )
        )
    for n, v in result.verdicts:
        checks.add(_verdict_diag("n={0}".format(n), "exp(f / {0}) is PSD".format(n), v))
    rows = [
        [str(n), fmt(v.min_eigenvalue), fmt(v.scale), "1" if v.is_psd else "0"]
        for n, v in result.verdicts
    ]
    summary = {"points": len(F), "nmax": nmax, "tolerance": tol}
    return Report(
        "check-id",
        checks,
        summary,
        result.to_dict(),
        (["n", "min_eigenvalue", "scale", "pass"], rows),
    )


def gns_command(**options: Any) -> Report:
    """Kernel, realization, shift covariance and coboundary residual"""
    trip = options.get("triplet")
    if trip is not None:
        trip.check()
        grid = _grid(options)
        source: Any = trip
        km = triplet_kernel_matrix(trip, grid)
    else:
        F = _charfn(options, "gns")
        source = log_branch(F) if F.kind == "charfn" else F
        grid = F.points
        km = kernel_matrix(source)
    real = realize_cocycle(km, tol=_tol(options))
    h = _shift(options, grid)
    checks = Diagnostics()
    lam_max = float(real.eigenvalues[-1]) if real.rank else 0.0
    checks.add(
        _check(
            "gram_reproduction",
            "<psi(s), psi(t)> = K(s, t)",
            real.gram_error,
            Settings.GRAM_REPRODUCTION_TOL * max(1.0, lam_max),
        )
    )
    scale = 1.0 + km.max_abs
    summary: Dict[str, Any] = {"points": len(grid), "rank": real.rank, "shift": h}
    covariant = grid
    if trip is None:
        # Exponent values exist on the grid only
        if source.index_of(h) is None:
            raise UnevaluableError("The shift h = {0!r} is not a grid point".format(h), h=h)
        covariant = np.array([t for t in grid if source.index_of(t + h) is not None])
        summary["shift_domain"] = len(covariant)
    if len(covariant):
        checks.add(
            _check(
                "shift_covariance",
                "V({0:g}) preserves the kernel".format(h),
                shift_covariance_residual(source, covariant, h),
                _COVARIANCE_TOL * scale,
            )
        )
    else:
        logger.info("No grid point stays on the grid under the shift %g", h)
    data: Dict[str, Any] = {
        "kernel": kernel_to_dict(km),
        "realization": realization_to_dict(real),
    }
    try:
        op = shift_operator(real, h)
    except (ParameterError, UnevaluableError) as e:
        logger.info("No shift operator matrix: %s", e)
        summary["shift_operator"] = None
    else:
        checks.add(
            _check(
                "shift_isometry",
                "V({0:g}) is isometric on the grid span".format(h),
                op.isometry_residual,
                _COVARIANCE_TOL * scale,
            )
        )
        h2 = options.get("shift2")
        h2 = h if h2 is None else float(h2)
        op_summary: Dict[str, Any] = {"domain": len(op.domain), "action_residual": op.action_residual}
        try:
            op_summary["group_law_residual"] = group_law_residual(real, h, h2)
        except (ParameterError, UnevaluableError) as e:
            logger.info("No group law residual: %s", e)
        summary["shift_operator"] = op_summary
    if trip is not None:
        threshold = options.get("threshold")
        threshold = Settings.COBOUNDARY_THRESHOLD if threshold is None else threshold
        cb = coboundary_residual(real)
        summary["coboundary"] = {
            "residual": cb.residual,
            "normalized": cb.normalized,
            "threshold": threshold,
            "is_coboundary": cb.normalized <= threshold,
        }
        data["psi0"] = _pairs(cb.psi0)
    return Report("gns", checks, summary, data, realization_table(real))


def embed_verify_command(**options: Any) -> Report:
    """Weyl operators on coherent states of the Fock space"""
    trip = _triplet(options, "embed-verify")
    grid = _grid(options)
    h = _shift(options, grid)
    h2 = options.get("shift2")
    h2 = h if h2 is None else float(h2)
    degree = options.get("degree")
    degree = Settings.FOCK_DEGREE if degree is None else degree
    checks = Diagnostics()
    scale = 1.0 + float(np.max(np.abs(coherent_gram(trip, grid))))
    checks.add(
        _check(
            "unitarity",
            "W({0:g}) preserves the coherent Gram matrix".format(h),
            weyl_unitarity_residual(trip, grid, h),
            _UNITARITY_TOL * scale,
        )
    )
    checks.add(
        _check(
            "representation",
            "W({0:g}) W({1:g}) = W({2:g})".format(h, h2, h + h2),
            representation_residual(trip, grid, h, h2),
            _UNITARITY_TOL * scale,
        )
    )
    vac = np.array([vacuum_expectation(trip, float(t)) for t in grid])
    F = char_fn_grid(trip, grid)
    checks.add(
        _check(
            "vacuum",
            "<vacuum, W(t) vacuum> = F(t)",
            float(np.max(np.abs(vac - F) / (1.0 + np.abs(F)))),
            Settings.IDENTITY_TOL,
        )
    )
    summary: Dict[str, Any] = {"points": len(grid), "shift": h, "shift2": h2, "degree": degree}
    data: Dict[str, Any] = {"t": grid, "vacuum": _pairs(vac)}
    real = realize_cocycle(triplet_kernel_matrix(trip, grid), tol=_tol(options))
    dim = fock_dimension(real.rank, degree)
    if dim <= Settings.FOCK_DIMENSION_BUDGET:
        span = embedding_gram(real, degree)
        checks.add(
            Diagnostic(
                code="truncation",
                text="truncated coherent Gram within the tail bound of exp K",
                passed=span.within_bound,
                value=span.excess,
                bound=0.0,
            )
        )
        summary["embedding"] = span.to_dict()
    else:
        logger.warning(
            "Fock space of rank %d and degree %d has dimension %d; "
            "the materialized embedding is skipped",
            real.rank,
            degree,
            dim,
        )
        summary["embedding"] = {"rank": real.rank, "degree": degree, "dimension": dim}
    rows = [
        [fmt(t), fmt(v.real), fmt(v.imag), fmt(z.real), fmt(z.imag)]
        for t, v, z in zip(grid, vac, F)
    ]
    return Report(
        "embed-verify",
        checks,
        summary,
        data,
        (["t", "vacuum_re", "vacuum_im", "charfn_re", "charfn_im"], rows),
    )


def _sampling(options: Dict[str, Any]) -> Dict[str, Any]:
    delta = options.get("delta")
    horizon = options.get("horizon")
    return {
        "seed": int(options.get("seed") or 0),
        "delta": Settings.SAMPLER_DELTA if delta is None else float(delta),
        "horizon": 1.0 if horizon is None else float(horizon),
    }


def sample_command(**options: Any) -> Report:
    """One path over [0, T], or the values X(T) of many paths"""
    trip = _triplet(options, "sample")
    s = _sampling(options)
    count = options.get("samples") or 1
    steps = options.get("steps")
    if count == 1:
        steps = DEFAULT_PATH_STEPS if steps is None else steps
        path = sample_path(trip, s["horizon"], steps, s["seed"], s["delta"])
        summary = dict(s, steps=steps, samples=1, final=float(path.values[-1]))
        return Report("sample", Diagnostics(), summary, path_to_dict(path), path_table(path))
    steps = 1 if steps is None else steps
    x = sample_terminal(trip, s["horizon"], count, s["seed"], s["delta"], steps)
    summary = dict(
        s, steps=steps, samples=count, mean=float(np.mean(x)), variance=float(np.var(x))
    )
    rows = [[str(k), fmt(v)] for k, v in enumerate(x)]
    return Report("sample", Diagnostics(), summary, {"values": x}, (["path", "value"], rows))


def ecf_compare_command(**options: Any) -> Report:
    """ECF of X(T) against exp(T f(t)), and divisibility in law"""
    trip = _triplet(options, "ecf-compare")
    s = _sampling(options)
    tgrid = _grid(options, DEFAULT_TGRID)
    count = options.get("samples") or DEFAULT_ECF_SAMPLES
    cmp = ecf_compare(
        trip,
        tgrid,
        count,
        s["seed"],
        s["delta"],
        s["horizon"],
        options.get("multiplier"),
    )
    div = divisibility_in_law(trip, s["horizon"], count, s["seed"], tgrid, s["delta"])
    checks = Diagnostics()
    checks.add(
        _check(
            "ecf",
            "the ECF of X(T) matches exp(T f(t))",
            cmp.deviation,
            cmp.bound,
        )
    )
    checks.add(
        _check(
            "divisibility_in_law",
            "increments over T match sums of two over T / 2",
            div.deviation,
            div.bound,
        )
    )
    summary = dict(s, samples=count, comparison=cmp.to_dict())
    return Report(
        "ecf-compare",
        checks,
        summary,
        ecf_to_dict(cmp.report, cmp.target),
        ecf_table(cmp.report, cmp.target),
    )


COMMANDS: Dict[str, Callable[..., Report]] = {
    "eval": eval_command,
    "convert": convert_command,
    "check-pd": check_pd_command,
    "check-id": check_id_command,
    "gns": gns_command,
    "embed-verify": embed_verify_command,
    "sample": sample_command,
    "ecf-compare": ecf_compare_command,
}

# The pipelines run by the report command, in order
REPORT_TRIPLET = ("eval", "check-pd", "check-id", "gns", "embed-verify", "ecf-compare")
REPORT_FUNCTION = ("check-pd", "check-id", "gns")

# Errors that a report records as failed checks of the offending pipeline
_VERDICT_ERRORS = (
    AliasingError,
    NotPsdError,
    VanishingCharFnError,
    ZeroCrossingError,
)


def report_command(**options: Any) -> Report:
    """Run every applicable pipeline and collect their verdicts"""
    names = REPORT_FUNCTION if options.get("triplet") is None else REPORT_TRIPLET
    checks = Diagnostics()
    summary: Dict[str, Any] = {}
    rows: List[List[str]] = []
    for name in names:
        try:
            sub = COMMANDS[name](**options)
        except _VERDICT_ERRORS as e:
            # A failed verdict of the pipeline, not bad input
            logger.info("%s: %s", name, e)
            checks.add(
                Diagnostic(
                    code="{0}:error".format(name),
                    text="the {0} pipeline completes".format(name),
                    passed=False,
                    detail=str(e),
                )
            )
            summary[name] = {"pass": False, "error": e.to_dict()}
            rows.append([name, "error", "0", "", ""])
            continue
        summary[name] = {"pass": sub.passed, "summary": sub.summary}
        for d in sub.checks:
            checks.add(
                Diagnostic(
                    code="{0}:{1}".format(name, d.code),
                    text=d.text,
                    passed=d.passed,
                    value=d.value,
                    bound=d.bound,
                    detail=d.detail,
                )
            )
            rows.append(
                [
                    name,
                    d.code,
                    "1" if d.passed else "0",
                    "" if d.value is None else fmt(d.value),
                    "" if d.bound is None else fmt(d.bound),
                ]
            )
    return Report("report", checks, summary, {}, (["command", "check", "pass", "value", "bound"], rows))


COMMANDS["report"] = report_command


def run_command(command: str, **options: Any) -> Report:
    """Run the pipeline of a command"""
    if command not in COMMANDS:
        raise ParameterError(
            "Unknown command '{0}'; expected one of {1}".format(
                command, ", ".join(COMMANDS)
            )
        )
    logger.debug("Running %s", command)
    return COMMANDS[command](**options)
