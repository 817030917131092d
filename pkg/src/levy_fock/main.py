#!/usr/bin/env python
"""

    LevyFock: Lévy processes, cocycles and Fock space

    Command line interface

    Copyright (C) 2026 LevyFock developers.

    This software is licensed under the MIT License, see LICENSE.txt.


    This is an executable program wrapper (main module) for the LevyFock
    package. It runs the verification pipelines from the command line
    with the command 'levyfock'. The main() function of this module is
    registered as a console_script entry point in setup.py.

    Exit codes:

    0   every check passed
    1   a mathematical verdict failed (not PSD, not infinitely divisible,
        a residual above its bound)
    2   usage or input error; nothing is written

    Every report is computed completely before anything is written. With
    --out, the report goes to <dir>/<command>.<format> together with
    <dir>/<command>.manifest.json, which records the inputs, seeds and
    effective settings needed to reproduce it. Without --out, the report
    is written to standard output.

"""

from typing import Any, Dict, List, Optional, Sequence

import argparse
import logging
import os
import sys
import time
from datetime import datetime, timezone

from .basics import EXIT_OK, EXIT_USAGE, EXIT_VERDICT, InputError, LevyFockError
from .serializers import (
    digest,
    dumps,
    jsonable,
    load_grid_function,
    load_triplet,
    parse_grid,
    reference_document,
    reference_names,
    reference_triplet,
)
from .settings import Settings
from .version import __version__
from .wrappers import FORMATS, Report, run_command


logger = logging.getLogger(__name__)

COMMAND_HELP = {
    "eval": "Evaluate the characteristic exponent and function on a grid",
    "convert": "Re-express a triplet in another centering convention",
    "check-pd": "Test the Gram matrix of F for positive semidefiniteness",
    "check-id": "Test the n-th roots of F for positive definiteness",
    "gns": "Build and realize the cocycle kernel; detect coboundaries",
    "embed-verify": "Verify the Weyl representation on coherent states",
    "sample": "Sample a path, or the values X(T) of many paths",
    "ecf-compare": "Compare the empirical characteristic function with exp(T f)",
    "report": "Run every applicable pipeline",
}


def _positive_int(val: str) -> int:
    try:
        v = int(val)
    except ValueError:
        raise argparse.ArgumentTypeError("'{0}' is not an integer".format(val))
    if v < 1:
        raise argparse.ArgumentTypeError("expected a positive integer, not {0}".format(v))
    return v


def _nonnegative_int(val: str) -> int:
    try:
        v = int(val)
    except ValueError:
        raise argparse.ArgumentTypeError("'{0}' is not an integer".format(val))
    if v < 0:
        raise argparse.ArgumentTypeError("expected an integer >= 0, not {0}".format(v))
    return v


def _seed(val: str) -> int:
    v = _nonnegative_int(val)
    if v >= 2 ** 64:
        raise argparse.ArgumentTypeError("the seed must fit in 64 bits")
    return v


def _float(val: str) -> float:
    try:
        return float(val)
    except ValueError:
        raise argparse.ArgumentTypeError("'{0}' is not a number".format(val))


def _positive_float(val: str) -> float:
    v = _float(val)
    if not v > 0.0:
        raise argparse.ArgumentTypeError("expected a positive number, not {0}".format(v))
    return v


# Define the command line arguments

common = argparse.ArgumentParser(add_help=False)

common.add_argument(
    "--input",
    "-i",
    type=str,
    help="Triplet JSON document, or a grid function CSV file (t, re, im) if it ends in .csv",
)
common.add_argument(
    "--reference",
    "-r",
    type=str,
    help="Use a built-in reference triplet: gaussian, poisson, mixed, power, point_mass",
)
common.add_argument(
    "--grid",
    "-g",
    type=str,
    help="Grid lo:hi:step, such as -4:4:0.5",
)
common.add_argument("--nmax", type=_positive_int, help="Largest root order n (check-id)")
common.add_argument("--tol", type=_positive_float, help="PSD tolerance")
common.add_argument("--seed", type=_seed, default=0, help="Master seed of the sampler")
common.add_argument("--delta", type=_float, help="Small-jump threshold of the sampler")
common.add_argument("--out", "-o", type=str, help="Output directory")

# Determines the output format
common.add_argument(
    "--format",
    "-f",
    choices=FORMATS,
    default="json",
    help="json: the full report; csv: its plot-ready table",
)
common.add_argument("--target", type=str, help="Target convention (convert)")
common.add_argument("--shift", type=_float, help="Shift h (gns, embed-verify)")
common.add_argument("--shift2", type=_float, help="Second shift for composition checks")
common.add_argument("--degree", type=_nonnegative_int, help="Fock truncation degree")
common.add_argument("--samples", "-n", type=_positive_int, help="Number of sampled paths")
common.add_argument("--horizon", type=_positive_float, help="Time horizon T")
common.add_argument("--steps", type=_positive_int, help="Steps per sampled path")
common.add_argument(
    "--threshold", type=_positive_float, help="Coboundary threshold for the normalized residual"
)
common.add_argument(
    "--multiplier", type=_positive_float, help="ECF bound multiplier: pass within m / sqrt(n)"
)
common.add_argument("--config", type=str, help="Configuration file with overrides")
common.add_argument("--debug", action="store_true", help="Log debug output")

parser = argparse.ArgumentParser(
    prog="levyfock",
    description="Lévy processes, positive definite functions, cocycles and Fock space",
)
parser.add_argument("--version", action="version", version=__version__)
subparsers = parser.add_subparsers(dest="command", metavar="command")
subparsers.required = True
for _name, _help in COMMAND_HELP.items():
    subparsers.add_parser(_name, parents=[common], help=_help, description=_help)


class _Inputs:

    """The documents a run reads, with their digests"""

    def __init__(self) -> None:
        self.options: Dict[str, Any] = {}
        self.digests: Dict[str, str] = {}


def _read_inputs(args: argparse.Namespace) -> _Inputs:
    inputs = _Inputs()
    if args.input and args.reference:
        raise InputError("Give either --input or --reference, not both")
    if args.reference:
        doc = reference_document(args.reference)
        inputs.options["triplet"] = reference_triplet(args.reference)
        inputs.digests["reference:" + args.reference] = digest(dumps(doc))
    elif args.input:
        try:
            with open(args.input, "rb") as f:
                inputs.digests[args.input] = digest(f.read())
        except OSError as e:
            raise InputError("Unable to read {0}: {1}".format(args.input, e))
        if args.input.lower().endswith(".csv"):
            inputs.options["function"] = load_grid_function(args.input)
        else:
            inputs.options["triplet"] = load_triplet(args.input)
    else:
        raise InputError(
            "No input: give --input <file> or --reference <name> ({0})".format(
                ", ".join(reference_names())
            )
        )
    if args.grid is not None:
        inputs.options["grid"] = parse_grid(args.grid)
    for key in (
        "nmax",
        "tol",
        "seed",
        "delta",
        "target",
        "shift",
        "shift2",
        "degree",
        "samples",
        "horizon",
        "steps",
        "threshold",
        "multiplier",
    ):
        val = getattr(args, key)
        if val is not None:
            inputs.options[key] = val
    return inputs


def _manifest(
    args: argparse.Namespace,
    argv: Sequence[str],
    inputs: _Inputs,
    report: Report,
    outputs: Dict[str, str],
    started: datetime,
    elapsed: float,
) -> Dict[str, Any]:
    options = {
        k: v for k, v in inputs.options.items() if k not in ("triplet", "function")
    }
    return {
        "tool": "levyfock",
        "version": __version__,
        "command": args.command,
        "argv": list(argv),
        "inputs": inputs.digests,
        "seed": args.seed,
        "options": jsonable(options),
        "settings": Settings.effective(),
        "outputs": outputs,
        "pass": report.passed,
        "started": started.isoformat(),
        "elapsed": round(elapsed, 3),
    }


def _write(
    args: argparse.Namespace,
    argv: Sequence[str],
    inputs: _Inputs,
    report: Report,
    text: str,
    started: datetime,
    elapsed: float,
) -> None:
    """Write the report and its manifest to the output directory"""
    os.makedirs(args.out, exist_ok=True)
    name = "{0}.{1}".format(args.command, args.format)
    manifest = _manifest(
        args, argv, inputs, report, {name: digest(text)}, started, elapsed
    )
    with open(os.path.join(args.out, name), "w", encoding="utf-8", newline="") as f:
        f.write(text)
    with open(
        os.path.join(args.out, "{0}.manifest.json".format(args.command)),
        "w",
        encoding="utf-8",
    ) as f:
        f.write(dumps(manifest, indent=2) + "\n")
    logger.info("Wrote %s and its manifest to %s", name, args.out)


def _attach_grid(argv: List[str]) -> List[str]:
    """Join a grid value to its flag, so that argparse accepts
    --grid -4:4:0.5 although the value starts with a dash"""
    out: List[str] = []
    it = iter(argv)
    for a in it:
        if a in ("--grid", "-g"):
            val = next(it, None)
            out.append(a if val is None else "--grid=" + val)
        else:
            out.append(a)
    return out


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Run the levyfock command with the given arguments; return the exit code"""
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = parser.parse_args(_attach_grid(argv))
    except SystemExit as e:
        # argparse has already printed its message
        return EXIT_OK if not e.code else EXIT_USAGE
    logging.basicConfig(
        stream=sys.stderr,
        level=logging.DEBUG if (args.debug or Settings.DEBUG) else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    snap = Settings.snapshot()
    started = datetime.now(timezone.utc)
    t0 = time.perf_counter()
    try:
        if args.config:
            Settings.read_file(args.config)
        inputs = _read_inputs(args)
        report = run_command(args.command, **inputs.options)
        text = report.render(args.format)
        elapsed = time.perf_counter() - t0
        if args.out:
            _write(args, argv, inputs, report, text, started, elapsed)
        else:
            sys.stdout.write(text)
    except LevyFockError as e:
        print("levyfock: {0}".format(e), file=sys.stderr)
        return e.exit_code
    except OSError as e:
        print("levyfock: unable to write output: {0}".format(e), file=sys.stderr)
        return EXIT_USAGE
    finally:
        Settings.restore(snap)
    for d in report.checks.failures():
        print("levyfock: {0}".format(d), file=sys.stderr)
    return EXIT_OK if report.passed else EXIT_VERDICT


def main() -> None:
    """Main function, called when the 'levyfock' command is invoked"""
    sys.exit(run())


if __name__ == "__main__":
    main()
