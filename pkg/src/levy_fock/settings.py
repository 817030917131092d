"""

    LevyFock: Lévy processes, cocycles and Fock space

    Settings module

    Copyright (C) 2026 LevyFock developers.

    This software is licensed under the MIT License, see LICENSE.txt.


    This module reads and interprets the LevyFock.conf configuration
    file, which holds the numerical defaults of the package: quadrature
    budgets, positivity tolerances, Fock truncation and sampler options.

    Sections are identified like so: [ section_name ]

    Comments start with # signs.

    Sections are interpreted by section handlers. A user file with the
    same syntax can be read on top of the packaged defaults.

"""

from typing import Callable, Dict, List, Optional, Tuple

import logging
import math
import os
import threading

from .basics import ConfigError


logger = logging.getLogger(__name__)

# A set of all strings that should be interpreted as True
TRUE = frozenset(("true", "True", "1", "yes", "Yes"))


def _float(val: str) -> float:
    return float(val)


def _positive_float(val: str) -> float:
    v = float(val)
    if not v > 0.0:
        raise ValueError(val)
    return v


def _positive_int(val: str) -> int:
    v = int(val)
    if v <= 0:
        raise ValueError(val)
    return v


class Settings:

    """Global settings"""

    _lock = threading.Lock()
    loaded = False
    DEBUG = os.environ.get("DEBUG", "").strip() in TRUE

    # [quadrature]
    QUAD_ORDER = 15
    QUAD_MAX_INTERVALS = 1000
    QUAD_TOLERANCE = 1e-10

    # [tolerances]
    PSD_TOL = 1e-8
    HERMITIAN_TOL = 1e-12
    BRANCH_FLOOR = 1e-8
    MAX_PHASE_STEP = math.pi
    EIGEN_FLOOR = 1e-10
    GRAM_REPRODUCTION_TOL = 1e-8
    COBOUNDARY_THRESHOLD = 1e-4
    IDENTITY_TOL = 1e-9

    # [fock]
    FOCK_DEGREE = 12
    FOCK_DIMENSION_BUDGET = 2000000

    # [sampler]
    SAMPLER_DELTA = 0.01
    SAMPLER_BLOCK_SIZE = 4096
    ECF_RADIUS = 4.0
    ECF_MULTIPLIER = 5.0

    # Parameter name -> (attribute name, converter), per section
    _PARAMETERS: Dict[str, Dict[str, Tuple[str, Callable[[str], object]]]] = {
        "quadrature": {
            "order": ("QUAD_ORDER", _positive_int),
            "max_intervals": ("QUAD_MAX_INTERVALS", _positive_int),
            "tolerance": ("QUAD_TOLERANCE", _positive_float),
        },
        "tolerances": {
            "psd": ("PSD_TOL", _positive_float),
            "hermitian": ("HERMITIAN_TOL", _positive_float),
            "branch_floor": ("BRANCH_FLOOR", _positive_float),
            "max_phase_step": ("MAX_PHASE_STEP", _positive_float),
            "eigen_floor": ("EIGEN_FLOOR", _positive_float),
            "gram_reproduction": ("GRAM_REPRODUCTION_TOL", _positive_float),
            "coboundary_threshold": ("COBOUNDARY_THRESHOLD", _positive_float),
            "identity": ("IDENTITY_TOL", _positive_float),
        },
        "fock": {
            "degree": ("FOCK_DEGREE", int),
            "dimension_budget": ("FOCK_DIMENSION_BUDGET", _positive_int),
        },
        "sampler": {
            "delta": ("SAMPLER_DELTA", _float),
            "block_size": ("SAMPLER_BLOCK_SIZE", _positive_int),
            "ecf_radius": ("ECF_RADIUS", _positive_float),
            "ecf_multiplier": ("ECF_MULTIPLIER", _positive_float),
        },
    }

    # Configuration settings from the LevyFock.conf file

    @staticmethod
    def _split(s: str) -> Tuple[str, str]:
        a: List[str] = s.split("=", maxsplit=1)
        if len(a) != 2:
            raise ConfigError("Expected 'name = value', got '{0}'".format(s))
        return a[0].strip().lower(), a[1].strip()

    @staticmethod
    def _handle_settings(s: str) -> None:
        """Handle config parameters in the settings section"""
        par, val = Settings._split(s)
        if par == "debug":
            Settings.DEBUG = Settings.DEBUG or val in TRUE
        else:
            raise ConfigError("Unknown configuration parameter '{0}'".format(par))

    @staticmethod
    def _handle_numeric(section: str, s: str) -> None:
        """Handle a numeric parameter in one of the numeric sections"""
        par, val = Settings._split(s)
        params = Settings._PARAMETERS[section]
        if par not in params:
            raise ConfigError(
                "Unknown parameter '{0}' in {1} section".format(par, section)
            )
        attr, convert = params[par]
        try:
            setattr(Settings, attr, convert(val))
        except ValueError:
            raise ConfigError("Invalid parameter value: {0} = {1}".format(par, val))

    @staticmethod
    def _handle_quadrature(s: str) -> None:
        Settings._handle_numeric("quadrature", s)

    @staticmethod
    def _handle_tolerances(s: str) -> None:
        Settings._handle_numeric("tolerances", s)

    @staticmethod
    def _handle_fock(s: str) -> None:
        Settings._handle_numeric("fock", s)
        if Settings.FOCK_DEGREE < 0:
            raise ConfigError("Fock truncation degree must be nonnegative")

    @staticmethod
    def _handle_sampler(s: str) -> None:
        Settings._handle_numeric("sampler", s)
        if Settings.SAMPLER_DELTA < 0.0:
            raise ConfigError("Small-jump threshold delta must be nonnegative")

    @staticmethod
    def _parse(fname: str, lines: List[str]) -> None:
        """Interpret the lines of a configuration file"""
        CONFIG_HANDLERS: Dict[str, Callable[[str], None]] = {
            "settings": Settings._handle_settings,
            "quadrature": Settings._handle_quadrature,
            "tolerances": Settings._handle_tolerances,
            "fock": Settings._handle_fock,
            "sampler": Settings._handle_sampler,
        }
        handler: Optional[Callable[[str], None]] = None  # Current section handler
        for lineno, s in enumerate(lines, start=1):
            try:
                # Ignore comments
                ix = s.find("#")
                if ix >= 0:
                    s = s[0:ix]
                s = s.strip()
                if not s:
                    # Blank line: ignore
                    continue
                if s[0] == "[" and s[-1] == "]":
                    # New section
                    section = s[1:-1].strip().lower()
                    if section in CONFIG_HANDLERS:
                        handler = CONFIG_HANDLERS[section]
                        continue
                    raise ConfigError("Unknown section name '{0}'".format(section))
                if handler is None:
                    raise ConfigError("No handler for config line '{0}'".format(s))
                # Call the correct handler depending on the section
                handler(s)
            except ConfigError as e:
                # Add file name and line number information to the exception
                # if it's not already there
                e.set_pos(fname, lineno)
                raise e

    @staticmethod
    def read(fname: str) -> None:
        """Read the packaged configuration file, once"""

        with Settings._lock:

            if Settings.loaded:
                return

            path = os.path.join(os.path.dirname(__file__), fname)
            try:
                with open(path, "r", encoding="utf-8") as f:
                    lines = f.readlines()
            except OSError as e:
                raise ConfigError("Unable to read {0}: {1}".format(path, e))
            Settings._parse(fname, lines)
            Settings.loaded = True
            logger.debug("Read configuration from %s", path)

    @staticmethod
    def read_file(path: str) -> None:
        """Read a user configuration file on top of the current settings"""

        with Settings._lock:
            try:
                with open(path, "r", encoding="utf-8") as f:
                    lines = f.readlines()
            except OSError as e:
                raise ConfigError("Unable to read {0}: {1}".format(path, e))
            Settings._parse(path, lines)
            logger.debug("Read configuration overrides from %s", path)

    @staticmethod
    def effective() -> Dict[str, object]:
        """Return the effective numeric settings, keyed by section.parameter"""
        return {
            "{0}.{1}".format(section, par): getattr(Settings, attr)
            for section, params in Settings._PARAMETERS.items()
            for par, (attr, _) in params.items()
        }

    @staticmethod
    def snapshot() -> Dict[str, object]:
        """Return the current values of all settings attributes"""
        attrs = [
            attr for params in Settings._PARAMETERS.values() for attr, _ in params.values()
        ]
        snap: Dict[str, object] = {attr: getattr(Settings, attr) for attr in attrs}
        snap["DEBUG"] = Settings.DEBUG
        return snap

    @staticmethod
    def restore(snap: Dict[str, object]) -> None:
        """Reset settings attributes to the values of a snapshot"""
        with Settings._lock:
            for attr, val in snap.items():
                setattr(Settings, attr, val)
