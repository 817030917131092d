"""

    LevyFock: Lévy processes, cocycles and Fock space

    Copyright (C) 2026 LevyFock developers.

    This software is licensed under the MIT License, see LICENSE.txt.


    LevyFock evaluates characteristic exponents of Lévy triplets, tests
    positive definiteness and infinite divisibility on finite grids,
    realizes the associated one-cocycles by a finite-rank GNS construction,
    verifies the Weyl representation on coherent states of the truncated
    Fock space, and samples the processes for distributional cross-checks.

"""

# Expose the levy-fock API

from .settings import Settings

from .basics import (
    ERROR_CLASS_REGISTRY,
    LevyFockError,
    InputError,
    ConfigError,
    IntegrabilityError,
    DivergentMomentError,
    InadmissibleConventionError,
    QuadratureError,
    UnevaluableError,
    NonHermitianError,
    ZeroCrossingError,
    AliasingError,
    NotPsdError,
    TruncationOverflowError,
    VanishingCharFnError,
    SamplingError,
    ConsistencyError,
)

from .quadrature import QuadratureSpec
from .densities import Density, UniformDensity, PowerDensity, GaussianL2Density

# Characteristic exponents
from .exponent import (
    Convention,
    LevyMeasure,
    LevyTriplet,
    CharExponentGrid,
    levy_measure_moments,
    eval_exponent,
    eval_exponent_grid,
    char_fn,
    char_fn_grid,
    convert,
    validate_triplet,
    cumulants,
)

# Positivity
from .posdef import (
    GridFunction,
    PsdVerdict,
    gram,
    psd_check,
    log_branch,
    conditional_psd_check,
    infinite_divisibility_check,
    multiplier_residual,
    coboundary_multiplier,
)

# Cocycles
from .gns import (
    KernelMatrix,
    CocycleRealization,
    kernel,
    kernel_matrix,
    triplet_kernel_matrix,
    realize_cocycle,
    shift_covariance_residual,
    coboundary_residual,
    shift_operator,
    group_law_residual,
)

# Fock space
from .fock import (
    TruncatedFock,
    CoherentVector,
    coherent_vector,
    coherent_inner,
    weyl_gram,
    coherent_gram,
    weyl_unitarity_residual,
    vacuum_expectation,
    representation_residual,
    embedding_gram,
)

# Sampling
from .sampler import (
    SamplePath,
    EcfReport,
    sample_increments,
    sample_path,
    sample_terminal,
    ecf,
    ecf_compare,
    product_charfn,
    divisibility_in_law,
)

from .diagnostics import Diagnostic, Diagnostics
from .serializers import load_triplet, loads_triplet, reference_triplet
from .wrappers import run_command

from .version import __version__

__author__ = "LevyFock developers"
__copyright__ = "(C) 2026 LevyFock developers"

__all__ = (
    "Settings",
    "ERROR_CLASS_REGISTRY",
    "LevyFockError",
    "InputError",
    "ConfigError",
    "IntegrabilityError",
    "DivergentMomentError",
    "InadmissibleConventionError",
    "QuadratureError",
    "UnevaluableError",
    "NonHermitianError",
    "ZeroCrossingError",
    "AliasingError",
    "NotPsdError",
    "TruncationOverflowError",
    "VanishingCharFnError",
    "SamplingError",
    "ConsistencyError",
    "QuadratureSpec",
    "Density",
    "UniformDensity",
    "PowerDensity",
    "GaussianL2Density",
    "Convention",
    "LevyMeasure",
    "LevyTriplet",
    "CharExponentGrid",
    "levy_measure_moments",
    "eval_exponent",
    "eval_exponent_grid",
    "char_fn",
    "char_fn_grid",
    "convert",
    "validate_triplet",
    "cumulants",
    "GridFunction",
    "PsdVerdict",
    "gram",
    "psd_check",
    "log_branch",
    "conditional_psd_check",
    "infinite_divisibility_check",
    "multiplier_residual",
    "coboundary_multiplier",
    "KernelMatrix",
    "CocycleRealization",
    "kernel",
    "kernel_matrix",
    "triplet_kernel_matrix",
    "realize_cocycle",
    "shift_covariance_residual",
    "coboundary_residual",
    "shift_operator",
    "group_law_residual",
    "TruncatedFock",
    "CoherentVector",
    "coherent_vector",
    "coherent_inner",
    "weyl_gram",
    "coherent_gram",
    "weyl_unitarity_residual",
    "vacuum_expectation",
    "representation_residual",
    "embedding_gram",
    "SamplePath",
    "EcfReport",
    "sample_increments",
    "sample_path",
    "sample_terminal",
    "ecf",
    "ecf_compare",
    "product_charfn",
    "divisibility_in_law",
    "Diagnostic",
    "Diagnostics",
    "load_triplet",
    "loads_triplet",
    "reference_triplet",
    "run_command",
    "__version__",
    "__author__",
    "__copyright__",
)

Settings.read("config/LevyFock.conf")
