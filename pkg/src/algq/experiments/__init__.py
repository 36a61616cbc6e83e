"""Executable worked scenarios built on the core algebra."""

from .chsh import (
    CHSHConfig,
    CHSHResult,
    chsh_classical_bound_exhaustive,
    chsh_classical_simulation,
    chsh_N,
    chsh_quantum_correlation,
)
from .epr import EPRResult, epr_scenario
from .kochen_specker import (
    KSInstance,
    KSSearchResult,
    bundled_uncolorable_instance,
    ks_search,
    single_triple_instance,
    spin1_squared_observables,
)
from .oscillator import (
    OscillatorConfig,
    green_function,
    oscillator_green,
    oscillator_ground_projector,
)
from .two_level import TwoLevelReport, two_level_scenario
from .two_slit import TwoSlitConfig, TwoSlitResult, two_slit_distribution

__all__ = [
    "CHSHConfig",
    "CHSHResult",
    "chsh_classical_bound_exhaustive",
    "chsh_classical_simulation",
    "chsh_N",
    "chsh_quantum_correlation",
    "EPRResult",
    "epr_scenario",
    "KSInstance",
    "KSSearchResult",
    "bundled_uncolorable_instance",
    "ks_search",
    "single_triple_instance",
    "spin1_squared_observables",
    "OscillatorConfig",
    "green_function",
    "oscillator_green",
    "oscillator_ground_projector",
    "TwoLevelReport",
    "two_level_scenario",
    "TwoSlitConfig",
    "TwoSlitResult",
    "two_slit_distribution",
]
