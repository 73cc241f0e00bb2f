"""Stability of Schubert varieties, Kempf destabilizers and lattice simulations."""

from ._schubstab import (
    ComputationError,
    ValidationError,
    classification_csv,
    classification_json,
    classify,
    classify_all,
    dimension,
    dual_pencil,
    hasse_dot,
    leading_report,
    list_pencils,
    optimal_destabilizer,
    shortest_sup,
    siegel_count,
    simulate_config,
)

__all__ = [
    "ComputationError",
    "ValidationError",
    "classification_csv",
    "classification_json",
    "classify",
    "classify_all",
    "dimension",
    "dual_pencil",
    "hasse_dot",
    "leading_report",
    "list_pencils",
    "optimal_destabilizer",
    "shortest_sup",
    "siegel_count",
    "simulate_config",
]
