"""Entanglement witnesses for truncated multimode Fock states."""

import json

from ._core import (
    LeakageError,
    OracleCapExceeded,
    State,
    __version__,
    bell_su11,
    bell_su2,
    build_state_json,
    coherent_product,
    cross_check,
    evaluate_all,
    evaluate_witness,
    fock,
    hermitian_eigenvalues,
    ppt_analysis,
    random_pure,
    random_separable,
    three_mode_hz,
    tmsv,
    witness_names,
)


def build_state(spec, leakage_limit=1e-4, seed=0):
    """Build a state from a StateSpec dict (the same schema the CLI reads)."""
    return build_state_json(json.dumps(spec), leakage_limit, seed)


__all__ = [
    "LeakageError",
    "OracleCapExceeded",
    "State",
    "__version__",
    "bell_su11",
    "bell_su2",
    "build_state",
    "coherent_product",
    "cross_check",
    "evaluate_all",
    "evaluate_witness",
    "fock",
    "hermitian_eigenvalues",
    "ppt_analysis",
    "random_pure",
    "random_separable",
    "three_mode_hz",
    "tmsv",
    "witness_names",
]
