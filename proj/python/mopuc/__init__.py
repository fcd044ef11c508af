"""Block CMV / Hessenberg operators, matrix Schur functions and overlapping factorizations."""

from ._mopuc import (
    ConsistencyError,
    InvariantError,
    build_operator,
    check_overlap,
    construct_overlap,
    example_names,
    first_return_amplitudes,
    oracle_first_return,
    random_parameters,
    return_probabilities,
    run_campaign,
    schur_of_subspace,
    schur_parameters,
    synthesize,
    verify_example,
    verify_range,
    verify_site,
    verify_superposition,
)

__all__ = [
    "ConsistencyError",
    "InvariantError",
    "build_operator",
    "check_overlap",
    "construct_overlap",
    "example_names",
    "first_return_amplitudes",
    "oracle_first_return",
    "random_parameters",
    "return_probabilities",
    "run_campaign",
    "schur_of_subspace",
    "schur_parameters",
    "synthesize",
    "verify_example",
    "verify_range",
    "verify_site",
    "verify_superposition",
]
