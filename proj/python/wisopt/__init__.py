"""Certified r(a)-best optimization over weighted independence systems."""

from ._core import (
    GapData,
    Instance,
    SolveReport,
    adversary_run,
    block_subtuple,
    brute_force_solve,
    certify,
    compute_Y,
    frobenius,
    g_bound,
    gap_data,
    gcd_tuple,
    generate_instance,
    is_saturated,
    load_instance,
    load_instance_json,
    make_example_3_1,
    missing_saturation_values,
    r_bound,
    restricted_monoid,
    schur_bound,
    solve,
)

__all__ = [
    "GapData",
    "Instance",
    "SolveReport",
    "adversary_run",
    "block_subtuple",
    "brute_force_solve",
    "certify",
    "compute_Y",
    "frobenius",
    "g_bound",
    "gap_data",
    "gcd_tuple",
    "generate_instance",
    "is_saturated",
    "load_instance",
    "load_instance_json",
    "make_example_3_1",
    "missing_saturation_values",
    "r_bound",
    "restricted_monoid",
    "schur_bound",
    "solve",
]

__version__ = "0.1.0"
