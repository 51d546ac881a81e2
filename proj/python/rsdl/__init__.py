"""Exact distance distributions of Reed-Solomon codes over small fields."""

from ._rsdl import (
    RsdlError,
    census,
    classify,
    count_m,
    count_n2,
    count_n_all,
    distance_distribution,
    field_info,
    knopfmacher_nxk,
    macwilliams_n0,
    main_term,
    run_cli,
    verify_bound,
)

__all__ = [
    "RsdlError",
    "census",
    "classify",
    "count_m",
    "count_n2",
    "count_n_all",
    "distance_distribution",
    "field_info",
    "knopfmacher_nxk",
    "macwilliams_n0",
    "main_term",
    "run_cli",
    "verify",
    "verify_bound",
]


def verify(suite, *args):
    """Run `rsdl verify <suite>` in-process; returns the parsed JSON summaries."""
    import json

    code, out, err = run_cli(["verify", suite, *map(str, args)])
    if code not in (0, 1):
        raise RsdlError(err.strip())
    return [json.loads(line) for line in out.splitlines() if line]
