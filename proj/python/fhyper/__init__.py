"""Finite hypergeometric sums and point counts over finite fields."""

from ._core import (
    Error,
    cli,
    count,
    curve_count,
    field_info,
    h_general,
    h_over_q,
    p_rs,
    run_suite,
)

__all__ = [
    "Error",
    "cli",
    "count",
    "curve_count",
    "field_info",
    "h_general",
    "h_over_q",
    "p_rs",
    "run_suite",
]
