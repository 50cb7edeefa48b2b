"""Exact fibonomial operator calculus and cobweb poset toolkit."""

from fibcalc._core import (
    __version__,
    basic_coeffs,
    basic_sequence,
    chain_x,
    chain_y,
    export_dot,
    f_factorial,
    f_falling,
    fibonomial,
    is_regular,
    level_sizes,
    sheffer_coeffs,
    sheffer_sequence,
    term,
    verify_binomial_type,
    verify_gf,
    verify_realizer,
    verify_sheffer_gf,
    verify_transfer,
)

__all__ = [
    "__version__",
    "basic_coeffs",
    "basic_sequence",
    "chain_x",
    "chain_y",
    "export_dot",
    "f_factorial",
    "f_falling",
    "fibonomial",
    "is_regular",
    "level_sizes",
    "sheffer_coeffs",
    "sheffer_sequence",
    "term",
    "verify_binomial_type",
    "verify_gf",
    "verify_realizer",
    "verify_sheffer_gf",
    "verify_transfer",
]
