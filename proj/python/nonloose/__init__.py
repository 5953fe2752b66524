"""Non-loose Legendrian rational unknots in lens spaces, with the Farey-graph
and continued-fraction arithmetic underneath."""

from ._core import (
    Slope,
    admits_nonloose,
    ancestor,
    block_structure,
    classify,
    classify_svg,
    count_tight,
    divide_cable_tb,
    dot,
    expand,
    farey_sum,
    has_edge,
    minimal_path,
    positive_cable,
    range_counts,
    ruling_cable_tb,
    run_cli,
    self_linking,
    successor,
    transnonsimple_family,
    value,
)

__all__ = [
    "Slope",
    "admits_nonloose",
    "ancestor",
    "block_structure",
    "classify",
    "classify_svg",
    "count_tight",
    "divide_cable_tb",
    "dot",
    "expand",
    "farey_sum",
    "has_edge",
    "minimal_path",
    "positive_cable",
    "range_counts",
    "ruling_cable_tb",
    "run_cli",
    "self_linking",
    "successor",
    "transnonsimple_family",
    "value",
]
