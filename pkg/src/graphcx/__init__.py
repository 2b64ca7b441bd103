"""Exact-arithmetic engine for graph complexes and pre-Lie pairs."""

from .graphs import (
    ZERO,
    Combination,
    Graph,
    GraphError,
    GraphSyntaxError,
    automorphism_report,
    canonicalize,
    enumerate_basis,
    parse,
    parse_combination,
    serialize,
    serialize_combination,
)

__version__ = "0.1.0"
