"""Fundamental N-quandles of links, enumerated by tracing and collapsing."""

from ._core import (
    CatalogError,
    Outcome,
    Presentation,
    PresentationError,
    Quandle,
    augment_orders,
    builtin_family,
    builtin_family_ids,
    diagram_to_presentation,
    enumerate,
    expected_cardinality,
    is_isomorphic,
    parse_presentation,
)

__version__ = "0.1.0"


def quandle(family, orders, k=None, **limits):
    """Enumerate a builtin family with N attached; None if a cap is hit."""
    p = augment_orders(builtin_family(family, k), list(orders))
    return enumerate(p, **limits).quandle
