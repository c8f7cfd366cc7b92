"""Irregular-smoothing invariants of link diagrams and Reidemeister move bounds."""

from .diagram import (  # noqa: F401
    Crossing,
    DiagramError,
    LinkDiagram,
    SignMatrixPair,
    ValidationReport,
    canonical_form,
    crossing_sign,
    faces,
    linking_matrix,
    mirror,
    reverse_component,
    validate,
    writhe,
)

__version__ = "0.1.0"
