"""Combinatorial 1-planar drawings with their C0/C1/C2 classes, plus graph joins."""

from .drawing import CrossingSpec, Drawing, DrawingClass, drawing_class, validate_drawing
from .graphs import Graph, join, parse_graph_name
from .search import GraphClass, SearchBudget, classify_graph, min_one_planar_crossings

__all__ = [
    "CrossingSpec",
    "Drawing",
    "DrawingClass",
    "Graph",
    "GraphClass",
    "SearchBudget",
    "classify_graph",
    "drawing_class",
    "join",
    "min_one_planar_crossings",
    "parse_graph_name",
    "validate_drawing",
]
