from nonrainbow.graph import MultiGraph, SpanningTree, ClosedWalk, build_graph  # noqa: F401
from nonrainbow.surface import (  # noqa: F401
    SurfaceKind, Triangulation, validate_triangulation, classify_surface,
)
from nonrainbow.coloring import Coloring, make_coloring, is_non_rainbow  # noqa: F401
from nonrainbow.homology import is_null_coloring, smith_normal_form  # noqa: F401
from nonrainbow.search import SearchBudget, chi_f, max_null, bound  # noqa: F401

__version__ = '0.1.0.dev0'
__all__ = [
    'MultiGraph', 'SpanningTree', 'Triangulation', 'SurfaceKind', 'Coloring', 'SearchBudget',
    'validate_triangulation', 'chi_f', 'max_null']
