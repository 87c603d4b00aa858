"""Signless Laplacian spectral radii and exhaustive Turan-type extremal
graph search at desk scale."""

from .graphs import (
    Graph,
    GraphError,
    Graph6Error,
    canonical_form,
    complete,
    complete_bipartite,
    cycle,
    empty,
    from_graph6,
    path,
    petersen,
    star,
    to_graph6,
    turan,
)
from .patterns import ForbiddenPattern, chromatic_number, contains_subgraph, is_free
from .search import ExtremalRecord, SearchConfig, enumerate_free, extremal
from .spectra import SpectralResult, rayleigh_q, spectral_radius

__version__ = "0.1.0"

__all__ = [
    "Graph",
    "GraphError",
    "Graph6Error",
    "ForbiddenPattern",
    "SpectralResult",
    "SearchConfig",
    "ExtremalRecord",
    "canonical_form",
    "chromatic_number",
    "complete",
    "complete_bipartite",
    "contains_subgraph",
    "cycle",
    "empty",
    "enumerate_free",
    "extremal",
    "from_graph6",
    "is_free",
    "path",
    "petersen",
    "rayleigh_q",
    "spectral_radius",
    "star",
    "to_graph6",
    "turan",
]
