"""Toolkit for p_ell(n): the most edges an n-vertex graph can have without two
equal-degree vertices joined by a path of exactly ell edges."""

__version__ = "0.1.0"

from .graph import Graph, Graph6Error, degree_sequence, from_graph6, to_graph6  # noqa: E402
from .canon import CanonicalForm, canonical_form  # noqa: E402
from .paths import PathWitness, Violation, find_violation, path_of_length, verify_witness  # noqa: E402
from .constructions import Certificate, certificate, complete_bipartite, half_graph  # noqa: E402

__all__ = [
    "Graph",
    "Graph6Error",
    "degree_sequence",
    "from_graph6",
    "to_graph6",
    "CanonicalForm",
    "canonical_form",
    "PathWitness",
    "Violation",
    "find_violation",
    "path_of_length",
    "verify_witness",
    "Certificate",
    "certificate",
    "complete_bipartite",
    "half_graph",
]
