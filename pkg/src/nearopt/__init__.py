"""Near-optimal colourability of (H1, H2)-free graph families."""

from .classifier import Verdict, WitnessDescriptor, classify, materialize_witness, noc_constant
from .graph import Graph, build, complement, disjoint_union, induced, join
from .graph6 import decode as graph6_decode, encode as graph6_encode
from .iso import contains_induced, find_induced, is_free
from .names import parse_graph
from .solver import chromatic_number, clique_number, is_perfect_small

__version__ = "0.1.0"

__all__ = [
    "Graph", "build", "complement", "disjoint_union", "join", "induced",
    "graph6_decode", "graph6_encode", "parse_graph",
    "contains_induced", "find_induced", "is_free",
    "clique_number", "chromatic_number", "is_perfect_small",
    "classify", "materialize_witness", "noc_constant", "Verdict", "WitnessDescriptor",
]
