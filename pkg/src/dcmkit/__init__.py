"""Double competition multigraphs of digraphs.

The double competition multigraph of a digraph assigns to each vertex pair
{x, y} the multiplicity |N+(x) ∩ N+(y)| * |N-(x) ∩ N-(y)|. This package
computes the operator and its single-sided and simple-graph variants,
extracts and verifies double-indexed edge clique partition certificates
characterizing which multigraphs arise from arbitrary, loopless, reflexive,
and acyclic digraphs, and decides recognition by exhaustive search at small
orders.
"""

from .certificate import (
    MAX_WITNESSES,
    CliqueFamily,
    DerivedSets,
    DigraphClass,
    VerificationReport,
    Witness,
    canonical_family,
    check_condition_I,
    check_condition_II,
    check_condition_III,
    check_condition_IV,
    derived_sets,
    family_from_json,
    family_to_json,
    is_acyclic_ordering,
    is_edge_clique_partition,
    reconstruct_digraph,
    verify_certificate,
)
from .competition import (
    SimpleGraph,
    competition_graph,
    competition_multigraph,
    double_competition_graph,
    double_competition_multigraph,
    reverse,
    simple_graph_from_json,
    simple_graph_to_json,
)
from .graphs import (
    Digraph,
    GraphFormatError,
    Multigraph,
    VertexSet,
    acyclic_ordering,
    digraph_from_json,
    digraph_to_json,
    is_acyclic,
    multigraph_from_json,
    multigraph_to_json,
)
from .recognition import (
    DEFAULT_BOUND,
    HARD_CAP,
    CatalogRow,
    RecognitionResult,
    bound_ceiling,
    catalog,
    class_member,
    class_size,
    enumerate_digraphs,
    recognize,
)

__version__ = "0.1.0"

__all__ = [
    "CatalogRow",
    "CliqueFamily",
    "DEFAULT_BOUND",
    "DerivedSets",
    "Digraph",
    "DigraphClass",
    "GraphFormatError",
    "HARD_CAP",
    "MAX_WITNESSES",
    "Multigraph",
    "RecognitionResult",
    "SimpleGraph",
    "VerificationReport",
    "VertexSet",
    "Witness",
    "acyclic_ordering",
    "bound_ceiling",
    "canonical_family",
    "catalog",
    "check_condition_I",
    "check_condition_II",
    "check_condition_III",
    "check_condition_IV",
    "class_member",
    "class_size",
    "competition_graph",
    "competition_multigraph",
    "derived_sets",
    "digraph_from_json",
    "digraph_to_json",
    "double_competition_graph",
    "double_competition_multigraph",
    "enumerate_digraphs",
    "family_from_json",
    "family_to_json",
    "is_acyclic",
    "is_acyclic_ordering",
    "is_edge_clique_partition",
    "multigraph_from_json",
    "multigraph_to_json",
    "recognize",
    "reconstruct_digraph",
    "reverse",
    "simple_graph_from_json",
    "simple_graph_to_json",
    "verify_certificate",
]
