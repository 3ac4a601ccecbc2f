"""Exact computational algebra for graphic matroids: coherent cotrees,
activity bases, face-stratified cochain complexes, and their graded
invariants, all over the integers."""

from .activity import (
    CoherentCotree,
    Shelling,
    basis_B,
    coherent_cotree,
    cotree_in,
    external_activity,
    h_polynomial,
    internal_activity,
    lex_shelling,
    tutte,
    tutte_by_activity,
)
from .checks import CHECKS, GraphContext, run_checks
from .cks import (
    CKSComplex,
    DelConCKS,
    build_cks,
    cks_cohomology,
    delcon_cks,
    euler_recurrence_holds,
    euler_table,
    h_hat,
    tutte_loop_specialization,
)
from .corpus import corpus_graphs, enumerate_connected_multigraphs, named_graphs
from .errors import CksKitError
from .graphs import (
    CycleBasis,
    FaceComplex,
    Graph,
    build_graph,
    face_complex,
    fundamental_cycle,
    graph_from_dsl,
    graph_from_json,
    graph_to_json,
    is_generic_character,
    spanning_cotrees,
    spanning_tree_count,
    wedge,
)
from .ht import (
    ChoiceFunction,
    DelConR,
    FGH,
    HTComplex,
    RRing,
    build_ht,
    delcon_r,
    maps_fgh,
    r_ring,
    reduce_monomial,
)
from .intlinalg import (
    CochainComplex,
    SmithForm,
    smith_normal_form,
    verify_direct_sum,
)
from .periodize import (
    DelConPeriodized,
    PeriodizedGraph,
    delcon_r_periodized,
    periodize_graph,
    periodized_cotree,
)
from .polynomials import Poly1, Poly2

__version__ = "0.1.0"

__all__ = [
    "CHECKS",
    "CKSComplex",
    "ChoiceFunction",
    "CksKitError",
    "CochainComplex",
    "CoherentCotree",
    "CycleBasis",
    "DelConCKS",
    "DelConPeriodized",
    "DelConR",
    "FGH",
    "FaceComplex",
    "Graph",
    "GraphContext",
    "HTComplex",
    "PeriodizedGraph",
    "Poly1",
    "Poly2",
    "RRing",
    "Shelling",
    "SmithForm",
    "basis_B",
    "build_cks",
    "build_graph",
    "build_ht",
    "cks_cohomology",
    "coherent_cotree",
    "corpus_graphs",
    "cotree_in",
    "delcon_cks",
    "delcon_r",
    "delcon_r_periodized",
    "enumerate_connected_multigraphs",
    "euler_recurrence_holds",
    "euler_table",
    "external_activity",
    "face_complex",
    "fundamental_cycle",
    "graph_from_dsl",
    "graph_from_json",
    "graph_to_json",
    "h_hat",
    "h_polynomial",
    "internal_activity",
    "is_generic_character",
    "lex_shelling",
    "maps_fgh",
    "named_graphs",
    "periodize_graph",
    "periodized_cotree",
    "r_ring",
    "reduce_monomial",
    "run_checks",
    "smith_normal_form",
    "spanning_cotrees",
    "spanning_tree_count",
    "tutte",
    "tutte_by_activity",
    "tutte_loop_specialization",
    "verify_direct_sum",
    "wedge",
]
