"""Exact computer algebra for the gamma-indexed dendriform family of operads.

The package builds the polydendriform, multiassociative, dual
multiassociative, multiplicial and polytridendriform presentations,
computes Koszul duals and quotient dimensions in exact arithmetic,
runs the associated quadratic rewrite systems, realizes the free
algebras on labeled trees, and machine-checks the classification and
morphism statements tying the family together.
"""

from .associativity import (
    QuadraticSystem,
    classify_associative_modp,
    element,
    extract_quadratic_system,
    is_associative,
)
from .butterfly import (
    MultilinearTerm,
    sh,
    verify_com_from_zin,
    verify_dendr_from_zin,
    zin_normal_form,
)
from .hilbert import (
    DimSeries,
    catalan,
    check_koszul_inverse,
    compose_series,
    dims,
    narayana,
    series_from_equation,
)
from .linear import Basis, LinComb, lincomb, member, orthogonal_complement, span_basis
from .presentations import (
    GeneratorSubstitution,
    Presentation,
    build_presentation,
    check_morphism,
    comp,
    diamond_from_lozenge,
    ideal_component,
    induced_map_rank,
    koszul_dual,
    quotient_dim,
    relation_spaces_equal,
    std_from_harpoon,
    substitute_generators,
    triangle_from_star,
)
from .realizations import (
    INF,
    NODE,
    Corolla,
    EVNode,
    EVLEAF,
    SchroderNode,
    corolla_compose,
    dendr_free_product,
    dup_free_product,
    ev_trees,
    evtree_to_text,
    parse_evtree,
    parse_schroder,
    schroder_compose,
    schroder_to_text,
    schroder_trees,
)
from .rewriting import (
    RewriteRule,
    RewriteSystem,
    build_rewrite_system,
    count_normal_forms,
    is_locally_confluent,
    normal_form,
)
from .trees import (
    LEAF,
    Generator,
    Signature,
    SyntaxTree,
    arity,
    enumerate_trees,
    graft,
    node,
    parse_tree,
    tree_to_text,
)
from .verify import CHECKS, VerificationReport, run_checks

__version__ = "0.1.0"
