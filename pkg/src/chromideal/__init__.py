"""Chromatic ideals: graph coloring through monomial-ideal invariants."""

__version__ = "0.1.0"

from .bridge import (
    BridgeReport,
    CliqueCover,
    bridge_report,
    chromatic_number_via_codim,
    chromatic_poly_at_chi,
    configurations_count,
    pd_upper_bound,
)
from .efl import EflInstance, PairColorFunction, color_efl, efl_from_cliques, generate_efl, lemma_f, lemma_h
from .graph import (
    Coloring,
    Graph,
    chromatic_ideal,
    chromatic_number_bruteforce,
    chromatic_polynomial,
    graph_from_ideal,
    m_prime_ideal,
    maximal_independent_sets,
    parse_graph,
    vertex_degree_from_ideal,
)
from .ideal import (
    CIDecomposition,
    MonomialIdeal,
    Realization,
    codimension,
    dominance_witness,
    find_ci_decomposition,
    inclusion_exclusion_terms,
    is_dominant,
    minimalize,
    multiplicity_by_inclusion_exclusion,
    multiplicity_by_localization,
    multiplicity_by_realizations,
    multiplicity_recursive,
    polarize,
    projective_dimension_dominant,
    realizations,
)
from .monomial import Monomial, Registry, divides, gcd, lcm, quotient_degree
