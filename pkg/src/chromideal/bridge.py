"""Graph invariants read off the chromatic ideal.

The chromatic number is the codimension of the chromatic ideal, and for a
graph covered by ``k``-cliques with chromatic number ``k`` the number of
``k``-colorings is ``k!`` times the multiplicity.
"""

from __future__ import annotations

import logging
import math
from dataclasses import asdict, dataclass, field
from typing import Iterable, Sequence

from .errors import CoverError, InvariantViolation
from .graph import DEFAULT_POLY_CAP, Graph, chromatic_ideal, chromatic_polynomial, m_prime_ideal  # noqa: F401
from .ideal import (
    DEFAULT_SUBSET_CAP,
    CIDecomposition,
    MonomialIdeal,
    codimension,
    find_ci_decomposition,
    inclusion_exclusion_terms,
    multiplicity_by_realizations,
    multiplicity_recursive,
    projective_dimension_dominant,
    realizations,
)

log = logging.getLogger(__name__)

# above this many non-CI generators only the recursive method runs
CROSS_CHECK_LIMIT = 16


@dataclass(frozen=True, init=False)
class CliqueCover:
    cliques: tuple[frozenset[int], ...]

    def __init__(self, cliques: Iterable[Iterable[int]]):
        object.__setattr__(self, "cliques", tuple(frozenset(c) for c in cliques))

    @property
    def k(self) -> int:
        return len(self.cliques[0]) if self.cliques else 0

    def validate(self, G: Graph) -> None:
        if not self.cliques:
            raise CoverError("clique cover is empty")
        sizes = {len(c) for c in self.cliques}
        if len(sizes) != 1:
            raise CoverError(f"cliques have unequal sizes {sorted(sizes)}")
        for c in self.cliques:
            if not c <= set(G.vertices):
                raise CoverError(f"clique {sorted(c)} has vertices outside 1..{G.n}")
            if not G.is_clique(c):
                raise CoverError(f"{sorted(c)} is not a clique")
        covered = set().union(*self.cliques)
        if covered != set(G.vertices):
            raise CoverError(f"vertices {sorted(set(G.vertices) - covered)} are not covered")

    def to_json(self) -> list[list[int]]:
        return [sorted(c) for c in self.cliques]


def chromatic_number_via_codim(G: Graph) -> int:
    return codimension(chromatic_ideal(G))


def _checked_cover(G: Graph, cover: CliqueCover, M: MonomialIdeal) -> int:
    cover.validate(G)
    k = cover.k
    chi = codimension(M)
    if chi != k:
        raise CoverError(f"cover uses {k}-cliques but the chromatic number is {chi}")
    return k


def configurations_count(G: Graph, cover: CliqueCover) -> int:
    """Number of partitions of the vertices into ``chi`` independent sets."""
    M = chromatic_ideal(G)
    _checked_cover(G, cover, M)
    return len(realizations(M))


def _cover_hint(cover: CliqueCover) -> list[int]:
    # generator i-1 belongs to vertex i; any clique's generators are pairwise coprime
    return [v - 1 for v in sorted(cover.cliques[0])]


def multiplicities(
    M: MonomialIdeal, d: CIDecomposition, *, cap_subsets: int = DEFAULT_SUBSET_CAP
) -> dict[str, int]:
    """Run every applicable multiplicity method and insist they agree."""
    results = {"recursive": multiplicity_recursive(M, d)}
    if len(d.others) <= min(CROSS_CHECK_LIMIT, cap_subsets):
        results["realizations"] = multiplicity_by_realizations(M)
        results["inclusion_exclusion"] = sum(t.value for t in inclusion_exclusion_terms(M, d, cap=cap_subsets))
    if len(set(results.values())) != 1:
        raise InvariantViolation(f"multiplicity methods disagree: {results}")
    return results


def chromatic_poly_at_chi(G: Graph, cover: CliqueCover, *, cap_subsets: int = DEFAULT_SUBSET_CAP) -> int:
    """``k! * e(S/M_G)`` for a graph covered by ``k``-cliques with chromatic number ``k``."""
    M = chromatic_ideal(G)
    k = _checked_cover(G, cover, M)
    d = find_ci_decomposition(M, hint=_cover_hint(cover))
    mult = multiplicities(M, d, cap_subsets=cap_subsets)["recursive"]
    return math.factorial(k) * mult


def pd_upper_bound(G: Graph) -> int:
    """Projective dimension of the chromatic ideal, always ``n``; the bound ``chi <= pd`` is trivial."""
    return projective_dimension_dominant(chromatic_ideal(G))


@dataclass
class BridgeReport:
    chi: int
    codim: int
    mult: int | None
    realizations_count: int
    p_at_chi: int | None
    clique_cover_used: list[list[int]] | None = None
    multiplicity_methods: dict[str, int] = field(default_factory=dict)
    ci_decomposition: dict | None = None
    inclusion_exclusion_terms: list[dict] | None = None
    p_at_chi_deletion_contraction: int | None = None
    pd_bound: int | None = None

    def to_json(self) -> dict:
        return asdict(self)


def bridge_report(
    G: Graph,
    cover: CliqueCover | None = None,
    *,
    cap_subsets: int = DEFAULT_SUBSET_CAP,
    cap_poly: int = DEFAULT_POLY_CAP,
) -> BridgeReport:
    """Everything the chromatic ideal says about ``G``.

    Multiplicities are reported when a complete-intersection decomposition
    exists (from the cover's first clique, else by search).  ``p_at_chi`` is
    filled only when a valid cover is given; it is then checked against
    deletion-contraction whenever ``G`` is within ``cap_poly``.
    """
    M = chromatic_ideal(G)
    codim = codimension(M)
    report = BridgeReport(
        chi=codim,
        codim=codim,
        mult=None,
        realizations_count=len(realizations(M)),
        p_at_chi=None,
        pd_bound=len(M),
    )
    if cover is not None:
        k = _checked_cover(G, cover, M)
        report.clique_cover_used = cover.to_json()
        d = find_ci_decomposition(M, hint=_cover_hint(cover))
    else:
        d = find_ci_decomposition(M)
    if d is None:
        log.info("no complete-intersection decomposition; multiplicity not reported")
        return report
    report.ci_decomposition = d.to_json()
    report.multiplicity_methods = multiplicities(M, d, cap_subsets=cap_subsets)
    report.mult = report.multiplicity_methods["recursive"]
    if "inclusion_exclusion" in report.multiplicity_methods:
        report.inclusion_exclusion_terms = [
            {"subset": list(t.subset), "sign": t.sign, "factors": list(t.factors), "value": t.value}
            for t in inclusion_exclusion_terms(M, d, cap=cap_subsets)
        ]
    if cover is not None:
        report.p_at_chi = math.factorial(k) * report.mult
        if report.realizations_count != report.mult:
            raise InvariantViolation(
                f"{report.realizations_count} configurations but multiplicity {report.mult}"
            )
        if G.n <= cap_poly:
            direct = chromatic_polynomial(G, cap=cap_poly)(k)
            report.p_at_chi_deletion_contraction = direct
            if direct != report.p_at_chi:
                raise InvariantViolation(f"k!*e = {report.p_at_chi} but deletion-contraction gives {direct}")
    return report


def parse_cover(data: Sequence | dict) -> CliqueCover:
    if isinstance(data, dict):
        data = data.get("cliques", [])
    try:
        return CliqueCover([[int(v) for v in c] for c in data])
    except (TypeError, ValueError) as exc:
        raise CoverError(f"malformed clique cover: {exc}") from None
