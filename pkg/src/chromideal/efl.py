"""Unions of ``k``-cliques meeting pairwise in at most one vertex.

Instances come from :func:`generate_efl` (one fresh vertex per requested
pair of cliques, private vertices elsewhere) or :func:`efl_from_cliques`.
:func:`color_efl` colors them with ``k`` colors: a vertex shared by cliques
``i`` and ``j`` gets the color of the pair ``{i, j}`` under a pair-coloring
whose color classes consist of disjoint pairs, and each clique's private
vertices take the colors its shared vertices left over.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Iterable

from .errors import DomainError, InvariantViolation, PreconditionError, UnsupportedCaseError
from .graph import Coloring, Graph

Pair = tuple[int, int]


@dataclass(frozen=True)
class PairColorFunction:
    """A map from 2-subsets of ``{1..r}`` to colors ``0..k-1``."""

    k: int
    mode: str  # "f" on pairs of 1..k, "h" on pairs of 1..k+1
    table: dict[Pair, int]

    def __call__(self, i: int, j: int) -> int:
        return self.table[(min(i, j), max(i, j))]

    def preimage(self, u: int) -> list[Pair]:
        return sorted(p for p, c in self.table.items() if c == u)

    def preimages_disjoint(self) -> bool:
        for u in range(self.k):
            seen: set[int] = set()
            for p in self.preimage(u):
                if seen & set(p):
                    return False
                seen.update(p)
        return True


def _pairs(r: int) -> list[Pair]:
    return list(itertools.combinations(range(1, r + 1), 2))


def lemma_f(k: int) -> PairColorFunction:
    """``{i, j} -> (i + j) mod k`` on pairs from ``1..k``."""
    if k < 2:
        raise DomainError("lemma_f needs k >= 2")
    return PairColorFunction(k, "f", {(i, j): (i + j) % k for i, j in _pairs(k)})


def lemma_h(k: int) -> PairColorFunction:
    """Extension of :func:`lemma_f` to pairs from ``1..k+1`` for odd ``k``.

    Pairs inside ``1..k`` keep ``(s + t) mod k``; a pair ``{s, k+1}`` gets
    ``2s`` when ``s <= (k-1)/2``, ``2s - k`` when ``(k-1)/2 < s <= k-1``, and
    ``0`` when ``s = k``.
    """
    if k % 2 == 0:
        raise DomainError(f"no such pair coloring exists for even k={k} (already impossible for k=2)")
    if k < 3:
        raise DomainError("lemma_h needs an odd k >= 3")
    table = {(s, t): (s + t) % k for s, t in _pairs(k)}
    half = (k - 1) // 2
    for s in range(1, k + 1):
        if s <= half:
            table[(s, k + 1)] = 2 * s
        elif s <= k - 1:
            table[(s, k + 1)] = 2 * s - k
        else:
            table[(s, k + 1)] = 0
    return PairColorFunction(k, "h", table)


def search_pair_coloring(r: int, colors: int) -> dict[Pair, int] | None:
    """Exhaustive search for a coloring of pairs of ``1..r`` with disjoint color classes."""
    pairs = _pairs(r)
    for assignment in itertools.product(range(colors), repeat=len(pairs)):
        table = dict(zip(pairs, assignment))
        if PairColorFunction(colors, "search", table).preimages_disjoint():
            return table
    return None


@dataclass(frozen=True)
class EflInstance:
    k: int
    cliques: tuple[tuple[int, ...], ...]  # vertex lists; clique indices are 1-based
    graph: Graph
    shared: dict[int, Pair]  # vertex -> the two cliques containing it

    @property
    def num_cliques(self) -> int:
        return len(self.cliques)

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "cliques": [list(c) for c in self.cliques],
            "graph": self.graph.to_json(),
            "shared": {str(v): list(p) for v, p in sorted(self.shared.items())},
        }

    @classmethod
    def from_json(cls, data: dict) -> "EflInstance":
        try:
            inst = efl_from_cliques(int(data["k"]), data["cliques"])
        except (KeyError, TypeError, ValueError) as exc:
            raise DomainError(f"malformed EFL instance JSON: {exc}") from None
        if "graph" in data and Graph.from_json(data["graph"]) != inst.graph:
            raise DomainError("graph in instance file does not match the union of its cliques")
        return inst


def efl_from_cliques(k: int, cliques: Iterable[Iterable[int]]) -> EflInstance:
    """Build an instance from explicit cliques, checking both structural hypotheses."""
    cliques = tuple(tuple(sorted(int(v) for v in c)) for c in cliques)
    for idx, c in enumerate(cliques, 1):
        if len(c) != k or len(set(c)) != k:
            raise PreconditionError(f"clique {idx} does not have {k} distinct vertices")
    n = max((max(c) for c in cliques), default=0)
    if set().union(*map(set, cliques)) != set(range(1, n + 1)):
        raise PreconditionError("clique vertices must be exactly 1..n")
    member: dict[int, list[int]] = {}
    for idx, c in enumerate(cliques, 1):
        for v in c:
            member.setdefault(v, []).append(idx)
    shared = {}
    for v, idxs in sorted(member.items()):
        if len(idxs) > 2:
            raise PreconditionError(f"vertex {v} lies in {len(idxs)} cliques; at most 2 allowed")
        if len(idxs) == 2:
            shared[v] = (idxs[0], idxs[1])
    for a, b in itertools.combinations(range(len(cliques)), 2):
        if len(set(cliques[a]) & set(cliques[b])) > 1:
            raise PreconditionError(f"cliques {a + 1} and {b + 1} share more than one vertex")
    edges = {(u, v) for c in cliques for u, v in itertools.combinations(c, 2)}
    return EflInstance(k, cliques, Graph(n, edges), shared)


def generate_efl(k: int, num_cliques: int, intersection_pairs: Iterable[Iterable[int]], seed: int | None = None) -> EflInstance:
    """Union of ``num_cliques`` ``k``-cliques sharing one vertex per requested pair.

    Vertices are numbered in order of first appearance (cliques in index
    order, shared slots before private ones).  A ``seed`` relabels the
    vertices by a reproducible random permutation.
    """
    if k < 1 or num_cliques < 1:
        raise DomainError("k and num_cliques must be positive")
    pairs = sorted({(min(p), max(p)) for p in map(tuple, intersection_pairs)})
    for i, j in pairs:
        if i == j or not (1 <= i <= num_cliques and 1 <= j <= num_cliques):
            raise DomainError(f"invalid clique pair {{{i},{j}}} for {num_cliques} cliques")
    slots = {c: [p for p in pairs if c in p] for c in range(1, num_cliques + 1)}
    for c, ps in slots.items():
        if len(ps) > k:
            raise PreconditionError(f"clique {c} is asked to share {len(ps)} vertices but has only {k}")
    label: dict[object, int] = {}

    def vertex(key: object) -> int:
        if key not in label:
            label[key] = len(label) + 1
        return label[key]

    cliques = []
    for c in range(1, num_cliques + 1):
        vs = [vertex(p) for p in slots[c]]
        vs += [vertex((c, "private", s)) for s in range(k - len(vs))]
        cliques.append(vs)
    if seed is not None:
        n = len(label)
        perm = list(range(1, n + 1))
        random.Random(seed).shuffle(perm)
        cliques = [[perm[v - 1] for v in c] for c in cliques]
    return efl_from_cliques(k, cliques)


def pair_function_for(inst: EflInstance) -> PairColorFunction:
    k, r = inst.k, inst.num_cliques
    if k < 2:
        raise UnsupportedCaseError("coloring needs k >= 2")
    if r <= k:
        # f restricted to pairs of 1..r keeps its disjoint color classes
        return lemma_f(k)
    if r == k + 1:
        if k % 2 == 0:
            raise UnsupportedCaseError(
                f"k+1 cliques of even size k={k} need not be k-colorable "
                "(smallest counterexample: three edges forming a triangle, k=2)"
            )
        return lemma_h(k)
    raise UnsupportedCaseError(f"coloring is only constructed for at most k+1 cliques, got {r} with k={k}")


def color_efl(inst: EflInstance) -> Coloring:
    """Proper ``k``-coloring of an instance with at most ``k`` (or ``k+1``, ``k`` odd) cliques.

    The result is checked edge by edge before it is returned.
    """
    pf = pair_function_for(inst)
    assignment = {v: pf(*p) for v, p in inst.shared.items()}
    for c in inst.cliques:
        used = {assignment[v] for v in c if v in assignment}
        free = iter(u for u in range(inst.k) if u not in used)
        for v in c:
            if v not in assignment:
                assignment[v] = next(free)
    coloring = Coloring(assignment, inst.k)
    bad = coloring.violations(inst.graph)
    if bad or not coloring.is_proper(inst.graph):
        raise InvariantViolation(f"constructed coloring is improper on edges {bad}")
    return coloring
