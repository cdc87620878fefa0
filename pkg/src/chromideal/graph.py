"""Simple graphs on vertices ``1..n``, their chromatic ideals, and exact
coloring oracles."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import DomainError, InvariantViolation, ParseError, ResourceLimitError
from .ideal import MonomialIdeal, minimalize
from .monomial import Monomial, Registry, coprime

log = logging.getLogger(__name__)

DEFAULT_POLY_CAP = 16


@dataclass(frozen=True, init=False)
class Graph:
    n: int
    edges: frozenset[tuple[int, int]]

    def __init__(self, n: int, edges: Iterable[Iterable[int]] = ()):
        if n < 0:
            raise DomainError("vertex count must be nonnegative")
        norm = set()
        for e in edges:
            i, j = e
            if i == j:
                raise DomainError(f"loop at vertex {i}")
            if not (1 <= i <= n and 1 <= j <= n):
                raise DomainError(f"edge {{{i},{j}}} has an endpoint outside 1..{n}")
            norm.add((min(i, j), max(i, j)))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", frozenset(norm))

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls(n, [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)])

    @classmethod
    def edgeless(cls, n: int) -> "Graph":
        return cls(n)

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def adjacent(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in self.edges

    def neighbors(self, i: int) -> set[int]:
        return {b if a == i else a for a, b in self.edges if i in (a, b)}

    def degree(self, i: int) -> int:
        return len(self.neighbors(i))

    def adjacency_masks(self) -> list[int]:
        """Bit ``j-1`` of entry ``i-1`` is set iff ``i`` and ``j`` are adjacent."""
        adj = [0] * self.n
        for i, j in self.edges:
            adj[i - 1] |= 1 << (j - 1)
            adj[j - 1] |= 1 << (i - 1)
        return adj

    def is_independent(self, vs: Iterable[int]) -> bool:
        vs = sorted(vs)
        return not any(self.adjacent(a, b) for k, a in enumerate(vs) for b in vs[k + 1 :])

    def is_clique(self, vs: Iterable[int]) -> bool:
        vs = sorted(vs)
        return all(self.adjacent(a, b) for k, a in enumerate(vs) for b in vs[k + 1 :])

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.sorted_edges()]}

    @classmethod
    def from_json(cls, data: dict) -> "Graph":
        try:
            return cls(int(data["n"]), [tuple(e) for e in data["edges"]])
        except (KeyError, TypeError, ValueError) as exc:
            raise DomainError(f"malformed graph JSON: {exc}") from None


@dataclass(frozen=True)
class Coloring:
    assignment: dict[int, int]
    k: int

    def violations(self, G: Graph) -> list[tuple[int, int]]:
        bad = [e for e in G.sorted_edges() if self.assignment[e[0]] == self.assignment[e[1]]]
        return bad

    def is_proper(self, G: Graph) -> bool:
        if set(self.assignment) != set(G.vertices):
            return False
        if any(not 0 <= c < self.k for c in self.assignment.values()):
            return False
        return not self.violations(G)

    def classes(self) -> list[frozenset[int]]:
        by_color: dict[int, set[int]] = {}
        for v, c in self.assignment.items():
            by_color.setdefault(c, set()).add(v)
        return sorted((frozenset(s) for s in by_color.values()), key=sorted)

    def to_json(self) -> dict:
        return {"k": self.k, "coloring": {str(v): c for v, c in sorted(self.assignment.items())}}


# -- parsing ---------------------------------------------------------------


def _ints(tokens: list[str], lineno: int) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(f"expected integers, got {' '.join(tokens)!r}", lineno) from None


def _add_edge(edges: set, n: int, i: int, j: int, lineno: int) -> None:
    if i == j:
        raise ParseError(f"loop edge at vertex {i}", lineno)
    for v in (i, j):
        if not 1 <= v <= n:
            raise ParseError(f"vertex {v} out of range 1..{n}", lineno)
    edges.add((min(i, j), max(i, j)))


def _parse_edge_list(text: str) -> Graph:
    lines = [(no, ln.split()) for no, ln in enumerate(text.splitlines(), 1) if ln.strip()]
    if not lines:
        raise ParseError("empty input", 1)
    no, head = lines[0]
    if len(head) != 2:
        raise ParseError("header must be 'n m'", no)
    n, m = _ints(head, no)
    if n < 0 or m < 0:
        raise ParseError("negative count in header", no)
    body = lines[1:]
    if len(body) != m:
        raise ParseError(f"header announces {m} edges but {len(body)} edge lines follow", no)
    edges: set = set()
    for no, toks in body:
        if len(toks) != 2:
            raise ParseError("edge line must be 'i j'", no)
        i, j = _ints(toks, no)
        _add_edge(edges, n, i, j, no)
    return Graph(n, edges)


def _parse_dimacs(text: str) -> Graph:
    n = None
    declared = 0
    edges: set = set()
    for no, line in enumerate(text.splitlines(), 1):
        toks = line.split()
        if not toks or toks[0] == "c":
            continue
        if toks[0] == "p":
            if n is not None:
                raise ParseError("second problem line", no)
            if len(toks) != 4 or toks[1] not in ("edge", "col"):
                raise ParseError("problem line must be 'p edge n m'", no)
            n, declared = _ints(toks[2:], no)
        elif toks[0] == "e":
            if n is None:
                raise ParseError("edge line before problem line", no)
            if len(toks) != 3:
                raise ParseError("edge line must be 'e i j'", no)
            i, j = _ints(toks[1:], no)
            _add_edge(edges, n, i, j, no)
        else:
            raise ParseError(f"unknown line type {toks[0]!r}", no)
    if n is None:
        raise ParseError("missing problem line", 1)
    if declared != len(edges):
        log.info("DIMACS header declares %d edges, read %d distinct", declared, len(edges))
    return Graph(n, edges)


def detect_format(text: str) -> str:
    for line in text.splitlines():
        toks = line.split()
        if toks:
            return "dimacs" if toks[0] in ("p", "c") else "edge-list"
    return "edge-list"


def parse_graph(text: str, format: str | None = None) -> Graph:
    """Parse an edge list (``n m`` then ``i j`` lines) or a DIMACS ``.col`` file.

    ``format`` is ``"edge-list"``, ``"dimacs"`` or ``None`` to sniff it.
    Duplicate edges collapse; loops and out-of-range vertices raise
    :class:`ParseError` with the offending line number.
    """
    fmt = format or detect_format(text)
    if fmt == "edge-list":
        return _parse_edge_list(text)
    if fmt == "dimacs":
        return _parse_dimacs(text)
    raise ParseError(f"unknown graph format {fmt!r}")


# -- independent sets and the chromatic ideal ------------------------------


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def maximal_independent_sets(G: Graph) -> list[frozenset[int]]:
    """All maximal independent sets, via pivoting Bron-Kerbosch on the complement."""
    if G.n < 1:
        raise DomainError("graph has no vertices")
    full = (1 << G.n) - 1
    comp = [full & ~a & ~(1 << i) for i, a in enumerate(G.adjacency_masks())]
    found: list[int] = []

    def expand(r: int, p: int, x: int) -> None:
        if not p and not x:
            found.append(r)
            return
        pivot = max(_bits(p | x), key=lambda u: (comp[u] & p).bit_count())
        for v in _bits(p & ~comp[pivot]):
            bit = 1 << v
            expand(r | bit, p & comp[v], x & comp[v])
            p &= ~bit
            x |= bit

    expand(0, full, 0)
    sets = [frozenset(v + 1 for v in _bits(m)) for m in found]
    return sorted(sets, key=sorted)


def set_name(vs: Iterable[int]) -> str:
    vs = sorted(vs)
    if len(vs) == 1:
        return f"v{vs[0]}"
    return "w{" + ",".join(map(str, vs)) + "}"


def chromatic_ideal(G: Graph) -> MonomialIdeal:
    """One generator per vertex, one variable per singleton or maximal independent set.

    Registry order is ``v1..vn`` followed by the non-singleton maximal
    independent sets in canonical order, so generator ``i-1`` belongs to
    vertex ``i``.
    """
    omega = [w for w in maximal_independent_sets(G) if len(w) > 1]
    reg = Registry([set_name([i]) for i in G.vertices] + [set_name(w) for w in omega])
    gens = []
    for i in G.vertices:
        exps = {i - 1: 1}
        for k, w in enumerate(omega):
            if i in w:
                exps[G.n + k] = 1
        gens.append(Monomial(reg, exps))
    M = MonomialIdeal(reg, gens)
    if len(M) != G.n:
        raise InvariantViolation("chromatic ideal lost a generator")
    return M


def m_prime_ideal(G: Graph) -> MonomialIdeal:
    """Ideal with ``m'_i`` = product over maximal independent sets containing ``i``.

    Unlike the chromatic ideal there are no private singleton variables, so
    the result is minimalized and may have fewer than ``n`` generators.
    """
    omega = maximal_independent_sets(G)
    reg = Registry([set_name(w) for w in omega])
    gens = [Monomial(reg, {k: 1 for k, w in enumerate(omega) if i in w}) for i in G.vertices]
    return minimalize(gens, reg)


def _check_chromatic_shape(M: MonomialIdeal) -> None:
    if M.is_zero():
        raise DomainError("the zero ideal is not a chromatic ideal")
    if not M.is_squarefree():
        raise DomainError("chromatic ideals are squarefree")
    for i, g in enumerate(M.generators):
        if g.is_one():
            raise DomainError("the unit ideal is not a chromatic ideal")
        private = set(g.exponents)
        for j, h in enumerate(M.generators):
            if j != i:
                private -= set(h.exponents)
        if not private:
            raise DomainError(f"generator {i} ({g}) has no private variable")


def graph_from_ideal(M: MonomialIdeal) -> Graph:
    """Recover the graph: ``{i, j}`` is an edge iff ``m_i`` and ``m_j`` share no variable."""
    _check_chromatic_shape(M)
    gens = M.generators
    n = len(gens)
    edges = [(i + 1, j + 1) for i in range(n) for j in range(i + 1, n) if coprime(gens[i], gens[j])]
    return Graph(n, edges)


def vertex_degree_from_ideal(M: MonomialIdeal, i: int) -> int:
    if not 1 <= i <= len(M):
        raise DomainError(f"vertex {i} out of range 1..{len(M)}")
    gi = M[i - 1]
    return sum(1 for j, g in enumerate(M.generators) if j != i - 1 and coprime(gi, g))


# -- chromatic polynomial --------------------------------------------------


class IntPoly(tuple):
    """Integer polynomial; entry ``k`` is the coefficient of ``t**k``."""

    def __new__(cls, coeffs: Iterable[int] = ()):
        coeffs = list(coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        return super().__new__(cls, coeffs)

    def __call__(self, t: int) -> int:
        acc = 0
        for c in reversed(self):
            acc = acc * t + c
        return acc

    def __add__(self, other):
        size = max(len(self), len(other))
        return IntPoly((self[i] if i < len(self) else 0) + (other[i] if i < len(other) else 0) for i in range(size))

    def __sub__(self, other):
        return self + IntPoly(-c for c in other)

    def __mul__(self, other):
        out = [0] * (len(self) + len(other))
        for i, a in enumerate(self):
            if a:
                for j, b in enumerate(other):
                    out[i + j] += a * b
        return IntPoly(out)

    @property
    def degree(self) -> int:
        return len(self) - 1

    def __str__(self) -> str:
        if not self:
            return "0"
        parts = []
        for k in range(len(self) - 1, -1, -1):
            c = self[k]
            if not c:
                continue
            mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            if mono and abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}{'*' if mono else ''}{mono}"
            sign = "-" if c < 0 else "+"
            parts.append(f"{sign} {body}")
        out = " ".join(parts)
        return out[2:] if out.startswith("+ ") else "-" + out[2:]


def _falling(n: int) -> IntPoly:
    p = IntPoly([1])
    for i in range(n):
        p = p * IntPoly([-i, 1])
    return p


def _compact(adj: list[int], keep: int) -> tuple[int, ...]:
    idx = list(_bits(keep))
    pos = {v: k for k, v in enumerate(idx)}
    out = []
    for v in idx:
        m = 0
        for u in _bits(adj[v] & keep):
            m |= 1 << pos[u]
        out.append(m)
    return tuple(out)


def _chromatic_poly(adj: tuple[int, ...], memo: dict) -> IntPoly:
    n = len(adj)
    if n == 0:
        return IntPoly([1])
    hit = memo.get(adj)
    if hit is not None:
        return hit
    full = (1 << n) - 1
    m2 = sum(a.bit_count() for a in adj)
    if m2 == 0:
        res = IntPoly([0] * n + [1])
    elif m2 == n * (n - 1):
        res = _falling(n)
    else:
        res = _chromatic_reduce(list(adj), n, full, m2, memo)
    memo[adj] = res
    return res


def _chromatic_reduce(adj: list[int], n: int, full: int, m2: int, memo: dict) -> IntPoly:
    # connected components multiply
    seen = 0
    comps = []
    for s in range(n):
        if seen >> s & 1:
            continue
        comp = frontier = 1 << s
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= adj[v]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        comps.append(comp)
    if len(comps) > 1:
        res = IntPoly([1])
        for comp in comps:
            res = res * _chromatic_poly(_compact(adj, comp), memo)
        return res
    # a simplicial vertex of degree d contributes a factor (t - d)
    for v in range(n):
        nb = adj[v]
        if all(adj[u] | (1 << u) | nb == adj[u] | (1 << u) for u in _bits(nb)):
            d = nb.bit_count()
            return IntPoly([-d, 1]) * _chromatic_poly(_compact(adj, full & ~(1 << v)), memo)
    u = min(range(n), key=lambda v: (adj[v].bit_count(), v))
    if m2 > n * (n - 1) // 2:
        # dense: add a missing edge and contract it
        v = next(_bits(full & ~adj[u] & ~(1 << u)))
        added = list(adj)
        added[u] |= 1 << v
        added[v] |= 1 << u
        return _chromatic_poly(tuple(added), memo) + _contract(adj, u, v, full, memo)
    v = next(_bits(adj[u]))
    deleted = list(adj)
    deleted[u] &= ~(1 << v)
    deleted[v] &= ~(1 << u)
    return _chromatic_poly(tuple(deleted), memo) - _contract(adj, u, v, full, memo)


def _contract(adj: list[int], u: int, v: int, full: int, memo: dict) -> IntPoly:
    merged = list(adj)
    nb = (adj[u] | adj[v]) & ~(1 << u) & ~(1 << v)
    merged[u] = nb
    for w in _bits(nb):
        merged[w] = (merged[w] & ~(1 << v)) | (1 << u)
    return _chromatic_poly(_compact(merged, full & ~(1 << v)), memo)


def chromatic_polynomial(G: Graph, *, cap: int = DEFAULT_POLY_CAP) -> IntPoly:
    """Exact chromatic polynomial by deletion-contraction with memoization.

    Shortcuts: edgeless and complete graphs, products over components, and
    removal of simplicial vertices.  Dense graphs use the edge-addition form
    of the recurrence instead.
    """
    if G.n > cap:
        raise ResourceLimitError(f"{G.n} vertices exceed the chromatic-polynomial cap {cap}")
    return _chromatic_poly(tuple(G.adjacency_masks()), {})


def chromatic_number_bruteforce(G: Graph, *, cap: int = DEFAULT_POLY_CAP) -> int:
    """Least ``k`` with ``P_G(k) > 0``."""
    if G.n < 1:
        raise DomainError("graph has no vertices")
    p = chromatic_polynomial(G, cap=cap)
    k = 1
    while p(k) <= 0:
        k += 1
    return k
