"""Brute-force oracles, deliberately naive and independent of the library's
search code.  Only usable on tiny inputs."""

import itertools


def hitting_sets(supports, nvars, size):
    return [
        frozenset(X)
        for X in itertools.combinations(range(nvars), size)
        if all(s & set(X) for s in supports)
    ]


def min_hitting_size(supports, nvars):
    for size in range(nvars + 1):
        if hitting_sets(supports, nvars, size):
            return size
    raise ValueError("some support is empty")


def ideal_supports(M):
    return [set(g.exponents) for g in M.generators]


def codim(M):
    return min_hitting_size(ideal_supports(M), len(M.registry))


def _standard_monomials(gens, variables):
    """Count exponent vectors in the box below the pure powers that no generator divides."""
    bounds = []
    for x in variables:
        pure = [g[x] for g in gens if set(g) == {x}]
        bounds.append(min(pure))
    count = 0
    for vec in itertools.product(*(range(b) for b in bounds)):
        point = dict(zip(variables, vec))
        if not any(all(point[v] >= e for v, e in g.items()) for g in gens):
            count += 1
    return count


def multiplicity(M):
    """Sum of local lengths at the minimal primes of minimal height."""
    supports = ideal_supports(M)
    c = min_hitting_size(supports, len(M.registry))
    total = 0
    for F in hitting_sets(supports, len(M.registry), c):
        local = [{v: e for v, e in g.exponents.items() if v in F} for g in M.generators]
        total += _standard_monomials(local, sorted(F))
    return total


def independent(G, vs):
    return all(not G.adjacent(a, b) for a, b in itertools.combinations(vs, 2))


def maximal_independent_sets(G):
    V = list(G.vertices)
    out = []
    for r in range(1, len(V) + 1):
        for S in itertools.combinations(V, r):
            if independent(G, S) and all(not independent(G, S + (v,)) for v in V if v not in S):
                out.append(frozenset(S))
    return sorted(out, key=sorted)


def count_colorings(G, k):
    V = list(G.vertices)
    n = 0
    for colors in itertools.product(range(k), repeat=len(V)):
        f = dict(zip(V, colors))
        if all(f[a] != f[b] for a, b in G.edges):
            n += 1
    return n


def chromatic_number(G):
    k = 1
    while count_colorings(G, k) == 0:
        k += 1
    return k


def configurations(G, k):
    """Partitions of V into exactly k independent sets."""
    V = list(G.vertices)
    seen = set()
    for colors in itertools.product(range(k), repeat=len(V)):
        if len(set(colors)) != k:
            continue
        f = dict(zip(V, colors))
        if all(f[a] != f[b] for a, b in G.edges):
            parts = {}
            for v, c in f.items():
                parts.setdefault(c, set()).add(v)
            seen.add(frozenset(frozenset(p) for p in parts.values()))
    return seen
