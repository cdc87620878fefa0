"""Random inputs shared by property and acceptance tests."""

import random

from hypothesis import strategies as st

from chromideal.graph import Graph
from chromideal.ideal import MonomialIdeal, find_ci_decomposition
from chromideal.monomial import Monomial, Registry


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return Graph(n, [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1) if rng.random() < p])


def random_ci_ideal(rng: random.Random, max_vars: int = 20, max_gens: int = 10, max_exp: int = 2):
    """An ideal whose first generators form a complete intersection.

    The complete-intersection part uses disjoint variable blocks; extra
    generators are random.  Returns ``None`` when the result happens to have
    no decomposition (the codimension grew past the block count).
    """
    nvars = rng.randint(2, max_vars)
    reg = Registry([f"x{i}" for i in range(nvars)])
    blocks = rng.randint(1, min(nvars, max_gens))
    order = list(range(nvars))
    rng.shuffle(order)
    cuts = sorted(rng.sample(range(1, nvars), blocks - 1)) if blocks > 1 else []
    parts = [order[a:b] for a, b in zip([0] + cuts, cuts + [nvars])]
    gens = []
    for part in parts:
        chosen = rng.sample(part, rng.randint(1, min(3, len(part))))
        gens.append(Monomial(reg, {v: rng.randint(1, max_exp) for v in chosen}))
    for _ in range(rng.randint(0, max_gens - blocks)):
        chosen = rng.sample(range(nvars), rng.randint(1, min(4, nvars)))
        gens.append(Monomial(reg, {v: rng.randint(1, max_exp) for v in chosen}))
    M = MonomialIdeal(reg, gens)
    if find_ci_decomposition(M) is None:
        return None
    return M


@st.composite
def ci_ideals(draw, max_vars=8, max_gens=6, max_exp=2):
    seed = draw(st.integers(0, 2**32 - 1))
    M = random_ci_ideal(random.Random(seed), max_vars, max_gens, max_exp)
    if M is None:
        from hypothesis import assume

        assume(False)
    return M


@st.composite
def graphs(draw, max_n=8):
    n = draw(st.integers(1, max_n))
    pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, [p for p, k in zip(pairs, keep) if k])
