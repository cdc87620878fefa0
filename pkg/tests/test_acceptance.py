"""Acceptance gate: one test per criterion, each recording a PASS/FAIL line."""

import itertools
import math
import random
import subprocess
import sys
import time

import pytest

import conftest
from conftest import BOWTIE_COVER, BOWTIE_EDGES, SIX_VERTEX_EDGES, THREE_TRIANGLES_COVER, THREE_TRIANGLES_EDGES
from strategies import random_ci_ideal, random_graph
from chromideal.bridge import CliqueCover, bridge_report, chromatic_number_via_codim, chromatic_poly_at_chi
from chromideal.efl import color_efl, generate_efl, lemma_f, lemma_h, search_pair_coloring
from chromideal.errors import InvariantViolation
from chromideal.graph import (
    Graph,
    chromatic_ideal,
    chromatic_number_bruteforce,
    chromatic_polynomial,
    graph_from_ideal,
    maximal_independent_sets,
    parse_graph,
)
from chromideal.ideal import (
    find_ci_decomposition,
    inclusion_exclusion_terms,
    is_dominant,
    multiplicity_by_inclusion_exclusion,
    multiplicity_by_realizations,
    multiplicity_recursive,
    realizations,
)

pytestmark = pytest.mark.acceptance

DENSITIES = (0.2, 0.5, 0.8)


def record(number, ok, detail):
    line = f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {detail}"
    conftest.ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


def sample_graphs(count=600, max_n=10, seed=2024):
    rng = random.Random(seed)
    return [random_graph(rng, rng.randint(1, max_n), DENSITIES[t % 3]) for t in range(count)]


GRAPHS = sample_graphs()


def _all_methods(M, d):
    out = {
        "realizations": multiplicity_by_realizations(M),
        "recursive": multiplicity_recursive(M, d),
    }
    if is_dominant(M):
        out["inclusion_exclusion"] = multiplicity_by_inclusion_exclusion(M, d)
    return out


def test_criterion_1_six_vertex_golden():
    start = time.perf_counter()
    text = "p edge 6 8\n" + "".join(f"e {i} {j}\n" for i, j in SIX_VERTEX_EDGES)
    G = parse_graph(text)
    omega = maximal_independent_sets(G)
    M = chromatic_ideal(G)
    letters = {"w{1,3}": "a", "w{1,4}": "b", "w{2,4,6}": "c", "w{3,5}": "d", "w{3,6}": "e"}
    letters.update({f"v{i}": "fghijk"[i - 1] for i in range(1, 7)})
    got = {frozenset(letters[M.registry.name(v)] for v in g.exponents) for g in M.generators}
    want = {frozenset(w) for w in ("fab", "gc", "hade", "ibc", "jd", "kce")}
    elapsed = time.perf_counter() - start
    ok = (G.n, len(G.edges)) == (6, 8) and omega == [{1, 3}, {1, 4}, {2, 4, 6}, {3, 5}, {3, 6}]
    ok = ok and got == want and elapsed < 1
    record(1, ok, f"Omega and M_G = (fab, gc, hade, ibc, jd, kce) in {elapsed:.3f}s")


def test_criterion_2_three_triangles():
    start = time.perf_counter()
    G = Graph(6, THREE_TRIANGLES_EDGES)
    cover = CliqueCover(THREE_TRIANGLES_COVER)
    M = chromatic_ideal(G)
    d = find_ci_decomposition(M, hint=[0, 1, 2])
    methods = _all_methods(M, d)
    terms = [t.value for t in inclusion_exclusion_terms(M, d)]
    p3 = chromatic_poly_at_chi(G, cover)
    direct = chromatic_polynomial(G)(3)
    elapsed = time.perf_counter() - start
    ok = chromatic_number_via_codim(G) == 3 and len(realizations(M)) == 1
    ok = ok and methods == {"realizations": 1, "recursive": 1, "inclusion_exclusion": 1}
    ok = ok and terms == [12, -4, -8, -4, 2, 2, 2, -1] and sum(terms) == 1
    ok = ok and p3 == direct == 6 and elapsed < 1
    record(2, ok, f"chi=3, e=1 by {sorted(methods)}, terms {terms}, P(3)={p3}={direct} in {elapsed:.3f}s")


def test_criterion_3_bowtie():
    start = time.perf_counter()
    G = Graph(5, BOWTIE_EDGES)
    M = chromatic_ideal(G)
    d = find_ci_decomposition(M, hint=[v - 1 for v in BOWTIE_COVER[0]])
    methods = _all_methods(M, d)
    real = {r.as_set() for r in realizations(M)}
    p3 = chromatic_poly_at_chi(G, CliqueCover(BOWTIE_COVER))
    elapsed = time.perf_counter() - start
    want = {frozenset({"w{1,4}", "w{2,5}", "v3"}), frozenset({"w{1,5}", "w{2,4}", "v3"})}
    ok = chromatic_number_via_codim(G) == 3 and real == want
    ok = ok and set(methods.values()) == {2} and len(methods) == 3
    ok = ok and p3 == 12 == chromatic_polynomial(G)(3) and elapsed < 1
    record(3, ok, f"chi=3, realizations {sorted(map(sorted, real))}, e=2, P(3)={p3} in {elapsed:.3f}s")


def test_criterion_4_chi_equals_codim():
    start = time.perf_counter()
    agree = sum(chromatic_number_via_codim(G) == chromatic_number_bruteforce(G) for G in GRAPHS)
    elapsed = time.perf_counter() - start
    per_density = {p: sum(1 for t in range(len(GRAPHS)) if t % 3 == i) for i, p in enumerate(DENSITIES)}
    ok = len(GRAPHS) >= 500 and agree == len(GRAPHS) and elapsed < 300
    record(4, ok, f"{agree}/{len(GRAPHS)} graphs (n<=10, densities {per_density}) in {elapsed:.2f}s")


def _clique_union_instances(count, seed=11):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        k = rng.choice([3, 4, 5])
        r = rng.randint(2, k + 1 if k % 2 else k)
        pairs = [p for p in itertools.combinations(range(1, r + 1), 2) if rng.random() < 0.6]
        inst = generate_efl(k, r, pairs, seed=rng.randrange(2**31))
        if inst.graph.n <= 16:
            out.append(inst)
    return out


def test_criterion_5_colorings_from_multiplicity():
    instances = _clique_union_instances(120)
    matched = 0
    for inst in instances:
        G, k = inst.graph, inst.k
        if chromatic_number_bruteforce(G) != k:
            continue
        via_ideal = chromatic_poly_at_chi(G, CliqueCover(inst.cliques))
        if via_ideal == chromatic_polynomial(G)(k) == math.factorial(k) * len(realizations(chromatic_ideal(G))):
            matched += 1
    sizes = sorted({inst.k for inst in instances})
    ok = len(instances) >= 100 and matched == len(instances)
    record(5, ok, f"{matched}/{len(instances)} instances with chi=k, k in {sizes}: k!*e = P_G(k)")


def test_criterion_6_multiplicity_methods_agree():
    rng = random.Random(99)
    ideals, dominant, fired = [], 0, 0
    while len(ideals) < 220:
        M = random_ci_ideal(rng, max_vars=20, max_gens=10, max_exp=rng.choice([1, 2, 3]))
        if M is not None:
            ideals.append(M)
    agree = 0
    for M in ideals:
        try:
            methods = _all_methods(M, find_ci_decomposition(M))
        except InvariantViolation:
            fired += 1
            continue
        dominant += "inclusion_exclusion" in methods
        agree += len(set(methods.values())) == 1
    ok = agree == len(ideals) and fired == 0 and all(len(M.registry) <= 20 and len(M) <= 10 for M in ideals)
    record(6, ok, f"{agree}/{len(ideals)} ideals agree ({dominant} dominant), codim assertions fired {fired} times")


F7 = {
    0: ["34", "25", "16"], 1: ["35", "26", "17"], 2: ["45", "36", "27"], 3: ["46", "37", "12"],
    4: ["56", "47", "13"], 5: ["57", "23", "14"], 6: ["67", "24", "15"],
}
H7_TOP = {0: "78", 1: "48", 2: "18", 3: "58", 4: "28", 5: "68", 6: "38"}


def test_criterion_7_pair_colorings():
    f_ok = all(lemma_f(k).preimages_disjoint() for k in range(2, 51))
    h_ok = all(lemma_h(k).preimages_disjoint() for k in range(3, 50, 2))
    none_for_2 = search_pair_coloring(3, 2) is None
    key = lambda s: (int(s[0]), int(s[1]))  # noqa: E731
    f7, h7 = lemma_f(7), lemma_h(7)
    tables = all(
        f7.preimage(c) == sorted(map(key, ps)) and h7.preimage(c) == sorted(map(key, ps + [H7_TOP[c]]))
        for c, ps in F7.items()
    )
    ok = f_ok and h_ok and none_for_2 and tables
    record(7, ok, f"f disjoint k<=50: {f_ok}, h disjoint odd k<=49: {h_ok}, no h for k=2: {none_for_2}, k=7 tables: {tables}")


def test_criterion_8_k_plus_one_cliques():
    details = []
    ok = True
    for k in (3, 5, 7):
        inst = generate_efl(k, k + 1, itertools.combinations(range(1, k + 2), 2))
        coloring = color_efl(inst)
        proper = all(coloring.assignment[a] != coloring.assignment[b] for a, b in inst.graph.edges)
        proper = proper and set(coloring.assignment.values()) <= set(range(k))
        chi = chromatic_number_via_codim(inst.graph)
        ok = ok and proper and chi == k
        details.append(f"k={k}: n={inst.graph.n} proper={proper} codim={chi}")
    record(8, ok, "; ".join(details))


def test_criterion_9_round_trip():
    small = [G for G in GRAPHS if G.n <= 12]
    same = sum(graph_from_ideal(chromatic_ideal(G)) == G for G in small)
    record(9, same == len(small) and len(small) >= 500, f"{same}/{len(small)} graphs reconstructed exactly")


def _cli(*argv):
    proc = subprocess.run([sys.executable, "-m", "chromideal", *argv], capture_output=True, check=False)
    return proc.returncode, proc.stdout


def test_criterion_10_determinism(tmp_path):
    graph = tmp_path / "g.txt"
    graph.write_text(f"6 {len(THREE_TRIANGLES_EDGES)}\n" + "".join(f"{i} {j}\n" for i, j in THREE_TRIANGLES_EDGES))
    cover = tmp_path / "cover.json"
    cover.write_text(str(THREE_TRIANGLES_COVER))
    runs = {
        "report": ["report", str(graph), "--cover", str(cover)],
        "verify": ["verify", "--trials", "60", "--seed", "5", "--max-n", "8"],
    }
    same = {}
    for name, argv in runs.items():
        first, second = _cli(*argv), _cli(*argv)
        same[name] = first == second and first[0] == 0 and first[1]
    same["report_object"] = bridge_report(Graph(6, THREE_TRIANGLES_EDGES)) == bridge_report(Graph(6, THREE_TRIANGLES_EDGES))
    record(10, all(bool(v) for v in same.values()), f"byte-identical reruns: { {k: bool(v) for k, v in same.items()} }")
