"""Command-line front end.

Exit codes: 0 success, 1 invariant violation, 2 parse error, 3 precondition
error, 4 unsupported case, 5 resource cap.
"""

from __future__ import annotations

import argparse
import itertools
import json
import logging
import math
import random
import re
import sys
from pathlib import Path

from . import __version__
from .bridge import CliqueCover, bridge_report, chromatic_number_via_codim, multiplicities, parse_cover
from .config import RunConfig
from .efl import EflInstance, color_efl, generate_efl, pair_function_for
from .errors import ChromIdealError, InvariantViolation, ParseError
from .graph import Graph, chromatic_ideal, chromatic_number_bruteforce, chromatic_polynomial, graph_from_ideal, parse_graph
from .ideal import (
    MonomialIdeal,
    codimension,
    find_ci_decomposition,
    ideal_from_json,
    ideal_to_json,
    is_dominant,
    multiplicity_by_inclusion_exclusion,
    multiplicity_by_localization,
    multiplicity_by_realizations,
    multiplicity_recursive,
    realizations,
)

log = logging.getLogger("chromideal")

EDGE_PROBABILITIES = (0.2, 0.5, 0.8)
EFL_SIZES = (3, 5, 7)


# -- helpers ---------------------------------------------------------------


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None


def _read_json(path: str):
    try:
        return json.loads(_read_text(path))
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON ({exc.msg})", exc.lineno) from None


def _pretty_var(name: str) -> str:
    m = re.fullmatch(r"v(\d+)", name)
    if m:
        return "x_{" + m.group(1) + "}"
    m = re.fullmatch(r"w\{([\d,]+)\}", name)
    if m:
        return "x_{" + m.group(1) + "}"
    return name


def ideal_text(M: MonomialIdeal) -> str:
    parts = []
    for g in M.generators:
        factors = []
        for v, e in g.exponents.items():
            name = _pretty_var(M.registry.name(v))
            factors.append(name if e == 1 else f"{name}^{e}")
        parts.append(" ".join(factors) or "1")
    return "(" + ",\n ".join(parts) + ")"


def _emit(cfg: RunConfig, payload: dict, text: str, output: str | None) -> None:
    out = json.dumps(payload, indent=2) + "\n" if cfg.output_format == "json" else text.rstrip("\n") + "\n"
    if output:
        Path(output).write_text(out)
    else:
        sys.stdout.write(out)


def parse_pairs(text: str, num_cliques: int) -> list[tuple[int, int]]:
    """``"all"``, ``"1-2,2-3"`` or the compact ``"12,23"`` for single-digit indices."""
    text = text.strip()
    if text in ("", "none"):
        return []
    if text == "all":
        return list(itertools.combinations(range(1, num_cliques + 1), 2))
    pairs = []
    for tok in text.split(","):
        tok = tok.strip()
        if "-" in tok:
            a, _, b = tok.partition("-")
        elif len(tok) == 2 and tok.isdigit():
            a, b = tok
        else:
            raise ParseError(f"cannot read clique pair {tok!r}; use 'i-j'")
        try:
            pairs.append((int(a), int(b)))
        except ValueError:
            raise ParseError(f"cannot read clique pair {tok!r}") from None
    return pairs


# -- commands --------------------------------------------------------------


def cmd_ideal(args, cfg: RunConfig) -> int:
    G = parse_graph(_read_text(args.graph), args.input_format)
    M = chromatic_ideal(G)
    _emit(cfg, ideal_to_json(M), "M_G = " + ideal_text(M), args.output)
    return 0


def cmd_report(args, cfg: RunConfig) -> int:
    G = parse_graph(_read_text(args.graph), args.input_format)
    cover = parse_cover(_read_json(args.cover)) if args.cover else None
    report = bridge_report(G, cover, cap_subsets=cfg.cap_subsets, cap_poly=cfg.cap_poly)
    lines = [
        f"chi(G) = codim(S/M_G) = {report.codim}",
        f"realizations = {report.realizations_count}",
    ]
    if report.mult is not None:
        methods = ", ".join(f"{k}={v}" for k, v in report.multiplicity_methods.items())
        lines.append(f"e(S/M_G) = {report.mult}  ({methods})")
    if report.p_at_chi is not None:
        lines.append(f"P_G({report.chi}) = {report.chi}! * {report.mult} = {report.p_at_chi}")
    lines.append(f"pd(S/M_G) = {report.pd_bound} (upper bound on chi; equals n, so trivial)")
    _emit(cfg, report.to_json(), "\n".join(lines), args.output)
    return 0


def cmd_invariants(args, cfg: RunConfig) -> int:
    """Invariants of an ideal given in ideal JSON."""
    M = ideal_from_json(_read_json(args.ideal))
    d = find_ci_decomposition(M, hint=args.hint)
    payload = {
        "codim": codimension(M),
        "dominant": is_dominant(M),
        "ci_decomposition": d.to_json() if d else None,
    }
    if M.is_squarefree():
        payload["realizations"] = [list(r.names) for r in realizations(M)]
    if d is not None:
        payload["multiplicity"] = {
            "realizations": multiplicity_by_realizations(M),
            "recursive": multiplicity_recursive(M, d),
        }
        if payload["dominant"]:
            payload["multiplicity"]["inclusion_exclusion"] = multiplicity_by_inclusion_exclusion(
                M, d, cap=cfg.cap_subsets
            )
    elif args.experimental:
        # outside the proven class: report side by side, assert nothing
        payload["experimental"] = {
            "realizations_of_polarization": multiplicity_by_realizations(M, experimental=True),
            "localization": multiplicity_by_localization(M),
        }
    lines = [f"{k} = {v}" for k, v in payload.items()]
    _emit(cfg, payload, "\n".join(lines), args.output)
    return 0


def cmd_color_efl(args, cfg: RunConfig) -> int:
    if args.instance:
        inst = EflInstance.from_json(_read_json(args.instance))
    else:
        if args.k is None or args.num_cliques is None:
            raise ParseError("give --instance or both --k and --num-cliques")
        pairs = parse_pairs(args.pairs, args.num_cliques)
        inst = generate_efl(args.k, args.num_cliques, pairs, seed=args.instance_seed)
    pf = pair_function_for(inst)
    coloring = color_efl(inst)
    payload = {
        "instance": inst.to_json(),
        "pair_function": pf.mode,
        "coloring": coloring.to_json()["coloring"],
        "k": inst.k,
        "certificate": {
            "proper": coloring.is_proper(inst.graph),
            "edges_checked": len(inst.graph.edges),
            "colors_used": len(set(coloring.assignment.values())),
        },
    }
    lines = [f"{v}: {c}" for v, c in sorted(coloring.assignment.items())]
    lines.append(f"proper {inst.k}-coloring, {len(inst.graph.edges)} edges checked")
    _emit(cfg, payload, "\n".join(lines), args.output)
    return 0


def _random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return Graph(n, [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1) if rng.random() < p])


def _exhaustive_realizations(M: MonomialIdeal, c: int) -> list[tuple[int, ...]]:
    gens = [set(g.exponents) for g in M.generators]
    return [
        X
        for X in itertools.combinations(range(len(M.registry)), c)
        if all(g & set(X) for g in gens)
    ]


def run_verify(max_n: int, trials: int, seed: int, efl_trials: int, cfg: RunConfig) -> dict:
    """Randomized cross-checks; returns a summary with any counterexamples."""
    summary = {
        "seed": seed,
        "max_n": max_n,
        "random_graphs": {"trials": 0, "chi_equals_codim": 0, "round_trip": 0, "dominant": 0,
                          "multiplicity_checked": 0, "realizations_exhaustive": 0},
        "efl": {"trials": 0, "proper_colorings": 0, "chi_equals_k": 0, "poly_identity": 0, "skipped_over_caps": 0},
        "counterexamples": [],
    }
    rg = summary["random_graphs"]
    for t in range(trials):
        rng = random.Random(f"{seed}:graph:{t}")
        n = rng.randint(1, max_n)
        p = EDGE_PROBABILITIES[t % len(EDGE_PROBABILITIES)]
        G = _random_graph(rng, n, p)
        rg["trials"] += 1
        try:
            M = chromatic_ideal(G)
            codim = codimension(M)
            brute = chromatic_number_bruteforce(G, cap=cfg.cap_poly)
            if codim != brute:
                raise InvariantViolation(f"codim {codim} != chromatic number {brute}")
            rg["chi_equals_codim"] += 1
            if graph_from_ideal(M) != G:
                raise InvariantViolation("graph_from_ideal(chromatic_ideal(G)) != G")
            rg["round_trip"] += 1
            if not is_dominant(M):
                raise InvariantViolation("chromatic ideal is not dominant")
            rg["dominant"] += 1
            if len(M.registry) <= cfg.cap_vars:
                fast = [r.variables for r in realizations(M)]
                if fast != _exhaustive_realizations(M, codim):
                    raise InvariantViolation("realizations differ from exhaustive enumeration")
                rg["realizations_exhaustive"] += 1
            d = find_ci_decomposition(M)
            if d is not None:
                multiplicities(M, d, cap_subsets=cfg.cap_subsets)
                rg["multiplicity_checked"] += 1
        except InvariantViolation as exc:
            summary["counterexamples"].append({"trial": t, "error": str(exc), "graph": G.to_json()})

    ef = summary["efl"]
    for t in range(efl_trials):
        rng = random.Random(f"{seed}:efl:{t}")
        k = EFL_SIZES[t % len(EFL_SIZES)]
        r = k + (t // len(EFL_SIZES)) % 2
        all_pairs = list(itertools.combinations(range(1, r + 1), 2))
        pairs = [p for p in all_pairs if rng.random() < 0.5]
        inst = generate_efl(k, r, pairs, seed=rng.randrange(2**31))
        ef["trials"] += 1
        try:
            coloring = color_efl(inst)
            if not coloring.is_proper(inst.graph):
                raise InvariantViolation("EFL coloring is not proper")
            ef["proper_colorings"] += 1
            if inst.graph.n > cfg.cap_poly:
                ef["skipped_over_caps"] += 1
                continue
            chi = chromatic_number_via_codim(inst.graph)
            if chi != k:
                raise InvariantViolation(f"codim {chi} != k={k}")
            ef["chi_equals_k"] += 1
            M = chromatic_ideal(inst.graph)
            cover = CliqueCover(inst.cliques)
            d = find_ci_decomposition(M, hint=[v - 1 for v in inst.cliques[0]])
            e = multiplicities(M, d, cap_subsets=cfg.cap_subsets)["recursive"]
            direct = chromatic_polynomial(inst.graph, cap=cfg.cap_poly)(k)
            if direct != math.factorial(k) * e:
                raise InvariantViolation(f"P_G({k}) = {direct} but k! * e = {math.factorial(k) * e}")
            cover.validate(inst.graph)
            ef["poly_identity"] += 1
        except InvariantViolation as exc:
            summary["counterexamples"].append({"efl_trial": t, "error": str(exc), "instance": inst.to_json()})
    summary["headline"] = f"{rg['chi_equals_codim']}/{rg['trials']} chi=codim"
    return summary


def cmd_verify(args, cfg: RunConfig) -> int:
    efl_trials = args.efl_trials if args.efl_trials is not None else args.trials // 10
    summary = run_verify(args.max_n, args.trials, cfg.seed, efl_trials, cfg)
    rg, ef = summary["random_graphs"], summary["efl"]
    lines = [
        summary["headline"],
        f"{rg['round_trip']}/{rg['trials']} graph round trips",
        f"{rg['multiplicity_checked']} ideals with multiplicity methods in agreement",
        f"EFL: {ef['proper_colorings']}/{ef['trials']} proper colorings, "
        f"{ef['poly_identity']} polynomial identities, {ef['skipped_over_caps']} over caps",
    ]
    for ce in summary["counterexamples"]:
        lines.append("COUNTEREXAMPLE " + json.dumps(ce))
    _emit(cfg, summary, "\n".join(lines), args.output)
    return 1 if summary["counterexamples"] else 0


# -- entry point -----------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json", help="output format")
    common.add_argument("--output", help="write output to this file instead of stdout")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--cap-vars", type=int, default=20, help="max variables for exhaustive checks")
    common.add_argument("--cap-subsets", type=int, default=24, help="max non-CI generators for inclusion-exclusion")
    common.add_argument("--cap-poly", type=int, default=16, help="max vertices for deletion-contraction")
    common.add_argument("--log-level", default=None, help="overrides $CHROMIDEAL_LOG_LEVEL")

    parser = argparse.ArgumentParser(prog="chromideal", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_args(p):
        p.add_argument("graph", help="graph file (edge list or DIMACS .col), '-' for stdin")
        p.add_argument("--input-format", choices=("edge-list", "dimacs"), default=None,
                       help="graph file format (sniffed when omitted)")

    p = sub.add_parser("ideal", parents=[common], help="print the chromatic ideal of a graph")
    graph_args(p)
    p.set_defaults(func=cmd_ideal)

    p = sub.add_parser("report", parents=[common], help="chromatic number, multiplicity and P_G(chi)")
    graph_args(p)
    p.add_argument("--cover", help="JSON clique cover: [[1,2,3],[3,4,5]] or {\"cliques\": ...}")
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("invariants", parents=[common], help="codimension, realizations, multiplicities of an ideal")
    p.add_argument("ideal", help="ideal JSON file")
    p.add_argument("--hint", type=lambda s: [int(x) for x in s.split(",")], default=None,
                   help="comma-separated generator indices forming a complete intersection")
    p.add_argument("--experimental", action="store_true",
                   help="compare methods on ideals outside the proven hypothesis class")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("verify", parents=[common], help="randomized cross-check harness")
    p.add_argument("--max-n", type=int, default=10)
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--efl-trials", type=int, default=None, help="default: trials // 10")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("color-efl", parents=[common], help="k-color a union of k-cliques")
    p.add_argument("--k", type=int)
    p.add_argument("--num-cliques", type=int)
    p.add_argument("--pairs", default="all", help="'all', 'none', '1-2,2-3' or '12,23'")
    p.add_argument("--instance", help="instance JSON file instead of generating one")
    p.add_argument("--instance-seed", type=int, default=None, help="relabel generated vertices")
    p.set_defaults(func=cmd_color_efl)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    level = (args.log_level or RunConfig.env_log_level()).upper()
    logging.basicConfig(level=getattr(logging, level, logging.WARNING), format="%(levelname)s %(name)s: %(message)s")
    try:
        cfg = RunConfig(
            cap_vars=args.cap_vars,
            cap_subsets=args.cap_subsets,
            cap_poly=args.cap_poly,
            seed=args.seed,
            log_level=level,
            output_format=args.format,
        )
        return args.func(args, cfg)
    except ChromIdealError as exc:
        print(f"chromideal: error: {exc}", file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
