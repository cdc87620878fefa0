"""Monomial ideals and their combinatorial invariants.

Codimension and realizations come from an exact hitting-set search over
generator supports.  Multiplicity is available three ways, which are meant
to be cross-checked against each other:

* :func:`multiplicity_by_realizations` counts realizations of the
  polarization,
* :func:`multiplicity_by_inclusion_exclusion` evaluates the alternating lcm
  formula for dominant ideals,
* :func:`multiplicity_recursive` peels one generator at a time using
  ``e(S/M) = e(S/M1) - e(S/(M1 : m1))``.

All three require a complete-intersection decomposition of size equal to the
codimension.  :func:`multiplicity_by_localization` is a general-purpose
reference (sum of local lengths over minimal primes of minimal height) used
for experiments outside that class.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import (
    DomainError,
    HintValidationError,
    InvariantViolation,
    PreconditionError,
    ResourceLimitError,
)
from .hitting import hitting_sets_of_size, minimum_hitting_set
from .monomial import Monomial, Registry, coprime, divides, lcm, quotient, quotient_degree

DEFAULT_SUBSET_CAP = 24


class MonomialIdeal:
    """A monomial ideal held by its minimal generating set.

    Construction always minimalizes: duplicates and generators divisible by
    another generator are dropped, and the survivors are put in canonical
    order (support in registry order, then exponents).  An empty generator
    list is the zero ideal.
    """

    __slots__ = ("registry", "generators")

    def __init__(self, registry: Registry, generators: Iterable[Monomial] = ()):
        gens = list(generators)
        for g in gens:
            if g.registry != registry:
                raise DomainError("generator registry differs from the ideal registry")
        self.registry = registry
        self.generators = tuple(_minimal(gens))

    @classmethod
    def from_strings(cls, names: Sequence[str], generators: Sequence[str]) -> "MonomialIdeal":
        """Shorthand for tests and the CLI, e.g. ``(["x","y"], ["x^2", "x*y"])``."""
        reg = Registry(names)
        return cls(reg, [reg.monomial(g) for g in generators])

    def __len__(self) -> int:
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def __getitem__(self, i: int) -> Monomial:
        return self.generators[i]

    def __eq__(self, other) -> bool:
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.registry == other.registry and self.generators == other.generators

    def __hash__(self) -> int:
        return hash((self.registry, self.generators))

    def __repr__(self) -> str:
        return "MonomialIdeal(" + ", ".join(str(g) for g in self.generators) + ")"

    def is_zero(self) -> bool:
        return not self.generators

    def is_unit(self) -> bool:
        return any(g.is_one() for g in self.generators)

    def is_squarefree(self) -> bool:
        return all(g.is_squarefree() for g in self.generators)

    def masks(self) -> list[int]:
        return [_mask(g) for g in self.generators]


def _mask(m: Monomial) -> int:
    out = 0
    for v in m.exponents:
        out |= 1 << v
    return out


def _minimal(gens: Sequence[Monomial]) -> list[Monomial]:
    uniq = sorted(set(gens), key=lambda g: (g.degree, g.sort_key()))
    kept: list[Monomial] = []
    for g in uniq:
        if not any(divides(k, g) for k in kept):
            kept.append(g)
    kept.sort(key=Monomial.sort_key)
    return kept


def minimalize(gens: Sequence[Monomial], registry: Registry | None = None) -> MonomialIdeal:
    """Minimal generating set of the ideal spanned by ``gens``.

    ``registry`` is only needed for an empty list (the zero ideal).
    """
    if registry is None:
        if not gens:
            raise DomainError("the zero ideal needs an explicit registry")
        registry = gens[0].registry
    return MonomialIdeal(registry, gens)


# -- codimension and realizations ------------------------------------------


def _require_proper(M: MonomialIdeal) -> None:
    if M.is_zero():
        raise DomainError("codimension is not defined for the zero ideal")
    if M.is_unit():
        raise DomainError("codimension is not defined for the unit ideal")


def _codim_of(gens: Sequence[Monomial]) -> int:
    return minimum_hitting_set([_mask(g) for g in gens]).bit_count()


def codimension(M: MonomialIdeal) -> int:
    """Size of a smallest variable set dividing into every generator."""
    _require_proper(M)
    return _codim_of(M.generators)


@dataclass(frozen=True)
class Realization:
    """A variable set of size ``codim`` hitting every generator."""

    variables: tuple[int, ...]
    names: tuple[str, ...]

    def __len__(self) -> int:
        return len(self.variables)

    def as_set(self) -> frozenset[str]:
        return frozenset(self.names)


def realizations(M: MonomialIdeal) -> list[Realization]:
    """Every realization of the codimension of a squarefree ideal, sorted."""
    _require_proper(M)
    if not M.is_squarefree():
        raise PreconditionError("realizations are defined for squarefree ideals; call polarize() first")
    c = codimension(M)
    out = []
    for mask in hitting_sets_of_size(M.masks(), c):
        vs = tuple(v for v in range(mask.bit_length()) if mask >> v & 1)
        out.append(Realization(vs, tuple(M.registry.name(v) for v in vs)))
    out.sort(key=lambda r: r.variables)
    return out


# -- structure: dominance, complete intersections, polarization ------------


def dominance_witness(gens: MonomialIdeal | Sequence[Monomial]) -> dict[int, int] | None:
    """Map each generator index to a variable it strictly dominates on.

    Returns ``None`` if some generator has no such variable.  A raw
    generator sequence is checked as given, without minimalizing.
    """
    gens = list(gens)
    witness = {}
    for i, g in enumerate(gens):
        for v, e in g.exponents.items():
            if all(h.exponent(v) < e for j, h in enumerate(gens) if j != i):
                witness[i] = v
                break
        else:
            return None
    return witness


def is_dominant(gens: MonomialIdeal | Sequence[Monomial]) -> bool:
    return dominance_witness(gens) is not None


@dataclass(frozen=True)
class CIDecomposition:
    """Split of generator indices into a complete intersection and the rest."""

    others: tuple[int, ...]
    ci_part: tuple[int, ...]

    def to_json(self) -> dict:
        return {"others": list(self.others), "ci_part": list(self.ci_part)}

    @classmethod
    def from_json(cls, data: dict) -> "CIDecomposition":
        return cls(tuple(data["others"]), tuple(data["ci_part"]))


def _validate_decomposition(M: MonomialIdeal, ci: Sequence[int], c: int) -> None:
    n = len(M)
    if len(set(ci)) != len(ci):
        raise HintValidationError(f"repeated generator index in {list(ci)}")
    for i in ci:
        if not 0 <= i < n:
            raise HintValidationError(f"generator index {i} out of range 0..{n - 1}")
    for i, j in itertools.combinations(ci, 2):
        if not coprime(M[i], M[j]):
            raise HintValidationError(f"generators {i} ({M[i]}) and {j} ({M[j]}) are not coprime")
    if len(ci) != c:
        raise HintValidationError(f"hint has {len(ci)} generators but the codimension is {c}")


def find_ci_decomposition(M: MonomialIdeal, hint: Sequence[int] | None = None) -> CIDecomposition | None:
    """Find pairwise-coprime generators whose count equals the codimension.

    With ``hint`` the given indices are validated instead of searched for;
    a bad hint raises :class:`HintValidationError`.  Without a hint the
    lexicographically first suitable index set is returned, or ``None``.
    """
    _require_proper(M)
    c = codimension(M)
    n = len(M)
    if hint is not None:
        ci = tuple(sorted(hint))
        _validate_decomposition(M, ci, c)
        return CIDecomposition(tuple(i for i in range(n) if i not in ci), ci)

    masks = M.masks()

    def extend(chosen: list[int], used: int, start: int) -> list[int] | None:
        if len(chosen) == c:
            return chosen
        for i in range(start, n - (c - len(chosen)) + 1):
            if not masks[i] & used:
                found = extend(chosen + [i], used | masks[i], i + 1)
                if found:
                    return found
        return None

    found = extend([], 0, 0)
    if found is None:
        return None
    ci = tuple(found)
    return CIDecomposition(tuple(i for i in range(n) if i not in ci), ci)


def _require_ci(M: MonomialIdeal, d: CIDecomposition | None) -> CIDecomposition:
    if d is None:
        d = find_ci_decomposition(M)
        if d is None:
            raise PreconditionError(
                "no complete-intersection subset of size codim exists; "
                "multiplicity from realizations is only established under that hypothesis"
            )
        return d
    _validate_decomposition(M, d.ci_part, codimension(M))
    if sorted(d.others + d.ci_part) != list(range(len(M))):
        raise HintValidationError("decomposition does not partition the generator indices")
    return d


def polarize(M: MonomialIdeal) -> MonomialIdeal:
    """Standard polarization.

    A variable ``x`` whose largest exponent ``d`` is at least 2 is replaced
    by ``x#1, ..., x#d`` and ``x^e`` becomes ``x#1 * ... * x#e``.  Variables
    never raised above the first power keep their name, so squarefree ideals
    are returned unchanged.
    """
    top = [0] * len(M.registry)
    for g in M.generators:
        for v, e in g.exponents.items():
            top[v] = max(top[v], e)
    names: list[str] = []
    offset: list[int] = []
    for v, name in enumerate(M.registry.names):
        offset.append(len(names))
        if top[v] >= 2:
            names.extend(f"{name}#{i}" for i in range(1, top[v] + 1))
        else:
            names.append(name)
    reg = Registry(names)
    gens = []
    for g in M.generators:
        exps = {}
        for v, e in g.exponents.items():
            for i in range(e):
                exps[offset[v] + i] = 1
        gens.append(Monomial(reg, exps))
    return MonomialIdeal(reg, gens)


# -- multiplicity ----------------------------------------------------------


def multiplicity_by_realizations(M: MonomialIdeal, *, experimental: bool = False) -> int:
    """Number of realizations of the codimension of ``polarize(M)``.

    Refuses ideals without a complete-intersection decomposition unless
    ``experimental`` is set, in which case the count is returned with no
    claim that it equals the multiplicity.
    """
    if not experimental:
        _require_ci(M, None)
    return len(realizations(polarize(M)))


@dataclass(frozen=True)
class IETerm:
    subset: tuple[int, ...]  # generator indices of the chosen "others"
    sign: int
    factors: tuple[int, ...]
    value: int


def inclusion_exclusion_terms(
    M: MonomialIdeal, d: CIDecomposition, *, cap: int = DEFAULT_SUBSET_CAP
) -> list[IETerm]:
    """Signed terms of the alternating lcm formula, by subset size then lexicographically."""
    if not is_dominant(M):
        raise PreconditionError("the inclusion-exclusion formula needs a dominant ideal")
    d = _require_ci(M, d)
    if len(d.others) > cap:
        raise ResourceLimitError(
            f"{len(d.others)} non-CI generators exceed the subset cap {cap} "
            f"(2^{len(d.others)} terms); use multiplicity_recursive instead"
        )
    hs = [M[i] for i in d.ci_part]
    one = Monomial.one(M.registry)
    terms = []
    for j in range(len(d.others) + 1):
        for subset in itertools.combinations(d.others, j):
            base = lcm(one, *(M[r] for r in subset))
            factors = tuple(quotient_degree(lcm(base, h), base) for h in hs)
            sign = -1 if j % 2 else 1
            terms.append(IETerm(subset, sign, factors, sign * math.prod(factors)))
    return terms


def multiplicity_by_inclusion_exclusion(
    M: MonomialIdeal, d: CIDecomposition, *, cap: int = DEFAULT_SUBSET_CAP
) -> int:
    return sum(t.value for t in inclusion_exclusion_terms(M, d, cap=cap))


def _reduce_others(others: Iterable[Monomial], ci: Sequence[Monomial]) -> tuple[Monomial, ...]:
    # the ci generators stay untouched so they remain a complete intersection
    kept: list[Monomial] = []
    for g in sorted(set(others), key=lambda g: (g.degree, g.sort_key())):
        if not any(divides(h, g) for h in ci) and not any(divides(k, g) for k in kept):
            kept.append(g)
    kept.sort(key=Monomial.sort_key)
    return tuple(kept)


def multiplicity_recursive(M: MonomialIdeal, d: CIDecomposition | None = None) -> int:
    """Multiplicity by peeling off non-CI generators one at a time.

    With ``M1 = M`` minus its first non-CI generator ``m1`` and
    ``M_m1 = (lcm(l, m1) / m1 : l in M1)``, the codimensions satisfy
    ``codim M1 = codim M <= codim M_m1``; this is checked at every step and a
    failure raises :class:`InvariantViolation`.  Then ``e(M) = e(M1)`` when the
    inequality is strict and ``e(M1) - e(M_m1)`` otherwise.
    """
    d = _require_ci(M, d)
    ci = tuple(M[i] for i in d.ci_part)
    others = tuple(M[i] for i in d.others)
    r = len(ci)

    @lru_cache(maxsize=None)
    def rec(others: tuple[Monomial, ...], ci: tuple[Monomial, ...]) -> int:
        if not others:
            return math.prod(h.degree for h in ci)
        m1, rest = others[0], others[1:]
        c1 = _codim_of(rest + ci)
        colon_rest = [quotient(lcm(l, m1), m1) for l in rest]
        colon_ci = tuple(quotient(lcm(h, m1), m1) for h in ci)
        c_colon = _codim_of(colon_rest + list(colon_ci))
        if not c1 == r <= c_colon:
            raise InvariantViolation(
                f"codimension chain broken at m1={m1}: codim(M)={r}, codim(M1)={c1}, codim(M_m1)={c_colon}"
            )
        e1 = rec(rest, ci)
        if c_colon > r:
            return e1
        return e1 - rec(_reduce_others(colon_rest, colon_ci), colon_ci)

    return rec(_reduce_others(others, ci), ci)


def _artinian_length(gens: list[dict[int, int]], variables: list[int]) -> int:
    """Count monomials in ``variables`` outside an artinian monomial ideal."""
    if any(not g for g in gens):
        return 0
    if not variables:
        return 1
    x, rest = variables[0], variables[1:]
    pure = [g[x] for g in gens if set(g) == {x}]
    if not pure:
        raise InvariantViolation("ideal is not artinian in the chosen variables")
    total = 0
    for a in range(min(pure)):
        sub = []
        for g in gens:
            if g.get(x, 0) <= a:
                sub.append({v: e for v, e in g.items() if v != x})
        total += _artinian_length(sub, rest)
    return total


def multiplicity_by_localization(M: MonomialIdeal) -> int:
    """Reference multiplicity valid for every proper nonzero monomial ideal.

    Sums, over the minimal primes ``(x_F)`` of height ``codim M``, the length
    of ``M`` localized at ``(x_F)``: set every variable outside ``F`` to 1
    and count the standard monomials left in the variables of ``F``.
    """
    c = codimension(M)
    total = 0
    for mask in hitting_sets_of_size(M.masks(), c):
        F = [v for v in range(mask.bit_length()) if mask >> v & 1]
        local = [{v: g.exponent(v) for v in F if g.exponent(v)} for g in M.generators]
        total += _artinian_length(local, F)
    return total


def projective_dimension_dominant(M: MonomialIdeal) -> int:
    """Projective dimension of ``S/M`` for a dominant ideal: its generator count."""
    if M.is_zero() or not is_dominant(M):
        raise PreconditionError("the generator-count formula for pd only holds for dominant ideals")
    return len(M)


# -- serialization ---------------------------------------------------------


def ideal_to_json(M: MonomialIdeal) -> dict:
    return {"variables": list(M.registry.names), "generators": [g.to_dict() for g in M.generators]}


def ideal_from_json(data: dict) -> MonomialIdeal:
    try:
        reg = Registry(data["variables"])
        gens = [reg.monomial({str(k): int(v) for k, v in g.items()}) for g in data["generators"]]
    except (KeyError, TypeError, AttributeError) as exc:
        raise DomainError(f"malformed ideal JSON: {exc}") from None
    return MonomialIdeal(reg, gens)
