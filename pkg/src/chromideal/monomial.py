"""Monomials over a shared variable registry.

A :class:`Registry` fixes the variables of a polynomial ring by display
name; a :class:`Monomial` is a sparse map from registry index to a positive
exponent.  The coefficient field never enters any computation here, so it
is not modelled at all.
"""

from __future__ import annotations

from types import MappingProxyType
from typing import Iterable, Mapping

from .errors import DomainError, RegistryMismatchError


class Registry:
    """Ordered, immutable set of variable display names.

    Variable identifiers are the positions ``0..len-1``.  Two registries
    compare equal iff they hold the same names in the same order.
    """

    __slots__ = ("names", "_index")

    def __init__(self, names: Iterable[str]):
        names = tuple(str(n) for n in names)
        index = {}
        for i, name in enumerate(names):
            if not name:
                raise DomainError("variable names must be non-empty")
            if name in index:
                raise DomainError(f"duplicate variable name {name!r}")
            index[name] = i
        object.__setattr__(self, "names", names)
        object.__setattr__(self, "_index", index)

    def __setattr__(self, key, value):
        raise AttributeError("Registry is immutable")

    def __len__(self) -> int:
        return len(self.names)

    def __iter__(self):
        return iter(self.names)

    def __contains__(self, name) -> bool:
        return name in self._index

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        return isinstance(other, Registry) and self.names == other.names

    def __hash__(self) -> int:
        return hash(self.names)

    def __repr__(self) -> str:
        return f"Registry({list(self.names)!r})"

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise DomainError(f"unknown variable {name!r}") from None

    def name(self, var: int) -> str:
        return self.names[var]

    def variable(self, name: str) -> "Monomial":
        return Monomial(self, {self.index(name): 1})

    def monomial(self, exponents: Mapping[str, int] | str) -> "Monomial":
        """Build a monomial from names.

        Accepts either a ``{"a": 2, "b": 1}`` mapping or a ``"a^2*b"``
        string; ``"1"`` is the unit monomial.
        """
        if isinstance(exponents, str):
            exponents = _parse_monomial_text(exponents)
        return Monomial(self, {self.index(k): v for k, v in exponents.items()})


def _parse_monomial_text(text: str) -> dict[str, int]:
    text = text.strip()
    if text in ("", "1"):
        return {}
    out: dict[str, int] = {}
    for factor in text.split("*"):
        factor = factor.strip()
        name, _, power = factor.partition("^")
        try:
            e = int(power) if power else 1
        except ValueError:
            raise DomainError(f"bad exponent in factor {factor!r}") from None
        out[name] = out.get(name, 0) + e
    return out


class Monomial:
    """Immutable monomial; the empty exponent map is the monomial 1."""

    __slots__ = ("registry", "_exps", "_hash")

    def __init__(self, registry: Registry, exponents: Mapping[int, int] | None = None):
        exps = {}
        for var, e in (exponents or {}).items():
            if not 0 <= var < len(registry):
                raise DomainError(f"variable index {var} outside registry of size {len(registry)}")
            if not isinstance(e, int) or e < 0:
                raise DomainError(f"exponent must be a nonnegative integer, got {e!r}")
            if e:
                exps[var] = e
        object.__setattr__(self, "registry", registry)
        object.__setattr__(self, "_exps", dict(sorted(exps.items())))
        object.__setattr__(self, "_hash", hash((registry, tuple(self._exps.items()))))

    def __setattr__(self, key, value):
        raise AttributeError("Monomial is immutable")

    @classmethod
    def one(cls, registry: Registry) -> "Monomial":
        return cls(registry)

    @property
    def exponents(self) -> Mapping[int, int]:
        return MappingProxyType(self._exps)

    @property
    def support(self) -> frozenset[int]:
        return frozenset(self._exps)

    @property
    def degree(self) -> int:
        return sum(self._exps.values())

    def exponent(self, var: int) -> int:
        return self._exps.get(var, 0)

    def is_one(self) -> bool:
        return not self._exps

    def is_squarefree(self) -> bool:
        return all(e == 1 for e in self._exps.values())

    def sort_key(self) -> tuple:
        """Canonical ordering: support in registry order, then exponents."""
        return (tuple(self._exps), tuple(self._exps.values()))

    def to_dict(self) -> dict[str, int]:
        return {self.registry.name(v): e for v, e in self._exps.items()}

    def __mul__(self, other: "Monomial") -> "Monomial":
        _check_same(self, other)
        exps = dict(self._exps)
        for v, e in other._exps.items():
            exps[v] = exps.get(v, 0) + e
        return Monomial(self.registry, exps)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Monomial):
            return NotImplemented
        return self._hash == other._hash and self.registry == other.registry and self._exps == other._exps

    def __hash__(self) -> int:
        return self._hash

    def __str__(self) -> str:
        if not self._exps:
            return "1"
        parts = []
        for v, e in self._exps.items():
            name = self.registry.name(v)
            parts.append(name if e == 1 else f"{name}^{e}")
        return "*".join(parts)

    def __repr__(self) -> str:
        return f"Monomial({self})"


def _check_same(a: Monomial, b: Monomial) -> None:
    if a.registry is not b.registry and a.registry != b.registry:
        raise RegistryMismatchError("monomials belong to distinct variable registries")


def lcm(*monomials: Monomial) -> Monomial:
    """Per-variable maximum of exponents.  Needs at least one argument."""
    if not monomials:
        raise DomainError("lcm of no monomials needs an explicit registry")
    first = monomials[0]
    exps = dict(first._exps)
    for m in monomials[1:]:
        _check_same(first, m)
        for v, e in m._exps.items():
            if e > exps.get(v, 0):
                exps[v] = e
    return Monomial(first.registry, exps)


def gcd(a: Monomial, b: Monomial) -> Monomial:
    _check_same(a, b)
    return Monomial(a.registry, {v: min(e, b._exps[v]) for v, e in a._exps.items() if v in b._exps})


def divides(a: Monomial, b: Monomial) -> bool:
    _check_same(a, b)
    bexp = b._exps
    return all(e <= bexp.get(v, 0) for v, e in a._exps.items())


def coprime(a: Monomial, b: Monomial) -> bool:
    _check_same(a, b)
    return a._exps.keys().isdisjoint(b._exps)


def quotient(numerator: Monomial, denominator: Monomial) -> Monomial:
    if not divides(denominator, numerator):
        raise DomainError(f"{denominator} does not divide {numerator}")
    num = numerator._exps
    exps = {v: e - denominator._exps.get(v, 0) for v, e in num.items()}
    return Monomial(numerator.registry, exps)


def quotient_degree(numerator: Monomial, denominator: Monomial) -> int:
    """Total degree of ``numerator / denominator``; the division must be exact."""
    if not divides(denominator, numerator):
        raise DomainError(f"{denominator} does not divide {numerator}")
    return numerator.degree - denominator.degree
