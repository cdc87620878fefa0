import pytest
from hypothesis import given, strategies as st

from chromideal.errors import DomainError, RegistryMismatchError
from chromideal.monomial import Monomial, Registry, coprime, divides, gcd, lcm, quotient, quotient_degree

REG = Registry(["x", "y", "z", "u"])
exponent_maps = st.dictionaries(st.integers(0, 3), st.integers(0, 4), max_size=4)


def mono(d):
    return Monomial(REG, d)


def test_registry_rejects_duplicates_and_empty_names():
    with pytest.raises(DomainError):
        Registry(["a", "a"])
    with pytest.raises(DomainError):
        Registry(["a", ""])


def test_parse_and_render():
    m = REG.monomial("x^2*z")
    assert m.degree == 3
    assert m.exponent(REG.index("x")) == 2
    assert str(m) == "x^2*z"
    assert REG.monomial({"y": 1}) == REG.variable("y")


def test_one_and_squarefree():
    one = mono({})
    assert one.is_one and one.degree == 0
    assert REG.monomial("x*y").is_squarefree()
    assert not REG.monomial("x^2").is_squarefree()


def test_lcm_gcd_examples():
    names = ["v1", "v3", "w{1,3}", "w{1,4}", "w{3,5}", "w{3,6}"]
    reg = Registry(names)
    m1 = reg.monomial({"v1": 1, "w{1,3}": 1, "w{1,4}": 1})
    m3 = reg.monomial({"v3": 1, "w{1,3}": 1, "w{3,5}": 1, "w{3,6}": 1})
    assert gcd(m1, m3) == reg.variable("w{1,3}")
    assert lcm(m1, m3).degree == 6
    assert divides(reg.variable("w{1,3}"), m1)


def test_divides_edge_cases():
    m = REG.monomial("x*y")
    assert divides(mono({}), m)
    assert not divides(REG.monomial("x^2"), REG.monomial("x"))
    assert coprime(REG.monomial("x"), REG.monomial("y*z"))
    assert not coprime(REG.monomial("x"), REG.monomial("x*y"))


def test_quotient_degree():
    m = REG.monomial("x*y*z")
    assert quotient_degree(m, m) == 0
    assert quotient_degree(m, REG.monomial("x")) == 2
    assert quotient(m, REG.monomial("y")) == REG.monomial("x*z")
    with pytest.raises(DomainError):
        quotient_degree(REG.monomial("x"), REG.monomial("y"))


def test_registry_mismatch():
    other = Registry(["x", "w"])
    with pytest.raises(RegistryMismatchError):
        lcm(REG.variable("x"), other.variable("x"))


@given(exponent_maps, exponent_maps)
def test_lcm_gcd_lattice_laws(a, b):
    a, b = mono(a), mono(b)
    g, l = gcd(a, b), lcm(a, b)
    assert divides(g, a) and divides(g, b)
    assert divides(a, l) and divides(b, l)
    assert l.degree + g.degree == a.degree + b.degree


@given(exponent_maps, exponent_maps)
def test_divides_matches_quotient(a, b):
    a, b = mono(a), mono(b)
    if divides(a, b):
        assert quotient(b, a) * a == b
        assert quotient_degree(b, a) == b.degree - a.degree
