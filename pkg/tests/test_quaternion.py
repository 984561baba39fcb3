import pytest

from lcl_cli.algebra.quaternion import (
    QuaternionAlgebra,
    StandardOrder,
    embed_matrix,
    embed_unit,
    nrd,
    units_from_pairs,
)
from lcl_cli.errors import NoStandardOrder, ZeroParameter


@pytest.fixture(scope="module")
def remark_algebra(sqrt2):
    return QuaternionAlgebra(sqrt2, sqrt2.gen(), -1)


@pytest.fixture(scope="module")
def unit(remark_algebra, sqrt2):
    return remark_algebra.element(sqrt2.element([3, 2]), sqrt2.element([2, 2]))


def test_basis_relations(remark_algebra):
    i, j, k = remark_algebra.i(), remark_algebra.j(), remark_algebra.k()
    assert i * j == k
    assert j * i == -k
    assert i * i == remark_algebra.element(remark_algebra.a)
    assert j * j == remark_algebra.element(-1)


def test_reduced_norm_is_multiplicative(remark_algebra, unit):
    x = remark_algebra.element(1, 2, 3, 4)
    y = remark_algebra.element(0, 1, -1, 2)
    assert nrd(x * y) == nrd(x) * nrd(y)
    assert nrd(unit) == 1
    assert (x * x.conj()).x0 == nrd(x)
    assert x.trd() == 2


def test_ramification_and_signature(remark_algebra):
    ramified = [flag for _, flag in remark_algebra.ramification()]
    assert ramified == [False, True]
    assert remark_algebra.signature() == (0, 1)
    assert [p.index for p in remark_algebra.factor_places()] == [0]


def test_hamilton_quaternions_are_definite(rationals):
    hamilton = QuaternionAlgebra(rationals, -1, -1)
    assert hamilton.signature() == (0, 0)
    assert QuaternionAlgebra(rationals, 1, 1).signature() == (0, 1)


def test_complex_places_always_contribute(gaussian):
    algebra = QuaternionAlgebra(gaussian, -1, -1)
    assert algebra.signature() == (1, 0)
    assert algebra.factor_places() == list(gaussian.places)


def test_zero_parameter_rejected(rationals):
    with pytest.raises(ZeroParameter):
        QuaternionAlgebra(rationals, 0, 1)


def test_embedding_is_multiplicative(remark_algebra, unit):
    x = remark_algebra.element(1, 2, 3, 4)
    y = remark_algebra.element(0, 1, -1, 2)
    (a, b), (c, d) = embed_matrix(x)
    (e, f), (g, h) = embed_matrix(y)
    (p, q), (r, s) = embed_matrix(x * y)
    assert p == a * e + b * g
    assert q == a * f + b * h
    assert r == c * e + d * g
    assert s == c * f + d * h


def test_embed_unit_gives_unimodular_element(remark_algebra, unit):
    g = embed_unit(unit)
    assert g.a * g.d - g.b * g.c == 1
    assert g.trace() == g.ring.coerce(unit.trd())
    with pytest.raises(ValueError):
        embed_unit(remark_algebra.element(2))


def test_standard_order_membership(remark_algebra, unit, sqrt2):
    order = StandardOrder(remark_algebra)
    assert order.unit_check(unit)
    half = remark_algebra.element(sqrt2.element(["1/2"]))
    assert not order.contains(half)
    assert order.check_closure([unit, remark_algebra.j(), remark_algebra.i()])


def test_standard_order_needs_integral_parameters(rationals):
    with pytest.raises(NoStandardOrder):
        StandardOrder(QuaternionAlgebra(rationals, "1/2", 1))


def test_random_elements_are_reproducible(remark_algebra):
    order = StandardOrder(remark_algebra)
    first = order.random_elements(5, seed=7)
    assert first == order.random_elements(5, seed=7)
    assert all(order.contains(x) for x in first)


def test_units_from_pairs_keeps_norm_one(remark_algebra):
    units = units_from_pairs(remark_algebra, [(1,), (2,), (0, 0, 1)])
    assert len(units) == 2


def test_identities_on_random_integral_quaternions(remark_algebra):
    order = StandardOrder(remark_algebra)
    samples = order.random_elements(1000, seed=2024)
    tower = remark_algebra.tower
    for x, y in zip(samples, samples[1:] + samples[:1]):
        assert nrd(x * y) == nrd(x) * nrd(y)
        (a, b), (c, d) = embed_matrix(x)
        assert a * d - b * c == tower.coerce(nrd(x))
        assert a + d == tower.coerce(x.x0 + x.x0)
