import random

import pytest

from conftest import random_scalar
from qspaces.catalog import CATALOG_PARAMS, catalog_ids, catalog_get
from qspaces.errors import (
    DivisionByGeneratorExpression,
    DivisionByNonUnit,
    ExprSyntaxError,
    UnknownSymbol,
)
from qspaces.expressions import (
    format_element,
    format_scalar,
    parse_expression,
    parse_scalar,
)
from qspaces.freealg import Element, FreeAlgebra
from qspaces.scalars import Scalar

P = CATALOG_PARAMS


@pytest.fixture
def algebra():
    return FreeAlgebra(P, [("x", 0), ("y", 0), ("p", 0), ("r", 0), ("xi", 1)])


def test_parse_plane_relation(algebra):
    e = parse_expression("x*y - q*y*x", algebra)
    q = Scalar.parameter(P, "q")
    assert e == Element(algebra, {("x", "y"): Scalar.one(P), ("y", "x"): -q})


def test_parse_zero(algebra):
    assert parse_expression("0", algebra).is_zero()


def test_parse_cartesian_rhs(algebra):
    e = parse_expression("i*(q - 1)/(q + 1)*(r^2 + p^2)", algebra)
    i = Scalar.imag_unit(P)
    q = Scalar.parameter(P, "q")
    one = Scalar.one(P)
    c = i * (q - one) / (q + one)
    assert e == Element(algebra, {("r", "r"): c, ("p", "p"): c})


def test_parse_odd_parameter_position(algebra):
    # odd parameters anticommute past odd generators on canonicalization
    h = Scalar.parameter(P, "h")
    left = parse_expression("h*xi", algebra)
    right = parse_expression("xi*h", algebra)
    assert right == -left
    assert left == Element(algebra, {("xi",): h})


def test_generator_order_significant(algebra):
    assert parse_expression("x*y", algebra) != parse_expression("y*x", algebra)


def test_juxtaposition_rejected(algebra):
    with pytest.raises(ExprSyntaxError):
        parse_expression("x y", algebra)


def test_unknown_symbol(algebra):
    with pytest.raises(UnknownSymbol):
        parse_expression("x*zeta", algebra)


def test_syntax_error_position(algebra):
    with pytest.raises(ExprSyntaxError) as err:
        parse_expression("x*(y", algebra)
    assert err.value.position == 4


def test_division_rules(algebra):
    with pytest.raises(DivisionByGeneratorExpression):
        parse_expression("1/(x + 1)", algebra)
    with pytest.raises(DivisionByNonUnit):
        parse_expression("1/h", algebra)
    ok = parse_expression("x/(q + 1)", algebra)
    q = Scalar.parameter(P, "q")
    assert ok == Element(algebra, {("x",): (Scalar.one(P) / (q + Scalar.one(P)))})


def test_exponent_rules(algebra):
    assert parse_expression("x^3", algebra) == parse_expression("x*x*x", algebra)
    with pytest.raises(ExprSyntaxError):
        parse_expression("x^0", algebra)
    with pytest.raises(ExprSyntaxError):
        parse_expression("x^q", algebra)


def test_unary_minus(algebra):
    e = parse_expression("-q*x + x", algebra)
    q = Scalar.parameter(P, "q")
    assert e == Element(algebra, {("x",): Scalar.one(P) - q})


def test_roundtrip_catalog_relations():
    for pid in catalog_ids("presentation"):
        p = catalog_get(pid).payload.presentation
        for rel in p.relations:
            assert parse_expression(format_element(rel), p.algebra) == rel, (
                pid, format_element(rel),
            )


def test_roundtrip_random_elements(algebra):
    rng = random.Random(53)
    gens = algebra.generator_names()
    for _ in range(150):
        terms = {}
        for _ in range(rng.randint(1, 4)):
            word = tuple(rng.choice(gens) for _ in range(rng.randint(0, 3)))
            terms[word] = random_scalar(rng, P)
        e = Element(algebra, terms)
        assert parse_expression(format_element(e), algebra) == e


def test_roundtrip_scalars():
    rng = random.Random(59)
    for _ in range(150):
        s = random_scalar(rng, P)
        assert parse_scalar(format_scalar(s), P) == s


def test_format_zero(algebra):
    assert format_element(algebra.zero()) == "0"
    assert format_scalar(Scalar.zero(P)) == "0"
