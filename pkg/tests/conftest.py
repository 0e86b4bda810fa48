import random
from fractions import Fraction

import pytest

from qspaces.scalars import GR_ZERO, GaussRational, ParameterSet, Scalar


@pytest.fixture
def params():
    return ParameterSet(
        even_free=("q", "v", "eps"),
        even_nilpotent=(("iota", 2),),
        odd=("h",),
    )


def eval_gauss_poly(poly, names, point):
    """Independent evaluation of a polynomial dict at rational points."""
    total = GaussRational(0)
    for mono, c in poly.terms.items():
        val = GaussRational(1)
        for name, e in zip(names, mono):
            for _ in range(e):
                val = val * GaussRational(point[name])
        total = total + c * val
    return total


def eval_scalar(scalar, point):
    """Sampling oracle for scalars without nilpotent or odd content."""
    names = scalar.params.even_free
    zero_nil = (0,) * len(scalar.params.even_nilpotent)
    total = GaussRational(0)
    for (odd, nil), frac in scalar.terms.items():
        assert odd == () and nil == zero_nil, "oracle needs a body-only scalar"
        num = eval_gauss_poly(frac.num, names, point)
        den = eval_gauss_poly(frac.den, names, point)
        total = total + num / den
    return total


def random_point(rng, names):
    while True:
        pt = {
            n: Fraction(rng.randint(-9, 9), rng.randint(1, 7)) for n in names
        }
        if all(v != 0 for v in pt.values()):
            return pt


def sample_equal(a, b, rng, trials=8):
    """Numeric agreement of two body-only scalars at random rational points."""
    names = a.params.even_free
    done = 0
    while done < trials:
        pt = random_point(rng, names)
        try:
            va = eval_scalar(a, pt)
            vb = eval_scalar(b, pt)
        except ZeroDivisionError:
            continue
        if va != vb:
            return False
        done += 1
    return True


def random_scalar(rng, params, allow_graded=True, unit=False, cheap=False):
    """Small random scalar; with unit=True the body is forced nonzero."""
    q = Scalar.parameter(params, "q")
    v = Scalar.parameter(params, "v")
    if cheap:
        pool = [q, Scalar.integer(params, rng.randint(-2, 2))]
    else:
        pool = [q, v, q + v, q * v, Scalar.integer(params, rng.randint(-3, 3))]
    body = Scalar.integer(params, rng.randint(1, 4) if unit else rng.randint(-2, 2))
    for _ in range(1 if cheap else rng.randint(0, 2)):
        body = body + rng.choice(pool) * Scalar.rational(params, rng.randint(-2, 2), rng.randint(1, 3))
    out = body
    if allow_graded:
        if rng.random() < 0.5:
            out = out + Scalar.parameter(params, "h") * rng.choice(pool)
        if rng.random() < 0.5:
            out = out + Scalar.parameter(params, "iota") * rng.choice(pool)
    if unit and not out.is_unit():
        out = out + Scalar.one(params)
    return out
