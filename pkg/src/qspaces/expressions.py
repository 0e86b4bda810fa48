"""Expression grammar for scalars and elements, with a round-tripping printer.

Grammar: sums/differences of terms; a term is a product of factors joined
by '*'; a factor is an integer, 'i', a parameter, a generator, a
parenthesized expression, or factor '^' positive-int.  '/' is allowed only
when the divisor is generator-free; juxtaposition is not multiplication.
Generator order inside a term is significant; odd parameters may be
written anywhere and are normalized with Koszul signs.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import (
    DivisionByGeneratorExpression,
    DivisionByNonUnit,
    ExprSyntaxError,
    UnknownSymbol,
)
from .freealg import Element, FreeAlgebra
from .scalars import GR_ONE, GaussRational, ParameterSet, Scalar

_OPS = set("+-*/^()")


def _tokenize(src):
    tokens = []
    pos = 0
    n = len(src)
    while pos < n:
        ch = src[pos]
        if ch.isspace():
            pos += 1
            continue
        if ch.isdigit():
            start = pos
            while pos < n and src[pos].isdigit():
                pos += 1
            tokens.append(("int", int(src[start:pos]), start))
            continue
        if ch.isalpha() or ch == "_":
            start = pos
            while pos < n and (src[pos].isalnum() or src[pos] == "_"):
                pos += 1
            tokens.append(("name", src[start:pos], start))
            continue
        if ch in _OPS:
            tokens.append(("op", ch, pos))
            pos += 1
            continue
        raise ExprSyntaxError(f"unexpected character {ch!r}", pos)
    tokens.append(("end", None, n))
    return tokens


class _Parser:
    def __init__(self, tokens, algebra):
        self.tokens = tokens
        self.k = 0
        self.algebra = algebra

    def peek(self):
        return self.tokens[self.k]

    def next(self):
        tok = self.tokens[self.k]
        self.k += 1
        return tok

    def expect_op(self, op):
        kind, val, pos = self.next()
        if kind != "op" or val != op:
            raise ExprSyntaxError(f"expected {op!r}", pos)

    def parse(self):
        e = self.expr()
        kind, _, pos = self.peek()
        if kind != "end":
            raise ExprSyntaxError("trailing input", pos)
        return e

    def expr(self):
        kind, val, _ = self.peek()
        negate = False
        if kind == "op" and val == "-":
            self.next()
            negate = True
        e = self.term()
        if negate:
            e = -e
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val in "+-":
                self.next()
                rhs = self.term()
                e = e + rhs if val == "+" else e - rhs
            else:
                return e

    def term(self):
        e = self.factor()
        while True:
            kind, val, pos = self.peek()
            if kind == "op" and val in "*/":
                self.next()
                rhs = self.factor()
                if val == "*":
                    e = e * rhs
                else:
                    if not rhs.is_scalar():
                        raise DivisionByGeneratorExpression(
                            "division by an expression containing generators"
                        )
                    s = rhs.scalar_value()
                    if not s.is_unit():
                        raise DivisionByNonUnit("division by a non-unit scalar")
                    e = e * self.algebra.scalar(s.inverse())
            else:
                return e

    def factor(self):
        e = self.atom()
        while True:
            kind, val, pos = self.peek()
            if kind == "op" and val == "^":
                self.next()
                kind2, exp, pos2 = self.next()
                if kind2 != "int" or exp < 1:
                    raise ExprSyntaxError("exponent must be a positive integer", pos2)
                base = e
                out = base
                for _ in range(exp - 1):
                    out = out * base
                e = out
            else:
                return e

    def atom(self):
        kind, val, pos = self.next()
        alg = self.algebra
        if kind == "int":
            return alg.scalar(Scalar.integer(alg.params, val))
        if kind == "name":
            if val == "i":
                return alg.scalar(Scalar.imag_unit(alg.params))
            if val in alg.generator_names():
                return alg.gen(val)
            if alg.params.kind_of(val) is not None:
                return alg.param(val)
            raise UnknownSymbol(f"unknown symbol {val!r}")
        if kind == "op" and val == "(":
            e = self.expr()
            self.expect_op(")")
            return e
        if kind == "op" and val == "-":
            return -self.atom()
        raise ExprSyntaxError(f"unexpected token {val!r}", pos)


def parse_expression(src: str, algebra: FreeAlgebra) -> Element:
    """Parse source into a canonical Element of the given algebra."""
    return _Parser(_tokenize(src), algebra).parse()


_SCALAR_ALGEBRAS = {}


def scalar_context(params: ParameterSet) -> FreeAlgebra:
    alg = _SCALAR_ALGEBRAS.get(params)
    if alg is None:
        alg = FreeAlgebra(params, ())
        _SCALAR_ALGEBRAS[params] = alg
    return alg


def parse_scalar(src: str, params: ParameterSet) -> Scalar:
    """Parse a generator-free expression into a Scalar."""
    e = parse_expression(src, scalar_context(params))
    return e.scalar_value()


# ---------------------------------------------------------------------------
# printing (the inverse of the parser on canonical forms)
# ---------------------------------------------------------------------------

def _format_gauss(c: GaussRational, *, product_context):
    if not c.im:
        return str(c.re)
    if not c.re:
        if c.im == 1:
            return "i"
        if c.im == -1:
            return "-i"
        return f"{c.im}*i"
    sign = "+" if c.im > 0 else "-"
    mag = abs(c.im)
    imag = "i" if mag == 1 else f"{mag}*i"
    s = f"{c.re} {sign} {imag}"
    return f"({s})" if product_context else s


def _format_monomial(c: GaussRational, mono, names):
    vars_part = []
    for name, e in zip(names, mono):
        if e == 1:
            vars_part.append(name)
        elif e > 1:
            vars_part.append(f"{name}^{e}")
    if not vars_part:
        return _format_gauss(c, product_context=True)
    body = "*".join(vars_part)
    if c == GR_ONE:
        return body
    if c == GaussRational(-1):
        return f"-{body}"
    return f"{_format_gauss(c, product_context=True)}*{body}"


def _format_poly(poly, names):
    if poly.is_zero():
        return "0"
    monos = sorted(poly.terms, key=poly._mkey, reverse=True)
    parts = []
    for k, m in enumerate(monos):
        s = _format_monomial(poly.terms[m], m, names)
        if k == 0:
            parts.append(s)
        elif s.startswith("-"):
            parts.append(f" - {s[1:]}")
        else:
            parts.append(f" + {s}")
    return "".join(parts)


def _scalar_term_factors(params, key, frac):
    """Factor strings for one scalar term (joined with '*')."""
    odd, nil = key
    names = params.even_free
    factors = []
    num_str = _format_poly(frac.num, names)
    den_one = frac.den.is_const() and frac.den.const_value() == GR_ONE
    num_single = len(frac.num.terms) == 1
    trivial_one = num_single and num_str == "1"
    if den_one:
        if not trivial_one or (not any(nil) and not odd):
            factors.append(num_str if num_single else f"({num_str})")
    else:
        den_str = _format_poly(frac.den, names)
        num_part = num_str if num_single else f"({num_str})"
        factors.append(f"{num_part}/({den_str})")
    for j, e in enumerate(nil):
        name = params.nil_names[j]
        if e == 1:
            factors.append(name)
        elif e > 1:
            factors.append(f"{name}^{e}")
    factors.extend(odd)
    return factors


def format_scalar(s: Scalar) -> str:
    """Deterministic, parseable rendering of a scalar."""
    if s.is_zero():
        return "0"
    keys = sorted(s.terms, key=lambda k: (k[1], k[0]))
    parts = []
    for k, key in enumerate(keys):
        term = "*".join(_scalar_term_factors(s.params, key, s.terms[key]))
        if k == 0:
            parts.append(term)
        elif term.startswith("-"):
            parts.append(f" - {term[1:]}")
        else:
            parts.append(f" + {term}")
    return "".join(parts)


def _format_word(word):
    out = []
    for g in word:
        if out and out[-1][0] == g:
            out[-1][1] += 1
        else:
            out.append([g, 1])
    return "*".join(g if e == 1 else f"{g}^{e}" for g, e in out)


def _coeff_prefix(c: Scalar) -> str:
    """Coefficient rendering for a nonempty word; '' means coefficient 1."""
    if c == Scalar.one(c.params):
        return ""
    if c == Scalar.integer(c.params, -1):
        return "-"
    body = format_scalar(c)
    if len(c.terms) > 1:
        return f"({body})*"
    return f"{body}*"


def format_element(e: Element) -> str:
    """Deterministic, parseable rendering of an element."""
    if e.is_zero():
        return "0"
    alg = e.algebra
    order = {g: i for i, g in enumerate(alg.generator_names())}
    words = sorted(
        e.terms, key=lambda w: (-len(w), tuple(order[g] for g in w))
    )
    parts = []
    for k, w in enumerate(words):
        c = e.terms[w]
        if not w:
            term = format_scalar(c)
            if len(c.terms) > 1 and k > 0:
                term = f"({term})"
        else:
            term = f"{_coeff_prefix(c)}{_format_word(w)}"
        if k == 0:
            parts.append(term)
        elif term.startswith("-"):
            parts.append(f" - {term[1:]}")
        else:
            parts.append(f" + {term}")
    return "".join(parts)
