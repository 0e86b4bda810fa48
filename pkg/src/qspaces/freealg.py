"""Free associative superalgebra over the coefficient superring.

Words are tuples of generator names; an Element maps words to Scalar
coefficients kept on the left of the word.  The only sign rule lives in
multiply: an odd coefficient moving past an odd word picks up -1.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import AlgebraMismatch, ParityViolation
from .scalars import EVEN, ODD, ParameterSet, Scalar


@dataclass(frozen=True)
class Generator:
    name: str
    parity: int = EVEN

    def __post_init__(self):
        if self.parity not in (EVEN, ODD):
            raise ValueError("parity must be 0 (even) or 1 (odd)")


class FreeAlgebra:
    """Generator list plus parameter set; equality is structural."""

    def __init__(self, params: ParameterSet, generators):
        gens = tuple(
            g if isinstance(g, Generator) else Generator(*g) for g in generators
        )
        names = [g.name for g in gens]
        if len(set(names)) != len(names):
            raise ValueError("generator names must be unique")
        clash = set(names) & set(params.all_names())
        if clash:
            raise ValueError(f"generator names shadow parameters: {sorted(clash)}")
        self.params = params
        self.generators = gens
        self._parity = {g.name: g.parity for g in gens}
        self._index = {g.name: i for i, g in enumerate(gens)}

    def __eq__(self, other):
        if not isinstance(other, FreeAlgebra):
            return NotImplemented
        return self.params == other.params and self.generators == other.generators

    def __hash__(self):
        return hash((self.params, self.generators))

    def generator_names(self):
        return tuple(g.name for g in self.generators)

    def parity_of(self, name):
        return self._parity[name]

    def index_of(self, name):
        return self._index[name]

    def word_parity(self, word):
        return sum(self._parity[g] for g in word) % 2

    # -- element constructors ------------------------------------------------

    def zero(self):
        return Element(self, {})

    def one(self):
        return Element(self, {(): Scalar.one(self.params)})

    def gen(self, name):
        if name not in self._parity:
            raise KeyError(f"unknown generator {name!r}")
        return Element(self, {(name,): Scalar.one(self.params)})

    def scalar(self, s: Scalar):
        if s.params != self.params:
            raise ValueError("scalar over a foreign parameter set")
        return Element(self, {(): s} if not s.is_zero() else {})

    def param(self, name):
        return self.scalar(Scalar.parameter(self.params, name))

    def word(self, names, coeff=None):
        word = tuple(names)
        for g in word:
            if g not in self._parity:
                raise KeyError(f"unknown generator {g!r}")
        c = coeff if coeff is not None else Scalar.one(self.params)
        return Element(self, {word: c} if not c.is_zero() else {})


class Element:
    """Finite K-linear combination of words in the algebra's generators."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra, terms):
        self.algebra = algebra
        self.terms = {w: c for w, c in terms.items() if not c.is_zero()}

    def _check(self, other):
        if not isinstance(other, Element):
            raise TypeError("expected an Element")
        if self.algebra != other.algebra:
            raise AlgebraMismatch("elements live in different algebras")

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self.algebra == other.algebra and self.terms == other.terms

    def __hash__(self):
        return hash((self.algebra, tuple(sorted(self.terms.items()))))

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            s = out.get(w)
            s = c if s is None else s + c
            if s.is_zero():
                out.pop(w, None)
            else:
                out[w] = s
        return Element(self.algebra, out)

    def __neg__(self):
        return Element(self.algebra, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        """Koszul-signed bilinear product: (c w)(c' w') = (-1)^{p(c')p(w)} c c' ww'."""
        if isinstance(other, Scalar):
            other = self.algebra.scalar(other)
        self._check(other)
        alg = self.algebra
        out = {}
        for w1, c1 in self.terms.items():
            pw1 = alg.word_parity(w1)
            for w2, c2 in other.terms.items():
                if pw1:
                    c2e = c2.even_part()
                    c2o = c2.odd_part()
                    c = c1 * (c2e - c2o)
                else:
                    c = c1 * c2
                if c.is_zero():
                    continue
                w = w1 + w2
                s = out.get(w)
                s = c if s is None else s + c
                if s.is_zero():
                    out.pop(w, None)
                else:
                    out[w] = s
        return Element(alg, out)

    def __rmul__(self, other):
        if isinstance(other, Scalar):
            return self.algebra.scalar(other) * self
        return NotImplemented

    def scale(self, s: Scalar):
        """Left multiplication by a scalar."""
        return self.algebra.scalar(s) * self

    def degree(self):
        return max((len(w) for w in self.terms), default=-1)

    def degree_terms(self, d):
        """The degree-d homogeneous component."""
        if d < 0:
            raise ValueError("degree must be non-negative")
        return Element(self.algebra, {w: c for w, c in self.terms.items() if len(w) == d})

    def parity(self):
        """Parity of a homogeneous element (coefficient plus word); None if mixed."""
        ps = set()
        for w, c in self.terms.items():
            pw = self.algebra.word_parity(w)
            pc = c.parity()
            if pc is None:
                return None
            ps.add((pw + pc) % 2)
        if not ps:
            return EVEN
        return ps.pop() if len(ps) == 1 else None

    def is_scalar(self):
        return all(w == () for w in self.terms)

    def scalar_value(self):
        return self.terms.get((), Scalar.zero(self.algebra.params))

    def substitute_generators(self, images, param_map=None, target=None):
        """Apply the algebra morphism sending each generator to its image.

        images maps generator names to Elements of the target algebra
        (affine: degree <= 1 plus constants); any generator not listed maps
        to its namesake in the target.  param_map is applied to every
        coefficient first.
        """
        alg = self.algebra
        if target is None:
            some = next(iter(images.values()), None)
            target = some.algebra if some is not None else alg
        imgs = {}
        for g in alg.generators:
            img = images.get(g.name)
            if img is None:
                img = target.gen(g.name)
            if img.algebra != target:
                raise AlgebraMismatch(f"image of {g.name!r} lives in a foreign algebra")
            p = img.parity()
            if not img.is_zero() and p != g.parity:
                raise ParityViolation(
                    f"image of {g.name!r} has parity {p}, expected {g.parity}"
                )
            imgs[g.name] = img
        out = target.zero()
        pm = param_map or {}
        for w, c in self.terms.items():
            cc = c.substitute_params(pm, target=target.params)
            acc = target.scalar(cc)
            for g in w:
                acc = acc * imgs[g]
                if acc.is_zero():
                    break
            out = out + acc
        return out

    def __repr__(self):
        from .expressions import format_element

        return f"<{format_element(self)}>"


def multiply(a, b):
    """Spec surface for the product."""
    return a * b


def substitute_generators(a, images, param_map=None, target=None):
    """Spec surface for morphism application."""
    return a.substitute_generators(images, param_map=param_map, target=target)


def degree_terms(a, d):
    """Spec surface for homogeneous components."""
    return a.degree_terms(d)
