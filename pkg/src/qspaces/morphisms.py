"""Basis changes, tensor-product algebras and coaction verification."""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import AlgebraMismatch, ParityViolation, SingularTransform
from .freealg import Element, FreeAlgebra, Generator
from .presentations import Presentation, confluence_check, orient_relations
from .reports import FAIL, PASS, CheckReport
from .scalars import Scalar
from .tensor import SMatrix


def transport_element(e: Element, target: FreeAlgebra, rename=None) -> Element:
    """Rebuild an element inside a larger algebra (optionally renaming)."""
    ren = rename or {}
    out = {}
    for w, c in e.terms.items():
        word = tuple(ren.get(g, g) for g in w)
        out[word] = c.retag(target.params)
    return Element(target, out)


def presentation_with_params(p: Presentation, params) -> Presentation:
    """The same presentation over an extended parameter set."""
    alg = FreeAlgebra(params, p.algebra.generators)
    rels = [transport_element(r, alg) for r in p.relations]
    return Presentation(p.name, alg, p.precedence, rels, p.notes)


class BasisMap:
    """Generator images of degree <= 1 with optional parameter substitution."""

    def __init__(self, source, target, images, param_subst=None,
                 inverse_param_subst=None, projection=False):
        self.source = source
        self.target = target
        self.images = dict(images)
        self.param_subst = dict(param_subst or {})
        self.inverse_param_subst = dict(inverse_param_subst or {})
        self.projection = projection
        for gname, img in self.images.items():
            if img.algebra != target:
                raise AlgebraMismatch(f"image of {gname!r} not in the target algebra")
            if img.degree() > 1:
                raise ValueError("basis map images must have degree <= 1")
            p = img.parity()
            if not img.is_zero() and p != source.parity_of(gname):
                raise ParityViolation(f"image of {gname!r} changes parity")

    def linear_matrix(self) -> SMatrix:
        """Coefficient matrix A with image(x_i) = sum_j A_ij y_j + const."""
        src = self.source.generator_names()
        tgt = self.target.generator_names()
        zero = Scalar.zero(self.target.params)
        rows = []
        for gname in src:
            img = self.images.get(gname)
            if img is None:
                img = self.target.gen(gname)
            row = [img.terms.get((t,), zero) for t in tgt]
            rows.append(row)
        return SMatrix(self.target.params, rows)

    def check_invertible(self):
        if self.projection:
            return
        if len(self.source.generators) != len(self.target.generators):
            raise SingularTransform("source and target ranks differ")
        try:
            self.linear_matrix().inverse()
        except SingularTransform:
            raise SingularTransform("basis map has a singular linear part")

    def inverse(self) -> "BasisMap":
        """Inverse of a purely linear map (constants unsupported).

        The inverse parameter substitution is applied to the inverted
        matrix entries: with forward images A under sigma and backward
        under tau, the roundtrip needs tau(A)^-1 = tau(A^-1).
        """
        for img in self.images.values():
            if any(w == () for w in img.terms):
                raise SingularTransform("cannot invert an affine map with constants")
        a = self.linear_matrix().inverse()
        src = self.source.generator_names()
        tgt = self.target.generator_names()
        images = {}
        for i, t in enumerate(tgt):
            acc = self.source.zero()
            for j, s in enumerate(src):
                c = a.entries[i][j]
                if self.inverse_param_subst:
                    c = c.substitute_params(self.inverse_param_subst)
                if not c.is_zero():
                    acc = acc + Element(self.source, {(s,): c})
            images[t] = acc
        return BasisMap(
            self.target,
            self.source,
            images,
            param_subst=self.inverse_param_subst,
            inverse_param_subst=self.param_subst,
        )

    def apply(self, e: Element) -> Element:
        pm = self.param_subst
        return e.substitute_generators(self.images, param_map=pm, target=self.target)


def transform_presentation(p: Presentation, m: BasisMap, precedence=None, name=None) -> Presentation:
    """Push a presentation through an invertible change of basis."""
    if p.algebra != m.source:
        raise AlgebraMismatch("basis map source does not match the presentation")
    m.check_invertible()
    prec = tuple(precedence) if precedence else m.target.generator_names()
    target_name = name or f"{p.name}~"
    rels = []
    for r in p.relations:
        img = m.apply(r)
        if not img.is_zero():
            rels.append(img)
    out = Presentation(target_name, m.target, prec, rels)
    probe = out
    monic = probe.monic_relations()
    return Presentation(target_name, m.target, prec, monic, p.notes)


def induced_group_transform(g: Presentation, d: SMatrix, names=None,
                            precedence=None, name=None) -> Presentation:
    """Similarity transform T = D U D^-1 on a generator-matrix presentation."""
    old = g.algebra.generator_names()
    n = d.rows
    if d.cols != n or len(old) != n * n:
        raise SingularTransform("generator grid and D have incompatible sizes")
    dinv = d.inverse()
    if names is None:
        names = [[f"u{i + 1}{j + 1}" for j in range(n)] for i in range(n)]
    flat_new = [names[i][j] for i in range(n) for j in range(n)]
    gens = []
    for i in range(n):
        for j in range(n):
            gens.append(Generator(names[i][j], g.algebra.parity_of(old[i * n + j])))
    target = FreeAlgebra(g.algebra.params, gens)
    images = {}
    for i in range(n):
        for j in range(n):
            acc = target.zero()
            for k in range(n):
                c1 = d.entries[i][k]
                if c1.is_zero():
                    continue
                for l in range(n):
                    c = c1 * dinv.entries[l][j]
                    if c.is_zero():
                        continue
                    acc = acc + Element(target, {(names[k][l],): c})
            images[old[i * n + j]] = acc
    prec = tuple(precedence) if precedence else tuple(flat_new)
    rels = []
    for r in g.relations:
        img = r.substitute_generators(images, target=target)
        if not img.is_zero():
            rels.append(img)
    out = Presentation(name or f"{g.name}~cart", target, prec, rels)
    return out.with_relations(out.monic_relations())


def tensor_product_algebra(g: Presentation, s: Presentation, cross_sign="koszul",
                           name=None) -> Presentation:
    """Free product of group and space modulo cross commutation rules.

    Space generators rank above group generators so cross rules push group
    letters left, matching the A (x) C reading of coaction values.
    """
    if cross_sign not in ("koszul", "plain"):
        raise ValueError(f"unknown cross_sign {cross_sign!r}")
    if g.algebra.params != s.algebra.params:
        raise AlgebraMismatch("tensor factors over different parameter sets")
    gnames = set(g.algebra.generator_names())
    rename = {}
    for x in s.algebra.generator_names():
        if x in gnames:
            rename[x] = f"{x}_sp"
    gens = list(g.algebra.generators) + [
        Generator(rename.get(x.name, x.name), x.parity) for x in s.algebra.generators
    ]
    alg = FreeAlgebra(g.algebra.params, gens)
    rels = [transport_element(r, alg) for r in g.relations]
    rels += [transport_element(r, alg, rename) for r in s.relations]
    one = Scalar.one(alg.params)
    for x in s.algebra.generators:
        xn = rename.get(x.name, x.name)
        for t in g.algebra.generators:
            sign = -1 if (cross_sign == "koszul" and x.parity and t.parity) else 1
            cross = Element(alg, {(xn, t.name): one}) - Element(
                alg, {(t.name, xn): Scalar.integer(alg.params, sign)}
            )
            rels.append(cross)
    prec = tuple(rename.get(x, x) for x in s.precedence) + g.precedence
    return Presentation(name or f"{g.name}*{s.name}", alg, prec, rels)


@dataclass
class CoactionSpec:
    """Coaction data: delta(x_i) = sum_k M[i][k] (x) x_k."""

    group: Presentation
    space: Presentation
    matrix: list  # rows over space generators; entries Elements of the group algebra
    cross_sign: str = "koszul"
    label: str = "coaction"
    notes: tuple = ()

    def validate(self):
        xs = self.space.algebra.generator_names()
        if len(self.matrix) != len(xs):
            raise ValueError("coaction matrix must be square over the space generators")
        for i, row in enumerate(self.matrix):
            if len(row) != len(xs):
                raise ValueError("coaction matrix must be square over the space generators")
            for k, entry in enumerate(row):
                if entry.algebra != self.group.algebra:
                    raise AlgebraMismatch("coaction entries must be group elements")
                if entry.degree() > 1:
                    raise ValueError("coaction entries must have degree <= 1")
                want = (
                    self.space.algebra.parity_of(xs[i])
                    + self.space.algebra.parity_of(xs[k])
                ) % 2
                got = entry.parity()
                if not entry.is_zero() and got != want:
                    raise ParityViolation(
                        f"coaction entry ({i},{k}) has parity {got}, expected {want}"
                    )


def coaction_check(spec: CoactionSpec, degree=3) -> CheckReport:
    """Verify the coaction respects every space relation.

    Each space relation is pushed through delta inside the tensor-product
    algebra and reduced to normal form; the check passes when all images
    vanish.  Requires (and first audits) confluence of the tensor algebra.
    """
    from .expressions import format_element

    spec.validate()
    ta = tensor_product_algebra(spec.group, spec.space, spec.cross_sign)
    try:
        rs = orient_relations(ta)
    except Exception as exc:
        return CheckReport(
            kind="coaction",
            objects=(spec.label,),
            result=FAIL,
            residuals=(("orientation", str(exc)),),
            notes=spec.notes,
        )
    conf = confluence_check(rs, degree)
    if not conf.passed:
        return CheckReport(
            kind="coaction",
            objects=(spec.label,),
            result=FAIL,
            residuals=conf.residuals[:6],
            notes=spec.notes + ("tensor algebra not confluent",),
        )
    xs = spec.space.algebra.generator_names()
    gnames = set(spec.group.algebra.generator_names())
    rename = {x: f"{x}_sp" for x in xs if x in gnames}
    images = {}
    for i, x in enumerate(xs):
        acc = ta.algebra.zero()
        for k, xk in enumerate(xs):
            entry = spec.matrix[i][k]
            if entry.is_zero():
                continue
            lifted = transport_element(entry, ta.algebra)
            acc = acc + lifted * ta.algebra.gen(rename.get(xk, xk))
        images[x] = acc
    residuals = []
    for rel in spec.space.relations:
        lifted = transport_element(rel, ta.algebra, rename)
        image = lifted.substitute_generators(
            {rename.get(x, x): img for x, img in images.items()}, target=ta.algebra
        )
        nf = rs.normal_form(image)
        if not nf.is_zero():
            residuals.append((format_element(rel), format_element(nf)))
    if residuals:
        return CheckReport(
            kind="coaction",
            objects=(spec.label,),
            result=FAIL,
            residuals=tuple(residuals),
            notes=spec.notes,
        )
    return CheckReport(kind="coaction", objects=(spec.label,), result=PASS, notes=spec.notes)
