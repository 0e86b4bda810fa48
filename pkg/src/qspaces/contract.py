"""Contractions: generator rescaling, leading-order extraction, limits."""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import NegativeValuation
from .freealg import Element, FreeAlgebra
from .morphisms import presentation_with_params, transport_element
from .presentations import (
    Presentation,
    confluence_check,
    hilbert_dims,
    orient_relations,
)
from .reports import FAIL, PASS, CheckReport
from .scalars import Scalar

LEADING_ORDER = "leading_order"
NILPOTENT = "nilpotent"


@dataclass
class ContractionScheme:
    """Generator weights plus parameter substitutions driving a contraction.

    eps names an even free parameter unused by the input presentation;
    every substitution image q(eps) must restore the identity at eps = 0.
    """

    eps: str
    weights: dict
    param_subst: dict = field(default_factory=dict)
    mode: str = LEADING_ORDER

    def __post_init__(self):
        if self.mode not in (LEADING_ORDER, NILPOTENT):
            raise ValueError(f"unknown mode {self.mode!r}")


@dataclass
class ContractionReport:
    """Per-relation valuations and dropped-order notes, plus a flatness cell."""

    rows: tuple = ()  # of (input, min_valuation, output, dropped_note)
    flatness: CheckReport = None
    notes: tuple = ()

    def summary(self):
        lines = [f"  [{v:+d}] {src}  =>  {out}{note}" for src, v, out, note in self.rows]
        if self.flatness is not None:
            lines.append("  " + self.flatness.summary())
        return "\n".join(lines)


def _validate_scheme(p: Presentation, s: ContractionScheme):
    params = p.algebra.params
    if params.kind_of(s.eps) != "free":
        raise ValueError(f"{s.eps!r} must be an even free parameter")
    for rel in p.relations:
        for c in rel.terms.values():
            if c.uses_param(s.eps):
                raise ValueError(f"{s.eps!r} already occurs in the input presentation")
    for g in s.weights:
        if g not in p.algebra.generator_names():
            raise KeyError(f"unknown generator {g!r} in weights")
        if s.weights[g] < 0:
            raise ValueError("weights must be non-negative")
    for pname, image in s.param_subst.items():
        probe = image.substitute_params({s.eps: Scalar.zero(image.params)})
        if probe != Scalar.one(image.params):
            raise ValueError(f"substitution for {pname!r} must equal 1 at {s.eps}=0")


def _scaled_relation(rel, alg, scheme, eps_scalar):
    images = {}
    for g in alg.generators:
        w = scheme.weights.get(g.name, 0)
        coeff = eps_scalar ** w if w else None
        if coeff is None:
            continue
        images[g.name] = Element(alg, {(g.name,): coeff})
    return rel.substitute_generators(images, param_map=scheme.param_subst, target=alg)


def contract(p: Presentation, s: ContractionScheme, name=None, d_flat=4):
    """Rescale generators, divide by the leading eps power, take eps -> 0.

    Returns the contracted presentation and a report with per-relation
    leading orders; flatness versus the input is attempted at degree
    d_flat and recorded (skipped with a note when either side fails to be
    confluent, as happens for Cartesian-basis inputs).
    """
    _validate_scheme(p, s)
    alg = p.algebra
    eps_scalar = Scalar.parameter(alg.params, s.eps)
    if s.mode == NILPOTENT:
        return _contract_nilpotent(p, s, name, d_flat)
    from .expressions import format_element

    def shift_min(e):
        vals = [c._valuation(s.eps) for c in e.terms.values()]
        m = min(vals)
        shifted = Element(
            alg, {w: c.divide_by_power(s.eps, m) for w, c in e.terms.items()}
        )
        return m, shifted

    def residue(e):
        return Element(alg, {w: c.limit_at_zero(s.eps) for w, c in e.terms.items()})

    rows = []
    scaled_list = []
    for rel in p.relations:
        scaled = _scaled_relation(rel, alg, s, eps_scalar)
        if scaled.is_zero():
            rows.append((format_element(rel), 0, "0", " (vanished)"))
            continue
        m, shifted = shift_min(scaled)
        naive = residue(shifted)
        rows.append((format_element(rel), m, format_element(naive), ""))
        scaled_list.append(shifted)
    # flat-limit saturation: when leading terms of the scaled relations are
    # dependent at eps = 0, the dependency lives one order deeper and must be
    # divided back down, or the contracted ideal loses rank
    pivots = {}
    ordered = []
    combinations = 0
    for work in scaled_list:
        current = work
        guard = 0
        while current is not None and not current.is_zero():
            guard += 1
            if guard > 200:
                raise RuntimeError("flat-limit saturation did not stabilize")
            _, current = shift_min(current)
            res = residue(current)
            lead, c = p.leading(res)
            piv = pivots.get(lead)
            if piv is not None:
                coef = current.terms[lead] / piv.terms[lead]
                current = current - Element(alg, {(): coef}) * piv
                if not current.is_zero():
                    combinations += 1
                continue
            if c.is_unit():
                current = current.scale(c.inverse())
                pivots[lead] = current
                ordered.append(current)
            else:
                ordered.append(current)
            current = None
    out_rels = [residue(e) for e in ordered]
    notes = []
    if combinations:
        notes.append(
            f"flat-limit saturation folded {combinations} subleading "
            f"combination(s) into the result"
        )
    if not out_rels:
        notes.append("empty result: every relation contracted to zero")
    out = Presentation(name or f"{p.name}>>contracted", alg, p.precedence, out_rels)
    flat = None
    try:
        flat = flatness_check(p, out, d_flat)
    except Exception as exc:
        notes.append(f"flatness skipped: {exc}")
    report = ContractionReport(rows=tuple(rows), flatness=flat, notes=tuple(notes))
    return out, report


def _nil_bound(p, s):
    top = 0
    for rel in p.relations:
        for w in rel.terms:
            top = max(top, sum(s.weights.get(g, 0) for g in w))
    return 2 * top + 4


def _contract_nilpotent(p, s, name, d_flat):
    """Cross-check mode: substitute a truncated nilpotent for eps.

    The truncation order is raised beyond the paper's literal order 2: the
    leading coefficient of a relation of total weight w sits at order w,
    which order-2 truncation would annihilate.
    """
    from .expressions import format_element

    nil_name = "nileps"
    order = _nil_bound(p, s)
    params = p.algebra.params.with_extra(even_nilpotent=((nil_name, order),))
    big = presentation_with_params(p, params)
    alg = big.algebra
    nil = Scalar.parameter(params, nil_name)
    subst = {
        k: v.retag(params).substitute_params({s.eps: nil})
        for k, v in s.param_subst.items()
    }
    scheme = ContractionScheme(s.eps, s.weights, {}, mode=LEADING_ORDER)
    j = params.nil_names.index(nil_name)
    rows = []
    out_rels = []
    for rel, orig in zip(big.relations, p.relations):
        images = {
            g: Element(alg, {(g,): nil ** w})
            for g, w in s.weights.items()
            if w
        }
        scaled = rel.substitute_generators(images, param_map=subst, target=alg)
        if scaled.is_zero():
            rows.append((format_element(orig), 0, "0", " (vanished)"))
            continue
        m = min(
            nilkey[j]
            for c in scaled.terms.values()
            for (_, nilkey) in c.terms
        )
        extracted = {}
        for w, c in scaled.terms.items():
            picked = {
                (odd, nk[:j] + (0,) + nk[j + 1:]): f
                for (odd, nk), f in c.terms.items()
                if nk[j] == m
            }
            sc = Scalar(params, picked)
            if not sc.is_zero():
                extracted[w] = sc
        limited = Element(alg, extracted)
        back = transport_element(limited, p.algebra)
        rows.append(
            (format_element(orig), m, format_element(back) if not back.is_zero() else "0", "")
        )
        if not back.is_zero():
            out_rels.append(back)
    notes = (f"nilpotent mode: truncation order {order}",)
    out = Presentation(name or f"{p.name}>>contracted", p.algebra, p.precedence, out_rels)
    flat = None
    try:
        flat = flatness_check(p, out, d_flat)
    except Exception as exc:
        notes = notes + (f"flatness skipped: {exc}",)
    return out, ContractionReport(rows=tuple(rows), flatness=flat, notes=notes)


def parameter_limit(p: Presentation, param: str, name=None) -> Presentation:
    """Set an even free parameter to zero in every relation."""
    out_rels = []
    for rel in p.relations:
        terms = {}
        for w, c in rel.terms.items():
            c0 = c.limit_at_zero(param)
            if not c0.is_zero():
                terms[w] = c0
        e = Element(p.algebra, terms)
        if not e.is_zero():
            out_rels.append(e)
    return Presentation(name or f"{p.name}|{param}=0", p.algebra, p.precedence, out_rels)


def flatness_check(before: Presentation, after: Presentation, d_max: int,
                   label=None) -> CheckReport:
    """Hilbert dimensions agree degree-by-degree through the contraction."""
    name = label or f"{before.name}->{after.name}"
    dims = []
    for pres in (before, after):
        rs = orient_relations(pres)
        conf = confluence_check(rs, d_max)
        if not conf.passed:
            raise ValueError(f"{pres.name} is not confluent to degree {d_max}")
        dims.append(hilbert_dims(rs, d_max))
    if dims[0] == dims[1]:
        return CheckReport(
            kind="flatness",
            objects=(name, f"degree<={d_max}"),
            result=PASS,
            notes=(f"dims {list(dims[0].dims)}",),
        )
    return CheckReport(
        kind="flatness",
        objects=(name, f"degree<={d_max}"),
        result=FAIL,
        residuals=(("dims", f"{list(dims[0].dims)} != {list(dims[1].dims)}"),),
    )
