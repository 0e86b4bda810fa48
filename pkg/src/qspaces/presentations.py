"""Finitely presented graded algebras via degree-bounded rewriting.

Relations are oriented into rewrite rules along a deglex order (degree
first, then letters by a user precedence).  Confluence is audited with the
diamond lemma on overlap ambiguities up to a degree bound; for quadratic
relation sets a bound of 3 already resolves every overlap, so normal forms
are then canonical in all degrees.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import (
    AlgebraMismatch,
    GeneratorMismatch,
    NonUnitLeadingCoefficient,
    ResidualDependence,
)
from .freealg import Element, FreeAlgebra, Generator
from .reports import FAIL, PASS, CheckReport
from .scalars import Scalar


class Presentation:
    """Named generator list with precedence and a relation set."""

    def __init__(self, name, algebra, precedence, relations, notes=()):
        if sorted(precedence) != sorted(algebra.generator_names()):
            raise ValueError("precedence must be a permutation of the generators")
        rels = []
        for r in relations:
            if r.algebra != algebra:
                raise AlgebraMismatch(f"relation of {name!r} in a foreign algebra")
            if r.is_zero():
                continue
            if r not in rels:
                rels.append(r)
        self.name = name
        self.algebra = algebra
        self.precedence = tuple(precedence)  # high -> low
        self.relations = tuple(rels)
        self.notes = tuple(notes)
        rank = {}
        n = len(self.precedence)
        for pos, g in enumerate(self.precedence):
            rank[g] = n - pos
        self._rank = rank

    def word_key(self, word):
        return (len(word), tuple(self._rank[g] for g in word))

    def leading(self, element):
        """Deglex-leading (word, coefficient) of a nonzero element."""
        w = max(element.terms, key=self.word_key)
        return w, element.terms[w]

    def with_name(self, name, extra_notes=()):
        return Presentation(
            name, self.algebra, self.precedence, self.relations, self.notes + tuple(extra_notes)
        )

    def with_relations(self, relations, extra_notes=()):
        return Presentation(
            self.name, self.algebra, self.precedence, relations, self.notes + tuple(extra_notes)
        )

    def monic_relations(self):
        """Relations scaled to leading coefficient 1 (when the leading
        coefficient is a unit), duplicates dropped."""
        out = []
        for r in self.relations:
            _, c = self.leading(r)
            if c.is_unit():
                r = r.scale(c.inverse())
            if r not in out:
                out.append(r)
        return tuple(out)

    def __repr__(self):
        return f"Presentation({self.name!r}, {len(self.relations)} relations)"


@dataclass(frozen=True)
class DimTable:
    dims: tuple

    def __post_init__(self):
        if self.dims and self.dims[0] != 1:
            raise ValueError("degree-0 dimension must be 1")

    def __iter__(self):
        return iter(self.dims)


class RewriteSystem:
    """Inter-reduced oriented rules leading-word -> lower element."""

    def __init__(self, presentation, rules):
        self.presentation = presentation
        self.rules = dict(rules)
        self._order = sorted(
            self.rules, key=lambda w: (-len(w), self.presentation.word_key(w))
        )
        self._maxlen = max((len(w) for w in self.rules), default=0)

    @classmethod
    def from_rules(cls, presentation, pairs):
        """Build directly from (lhs word, rhs element) pairs, unreduced.

        Used for deliberately inconsistent systems in tests; duplicated
        leading words are kept as separate inclusion ambiguities.
        """
        sys_rules = []
        for lhs, rhs in pairs:
            sys_rules.append((tuple(lhs), rhs))
        obj = cls.__new__(cls)
        obj.presentation = presentation
        obj.rules = {}
        obj._pairs = list(sys_rules)
        for lhs, rhs in sys_rules:
            obj.rules.setdefault(lhs, rhs)
        obj._order = sorted(
            {lhs for lhs, _ in sys_rules},
            key=lambda w: (-len(w), presentation.word_key(w)),
        )
        obj._maxlen = max((len(w) for w, _ in sys_rules), default=0)
        return obj

    def rule_pairs(self):
        return getattr(self, "_pairs", list(self.rules.items()))

    def find_redex(self, word):
        """Leftmost position and matching rule lhs; longest match wins."""
        n = len(word)
        for start in range(n):
            for lhs in self._order:
                L = len(lhs)
                if start + L <= n and word[start:start + L] == lhs:
                    return start, lhs
        return None

    def reduce_once(self, element, word, start, lhs):
        alg = self.presentation.algebra
        c = element.terms[word]
        prefix = Element(alg, {word[:start]: c})
        suffix = alg.word(word[start + len(lhs):])
        replaced = prefix * self.rules[lhs] * suffix
        return element - Element(alg, {word: c}) + replaced

    def normal_form(self, element):
        guard = 0
        while True:
            guard += 1
            if guard > 200000:
                raise RuntimeError("normal form did not stabilize")
            best = None
            for w in element.terms:
                hit = self.find_redex(w)
                if hit is None:
                    continue
                k = self.presentation.word_key(w)
                if best is None or k > best[0]:
                    best = (k, w, hit)
            if best is None:
                return element
            _, w, (start, lhs) = best
            element = self.reduce_once(element, w, start, lhs)

    def is_normal_word(self, word):
        return self.find_redex(word) is None


def orient_relations(p: Presentation) -> RewriteSystem:
    """Orient and inter-reduce the relations into a rewrite system.

    Relations whose current leading coefficient is not a unit are deferred:
    rules extracted from the other relations may reduce away the offending
    term (nilpotent coefficients vanish against their own squares).  Only
    when no deferred relation can make progress does orientation fail.
    """
    queue = list(p.relations)
    rules = {}

    def rules_system():
        return RewriteSystem(p, rules)

    guard = 0
    stall = 0
    while queue:
        guard += 1
        if guard > 10000:
            raise RuntimeError("orientation did not stabilize")
        elem = queue.pop(0)
        if rules:
            elem = rules_system().normal_form(elem)
        if elem.is_zero():
            stall = 0
            continue
        lhs, c = p.leading(elem)
        if not lhs:
            raise NonUnitLeadingCoefficient(
                f"presentation {p.name!r} contains a nonzero constant relation"
            )
        if not c.is_unit():
            stall += 1
            if stall > len(queue) + 1:
                raise NonUnitLeadingCoefficient(
                    f"relation with leading word {'*'.join(lhs)} has non-unit "
                    f"leading coefficient; try another precedence"
                )
            queue.append(elem)
            continue
        stall = 0
        monic = elem.scale(c.inverse())
        one = Scalar.one(p.algebra.params)
        rhs = Element(p.algebra, {lhs: one}) - monic
        # retire any existing rule the new one can reduce
        probe = RewriteSystem(p, {lhs: rhs})
        stale = [
            other_lhs
            for other_lhs, other_rhs in rules.items()
            if _contains(other_lhs, lhs) or probe.normal_form(other_rhs) != other_rhs
        ]
        for other_lhs in stale:
            other_rhs = rules.pop(other_lhs)
            queue.append(Element(p.algebra, {other_lhs: one}) - other_rhs)
        rules[lhs] = rhs
    return RewriteSystem(p, rules)


def _contains(word, sub):
    n, m = len(word), len(sub)
    return any(word[s:s + m] == sub for s in range(n - m + 1))


def normal_form(rs: RewriteSystem, a: Element) -> Element:
    """Reduce until no term contains a rule's leading word."""
    return rs.normal_form(a)


def _overlap_words(l1, l2):
    """Proper overlaps: suffix of l1 = prefix of l2 (shift > 0)."""
    out = []
    for k in range(1, min(len(l1), len(l2))):
        if l1[len(l1) - k:] == l2[:k]:
            out.append(l1 + l2[k:])
    return out


def confluence_check(rs: RewriteSystem, d_max: int, label=None) -> CheckReport:
    """Resolve all overlap/inclusion ambiguities up to total degree d_max."""
    from .expressions import format_element

    p = rs.presentation
    name = label or p.name
    alg = p.algebra
    one = Scalar.one(alg.params)
    failures = []
    pairs = rs.rule_pairs()
    for (l1, r1), (l2, r2) in itertools.product(pairs, repeat=2):
        ambiguities = []
        for w in _overlap_words(l1, l2):
            if len(w) <= d_max:
                # reduce via rule1 at position 0 / rule2 at the overlap position
                pos2 = len(w) - len(l2)
                ambiguities.append((w, 0, l1, r1, pos2, l2, r2))
        if (l1, r1) != (l2, r2) and _contains(l1, l2):
            pos2 = next(s for s in range(len(l1)) if l1[s:s + len(l2)] == l2)
            if len(l1) <= d_max:
                ambiguities.append((l1, 0, l1, r1, pos2, l2, r2))
        for w, pos1, la, ra, pos2, lb, rb in ambiguities:
            base = Element(alg, {w: one})
            via1 = rs.normal_form(_replace(base, w, pos1, la, ra))
            via2 = rs.normal_form(_replace(base, w, pos2, lb, rb))
            s = via1 - via2
            if not s.is_zero():
                failures.append(("*".join(w), format_element(s)))
    seen = set()
    residuals = []
    for loc, expr in sorted(failures):
        if (loc, expr) not in seen:
            seen.add((loc, expr))
            residuals.append((loc, expr))
    if residuals:
        return CheckReport(
            kind="confluence",
            objects=(name, f"degree<={d_max}"),
            result=FAIL,
            residuals=tuple(residuals),
        )
    return CheckReport(kind="confluence", objects=(name, f"degree<={d_max}"), result=PASS)


def _replace(element, word, start, lhs, rhs):
    alg = element.algebra
    c = element.terms[word]
    prefix = Element(alg, {word[:start]: c})
    suffix = alg.word(word[start + len(lhs):])
    return element - Element(alg, {word: c}) + prefix * rhs * suffix


def hilbert_dims(rs: RewriteSystem, d_max: int) -> DimTable:
    """Count words of each degree with no rule leading word as a factor.

    Exact graded dimensions once the system is confluent to the same
    degree; otherwise upper bounds.
    """
    p = rs.presentation
    gens = p.algebra.generator_names()
    lead = set(rs.rules)
    maxlen = max((len(w) for w in lead), default=1)
    counts = [0] * (d_max + 1)
    counts[0] = 1

    def extend(word, depth):
        for g in gens:
            w = word + (g,)
            bad = any(
                w[s:] in lead for s in range(max(0, len(w) - maxlen), len(w))
            )
            if bad:
                continue
            counts[depth] += 1
            if depth < d_max:
                extend(w, depth + 1)

    if d_max >= 1:
        extend((), 1)
    return DimTable(tuple(counts))


def classical_dims(gens, d_max, forbidden_pairs=()) -> DimTable:
    """Independent commutative/Grassmann monomial count.

    gens is a list of (name, nilpotent) pairs: nilpotent generators carry
    exponent at most 1.  forbidden_pairs lists name pairs that may not both
    occur (inverse pairs such as k, k^-1).
    """
    names = [n for n, _ in gens]
    nil = {n for n, flag in gens if flag}
    counts = [0] * (d_max + 1)

    for d in range(d_max + 1):
        # count monomials of total degree exactly d
        def rec_d(idx, remaining, used):
            if idx == len(names):
                if remaining == 0:
                    counts[d] += 1
                return
            name = names[idx]
            top = min(remaining, 1) if name in nil else remaining
            for e in range(top + 1):
                if e and any(
                    (a == name and b in used) or (b == name and a in used)
                    for a, b in forbidden_pairs
                ):
                    continue
                rec_d(idx + 1, remaining - e, used | {name} if e else used)

        rec_d(0, d, frozenset())
    return DimTable(tuple(counts))


def ideals_equal_upto_degree(a: Presentation, b: Presentation, d: int, label=None) -> CheckReport:
    """Two-sided normal-form comparison of relation ideals up to degree d.

    Relations of degree above d are outside the comparison window and are
    skipped; the graded pieces up to d are compared via cross reduction
    plus a Hilbert-dimension match.
    """
    from .expressions import format_element

    name = label or f"{a.name}~{b.name}"
    if a.algebra.generators != b.algebra.generators or a.algebra.params != b.algebra.params:
        raise GeneratorMismatch("presentations must share generators")
    if a.precedence != b.precedence:
        raise GeneratorMismatch("presentations must share precedence")
    notes = []
    try:
        rsa = orient_relations(a)
        rsb = orient_relations(b)
    except NonUnitLeadingCoefficient as exc:
        return CheckReport(
            kind="ideal-equality",
            objects=(name, f"degree<={d}"),
            result=FAIL,
            residuals=(("orientation", str(exc)),),
        )
    for rs, pres in ((rsa, a), (rsb, b)):
        rep = confluence_check(rs, d)
        if not rep.passed:
            notes.append(f"{pres.name}: not confluent to degree {d}")
    residuals = []
    for rel in a.relations:
        if rel.degree() > d:
            continue
        nf = rsb.normal_form(rel)
        if not nf.is_zero():
            residuals.append((f"{a.name}: {format_element(rel)}", format_element(nf)))
    for rel in b.relations:
        if rel.degree() > d:
            continue
        nf = rsa.normal_form(rel)
        if not nf.is_zero():
            residuals.append((f"{b.name}: {format_element(rel)}", format_element(nf)))
    da = hilbert_dims(rsa, d)
    db = hilbert_dims(rsb, d)
    if da != db:
        residuals.append(("hilbert", f"{list(da.dims)} != {list(db.dims)}"))
    if residuals:
        return CheckReport(
            kind="ideal-equality",
            objects=(name, f"degree<={d}"),
            result=FAIL,
            residuals=tuple(residuals),
            notes=tuple(notes),
        )
    return CheckReport(
        kind="ideal-equality",
        objects=(name, f"degree<={d}"),
        result=PASS,
        notes=tuple(notes),
    )


def add_relation(p: Presentation, r: Element) -> Presentation:
    """Append one relation (the paper's 'by hand' adjustments)."""
    if r.algebra != p.algebra:
        raise AlgebraMismatch("relation lives in a foreign algebra")
    if r.is_zero():
        raise ValueError("cannot add the zero relation")
    if r in p.relations:
        return p
    return p.with_relations(p.relations + (r,))


def quotient_set_generator(p: Presentation, gname: str, value: Scalar) -> Presentation:
    """Set an even generator to a scalar value and drop it.

    Relations of degree < 2 surviving the substitution mark a non-flat
    (collapsing) quotient; this is recorded in the notes, not an error.
    """
    alg = p.algebra
    if gname not in alg.generator_names():
        raise KeyError(f"unknown generator {gname!r}")
    if alg.parity_of(gname) != 0:
        raise ValueError("only even generators can be set to scalar values")
    if value.parity() not in (0,):
        raise ValueError("quotient value must be even")
    rest = [g for g in alg.generators if g.name != gname]
    target = FreeAlgebra(alg.params, rest)
    images = {gname: target.scalar(value)}
    new_rels = []
    notes = [f"quotient: {gname} = scalar"]
    for rel in p.relations:
        img = rel.substitute_generators(images, target=target)
        if img.is_zero():
            continue
        if any(gname in w for w in img.terms):  # pragma: no cover - unreachable
            raise ResidualDependence(f"{gname!r} survives in a relation")
        if img.degree() < 2:
            if img.is_scalar():
                notes.append("inconsistent quotient: a relation became a nonzero constant")
            else:
                notes.append("collapsing quotient: a relation dropped to degree < 2")
        new_rels.append(img)
    precedence = tuple(g for g in p.precedence if g != gname)
    return Presentation(f"{p.name}/{{{gname}}}", target, precedence, new_rels, notes)
