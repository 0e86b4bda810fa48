"""Quantum-space and quantum-group presentations from an R-matrix.

Space relations implement (Rhat - q I)(X tensor X) = 0 literally, with the
unsigned column of products x_i x_k even in graded cases; the graded flip
(P with signs (-1)^{p_i p_k}) is available as a documented extension.

Group relations implement R T1 T2 = T2 T1 R.  In the graded convention the
Koszul sign (-1)^{p_i(p_k+p_l)} is attached to the T2 factor of both
products (T1 stays unsigned); this is the matrix of the operator I (x) T
on the graded tensor square, and it is the unique placement under which
the derived bialgebra coacts on the derived space.  The mirrored placement
signs T1 by (-1)^{p_k(p_i+p_j)} instead and corresponds to right
coactions; only the T2 placement is wired in.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DimensionMismatch
from .freealg import Element, FreeAlgebra, Generator
from .presentations import Presentation, ideals_equal_upto_degree
from .reports import ANOMALY, FAIL, PASS, CheckReport
from .scalars import Scalar
from .tensor import SMatrix, permutation_matrix, rhat, verify_ybe

UNGRADED = "ungraded"
GRADED = "graded"
CONVENTIONS = (UNGRADED, GRADED)


@dataclass(frozen=True)
class SignConvention:
    kind: str = UNGRADED

    def __post_init__(self):
        if self.kind not in CONVENTIONS:
            raise ValueError(f"unknown convention {self.kind!r}")

    def t2_sign(self, parities, i, k, l):
        if self.kind == UNGRADED:
            return 1
        return -1 if parities[i] and (parities[k] + parities[l]) % 2 else 1


class GeneratorMatrix:
    """n x n grid of generators t_ij with parity p(t_ij) = p_i + p_j."""

    def __init__(self, params, parities, names=None):
        n = len(parities)
        self.n = n
        self.parities = tuple(parities)
        if names is None:
            names = [[f"t{i + 1}{j + 1}" for j in range(n)] for i in range(n)]
        self.names = [list(row) for row in names]
        gens = []
        for i in range(n):
            for j in range(n):
                gens.append(
                    Generator(self.names[i][j], (parities[i] + parities[j]) % 2)
                )
        self.algebra = FreeAlgebra(params, gens)

    def entry(self, i, j):
        return self.algebra.gen(self.names[i][j])


def _collect_relations(entries, algebra, precedence_names):
    """Monicize, dedupe and drop zero entries of a relation matrix."""
    probe = Presentation("_probe", algebra, precedence_names, ())
    out = []
    for e in entries:
        if e.is_zero():
            continue
        _, c = probe.leading(e)
        if c.is_unit():
            e = e.scale(c.inverse())
        if e not in out:
            out.append(e)
    return out


def _emat_mul(a, b, zero):
    rows, mid, cols = len(a), len(b), len(b[0])
    out = [[zero for _ in range(cols)] for _ in range(rows)]
    for i in range(rows):
        for k in range(mid):
            x = a[i][k]
            if x.is_zero():
                continue
            for j in range(cols):
                y = b[k][j]
                if y.is_zero():
                    continue
                out[i][j] = out[i][j] + x * y
    return out


def space_relations(
    r: SMatrix,
    parities,
    q_symbol: Scalar,
    names=None,
    precedence=None,
    name="space",
    check_ybe=True,
    flip="plain",
) -> Presentation:
    """Quadratic coordinate relations (Rhat - q I)(X tensor X) = 0.

    flip='plain' uses the permutation operator exactly as printed;
    flip='graded' uses the super flip with signs (-1)^{p_i p_k}, the
    variant under which the exotic graded plane loses its square relation.
    """
    n = r.base_dim()
    if len(parities) != n:
        raise DimensionMismatch(f"parity vector length {len(parities)} != {n}")
    if names is None:
        names = [f"x{i + 1}" for i in range(n)]
    notes = []
    if check_ybe:
        rep = verify_ybe(r, parities=parities, label=name)
        if not rep.passed:
            notes.append("warning: R does not satisfy the Yang-Baxter identity")
    alg = FreeAlgebra(r.params, [Generator(names[i], parities[i]) for i in range(n)])
    rh = rhat(r)
    if flip == "graded":
        rows = [list(row) for row in rh.entries]
        for i in range(n):
            for k in range(n):
                if parities[i] and parities[k]:
                    rows[i * n + k] = [-e for e in rows[i * n + k]]
        rh = SMatrix(r.params, rows)
        notes.append("graded flip variant")
    elif flip != "plain":
        raise ValueError(f"unknown flip {flip!r}")
    prec = tuple(precedence) if precedence else tuple(names)
    entries = []
    for i in range(n):
        for k in range(n):
            row = i * n + k
            acc = alg.zero()
            for m in range(n):
                for l in range(n):
                    col = m * n + l
                    c = rh.entries[row][col]
                    if row == col:
                        c = c - q_symbol
                    if c.is_zero():
                        continue
                    acc = acc + alg.word((names[m], names[l]), c)
            entries.append(acc)
    rels = _collect_relations(entries, alg, prec)
    return Presentation(name, alg, prec, rels, notes)


def group_relations(
    r: SMatrix,
    parities,
    convention: SignConvention = SignConvention(UNGRADED),
    gmatrix: GeneratorMatrix = None,
    precedence=None,
    name="group",
) -> Presentation:
    """RTT relations R T1 T2 = T2 T1 R under the given sign convention."""
    n = r.base_dim()
    if len(parities) != n:
        raise DimensionMismatch(f"parity vector length {len(parities)} != {n}")
    gm = gmatrix or GeneratorMatrix(r.params, parities)
    if gm.n != n or tuple(gm.parities) != tuple(parities):
        raise DimensionMismatch("generator matrix does not match R")
    alg = gm.algebra
    zero = alg.zero()
    nn = n * n
    p = parities

    rmat = [[alg.scalar(r.entries[a][b]) for b in range(nn)] for a in range(nn)]
    t1_plain = [[zero for _ in range(nn)] for _ in range(nn)]
    t2_signed = [[zero for _ in range(nn)] for _ in range(nn)]
    for i in range(n):
        for k in range(n):
            row = i * n + k
            for j in range(n):
                for l in range(n):
                    col = j * n + l
                    if k == l:
                        t1_plain[row][col] = t1_plain[row][col] + gm.entry(i, j)
                    if i == j:
                        e = gm.entry(k, l)
                        s = convention.t2_sign(p, i, k, l)
                        t2_signed[row][col] = t2_signed[row][col] + (e if s > 0 else -e)
    lhs = _emat_mul(rmat, _emat_mul(t1_plain, t2_signed, zero), zero)
    rhs = _emat_mul(_emat_mul(t2_signed, t1_plain, zero), rmat, zero)
    entries = [lhs[a][b] - rhs[a][b] for a in range(nn) for b in range(nn)]
    flat_names = [gm.names[i][j] for i in range(n) for j in range(n)]
    prec = tuple(precedence) if precedence else tuple(flat_names)
    rels = _collect_relations(entries, alg, prec)
    return Presentation(name, alg, prec, rels, (f"convention: {convention.kind}",))


def convention_scan(
    r: SMatrix,
    parities,
    target: Presentation,
    label="R",
    degree=2,
    anomaly_on_none=False,
) -> CheckReport:
    """Derive group relations under every convention and compare with target.

    The report records, per convention, whether the derived ideal equals
    the target's at the given degree; the outcome is computed, never
    assumed.
    """
    n = r.base_dim()
    flat = target.algebra.generator_names()
    if len(flat) != n * n:
        raise DimensionMismatch("target must live on n^2 generators")
    names = [[flat[i * n + j] for j in range(n)] for i in range(n)]
    matches = []
    notes = []
    residuals = []
    for kind in CONVENTIONS:
        gm = GeneratorMatrix(r.params, parities, names)
        derived = group_relations(
            r,
            parities,
            SignConvention(kind),
            gmatrix=gm,
            precedence=target.precedence,
            name=f"{label}:{kind}",
        )
        try:
            rep = ideals_equal_upto_degree(derived, target, degree)
        except Exception as exc:  # orientation failures count as mismatch
            notes.append(f"{kind}: comparison failed ({exc})")
            continue
        if rep.passed:
            matches.append(kind)
            notes.append(f"{kind}: matches {target.name}")
        else:
            notes.append(f"{kind}: does not match {target.name}")
            for loc, expr in rep.residuals[:4]:
                residuals.append((f"{kind} {loc}", expr))
    if matches:
        return CheckReport(
            kind="convention-scan",
            objects=(label, target.name),
            result=PASS,
            notes=tuple(notes) + (f"matching conventions: {', '.join(matches)}",),
        )
    return CheckReport(
        kind="convention-scan",
        objects=(label, target.name),
        result=ANOMALY if anomaly_on_none else FAIL,
        residuals=tuple(residuals),
        notes=tuple(notes) + ("no convention reproduces the stated presentation",),
    )
