"""Built-in catalog of R-matrices, presentations, maps, coactions, schemes.

Entry ids are stable: R.* for R-matrices, pres.* for presentations, map.*
for basis maps, coact.* for coaction specifications, contr.* for
contraction schemes and pipe.* for scripted pipelines.  Ids of the eqNN
family track the numbering used throughout the golden data set.
"""

from __future__ import annotations

import copy
import difflib
from dataclasses import dataclass, field

from .contract import ContractionScheme
from .errors import UnknownId
from .expressions import parse_expression, parse_scalar
from .freealg import FreeAlgebra, Generator
from .morphisms import BasisMap, CoactionSpec
from .presentations import Presentation
from .scalars import ParameterSet, Scalar
from .tensor import SMatrix

CATALOG_PARAMS = ParameterSet(
    even_free=("q", "v", "eps"),
    even_nilpotent=(("iota", 2),),
    odd=("h",),
)

# even deformation constant of the contracted family
H_EVEN = "i*v/2"

_LAM = "(q^2 - 1)/q"


def _algebra(gens):
    return FreeAlgebra(CATALOG_PARAMS, [Generator(n, p) for n, p in gens])


def _presentation(name, gens, precedence, relations, notes=()):
    alg = _algebra(gens)
    rels = [parse_expression(src, alg) for src in relations]
    return Presentation(name, alg, precedence, rels, notes)


@dataclass
class RMatrixEntry:
    matrix: SMatrix
    parities: tuple
    coordinates: tuple
    coordinate_precedence: tuple
    q_name: str = "q"
    space_flip: str = "plain"  # flip under which the stated space emerges


@dataclass
class PresentationEntry:
    presentation: Presentation
    nilpotent: tuple  # generator names counted with exponent <= 1 classically
    forbidden_pairs: tuple = ()
    audited: bool = True


@dataclass
class MapEntry:
    basis_map: BasisMap
    source_id: str
    matrix: SMatrix = None  # linear part, for the conjugation route


@dataclass
class CoactionEntry:
    group_id: str
    space_id: str
    matrix_exprs: tuple
    cross_sign: str = "koszul"
    nilpotent_matrix_exprs: tuple = None
    ungauged: tuple = ()  # generators the effective map leaves unconstrained
    notes: tuple = ()


@dataclass
class ContractionEntry:
    scheme: ContractionScheme
    input_id: str  # pres.* id or 'derived:...' marker
    golden_id: str
    flat_via: str = None  # confluent stand-in for a non-confluent input


@dataclass
class CatalogEntry:
    id: str
    kind: str
    payload: object
    anchor: str
    notes: tuple = ()


def _sm(exprs):
    rows = [
        [parse_scalar(e, CATALOG_PARAMS) for e in row]
        for row in exprs
    ]
    return SMatrix(CATALOG_PARAMS, rows)


def _eq5(zeta):
    return [
        ["q", "0", "0", "0"],
        ["0", "1", "0", "0"],
        ["0", _LAM, "1", "0"],
        ["0", "0", "0", zeta],
    ]


def _eq20():
    rows = [["0"] * 9 for _ in range(9)]
    diag = ["q", "1", "1", "1", "1/q", "1", "1", "1", "1/q"]
    for a in range(9):
        rows[a][a] = diag[a]
    rows[3][1] = _LAM
    rows[6][2] = _LAM
    rows[7][5] = f"-{_LAM}"
    return rows


def _build():
    entries = {}

    def add(ident, kind, payload, anchor, notes=()):
        entries[ident] = CatalogEntry(ident, kind, payload, anchor, tuple(notes))

    # -- R-matrices ---------------------------------------------------------
    add(
        "R.glq2",
        "rmatrix",
        RMatrixEntry(_sm(_eq5("q")), (0, 0), ("x", "y"), ("y", "x")),
        "eq5",
        ("standard two-dimensional solution, zeta = q",),
    )
    add(
        "R.glq2-exotic",
        "rmatrix",
        RMatrixEntry(_sm(_eq5("-1/q")), (0, 0), ("x", "y"), ("y", "x")),
        "eq5",
        ("exotic two-dimensional solution, zeta = -1/q",),
    )
    add(
        "R.glq11",
        "rmatrix",
        RMatrixEntry(_sm(_eq5("1/q")), (0, 1), ("x", "theta"), ("theta", "x")),
        "eq5",
        ("standard graded solution, zeta = 1/q",),
    )
    add(
        "R.glq11-exotic",
        "rmatrix",
        RMatrixEntry(_sm(_eq5("-q")), (0, 1), ("z", "mu"), ("mu", "z")),
        "eq5",
        ("exotic graded solution, zeta = -q",),
    )
    add(
        "R.glq12",
        "rmatrix",
        RMatrixEntry(
            _sm(_eq20()),
            (0, 1, 1),
            ("x", "theta1", "theta2"),
            ("theta2", "theta1", "x"),
            space_flip="graded",
        ),
        "eq20",
        (
            "standard three-dimensional graded solution",
            "the stated superspace needs the graded flip: the plain flip "
            "makes the two odd-odd exchange rows inconsistent",
        ),
    )

    # -- presentations ------------------------------------------------------
    add(
        "pres.cq2",
        "presentation",
        PresentationEntry(
            _presentation("cq2", [("x", 0), ("y", 0)], ("y", "x"), ["x*y - q*y*x"]),
            nilpotent=(),
        ),
        "pre-eq6",
    )
    add(
        "pres.eq6",
        "presentation",
        PresentationEntry(
            _presentation(
                "glq2",
                [("a", 0), ("b", 0), ("c", 0), ("d", 0)],
                ("a", "b", "c", "d"),
                [
                    "a*b - q*b*a",
                    "a*c - q*c*a",
                    "b*d - q*d*b",
                    "c*d - q*d*c",
                    "b*c - c*b",
                    f"a*d - d*a - {_LAM}*b*c",
                ],
            ),
            nilpotent=(),
        ),
        "eq6",
    )
    add(
        "pres.eq8",
        "presentation",
        PresentationEntry(
            _presentation(
                "cq2-cartesian",
                [("p", 0), ("r", 0)],
                ("r", "p"),
                ["r*p - p*r - i*(q - 1)/(q + 1)*(r^2 + p^2)"],
            ),
            nilpotent=(),
            audited=False,
        ),
        "eq8",
        (
            "no finite deglex rewriting basis in these coordinates: the "
            "reduced system needs every word r p^k r, so the dimension audit "
            "runs on the plane it is a basis change of",
        ),
    )
    add(
        "pres.ch2",
        "presentation",
        PresentationEntry(
            _presentation(
                "ch2",
                [("p", 0), ("r", 0)],
                ("r", "p"),
                [f"r*p - p*r - {H_EVEN}*p^2"],
            ),
            nilpotent=(),
        ),
        "eq8-contracted",
        ("deformation constant i*v/2",),
    )
    add(
        "pres.eq9",
        "presentation",
        PresentationEntry(
            _presentation(
                "glh2",
                [("s", 0), ("t", 0), ("u", 0), ("w", 0)],
                ("t", "u", "s", "w"),
                [
                    "s*w - w*s",
                    f"u*t - t*u - {H_EVEN}*(s + w)*(t + u)",
                    f"s*t - t*s - {H_EVEN}*s*(s - w)",
                    f"u*s - s*u - {H_EVEN}*s*(s - w)",
                    f"t*w - w*t - {H_EVEN}*w*(s - w)",
                    f"w*u - u*w - {H_EVEN}*w*(s - w)",
                ],
            ),
            nilpotent=(),
        ),
        "eq9",
        ("deformation constant i*v/2",),
    )
    add(
        "pres.eq11",
        "presentation",
        PresentationEntry(
            _presentation(
                "dq2",
                [("x", 0), ("y", 0)],
                ("y", "x"),
                ["x*y - q*y*x", "y^2"],
            ),
            nilpotent=("y",),
        ),
        "eq11",
        ("both generators even; y is nilpotent",),
    )
    add(
        "pres.eq12",
        "presentation",
        PresentationEntry(
            _presentation(
                "glq2-exotic",
                [("a", 0), ("b", 0), ("c", 0), ("d", 0)],
                ("a", "b", "c", "d"),
                [
                    "b^2",
                    "c^2",
                    "b*c - c*b",
                    "a*c - q*c*a",
                    "d*b + q*b*d",
                    "d*c + q*c*d",
                    f"a*d - d*a - {_LAM}*b*c",
                    "a*b - q*b*a",
                ],
            ),
            nilpotent=("b", "c"),
        ),
        "eq12",
        (
            "the a-b exchange relation is implied by the derivation and by "
            "flatness but is omitted from the stated list; it is included "
            "here so the presentation generates the full exchange ideal",
        ),
    )
    add(
        "pres.eq13",
        "presentation",
        PresentationEntry(
            _presentation(
                "glq11",
                [("a", 0), ("alpha", 1), ("beta", 1), ("b", 0)],
                ("a", "alpha", "beta", "b"),
                [
                    "alpha^2",
                    "beta^2",
                    "alpha*beta + beta*alpha",
                    "a*alpha - q*alpha*a",
                    "a*beta - q*beta*a",
                    "b*alpha - q*alpha*b",
                    "b*beta - q*beta*b",
                    f"a*b - b*a - {_LAM}*beta*alpha",
                ],
            ),
            nilpotent=("alpha", "beta"),
        ),
        "eq13",
    )
    add(
        "pres.cq11",
        "presentation",
        PresentationEntry(
            _presentation(
                "cq11",
                [("x", 0), ("theta", 1)],
                ("theta", "x"),
                ["x*theta - q*theta*x", "theta^2"],
            ),
            nilpotent=("theta",),
        ),
        "pre-eq14",
    )
    add(
        "pres.eq15",
        "presentation",
        PresentationEntry(
            _presentation(
                "cq11-yxi",
                [("y", 0), ("xi", 1)],
                ("xi", "y"),
                ["y*xi - xi*y - h*y^2 - v*xi*y", "xi^2 + h*xi*y"],
            ),
            nilpotent=("xi",),
        ),
        "eq15",
        ("odd deformation parameter h",),
    )
    add(
        "pres.eq16",
        "presentation",
        PresentationEntry(
            _presentation(
                "ch11",
                [("y", 0), ("xi", 1)],
                ("xi", "y"),
                ["y*xi - xi*y - h*y^2", "xi^2 + h*xi*y"],
            ),
            nilpotent=("xi",),
        ),
        "eq16",
    )
    add(
        "pres.eq17",
        "presentation",
        PresentationEntry(
            _presentation(
                "glh11",
                [("m", 0), ("psi", 1), ("phi", 1), ("n", 0)],
                ("phi", "n", "m", "psi"),
                [
                    "psi^2",
                    "phi^2 - h*phi*(n - m)",
                    "psi*phi + phi*psi - h*psi*(n - m)",
                    "m*phi - phi*m - h*(phi*psi - m*(n - m))",
                    "n*phi - phi*n - h*(phi*psi - n*(n - m))",
                    "m*psi - psi*m",
                    "n*psi - psi*n",
                    "n*m - m*n - h*psi*(n - m)",
                ],
            ),
            nilpotent=("psi", "phi"),
        ),
        "eq17",
    )
    add(
        "pres.eq18",
        "presentation",
        PresentationEntry(
            _presentation(
                "glq11-exotic",
                [("c", 0), ("gamma", 1), ("delta", 1), ("d", 0)],
                ("c", "gamma", "delta", "d"),
                [
                    "gamma*delta + delta*gamma",
                    "c*gamma - q*gamma*c",
                    "c*delta - q*delta*c",
                    "gamma*d + q*d*gamma",
                    "delta*d + q*d*delta",
                    f"c*d - d*c - {_LAM}*delta*gamma",
                ],
            ),
            nilpotent=(),
        ),
        "eq18",
        ("odd generators without vanishing squares: exotic by construction",),
    )
    add(
        "pres.ctq11",
        "presentation",
        PresentationEntry(
            _presentation(
                "ctq11",
                [("z", 0), ("mu", 1)],
                ("mu", "z"),
                ["z*mu - q*mu*z"],
            ),
            nilpotent=(),
        ),
        "pre-eq19",
        ("stated without a square relation for the odd generator",),
    )
    add(
        "pres.ctq11-derived",
        "presentation",
        PresentationEntry(
            _presentation(
                "ctq11-derived",
                [("z", 0), ("mu", 1)],
                ("mu", "z"),
                ["z*mu - q*mu*z", "mu^2"],
            ),
            nilpotent=("mu",),
        ),
        "pre-eq19",
        ("what the literal coordinate-relation recipe produces: mu^2 = 0 appears",),
    )
    add(
        "pres.ctq11-ty",
        "presentation",
        PresentationEntry(
            _presentation(
                "ctq11-ty",
                [("t", 0), ("nu", 1)],
                ("nu", "t"),
                ["t*nu - nu*t - h*t^2 - v*nu*t", "nu^2"],
            ),
            nilpotent=("nu",),
            audited=False,
        ),
        "pre-eq19-transformed",
        (
            "nu^2 = 0 adjoined by hand",
            "not flat before the v -> 0 limit: the nu*nu*t overlap leaves the "
            "torsion element v*h*t^2*nu in the ideal, so the dimension audit "
            "only applies to the limit algebra",
        ),
    )
    add(
        "pres.cth11",
        "presentation",
        PresentationEntry(
            _presentation(
                "cth11",
                [("t", 0), ("nu", 1)],
                ("nu", "t"),
                ["t*nu - nu*t - h*t^2", "nu^2"],
            ),
            nilpotent=("nu",),
        ),
        "post-eq19",
    )
    add(
        "pres.eq21",
        "presentation",
        PresentationEntry(
            _presentation(
                "cq12",
                [("x", 0), ("theta1", 1), ("theta2", 1)],
                ("theta2", "theta1", "x"),
                [
                    "x*theta1 - q*theta1*x",
                    "x*theta2 - q*theta2*x",
                    "theta1*theta2 + q*theta2*theta1",
                    "theta1^2",
                    "theta2^2",
                ],
            ),
            nilpotent=("theta1", "theta2"),
        ),
        "eq21",
    )
    add(
        "pres.eq23",
        "presentation",
        PresentationEntry(
            _presentation(
                "cq12-cartesian",
                [("x", 0), ("xi1", 1), ("xi2", 1)],
                ("xi2", "xi1", "x"),
                [
                    "x*xi1 - q*xi1*x",
                    "x*xi2 - q*xi2*x",
                    "xi1*xi2 + xi2*xi1",
                    "xi1^2 - i*(q - 1)/(q + 1)*xi1*xi2",
                    "xi2^2 - i*(q - 1)/(q + 1)*xi1*xi2",
                    "xi1^3",
                ],
            ),
            nilpotent=("xi1", "xi2"),
        ),
        "eq23",
        (
            "coordinate relation read as x*xi_k = q*xi_k*x (evident typo fix)",
            "xi1^3 is a redundant ideal member: no quadratic deglex system is "
            "confluent in this basis, and adjoining it restores unique normal "
            "forms without changing the ideal",
        ),
    )
    add(
        "pres.eq24",
        "presentation",
        PresentationEntry(
            _presentation(
                "ch12",
                [("x", 0), ("xi1", 1), ("xi2", 1)],
                ("xi2", "xi1", "x"),
                [
                    "x*xi1 - xi1*x",
                    "x*xi2 - xi2*x",
                    "xi1*xi2 + xi2*xi1",
                    "xi1^2",
                    f"xi2^2 - {H_EVEN}*xi1*xi2",
                ],
            ),
            nilpotent=("xi1", "xi2"),
        ),
        "eq24",
        ("deformation constant i*v/2",),
    )
    add(
        "pres.eq25",
        "presentation",
        PresentationEntry(
            _presentation(
                "ch2-hat",
                [("xi1", 1), ("xi2", 1)],
                ("xi2", "xi1"),
                [
                    "xi1*xi2 + xi2*xi1",
                    "xi1^2",
                    f"xi2^2 - {H_EVEN}*xi1*xi2",
                ],
            ),
            nilpotent=("xi1", "xi2"),
        ),
        "eq25",
    )
    add(
        "pres.eq27",
        "presentation",
        PresentationEntry(
            _presentation(
                "slh12",
                [("r", 0), ("k", 0), ("kinv", 0), ("m", 0)],
                ("r", "m", "k", "kinv"),
                [
                    f"r*k - k*r - {H_EVEN}*(k^2 - 1)",
                    f"k*m - m*k - {H_EVEN}*(k^2 - 1)",
                    f"kinv*r - r*kinv - {H_EVEN}*(1 - kinv^2)",
                    f"m*kinv - kinv*m - {H_EVEN}*(1 - kinv^2)",
                    f"r*m - m*r - {H_EVEN}*(k + kinv)*(r + m)",
                    "k*kinv - 1",
                    "kinv*k - 1",
                ],
            ),
            nilpotent=(),
            forbidden_pairs=(("k", "kinv"),),
        ),
        "eq27",
        ("unit relations k*kinv = kinv*k = 1 adjoined to the stated list",),
    )

    # -- basis maps ---------------------------------------------------------
    def _map(source_id, target_gens, images, param_subst=None, inverse_param_subst=None):
        src = entries[source_id].payload.presentation.algebra
        tgt = _algebra(target_gens)
        imgs = {g: parse_expression(e, tgt) for g, e in images.items()}
        ps = {k: parse_scalar(v, CATALOG_PARAMS) for k, v in (param_subst or {}).items()}
        ips = {
            k: parse_scalar(v, CATALOG_PARAMS)
            for k, v in (inverse_param_subst or {}).items()
        }
        return BasisMap(src, tgt, imgs, ps, ips)

    add(
        "map.eq7",
        "basismap",
        MapEntry(
            _map("pres.cq2", [("p", 0), ("r", 0)], {"x": "p - i*r", "y": "p + i*r"}),
            "pres.cq2",
            _sm([["1", "-i"], ["1", "i"]]),
        ),
        "eq7",
        ("normalization constants dropped: conjugation and homogeneous ideals "
         "are scale invariant",),
    )
    add(
        "map.eq14",
        "basismap",
        MapEntry(
            _map(
                "pres.cq11",
                [("y", 0), ("xi", 1)],
                {"x": "y + h/v*xi", "theta": "xi + h/v*y"},
                {"q": "1 + v"},
                {"v": "q - 1"},
            ),
            "pres.cq11",
        ),
        "eq14",
    )
    add(
        "map.eq19",
        "basismap",
        MapEntry(
            _map(
                "pres.ctq11",
                [("t", 0), ("nu", 1)],
                {"z": "t + h/v*nu", "mu": "nu + h/v*t"},
                {"q": "1 + v"},
                {"v": "q - 1"},
            ),
            "pres.ctq11",
        ),
        "eq19",
    )
    add(
        "map.eq22",
        "basismap",
        MapEntry(
            _map(
                "pres.eq21",
                [("x", 0), ("xi1", 1), ("xi2", 1)],
                {"x": "x", "theta1": "xi1 - i*xi2", "theta2": "xi1 + i*xi2"},
            ),
            "pres.eq21",
            _sm([["1", "0", "0"], ["0", "1", "-i"], ["0", "1", "i"]]),
        ),
        "eq22",
        ("normalization constants dropped",),
    )

    # -- coactions ----------------------------------------------------------
    add(
        "coact.eq6",
        "coaction",
        CoactionEntry(
            "pres.eq6",
            "pres.cq2",
            (("a", "b"), ("c", "d")),
        ),
        "eq4",
    )
    add(
        "coact.eq10",
        "coaction",
        CoactionEntry(
            "pres.eq9",
            "pres.ch2",
            (("s", "0"), ("u", "w")),
            nilpotent_matrix_exprs=(("s", "iota*t"), ("u", "w")),
            ungauged=("t",),
            notes=(
                "effective contracted map: the t entry carries the square of "
                "the nilpotent unit and drops out, so t is unconstrained",
            ),
        ),
        "eq10",
    )
    add(
        "coact.eq13",
        "coaction",
        CoactionEntry("pres.eq13", "pres.cq11", (("a", "alpha"), ("beta", "b"))),
        "eq13",
    )
    add(
        "coact.eq17",
        "coaction",
        CoactionEntry("pres.eq17", "pres.eq16", (("m", "psi"), ("phi", "n"))),
        "eq17",
    )
    add(
        "coact.eq26",
        "coaction",
        CoactionEntry(
            "pres.eq27",
            "pres.eq24",
            (("1", "0", "0"), ("0", "k", "0"), ("0", "m", "kinv")),
            nilpotent_matrix_exprs=(
                ("1", "0", "0"),
                ("0", "k", "iota*r"),
                ("0", "m", "kinv"),
            ),
            ungauged=("r",),
            notes=(
                "effective contracted map: the r entry carries the square of "
                "the nilpotent unit and drops out, so r is unconstrained",
            ),
        ),
        "eq26",
    )

    # -- contractions -------------------------------------------------------
    add(
        "contr.eq8",
        "contraction",
        ContractionEntry(
            ContractionScheme(
                "eps", {"r": 1}, {"q": parse_scalar("1 + eps*v", CATALOG_PARAMS)}
            ),
            "pres.eq8",
            "pres.ch2",
            flat_via="pres.cq2",
        ),
        "eq8-contraction",
    )
    add(
        "contr.eq9",
        "contraction",
        ContractionEntry(
            ContractionScheme(
                "eps", {"t": 1, "u": 1}, {"q": parse_scalar("1 + eps*v", CATALOG_PARAMS)}
            ),
            "derived:glq2-cartesian",
            "pres.eq9",
            flat_via="pres.eq6",
        ),
        "eq9-contraction",
    )
    add(
        "contr.eq24",
        "contraction",
        ContractionEntry(
            ContractionScheme(
                "eps", {"xi2": 1}, {"q": parse_scalar("1 + eps*v", CATALOG_PARAMS)}
            ),
            "pres.eq23",
            "pres.eq24",
        ),
        "eq24-contraction",
    )

    # -- pipelines ----------------------------------------------------------
    pipeline_docs = {
        "pipe.ybe-all": "Yang-Baxter verification for every catalog R-matrix",
        "pipe.eq6": "derive the standard two-dimensional group and audit it",
        "pipe.eq8": "Cartesian basis change of the plane, both routes",
        "pipe.eq9": "Cartesian group transform and its contraction",
        "pipe.eq11": "derive the dual plane",
        "pipe.eq12": "derive the exotic two-dimensional group",
        "pipe.eq13": "convention scan and coaction for the graded group",
        "pipe.eq15": "superlinear basis change of the graded plane",
        "pipe.eq16": "parameter limit onto the contracted superplane",
        "pipe.eq17-coact": "coaction of the contracted graded group",
        "pipe.eq18": "convention scan for the exotic graded group and the "
                     "exotic plane discrepancy report",
        "pipe.eq21": "derive the three-dimensional superspace",
        "pipe.eq23": "Cartesian basis change of the superspace, both routes",
        "pipe.eq24": "contraction onto the flag superspace",
        "pipe.eq25": "quotient by the central even coordinate",
        "pipe.eq26-coact": "coaction of the contracted three-dimensional group",
        "pipe.exotic-ch11": "exotic superlinear transform and its limit",
    }
    for pid, doc in pipeline_docs.items():
        add(pid, "pipeline", doc, pid.replace("pipe.", ""))

    return entries


_ENTRIES = _build()


def catalog_ids(kind=None):
    ids = sorted(_ENTRIES)
    if kind:
        ids = [i for i in ids if _ENTRIES[i].kind == kind]
    return ids


def catalog_get(ident: str) -> CatalogEntry:
    """Deep-copied catalog entry; unknown ids get a nearest-match hint."""
    entry = _ENTRIES.get(ident)
    if entry is None:
        close = difflib.get_close_matches(ident, _ENTRIES.keys(), n=1)
        raise UnknownId(ident, close[0] if close else None)
    return copy.deepcopy(entry)


def catalog_presentation(ident: str) -> Presentation:
    entry = catalog_get(ident)
    if entry.kind != "presentation":
        raise UnknownId(ident, None)
    return entry.payload.presentation


def coaction_spec(ident: str, variant="effective") -> CoactionSpec:
    """Materialize a coaction entry into a checkable specification."""
    entry = catalog_get(ident)
    if entry.kind != "coaction":
        raise UnknownId(ident, None)
    ce = entry.payload
    group = catalog_presentation(ce.group_id)
    space = catalog_presentation(ce.space_id)
    exprs = ce.matrix_exprs
    label = ident
    if variant == "nilpotent":
        if ce.nilpotent_matrix_exprs is None:
            raise ValueError(f"{ident} has no nilpotent variant")
        exprs = ce.nilpotent_matrix_exprs
        label = f"{ident}:nilpotent"
    matrix = [
        [parse_expression(e, group.algebra) for e in row]
        for row in exprs
    ]
    return CoactionSpec(
        group, space, matrix, ce.cross_sign, label=label, notes=ce.notes
    )
