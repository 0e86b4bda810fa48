"""JSON schemas for matrices, presentations, maps, coactions and schemes.

All expressions are strings in the package grammar.  Files that do not
declare parameters are read over the catalog parameter set.
"""

from __future__ import annotations

import json

from .catalog import CATALOG_PARAMS
from .contract import ContractionScheme
from .expressions import format_element, format_scalar, parse_expression, parse_scalar
from .freealg import FreeAlgebra, Generator
from .morphisms import BasisMap, CoactionSpec
from .presentations import Presentation
from .scalars import EVEN, ODD, ParameterSet
from .tensor import SMatrix

_PARITY = {"even": EVEN, "odd": ODD, EVEN: EVEN, ODD: ODD}


def parameters_from_dict(d) -> ParameterSet:
    if d is None:
        return CATALOG_PARAMS
    return ParameterSet(
        even_free=tuple(d.get("even_free", ())),
        even_nilpotent=tuple((n, int(k)) for n, k in d.get("even_nilpotent", ())),
        odd=tuple(d.get("odd", ())),
    )


def parameters_to_dict(params: ParameterSet):
    return {
        "even_free": list(params.even_free),
        "even_nilpotent": [[n, k] for n, k in params.even_nilpotent],
        "odd": list(params.odd),
    }


def rmatrix_from_dict(d, params=None) -> SMatrix:
    """{"dim": n, "entries": [[expr, ...], ...]} row-major over pairs."""
    params = params or parameters_from_dict(d.get("parameters"))
    n = d["dim"]
    entries = d["entries"]
    if len(entries) != n * n or any(len(row) != n * n for row in entries):
        raise ValueError("entries must form an n^2 x n^2 grid")
    rows = [[parse_scalar(e, params) for e in row] for row in entries]
    return SMatrix(params, rows)


def rmatrix_to_dict(m: SMatrix, n=None):
    return {
        "dim": n if n is not None else m.base_dim(),
        "entries": [[format_scalar(e) for e in row] for row in m.entries],
    }


def presentation_from_dict(d) -> Presentation:
    """{"name", "parameters", "generators", "precedence", "relations"}."""
    params = parameters_from_dict(d.get("parameters"))
    gens = [Generator(g["name"], _PARITY[g.get("parity", "even")]) for g in d["generators"]]
    alg = FreeAlgebra(params, gens)
    rels = [parse_expression(src, alg) for src in d["relations"]]
    return Presentation(
        d["name"], alg, tuple(d["precedence"]), rels, tuple(d.get("notes", ()))
    )


def presentation_to_dict(p: Presentation):
    return {
        "name": p.name,
        "parameters": parameters_to_dict(p.algebra.params),
        "generators": [
            {"name": g.name, "parity": "odd" if g.parity else "even"}
            for g in p.algebra.generators
        ],
        "precedence": list(p.precedence),
        "relations": [format_element(r) for r in p.relations],
        "notes": list(p.notes),
    }


def basismap_from_dict(d, source: Presentation) -> BasisMap:
    """{"images": {gen: expr}, "parameter_subst": {param: expr},
    "target_generators": [{"name","parity"}, ...]} (target optional when
    the images reuse the source generators)."""
    params = source.algebra.params
    tgt = d.get("target_generators")
    if tgt:
        gens = [Generator(g["name"], _PARITY[g.get("parity", "even")]) for g in tgt]
        target = FreeAlgebra(params, gens)
    else:
        target = source.algebra
    images = {g: parse_expression(e, target) for g, e in d["images"].items()}
    subst = {
        k: parse_scalar(v, params) for k, v in d.get("parameter_subst", {}).items()
    }
    inv = {
        k: parse_scalar(v, params)
        for k, v in d.get("inverse_parameter_subst", {}).items()
    }
    return BasisMap(source.algebra, target, images, subst, inv)


def coaction_from_dict(d, resolve_presentation) -> CoactionSpec:
    """{"group": id, "space": id, "matrix": [[expr, ...]], "cross_sign"}."""
    group = resolve_presentation(d["group"])
    space = resolve_presentation(d["space"])
    matrix = [
        [parse_expression(e, group.algebra) for e in row] for row in d["matrix"]
    ]
    return CoactionSpec(
        group,
        space,
        matrix,
        d.get("cross_sign", "koszul"),
        label=d.get("label", "coaction"),
    )


def scheme_from_dict(d, params=None) -> ContractionScheme:
    """{"eps", "weights", "param_subst", "mode"}."""
    params = params or parameters_from_dict(d.get("parameters"))
    subst = {k: parse_scalar(v, params) for k, v in d.get("param_subst", {}).items()}
    return ContractionScheme(
        d["eps"],
        {g: int(w) for g, w in d.get("weights", {}).items()},
        subst,
        d.get("mode", "leading_order"),
    )


def load_json(path):
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def dump_reports(reports, path):
    """Deterministic JSON report stream (sorted keys, fixed layout)."""
    payload = {"reports": [r.to_dict() for r in reports]}
    text = json.dumps(payload, sort_keys=True, indent=2) + "\n"
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)
    return text
