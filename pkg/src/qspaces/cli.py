"""Command-line driver.

Exit codes: 0 all checks passed, 1 a check failed, 2 usage or input error,
3 documented anomalies were the only non-passing results.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import fileio
from .catalog import (
    CATALOG_PARAMS,
    catalog_get,
    catalog_ids,
    catalog_presentation,
    coaction_spec,
)
from .contract import ContractionScheme, contract, parameter_limit
from .derive import GeneratorMatrix, SignConvention, group_relations, space_relations
from .errors import QspacesError, UnknownId
from .expressions import parse_scalar
from .morphisms import coaction_check, transform_presentation
from .presentations import (
    classical_dims,
    confluence_check,
    hilbert_dims,
    ideals_equal_upto_degree,
    orient_relations,
    quotient_set_generator,
)
from .pipelines import PIPELINES, pbw_report, run_pipeline
from .reports import CheckReport, worst_exit_code
from .scalars import Scalar
from .tensor import verify_ybe

PARITY_NAMES = {"even": 0, "odd": 1}


def _parse_parities(text):
    return tuple(PARITY_NAMES[x.strip()] for x in text.split(","))


def _load_rmatrix(args):
    if args.catalog:
        entry = catalog_get(args.catalog)
        if entry.kind != "rmatrix":
            raise UnknownId(args.catalog)
        e = entry.payload
        parities = e.parities
        if getattr(args, "parities", None):
            parities = _parse_parities(args.parities)
        return e.matrix, parities, e, args.catalog
    data = fileio.load_json(args.file)
    m = fileio.rmatrix_from_dict(data)
    parities = _parse_parities(args.parities) if args.parities else (0,) * m.base_dim()
    return m, parities, None, args.file


def _load_presentation(ref):
    if ref.startswith("@"):
        return fileio.presentation_from_dict(fileio.load_json(ref[1:]))
    return catalog_presentation(ref)


def _finish(args, reports, quiet=False):
    if not (quiet or args.quiet):
        for r in reports:
            print(r.summary())
            for loc, expr in r.residuals[:8]:
                print(f"    {loc}: {expr}")
            for note in r.notes:
                print(f"    note: {note}")
    if args.json:
        fileio.dump_reports(reports, args.json)
    return worst_exit_code(reports)


def _print_presentation(p, args):
    if not args.quiet:
        print(json.dumps(fileio.presentation_to_dict(p), sort_keys=True, indent=2))


def cmd_verify_ybe(args):
    m, parities, _, label = _load_rmatrix(args)
    rep = verify_ybe(m, parities=parities, form=args.form, label=label)
    return _finish(args, [rep])


def cmd_derive(args):
    m, parities, entry, label = _load_rmatrix(args)
    q = parse_scalar(args.q, m.params)
    reports = []
    if args.what == "space":
        names = args.names.split(",") if args.names else (
            list(entry.coordinates) if entry else None
        )
        precedence = (
            tuple(args.precedence.split(",")) if args.precedence
            else (entry.coordinate_precedence if entry else None)
        )
        flip = args.flip or (entry.space_flip if entry else "plain")
        derived = space_relations(
            m, parities, q, names=names, precedence=precedence,
            name=f"{label}-space", flip=flip,
        )
    else:
        gmatrix = None
        precedence = tuple(args.precedence.split(",")) if args.precedence else None
        if args.names:
            flat = args.names.split(",")
            n = m.base_dim()
            grid = [[flat[i * n + j] for j in range(n)] for i in range(n)]
            gmatrix = GeneratorMatrix(m.params, parities, grid)
        derived = group_relations(
            m, parities, SignConvention(args.convention), gmatrix=gmatrix,
            precedence=precedence, name=f"{label}-group",
        )
    _print_presentation(derived, args)
    if args.target:
        target = _load_presentation(args.target)
        reports.append(ideals_equal_upto_degree(derived, target, args.degree))
    return _finish(args, reports, quiet=not reports)


def cmd_transform(args):
    source = _load_presentation(args.input)
    if args.map.startswith("@"):
        bm = fileio.basismap_from_dict(fileio.load_json(args.map[1:]), source)
    else:
        entry = catalog_get(args.map)
        if entry.kind != "basismap":
            raise UnknownId(args.map)
        bm = entry.payload.basis_map
    precedence = tuple(args.precedence.split(",")) if args.precedence else None
    derived = transform_presentation(source, bm, precedence=precedence,
                                     name=f"{source.name}~")
    _print_presentation(derived, args)
    reports = []
    if args.target:
        target = _load_presentation(args.target)
        derived2 = transform_presentation(source, bm, precedence=target.precedence,
                                          name=f"{source.name}~")
        reports.append(ideals_equal_upto_degree(derived2, target, args.degree))
    return _finish(args, reports, quiet=not reports)


def _resolve_contraction(args):
    if args.scheme.startswith("@"):
        scheme = fileio.scheme_from_dict(fileio.load_json(args.scheme[1:]))
        input_id = args.input
        target_id = args.target
    else:
        entry = catalog_get(args.scheme)
        if entry.kind != "contraction":
            raise UnknownId(args.scheme)
        ce = entry.payload
        scheme = ce.scheme
        input_id = args.input or ce.input_id
        target_id = args.target or ce.golden_id
    if args.mode:
        scheme = ContractionScheme(scheme.eps, scheme.weights, scheme.param_subst, args.mode)
    if input_id == "derived:glq2-cartesian":
        from .pipelines import cartesian_group

        source = cartesian_group()
    else:
        source = _load_presentation(input_id)
    return scheme, source, target_id


def cmd_contract(args):
    scheme, source, target_id = _resolve_contraction(args)
    contracted, report = contract(source, scheme)
    _print_presentation(contracted, args)
    if not args.quiet:
        print(report.summary())
        for note in report.notes:
            print(f"    note: {note}")
    reports = []
    if report.flatness is not None:
        reports.append(report.flatness)
    if target_id:
        target = _load_presentation(target_id)
        reports.append(ideals_equal_upto_degree(contracted, target, args.degree))
    return _finish(args, reports, quiet=not reports)


def cmd_limit(args):
    source = _load_presentation(args.input)
    out = parameter_limit(source, args.param)
    _print_presentation(out, args)
    reports = []
    if args.target:
        target = _load_presentation(args.target)
        reports.append(ideals_equal_upto_degree(out, target, args.degree))
    return _finish(args, reports, quiet=not reports)


def cmd_coact(args):
    if args.catalog:
        spec = coaction_spec(args.catalog, variant=args.variant)
    else:
        spec = fileio.coaction_from_dict(
            fileio.load_json(args.file), _load_presentation
        )
    rep = coaction_check(spec, degree=args.degree)
    return _finish(args, [rep])


def cmd_pbw(args):
    if args.catalog:
        return _finish(args, [pbw_report(args.catalog, degree=args.degree)])
    p = fileio.presentation_from_dict(fileio.load_json(args.file))
    rs = orient_relations(p)
    conf = confluence_check(rs, 3)
    dims = hilbert_dims(rs, args.degree)
    gens = [(g.name, bool(g.parity)) for g in p.algebra.generators]
    expect = classical_dims(gens, args.degree)
    if conf.passed and dims == expect:
        rep = CheckReport(kind="pbw", objects=(p.name,), result="pass",
                          notes=(f"dims {list(dims.dims)}",))
    else:
        residuals = list(conf.residuals)
        if dims != expect:
            residuals.append(
                ("dims", f"{list(dims.dims)} != classical {list(expect.dims)}")
            )
        rep = CheckReport(kind="pbw", objects=(p.name,), result="fail",
                          residuals=tuple(residuals))
    return _finish(args, [rep])


def cmd_confluence(args):
    if args.catalog:
        p = catalog_presentation(args.catalog)
        label = args.catalog
    else:
        p = fileio.presentation_from_dict(fileio.load_json(args.file))
        label = p.name
    rep = confluence_check(orient_relations(p), args.degree, label=label)
    return _finish(args, [rep])


def cmd_compare(args):
    a = _load_presentation(args.a)
    b = _load_presentation(args.b)
    rep = ideals_equal_upto_degree(a, b, args.degree)
    return _finish(args, [rep])


def cmd_quotient(args):
    source = _load_presentation(args.input)
    value = parse_scalar(args.value, source.algebra.params)
    out = quotient_set_generator(source, args.generator, value)
    _print_presentation(out, args)
    reports = []
    if args.target:
        target = _load_presentation(args.target)
        out2 = out.with_name(target.name)
        reports.append(ideals_equal_upto_degree(out2, target, args.degree))
    return _finish(args, reports, quiet=not reports)


def cmd_catalog(args):
    if args.id:
        entry = catalog_get(args.id)
        print(f"{entry.id} ({entry.kind}; anchor {entry.anchor})")
        for note in entry.notes:
            print(f"  note: {note}")
        if entry.kind == "presentation":
            print(json.dumps(
                fileio.presentation_to_dict(entry.payload.presentation),
                sort_keys=True, indent=2,
            ))
        elif entry.kind == "rmatrix":
            print(json.dumps(fileio.rmatrix_to_dict(entry.payload.matrix),
                             sort_keys=True, indent=2))
        elif entry.kind == "pipeline":
            print(f"  {entry.payload}")
    else:
        for ident in catalog_ids():
            print(f"{ident:24s} {catalog_get(ident).kind}")
    return 0


def cmd_pipeline(args):
    reports = run_pipeline(args.name)
    return _finish(args, reports)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="qspaces",
        description="exact workbench for R-matrix quantum (super)groups, "
                    "(super)spaces and their contractions",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, catalog_or_file=True):
        p.add_argument("--json", metavar="PATH", help="write a JSON report stream")
        p.add_argument("--quiet", action="store_true")
        p.add_argument("--degree", type=int, default=2,
                       help="comparison degree for ideal equality")
        if catalog_or_file:
            g = p.add_mutually_exclusive_group(required=True)
            g.add_argument("--catalog", metavar="ID")
            g.add_argument("--file", metavar="PATH")
        return p

    p = common(sub.add_parser("verify-ybe", help="check the Yang-Baxter identity"))
    p.add_argument("--form", choices=["auto", "plain", "graded"], default="auto")
    p.add_argument("--parities", help="comma list: even,odd,...")
    p.set_defaults(fn=cmd_verify_ybe)

    p = common(sub.add_parser("derive", help="space or group relations from R"))
    p.add_argument("what", choices=["space", "group"])
    p.add_argument("--parities")
    p.add_argument("--convention", choices=["ungraded", "graded"], default="ungraded")
    p.add_argument("--flip", choices=["plain", "graded"])
    p.add_argument("--names", help="comma list of generator names")
    p.add_argument("--precedence", help="comma list, high to low")
    p.add_argument("--q", default="q", help="deformation scalar expression")
    p.add_argument("--target", help="presentation id (or @file) to compare against")
    p.set_defaults(fn=cmd_derive)

    p = common(sub.add_parser("transform", help="apply a basis map"), False)
    p.add_argument("--map", required=True, help="map id or @file")
    p.add_argument("--input", required=True, help="presentation id or @file")
    p.add_argument("--precedence")
    p.add_argument("--target")
    p.set_defaults(fn=cmd_transform)

    p = common(sub.add_parser("contract", help="contract a presentation"), False)
    p.add_argument("--scheme", required=True, help="contraction id or @file")
    p.add_argument("--input", help="presentation id or @file (default: scheme input)")
    p.add_argument("--mode", choices=["leading_order", "nilpotent"])
    p.add_argument("--target")
    p.set_defaults(fn=cmd_contract)

    p = common(sub.add_parser("limit", help="set a parameter to zero"), False)
    p.add_argument("--input", required=True)
    p.add_argument("--param", required=True)
    p.add_argument("--target")
    p.set_defaults(fn=cmd_limit)

    p = common(sub.add_parser("coact", help="verify a coaction homomorphism"))
    p.add_argument("--variant", choices=["effective", "nilpotent"], default="effective")
    p.set_defaults(fn=cmd_coact, degree=3)

    p = common(sub.add_parser("pbw", help="confluence and dimension audit"))
    p.set_defaults(fn=cmd_pbw, degree=4)
    p = common(sub.add_parser("confluence", help="overlap-ambiguity audit"))
    p.set_defaults(fn=cmd_confluence, degree=3)

    p = common(sub.add_parser("compare", help="ideal equality of two presentations"), False)
    p.add_argument("a", help="presentation id or @file")
    p.add_argument("b", help="presentation id or @file")
    p.set_defaults(fn=cmd_compare)

    p = common(sub.add_parser("quotient", help="set a generator to a scalar"), False)
    p.add_argument("--input", required=True)
    p.add_argument("--generator", required=True)
    p.add_argument("--value", default="1")
    p.add_argument("--target")
    p.set_defaults(fn=cmd_quotient)

    p = sub.add_parser("catalog", help="list or show catalog entries")
    p.add_argument("id", nargs="?")
    p.set_defaults(fn=cmd_catalog)

    p = common(sub.add_parser("pipeline", help="run a scripted golden pipeline"), False)
    p.add_argument("name", help="pipeline name or 'all'")
    p.set_defaults(fn=cmd_pipeline)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (QspacesError, OSError, KeyError, ValueError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
