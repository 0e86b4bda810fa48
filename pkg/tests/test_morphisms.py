import pytest

from qspaces.catalog import (
    CATALOG_PARAMS,
    catalog_get,
    catalog_presentation,
    coaction_spec,
)
from qspaces.derive import GeneratorMatrix, SignConvention, group_relations
from qspaces.errors import ParityViolation, SingularTransform
from qspaces.expressions import parse_expression
from qspaces.freealg import Element, FreeAlgebra
from qspaces.morphisms import (
    BasisMap,
    CoactionSpec,
    coaction_check,
    induced_group_transform,
    tensor_product_algebra,
    transform_presentation,
)
from qspaces.presentations import (
    confluence_check,
    ideals_equal_upto_degree,
    orient_relations,
)
from qspaces.scalars import Scalar
from qspaces.tensor import SMatrix, conjugate_R

P = CATALOG_PARAMS


def test_transform_cartesian_plane():
    m7 = catalog_get("map.eq7").payload
    target = catalog_presentation("pres.eq8")
    out = transform_presentation(
        catalog_presentation("pres.cq2"), m7.basis_map,
        precedence=target.precedence, name=target.name,
    )
    assert ideals_equal_upto_degree(out, target, 2).passed


def test_transform_identity_map():
    p = catalog_presentation("pres.cq2")
    ident = BasisMap(p.algebra, p.algebra, {g: p.algebra.gen(g) for g in p.algebra.generator_names()})
    out = transform_presentation(p, ident, precedence=p.precedence, name=p.name)
    assert ideals_equal_upto_degree(out, p, 2).passed


def test_transform_superlinear():
    m14 = catalog_get("map.eq14").payload
    target = catalog_presentation("pres.eq15")
    out = transform_presentation(
        catalog_presentation("pres.cq11"), m14.basis_map,
        precedence=target.precedence, name=target.name,
    )
    assert ideals_equal_upto_degree(out, target, 2).passed


def test_transform_rejects_singular_map():
    p = catalog_presentation("pres.cq2")
    alg = FreeAlgebra(P, [("p", 0), ("r", 0)])
    images = {"x": alg.gen("p"), "y": alg.gen("p")}
    bad = BasisMap(p.algebra, alg, images)
    with pytest.raises(SingularTransform):
        transform_presentation(p, bad)


def test_basis_map_parity_guard():
    p = catalog_presentation("pres.cq11")
    alg = FreeAlgebra(P, [("y", 0), ("xi", 1)])
    with pytest.raises(ParityViolation):
        BasisMap(p.algebra, alg, {"x": alg.gen("xi"), "theta": alg.gen("y")})


def test_inverse_roundtrip_on_catalog_maps():
    for mid, pid in [
        ("map.eq7", "pres.cq2"),
        ("map.eq14", "pres.cq11"),
        ("map.eq19", "pres.ctq11"),
        ("map.eq22", "pres.eq21"),
    ]:
        bm = catalog_get(mid).payload.basis_map
        p = catalog_presentation(pid)
        fwd = transform_presentation(p, bm, name="fwd")
        back = transform_presentation(fwd, bm.inverse(), precedence=p.precedence,
                                      name=p.name)
        assert ideals_equal_upto_degree(back, p, 2).passed, mid


def test_induced_group_transform_routes_agree():
    m7 = catalog_get("map.eq7").payload
    eq6 = catalog_presentation("pres.eq6")
    prec = catalog_presentation("pres.eq9").precedence
    via_images = induced_group_transform(
        eq6, m7.matrix, names=[["s", "t"], ["u", "w"]], precedence=prec, name="cart"
    )
    e = catalog_get("R.glq2").payload
    gm = GeneratorMatrix(P, (0, 0), [["s", "t"], ["u", "w"]])
    via_r = group_relations(
        conjugate_R(e.matrix, m7.matrix), (0, 0), SignConvention("ungraded"),
        gmatrix=gm, precedence=prec, name="cart",
    )
    assert ideals_equal_upto_degree(via_images, via_r, 2).passed


def test_induced_group_transform_trivials():
    eq6 = catalog_presentation("pres.eq6")
    names = [["a", "b"], ["c", "d"]]
    ident = SMatrix.identity(P, 2)
    same = induced_group_transform(eq6, ident, names=names,
                                   precedence=eq6.precedence, name=eq6.name)
    assert ideals_equal_upto_degree(same, eq6, 2).passed
    c = SMatrix.diagonal(P, [Scalar.integer(P, 5), Scalar.integer(P, 5)])
    scaled = induced_group_transform(eq6, c, names=names,
                                     precedence=eq6.precedence, name=eq6.name)
    assert ideals_equal_upto_degree(scaled, eq6, 2).passed


def test_tensor_product_cross_rules():
    one_even = catalog_presentation("pres.cq2")
    group = catalog_presentation("pres.eq6")
    ta = tensor_product_algebra(group, one_even, "koszul")
    # relations: 6 group + 1 space + 8 cross
    assert len(ta.relations) == 6 + 1 + 8
    assert confluence_check(orient_relations(ta), 3).passed
    # odd x odd cross pair anticommutes under the koszul rule
    g13 = catalog_presentation("pres.eq13")
    s11 = catalog_presentation("pres.cq11")
    ta2 = tensor_product_algebra(g13, s11, "koszul")
    rs = orient_relations(ta2)
    alg = ta2.algebra
    th_alpha = alg.word(("theta", "alpha"))
    nf = rs.normal_form(th_alpha)
    assert nf == -alg.word(("alpha", "theta"))
    ta3 = tensor_product_algebra(g13, s11, "plain")
    rs3 = orient_relations(ta3)
    assert rs3.normal_form(th_alpha) == alg.word(("alpha", "theta"))


def test_tensor_product_name_clash_renamed():
    a = catalog_presentation("pres.cq2")  # x, y
    b = catalog_presentation("pres.eq11")  # x, y again
    ta = tensor_product_algebra(a, b, "koszul")
    names = ta.algebra.generator_names()
    assert "x_sp" in names and "y_sp" in names


def test_coaction_checks_pass():
    for cid in ("coact.eq6", "coact.eq10", "coact.eq13", "coact.eq17", "coact.eq26"):
        rep = coaction_check(coaction_spec(cid))
        assert rep.passed, (cid, rep.residuals)


def test_coaction_failure_reports_residual():
    spec = coaction_spec("coact.eq6")
    # corrupt the group: drop the exchange relation the check needs
    broken = spec.group.with_relations(spec.group.relations[:2])
    bad = CoactionSpec(broken, spec.space, spec.matrix, spec.cross_sign, label="bad")
    rep = coaction_check(bad)
    assert rep.result == "fail"
    assert rep.residuals


def test_coaction_parity_validation():
    spec = coaction_spec("coact.eq13")
    alg = spec.group.algebra
    bad_matrix = [[alg.gen("a"), alg.gen("a")], [alg.gen("beta"), alg.gen("b")]]
    bad = CoactionSpec(spec.group, spec.space, bad_matrix, "koszul")
    with pytest.raises(ParityViolation):
        bad.validate()


def test_nilpotent_coaction_variants_report_first_order_leftovers():
    # the first-order check of contracted relations cannot close: the
    # leftover is the next order of the pre-contraction relations
    for cid in ("coact.eq10", "coact.eq26"):
        rep = coaction_check(coaction_spec(cid, variant="nilpotent"))
        assert rep.result == "fail"
        assert all("iota" in expr for _, expr in rep.residuals)


def test_homomorphism_soundness_all_catalog_r():
    from qspaces.derive import space_relations

    q = Scalar.parameter(P, "q")
    for rid, conv in [
        ("R.glq2", "ungraded"),
        ("R.glq2-exotic", "ungraded"),
        ("R.glq11", "graded"),
        ("R.glq11-exotic", "graded"),
        ("R.glq12", "graded"),
    ]:
        e = catalog_get(rid).payload
        n = len(e.parities)
        flip = "graded" if conv == "graded" else "plain"
        space = space_relations(
            e.matrix, e.parities, q, names=list(e.coordinates),
            precedence=e.coordinate_precedence, name=f"{rid}-space",
            check_ybe=False, flip=flip,
        )
        group = group_relations(e.matrix, e.parities, SignConvention(conv),
                                name=f"{rid}-group")
        names = group.algebra.generator_names()
        matrix = [
            [group.algebra.gen(names[i * n + k]) for k in range(n)]
            for i in range(n)
        ]
        rep = coaction_check(
            CoactionSpec(group, space, matrix, "koszul", label=f"{rid}-sound")
        )
        assert rep.passed, (rid, rep.residuals[:2])
