import pytest

from qspaces.catalog import CATALOG_PARAMS, catalog_get, catalog_presentation
from qspaces.contract import (
    ContractionScheme,
    contract,
    flatness_check,
    parameter_limit,
)
from qspaces.errors import DivisionByNonUnit
from qspaces.expressions import parse_scalar
from qspaces.pipelines import cartesian_group
from qspaces.presentations import ideals_equal_upto_degree

P = CATALOG_PARAMS
SUBST = {"q": parse_scalar("1 + eps*v", P)}


def test_contract_cartesian_plane():
    # weights r=1 with q -> 1 + eps v lands on the flag plane, constant i v/2
    scheme = catalog_get("contr.eq8").payload.scheme
    out, report = contract(catalog_presentation("pres.eq8"), scheme, name="out")
    target = catalog_presentation("pres.ch2").with_name("out")
    assert ideals_equal_upto_degree(out, target, 2).passed
    assert report.rows[0][1] == 1  # leading order of the single relation


def test_contract_cartesian_group():
    scheme = catalog_get("contr.eq9").payload.scheme
    out, report = contract(cartesian_group(), scheme, name="out")
    target = catalog_presentation("pres.eq9").with_name("out")
    assert ideals_equal_upto_degree(out, target, 2).passed
    assert any("saturation" in n for n in report.notes)


def test_contract_superspace():
    scheme = catalog_get("contr.eq24").payload.scheme
    out, report = contract(catalog_presentation("pres.eq23"), scheme, name="out")
    target = catalog_presentation("pres.eq24").with_name("out")
    assert ideals_equal_upto_degree(out, target, 2).passed
    assert report.flatness is not None and report.flatness.passed


def test_contract_trivial_scheme_is_identity():
    p = catalog_presentation("pres.cq2")
    out, _ = contract(p, ContractionScheme("eps", {}), name=p.name)
    assert ideals_equal_upto_degree(out, p, 2).passed


def test_contract_rejects_used_eps():
    p = catalog_presentation("pres.cq2")
    with pytest.raises(ValueError):
        contract(p, ContractionScheme("q", {"x": 1}))


def test_contract_subst_must_restore_identity():
    with pytest.raises(ValueError):
        contract(
            catalog_presentation("pres.cq2"),
            ContractionScheme("eps", {}, {"q": parse_scalar("2 + eps", P)}),
        )


def test_nilpotent_mode_agrees_with_leading_order():
    for cid, inp in (("contr.eq8", "pres.eq8"), ("contr.eq24", "pres.eq23")):
        s = catalog_get(cid).payload.scheme
        p = catalog_presentation(inp)
        lead, _ = contract(p, s, name="out")
        nil, rep = contract(
            p, ContractionScheme(s.eps, s.weights, s.param_subst, "nilpotent"),
            name="out",
        )
        assert ideals_equal_upto_degree(lead, nil, 2).passed, cid
        assert any("truncation order" in n for n in rep.notes)


def test_nilpotent_mode_unrepresentable_for_group_contraction():
    # the Cartesian group coefficients contain 1/(q-1); with a truncated
    # nilpotent substituted for eps the denominator stops being a unit
    s = catalog_get("contr.eq9").payload.scheme
    nil = ContractionScheme(s.eps, s.weights, s.param_subst, "nilpotent")
    with pytest.raises(DivisionByNonUnit):
        contract(cartesian_group(), nil)


def test_parametrization_robustness():
    # replacing q -> 1+eps v by q -> 1+eps v+eps^2 v^2/2 changes nothing
    alt = {"q": parse_scalar("1 + eps*v + eps^2*v^2/2", P)}
    cases = [
        ("pres.eq8", {"r": 1}, "pres.ch2"),
        ("pres.eq23", {"xi2": 1}, "pres.eq24"),
    ]
    for pid, weights, golden in cases:
        out, _ = contract(
            catalog_presentation(pid), ContractionScheme("eps", weights, alt),
            name="out",
        )
        target = catalog_presentation(golden).with_name("out")
        assert ideals_equal_upto_degree(out, target, 2).passed
    out9, _ = contract(
        cartesian_group(), ContractionScheme("eps", {"t": 1, "u": 1}, alt),
        name="out",
    )
    target9 = catalog_presentation("pres.eq9").with_name("out")
    assert ideals_equal_upto_degree(out9, target9, 2).passed


def test_parameter_limit_examples():
    eq15 = catalog_presentation("pres.eq15")
    eq16 = catalog_presentation("pres.eq16").with_name(f"{eq15.name}|v=0")
    assert ideals_equal_upto_degree(parameter_limit(eq15, "v"), eq16, 2).passed
    ty = catalog_presentation("pres.ctq11-ty")
    cth = catalog_presentation("pres.cth11").with_name(f"{ty.name}|v=0")
    assert ideals_equal_upto_degree(parameter_limit(ty, "v"), cth, 2).passed
    # a presentation without the parameter is unchanged
    cq2 = catalog_presentation("pres.cq2")
    assert parameter_limit(cq2, "v").relations == cq2.relations


def test_flatness_examples():
    cq2 = catalog_presentation("pres.cq2")
    ch2 = catalog_presentation("pres.ch2")
    rep = flatness_check(cq2, ch2, 4)
    assert rep.passed
    assert "dims [1, 2, 3, 4, 5]" in rep.notes[0]
    eq21 = catalog_presentation("pres.eq21")
    eq24 = catalog_presentation("pres.eq24")
    assert flatness_check(eq21, eq24, 4).passed
    assert flatness_check(cq2, cq2, 4).passed
    bad = flatness_check(cq2, catalog_presentation("pres.eq11"), 4)
    assert bad.result == "fail"


def test_flatness_for_catalog_contractions():
    # contractions with confluent inputs carry their own flatness cell; the
    # Cartesian inputs are certified through the presentations they are a
    # basis change of
    s24 = catalog_get("contr.eq24").payload.scheme
    _, rep = contract(catalog_presentation("pres.eq23"), s24)
    assert rep.flatness.passed
    ce8 = catalog_get("contr.eq8").payload
    assert flatness_check(
        catalog_presentation(ce8.flat_via), catalog_presentation(ce8.golden_id), 4
    ).passed
    ce9 = catalog_get("contr.eq9").payload
    assert flatness_check(
        catalog_presentation(ce9.flat_via), catalog_presentation(ce9.golden_id), 4
    ).passed
