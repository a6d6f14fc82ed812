"""Behavior of the identity suite across the corpus geometries."""

import numpy as np
import pytest

from spin7.checks import (
    check_bi_spin7,
    check_bianchi_family,
    check_closed_torsion,
    check_main_theorems,
    check_riemannian_bianchi,
    check_s2lambda2,
    check_soliton,
    check_symmetric_ricci,
    classify_fernandez,
    full_report,
)
from spin7.corpus import (
    VERIFY_TARGETS,
    build_geometry,
    corpus_algebra,
    geometry_id,
)
from spin7.forms import KForm
from spin7.geometry import Geometry, SolitonData
from spin7.structure import canonical_phi_form

FLAT_CARTAN = [
    ("abelian", "canonical", None),
    ("su2su2u1u1", "canonical", None),
    ("su2su2u1u1", "remark_b", None),
    ("su3", "canonical", None),
]


@pytest.fixture(scope="module")
def geometries():
    return {geometry_id(a, s, t): build_geometry(a, s, t) for a, s, t in VERIFY_TARGETS}


@pytest.fixture(scope="module")
def heisenberg_geom():
    return build_geometry("heisenberg", "canonical")


def test_all_corpus_targets_pass_everything(geometries):
    for name, geom in geometries.items():
        rep = full_report(geom)
        assert rep.all_passed(), (name, [e.check_id for e in rep.failed()])
        assert len(rep.entries) >= 25


def test_reports_are_deterministic(geometries):
    geom = geometries["su2su2u1u1+canonical"]
    a = full_report(geom).to_json()
    b = full_report(build_geometry("su2su2u1u1", "canonical")).to_json()
    assert a == b


def test_bianchi_family_residuals(geometries, heisenberg_geom):
    for geom in list(geometries.values()) + [heisenberg_geom]:
        for e in check_bianchi_family(geom).entries:
            assert e.passed and e.residual < 1e-9, (geom.name, e.check_id)


def test_abelian_residuals_are_exactly_zero(geometries):
    rep = full_report(geometries["abelian+canonical"])
    assert rep.max_residual() == 0.0


def test_heisenberg_unconditional_pass_conditional_fail(heisenberg_geom):
    rep = full_report(heisenberg_geom)
    failing = {e.check_id for e in rep.failed()}
    # the pair-symmetry and first-Bianchi probes legitimately fail there
    assert "riemannian_first_bianchi" in failing
    assert failing <= {
        "riemannian_first_bianchi", "parallel_type_torsion_relations",
        "nabla_T_is_four_form", "curvature_pair_symmetry", "dT_vs_lc_derivative",
    }
    # but the verdict-agreement entries hold: the three conditions fail together
    agreement = {e.check_id: e for e in rep.entries}["pair_symmetry_equivalence"]
    assert agreement.passed


def test_heisenberg_conditional_checks_are_not_applicable(heisenberg_geom):
    rb = check_riemannian_bianchi(heisenberg_geom).entries
    cond = {e.check_id: e for e in rb}["ricci_flat_under_first_bianchi"]
    assert cond.not_applicable
    assert all(e.not_applicable for e in check_main_theorems(heisenberg_geom).entries)


def test_heisenberg_torsion_is_not_closed(heisenberg_geom):
    assert heisenberg_geom.dtorsion.max_abs() > 1e-6
    assert all(e.not_applicable for e in check_closed_torsion(heisenberg_geom).entries)
    assert all(e.not_applicable for e in check_soliton(heisenberg_geom).entries)


@pytest.mark.parametrize("target", FLAT_CARTAN, ids=lambda t: f"{t[0]}+{t[1]}")
def test_closed_torsion_chain_on_flat_entries(target, geometries):
    geom = geometries[geometry_id(*target)]
    entries = {e.check_id: e for e in check_closed_torsion(geom).entries}
    for cid in ("ricci_flat", "lee_parallel", "scalar_flat", "lee_coclosed",
                "torsion_coclosed", "ricci_from_lee_derivative",
                "lee_exterior_in_21part"):
        assert entries[cid].passed and entries[cid].residual < 1e-9, cid
    assert entries["closed_chain_agreement"].passed


@pytest.mark.parametrize("target", FLAT_CARTAN, ids=lambda t: f"{t[0]}+{t[1]}")
def test_soliton_constant_potential_on_flat_entries(target, geometries):
    geom = geometries[geometry_id(*target)]
    for e in check_soliton(geom, SolitonData.constant_potential()).entries:
        assert e.passed and e.residual < 1e-9, e.check_id


def test_soliton_rejects_bad_gradient():
    with pytest.raises(ValueError):
        SolitonData([1.0, 2.0])
    with pytest.raises(ValueError):
        SolitonData([np.nan] * 8)


def test_symmetric_ricci_gates_on_coclosed_torsion(geometries, heisenberg_geom):
    entries = {e.check_id: e for e in check_symmetric_ricci(
        geometries["su2su2u1u1+canonical"]).entries}
    assert entries["codifferential_of_torsion_formula"].passed
    assert entries["lee_nabla_exterior_formula"].passed
    assert entries["symmetric_ricci_equivalence"].passed
    heis = {e.check_id: e for e in check_symmetric_ricci(heisenberg_geom).entries}
    assert heis["codifferential_of_torsion_formula"].passed  # unconditional


def test_fernandez_classification(geometries):
    assert classify_fernandez(geometries["abelian+canonical"]) == [
        "W_0", "W_1", "locally_conformally_balanced", "strong"]
    assert classify_fernandez(geometries["su2su2u1u1+canonical"]) == ["strong"]
    assert classify_fernandez(geometries["su2su2u1u1+remark_b"]) == [
        "locally_conformally_balanced", "strong"]


def test_bi_structure_mirror(geometries, heisenberg_geom):
    for name in ("su2su2u1u1+canonical", "su3+canonical", "abelian+canonical"):
        entries = check_bi_spin7(geometries[name]).entries
        assert all(e.passed for e in entries), name
    heis = {e.check_id: e for e in check_bi_spin7(heisenberg_geom).entries}
    assert heis["bi_structure_opposite_torsion"].passed
    assert heis["bi_structure_mirror_closed"].not_applicable


def test_mirror_torsion_value(geometries):
    geom = geometries["su2su2u1u1+canonical"]
    from spin7.connection import spin7_torsion

    t_mirror = spin7_torsion(geom.structure, geom.algebra.mirrored())
    expect = -1.0 * (KForm.monomial((1, 2, 3)) + KForm.monomial((4, 5, 6)))
    assert (t_mirror - expect).max_abs() < 1e-12


def test_corrupted_form_fails_loudly_but_completely():
    coeffs = dict(canonical_phi_form().coeffs)
    coeffs[(0, 1, 2, 7)] = 1.0  # single sign flip
    geom = Geometry.build(corpus_algebra("su2su2u1u1"), KForm(4, coeffs),
                          name="corrupted")
    rep = full_report(geom)
    assert not rep.all_passed()
    assert max(e.residual for e in rep.failed()) > 1e-6
    assert len(rep.entries) >= 25  # the report still completes
    by_id = {e.check_id: e for e in rep.entries}
    # unconditional skew-torsion identities are form-independent and survive
    for cid in ("first_bianchi_with_torsion", "curvature_six_term_symmetry",
                "reversed_first_bianchi", "ricci_difference_riemannian",
                "dT_five_term_expansion", "second_bianchi_contracted"):
        assert by_id[cid].passed, cid


def test_report_round_trip(geometries):
    from spin7.report import VerificationReport

    rep = full_report(geometries["su3+canonical"])
    back = VerificationReport.from_json(rep.to_json())
    assert back.to_json() == rep.to_json()
    assert [e.check_id for e in back.entries] == [e.check_id for e in rep.entries]


def test_s2lambda2_verdicts_agree_everywhere(geometries, heisenberg_geom):
    for geom in list(geometries.values()) + [heisenberg_geom]:
        entries = {e.check_id: e for e in check_s2lambda2(geom).entries}
        assert entries["pair_symmetry_equivalence"].passed, geom.name
