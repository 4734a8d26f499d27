import pytest
from hypothesis import given, settings

from coxdim import (
    CoxeterMatrix, InputError, action_dimension_report, kpi1_sufficient,
    nerve, spherical_actdim,
)
from coxdim.coxeter import INF
from coxdim.report import ASSUMED, PROVED_FLAG_NERVE, PROVED_SPHERICAL, UNKNOWN

from conftest import coxeter_matrices, example_matrix


def test_spherical_actdim_values():
    assert spherical_actdim(example_matrix("a_1")) == 1
    assert spherical_actdim(example_matrix("a_3")) == 5
    assert spherical_actdim(example_matrix("a1xa1")) == 2
    assert spherical_actdim(example_matrix("e8")) == 15
    with pytest.raises(InputError):
        spherical_actdim(example_matrix("two-points-inf"))


def test_spherical_actdim_is_twice_gd_minus_k():
    for name in ("a_1", "a_3", "b_3", "h4", "e6", "a1xa1"):
        M = example_matrix(name)
        d = nerve(M).dim
        k = len(M.components(M.generators))
        assert spherical_actdim(M) == 2 * (d + 1) - k


def test_kpi1_statuses():
    assert kpi1_sufficient(example_matrix("e8")) == PROVED_SPHERICAL
    assert kpi1_sufficient(example_matrix("raag-cycle-4")) == PROVED_FLAG_NERVE
    affine = example_matrix("affine-triangle")
    assert kpi1_sufficient(affine) == UNKNOWN
    assert kpi1_sufficient(affine, assume=True) == ASSUMED


def test_report_main_theorem_instances():
    for name, expected_d, expected in (
        ("raag-cycle-4", 1, 4),
        ("pentagon-3", 1, 4),
        ("two-points-inf", 0, 2),
    ):
        r = action_dimension_report(example_matrix(name))
        assert r.d == expected_d
        assert not r.spherical
        assert r.betti_top_mod2_reduced != 0
        assert r.obdim_lower.value == 2 * r.d + 2
        assert r.actdim_exact.value == expected == 2 * r.d + 2
        assert r.kpi1_status == PROVED_FLAG_NERVE


def test_report_single_generator_consistency():
    r = action_dimension_report(example_matrix("a_1"))
    assert r.spherical and r.actdim_exact.value == 1
    assert r.betti_top_mod2_reduced == 0
    assert r.obdim_lower.value == 1


def test_report_unknown_kpi1_leaves_upper_open():
    r = action_dimension_report(example_matrix("affine-triangle"))
    assert r.kpi1_status == UNKNOWN
    assert r.actdim_upper.value is None
    assert r.actdim_exact.value is None
    assert r.obdim_lower.value == 4
    assert r.gd["value"] is None and r.gd["lower"] == 2

    assumed = action_dimension_report(example_matrix("affine-triangle"), assume_kpi1=True)
    assert assumed.kpi1_status == ASSUMED
    assert assumed.actdim_upper.value == 4
    assert assumed.actdim_exact.value == 4
    assert "K(pi,1) property" in assumed.actdim_upper.hypotheses


def _cone_over_cycle():
    # apex joined to a 4-cycle, right angled: the nerve is a 2-disk
    gens = "xabcd"
    rels = {}
    cycle = ["a", "b", "c", "d"]
    for i, s in enumerate(cycle):
        rels[(s, cycle[(i + 1) % 4])] = 2
        rels[("x", s)] = 2
    rels[("a", "c")] = INF
    rels[("b", "d")] = INF
    return CoxeterMatrix.from_relations(gens, rels)


def test_report_d2_suppresses_cohomology_refinement():
    M = _cone_over_cycle()
    r = action_dimension_report(M)
    assert r.d == 2 and not r.spherical
    assert r.betti_top_mod2_reduced == 0
    assert r.h_top_integral.rank == 0 and r.h_top_integral.torsion == ()
    assert r.actdim_upper.value == 6          # refinement withheld at d == 2
    assert r.notes and "d != 2" in r.notes[0]
    assert r.actdim_lower.value == 3
    assert r.actdim_exact.value is None


def _cone_over_octahedron():
    gens = "xabcdef"
    pairs = {}
    opposite = {"a": "b", "b": "a", "c": "d", "d": "c", "e": "f", "f": "e"}
    for s in "abcdef":
        pairs[("x", s)] = 2
        for t in "abcdef":
            if s < t:
                pairs[(s, t)] = INF if opposite[s] == t else 2
    return CoxeterMatrix.from_relations(gens, pairs)


def test_report_d3_cohomology_refinement_fires():
    M = _cone_over_octahedron()
    r = action_dimension_report(M)
    assert r.d == 3 and not r.spherical
    assert r.betti_top_mod2_reduced == 0
    assert r.h_top_integral.rank == 0 and r.h_top_integral.torsion == ()
    assert r.actdim_upper.value == 7          # 2d+1 via vanishing top cohomology
    assert r.actdim_upper.theorem == "integral-top-cohomology-vanishing"


def test_report_rp2_torsion_blocks_refinement():
    r = action_dimension_report(example_matrix("rp2-nerve"))
    assert r.d == 2
    assert r.betti_top_mod2_reduced == 1
    assert r.h_top_integral.torsion == (2,)
    assert r.obdim_lower.value == 6
    assert r.actdim_upper.value == 6
    assert r.actdim_exact.value == 6


@settings(max_examples=40, deadline=None)
@given(coxeter_matrices())
def test_report_internal_consistency(M):
    r = action_dimension_report(M)
    if r.actdim_lower.value is not None and r.actdim_upper.value is not None:
        assert r.actdim_lower.value <= r.actdim_upper.value
    if r.spherical:
        assert r.actdim_exact.value is not None
        assert r.kpi1_status == PROVED_SPHERICAL
    if r.actdim_exact.value is not None and r.actdim_upper.value is not None:
        assert r.actdim_exact.value == r.actdim_upper.value
    assert r.cd_lower.value == r.d + 1


@settings(max_examples=30, deadline=None)
@given(coxeter_matrices(max_generators=4, labels=(2, 2, 3, 3)))
def test_adding_infinity_never_raises_dimension(M):
    d_before = nerve(M).dim
    gens = M.generators
    if len(gens) < 2:
        return
    # replace the first finite-label pair with infinity
    rels = {}
    replaced = False
    for i, s in enumerate(gens):
        for t in gens[i + 1:]:
            lab = M.label(s, t)
            if not replaced and lab != INF:
                rels[(s, t)] = INF
                replaced = True
            else:
                rels[(s, t)] = lab
    stricter = CoxeterMatrix.from_relations(gens, rels)
    assert nerve(stricter).dim <= d_before


def test_report_serialization_fields(a3):
    doc = action_dimension_report(a3).to_dict()
    for key in ("d", "spherical", "k", "cd_lower", "gd", "kpi1_status",
                "betti_top_mod2_reduced", "h_top_integral", "obdim_lower",
                "actdim_lower", "actdim_upper", "actdim_exact"):
        assert key in doc
    assert doc["actdim_exact"]["value"] == 5
