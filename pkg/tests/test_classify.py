import pytest
from hypothesis import given, settings
from itertools import combinations

from coxdim import CoxeterMatrix, FiniteType, InputError, catalog, is_spherical, recognize_finite_type
from coxdim.verify import _Tally, check_classification_oracle, cosine_positive_definite, type_matrix

from conftest import coxeter_matrices, example_matrix


def _recognize(relations, n=None, gens=None):
    gens = gens or "abcdefgh"[: n or (1 + max((max(ord(c) for c in "".join(p)) for p, _ in relations), default=ord("a")) - ord("a"))]
    M = CoxeterMatrix.from_relations(gens, dict(relations))
    return recognize_finite_type(M, M.generators)


def test_single_vertex_is_a1():
    M = CoxeterMatrix.from_relations("a", {})
    assert recognize_finite_type(M, "a") == FiniteType("A", 1)


def test_paths():
    assert _recognize([(("a", "b"), 3), (("b", "c"), 3)]) == FiniteType("A", 3)
    assert _recognize([(("a", "b"), 3), (("b", "c"), 4), (("c", "d"), 3)]) == FiniteType("F4", 4)
    assert _recognize([(("a", "b"), 5), (("b", "c"), 3), (("c", "d"), 3)]) == FiniteType("H4", 4)
    assert _recognize([(("a", "b"), 5), (("b", "c"), 3)]) == FiniteType("H3", 3)
    assert _recognize([(("a", "b"), 4), (("b", "c"), 3), (("c", "d"), 3)]) == FiniteType("B", 4)
    assert _recognize([(("a", "b"), 3), (("b", "c"), 5), (("c", "d"), 3)]) is None


def test_rank_two():
    from coxdim.coxeter import INF
    assert _recognize([(("a", "b"), 3)], gens="ab") == FiniteType("A", 2)
    assert _recognize([(("a", "b"), 4)], gens="ab") == FiniteType("I2", 2, 4)
    assert _recognize([(("a", "b"), 50)], gens="ab") == FiniteType("I2", 2, 50)
    assert _recognize([(("a", "b"), INF)], gens="ab") is None


def test_branch_types():
    e8 = example_matrix("e8")
    assert recognize_finite_type(e8, e8.generators) == FiniteType("E8", 8)
    d4 = example_matrix("d_4")
    assert recognize_finite_type(d4, d4.generators) == FiniteType("D", 4)
    # arm lengths (1,2,5): one vertex longer than E8 allows
    gens = "abcdefghi"
    rels = {(gens[i], gens[i + 1]): 3 for i in range(7)}
    rels[("f", "i")] = 3
    M = CoxeterMatrix.from_relations(gens, rels)
    assert recognize_finite_type(M, M.generators) is None


def test_recognize_errors():
    M = example_matrix("a_3")
    with pytest.raises(InputError):
        recognize_finite_type(M, ())
    with pytest.raises(InputError):
        recognize_finite_type(M, ("a", "c"))   # disconnected


def test_catalog_closed_forms():
    assert catalog(FiniteType("A", 1)) .num_reflections == 1
    assert catalog(FiniteType("A", 7)).num_reflections == 28
    assert catalog(FiniteType("B", 5)).num_reflections == 25
    assert catalog(FiniteType("D", 6)).num_reflections == 30
    assert catalog(FiniteType("E6", 6)).num_reflections == 36
    assert catalog(FiniteType("E7", 7)).num_reflections == 63
    assert catalog(FiniteType("E8", 8)).num_reflections == 120
    assert catalog(FiniteType("F4", 4)).num_reflections == 24
    assert catalog(FiniteType("H3", 3)).num_reflections == 15
    assert catalog(FiniteType("H4", 4)).num_reflections == 60
    assert catalog(FiniteType("I2", 2, 11)).num_reflections == 11


def test_catalog_centerless_table():
    assert not catalog(FiniteType("A", 1)).centerless
    assert catalog(FiniteType("A", 2)).centerless
    assert catalog(FiniteType("A", 6)).centerless
    assert catalog(FiniteType("D", 5)).centerless
    assert not catalog(FiniteType("D", 6)).centerless
    assert catalog(FiniteType("E6", 6)).centerless
    assert not catalog(FiniteType("E7", 7)).centerless
    assert not catalog(FiniteType("E8", 8)).centerless
    assert not catalog(FiniteType("B", 4)).centerless
    assert not catalog(FiniteType("F4", 4)).centerless
    assert not catalog(FiniteType("H3", 3)).centerless
    assert not catalog(FiniteType("H4", 4)).centerless
    assert catalog(FiniteType("I2", 2, 5)).centerless
    assert not catalog(FiniteType("I2", 2, 6)).centerless


def test_invalid_types_rejected():
    with pytest.raises(InputError):
        FiniteType("B", 1)
    with pytest.raises(InputError):
        FiniteType("D", 3)
    with pytest.raises(InputError):
        FiniteType("E6", 7)
    with pytest.raises(InputError):
        FiniteType("I2", 2, 2)
    with pytest.raises(InputError):
        FiniteType("G", 2)


def test_is_spherical_basics(a3):
    assert is_spherical(a3, ())
    assert is_spherical(a3, ("a", "b", "c"))
    two_inf = example_matrix("two-points-inf")
    assert not is_spherical(two_inf, ("a", "b"))
    assert is_spherical(two_inf, ("a",))


@settings(max_examples=50, deadline=None)
@given(coxeter_matrices())
def test_sphericity_hereditary(M):
    T = M.generators
    if is_spherical(M, T):
        for k in range(len(T)):
            for sub in combinations(T, k):
                assert is_spherical(M, sub)


def test_oracle_agreement_seeded():
    tally = _Tally("oracle")
    check_classification_oracle(tally, seed=7, samples=120)
    result = tally.result()
    assert result.passed, result.detail


def test_oracle_on_catalog_types():
    for fam, rank, p in (("A", 5, None), ("B", 3, None), ("D", 5, None),
                         ("H4", 4, None), ("I2", 2, 9)):
        t = FiniteType(fam, rank, p)
        M = type_matrix(t)
        assert cosine_positive_definite(M, M.generators)
        assert recognize_finite_type(M, M.generators) is not None
