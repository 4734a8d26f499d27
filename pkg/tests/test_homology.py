import random

import pytest
from hypothesis import given, settings, strategies as st

from coxdim import (
    IntMatrix, SimplicialComplex, boundary_matrix, integral_cohomology_top,
    nerve, reduced_betti_mod2, smith_form, smith_normal_form, subdivide,
)
from coxdim.errors import InputError
from coxdim.library import RP2_SIX_VERTEX_FACES

from conftest import coxeter_matrices, example_matrix


def rp2_complex():
    return SimplicialComplex(tuple(range(6)), RP2_SIX_VERTEX_FACES)


def octahedron():
    simplex = SimplicialComplex("abc", [(0, 1, 2)])
    from coxdim import octahedralize
    return octahedralize(simplex)


def test_boundary_edge_gf2():
    K = SimplicialComplex("ab", [(0, 1)])
    B = boundary_matrix(K, 1, "gf2")
    assert B.ncols == 1 and B.rows == [1, 1]


def test_boundary_triangle_integer_signs():
    K = SimplicialComplex("abc", [(0, 1), (1, 2), (0, 2)])
    B = boundary_matrix(K, 1, "int")
    for j in range(3):
        assert sum(row[j] for row in B.entries) == 0
    assert sorted(abs(x) for row in B.entries for x in row if x) == [1] * 6


def test_boundary_octahedron_column_weight():
    B = boundary_matrix(octahedron(), 2, "gf2")
    assert B.ncols == 8 and len(B.rows) == 12
    for j in range(8):
        assert sum((row >> j) & 1 for row in B.rows) == 3


@settings(max_examples=30, deadline=None)
@given(coxeter_matrices(max_generators=4))
def test_boundary_squared_is_zero(M):
    K = subdivide(M)
    for k in range(1, K.dim + 1):
        Bk = boundary_matrix(K, k, "int")
        Bk1 = boundary_matrix(K, k - 1, "int", augmented=(k == 1))
        for j in range(Bk.ncols):
            col = Bk.column(j)
            assert all(v == 0 for v in Bk1.mat_vec(col))


def test_reduced_betti_examples():
    point = SimplicialComplex("a", [])
    assert reduced_betti_mod2(point) == [0]

    cycle = SimplicialComplex("abcd", [(0, 1), (1, 2), (2, 3), (0, 3)])
    assert reduced_betti_mod2(cycle) == [0, 1]

    assert reduced_betti_mod2(octahedron()) == [0, 0, 1]

    with pytest.raises(InputError):
        reduced_betti_mod2(SimplicialComplex((), ()))


def test_smith_normal_form_examples():
    assert smith_normal_form(IntMatrix([[1, 0], [0, 1]])) == [1, 1]
    assert smith_normal_form(IntMatrix([[2, 0], [0, 3]])) == [1, 6]
    assert smith_normal_form(IntMatrix([[0, 0], [0, 0]])) == []


def _det(mat):
    n = len(mat)
    if n == 0:
        return 1
    total = 0
    import itertools
    for perm in itertools.permutations(range(n)):
        sign = 1
        seen = list(perm)
        for i in range(n):
            for j in range(i + 1, n):
                if seen[i] > seen[j]:
                    sign = -sign
        prod = 1
        for i in range(n):
            prod *= mat[i][perm[i]]
        total += sign * prod
    return total


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2 ** 32))
def test_smith_form_properties(seed):
    rng = random.Random(seed)
    m, n = rng.randint(1, 4), rng.randint(1, 4)
    A = IntMatrix([[rng.randint(-6, 6) for _ in range(n)] for _ in range(m)])
    sf = smith_form(A)
    # U A V equals the diagonal of invariant factors
    prod = [[sum(sf.U[i][k] * A.entries[k][j] for k in range(m)) for j in range(n)] for i in range(m)]
    prod = [[sum(prod[i][k] * sf.V[k][j] for k in range(n)) for j in range(n)] for i in range(m)]
    for i in range(m):
        for j in range(n):
            expected = sf.factors[i] if i == j and i < sf.rank else 0
            assert prod[i][j] == expected
    assert abs(_det(sf.U)) == 1
    assert abs(_det(sf.V)) == 1
    for a, b in zip(sf.factors, sf.factors[1:]):
        assert b % a == 0 and a > 0
    assert smith_normal_form(A.transpose()) == sf.factors


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 2 ** 32))
def test_smith_solve_and_kernel(seed):
    rng = random.Random(seed)
    m, n = rng.randint(1, 4), rng.randint(1, 4)
    A = IntMatrix([[rng.randint(-5, 5) for _ in range(n)] for _ in range(m)])
    sf = smith_form(A)
    x = [rng.randint(-3, 3) for _ in range(n)]
    assert sf.solve(A.mat_vec(x))
    for basis_vec in sf.kernel_basis():
        assert all(v == 0 for v in A.mat_vec(basis_vec))
    if sf.rank < m:
        # a vector outside the column span: extend by a unit off the image
        target = A.mat_vec(x)
        # perturb in a coordinate direction until unsolvable or give up
        for i in range(m):
            bumped = list(target)
            bumped[i] += 1
            if not sf.solve(bumped):
                break


def test_integral_cohomology_top_examples():
    tree = SimplicialComplex("abc", [(0, 1), (1, 2)])
    top = integral_cohomology_top(tree)
    assert (top.rank, top.torsion) == (0, ())

    cycle = SimplicialComplex("abcd", [(0, 1), (1, 2), (2, 3), (0, 3)])
    top = integral_cohomology_top(cycle)
    assert (top.rank, top.torsion) == (1, ())

    top = integral_cohomology_top(rp2_complex())
    assert (top.rank, top.torsion) == (0, (2,))


def test_rp2_universal_coefficients_split():
    K = rp2_complex()
    betti = reduced_betti_mod2(K)
    assert betti == [0, 1, 1]
    top = integral_cohomology_top(K)
    # mod-2 top Betti sees the 2-torsion of H^2 even though the integral
    # top homology vanishes
    assert betti[2] == 1 and top.rank == 0 and top.torsion == (2,)


def test_zero_dimensional_top_cohomology():
    two = nerve(example_matrix("two-points-inf"))
    top = integral_cohomology_top(two)
    assert (top.rank, top.torsion) == (1, ())


@settings(max_examples=25, deadline=None)
@given(coxeter_matrices(max_generators=4))
def test_betti_invariance_under_subdivision(M):
    assert reduced_betti_mod2(nerve(M)) == reduced_betti_mod2(subdivide(M))


@settings(max_examples=25, deadline=None)
@given(coxeter_matrices(max_generators=4))
def test_euler_characteristic_vs_betti(M):
    K = nerve(M)
    betti = reduced_betti_mod2(K)
    assert K.euler_characteristic() == 1 + sum((-1) ** k * b for k, b in enumerate(betti))


@settings(max_examples=20, deadline=None)
@given(coxeter_matrices(max_generators=4))
def test_top_betti_bounds_cohomology_rank(M):
    K = nerve(M)
    betti = reduced_betti_mod2(K)
    top = integral_cohomology_top(K)
    assert betti[K.dim] >= top.rank


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2 ** 32))
def test_smith_factors_match_sympy(seed):
    from sympy import Matrix as SympyMatrix
    from sympy.matrices.normalforms import smith_normal_form as sympy_snf

    rng = random.Random(seed)
    m, n = rng.randint(1, 5), rng.randint(1, 5)
    A = IntMatrix([[rng.randint(-30, 30) for _ in range(n)] for _ in range(m)])
    reference = sympy_snf(SympyMatrix(A.entries))
    diag = [abs(reference[i, i]) for i in range(min(m, n))]
    assert smith_normal_form(A) == [d for d in diag if d != 0]


def _gf2_rank_by_span(rows):
    # the row space of a GF(2) matrix has exactly 2^rank elements
    span = {0}
    for r in rows:
        span |= {x ^ r for x in span}
    return len(span).bit_length() - 1


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2 ** 32))
def test_gf2_rank_matches_span_oracle(seed):
    from coxdim.homology import GF2Matrix

    rng = random.Random(seed)
    m, n = rng.randint(1, 9), rng.randint(1, 9)
    rows = [rng.getrandbits(n) for _ in range(m)]
    assert GF2Matrix(rows, n).rank() == _gf2_rank_by_span(rows)
