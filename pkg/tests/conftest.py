import pytest
from hypothesis import strategies as st

from coxdim import INF, CoxeterMatrix, generate_example, parse_coxeter_matrix


def example_matrix(name: str) -> CoxeterMatrix:
    return parse_coxeter_matrix(generate_example(name))


@pytest.fixture
def a3():
    return example_matrix("a_3")


@st.composite
def coxeter_matrices(draw, max_generators=5, labels=(2, 2, 2, 3, 3, 4, 5, INF, INF)):
    """Small random Coxeter matrices, weighted toward 2/3/inf labels."""
    n = draw(st.integers(min_value=1, max_value=max_generators))
    gens = [f"g{i}" for i in range(n)]
    rels = {}
    for i in range(n):
        for j in range(i + 1, n):
            rels[(gens[i], gens[j])] = draw(st.sampled_from(labels))
    return CoxeterMatrix.from_relations(gens, rels)
