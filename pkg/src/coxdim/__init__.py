"""coxdim: action-dimension bounds for Artin groups from Coxeter data.

Pipeline: a Coxeter matrix determines a nerve (the complex of spherical
subsets), its nested-set subdivision indexes the standard free abelian
subgroups of the Artin group, and the homology of the nerve drives lower
and upper bounds for the action dimension.  Everything is desk scale and
deterministic; the `verify` module recomputes the structural facts the
bounds rest on.
"""

from .coxeter import INF, CoxeterMatrix, Diagram, parse_coxeter_matrix, serialize_coxeter_matrix
from .classify import CatalogEntry, FiniteType, catalog, is_spherical, recognize_finite_type
from .roots import (
    ArtinWord, DeltaWords, LongestElement, Root,
    bilinear_form, choose_r, delta_words, epsilon_r_word, longest_element, positive_roots,
)
from .complexes import (
    SimplicialComplex, is_flag, nerve, nested_oracle, octahedralize, s_oslash, subdivide,
)
from .homology import (
    GF2Matrix, IntMatrix, TopCohomology,
    boundary_matrix, integral_cohomology_top, reduced_betti_mod2, smith_form, smith_normal_form,
)
from .abelian import (
    ReflectionIndex, StandardAbelianComplex, StandardAbelianSubgroup,
    e_vector, j_matrix, lattice_intersection_check, reflection_index, standard_abelian_subgroup,
)
from .report import ActdimReport, action_dimension_report, kpi1_sufficient, spherical_actdim
from .library import BUILTIN_EXAMPLES, generate_example
from .errors import InputError, LemmaViolation

__version__ = "0.1.0"

__all__ = [
    "INF", "CoxeterMatrix", "Diagram", "parse_coxeter_matrix", "serialize_coxeter_matrix",
    "CatalogEntry", "FiniteType", "catalog", "is_spherical", "recognize_finite_type",
    "ArtinWord", "DeltaWords", "LongestElement", "Root",
    "bilinear_form", "choose_r", "delta_words", "epsilon_r_word", "longest_element", "positive_roots",
    "SimplicialComplex", "is_flag", "nerve", "nested_oracle", "octahedralize", "s_oslash", "subdivide",
    "GF2Matrix", "IntMatrix", "TopCohomology",
    "boundary_matrix", "integral_cohomology_top", "reduced_betti_mod2", "smith_form", "smith_normal_form",
    "ReflectionIndex", "StandardAbelianComplex", "StandardAbelianSubgroup",
    "e_vector", "j_matrix", "lattice_intersection_check", "reflection_index", "standard_abelian_subgroup",
    "ActdimReport", "action_dimension_report", "kpi1_sufficient", "spherical_actdim",
    "BUILTIN_EXAMPLES", "generate_example",
    "InputError", "LemmaViolation",
]
