"""From a Coxeter matrix to its nerve.

A Coxeter matrix assigns each pair of generators a label m >= 2 or
infinity.  Subsets whose group is finite ("spherical" subsets) form a
simplicial complex, the nerve; its shape controls everything downstream.
"""

from coxdim import generate_example, nerve, parse_coxeter_matrix

# The 3-generator path with labels 3 presents the symmetric group S4.
M = parse_coxeter_matrix(generate_example("a_3"))
print("generators:", M.generators)
print("labels:", {(s, t): M.label(s, t) for s in M.generators for t in M.generators if s < t})
print("diagram edges:", M.diagram().edge_list())

L = nerve(M)
print("\nnerve face counts by dimension:", L.f_vector())
print("the whole generating set is a face:", L.has_face(("a", "b", "c")))

# With infinite labels the nerve loses faces: a 4-cycle of commuting pairs
# with infinite diagonals gives a hollow square.
raag = parse_coxeter_matrix(generate_example("raag-cycle-4"))
print("\nright-angled 4-cycle nerve:", nerve(raag).f_vector())
print("diagonal pair is a face:", nerve(raag).has_face(("a", "c")))

# Three generators with all labels 3 present an affine group: every pair is
# spherical but the whole triple is not, so the nerve is a hollow triangle.
affine = parse_coxeter_matrix(generate_example("affine-triangle"))
print("\naffine triangle nerve:", nerve(affine).f_vector())
