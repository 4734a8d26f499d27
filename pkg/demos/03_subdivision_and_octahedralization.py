"""The nested-set subdivision and vertex doubling.

The subdivision's vertices are the irreducible spherical subsets; two are
joined when comparable or orthogonal, and faces are the cliques.  The same
complex is also cut out by an inductive "nested family" definition, checked
here on a few families.  Octahedralization doubles every vertex with a
sign, turning each k-face into 2^(k+1) faces.
"""

from coxdim import (
    generate_example, is_flag, nerve, nested_oracle, octahedralize,
    parse_coxeter_matrix, s_oslash, subdivide,
)

M = parse_coxeter_matrix(generate_example("a_3"))

print("irreducible spherical subsets:")
for T in s_oslash(M):
    print("  ", T)

sub = subdivide(M)
print("\nsubdivision face counts:", sub.f_vector())
print("flag complex:", is_flag(sub))
print("same Euler characteristic as the nerve:",
      sub.euler_characteristic() == nerve(M).euler_characteristic())

print("\nnested-family oracle:")
for family in ([], [("a",), ("b",)], [("a",), ("c",)], [("a",), ("c",), ("a", "b", "c")]):
    print(f"  {family!r:45} -> {nested_oracle(M, family)}")

OK = octahedralize(sub)
print("\ndoubled subdivision face counts:", OK.f_vector())
expected = tuple(len(sub.faces(k)) * 2 ** (k + 1) for k in range(sub.dim + 1))
print("matches the 2^(k+1) formula:", OK.f_vector() == expected)

# The pentagon with labels 3: its subdivision is the decagon.
pent = parse_coxeter_matrix(generate_example("pentagon-3"))
print("\npentagon subdivision:", subdivide(pent).f_vector())
