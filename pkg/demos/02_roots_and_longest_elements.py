"""Positive roots, reflection words, and longest elements.

Every finite special subgroup acts on simple-root coordinates; closing the
simple roots under the action enumerates the positive roots, one per
reflection, each carrying a palindromic reduced word.  The longest element
comes from a greedy ascent and induces a diagram involution whose
(non)triviality decides whether the group has trivial center.
"""

from coxdim import (
    catalog, delta_words, epsilon_r_word, generate_example, longest_element,
    parse_coxeter_matrix, positive_roots, recognize_finite_type,
)

M = parse_coxeter_matrix(generate_example("b_3"))
T = M.generators
t = recognize_finite_type(M, T)
print(f"type {t}: expecting {catalog(t).num_reflections} reflections")

for root in positive_roots(M, T):
    coeffs = tuple(round(c, 3) for c in root.coeffs)
    print(f"  {coeffs}  word={'-'.join(root.word)}")

w0 = longest_element(M, T)
print("\nlongest element length:", w0.length)
print("diagram involution:", w0.involution)
print("centerless per catalog:", catalog(t).centerless)

# The central Artin word: the lift of the longest element, squared when the
# involution is nontrivial.
for name in ("a_2", "i2_4", "h3"):
    Mx = parse_coxeter_matrix(generate_example(name))
    d = delta_words(Mx, Mx.generators)
    kind = "half twist itself" if d.half_twist_central else "square of the half twist"
    print(f"{name}: center generated by the {kind}, word length {len(d.center)}")

# Loop words: each reflection r = w s w^-1 lifts to a conjugated squared
# generator, the class generating one coordinate of the abelianization.
a2 = parse_coxeter_matrix(generate_example("a_2"))
for root in positive_roots(a2, ("a", "b")):
    eps = epsilon_r_word(root)
    pretty = " ".join(f"{g}^{e:+d}" for g, e in eps.letters)
    print(f"loop word for {'-'.join(root.word)}:  {pretty}")
