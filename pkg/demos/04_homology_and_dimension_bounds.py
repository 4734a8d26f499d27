"""Homology of the nerve and the assembled dimension bounds.

Reduced mod-2 Betti numbers gate the obstructor lower bound 2d+2; integral
top cohomology gates the conditional upper-bound refinement 2d+1.  The
report combines them with the exact spherical formula.
"""

import json

from coxdim import (
    action_dimension_report, generate_example, integral_cohomology_top,
    nerve, parse_coxeter_matrix, reduced_betti_mod2,
)

for name in ("a_3", "e8", "raag-cycle-4", "pentagon-3", "two-points-inf",
             "affine-triangle", "rp2-nerve"):
    M = parse_coxeter_matrix(generate_example(name))
    L = nerve(M)
    r = action_dimension_report(M)
    print(f"{name}: dim L = {r.d}, reduced mod-2 Betti {reduced_betti_mod2(L)}, "
          f"top integral cohomology {integral_cohomology_top(L)}")
    lo, up, exact = r.actdim_lower.value, r.actdim_upper.value, r.actdim_exact.value
    print(f"    K(pi,1): {r.kpi1_status}; action dimension in [{lo}, {up}], exact = {exact}")
    if r.notes:
        print("    note:", r.notes[0])

# The projective-plane nerve is the interesting case: torsion in top
# cohomology blocks the 2d+1 refinement even though integral top homology
# vanishes, while the mod-2 cycle still forces the lower bound 2d+2.
M = parse_coxeter_matrix(generate_example("rp2-nerve"))
print("\nfull report for the projective-plane nerve:")
print(json.dumps(action_dimension_report(M).to_dict(), indent=2, sort_keys=True))
