"""Balanced complexes: color completion and the squarefree theta algebra.

A proper d-coloring of Gamma gives the coloring forms theta_i (the sum of the
variables of color i).  In B(Gamma), where every x_p^2 vanishes, each
theta_i^2 is zero and a product of distinct theta_i is the sum of the faces
using exactly those colors.  The color completion adds one vertex per color
and produces a shellable complex whose h-vector is (1, f(Gamma)).
"""

import random

from flaggamma import (
    color_completion,
    f_vector,
    find_proper_coloring,
    h_vector,
    polygon,
    shelling_partition_check,
)
from flaggamma.balanced import theta_monomial_in_B, theta_square_in_B
from flaggamma.complex import format_face
from flaggamma.generators import random_balanced_complex

gamma_cx, coloring = random_balanced_complex(random.Random(2024), max_vertices=8, max_d=3)
print("Gamma:", gamma_cx.facet_lists())
print("coloring:", coloring.colors)

for i in range(1, coloring.d + 1):
    print(f"theta_{i}^2 =", theta_square_in_B(gamma_cx, coloring, i) or 0)
prod = theta_monomial_in_B(gamma_cx, coloring, [1, 2])
print("theta_1 theta_2 =", " + ".join(format_face(m) for m in sorted(prod)) or 0)

completed = color_completion(gamma_cx, coloring, coloring.d)
print("\nf(Gamma) =", list(f_vector(gamma_cx)))
print("h(C(Gamma)) =", list(h_vector(completed.complex)))
print("shelling verified:", shelling_partition_check(completed))

# C5 has no proper 2-coloring, so it is not balanced
print("\n2-coloring of C5:", find_proper_coloring(polygon(5), 2))
