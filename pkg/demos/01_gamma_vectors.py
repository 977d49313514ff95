"""From faces to gamma vectors.

A flag sphere's h-vector is palindromic, so it can be rewritten in the basis
x^i (1+x)^(d-2i).  The coefficients are the gamma vector.  This script walks
through polygons, the octahedron and joins, and checks the homology along the
way.
"""

from flaggamma import (
    cross_polytope_boundary,
    f_vector,
    gamma_from_h,
    h_vector,
    homology_ranks,
    is_flag,
    is_homology_sphere,
    join,
    polygon,
)
from flaggamma.invariants import charney_davis_gamma_top, convolve


def show(name, k):
    h = h_vector(k)
    print(f"{name:>12}: f={list(f_vector(k))} h={list(h)} gamma={list(gamma_from_h(h))}"
          f" flag={is_flag(k)[0]} betti={homology_ranks(k)} sphere={is_homology_sphere(k)}")


for n in (4, 5, 6, 9):
    show(f"C{n}", polygon(n))
show("octahedron", cross_polytope_boundary(3))

# gamma vectors multiply under joins
a, b = polygon(5), polygon(7)
show("C5 * C7", join(a, b))
print("convolution of the factors:", convolve([1, 1], [1, 3]))

# the top entry for even d is the Charney-Davis quantity (-1)^(d/2) h(-1)
print("Charney-Davis for C5 * C7:", charney_davis_gamma_top(h_vector(join(a, b))))
