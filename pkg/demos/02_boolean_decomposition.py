"""Boolean decompositions.

Given a gamma vector g and degree d, build a complex Gamma from a compression
complex S (with f(S) equal to the tail of g) and an ordered set B of d extra
vertices: Gamma consists of the sets F u G with F in S and G inside the first
d - 2|F| elements of B.  Then f(Gamma) equals the h-vector of any flag sphere
with gamma vector g, and the decomposition can be read back from Gamma alone.
"""

from flaggamma import (
    DecompositionError,
    build_gamma_complex,
    extract_boolean_decomposition,
    f_vector,
    h_vector,
    join,
    polygon,
    verify_gamma_interpretation,
)

# the pentagon: gamma = (1, 1), so S is one point and B has two vertices
gamma_cx, dec = build_gamma_complex((1, 1), 2)
print("Gamma for C5:", gamma_cx.facet_lists(), "Boolean order", dec.boolean_order)
print("f(Gamma) =", list(f_vector(gamma_cx)), " h(C5) =", list(h_vector(polygon(5))))
print("gamma interpretation holds:", verify_gamma_interpretation(polygon(5), dec))

# a four-dimensional example
delta = join(polygon(5), polygon(6))
gamma_cx, dec = build_gamma_complex((1, 3, 2), 4)
back = extract_boolean_decomposition(gamma_cx, 4)
print("\nC5 * C6:", back.report())
print("gamma interpretation holds:", verify_gamma_interpretation(delta, back))

# not every complex decomposes; failures are structured
try:
    extract_boolean_decomposition(polygon(4), 2)
except DecompositionError as exc:
    print("\nthe 4-gon as Gamma:", exc.report())
