"""Artinian reductions and the partition of unity.

For a sphere K of dimension d - 1 and a linear system of parameters theta,
the quotient k[K]/(theta) has graded dimensions equal to h(K).  Restricting
to vertex stars gives maps that are jointly injective below the top degree.
All ranks here are exact over the rationals.
"""

from flaggamma import (
    GradedQuotient,
    coloring_lsop,
    cross_polytope_boundary,
    edge_partition_check,
    find_proper_coloring,
    h_vector,
    join,
    partition_of_unity_check,
    polygon,
    random_lsop,
    restriction_map,
)
from flaggamma.complex import format_face

octa = cross_polytope_boundary(3)
forms = coloring_lsop(octa, find_proper_coloring(octa, 3))
q = GradedQuotient(octa, forms)
print("octahedron dims:", q.dims, " h:", list(h_vector(octa)))
print("basis of degree 1:", [format_face(m) for m in q.basis(1)])

print("\nrestriction to the star of vertex 1 in degree 1:")
print(restriction_map(q, None, 1, 1).dump())

k = join(polygon(4), polygon(5))
forms = random_lsop(k, seed=1)
print("C4 * C5 dims with a random l.s.o.p.:", GradedQuotient(k, forms).dims)
for deg in range(4):
    ok, rank, dims = partition_of_unity_check(k, forms, deg)
    print(f"  degree {deg}: injective={ok} rank={rank} source={dims['source']}")
for deg in range(3):
    print(f"  edge level, degree {deg}:", edge_partition_check(k, forms, deg))
