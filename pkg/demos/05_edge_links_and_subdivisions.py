"""Edge links and the barycentric subdivision of the 4-simplex boundary.

Edge links of a flag sphere are flag spheres of dimension two less; their
h-vectors sit below h of the whole sphere.  The subdivided boundary of the
4-simplex has gamma = (1, 22, 16), and the tail (22, 16) is a valid f-vector,
so the whole construction runs end to end.
"""

from flaggamma import (
    barycentric_subdivision,
    build_gamma_complex,
    edge_link_survey,
    extract_boolean_decomposition,
    gamma_from_h,
    h_vector,
    join,
    polygon,
    simplex_boundary,
    verify_gamma_interpretation,
)

rep = edge_link_survey(join(polygon(5), polygon(5)))
print("C5 * C5 survey ok:", rep.ok, " cover reached per k:", rep.cover_reached_per_k)
print("distinct edge-link h-vectors:", sorted({tuple(e.h_link) for e in rep.edges}))

sd = barycentric_subdivision(simplex_boundary(5))
h = h_vector(sd)
g = gamma_from_h(h)
print("\nsd of the 4-simplex boundary: h =", list(h), " gamma =", list(g))
gamma_cx, _ = build_gamma_complex(g, 4)
dec = extract_boolean_decomposition(gamma_cx, 4)
print("S has facets:", dec.gamma_complex.facet_lists())
print("gamma interpretation holds:", verify_gamma_interpretation(sd, dec))
