import json
import random
from itertools import combinations, product

from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import complexes
from flaggamma import SimplicialComplex, cross_polytope_boundary, polygon
from flaggamma.balanced import (
    Coloring,
    SquarefreeAlgebra,
    coloring_lsop,
    find_proper_coloring,
    is_balanced,
    rainbow_faces,
    theta_monomial_in_B,
    theta_square_in_B,
)
from flaggamma.complex import face, vertices_of
from flaggamma.generators import random_balanced_complex


def brute_colorable(k, d):
    verts = k.vertices
    edges = [vertices_of(e) for e in k.edges()]
    for assignment in product(range(1, d + 1), repeat=len(verts)):
        col = dict(zip(verts, assignment))
        if all(col[a] != col[b] for a, b in edges):
            return True
    return False


def expand_product(k, forms):
    """Multiply linear forms as honest polynomials, then map to B(K) by hand."""
    poly = {(): 1}
    for form in forms:
        nxt = {}
        for mono, c in poly.items():
            for v, a in form.items():
                key = tuple(sorted(mono + (v,)))
                nxt[key] = nxt.get(key, 0) + c * a
        poly = nxt
    out = {}
    faces = k.face_set
    for mono, c in poly.items():
        if len(set(mono)) != len(mono):
            continue  # x_p^2 = 0 in B
        m = face(mono)
        if m in faces and c:
            out[m] = out.get(m, 0) + c
    return {m: c for m, c in out.items() if c}


class TestColoring:
    def test_octahedron(self, octahedron):
        c = find_proper_coloring(octahedron, 3)
        assert c is not None and c.is_proper(octahedron) and is_balanced(octahedron, c)

    def test_pentagon_needs_three(self, pentagon):
        assert find_proper_coloring(pentagon, 2) is None
        assert find_proper_coloring(pentagon, 3).is_proper(pentagon)

    def test_json(self):
        c = Coloring({2: 1, 1: 2}, 2)
        assert json.loads(c.to_json()) == {"d": 2, "colors": {"1": 2, "2": 1}}
        assert Coloring.from_json(c.to_json()) == c

    def test_not_balanced_with_wrong_d(self, pentagon):
        c = find_proper_coloring(pentagon, 3)
        assert not is_balanced(pentagon, c)

    @settings(max_examples=60)
    @given(complexes(max_vertex=6, max_size=3), st.integers(1, 3))
    def test_matches_brute_force(self, facets, d):
        k = SimplicialComplex.from_facets(facets)
        c = find_proper_coloring(k, d)
        assert (c is not None) == brute_colorable(k, d)
        if c is not None:
            assert c.is_proper(k)


class TestSquarefreeAlgebra:
    def test_products(self, pentagon):
        alg = SquarefreeAlgebra(pentagon)
        x1, x2, x3 = (alg.variable(v) for v in (1, 2, 3))
        assert alg.mul(x1, x2) == {face([1, 2]): 1}
        assert alg.mul(x1, x3) == {}
        assert alg.mul(x1, x1) == {}
        assert alg.dim(1) == 5 and alg.dim(2) == 5 and alg.dim(3) == 0
        assert alg.product([]) == alg.one()

    @given(st.integers(0, 5000))
    def test_theta_products_match_expansion(self, seed):
        k, c = random_balanced_complex(random.Random(seed), max_vertices=8, max_d=3)
        forms = coloring_lsop(k, c)
        for i in range(1, c.d + 1):
            assert theta_square_in_B(k, c, i) == {}
        for size in range(1, c.d + 1):
            for colors in combinations(range(1, c.d + 1), size):
                got = theta_monomial_in_B(k, c, colors)
                assert got == expand_product(k, [forms[i - 1] for i in colors])
                assert got == {f: 1 for f in rainbow_faces(k, c, colors)}

    def test_improper_coloring_breaks_squares(self, pentagon):
        c = Coloring({v: 1 if v < 3 else 2 for v in pentagon.vertices}, 2)
        assert not c.is_proper(pentagon)
        assert theta_square_in_B(pentagon, c, 1) == {face([1, 2]): 2}

    def test_repeated_color_vanishes(self, octahedron):
        c = Coloring({v: (v - 1) % 3 + 1 for v in octahedron.vertices}, 3)
        assert theta_monomial_in_B(octahedron, c, [1, 1, 2]) == {}
        assert len(theta_monomial_in_B(octahedron, c, [1, 2, 3])) == 8

    def test_square_polygon(self):
        k = polygon(4)
        c = find_proper_coloring(k, 2)
        assert len(theta_monomial_in_B(k, c, [1, 2])) == 4

    def test_cross_polytope_coloring_lsop(self):
        k = cross_polytope_boundary(2)
        c = Coloring({1: 1, 3: 1, 2: 2, 4: 2}, 2)
        forms = coloring_lsop(k, c)
        assert [sorted(f) for f in forms] == [[1, 3], [2, 4]]
