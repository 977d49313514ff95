import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import closure, complexes, mask_set, powerset
from flaggamma.complex import (
    CapacityError,
    FacetParseError,
    SimplicialComplex,
    boundary,
    clique_complex,
    face,
    format_face,
    format_facets,
    induced_subcomplex,
    is_flag,
    join,
    link,
    link_intersection_check,
    minimal_nonfaces,
    parse_facets,
    point_complex,
    shadow,
    subfaces,
    vertices_of,
)


def faces_as_sets(k):
    return {mask_set(m) for m in k.faces()}


class TestFaces:
    def test_face_roundtrip(self):
        assert vertices_of(face([3, 1, 5])) == (1, 3, 5)
        assert face([]) == 0

    def test_capacity(self):
        with pytest.raises(CapacityError):
            face([64])
        with pytest.raises(ValueError):
            face([-1])

    def test_subfaces_and_boundary(self):
        m = face([1, 2, 3])
        assert {mask_set(s) for s in subfaces(m)} == {frozenset(s) for s in powerset([1, 2, 3])}
        assert [vertices_of(b) for b in boundary(m)] == [(2, 3), (1, 3), (1, 2)]
        assert shadow([face([1, 2]), face([2, 3])]) == {face([1]), face([2]), face([3])}

    def test_format(self):
        assert format_face(face([4, 2])) == "{2,4}"


class TestComplex:
    def test_empty_face_complex(self):
        k = point_complex()
        assert k.dim == -1
        assert list(k.faces()) == [0]

    def test_void_rejected(self):
        with pytest.raises(ValueError):
            SimplicialComplex([])

    def test_facets_are_maximal(self):
        k = SimplicialComplex.from_facets([[1, 2], [1], [2, 3], [1, 2]])
        assert k.facet_lists() == [[1, 2], [2, 3]]

    def test_from_faces(self):
        k = SimplicialComplex.from_faces([face(s) for s in powerset([1, 2, 3])])
        assert k.facet_lists() == [[1, 2, 3]]

    def test_revlex_face_order(self):
        k = SimplicialComplex.from_facets([[1, 2, 3]])
        assert [vertices_of(m) for m in k.faces_of_size(2)] == [(1, 2), (1, 3), (2, 3)]

    def test_link_star(self, octahedron):
        lk = octahedron.link(face([1]))
        assert lk.num_vertices == 4 and lk.dim == 1
        st_ = octahedron.star(face([1]))
        assert st_.num_faces(3) == 4
        with pytest.raises(ValueError, match="not a face"):
            octahedron.link(face([1, 4]))

    def test_relabel_and_eq(self, pentagon):
        assert pentagon.shift(10).vertices == tuple(range(11, 16))
        assert pentagon == SimplicialComplex.from_facets(pentagon.facet_lists())
        assert hash(pentagon) == hash(pentagon.shift(0))

    @given(complexes())
    def test_faces_match_closure(self, facets):
        k = SimplicialComplex.from_facets(facets)
        assert faces_as_sets(k) == closure(facets)
        for size in range(6):
            assert k.num_faces(size) == sum(1 for s in closure(facets) if len(s) == size)

    @given(complexes(), st.data())
    def test_link_definition(self, facets, data):
        k = SimplicialComplex.from_facets(facets)
        f = data.draw(st.sampled_from(sorted(k.faces())))
        fs = mask_set(f)
        expected = {g - fs for g in closure(facets) if fs <= g}
        assert faces_as_sets(link(k, f)) == expected
        star = {g for g in closure(facets) if any(fs | g <= h for h in closure(facets))}
        assert faces_as_sets(k.star(f)) == star

    @given(complexes(), st.sets(st.integers(0, 7)))
    def test_induced_definition(self, facets, w):
        k = SimplicialComplex.from_facets(facets)
        expected = {g for g in closure(facets) if g <= w}
        assert faces_as_sets(induced_subcomplex(k, face(w))) == expected


class TestFlag:
    def test_square_is_flag(self):
        ok, nonfaces = is_flag(SimplicialComplex.from_facets([[1, 2], [2, 3], [3, 4], [1, 4]]))
        assert ok
        assert sorted(vertices_of(m) for m in nonfaces) == [(1, 3), (2, 4)]

    def test_hollow_triangle(self):
        ok, nonfaces = is_flag(SimplicialComplex.from_facets([[1, 2], [2, 3], [1, 3]]))
        assert not ok
        assert [vertices_of(m) for m in nonfaces] == [(1, 2, 3)]

    @given(complexes(max_vertex=6))
    def test_minimal_nonfaces_brute_force(self, facets):
        k = SimplicialComplex.from_facets(facets)
        faces = closure(facets)
        verts = sorted(set().union(*faces))
        brute = {
            frozenset(s)
            for s in powerset(verts)
            if frozenset(s) not in faces and all(frozenset(s) - {v} in faces for v in s)
        }
        assert {mask_set(m) for m in minimal_nonfaces(k)} == brute
        assert is_flag(k)[0] == all(len(s) == 2 for s in brute)

    @given(complexes(max_vertex=6))
    def test_clique_complex_of_skeleton(self, facets):
        k = SimplicialComplex.from_facets(facets)
        edges = [vertices_of(e) for e in k.edges()]
        cl = clique_complex(k.vertices, edges)
        assert (cl == k) == is_flag(k)[0]

    def test_link_intersection(self, octahedron):
        assert link_intersection_check(octahedron) == (True, None)
        ok, edge = link_intersection_check(SimplicialComplex.from_facets([[1, 2], [2, 3], [1, 3]]))
        assert not ok and edge is not None


class TestJoin:
    @given(complexes(max_vertex=4, max_facets=3), complexes(max_vertex=4, max_facets=3))
    def test_face_polynomial_multiplies(self, a, b):
        ka, kb = SimplicialComplex.from_facets(a), SimplicialComplex.from_facets(b)
        j = join(ka, kb)

        def poly(k):
            return [k.num_faces(i) for i in range(k.dim + 2)]

        pa, pb = poly(ka), poly(kb)
        prod = [0] * (len(pa) + len(pb) - 1)
        for i, x in enumerate(pa):
            for t, y in enumerate(pb):
                prod[i + t] += x * y
        assert poly(j) == prod


class TestFacetFormat:
    def test_roundtrip(self, pentagon):
        assert parse_facets(format_facets(pentagon)) == pentagon

    def test_comments_and_empty(self):
        k = parse_facets("# a comment\n\n1 2  # edge\n3\n")
        assert k.facet_lists() == [[1, 2], [3]]
        assert parse_facets("-\n").dim == -1

    def test_errors_carry_line_numbers(self):
        with pytest.raises(FacetParseError) as exc:
            parse_facets("1 2\n3 x\n")
        assert exc.value.lineno == 2
        with pytest.raises(FacetParseError, match="line 1"):
            parse_facets("70\n")
        with pytest.raises(FacetParseError):
            parse_facets("# nothing\n")
