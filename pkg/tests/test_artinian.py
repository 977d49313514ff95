import random
from fractions import Fraction
from itertools import combinations_with_replacement

import pytest

from conftest import dense_rank
from flaggamma import SimplicialComplex, cross_polytope_boundary, join, polygon, simplex
from flaggamma.artinian import (
    GradedQuotient,
    artinian_dims,
    edge_partition_check,
    is_lsop,
    partition_of_unity_check,
    random_lsop,
    restriction_map,
)
from flaggamma.balanced import Coloring, coloring_lsop, find_proper_coloring
from flaggamma.complex import face
from flaggamma.invariants import h_vector


def full_monomial_dims(k, forms):
    """Hilbert function of k[K]/(θ) using every monomial, squares included.

    Degree-j monomials that survive in k[K] are those supported on a face;
    the relation space is spanned by θ_i · m over degree-(j-1) monomials m.
    """
    verts = k.vertices
    faces = k.face_set
    out = []
    for j in range(k.dim + 2):
        basis = [m for m in combinations_with_replacement(verts, j) if face(m) in faces]
        index = {m: i for i, m in enumerate(basis)}
        rows = []
        for m in combinations_with_replacement(verts, j - 1) if j else []:
            for form in forms:
                row = [Fraction(0)] * len(basis)
                for v, c in form.items():
                    key = tuple(sorted(m + (v,)))
                    if key in index:
                        row[index[key]] += c
                rows.append(row)
        out.append(len(basis) - (dense_rank(rows) if rows and basis else 0))
    return out


def octahedron_coloring(k):
    return Coloring({v: (v - 1) % 3 + 1 for v in k.vertices}, 3)


class TestLsop:
    def test_octahedron_coloring(self, octahedron):
        assert is_lsop(octahedron, coloring_lsop(octahedron, octahedron_coloring(octahedron))) == (True, None)

    def test_zero_forms(self, pentagon):
        ok, bad = is_lsop(pentagon, [{}, {}])
        assert not ok and bad in pentagon.facets

    def test_square_degenerate(self):
        forms = [{1: Fraction(1), 3: Fraction(1)}] * 2
        assert not is_lsop(polygon(4), forms)[0]

    def test_wrong_count(self, pentagon):
        with pytest.raises(ValueError):
            is_lsop(pentagon, [{}])

    def test_random_is_seeded(self, pentagon):
        assert random_lsop(pentagon, 5) == random_lsop(pentagon, 5)
        assert is_lsop(pentagon, random_lsop(pentagon, 5))[0]
        assert all(abs(c) <= 1000 for f in random_lsop(pentagon, 1) for c in f.values())

    def test_not_lsop_rejected(self):
        with pytest.raises(ValueError, match="l.s.o.p."):
            GradedQuotient(polygon(4), [{1: Fraction(1), 3: Fraction(1)}] * 2)


class TestDims:
    def test_square_coloring(self):
        k = polygon(4)
        assert artinian_dims(k, coloring_lsop(k, find_proper_coloring(k, 2))) == [1, 2, 1]

    def test_octahedron(self, octahedron):
        assert artinian_dims(octahedron, coloring_lsop(octahedron, octahedron_coloring(octahedron))) == [1, 3, 3, 1]

    def test_full_simplex(self):
        k = simplex([1, 2, 3])
        assert artinian_dims(k, random_lsop(k, 0)) == [1, 0, 0, 0]

    @pytest.mark.parametrize(
        "k",
        [polygon(4), polygon(5), cross_polytope_boundary(3), SimplicialComplex.from_facets([[1, 2, 3], [3, 4]]),
         SimplicialComplex.from_facets([[1, 2], [3, 4], [2, 3]])],
        ids=["C4", "C5", "octahedron", "triangle+edge", "path"],
    )
    @pytest.mark.parametrize("seed", [0, 1])
    def test_matches_full_monomial_oracle(self, k, seed):
        forms = random_lsop(k, seed, bound=5, attempts=64)
        assert GradedQuotient(k, forms).dims == full_monomial_dims(k, forms)

    def test_independent_of_lsop(self):
        k = join(polygon(4), polygon(5))
        rng = random.Random(11)
        dims = {tuple(artinian_dims(k, random_lsop(k, rng))) for _ in range(3)}
        assert dims == {tuple(h_vector(k))}

    def test_basis_and_coordinates(self, octahedron):
        q = GradedQuotient(octahedron, random_lsop(octahedron, 2))
        assert len(q.basis(1)) == 3
        b = q.basis(2)[0]
        assert q.coordinates(2, {b: Fraction(5)}) == [Fraction(5) if h == b else 0 for h in q.basis(2)]


class TestRestriction:
    def test_square_vertex(self):
        k = polygon(4)
        m = restriction_map(k, random_lsop(k, 0), 1, 1)
        assert m.shape == (1, 2) and m.rank() == 1

    def test_degree_zero(self, pentagon):
        m = restriction_map(pentagon, random_lsop(pentagon, 0), 3, 0)
        assert m.rows == [[Fraction(1)]]

    def test_octahedron(self, octahedron):
        m = restriction_map(octahedron, random_lsop(octahedron, 0), 1, 1)
        assert m.shape == (2, 3) and m.rank() == 2
        assert m.dump().startswith("degree 1\n")

    def test_not_a_vertex(self, pentagon):
        with pytest.raises(ValueError, match="not a vertex"):
            restriction_map(pentagon, random_lsop(pentagon, 0), 9, 1)


class TestPartitionOfUnity:
    def test_square(self):
        k = polygon(4)
        ok, r, dims = partition_of_unity_check(k, random_lsop(k, 0), 1)
        assert ok and r == 2 and sum(dims["targets"]) == 4

    @pytest.mark.parametrize("deg", [0, 1, 2])
    def test_octahedron(self, octahedron, deg):
        ok, r, dims = partition_of_unity_check(octahedron, random_lsop(octahedron, 3), deg)
        assert ok and r == dims["source"]

    def test_degree_range(self, pentagon):
        with pytest.raises(ValueError):
            partition_of_unity_check(pentagon, random_lsop(pentagon, 0), 2)

    def test_edge_level(self, octahedron):
        forms = random_lsop(octahedron, 0)
        assert edge_partition_check(octahedron, forms, 0) == (True, 1)
        assert edge_partition_check(octahedron, forms, 1) == (True, 3)
        with pytest.raises(ValueError):
            edge_partition_check(octahedron, forms, 2)

    def test_edge_level_square_join(self):
        k = join(polygon(4), polygon(4))
        assert edge_partition_check(k, random_lsop(k, 0), 1)[0]

    def test_edge_level_needs_flag(self):
        k = SimplicialComplex.from_facets([[1, 2], [2, 3], [1, 3]])
        with pytest.raises(ValueError, match="flag"):
            edge_partition_check(k, random_lsop(k, 0), 0)
