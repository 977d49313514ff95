"""Artinian reductions of Stanley–Reisner rings over the rationals.

A linear form is a ``dict`` from vertex id to a rational coefficient.  For a
complex ``K`` of dimension ``d - 1`` and ``d`` forms ``θ``, the quotient
``A(K) = k[K] / (θ)`` is computed degree by degree on the squarefree face
monomials ``x^H``, which span it.  Monomials with a repeated variable are first
rewritten into squarefree ones using the forms themselves: on a facet ``F``
containing the support, the forms restricted to ``F`` are invertible, so each
``x_p`` with ``p ∈ F`` is congruent to a combination of variables outside
``F``.  Every such step strictly enlarges the support, so the rewriting ends
in squarefree monomials or zero.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Sequence

from .complex import Face, SimplicialComplex, format_face, is_flag, vertices_of
from .linalg import Echelon, RationalMatrix, Row, dense_rank, solve_left

LinearForm = dict[int, Fraction]
Monomial = tuple[int, ...]  # sorted vertex ids, repeated by exponent


def restrict_form(form: LinearForm, mask: Face) -> LinearForm:
    return {v: c for v, c in form.items() if mask >> v & 1 and c}


def is_lsop(k: SimplicialComplex, forms: Sequence[LinearForm]) -> tuple[bool, Face | None]:
    """Whether ``forms`` restrict to a rank-``|F|`` system on every facet.

    Returns ``(True, None)`` or ``(False, facet)`` for the first failing facet.
    """
    if len(forms) != k.dim + 1:
        raise ValueError(f"need {k.dim + 1} forms, got {len(forms)}")
    for f in k.facets:
        verts = vertices_of(f)
        mat = [[form.get(v, 0) for v in verts] for form in forms]
        if dense_rank(mat) != len(verts):
            return False, f
    return True, None


def random_lsop(
    k: SimplicialComplex,
    seed: int | random.Random = 0,
    bound: int = 1000,
    attempts: int = 16,
) -> list[LinearForm]:
    """Integer forms with coefficients uniform in ``[-bound, bound]``.

    Redrawn up to ``attempts`` times until :func:`is_lsop` accepts them.
    """
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    verts = k.vertices
    for _ in range(attempts):
        forms = [
            {v: Fraction(c) for v in verts if (c := rng.randint(-bound, bound))}
            for _ in range(k.dim + 1)
        ]
        if is_lsop(k, forms)[0]:
            return forms
    raise RuntimeError(f"no l.s.o.p. found in {attempts} draws")


def _monomials_on(face_mask: Face, degree: int) -> list[Monomial]:
    """Monomials of ``degree`` whose support is exactly ``face_mask``."""
    verts = vertices_of(face_mask)
    extra = degree - len(verts)
    if extra < 0:
        return []
    return [tuple(sorted(verts + rest)) for rest in combinations_with_replacement(verts, extra)]


class GradedQuotient:
    """``k[K] / (θ)`` with exact per-degree bases.

    ``basis(j)`` lists the faces ``H`` whose monomials ``x^H`` form the chosen
    basis of the degree ``j`` part; :meth:`coordinates` expresses any
    combination of squarefree face monomials in that basis.
    """

    def __init__(self, complex: SimplicialComplex, forms: Sequence[LinearForm], *, check: bool = True):
        self.complex = complex
        self.forms = [restrict_form(f, complex.vertex_set) for f in forms]
        self.d = complex.dim + 1
        if check:
            ok, bad = is_lsop(complex, self.forms)
            if not ok:
                raise ValueError(f"not an l.s.o.p.: rank drops on facet {format_face(bad)}")
        self._rewrite_cache: dict[Face, dict[int, LinearForm]] = {}
        self._memo: dict[Monomial, Row] = {}
        self._echelons: dict[int, Echelon] = {}
        self._facet_for: dict[Face, Face] = {}

    # -- rewriting ------------------------------------------------------

    def _facet_rewrites(self, facet: Face) -> dict[int, LinearForm]:
        """For ``p`` in ``facet``: ``x_p ≡ Σ c_q x_q`` over ``q`` outside it."""
        cached = self._rewrite_cache.get(facet)
        if cached is not None:
            return cached
        inside = vertices_of(facet)
        rows = [{v: f[v] for v in inside if v in f} for f in self.forms]
        outside = [v for v in self.complex.vertices if not facet >> v & 1]
        out: dict[int, LinearForm] = {}
        for p in inside:
            lam = solve_left(rows, {p: Fraction(1)})
            if lam is None:
                raise ValueError(f"forms are degenerate on facet {format_face(facet)}")
            expr: LinearForm = {}
            for q in outside:
                c = sum((lam[i] * self.forms[i].get(q, 0) for i in range(len(lam))), Fraction(0))
                if c:
                    expr[q] = -c
            out[p] = expr
        self._rewrite_cache[facet] = out
        return out

    def _containing_facet(self, supp: Face) -> Face:
        f = self._facet_for.get(supp)
        if f is None:
            f = next(m for m in self.complex.facets if m & supp == supp)
            self._facet_for[supp] = f
        return f

    def reduce_monomial(self, mono: Monomial) -> Row:
        """Squarefree normal form of a monomial, keyed by face mask."""
        hit = self._memo.get(mono)
        if hit is not None:
            return hit
        supp = 0
        for v in mono:
            supp |= 1 << v
        if supp not in self.complex:
            out: Row = {}
        elif supp.bit_count() == len(mono):
            out = {supp: Fraction(1)}
        else:
            p = next(v for i, v in enumerate(mono) if i + 1 < len(mono) and mono[i + 1] == v)
            i = mono.index(p)
            rest = mono[:i] + mono[i + 1:]
            out = {}
            for q, c in self._facet_rewrites(self._containing_facet(supp))[p].items():
                if supp | (1 << q) not in self.complex:
                    continue
                for h, v in self.reduce_monomial(tuple(sorted(rest + (q,)))).items():
                    nv = out.get(h, 0) + c * v
                    if nv:
                        out[h] = nv
                    else:
                        out.pop(h, None)
        self._memo[mono] = out
        return out

    # -- per-degree quotients ------------------------------------------

    def relations(self, j: int):
        """Squarefree normal forms of ``θ_i · m`` for monomials ``m`` of degree ``j - 1``.

        Largest supports come first: their rows are short and local, so the
        echelon form stays sparse and most later rows reduce to zero cheaply.
        """
        if j <= 0:
            return
        k = self.complex
        for s in range(min(j - 1, k.dim + 1), -1, -1):
            for h in k.faces_of_size(s):
                for mono in _monomials_on(h, j - 1):
                    for form in self.forms:
                        row: dict[Face, Fraction] = {}
                        for p, a in form.items():
                            if h | (1 << p) not in k:
                                continue
                            for g, v in self.reduce_monomial(tuple(sorted(mono + (p,)))).items():
                                nv = row.get(g, 0) + a * v
                                if nv:
                                    row[g] = nv
                                else:
                                    row.pop(g, None)
                        if row:
                            yield row

    def echelon(self, j: int) -> Echelon:
        ech = self._echelons.get(j)
        if ech is None:
            ncols = self.complex.num_faces(j)
            ech = Echelon(ncols)
            if ncols:
                for row in self.relations(j):
                    ech.add(row)
                    if ech.is_full():
                        break
            self._echelons[j] = ech
        return ech

    def dim(self, j: int) -> int:
        return self.complex.num_faces(j) - self.echelon(j).rank

    @property
    def dims(self) -> list[int]:
        return [self.dim(j) for j in range(self.d + 1)]

    def basis(self, j: int) -> list[Face]:
        piv = self.echelon(j).rows
        return [h for h in self.complex.faces_of_size(j) if h not in piv]

    def coordinates(self, j: int, vector: Row) -> list[Fraction]:
        """Coordinates of a squarefree degree-``j`` combination in :meth:`basis`."""
        red = self.echelon(j).reduce({h: v for h, v in vector.items() if h in self.complex})
        return [red.get(h, Fraction(0)) for h in self.basis(j)]


def artinian_dims(k: SimplicialComplex, forms: Sequence[LinearForm]) -> list[int]:
    """Graded dimensions of ``k[K] / (θ)`` in degrees ``0..dim K + 1``."""
    return GradedQuotient(k, forms).dims


def _restriction(src: GradedQuotient, dst: GradedQuotient, j: int) -> RationalMatrix:
    """Matrix of ``A^j(src) → A^j(dst)`` killing monomials outside ``dst``."""
    src_basis = src.basis(j)
    dst_basis = dst.basis(j)
    cols = []
    for h in src_basis:
        cols.append(dst.coordinates(j, {h: Fraction(1)}) if h in dst.complex else [Fraction(0)] * len(dst_basis))
    rows = [[cols[c][r] for c in range(len(src_basis))] for r in range(len(dst_basis))]
    return RationalMatrix(rows, dst_basis, src_basis, j)


def restriction_map(
    k: SimplicialComplex | GradedQuotient,
    forms: Sequence[LinearForm] | None,
    p: int,
    degree: int,
) -> RationalMatrix:
    """Matrix of ``A^j(K) → A^j(St p)`` in the chosen monomial bases.

    The star carries the restricted forms; ``A(St p)`` is isomorphic to the
    Artinian reduction of the link of ``p``.
    """
    q = k if isinstance(k, GradedQuotient) else GradedQuotient(k, forms)
    if not q.complex.vertex_set >> p & 1:
        raise ValueError(f"{p} is not a vertex")
    star = GradedQuotient(q.complex.star(1 << p), q.forms, check=False)
    return _restriction(q, star, degree)


def partition_of_unity_check(
    k: SimplicialComplex, forms: Sequence[LinearForm], degree: int
) -> tuple[bool, int, dict[str, object]]:
    """Injectivity of ``A^j(K) → ⊕_p A^j(St p)``.

    Returns ``(injective, rank, dims)`` where ``dims`` holds the source
    dimension and the per-vertex target dimensions.
    """
    q = GradedQuotient(k, forms)
    if not 0 <= degree < q.d:
        raise ValueError(f"degree must lie in 0..{q.d - 1}")
    blocks = [restriction_map(q, None, p, degree) for p in k.vertices]
    stacked = RationalMatrix.vstack(blocks)
    source = q.dim(degree)
    r = stacked.rank() if stacked.rows else 0
    dims = {"source": source, "targets": [len(b.rows) for b in blocks]}
    return r == source, r, dims


def edge_partition_check(
    k: SimplicialComplex, forms: Sequence[LinearForm], degree: int
) -> tuple[bool, int]:
    """Injectivity of the composite ``A^j(K) → ⊕_p A^j(St p) → ⊕_(p,q) A^j(St pq)``.

    Each edge appears twice, once per ordered endpoint pair.
    """
    if not is_flag(k)[0]:
        raise ValueError("edge-level composition needs a flag complex")
    q = GradedQuotient(k, forms)
    if not 0 <= degree < q.d - 1:
        raise ValueError(f"degree must lie in 0..{q.d - 2}")
    composed = []
    edge_stars: dict[Face, GradedQuotient] = {}
    for p in k.vertices:
        star_p = GradedQuotient(k.star(1 << p), q.forms, check=False)
        first = _restriction(q, star_p, degree)
        for w in vertices_of(k.link(1 << p).vertex_set):
            e = (1 << p) | (1 << w)
            star_pq = edge_stars.get(e)
            if star_pq is None:
                star_pq = edge_stars[e] = GradedQuotient(k.star(e), q.forms, check=False)
            composed.append(_restriction(star_p, star_pq, degree) @ first)
    stacked = RationalMatrix.vstack(composed)
    r = stacked.rank() if stacked.rows else 0
    return r == q.dim(degree), r
