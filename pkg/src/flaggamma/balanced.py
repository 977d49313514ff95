"""Proper colorings, the coloring l.s.o.p., and the squarefree algebra B(Γ).

``B(Γ) = k[Γ] / (x_1^2, ..., x_n^2)`` has the faces of ``Γ`` as a monomial
basis, so its elements are stored as ``dict`` maps from face masks to integer
coefficients, and a product of monomials is zero as soon as the supports
overlap or their union is not a face.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping

from .complex import Face, SimplicialComplex, vertices_of

Element = dict[Face, int]


@dataclass(frozen=True)
class Coloring:
    """Vertex to color map with colors in ``1..d``."""

    colors: Mapping[int, int]
    d: int

    def __post_init__(self):
        object.__setattr__(self, "colors", dict(sorted((int(v), int(c)) for v, c in self.colors.items())))

    def color_classes(self) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {c: [] for c in range(1, self.d + 1)}
        for v, c in self.colors.items():
            out.setdefault(c, []).append(v)
        return out

    def is_proper(self, k: SimplicialComplex) -> bool:
        if any(v not in self.colors for v in k.vertices):
            return False
        if any(not 1 <= self.colors[v] <= self.d for v in k.vertices):
            return False
        for e in k.edges():
            a, b = vertices_of(e)
            if self.colors[a] == self.colors[b]:
                return False
        return True

    def to_json(self) -> str:
        return json.dumps({"d": self.d, "colors": {str(v): c for v, c in self.colors.items()}})

    @classmethod
    def from_json(cls, text: str) -> "Coloring":
        obj = json.loads(text)
        return cls({int(v): int(c) for v, c in obj["colors"].items()}, int(obj["d"]))


def find_proper_coloring(k: SimplicialComplex, d: int) -> Coloring | None:
    """Exhaustive backtracking for a proper ``d``-coloring of the 1-skeleton.

    Vertices are taken in descending degree order, a branch is cut as soon
    as some uncolored vertex has no color left, and a new color is only
    opened once all smaller ones are in use.  ``None`` therefore certifies
    that no proper ``d``-coloring exists.
    """
    verts = k.vertices
    if not verts:
        return Coloring({}, d)
    if d < 1:
        return None
    nbrs = {v: vertices_of(k.neighbors(v)) for v in verts}
    order = sorted(verts, key=lambda v: (-len(nbrs[v]), v))
    colors: dict[int, int] = {}
    # available[v] is a bit set of colors still allowed for v
    full = (1 << (d + 1)) - 2
    available = {v: full for v in verts}

    def solve(i: int, used: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        allowed = available[v]
        for c in range(1, min(used + 1, d) + 1):
            bit = 1 << c
            if not allowed & bit:
                continue
            colors[v] = c
            touched = []
            dead = False
            for w in nbrs[v]:
                if w not in colors and available[w] & bit:
                    available[w] &= ~bit
                    touched.append(w)
                    if not available[w]:
                        dead = True
            if not dead and solve(i + 1, max(used, c)):
                return True
            for w in touched:
                available[w] |= bit
            del colors[v]
        return False

    if solve(0, 0):
        return Coloring(colors, d)
    return None


def is_balanced(k: SimplicialComplex, c: Coloring) -> bool:
    """Proper coloring with exactly ``dim K + 1`` colors available."""
    return c.d == k.dim + 1 and c.is_proper(k)


def coloring_lsop(k: SimplicialComplex, c: Coloring) -> list[dict[int, Fraction]]:
    """``θ_i = Σ_{κ(p) = i} x_p`` for ``i = 1..d``."""
    return [
        {v: Fraction(1) for v in k.vertices if c.colors.get(v) == i}
        for i in range(1, c.d + 1)
    ]


@dataclass
class SquarefreeAlgebra:
    """``B(Γ)``: the face ring of ``Γ`` with all squares of variables killed."""

    complex: SimplicialComplex
    _faces: frozenset = field(init=False, repr=False)

    def __post_init__(self):
        self._faces = self.complex.face_set

    def basis(self, degree: int) -> list[Face]:
        return self.complex.faces_of_size(degree)

    def dim(self, degree: int) -> int:
        return self.complex.num_faces(degree)

    def one(self) -> Element:
        return {0: 1}

    def variable(self, v: int) -> Element:
        return {1 << v: 1} if (1 << v) in self._faces else {}

    def linear(self, form: Mapping[int, object]) -> Element:
        out: Element = {}
        for v, c in form.items():
            if c and (1 << v) in self._faces:
                out[1 << v] = out.get(1 << v, 0) + c
        return {m: c for m, c in out.items() if c}

    def mul(self, a: Element, b: Element) -> Element:
        out: Element = {}
        faces = self._faces
        for ma, ca in a.items():
            for mb, cb in b.items():
                if ma & mb:
                    continue
                m = ma | mb
                if m not in faces:
                    continue
                out[m] = out.get(m, 0) + ca * cb
        return {m: c for m, c in out.items() if c}

    def product(self, elems: Iterable[Element]) -> Element:
        out = self.one()
        for e in elems:
            out = self.mul(out, e)
        return out


def _theta(alg: SquarefreeAlgebra, c: Coloring, i: int) -> Element:
    return alg.linear({v: 1 for v, col in c.colors.items() if col == i})


def theta_square_in_B(k: SimplicialComplex, c: Coloring, i: int) -> Element:
    """Normal form of ``θ_i^2`` in ``B(K)``; ``{}`` is zero."""
    alg = SquarefreeAlgebra(k)
    t = _theta(alg, c, i)
    return alg.mul(t, t)


def theta_monomial_in_B(k: SimplicialComplex, c: Coloring, colors: Iterable[int]) -> Element:
    """Normal form of ``Π θ_i`` over ``colors`` (a set or a multiset) in ``B(K)``."""
    alg = SquarefreeAlgebra(k)
    return alg.product(_theta(alg, c, i) for i in colors)


def rainbow_faces(k: SimplicialComplex, c: Coloring, colors: Iterable[int]) -> list[Face]:
    """Faces using each color of ``colors`` exactly once and nothing else."""
    want = sorted(colors)
    return [
        f for f in k.faces_of_size(len(want))
        if sorted(c.colors[v] for v in vertices_of(f)) == want
    ]
