"""Finite simplicial complexes on at most 64 vertices.

Faces are plain ``int`` bit masks: vertex ``v`` is present iff bit ``v`` is
set.  With this encoding the reverse lexicographic order on faces of a fixed
size (``A < B`` iff the largest element of ``A ^ B`` lies in ``B``) is just
integer comparison, so sorting masks numerically gives the canonical order
used throughout the package.
"""

from __future__ import annotations

from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator

MAX_VERTICES = 64

Face = int


class CapacityError(ValueError):
    """A complex would need a vertex id outside ``0..63``."""


class FacetParseError(ValueError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def face(vertices: Iterable[int]) -> Face:
    """Bit mask of a vertex collection."""
    mask = 0
    for v in vertices:
        v = int(v)
        if not 0 <= v < MAX_VERTICES:
            raise CapacityError(f"vertex id {v} outside 0..{MAX_VERTICES - 1}")
        mask |= 1 << v
    return mask


def vertices_of(mask: Face) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def size(mask: Face) -> int:
    return mask.bit_count()


def subfaces(mask: Face) -> Iterator[Face]:
    """All subsets of ``mask``, the empty set included."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def boundary(mask: Face) -> Iterator[Face]:
    """Codimension-one subsets of ``mask``."""
    rest = mask
    while rest:
        low = rest & -rest
        yield mask ^ low
        rest ^= low


def shadow(level: Iterable[Face]) -> set[Face]:
    out: set[Face] = set()
    for m in level:
        out.update(boundary(m))
    return out


def format_face(mask: Face) -> str:
    vs = vertices_of(mask)
    return "{" + ",".join(map(str, vs)) + "}"


def _maximal(candidates: Iterable[Face]) -> tuple[Face, ...]:
    """Inclusion-maximal, deduplicated masks in canonical order."""
    uniq = sorted(set(candidates), key=lambda m: (-m.bit_count(), m))
    kept: list[Face] = []
    for c in uniq:
        if not any(c & k == c for k in kept):
            kept.append(c)
    return tuple(sorted(kept))


class SimplicialComplex:
    """Downward closed family of faces, stored by its facets.

    Instances are immutable.  Face levels are expanded lazily from the facets
    and cached; after the first access they are only read.
    """

    __slots__ = ("facets", "vertex_set", "__dict__")

    def __init__(self, facets: Iterable[Face], *, _canonical: bool = False):
        masks = tuple(facets)
        if not masks:
            raise ValueError(
                "the void complex is not representable; pass one empty facet for {∅}"
            )
        for m in masks:
            if m < 0 or m >> MAX_VERTICES:
                raise CapacityError(f"face {m:#x} uses a vertex outside 0..63")
        self.facets: tuple[Face, ...] = tuple(sorted(set(masks))) if _canonical else _maximal(masks)
        vs = 0
        for m in self.facets:
            vs |= m
        self.vertex_set: Face = vs

    @classmethod
    def from_facets(cls, facets: Iterable[Iterable[int]]) -> "SimplicialComplex":
        """Build a complex from facets given as vertex collections.

        Nested and repeated facets are dropped.  ``[[]]`` is the complex
        ``{∅}``; an empty list is rejected.
        """
        return cls(face(f) for f in facets)

    @classmethod
    def from_faces(cls, faces: Iterable[Face]) -> "SimplicialComplex":
        """Complex generated by an arbitrary family of masks.

        Faster than the constructor when the family is already downward
        closed and large, since maximality is tested level by level.
        """
        levels: dict[int, set[Face]] = {}
        for m in faces:
            levels.setdefault(m.bit_count(), set()).add(m)
        if not levels:
            raise ValueError("the void complex is not representable")
        facets: list[Face] = []
        covered: set[Face] = set()
        for k in sorted(levels, reverse=True):
            level = levels[k]
            for m in level:
                if m not in covered:
                    facets.append(m)
            covered = shadow(level | covered)
        return cls(facets, _canonical=True)

    # -- basic data -----------------------------------------------------

    @property
    def dim(self) -> int:
        return max(m.bit_count() for m in self.facets) - 1

    @property
    def vertices(self) -> tuple[int, ...]:
        return vertices_of(self.vertex_set)

    @property
    def num_vertices(self) -> int:
        return self.vertex_set.bit_count()

    @cached_property
    def _levels(self) -> tuple[frozenset[Face], ...]:
        top = self.dim + 1
        levels: list[set[Face]] = [set() for _ in range(top + 1)]
        for m in self.facets:
            levels[m.bit_count()].add(m)
        for k in range(top, 0, -1):
            levels[k - 1].update(shadow(levels[k]))
        return tuple(frozenset(level) for level in levels)

    @cached_property
    def face_set(self) -> frozenset[Face]:
        return frozenset().union(*self._levels)

    def faces_of_size(self, k: int) -> list[Face]:
        if not 0 <= k < len(self._levels):
            return []
        return sorted(self._levels[k])

    def faces_of_dim(self, k: int) -> list[Face]:
        """Faces of dimension ``k`` in reverse lexicographic order."""
        return self.faces_of_size(k + 1)

    def faces(self) -> Iterator[Face]:
        """All faces, by size, then in reverse lexicographic order."""
        for k in range(len(self._levels)):
            yield from self.faces_of_size(k)

    def num_faces(self, k: int) -> int:
        return len(self._levels[k]) if 0 <= k < len(self._levels) else 0

    def __contains__(self, mask: Face) -> bool:
        if mask.bit_count() < len(self._levels):
            return mask in self._levels[mask.bit_count()]
        return False

    def is_pure(self) -> bool:
        n = self.dim + 1
        return all(m.bit_count() == n for m in self.facets)

    def edges(self) -> list[Face]:
        return self.faces_of_size(2)

    def neighbors(self, v: int) -> Face:
        bit = 1 << v
        out = 0
        for e in self._levels[2] if len(self._levels) > 2 else ():
            if e & bit:
                out |= e
        return out & ~bit

    # -- constructions --------------------------------------------------

    def link(self, f: Face) -> "SimplicialComplex":
        """``{G : F ∪ G ∈ K, F ∩ G = ∅}``."""
        if f not in self:
            raise ValueError(f"not a face: {format_face(f)}")
        return SimplicialComplex(
            (m & ~f for m in self.facets if m & f == f), _canonical=True
        )

    def star(self, f: Face) -> "SimplicialComplex":
        """Closed star: faces ``G`` with ``G ∪ F`` a face."""
        if f not in self:
            raise ValueError(f"not a face: {format_face(f)}")
        return SimplicialComplex((m for m in self.facets if m & f == f), _canonical=True)

    def induced(self, w: Face) -> "SimplicialComplex":
        return SimplicialComplex(m & w for m in self.facets)

    def relabel(self, mapping: dict[int, int]) -> "SimplicialComplex":
        return SimplicialComplex(
            face(mapping[v] for v in vertices_of(m)) for m in self.facets
        )

    def shift(self, offset: int) -> "SimplicialComplex":
        return self.relabel({v: v + offset for v in self.vertices})

    # -- dunder ---------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.facets == other.facets

    def __hash__(self) -> int:
        return hash(self.facets)

    def __repr__(self) -> str:
        shown = ", ".join(format_face(m) for m in self.facets[:6])
        more = ", ..." if len(self.facets) > 6 else ""
        return f"SimplicialComplex(dim={self.dim}, facets=[{shown}{more}])"

    def facet_lists(self) -> list[list[int]]:
        return [list(vertices_of(m)) for m in self.facets]


def from_facets(facets: Iterable[Iterable[int]]) -> SimplicialComplex:
    return SimplicialComplex.from_facets(facets)


def faces_of_dim(k: SimplicialComplex, dim: int) -> list[Face]:
    return k.faces_of_dim(dim)


def link(k: SimplicialComplex, f: Face) -> SimplicialComplex:
    return k.link(f)


def induced_subcomplex(k: SimplicialComplex, w: Face) -> SimplicialComplex:
    """All faces of ``k`` contained in ``w``."""
    return k.induced(w)


def point_complex() -> SimplicialComplex:
    """The complex ``{∅}``."""
    return SimplicialComplex([0])


def minimal_nonfaces(k: SimplicialComplex) -> list[Face]:
    """Minimal nonfaces on the vertex set of ``k``, sorted by size then revlex.

    Candidates of size ``s + 1`` are grown from faces of size ``s`` by adding a
    larger vertex; a candidate all of whose facets are faces is either a face
    or a minimal nonface.
    """
    out: list[Face] = []
    verts = k.vertices
    for a, b in combinations(verts, 2):
        e = (1 << a) | (1 << b)
        if e not in k:
            out.append(e)
    for s in range(2, k.dim + 2):
        for f in k.faces_of_size(s):
            top = f.bit_length()
            for v in verts:
                if v < top:
                    continue
                cand = f | (1 << v)
                if cand in k:
                    continue
                if all(b in k for b in boundary(cand)):
                    out.append(cand)
    return sorted(set(out), key=lambda m: (m.bit_count(), m))


def is_flag(k: SimplicialComplex) -> tuple[bool, list[Face]]:
    """Whether every minimal nonface of ``k`` is an edge.

    Returns the flag verdict and the full list of minimal nonfaces.
    """
    nonfaces = minimal_nonfaces(k)
    return all(m.bit_count() == 2 for m in nonfaces), nonfaces


def clique_complex(vertices: Iterable[int], edges: Iterable[tuple[int, int]]) -> SimplicialComplex:
    """Flag complex of a graph, via Bron–Kerbosch with pivoting."""
    verts = sorted(set(vertices))
    adj = {v: 0 for v in verts}
    for a, b in edges:
        adj.setdefault(a, 0)
        adj.setdefault(b, 0)
        adj[a] |= 1 << b
        adj[b] |= 1 << a
    cliques: list[Face] = []

    def expand(r: Face, p: Face, x: Face) -> None:
        if not p and not x:
            cliques.append(r)
            return
        pivot = max(vertices_of(p | x), key=lambda u: (adj[u] & p).bit_count())
        for v in vertices_of(p & ~adj[pivot]):
            bit = 1 << v
            expand(r | bit, p & adj[v], x & adj[v])
            p &= ~bit
            x |= bit

    expand(0, face(adj), 0)
    return SimplicialComplex(cliques or [0])


def join(k1: SimplicialComplex, k2: SimplicialComplex) -> SimplicialComplex:
    """Join of two complexes.

    If the vertex sets overlap, ``k2`` is shifted to start just above the
    largest vertex of ``k1``.
    """
    if k1.vertex_set & k2.vertex_set:
        offset = max(k1.vertices) + 1 - min(k2.vertices)
        if max(k2.vertices) + offset >= MAX_VERTICES:
            raise CapacityError("join needs more than 64 vertex ids")
        k2 = k2.shift(offset)
    return SimplicialComplex(
        (a | b for a in k1.facets for b in k2.facets), _canonical=True
    )


def link_intersection_check(k: SimplicialComplex) -> tuple[bool, Face | None]:
    """Test ``lk(p) ∩ lk(q) = lk({p, q})`` on every edge.

    Returns ``(True, None)`` or ``(False, edge)`` for the first failing edge.
    """
    links = {v: k.link(1 << v).face_set for v in k.vertices}
    for e in k.edges():
        p, q = vertices_of(e)
        if links[p] & links[q] != k.link(e).face_set:
            return False, e
    return True, None


# -- facet text format --------------------------------------------------


def parse_facets(text: str) -> SimplicialComplex:
    """Parse the facet text format.

    One facet per line as whitespace separated vertex ids; blank lines and
    ``#`` comments are ignored and a lone ``-`` is the empty facet.
    """
    facets: list[Face] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line == "-":
            facets.append(0)
            continue
        try:
            verts = [int(tok) for tok in line.split()]
        except ValueError:
            raise FacetParseError(lineno, f"bad vertex label in {line!r}") from None
        if any(v < 0 for v in verts):
            raise FacetParseError(lineno, "vertex labels must be non-negative")
        try:
            facets.append(face(verts))
        except CapacityError as exc:
            raise FacetParseError(lineno, str(exc)) from None
    if not facets:
        raise FacetParseError(0, "no facets")
    return SimplicialComplex(facets)


def format_facets(k: SimplicialComplex) -> str:
    lines = []
    for m in k.facets:
        lines.append(" ".join(map(str, vertices_of(m))) if m else "-")
    return "\n".join(lines) + "\n"


def read_facets(path: str) -> SimplicialComplex:
    with open(path, encoding="utf-8") as fh:
        return parse_facets(fh.read())
