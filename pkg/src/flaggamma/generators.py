"""Builders for the complexes studied in this package.

Polygons and cross-polytope boundaries give flag spheres; joins and
barycentric subdivisions give more.  Compression complexes realize a given
f-vector by reverse lexicographic prefixes, and the color completion turns a
balanced complex ``Γ`` into a balanced shellable complex whose h-vector is
``f(Γ)``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import permutations
from typing import Iterator, Sequence

from .balanced import Coloring
from .complex import (
    MAX_VERTICES,
    CapacityError,
    Face,
    SimplicialComplex,
    boundary,
    face,
    format_face,
    join,
    vertices_of,
)
from .invariants import IntegerVector


def simplex(vertices: Sequence[int]) -> SimplicialComplex:
    return SimplicialComplex([face(vertices)])


def simplex_boundary(n: int, start: int = 1) -> SimplicialComplex:
    """Boundary of the simplex on ``n`` vertices ``start..start+n-1``."""
    full = face(range(start, start + n))
    return SimplicialComplex(full ^ (1 << v) for v in range(start, start + n))


def polygon(n: int, start: int = 1) -> SimplicialComplex:
    """Cycle on vertices ``start..start+n-1``; flag iff ``n >= 4``.

    ``polygon(64, start=0)`` is the largest cycle that fits.
    """
    if n < 3:
        raise ValueError("a polygon needs at least 3 vertices")
    if start < 0 or start + n > MAX_VERTICES:
        raise CapacityError(f"polygon({n}) from {start} needs vertex ids beyond 63")
    return SimplicialComplex.from_facets([start + i, start + (i + 1) % n] for i in range(n))


def cross_polytope_boundary(d: int) -> SimplicialComplex:
    """d-fold join of two-point complexes, vertices ``1..2d`` with ``i ~ i + d`` antipodal."""
    if not 1 <= d <= 16:
        raise CapacityError("cross-polytope dimension must lie in 1..16")
    out = SimplicialComplex.from_facets([[1], [1 + d]])
    for i in range(2, d + 1):
        out = join(out, SimplicialComplex.from_facets([[i], [i + d]]))
    return out


def barycentric_subdivision(k: SimplicialComplex) -> SimplicialComplex:
    """Order complex of the nonempty faces of ``k``.

    Vertex ``i`` is the ``i``-th nonempty face in (size, revlex) order; see
    :func:`subdivision_labels`.
    """
    labels = subdivision_labels(k)
    if len(labels) > MAX_VERTICES:
        raise CapacityError(f"subdivision needs {len(labels)} vertices")
    index = {f: i for i, f in enumerate(labels)}
    chains = set()
    for top in k.facets:
        for order in permutations(vertices_of(top)):
            cur = chain = 0
            for v in order:
                cur |= 1 << v
                chain |= 1 << index[cur]
            chains.add(chain)
    return SimplicialComplex(chains or [0], _canonical=True)


def subdivision_labels(k: SimplicialComplex) -> list[Face]:
    return [f for f in k.faces() if f]


def subdivision_coloring(k: SimplicialComplex) -> Coloring:
    """Color each vertex of ``barycentric_subdivision(k)`` by the size of its face."""
    labels = subdivision_labels(k)
    return Coloring({i: f.bit_count() for i, f in enumerate(labels)}, k.dim + 1)


def random_balanced_complex(
    rng: random.Random, max_vertices: int = 12, max_d: int = 4
) -> tuple[SimplicialComplex, Coloring]:
    """A random ``(d-1)``-dimensional complex on ``1..n`` with a proper ``d``-coloring.

    Vertices ``1..d`` get colors ``1..d`` and the rest are colored at random;
    faces are random rainbow sets, one of them using every color.
    """
    d = rng.randint(1, max_d)
    n = rng.randint(d, max(d, max_vertices))
    colors = {v: v if v <= d else rng.randint(1, d) for v in range(1, n + 1)}
    by_color: dict[int, list[int]] = {c: [] for c in range(1, d + 1)}
    for v, c in colors.items():
        by_color[c].append(v)
    faces = [1 << v for v in colors]
    faces.append(face(rng.choice(by_color[c]) for c in range(1, d + 1)))
    for _ in range(rng.randint(0, 2 * n)):
        picked = rng.sample(range(1, d + 1), rng.randint(1, d))
        faces.append(face(rng.choice(by_color[c]) for c in picked))
    return SimplicialComplex(faces), Coloring(colors, d)


# -- compression complexes -------------------------------------------------


def revlex_subsets(k: int, start: int = 1) -> Iterator[Face]:
    """k-subsets of ``{start, start+1, ...}`` in reverse lexicographic order."""
    if k == 0:
        yield 0
        return
    # Gosper's hack refills low bits from bit 0, so step unshifted masks
    m = (1 << k) - 1
    limit = 1 << (MAX_VERTICES - start)
    while m < limit:
        yield m << start
        low = m & -m
        ripple = m + low
        m = ripple | (((m ^ ripple) >> 2) // low)


def _prefix(k: int, count: int) -> list[Face]:
    out = []
    if count <= 0:
        return out
    for m in revlex_subsets(k):
        out.append(m)
        if len(out) == count:
            return out
    raise CapacityError(f"fewer than {count} {k}-subsets of 1..63")


def _levels(f) -> list[list[Face]]:
    entries = f.entries if isinstance(f, IntegerVector) else tuple(f)
    if any(x < 0 for x in entries):
        raise ValueError("f-vector entries must be non-negative")
    return [[0]] + [_prefix(i + 1, c) for i, c in enumerate(entries)]


def _first_closure_failure(levels: list[list[Face]]) -> int | None:
    for i in range(len(levels) - 1, 0, -1):
        below = set(levels[i - 1])
        for m in levels[i]:
            if any(b not in below for b in boundary(m)):
                return i - 1
    return None


def kk_is_valid_fvector(f) -> bool:
    """Whether the revlex prefixes of sizes ``f`` form a simplicial complex.

    By Kruskal–Katona this is exactly the set of f-vectors of complexes.
    """
    try:
        levels = _levels(f)
    except CapacityError:
        return False
    return _first_closure_failure(levels) is None


def compression_complex(f) -> SimplicialComplex:
    """Complex whose ``(k-1)``-faces are the first ``f_{k-1}`` k-subsets of ``{1, 2, ...}``.

    Zero entries are allowed; the all-zero vector gives ``{∅}``.
    """
    levels = _levels(f)
    bad = _first_closure_failure(levels)
    if bad is not None:
        raise ValueError(f"not a Kruskal–Katona f-vector: closure fails in dimension {bad}")
    return SimplicialComplex.from_faces(m for level in levels for m in level)


# -- color completion ------------------------------------------------------


@dataclass(frozen=True)
class ShelledComplex:
    """A complex with a shelling order and the restriction face of each facet."""

    complex: SimplicialComplex
    shelling_order: tuple[Face, ...]
    restrictions: tuple[Face, ...]


def color_completion(g: SimplicialComplex, kappa, d: int) -> ShelledComplex:
    """Balanced shellable complex ``C(Γ)`` with ``h(C(Γ)) = (1, f(Γ))``.

    One fresh vertex per color is added, ids just above the largest vertex of
    ``Γ``.  Each face ``F`` of ``Γ`` (the empty face included) becomes the
    facet ``F ∪ {fresh vertices of the colors missing from F}``.  Facets are
    shelled in (|F|, revlex F) order, and the restriction of each is its
    originating face ``F``.
    """
    colors = kappa.colors if hasattr(kappa, "colors") else dict(kappa)
    if g.dim > d - 1:
        raise ValueError(f"dim Γ = {g.dim} exceeds d - 1 = {d - 1}")
    for v in g.vertices:
        c = colors.get(v)
        if c is None or not 1 <= c <= d:
            raise ValueError(f"vertex {v} has no color in 1..{d}")
    for e in g.edges():
        a, b = vertices_of(e)
        if colors[a] == colors[b]:
            raise ValueError(f"improper coloring on edge {format_face(e)}")
    base = max(g.vertices, default=0) + 1
    if base + d - 1 >= MAX_VERTICES:
        raise CapacityError("color completion needs more than 64 vertex ids")
    fresh = {c: base + c - 1 for c in range(1, d + 1)}
    order = []
    restrictions = []
    for f in sorted(g.faces(), key=lambda m: (m.bit_count(), m)):
        used = {colors[v] for v in vertices_of(f)}
        top = f
        for c in range(1, d + 1):
            if c not in used:
                top |= 1 << fresh[c]
        order.append(top)
        restrictions.append(f)
    return ShelledComplex(SimplicialComplex(order, _canonical=True), tuple(order), tuple(restrictions))


def shelling_partition_check(s: ShelledComplex) -> bool:
    """Verify the intervals ``[r(F_i), F_i]`` partition the faces and the order shells.

    The shelling condition asked of each facet after the first: its
    intersection with the earlier facets is a nonempty union of ridges of it.
    """
    order = s.shelling_order
    if len(order) != len(s.restrictions) or set(order) != set(s.complex.facets):
        return False
    for r, f in zip(s.restrictions, order):
        if r & f != r:
            return False
    for h in s.complex.faces():
        hits = sum(1 for r, f in zip(s.restrictions, order) if r & h == r and h & f == h)
        if hits != 1:
            return False
    for i in range(1, len(order)):
        f = order[i]
        meets = {f & order[j] for j in range(i)}
        maximal = [m for m in meets if not any(m != o and m & o == m for o in meets)]
        if not maximal or any(m.bit_count() != f.bit_count() - 1 for m in maximal):
            return False
    return True
