"""Boolean decompositions ``Γ = {F ∪ G : F ∈ S, G ⊆ first d - 2|F| of B}``.

``B`` is a distinguished ordered set of ``d`` vertices disjoint from ``S``.
When such a ``Γ`` has ``f(Γ) = h(Δ)`` for a flag sphere ``Δ``, the gamma
vector of ``Δ`` is ``(1, f(S))``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .complex import Face, SimplicialComplex, format_face, is_flag, vertices_of
from .generators import compression_complex, kk_is_valid_fvector
from .invariants import (
    IntegerVector,
    Kind,
    f_from_gamma,
    f_vector,
    gamma_from_h,
    h_vector,
    is_homology_sphere,
)


class DecompositionError(ValueError):
    """Structured failure of :func:`extract_boolean_decomposition`.

    ``reason`` is a short fixed phrase; ``witness`` the offending face when
    there is one.
    """

    def __init__(self, reason: str, witness: Face | None = None, detail: str = ""):
        msg = reason if not detail else f"{reason}: {detail}"
        super().__init__(msg)
        self.reason = reason
        self.witness = witness
        self.detail = detail

    def report(self) -> dict[str, Any]:
        return {
            "ok": False,
            "reason": self.reason,
            "witness": list(vertices_of(self.witness)) if self.witness is not None else None,
            "detail": self.detail,
        }


@dataclass
class BooleanDecomposition:
    complex: SimplicialComplex
    gamma_complex: SimplicialComplex
    boolean_order: tuple[int, ...]
    d: int
    assignment: dict[Face, tuple[Face, Face]] = field(repr=False)

    @property
    def boolean_part(self) -> Face:
        m = 0
        for v in self.boolean_order:
            m |= 1 << v
        return m

    def prefix(self, n: int) -> Face:
        m = 0
        for v in self.boolean_order[: max(n, 0)]:
            m |= 1 << v
        return m

    def dim_bound(self) -> int:
        """``d/2 - 1``; for odd ``d`` the looser ``⌈d/2⌉ - 1`` is used (see :attr:`extrapolated`)."""
        return (self.d + 1) // 2 - 1

    @property
    def extrapolated(self) -> bool:
        return self.d % 2 == 1

    def gamma(self) -> IntegerVector:
        """``(1, f(S))`` padded to length ``⌊d/2⌋ + 1``."""
        return IntegerVector.gamma((1,) + f_vector(self.gamma_complex).entries, self.d)

    def report(self) -> dict[str, Any]:
        return {
            "ok": True,
            "d": self.d,
            "boolean_part": list(self.boolean_order),
            "S_facets": self.gamma_complex.facet_lists(),
            "f_S": list(f_vector(self.gamma_complex).entries),
            "dim_S": self.gamma_complex.dim,
            "dim_bound": self.dim_bound(),
            "extrapolated": self.extrapolated,
            "gamma": list(self.gamma().entries),
        }


def _gamma_entries(g, d: int) -> tuple[int, ...]:
    if isinstance(g, IntegerVector):
        if g.kind is not Kind.GAMMA:
            raise ValueError("expected a gamma vector")
        return g.entries
    entries = tuple(int(x) for x in g)
    want = d // 2 + 1
    if len(entries) > want:
        raise ValueError(f"gamma vector for d={d} has at most {want} entries")
    return entries + (0,) * (want - len(entries))


def build_gamma_complex(g, d: int | None = None) -> tuple[SimplicialComplex, BooleanDecomposition]:
    """Assemble ``Γ`` from a gamma vector.

    ``S`` is the compression complex of ``(γ_1, γ_2, ...)`` on vertices
    ``1, 2, ...``; the Boolean part is ``d`` further vertices just above it.
    """
    if d is None:
        if not isinstance(g, IntegerVector):
            raise ValueError("d is required for a bare gamma sequence")
        d = g.d
    entries = _gamma_entries(g, d)
    if any(x < 0 for x in entries):
        raise ValueError(f"negative gamma entry in {list(entries)}")
    if entries[0] != 1:
        raise ValueError(f"γ_0 must be 1, got {entries[0]}")
    tail = entries[1:]
    if not kk_is_valid_fvector(tail):
        raise ValueError(f"gamma tail {list(tail)} is not a Kruskal–Katona f-vector")
    s = compression_complex(tail)
    base = max(s.vertices, default=0) + 1
    order = tuple(range(base, base + d))
    prefix = [0]
    for v in order:
        prefix.append(prefix[-1] | (1 << v))
    faces_s = list(s.faces())
    # F ∪ prefix(d - 2|F|) are pairwise non-nested, so they are the facets
    gamma = SimplicialComplex((f | prefix[d - 2 * f.bit_count()] for f in faces_s), _canonical=True)
    assignment = {}
    for f in faces_s:
        top = prefix[d - 2 * f.bit_count()]
        sub = top
        while True:
            assignment[f | sub] = (f, sub)
            if not sub:
                break
            sub = (sub - 1) & top
    dec = BooleanDecomposition(gamma, s, order, d, assignment)
    return gamma, dec


def extract_boolean_decomposition(g: SimplicialComplex, d: int) -> BooleanDecomposition:
    """Recover ``S`` and the ordered Boolean part from a complex ``Γ``.

    The Boolean part is the vertex set of the unique top-dimensional face.
    For each ``F`` in ``S`` the Boolean sets ``G`` with ``F ∪ G ∈ Γ`` must form
    a full simplex of size ``d - 2|F|``, and these simplices must be nested;
    the order of the Boolean part is then read off the chain (ties broken by
    vertex id).  Raises :class:`DecompositionError` on any violation.
    """
    if g.dim != d - 1:
        raise DecompositionError("dimension mismatch", detail=f"dim Γ = {g.dim}, expected {d - 1}")
    tops = g.faces_of_size(d)
    if len(tops) != 1:
        raise DecompositionError(
            "ambiguous Boolean part", detail=f"{len(tops)} faces of dimension {d - 1}"
        )
    bpart = tops[0]
    s = g.induced(g.vertex_set & ~bpart)
    span: dict[Face, Face] = {}
    for h in g.faces():
        f = h & ~bpart
        span[f] = span.get(f, 0) | (h & bpart)
    for f in sorted(span, key=lambda m: (m.bit_count(), m)):
        need = d - 2 * f.bit_count()
        if need < 0:
            raise DecompositionError(
                "dimension excess", f, f"|F| = {f.bit_count()} exceeds d/2 = {d / 2:g}"
            )
        u = span[f]
        if (f | u) not in g:
            raise DecompositionError(
                "Boolean link is not a simplex", f,
                f"Boolean sets over {format_face(f)} do not span a face",
            )
        if u.bit_count() != need:
            raise DecompositionError(
                "Boolean part has wrong size", f,
                f"{u.bit_count()} Boolean vertices over {format_face(f)}, expected {need}",
            )
    chain = sorted(set(span.values()), key=lambda m: m.bit_count())
    for small, big in zip(chain, chain[1:]):
        if small & big != small:
            raise DecompositionError(
                "Boolean parts are not nested", small | big,
                f"{format_face(small)} is not inside {format_face(big)}",
            )
    order: list[int] = []
    seen = 0
    for u in chain + [bpart]:
        order.extend(vertices_of(u & ~seen))
        seen |= u
    bound = (d + 1) // 2 - 1
    if s.dim > bound:
        raise DecompositionError(
            "dimension excess", s.facets[-1], f"dim S = {s.dim} exceeds {bound}"
        )
    assignment = {h: (h & ~bpart, h & bpart) for h in g.faces()}
    return BooleanDecomposition(g, s, tuple(order), d, assignment)


def verify_gamma_interpretation(delta: SimplicialComplex, dec: BooleanDecomposition) -> bool:
    """Whether ``γ(Δ) = (1, f(S))`` for a decomposition of some ``Γ`` with ``f(Γ) = h(Δ)``.

    Raises ``ValueError`` when ``Δ`` is not a flag homology sphere of
    dimension ``d - 1`` or when ``f(Γ) ≠ h(Δ)``.
    """
    if delta.dim != dec.d - 1:
        raise ValueError(f"dim Δ = {delta.dim}, decomposition has d = {dec.d}")
    if not is_flag(delta)[0] or not is_homology_sphere(delta):
        raise ValueError("Δ is not a flag homology sphere")
    h = h_vector(delta)
    if f_vector(dec.complex).entries != h.entries[1:]:
        raise ValueError(f"f(Γ) = {list(f_vector(dec.complex))} differs from h(Δ) = {list(h)}")
    return dec.gamma() == gamma_from_h(h)


def face_count_identity(dec: BooleanDecomposition) -> bool:
    """``#{faces of Γ of size i} = Σ_j γ_j C(d-2j, i-j)`` for every ``i``."""
    return f_vector(dec.complex).entries == f_from_gamma(dec.gamma()).entries


@dataclass
class EdgeRecord:
    edge: tuple[int, ...]
    h_link: list[int]
    gamma_link: list[int]
    h_dominated: bool
    decomposition_ok: bool
    reaches_h: list[bool]
    sub: "SurveyReport | None" = None

    def to_dict(self) -> dict[str, Any]:
        out = {
            "edge": list(self.edge),
            "h_link": self.h_link,
            "gamma_link": self.gamma_link,
            "h_dominated": self.h_dominated,
            "decomposition_ok": self.decomposition_ok,
            "cover_reached_per_k": self.reaches_h,
        }
        if self.sub is not None:
            out["sub"] = self.sub.to_dict()
        return out


@dataclass
class SurveyReport:
    d: int
    h: list[int]
    gamma: list[int]
    edges: list[EdgeRecord]
    cover_reached_per_k: list[bool]

    @property
    def ok(self) -> bool:
        return all(e.h_dominated and e.decomposition_ok and (e.sub is None or e.sub.ok) for e in self.edges)

    def to_dict(self) -> dict[str, Any]:
        return {
            "d": self.d,
            "h": self.h,
            "gamma": self.gamma,
            "cover_reached_per_k": self.cover_reached_per_k,
            "ok": self.ok,
            "edges": [e.to_dict() for e in self.edges],
        }


def edge_link_survey(delta: SimplicialComplex, recursive: bool = True) -> SurveyReport:
    """Check the edge-link data behind the inductive construction.

    For every edge ``e``: ``lk(e)`` must be a flag homology sphere of
    dimension ``d - 3`` with ``h(lk e) ≤ h(Δ)`` entrywise, and the complex
    built from ``γ(lk e)`` must decompose back with the right gamma vector.
    ``cover_reached_per_k[k]`` records whether some edge link attains
    ``h_k(Δ)``, for ``k ≤ d - 2``.
    """
    d = delta.dim + 1
    if d < 2:
        raise ValueError("edge links need dim Δ >= 1")
    h = h_vector(delta)
    gamma = gamma_from_h(h)
    records = []
    best = [0] * (d - 1)
    for e in delta.edges():
        lk = delta.link(e)
        if lk.dim != d - 3 or not is_flag(lk)[0] or not is_homology_sphere(lk):
            raise ValueError(f"link of edge {format_face(e)} is not a flag homology sphere of dim {d - 3}")
        hl = h_vector(lk)
        gl = gamma_from_h(hl)
        dominated = all(hl[k] <= h[k] for k in range(len(hl.entries)))
        for k in range(min(len(best), len(hl.entries))):
            best[k] = max(best[k], hl[k])
        try:
            _, built = build_gamma_complex(gl, d - 2)
            dec = extract_boolean_decomposition(built.complex, d - 2)
            ok = dec.gamma() == gl and verify_gamma_interpretation(lk, dec)
        except ValueError:
            ok = False
        sub = edge_link_survey(lk, recursive) if recursive and lk.dim >= 1 else None
        reaches = [hl[k] == h[k] for k in range(min(d - 1, len(hl.entries)))]
        records.append(EdgeRecord(vertices_of(e), list(hl), list(gl), dominated, ok, reaches, sub))
    cover = [best[k] == h[k] for k in range(d - 1)]
    return SurveyReport(d, list(h), list(gamma), records, cover)
