"""Deterministic verification suites shared by the CLI and the acceptance tests.

Every suite returns a :class:`SuiteReport` whose records are sorted by
instance name, so two runs with the same parameters and seed serialize to the
same payload; only ``wall_time`` differs.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Any, Callable

from .artinian import (
    GradedQuotient,
    edge_partition_check,
    partition_of_unity_check,
    random_lsop,
)
from .balanced import (
    Coloring,
    coloring_lsop,
    find_proper_coloring,
    rainbow_faces,
    theta_monomial_in_B,
    theta_square_in_B,
)
from .complex import SimplicialComplex, face, is_flag, join, vertices_of
from .decomposition import (
    DecompositionError,
    build_gamma_complex,
    extract_boolean_decomposition,
    face_count_identity,
    verify_gamma_interpretation,
)
from .generators import (
    barycentric_subdivision,
    color_completion,
    cross_polytope_boundary,
    kk_is_valid_fvector,
    polygon,
    random_balanced_complex,
    shelling_partition_check,
    simplex_boundary,
    subdivision_coloring,
)
from .invariants import (
    IntegerVector,
    charney_davis_gamma_top,
    convolve,
    f_from_gamma,
    f_vector,
    gamma_from_h,
    h_vector,
)


@dataclass
class Record:
    instance: str
    passed: bool
    inputs: dict[str, Any] = field(default_factory=dict)
    outputs: dict[str, Any] = field(default_factory=dict)
    witness: Any = None

    def to_dict(self) -> dict[str, Any]:
        return {
            "instance": self.instance,
            "pass": self.passed,
            "inputs": self.inputs,
            "outputs": self.outputs,
            "witness": self.witness,
        }


@dataclass
class SuiteReport:
    suite: str
    params: dict[str, Any]
    seed: int
    records: list[Record]
    wall_time: float = 0.0

    @property
    def ok(self) -> bool:
        return all(r.passed for r in self.records)

    @property
    def failures(self) -> list[Record]:
        return [r for r in self.records if not r.passed]

    def to_dict(self, timing: bool = True) -> dict[str, Any]:
        out = {
            "suite": self.suite,
            "params": self.params,
            "seed": self.seed,
            "ok": self.ok,
            "passed": sum(r.passed for r in self.records),
            "total": len(self.records),
            "records": [r.to_dict() for r in self.records],
        }
        if timing:
            out["wall_time"] = round(self.wall_time, 3)
        return out


# -- shared instance families ----------------------------------------------


def polygon_join(n: int, m: int) -> SimplicialComplex:
    return join(polygon(n), polygon(m))


def boundary_subdivision(n: int) -> SimplicialComplex:
    """``sd(∂Δ^n)``: subdivided boundary of the ``n``-simplex."""
    return barycentric_subdivision(simplex_boundary(n + 1))


def ordered_partition_fvector(n: int) -> list[int]:
    """f-vector of ``sd(∂Δ^n)`` by counting chains directly.

    A chain ``∅ ⊊ A_1 ⊊ ... ⊊ A_k ⊊ [n+1]`` is an ordered set partition of
    ``n + 1`` elements into ``k + 1`` blocks, counted by ``(k+1)! S(n+1, k+1)``.
    """
    m = n + 1

    def surjections(blocks: int) -> int:
        return sum((-1) ** j * comb(blocks, j) * (blocks - j) ** m for j in range(blocks + 1))

    return [surjections(k + 1) for k in range(1, n + 1)]


def _vec(v) -> list[int]:
    return list(v.entries if isinstance(v, IntegerVector) else v)


def _faces(k: SimplicialComplex) -> list[list[int]]:
    return k.facet_lists()


def _run(name: str, params: dict[str, Any], seed: int, body: Callable[[], list[Record]]) -> SuiteReport:
    start = time.perf_counter()
    records = sorted(body(), key=lambda r: r.instance)
    return SuiteReport(name, params, seed, records, time.perf_counter() - start)


# -- suites ----------------------------------------------------------------


def suite_polygons(n_max: int = 64, seed: int = 0) -> SuiteReport:
    """``γ(C_n) = (1, n - 4)`` for ``4 <= n <= n_max``, also via Charney–Davis."""

    def body():
        out = []
        for n in range(4, n_max + 1):
            h = h_vector(polygon(n, start=0))
            g = gamma_from_h(h)
            cd = charney_davis_gamma_top(h)
            ok = g.entries == (1, n - 4) and cd == n - 4
            out.append(Record(f"C{n:02d}", ok, {"n": n}, {"h": _vec(h), "gamma": _vec(g), "charney_davis": cd},
                              None if ok else {"expected": [1, n - 4]}))
        return out

    return _run("polygons", {"n_max": n_max}, seed, body)


def _interpretation_record(name: str, delta: SimplicialComplex, expected_gamma=None) -> Record:
    h = h_vector(delta)
    g = gamma_from_h(h)
    d = delta.dim + 1
    gamma_ok = expected_gamma is None or list(g.entries) == list(expected_gamma)
    try:
        _, built = build_gamma_complex(g, d)
        dec = extract_boolean_decomposition(built.complex, d)
        verified = verify_gamma_interpretation(delta, dec)
        witness = None
    except ValueError as exc:
        verified, dec, witness = False, None, str(exc)
    outputs = {"h": _vec(h), "gamma": _vec(g), "verified": verified}
    if expected_gamma is not None:
        outputs["oracle_gamma"] = list(expected_gamma)
    if dec is not None:
        outputs["f_S"] = _vec(f_vector(dec.gamma_complex))
    ok = gamma_ok and verified
    if not gamma_ok and witness is None:
        witness = {"gamma": _vec(g), "oracle": list(expected_gamma)}
    return Record(name, ok, {"d": d}, outputs, witness)


def suite_joins(n_max: int = 8, polygon_max: int = 12, seed: int = 0) -> SuiteReport:
    """Gamma interpretation on polygons and on joins ``C_n * C_m``.

    The join gamma is also compared with the convolution of the factors'
    gamma vectors.
    """

    def body():
        out = []
        for n in range(4, polygon_max + 1):
            out.append(_interpretation_record(f"C{n:02d}", polygon(n), (1, n - 4)))
        for n in range(4, n_max + 1):
            for m in range(n, n_max + 1):
                oracle = convolve([1, n - 4], [1, m - 4])
                out.append(_interpretation_record(f"C{n:02d}*C{m:02d}", polygon_join(n, m), oracle))
        return out

    return _run("joins", {"n_max": n_max, "polygon_max": polygon_max}, seed, body)


def suite_subdivisions(n_values: tuple[int, ...] = (3, 4), seed: int = 0) -> SuiteReport:
    """``sd(∂Δ^n)``: chain-count oracle, nonnegative gamma, KK-valid tail, end-to-end build."""

    def body():
        out = []
        for n in n_values:
            k = boundary_subdivision(n)
            f = f_vector(k)
            oracle = ordered_partition_fvector(n)
            h = h_vector(k)
            g = gamma_from_h(h)
            tail = g.entries[1:]
            nonneg = all(x >= 0 for x in g.entries)
            kk = kk_is_valid_fvector(tail)
            try:
                _, built = build_gamma_complex(g, k.dim + 1)
                dec = extract_boolean_decomposition(built.complex, k.dim + 1)
                built_ok = verify_gamma_interpretation(k, dec) and face_count_identity(dec)
                witness = None
            except ValueError as exc:
                built_ok, witness = False, str(exc)
            ok = _vec(f) == oracle and nonneg and kk and built_ok
            out.append(Record(
                f"sd(bd simplex {n})", ok, {"n": n},
                {"f": _vec(f), "f_oracle": oracle, "h": _vec(h), "gamma": _vec(g),
                 "nonnegative": nonneg, "kk_valid_tail": kk, "build_ok": built_ok},
                witness,
            ))
        return out

    return _run("subdivisions", {"n_values": list(n_values)}, seed, body)


def _random_lsops(k: SimplicialComplex, rng: random.Random, draws: int) -> list[list[dict]]:
    return [random_lsop(k, rng) for _ in range(draws)]


def artinian_instances(
    polygon_max: int = 12, cross_max: int = 4, join_max: int = 6, sd_values: tuple[int, ...] = (3, 4)
) -> list[tuple[str, SimplicialComplex, Coloring | None]]:
    """The Cohen–Macaulay families whose Artinian dims are compared to ``h``."""
    out: list[tuple[str, SimplicialComplex, Coloring | None]] = []
    for n in range(4, polygon_max + 1):
        k = polygon(n)
        out.append((f"C{n:02d}", k, find_proper_coloring(k, 2)))
    for d in range(1, cross_max + 1):
        k = cross_polytope_boundary(d)
        out.append((f"cross{d}", k, Coloring({v: (v - 1) % d + 1 for v in k.vertices}, d)))
    for n in range(4, join_max + 1):
        for m in range(n, join_max + 1):
            k = polygon_join(n, m)
            out.append((f"C{n:02d}*C{m:02d}", k, find_proper_coloring(k, 4)))
    for n in sd_values:
        out.append((f"sd(bd simplex {n})", boundary_subdivision(n), subdivision_coloring(simplex_boundary(n + 1))))
    return out


def suite_artinian(draws: int = 3, seed: int = 0, **family) -> SuiteReport:
    """Artinian dims equal ``h`` under the coloring l.s.o.p. (when balanced) and ``draws`` random ones."""

    def body():
        rng = random.Random(seed)
        out = []
        for name, k, coloring in artinian_instances(**family):
            h = _vec(h_vector(k))
            runs = {}
            if coloring is not None:
                runs["coloring"] = GradedQuotient(k, coloring_lsop(k, coloring)).dims
            for i, forms in enumerate(_random_lsops(k, rng, draws)):
                runs[f"random{i}"] = GradedQuotient(k, forms).dims
            bad = {key: dims for key, dims in runs.items() if dims != h}
            out.append(Record(name, not bad, {"balanced": coloring is not None},
                              {"h": h, "dims": runs}, bad or None))
        return out

    return _run("artinian", {"draws": draws, **family}, seed, body)


def pou_instances(join_max: int = 6, cross_values: tuple[int, ...] = (2, 3, 4)) -> list[tuple[str, SimplicialComplex]]:
    out = [(f"cross{d}", cross_polytope_boundary(d)) for d in cross_values]
    for n in range(4, join_max + 1):
        for m in range(n, join_max + 1):
            out.append((f"C{n:02d}*C{m:02d}", polygon_join(n, m)))
    return out


def suite_pou(seed: int = 0, edge_level: bool = True, **family) -> SuiteReport:
    """Vertex-level injectivity for ``k < d`` and edge-level for ``k < d - 1``."""

    def body():
        rng = random.Random(seed)
        out = []
        for name, k in pou_instances(**family):
            forms = random_lsop(k, rng)
            d = k.dim + 1
            vertex = []
            for deg in range(d):
                inj, r, dims = partition_of_unity_check(k, forms, deg)
                vertex.append({"k": deg, "injective": inj, "rank": r, "source": dims["source"],
                               "target": sum(dims["targets"])})
            edge = []
            if edge_level:
                for deg in range(d - 1):
                    inj, r = edge_partition_check(k, forms, deg)
                    edge.append({"k": deg, "injective": inj, "rank": r})
            bad = [e for e in vertex + edge if not e["injective"]]
            out.append(Record(name, not bad, {"d": d}, {"vertex": vertex, "edge": edge}, bad or None))
        return out

    return _run("pou", {"edge_level": edge_level, **family}, seed, body)


def balanced_families() -> list[tuple[str, SimplicialComplex, Coloring]]:
    """Generated balanced complexes: even polygons, cross-polytopes, even joins, subdivisions."""
    out = []
    for n in (4, 6, 8, 10, 12):
        k = polygon(n)
        out.append((f"C{n:02d}", k, find_proper_coloring(k, 2)))
    for d in (2, 3, 4):
        k = cross_polytope_boundary(d)
        out.append((f"cross{d}", k, Coloring({v: (v - 1) % d + 1 for v in k.vertices}, d)))
    k = polygon_join(4, 6)
    out.append(("C04*C06", k, find_proper_coloring(k, 4)))
    for n in (2, 3):
        out.append((f"sd(bd simplex {n})", boundary_subdivision(n), subdivision_coloring(simplex_boundary(n + 1))))
    return out


def _theta_record(name: str, k: SimplicialComplex, c: Coloring) -> Record:
    squares = {i: theta_square_in_B(k, c, i) for i in range(1, c.d + 1)}
    squares_ok = all(not v for v in squares.values())
    mismatches = []
    checked = 0
    for size in range(1, c.d + 1):
        for colors in combinations(range(1, c.d + 1), size):
            checked += 1
            expected = {f: 1 for f in rainbow_faces(k, c, colors)}
            if theta_monomial_in_B(k, c, colors) != expected:
                mismatches.append(list(colors))
    ok = squares_ok and not mismatches
    witness = None
    if not ok:
        witness = {"nonzero_squares": [i for i, v in squares.items() if v], "monomials": mismatches}
    return Record(name, ok, {"d": c.d, "vertices": k.num_vertices},
                  {"squares_zero": squares_ok, "monomials_checked": checked}, witness)


def suite_theta(count: int = 50, seed: int = 7, max_vertices: int = 12) -> SuiteReport:
    """``θ_i^2 = 0`` in ``B(Γ)`` and ``Π_{i∈T} θ_i`` is the sum of ``T``-rainbow faces."""

    def body():
        rng = random.Random(seed)
        out = []
        for i in range(count):
            k, c = random_balanced_complex(rng, max_vertices)
            out.append(_theta_record(f"random{i:03d}", k, c))
        for name, k, c in balanced_families():
            out.append(_theta_record(name, k, c))
        return out

    return _run("theta", {"count": count, "max_vertices": max_vertices}, seed, body)


def _completion_record(name: str, g: SimplicialComplex, c: Coloring) -> Record:
    sh = color_completion(g, c, c.d)
    h = _vec(h_vector(sh.complex))
    want = [1] + _vec(f_vector(g)) + [0] * (c.d - g.dim - 1)
    shelled = shelling_partition_check(sh)
    bijective = sorted(sh.restrictions) == sorted(g.faces())
    ok = h == want and shelled and bijective
    return Record(name, ok, {"d": c.d, "facets": _faces(g)},
                  {"h": h, "expected": want, "shelling": shelled, "restrictions_biject": bijective},
                  None if ok else {"h": h, "expected": want})


def suite_completion(count: int = 100, seed: int = 0, max_vertices: int = 12) -> SuiteReport:
    """``h(C(Γ)) = (1, f(Γ))`` with a verified shelling, on random balanced ``Γ``."""

    def body():
        rng = random.Random(seed)
        out = []
        for i in range(count):
            g, c = random_balanced_complex(rng, max_vertices)
            out.append(_completion_record(f"random{i:03d}", g, c))
        g, _ = build_gamma_complex((1, 1), 2)
        out.append(_completion_record("pentagon Gamma", g, find_proper_coloring(g, 2)))
        return out

    return _run("completion", {"count": count, "max_vertices": max_vertices}, seed, body)


def _random_kk_gamma(rng: random.Random, d_max: int = 8) -> tuple[tuple[int, ...], int]:
    """Gamma vector ``(1, f(S))`` from a random complex ``S`` small enough for ``d``."""
    d = rng.randint(2, d_max)
    top = d // 2
    n = rng.randint(1, 7)
    faces = [face(rng.sample(range(1, n + 1), rng.randint(1, min(top, n)))) for _ in range(rng.randint(1, 6))]
    s = SimplicialComplex(faces)
    return (1,) + f_vector(s).entries, d


def roundtrip_inputs(seed: int = 0, random_count: int = 20, max_faces: int = 1 << 16) -> list[tuple[str, tuple[int, ...], int]]:
    out: list[tuple[str, tuple[int, ...], int]] = []
    for n in range(4, 65):
        out.append((f"polygon C{n:02d}", (1, n - 4), 2))
    sizes = (4, 5, 6, 8)
    for a in sizes:
        for b in sizes:
            if a <= b:
                out.append((f"join C{a}*C{b}", tuple(convolve([1, a - 4], [1, b - 4])), 4))
                for c in sizes:
                    if b <= c:
                        g = convolve(convolve([1, a - 4], [1, b - 4]), [1, c - 4])
                        out.append((f"join C{a}*C{b}*C{c}", tuple(g), 6))
    for a in sizes:
        g = [1]
        for _ in range(4):
            g = convolve(g, [1, a - 4])
        out.append((f"join C{a}^4", tuple(g), 8))
    rng = random.Random(seed)
    for i in range(random_count):
        g, d = _random_kk_gamma(rng)
        out.append((f"random{i:02d}", g, d))
    return [(name, g, d) for name, g, d in out if sum(_face_total(g, d)) <= max_faces]


def _face_total(g, d) -> list[int]:
    padded = tuple(g) + (0,) * (d // 2 + 1 - len(g))
    return [1] + list(f_from_gamma(padded, d).entries)


def suite_roundtrip(seed: int = 0, random_count: int = 20) -> SuiteReport:
    """``extract(build(g, d))`` recovers ``S`` and satisfies the face-count identity."""

    def body():
        out = []
        for name, g, d in roundtrip_inputs(seed, random_count):
            try:
                gamma_cx, built = build_gamma_complex(g, d)
                dec = extract_boolean_decomposition(gamma_cx, d)
                f_s = _vec(f_vector(dec.gamma_complex))
                tail = list(g[1:]) + [0] * (d // 2 - len(g) + 1)
                tail_nz = tail[: len(f_s)]
                ok = (
                    f_s == tail_nz
                    and all(x == 0 for x in tail[len(f_s):])
                    and dec.gamma_complex.dim <= d // 2 - 1
                    and face_count_identity(dec)
                    and dec.boolean_order == built.boolean_order
                )
                witness = None if ok else {"f_S": f_s, "tail": tail}
                outputs = {"f_S": f_s, "dim_S": dec.gamma_complex.dim, "faces": sum(_face_total(g, d))}
            except (DecompositionError, ValueError) as exc:
                ok, witness, outputs = False, str(exc), {}
            out.append(Record(name, ok, {"gamma": list(g), "d": d}, outputs, witness))
        return out

    return _run("roundtrip", {"random_count": random_count}, seed, body)


def suite_controls(seed: int = 0) -> SuiteReport:
    """Negative controls: each record passes when the expected failure happens."""

    def body():
        out = []
        c5 = find_proper_coloring(polygon(5), 2)
        out.append(Record("C5 has no proper 2-coloring", c5 is None, {}, {"coloring": None if c5 is None else c5.colors}))
        flag, nonfaces = is_flag(polygon(3))
        out.append(Record("hollow triangle is not flag", not flag, {},
                          {"flag": flag, "witness": [list(vertices_of(m)) for m in nonfaces if m.bit_count() > 2]}))
        two_tops = SimplicialComplex.from_facets([[1, 2], [3, 4]])
        try:
            extract_boolean_decomposition(two_tops, 2)
            reason = None
        except DecompositionError as exc:
            reason = exc.reason
        out.append(Record("two top faces are ambiguous", reason == "ambiguous Boolean part", {},
                          {"reason": reason}))
        return out

    return _run("controls", {}, seed, body)


SUITES: dict[str, Callable[..., SuiteReport]] = {
    "polygons": suite_polygons,
    "joins": suite_joins,
    "subdivisions": suite_subdivisions,
    "artinian": suite_artinian,
    "pou": suite_pou,
    "theta": suite_theta,
    "completion": suite_completion,
    "roundtrip": suite_roundtrip,
    "controls": suite_controls,
}


def run_suite(name: str, seed: int | None = None, **params) -> SuiteReport:
    try:
        fn = SUITES[name]
    except KeyError:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}") from None
    if seed is not None:
        params["seed"] = seed
    return fn(**params)
