"""f-, h- and gamma-vectors, and rational homology.

Everything here is integer arithmetic except the boundary-matrix ranks, which
go through :mod:`flaggamma.linalg` over the rationals.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import comb
from typing import Sequence

from .complex import SimplicialComplex, boundary, vertices_of
from .linalg import Echelon


class Kind(str, Enum):
    F = "F"
    H = "H"
    GAMMA = "GAMMA"


def _expected_length(kind: Kind, d: int) -> int:
    if kind is Kind.F:
        return d
    if kind is Kind.H:
        return d + 1
    return d // 2 + 1


@dataclass(frozen=True)
class IntegerVector:
    """An f-, h- or gamma-vector together with its degree parameter ``d``.

    For ``F`` and ``H``, ``d`` is the dimension of the complex plus one and
    the entries are ``(f_0, ..., f_{d-1})`` or ``(h_0, ..., h_d)``; for
    ``GAMMA`` they are ``(γ_0, ..., γ_{⌊d/2⌋})``.
    """

    kind: Kind
    d: int
    entries: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "kind", Kind(self.kind))
        object.__setattr__(self, "entries", tuple(int(x) for x in self.entries))
        if self.d < 0:
            raise ValueError("d must be non-negative")
        want = _expected_length(self.kind, self.d)
        if len(self.entries) != want:
            raise ValueError(
                f"{self.kind.value}-vector with d={self.d} needs {want} entries, got {len(self.entries)}"
            )
        if self.kind is Kind.F and any(x < 0 for x in self.entries):
            raise ValueError("f-vector entries must be non-negative")

    @classmethod
    def f(cls, entries: Sequence[int]) -> "IntegerVector":
        return cls(Kind.F, len(entries), tuple(entries))

    @classmethod
    def h(cls, entries: Sequence[int]) -> "IntegerVector":
        return cls(Kind.H, len(entries) - 1, tuple(entries))

    @classmethod
    def gamma(cls, entries: Sequence[int], d: int) -> "IntegerVector":
        entries = tuple(entries)
        want = d // 2 + 1
        if len(entries) < want:
            entries += (0,) * (want - len(entries))
        return cls(Kind.GAMMA, d, entries)

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def to_json(self) -> str:
        return json.dumps({"kind": self.kind.value, "d": self.d, "entries": list(self.entries)})

    @classmethod
    def from_json(cls, text: str) -> "IntegerVector":
        obj = json.loads(text)
        return cls(Kind(obj["kind"]), int(obj["d"]), tuple(obj["entries"]))


def _as_f(f) -> IntegerVector:
    return f if isinstance(f, IntegerVector) else IntegerVector.f(f)


def _as_h(h) -> IntegerVector:
    return h if isinstance(h, IntegerVector) else IntegerVector.h(h)


def f_vector(k: SimplicialComplex) -> IntegerVector:
    return IntegerVector.f([k.num_faces(i + 1) for i in range(k.dim + 1)])


def h_from_f(f) -> IntegerVector:
    """``h_i = Σ_j (-1)^(i-j) C(d-j, i-j) f_{j-1}`` with ``f_{-1} = 1``."""
    f = _as_f(f)
    d = f.d
    ext = (1,) + f.entries
    return IntegerVector.h(
        [sum((-1) ** (i - j) * comb(d - j, i - j) * ext[j] for j in range(i + 1)) for i in range(d + 1)]
    )


def f_from_h(h) -> IntegerVector:
    """Inverse of :func:`h_from_f`: ``f_{i-1} = Σ_j C(d-j, i-j) h_j``."""
    h = _as_h(h)
    d = h.d
    ext = [sum(comb(d - j, i - j) * h[j] for j in range(i + 1)) for i in range(d + 1)]
    if ext[0] != 1:
        raise ValueError(f"h_0 must be 1, got {ext[0]}")
    return IntegerVector.f(ext[1:])


def h_vector(k: SimplicialComplex) -> IntegerVector:
    return h_from_f(f_vector(k))


def is_palindromic(h) -> bool:
    e = _as_h(h).entries
    return e == e[::-1]


def gamma_from_h(h) -> IntegerVector:
    """Coordinates of a palindromic ``h`` in the basis ``x^i (x+1)^(d-2i)``.

    The system is unitriangular, so the solution is integral and unique.
    """
    h = _as_h(h)
    if not is_palindromic(h):
        raise ValueError(f"h-vector {list(h.entries)} is not palindromic")
    d = h.d
    g: list[int] = []
    for i in range(d // 2 + 1):
        g.append(h[i] - sum(g[j] * comb(d - 2 * j, i - j) for j in range(i)))
    return IntegerVector(Kind.GAMMA, d, tuple(g))


def gamma_to_h(g, d: int | None = None) -> IntegerVector:
    """Expand ``Σ γ_i x^i (x+1)^(d-2i)``."""
    if isinstance(g, IntegerVector):
        d = g.d if d is None else d
        g = g.entries
    if d is None:
        raise ValueError("d is required for a bare gamma sequence")
    if len(g) != d // 2 + 1:
        raise ValueError(f"gamma-vector for d={d} needs {d // 2 + 1} entries")
    h = [0] * (d + 1)
    for i, gi in enumerate(g):
        for t in range(d - 2 * i + 1):
            h[i + t] += gi * comb(d - 2 * i, t)
    return IntegerVector.h(h)


def f_from_gamma(g, d: int | None = None) -> IntegerVector:
    """f-vector of a Boolean-decomposed complex: ``f_{i-1} = Σ_j γ_j C(d-2j, i-j)``.

    These are the entries ``h_1..h_d`` of :func:`gamma_to_h`; the empty face
    accounts for ``h_0``.
    """
    if isinstance(g, IntegerVector):
        d = g.d if d is None else d
        g = g.entries
    if d is None:
        raise ValueError("d is required for a bare gamma sequence")
    f = [sum(gj * comb(d - 2 * j, i - j) for j, gj in enumerate(g) if j <= i) for i in range(1, d + 1)]
    return IntegerVector.f(f)


def charney_davis_gamma_top(h) -> int:
    """``(-1)^(d/2) h(-1)``, the top gamma entry for even ``d``."""
    h = _as_h(h)
    if h.d % 2:
        raise ValueError("Charney–Davis quantity needs even d")
    if not is_palindromic(h):
        raise ValueError("h-vector is not palindromic")
    return (-1) ** (h.d // 2) * sum((-1) ** i * x for i, x in enumerate(h.entries))


def convolve(a: Sequence[int], b: Sequence[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


# -- homology --------------------------------------------------------------


def boundary_rank(k: SimplicialComplex, size: int) -> int:
    """Rank of ``∂ : C_{size-1} → C_{size-2}`` (``size = 1`` is the augmentation)."""
    if size < 1 or size > k.dim + 1:
        return 0
    lower = {m: i for i, m in enumerate(k.faces_of_size(size - 1))}
    ech = Echelon(len(lower))
    for m in k.faces_of_size(size):
        row = {}
        sign = 1
        for b in boundary(m):
            # boundary() drops vertices in increasing order
            row[lower[b]] = Fraction(sign)
            sign = -sign
        ech.add(row)
        if ech.is_full():
            break
    return ech.rank


def homology_ranks(k: SimplicialComplex) -> list[int]:
    """Reduced rational Betti numbers in dimensions ``0..dim K``."""
    top = k.dim
    ranks = [boundary_rank(k, s) for s in range(top + 3)]
    return [k.num_faces(i + 1) - ranks[i + 1] - ranks[i + 2] for i in range(top + 1)]


def is_pseudomanifold(k: SimplicialComplex) -> bool:
    """Pure, and every codimension-one face lies in exactly two facets."""
    if not k.is_pure():
        return False
    if k.dim < 1:
        return True
    count: dict[int, int] = {}
    for m in k.facets:
        for b in boundary(m):
            count[b] = count.get(b, 0) + 1
    return all(c == 2 for c in count.values())


def is_homology_sphere(k: SimplicialComplex) -> bool:
    """Rational homology sphere test used throughout the package.

    Checks that the reduced Betti numbers are those of a sphere of dimension
    ``dim K``, the pseudomanifold condition, and recursively the same for the
    link of every vertex.  ``{∅}`` counts as the (-1)-sphere.
    """
    n = k.dim
    if n == -1:
        return True
    if n == 0:
        return k.num_vertices == 2
    betti = homology_ranks(k)
    if betti != [0] * n + [1] or not is_pseudomanifold(k):
        return False
    return all(is_homology_sphere(k.link(1 << v)) for v in vertices_of(k.vertex_set))
