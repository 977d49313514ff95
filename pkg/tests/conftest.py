import os
from fractions import Fraction
from itertools import chain, combinations

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("ci", deadline=None, max_examples=30, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


# -- brute-force oracles, written against plain Python sets ------------------


def powerset(items):
    items = list(items)
    return chain.from_iterable(combinations(items, r) for r in range(len(items) + 1))


def closure(facets):
    """Every subset of every facet, as frozensets."""
    out = set()
    for f in facets:
        for s in powerset(sorted(f)):
            out.add(frozenset(s))
    return out


def mask_set(mask):
    return frozenset(i for i in range(64) if mask >> i & 1)


def dense_rank(rows):
    """Textbook Gaussian elimination over Fraction; independent of the package."""
    m = [[Fraction(x) for x in r] for r in rows]
    rank, col = 0, 0
    ncols = len(m[0]) if m else 0
    while rank < len(m) and col < ncols:
        piv = next((i for i in range(rank, len(m)) if m[i][col] != 0), None)
        if piv is None:
            col += 1
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for i in range(len(m)):
            if i != rank and m[i][col] != 0:
                t = m[i][col] / m[rank][col]
                m[i] = [a - t * b for a, b in zip(m[i], m[rank])]
        rank += 1
        col += 1
    return rank


def poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def poly_pow(a, n):
    out = [1]
    for _ in range(n):
        out = poly_mul(out, a)
    return out


@st.composite
def complexes(draw, max_vertex=7, max_facets=6, max_size=4, min_vertex=0):
    """Random complexes as lists of facet vertex lists."""
    verts = st.integers(min_vertex, max_vertex)
    facets = draw(
        st.lists(st.sets(verts, min_size=0, max_size=max_size), min_size=1, max_size=max_facets)
    )
    return [sorted(f) for f in facets]


@pytest.fixture
def pentagon():
    from flaggamma import polygon

    return polygon(5)


@pytest.fixture
def octahedron():
    from flaggamma import cross_polytope_boundary

    return cross_polytope_boundary(3)


# -- acceptance summary -------------------------------------------------------

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
