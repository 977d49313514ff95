"""Exact linear algebra over the rationals.

Rows are sparse ``dict[int, Fraction]`` maps from column index to a nonzero
entry.  :class:`Echelon` keeps a fully reduced row echelon form that grows one
row at a time, which is what both the homology ranks and the Artinian
quotients need: rank, and normal forms of vectors modulo a row space.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .complex import format_face

Row = dict[int, Fraction]


def sparse(values: Mapping[int, object]) -> Row:
    """Copy ``values`` into a row of Fractions, dropping zeros."""
    return {c: Fraction(v) for c, v in values.items() if v}


class Echelon:
    """Incrementally maintained reduced row echelon form.

    Every stored row has a leading 1 in its pivot column and no entries in the
    pivot columns of the other rows.  New pivots are chosen Markowitz style,
    on the column shared by the fewest stored rows, which keeps the rows of
    the local relation matrices met here sparse.
    """

    def __init__(self, ncols: int | None = None):
        self.ncols = ncols
        self.rows: dict[int, Row] = {}
        self._users: dict[int, set[int]] = {}

    @property
    def rank(self) -> int:
        return len(self.rows)

    @property
    def pivots(self) -> list[int]:
        return sorted(self.rows)

    def is_full(self) -> bool:
        return self.ncols is not None and len(self.rows) >= self.ncols

    def reduce(self, row: Mapping[int, Fraction]) -> Row:
        """Normal form of ``row`` modulo the stored row space."""
        out = dict(row)
        rows = self.rows
        for c in [c for c in out if c in rows]:
            coef = out.pop(c)
            for j, v in rows[c].items():
                if j == c:
                    continue
                nv = out.get(j, 0) - coef * v
                if nv:
                    out[j] = nv
                else:
                    del out[j]
        return out

    def add(self, row: Mapping[int, Fraction]) -> bool:
        """Insert ``row``; returns whether the rank went up."""
        r = self.reduce(row)
        if not r:
            return False
        users = self._users
        piv = min(r, key=lambda j: (len(users.get(j, ())), _weight(r[j]), j))
        inv = 1 / r[piv]
        r = {j: v * inv for j, v in r.items()}
        for owner in users.pop(piv, set()):
            other = self.rows[owner]
            coef = other.pop(piv)
            for j, v in r.items():
                if j == piv:
                    continue
                nv = other.get(j, 0) - coef * v
                if nv:
                    if j not in other:
                        users.setdefault(j, set()).add(owner)
                    other[j] = nv
                else:
                    other.pop(j, None)
                    users[j].discard(owner)
        for j in r:
            if j != piv:
                users.setdefault(j, set()).add(piv)
        self.rows[piv] = r
        return True

    def extend(self, rows: Iterable[Mapping[int, Fraction]]) -> "Echelon":
        for row in rows:
            if self.is_full():
                break
            self.add(row)
        return self


def _weight(x: Fraction) -> int:
    return abs(x.numerator) * x.denominator


def rank(rows: Iterable[Mapping[int, Fraction]], ncols: int | None = None) -> int:
    return Echelon(ncols).extend(rows).rank


def dense_rank(matrix: Sequence[Sequence[object]]) -> int:
    """Rank of a dense matrix given as a list of rows."""
    ncols = max((len(r) for r in matrix), default=0)
    return rank((sparse(dict(enumerate(r))) for r in matrix), ncols)


def solve_left(rows: Sequence[Row], target: Row) -> list[Fraction] | None:
    """Coefficients ``c`` with ``sum(c[i] * rows[i]) == target``, or None.

    Used to invert the restriction of a linear system to a facet; the systems
    involved are tiny, so this is plain elimination on an augmented matrix.
    """
    n = len(rows)
    cols = sorted(set().union(*rows, target)) if rows else sorted(target)
    # transpose: one equation per column, unknowns c_0..c_{n-1}
    eqs = []
    for c in cols:
        eq = [Fraction(rows[i].get(c, 0)) for i in range(n)]
        eq.append(Fraction(target.get(c, 0)))
        eqs.append(eq)
    piv_cols = []
    r = 0
    for col in range(n):
        pr = next((i for i in range(r, len(eqs)) if eqs[i][col]), None)
        if pr is None:
            continue
        eqs[r], eqs[pr] = eqs[pr], eqs[r]
        inv = 1 / eqs[r][col]
        eqs[r] = [v * inv for v in eqs[r]]
        for i in range(len(eqs)):
            if i != r and eqs[i][col]:
                f = eqs[i][col]
                eqs[i] = [a - f * b for a, b in zip(eqs[i], eqs[r])]
        piv_cols.append(col)
        r += 1
    if any(eq[n] for eq in eqs[r:]):
        return None
    sol = [Fraction(0)] * n
    for i, col in enumerate(piv_cols):
        sol[col] = eqs[i][n]
    return sol


def format_rational(x: Fraction) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def _label(lab) -> str:
    # integer labels are face masks
    return format_face(lab) if isinstance(lab, int) else str(lab)


class RationalMatrix:
    """Dense exact matrix with face labels on rows and columns."""

    def __init__(self, rows: Sequence[Sequence[Fraction]], row_labels=(), col_labels=(), degree=None):
        self.rows = [list(map(Fraction, r)) for r in rows]
        self.row_labels = list(row_labels)
        self.col_labels = list(col_labels)
        self.degree = degree

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.col_labels) if self.col_labels else (len(self.rows[0]) if self.rows else 0)

    def rank(self) -> int:
        return dense_rank(self.rows)

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        n = other.shape[1]
        prod = []
        for r in self.rows:
            out = [Fraction(0)] * n
            for k, a in enumerate(r):
                if a:
                    for j, b in enumerate(other.rows[k]):
                        if b:
                            out[j] += a * b
            prod.append(out)
        return RationalMatrix(prod, self.row_labels, other.col_labels, self.degree)

    @staticmethod
    def vstack(mats: Sequence["RationalMatrix"]) -> "RationalMatrix":
        rows, labels = [], []
        for m in mats:
            rows.extend(m.rows)
            labels.extend(m.row_labels)
        cols = mats[0].col_labels if mats else []
        return RationalMatrix(rows, labels, cols, mats[0].degree if mats else None)

    def dump(self) -> str:
        """Text dump: degree, column labels, then one labelled row per line."""
        lines = [f"degree {self.degree}"]
        lines.append("cols " + " ".join(_label(c) for c in self.col_labels))
        for lab, r in zip(self.row_labels or [None] * len(self.rows), self.rows):
            lines.append(_label(lab) + " " + " ".join(format_rational(v) for v in r))
        return "\n".join(lines) + "\n"
