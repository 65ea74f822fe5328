"""Exact-rational linear complementarity instances from cyclic extensions.

A cyclic extension is realized by vectors on the moment curve, one per
element, negated for flip-set members.  Splitting the resulting n x (2n+1)
matrix into the blocks of the first pair members, the second pair members
and q turns the complementarity problem over the matroid into a standard
LCP: find w, z >= 0 with w - M z = q and w^T z = 0.  All arithmetic is
exact over the rationals so sign decisions are never at the mercy of
floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Optional, Sequence

from .cube import Orientation
from .matroid import Q, CyclicExtension

P_MATRIX_CAP = 12  # principal minors double per extra dimension


class DegenerateQ(ValueError):
    """A complementary basic solution has an exactly-zero component."""


def format_fraction(x: Fraction) -> str:
    return str(x)


def parse_fraction(s: str) -> Fraction:
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational number: {s!r}") from exc


class RationalMatrix:
    """A dense matrix of Fractions with exact elimination-based solvers."""

    __slots__ = ("nrows", "ncols", "rows")

    def __init__(self, rows: Iterable[Iterable[Fraction | int]]) -> None:
        self.rows = tuple(tuple(Fraction(x) for x in row) for row in rows)
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else 0
        if any(len(row) != self.ncols for row in self.rows):
            raise ValueError("rows have unequal lengths")

    @classmethod
    def identity(cls, k: int) -> "RationalMatrix":
        return cls([[1 if i == j else 0 for j in range(k)] for i in range(k)])

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, RationalMatrix) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in row) for row in self.rows)
        return f"RationalMatrix[{body}]"

    def to_text(self) -> str:
        """Rows of whitespace-separated fractions, one line per row."""
        return "\n".join(" ".join(format_fraction(x) for x in row) for row in self.rows)

    def __neg__(self) -> "RationalMatrix":
        return RationalMatrix([[-x for x in row] for row in self.rows])

    def column(self, j: int) -> tuple[Fraction, ...]:
        return tuple(row[j] for row in self.rows)

    def columns(self, js: Sequence[int]) -> "RationalMatrix":
        return RationalMatrix([[row[j] for j in js] for row in self.rows])

    def principal_submatrix(self, idx: Sequence[int]) -> "RationalMatrix":
        return RationalMatrix([[self.rows[i][j] for j in idx] for i in idx])

    def det(self) -> Fraction:
        """Determinant by fraction-pivot Gaussian elimination."""
        if self.nrows != self.ncols:
            raise ValueError("determinant needs a square matrix")
        a = [list(row) for row in self.rows]
        k = self.nrows
        sign = 1
        result = Fraction(1)
        for col in range(k):
            pivot = next((r for r in range(col, k) if a[r][col]), None)
            if pivot is None:
                return Fraction(0)
            if pivot != col:
                a[col], a[pivot] = a[pivot], a[col]
                sign = -sign
            p = a[col][col]
            result *= p
            for r in range(col + 1, k):
                if a[r][col]:
                    f = a[r][col] / p
                    for c in range(col + 1, k):
                        a[r][c] -= f * a[col][c]
        return sign * result

    def solve(self, rhs: Sequence[Fraction | int]) -> tuple[Fraction, ...]:
        """Exact solution of A x = rhs for square invertible A."""
        return tuple(self.solve_matrix([[b] for b in rhs]).column(0))

    def solve_matrix(self, rhs: "RationalMatrix | Sequence[Sequence[Fraction | int]]") -> "RationalMatrix":
        if self.nrows != self.ncols:
            raise ValueError("solve needs a square matrix")
        b = rhs if isinstance(rhs, RationalMatrix) else RationalMatrix(rhs)
        if b.nrows != self.nrows:
            raise ValueError("right-hand side has mismatched row count")
        k = self.nrows
        a = [list(self.rows[i]) + list(b.rows[i]) for i in range(k)]
        width = k + b.ncols
        for col in range(k):
            pivot = next((r for r in range(col, k) if a[r][col]), None)
            if pivot is None:
                raise ValueError("matrix is singular")
            a[col], a[pivot] = a[pivot], a[col]
            p = a[col][col]
            for c in range(col, width):
                a[col][c] /= p
            for r in range(k):
                if r != col and a[r][col]:
                    f = a[r][col]
                    for c in range(col, width):
                        a[r][c] -= f * a[col][c]
        return RationalMatrix([row[k:] for row in a])


@dataclass(frozen=True)
class PLCPInstance:
    """Data (M, q) of the problem: find w, z >= 0, w - M z = q, w^T z = 0."""

    n: int
    M: RationalMatrix
    q: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if self.M.nrows != self.n or self.M.ncols != self.n:
            raise ValueError(f"M must be {self.n}x{self.n}")
        if len(self.q) != self.n:
            raise ValueError(f"q must have {self.n} entries")

    def to_json_obj(self) -> dict:
        return {
            "n": self.n,
            "M": [[format_fraction(x) for x in row] for row in self.M.rows],
            "q": [format_fraction(x) for x in self.q],
        }

    @classmethod
    def from_json_obj(cls, obj: dict) -> "PLCPInstance":
        try:
            n = int(obj["n"])
            m = RationalMatrix([[parse_fraction(s) for s in row] for row in obj["M"]])
            q = tuple(parse_fraction(s) for s in obj["q"])
        except (KeyError, TypeError) as exc:
            raise ValueError(f"instance JSON needs 'n', 'M', 'q': {exc}") from exc
        return cls(n, m, q)


@dataclass(frozen=True)
class CandidateSolution:
    """The complementary point with z supported on a chosen index set."""

    vertex: int
    w: tuple[Fraction, ...]
    z: tuple[Fraction, ...]

    @property
    def feasible(self) -> bool:
        return all(x >= 0 for x in self.w) and all(x >= 0 for x in self.z)


def realization_matrix(
    ext: CyclicExtension, abscissae: Optional[Sequence[Fraction | int]] = None
) -> RationalMatrix:
    """Moment-curve vectors of all 2n+1 elements, flip-set columns negated.

    Column order is 1..n, n+1..2n, q.  The element on position p sits at
    parameter abscissae[p-1] (default p) and contributes the powers
    1, x, ..., x^(n-1).
    """
    n = ext.n
    if abscissae is None:
        xs = [Fraction(p) for p in range(1, 2 * n + 2)]
    else:
        xs = [Fraction(x) for x in abscissae]
        if len(xs) != 2 * n + 1:
            raise ValueError(f"need {2 * n + 1} abscissae, got {len(xs)}")
        if any(a >= b for a, b in zip(xs, xs[1:])):
            raise ValueError("abscissae must be strictly increasing")
    cols = []
    for e in list(range(1, 2 * n + 1)) + [Q]:
        x = xs[ext.position[e] - 1]
        sign = -1 if e in ext.flipped else 1
        cols.append([sign * x**k for k in range(n)])
    return RationalMatrix([[cols[j][i] for j in range(2 * n + 1)] for i in range(n)])


def translate_to_plcp(v: RationalMatrix, ext: Optional[CyclicExtension] = None) -> PLCPInstance:
    """Fold a realization matrix into (M, q).

    With V = [V_S | V_T | v_q] split after columns n and 2n, the basis
    change to the first block gives M = -V_S^{-1} V_T and q = -V_S^{-1} v_q.
    Passing the source extension just adds a dimension cross-check.
    """
    n = v.nrows
    if v.ncols != 2 * n + 1:
        raise ValueError(f"realization matrix must be {n}x{2 * n + 1}")
    if ext is not None and ext.n != n:
        raise ValueError(f"extension has n={ext.n}, matrix has n={n}")
    v_s = v.columns(range(n))
    rest = v.columns(range(n, 2 * n + 1))
    folded = -v_s.solve_matrix(rest)
    m = folded.columns(range(n))
    q = folded.column(n)
    return PLCPInstance(n, m, q)


def is_p_matrix(m: RationalMatrix) -> bool:
    """All principal minors positive, checked exactly with early exit."""
    if m.nrows != m.ncols:
        raise ValueError("P-matrix test needs a square matrix")
    n = m.nrows
    if n > P_MATRIX_CAP:
        raise ValueError(f"principal minor enumeration capped at n={P_MATRIX_CAP}")
    for size in range(1, n + 1):
        for idx in combinations(range(n), size):
            if m.principal_submatrix(idx).det() <= 0:
                return False
    return True


def solve_candidate(instance: PLCPInstance, vertex: int) -> CandidateSolution:
    """Solve w - M z = q with z supported on the vertex set, w on the rest.

    vertex is a bitmask over dimensions 1..n; bit i-1 set moves pair i to
    the z side.  The free components must come out nonzero, otherwise the
    instance cannot discriminate an orientation and DegenerateQ is raised.
    """
    n = instance.n
    if not 0 <= vertex < 1 << n:
        raise ValueError(f"vertex {vertex} out of range for n={n}")
    cols = []
    for i in range(n):
        if vertex >> i & 1:
            cols.append([-instance.M[r, i] for r in range(n)])
        else:
            cols.append([Fraction(int(r == i)) for r in range(n)])
    basis = RationalMatrix([[cols[j][i] for j in range(n)] for i in range(n)])
    x = basis.solve(instance.q)
    if any(val == 0 for val in x):
        raise DegenerateQ(f"zero component in the basic solution at vertex {vertex}")
    w = tuple(Fraction(0) if vertex >> i & 1 else x[i] for i in range(n))
    z = tuple(x[i] if vertex >> i & 1 else Fraction(0) for i in range(n))
    for r in range(n):
        lhs = w[r] - sum(instance.M[r, j] * z[j] for j in range(n))
        assert lhs == instance.q[r], "complementary solve failed its own equation"
    return CandidateSolution(vertex, w, z)


def plcp_to_uso(instance: PLCPInstance) -> Orientation:
    """Orient each cube vertex by the signs of its basic solution.

    Dimension i points away from vertex v exactly when the solved pair-i
    component is negative; for a P-matrix M this is a unique sink
    orientation whose sink is the feasible complementary basis.
    """
    n = instance.n
    table = []
    for v in range(1 << n):
        sol = solve_candidate(instance, v)
        out = 0
        for i in range(n):
            val = sol.z[i] if v >> i & 1 else sol.w[i]
            if val < 0:
                out |= 1 << i
        table.append(out)
    return Orientation(n, tuple(table))
