"""Exact matrices over the kernel rings and their fraction fields.

Convention used throughout the package: row vectors act on the left,
v -> v * M, so a chain map F between complexes with boundaries D satisfies
the literal matrix identity D^q * F^{q+1} = F^q * D^q.

Rational ranks use fraction-free Bareiss elimination after clearing row
denominators.  Symbolic solving runs over the fraction field with explicit
numerator/denominator tracking and a final ring-membership (exact division)
check.  Characteristic polynomials use Faddeev-LeVerrier, which needs only
ring arithmetic plus division by integers, valid over Q-algebras.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .errors import (
    NoSolution,
    NonzeroConstantTerm,
    NotAComplex,
    NotInRing,
    ShapeMismatch,
    ZeroAtPole,
)
from .rings import (
    QQ,
    Poly,
    PolyRing,
    RationalField,
    SeriesRing,
    exp_substitute,
    linearize,
    poly_ring,
)

class RingMatrix:
    """Dense matrix with entries in one ring (Fraction, Poly, or series)."""

    __slots__ = ("ring", "rows", "cols", "entries")

    def __init__(self, ring, entries: Sequence[Sequence]):
        self.ring = ring
        self.entries = [list(row) for row in entries]
        self.rows = len(self.entries)
        self.cols = len(self.entries[0]) if self.entries else 0
        for row in self.entries:
            if len(row) != self.cols:
                raise ShapeMismatch("ragged rows")

    # -- constructors --------------------------------------------------------

    @staticmethod
    def zero(ring, rows: int, cols: int) -> "RingMatrix":
        return RingMatrix(ring, [[ring.zero() for _ in range(cols)] for _ in range(rows)])

    @staticmethod
    def identity(ring, size: int) -> "RingMatrix":
        out = RingMatrix.zero(ring, size, size)
        for i in range(size):
            out.entries[i][i] = ring.one()
        return out

    @staticmethod
    def from_rows(ring, entries) -> "RingMatrix":
        return RingMatrix(ring, entries)

    # -- protocol ------------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, RingMatrix):
            return NotImplemented
        return (self.ring == other.ring and self.rows == other.rows
                and self.cols == other.cols and self.entries == other.entries)

    def __getitem__(self, key: tuple[int, int]):
        i, j = key
        return self.entries[i][j]

    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def is_zero(self) -> bool:
        zero = self.ring.zero()
        return all(e == zero for row in self.entries for e in row)

    def is_identity(self) -> bool:
        if self.rows != self.cols:
            return False
        return self == RingMatrix.identity(self.ring, self.rows)

    def row(self, i: int) -> list:
        return list(self.entries[i])

    def col(self, j: int) -> list:
        return [self.entries[i][j] for i in range(self.rows)]

    def transpose(self) -> "RingMatrix":
        return RingMatrix(self.ring, [[self.entries[i][j] for i in range(self.rows)]
                                      for j in range(self.cols)])

    def map_entries(self, fn: Callable, ring=None) -> "RingMatrix":
        return RingMatrix(ring if ring is not None else self.ring,
                          [[fn(e) for e in row] for row in self.entries])

    def __add__(self, other: "RingMatrix") -> "RingMatrix":
        if self.shape() != other.shape() or self.ring != other.ring:
            raise ShapeMismatch(f"add {self.shape()} vs {other.shape()}")
        return RingMatrix(self.ring, [[a + b for a, b in zip(r1, r2)]
                                      for r1, r2 in zip(self.entries, other.entries)])

    def __sub__(self, other: "RingMatrix") -> "RingMatrix":
        if self.shape() != other.shape() or self.ring != other.ring:
            raise ShapeMismatch(f"sub {self.shape()} vs {other.shape()}")
        return RingMatrix(self.ring, [[a - b for a, b in zip(r1, r2)]
                                      for r1, r2 in zip(self.entries, other.entries)])

    def __neg__(self) -> "RingMatrix":
        return self.map_entries(lambda e: -e)

    def __mul__(self, other: "RingMatrix") -> "RingMatrix":
        if not isinstance(other, RingMatrix):
            return NotImplemented
        if self.cols != other.rows or self.ring != other.ring:
            raise ShapeMismatch(f"mul {self.shape()} by {other.shape()}")
        zero = self.ring.zero()
        out = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                acc = zero
                for k in range(self.cols):
                    a = self.entries[i][k]
                    if a == zero:
                        continue
                    acc = acc + a * other.entries[k][j]
                row.append(acc)
            out.append(row)
        return RingMatrix(self.ring, out)

    def scale(self, c) -> "RingMatrix":
        def mul(e):
            return e.scale(c) if hasattr(e, "scale") else e * Fraction(c)
        return self.map_entries(mul)

    def trace(self):
        if self.rows != self.cols:
            raise ShapeMismatch("trace of non-square matrix")
        acc = self.ring.zero()
        for i in range(self.rows):
            acc = acc + self.entries[i][i]
        return acc

    def __repr__(self) -> str:
        body = "; ".join(", ".join(str(e) for e in row) for row in self.entries)
        return f"RingMatrix({self.rows}x{self.cols}: {body})"


def mat_mul(a: RingMatrix, b: RingMatrix) -> RingMatrix:
    return a * b


def mat_add(a: RingMatrix, b: RingMatrix) -> RingMatrix:
    return a + b


def mat_scale(a: RingMatrix, c) -> RingMatrix:
    return a.scale(c)


def evaluate_matrix(m: RingMatrix, point: Sequence[Fraction | int]) -> RingMatrix:
    """Entrywise evaluation of a polynomial matrix at a rational point."""
    if isinstance(m.ring, RationalField):
        return m
    return m.map_entries(lambda p: p.evaluate(point), ring=QQ)


def linearize_matrix(m: RingMatrix, target: PolyRing | None = None) -> tuple[RingMatrix, RingMatrix]:
    """(value at x = 1, entrywise linear part) for a Laurent matrix."""
    if target is None:
        target = poly_ring(m.ring.nvars, var="y")
    const = RingMatrix.zero(QQ, m.rows, m.cols)
    lin = RingMatrix.zero(target, m.rows, m.cols)
    for i in range(m.rows):
        for j in range(m.cols):
            c0, l = linearize(m.entries[i][j], target)
            const.entries[i][j] = c0
            lin.entries[i][j] = l
    return const, lin


def series_matrix(m: RingMatrix, cap: int, target: PolyRing | None = None) -> RingMatrix:
    """exp-substitute each Laurent entry, x_j = exp(y_j), truncated at cap."""
    if target is None:
        target = poly_ring(m.ring.nvars, var="y")
    sring = SeriesRing(target, cap)
    return m.map_entries(lambda p: exp_substitute(p, cap, target), ring=sring)


# -- rational elimination ------------------------------------------------------


def _clear_row_denominators(row: Sequence[Fraction]) -> list[int]:
    lcm = 1
    for v in row:
        lcm = lcm * v.denominator // _gcd(lcm, v.denominator)
    return [int(v * lcm) for v in row]


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def _bareiss_rank_int(grid: list[list[int]]) -> int:
    """Fraction-free Bareiss elimination; all interior divisions are exact."""
    rows = len(grid)
    cols = len(grid[0]) if rows else 0
    rank = 0
    prev = 1
    r = 0
    for c in range(cols):
        pivot_row = next((i for i in range(r, rows) if grid[i][c] != 0), None)
        if pivot_row is None:
            continue
        grid[r], grid[pivot_row] = grid[pivot_row], grid[r]
        pivot = grid[r][c]
        for i in range(r + 1, rows):
            fi = grid[i][c]
            for j in range(c, cols):
                grid[i][j] = (grid[i][j] * pivot - fi * grid[r][j]) // prev
        prev = pivot
        rank += 1
        r += 1
        if r == rows:
            break
    return rank


def rational_rank(m: RingMatrix) -> int:
    if not isinstance(m.ring, RationalField):
        raise ValueError("rational_rank needs a matrix over Q")
    if m.rows == 0 or m.cols == 0:
        return 0
    grid = [_clear_row_denominators(row) for row in m.entries]
    return _bareiss_rank_int(grid)


def rational_det(m: RingMatrix) -> Fraction:
    """Determinant of a square rational matrix via Bareiss elimination."""
    if m.rows != m.cols:
        raise ShapeMismatch("det of non-square matrix")
    n = m.rows
    if n == 0:
        return Fraction(1)
    grid = [[Fraction(v) for v in row] for row in m.entries]
    sign = 1
    prev = Fraction(1)
    for c in range(n):
        pivot_row = next((i for i in range(c, n) if grid[i][c] != 0), None)
        if pivot_row is None:
            return Fraction(0)
        if pivot_row != c:
            grid[c], grid[pivot_row] = grid[pivot_row], grid[c]
            sign = -sign
        pivot = grid[c][c]
        for i in range(c + 1, n):
            fi = grid[i][c]
            for j in range(c, n):
                grid[i][j] = (grid[i][j] * pivot - fi * grid[c][j]) / prev
        prev = pivot
    return sign * grid[n - 1][n - 1]


def rank_at(m: RingMatrix, point: Sequence[Fraction | int]) -> int:
    """Rank of the matrix after exact evaluation at a rational point."""
    return rational_rank(evaluate_matrix(m, point))


def rational_rref(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over Q; returns (rref rows, pivot columns)."""
    grid = [[Fraction(v) for v in row] for row in rows]
    nrows = len(grid)
    ncols = len(grid[0]) if nrows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        pivot_row = next((i for i in range(r, nrows) if grid[i][c] != 0), None)
        if pivot_row is None:
            continue
        grid[r], grid[pivot_row] = grid[pivot_row], grid[r]
        pv = grid[r][c]
        grid[r] = [v / pv for v in grid[r]]
        for i in range(nrows):
            if i != r and grid[i][c] != 0:
                f = grid[i][c]
                grid[i] = [v - f * p for v, p in zip(grid[i], grid[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return grid, pivots


def rational_left_kernel(m: RingMatrix) -> list[list[Fraction]]:
    """Basis of {v : v * M = 0} as row vectors, via the null space of M^T."""
    res = solve_right(m.transpose(), RingMatrix.zero(QQ, m.cols, 1))
    return [list(vec) for vec in res.kernel]


def rational_row_space(m: RingMatrix) -> list[list[Fraction]]:
    """Basis (rref rows) of the row space of a rational matrix."""
    if m.rows == 0:
        return []
    rref, pivots = rational_rref([list(row) for row in m.entries])
    return rref[:len(pivots)]


def coordinates_in_span(basis: list[list[Fraction]], vector: list[Fraction]) -> list[Fraction] | None:
    """Coefficients expressing vector over the given row basis, or None."""
    if not basis:
        return [] if all(v == 0 for v in vector) else None
    mat = RingMatrix(QQ, [[basis[i][j] for i in range(len(basis))]
                          for j in range(len(vector))])
    rhs = RingMatrix(QQ, [[v] for v in vector])
    try:
        res = solve_right(mat, rhs)
    except NoSolution:
        return None
    return [res.cleared.entries[i][0] for i in range(len(basis))]


def _seeded_points(nvars: int, seed: int, count: int = 2) -> list[tuple[Fraction, ...]]:
    rng = random.Random(seed)
    pts = []
    for _ in range(count):
        pts.append(tuple(Fraction(rng.randint(2, 19), rng.randint(1, 7)) for _ in range(nvars)))
    return pts


def generic_rank(m: RingMatrix, seed: int = 0) -> int:
    """Rank over the fraction field: two seeded random evaluations, with an
    exact symbolic elimination fallback when they disagree."""
    if isinstance(m.ring, RationalField):
        return rational_rank(m)
    if m.rows == 0 or m.cols == 0:
        return 0
    p1, p2 = _seeded_points(m.ring.nvars, seed)
    try:
        r1 = rank_at(m, p1)
        r2 = rank_at(m, p2)
    except ZeroAtPole:
        return _symbolic_rank(m)
    if r1 == r2:
        return r1
    return _symbolic_rank(m)


def _bareiss_echelon_info(m: RingMatrix) -> tuple[int, list[int], list[int]]:
    """Fraction-free Bareiss over the polynomial ring itself.

    Returns (rank, pivot row indices in the original matrix, pivot columns).
    All interior divisions are exact by the Bareiss identity.
    """
    grid = [list(row) for row in m.entries]
    perm = list(range(m.rows))
    rows, cols = m.rows, m.cols
    pivot_rows: list[int] = []
    pivot_cols: list[int] = []
    prev = m.ring.one()
    r = 0
    for c in range(cols):
        pivot_row = next((i for i in range(r, rows) if not grid[i][c].is_zero()), None)
        if pivot_row is None:
            continue
        grid[r], grid[pivot_row] = grid[pivot_row], grid[r]
        perm[r], perm[pivot_row] = perm[pivot_row], perm[r]
        pivot = grid[r][c]
        for i in range(r + 1, rows):
            fi = grid[i][c]
            for j in range(c, cols):
                grid[i][j] = (grid[i][j] * pivot - fi * grid[r][j]).exact_div(prev)
        prev = pivot
        pivot_rows.append(perm[r])
        pivot_cols.append(c)
        r += 1
        if r == rows:
            break
    return len(pivot_cols), pivot_rows, pivot_cols


def _symbolic_rank(m: RingMatrix) -> int:
    return _bareiss_echelon_info(m)[0]


def symbolic_det(m: RingMatrix):
    """Determinant over the entry ring by fraction-free Bareiss elimination."""
    if m.rows != m.cols:
        raise ShapeMismatch("det of non-square matrix")
    n = m.rows
    if n == 0:
        return m.ring.one()
    grid = [list(row) for row in m.entries]
    sign = 1
    prev = m.ring.one()
    for c in range(n):
        pivot_row = next((i for i in range(c, n) if not grid[i][c].is_zero()), None)
        if pivot_row is None:
            return m.ring.zero()
        if pivot_row != c:
            grid[c], grid[pivot_row] = grid[pivot_row], grid[c]
            sign = -sign
        pivot = grid[c][c]
        for i in range(c + 1, n):
            fi = grid[i][c]
            for j in range(c, n):
                grid[i][j] = (grid[i][j] * pivot - fi * grid[c][j]).exact_div(prev)
        prev = pivot
    d = grid[n - 1][n - 1]
    return -d if sign < 0 else d


def _adjugate(m: RingMatrix) -> RingMatrix:
    """Adjugate via cofactors: adj(M)[i][j] = (-1)^{i+j} det(M minor j,i)."""
    n = m.rows
    if n == 0:
        return m
    if n == 1:
        return RingMatrix(m.ring, [[m.ring.one()]])
    out = RingMatrix.zero(m.ring, n, n)
    for i in range(n):
        for j in range(n):
            minor = RingMatrix(m.ring, [[m.entries[r][c] for c in range(n) if c != i]
                                        for r in range(n) if r != j])
            d = symbolic_det(minor)
            out.entries[i][j] = -d if (i + j) % 2 else d
    return out


# -- fraction-field solving ------------------------------------------------------


@dataclass
class SolveResult:
    """Particular solution over the fraction field plus right-kernel basis.

    The particular solution is numerator / denominator with a single explicit
    ring denominator for all entries.  Kernel vectors have denominators
    cleared, so they are exact ring vectors with A*k = 0.  in_ring is True
    when every entry of the solution cleared to the ring by exact division,
    in which case `cleared` holds the ring-entry matrix.
    """

    ring: object
    numerator: RingMatrix
    denominator: object
    kernel: list[list]
    in_ring: bool
    cleared: RingMatrix | None = None

    @property
    def kernel_dimension(self) -> int:
        return len(self.kernel)


def _solve_right_rational(a: RingMatrix, b: RingMatrix) -> SolveResult:
    """Gauss-Jordan over Q.  Fractions already form a field, so X is always
    'in the ring' here and kernel vectors are returned as found."""
    m, n, k = a.rows, a.cols, b.cols
    aug = [[Fraction(a.entries[i][j]) for j in range(n)]
           + [Fraction(b.entries[i][j]) for j in range(k)] for i in range(m)]
    pivots: list[int] = []
    r = 0
    for c in range(n):
        pivot_row = next((i for i in range(r, m) if aug[i][c] != 0), None)
        if pivot_row is None:
            continue
        aug[r], aug[pivot_row] = aug[pivot_row], aug[r]
        pivot = aug[r][c]
        aug[r] = [e / pivot for e in aug[r]]
        for i in range(m):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [e - f * p for e, p in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    for i in range(r, m):
        if any(aug[i][c] != 0 for c in range(n, n + k)):
            raise NoSolution(f"inconsistent row {i}")
    cleared = RingMatrix.zero(QQ, n, k)
    for pi, c in enumerate(pivots):
        for j in range(k):
            cleared.entries[c][j] = aug[pi][n + j]
    kernel = []
    for fc in (c for c in range(n) if c not in pivots):
        vec = [Fraction(0)] * n
        vec[fc] = Fraction(1)
        for pi, c in enumerate(pivots):
            vec[c] = -aug[pi][fc]
        kernel.append(vec)
    return SolveResult(ring=QQ, numerator=cleared, denominator=Fraction(1),
                       kernel=kernel, in_ring=True, cleared=cleared)


def solve_right(a: RingMatrix, b: RingMatrix) -> SolveResult:
    """Solve A*X = B over the fraction field of the entry ring.

    Returns one particular solution, a basis of the right kernel of A with
    denominators cleared to ring entries, and whether X itself lies in the
    ring.  Raises NoSolution when the system is inconsistent.  A kernel of
    positive dimension signals non-uniqueness; it is not an error.
    """
    if a.rows != b.rows:
        raise ShapeMismatch(f"solve {a.shape()} against {b.shape()}")
    if a.ring != b.ring:
        raise ShapeMismatch("ring mismatch between A and B")
    if isinstance(a.ring, RationalField):
        return _solve_right_rational(a, b)

    ring: PolyRing = a.ring
    n, k = a.cols, b.cols
    rank, piv_rows, piv_cols = _bareiss_echelon_info(a)

    if rank == 0:
        if not b.is_zero():
            raise NoSolution("zero matrix cannot reach nonzero right side")
        kernel = [[ring.one() if i == f else ring.zero() for i in range(n)]
                  for f in range(n)]
        zero = RingMatrix.zero(ring, n, k)
        return SolveResult(ring=ring, numerator=zero, denominator=ring.one(),
                           kernel=kernel, in_ring=True, cleared=zero)

    # Square nonsingular pivot minor S = A[piv_rows, piv_cols]; Cramer gives
    # x_P = adj(S) * rhs / det(S) with free coordinates set to zero.
    sub = RingMatrix(ring, [[a.entries[i][j] for j in piv_cols] for i in piv_rows])
    det = symbolic_det(sub)
    adj = _adjugate(sub)

    numerator = RingMatrix.zero(ring, n, k)
    rhs = RingMatrix(ring, [[b.entries[i][j] for j in range(k)] for i in piv_rows])
    solved = adj * rhs
    for pi, c in enumerate(piv_cols):
        for j in range(k):
            numerator.entries[c][j] = solved.entries[pi][j]

    # Definitive consistency check on all rows: A * numerator == det * B.
    if a * numerator != b.map_entries(lambda e: e * det):
        raise NoSolution("right side is not in the column span of A")

    free_cols = [c for c in range(n) if c not in piv_cols]
    kernel: list[list] = []
    for fc in free_cols:
        col = RingMatrix(ring, [[-a.entries[i][fc]] for i in piv_rows])
        kp = adj * col
        vec = [ring.zero()] * n
        for pi, c in enumerate(piv_cols):
            vec[c] = kp.entries[pi][0]
        vec[fc] = det
        kernel.append(vec)

    in_ring = True
    cleared_entries = []
    for row in numerator.entries:
        out_row = []
        for e in row:
            try:
                out_row.append(e.exact_div(det))
            except NotInRing:
                in_ring = False
                out_row.append(None)
        cleared_entries.append(out_row)
    cleared = RingMatrix(ring, cleared_entries) if in_ring else None
    return SolveResult(ring=ring, numerator=numerator, denominator=det,
                       kernel=kernel, in_ring=in_ring, cleared=cleared)


# -- characteristic polynomial ----------------------------------------------


@dataclass(frozen=True)
class CharPoly:
    """Monic characteristic polynomial det(zI - M); coeffs[i] multiplies z^i."""

    ring: object
    coeffs: tuple

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def evaluate_coeffs(self, point: Sequence[Fraction | int]) -> list[Fraction]:
        out = []
        for c in self.coeffs:
            out.append(c.evaluate(point) if isinstance(c, Poly) else Fraction(c))
        return out

    def at_matrix(self, m: RingMatrix) -> RingMatrix:
        """Evaluate at z := M (for Cayley-Hamilton checks)."""
        size = m.rows
        acc = RingMatrix.zero(m.ring, size, size)
        power = RingMatrix.identity(m.ring, size)
        for c in self.coeffs:
            acc = acc + power.map_entries(lambda e, c=c: e * c)
            power = power * m
        return acc

    def divide_linear(self, root) -> "CharPoly | None":
        """Exact quotient by (z - root); None if the division has remainder."""
        coeffs = list(self.coeffs)
        out = []
        carry = coeffs[-1]
        for i in range(len(coeffs) - 2, -1, -1):
            out.append(carry)
            carry = coeffs[i] + root * carry
        if not _is_zero_coeff(carry):
            return None
        return CharPoly(self.ring, tuple(reversed(out)))


def _is_zero_coeff(c) -> bool:
    if isinstance(c, Poly):
        return c.is_zero()
    return c == 0


def char_poly(m: RingMatrix) -> CharPoly:
    """Faddeev-LeVerrier: division-free except by integers, so valid over
    Q, Q[y], and Q[x^{+-1}]."""
    if m.rows != m.cols:
        raise ShapeMismatch("char_poly of non-square matrix")
    n = m.rows
    ring = m.ring
    if n == 0:
        return CharPoly(ring, (ring.one(),))
    coeffs = [ring.zero() for _ in range(n + 1)]
    coeffs[n] = ring.one()
    nk = RingMatrix.zero(ring, n, n)
    for k in range(1, n + 1):
        # N_k = M * (N_{k-1} + c_{n-k+1} * I);  c_{n-k} = -tr(N_k) / k
        for i in range(n):
            nk.entries[i][i] = nk.entries[i][i] + coeffs[n - k + 1]
        nk = m * nk
        tr = nk.trace()
        coeffs[n - k] = -(tr.scale(Fraction(1, k)) if isinstance(tr, Poly)
                          else tr * Fraction(1, k))
    return CharPoly(ring, tuple(coeffs))


# -- truncated matrix exponential ---------------------------------------------


def mat_exp_truncated(m: RingMatrix, cap: int) -> RingMatrix:
    """I + M + M^2/2! + ... over the truncated series ring.  Entries must
    have zero constant term, so the degree grading makes the sum finite."""
    if m.rows != m.cols:
        raise ShapeMismatch("matrix exponential of non-square matrix")
    if not isinstance(m.ring, PolyRing) or m.ring.laurent:
        raise ValueError("mat_exp_truncated expects a plain polynomial matrix")
    for row in m.entries:
        for e in row:
            if e.constant_term() != 0:
                raise NonzeroConstantTerm(str(e))
    sring = SeriesRing(m.ring, cap)
    ms = m.map_entries(sring.from_poly, ring=sring)
    acc = RingMatrix.identity(sring, m.rows)
    power = RingMatrix.identity(sring, m.rows)
    fact = 1
    for k in range(1, cap + 1):
        power = power * ms
        fact *= k
        acc = acc + power.map_entries(lambda e: e.scale(Fraction(1, fact)))
    return acc


# -- cochain complexes ---------------------------------------------------------


@dataclass
class RingComplex:
    """Finite cochain complex of free modules, given by boundary matrices.

    boundaries[q] is the b_q x b_{q+1} matrix of the map from degree q to
    degree q+1 in the row-vector convention.
    """

    ring: object
    ranks: list[int]
    boundaries: list[RingMatrix]

    def __post_init__(self):
        if len(self.boundaries) != len(self.ranks) - 1:
            raise ShapeMismatch("need one boundary per consecutive rank pair")
        for q, b in enumerate(self.boundaries):
            if b.shape() != (self.ranks[q], self.ranks[q + 1]):
                raise ShapeMismatch(f"boundary {q} has shape {b.shape()}, "
                                    f"expected {(self.ranks[q], self.ranks[q + 1])}")

    @property
    def length(self) -> int:
        return len(self.ranks) - 1

    def check_complex(self) -> None:
        """Raise NotAComplex unless consecutive boundaries compose to zero."""
        for q in range(len(self.boundaries) - 1):
            prod = self.boundaries[q] * self.boundaries[q + 1]
            if not prod.is_zero():
                raise NotAComplex(f"composition at degree {q} is nonzero")

    def specialize(self, point: Sequence[Fraction | int]) -> "RingComplex":
        specialized = RingComplex(QQ, list(self.ranks),
                                  [evaluate_matrix(b, point) for b in self.boundaries])
        specialized.check_complex()
        return specialized

    def betti(self) -> list[int]:
        """h^q = dim ker(d^q) - rank(d^{q-1}) by exact rank computation."""
        if not isinstance(self.ring, RationalField):
            raise ValueError("betti needs a specialized (rational) complex")
        self.check_complex()
        ranks_of_maps = [rational_rank(b) for b in self.boundaries]
        out = []
        for q, bq in enumerate(self.ranks):
            r_out = ranks_of_maps[q] if q < len(self.boundaries) else 0
            r_in = ranks_of_maps[q - 1] if q > 0 else 0
            out.append(bq - r_out - r_in)
        return out

    def euler_characteristic(self) -> int:
        return sum((-1) ** q * b for q, b in enumerate(self.ranks))
