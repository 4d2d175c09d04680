"""Totally unimodular matrices, unimodular equivalence, and block sums.

The sum constructions compose simple TU representations in the three block
shapes used for gluing regular matroids; the constructors validate their
block patterns and re-check total unimodularity of the result.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .exact import (
    DimensionError,
    IntMatrix,
    hermite_normal_form,
    int_determinant,
    invert,
    rank,
)


class BlockShapeError(ValueError):
    """Input matrix does not match the required sum block pattern."""


def is_totally_unimodular(a: IntMatrix) -> bool:
    """Brute-force check: every square submatrix has determinant -1, 0 or 1.

    Exponential in the matrix size, which is fine at this package's scale
    (fixtures stay around a dozen columns).
    """
    for row in a.data:
        for x in row:
            if x not in (-1, 0, 1):
                return False
    kmax = min(a.rows, a.cols)
    for k in range(2, kmax + 1):
        for rows_idx in combinations(range(a.rows), k):
            picked = [a.data[i] for i in rows_idx]
            for cols_idx in combinations(range(a.cols), k):
                sub = [tuple(row[j] for j in cols_idx) for row in picked]
                if int_determinant(sub) not in (-1, 0, 1):
                    return False
    return True


@dataclass(frozen=True)
class TUMatrix:
    """An integer matrix together with a verified-TU flag."""

    inner: IntMatrix
    verified: bool = False

    @classmethod
    def check(cls, a: IntMatrix) -> "TUMatrix":
        if not is_totally_unimodular(a):
            raise ValueError("matrix is not totally unimodular")
        return cls(a, verified=True)

    @property
    def rows(self) -> int:
        return self.inner.rows

    @property
    def cols(self) -> int:
        return self.inner.cols


def is_simple_matrix(a: IntMatrix) -> bool:
    """No zero column and no pair of proportional columns."""
    cols = a.columns()
    for c in cols:
        if all(x == 0 for x in c):
            return False
    for c1, c2 in combinations(cols, 2):
        if _proportional(c1, c2):
            return False
    return True


def _proportional(u, v) -> bool:
    # cross-ratio test without division: u, v nonzero integer vectors
    return all(u[i] * v[j] == u[j] * v[i] for i in range(len(u)) for j in range(i + 1, len(u)))


def is_unimodular(a: IntMatrix) -> Optional[IntMatrix]:
    """Decide unimodularity; return a witness h in GL_g(Z) with h*A TU.

    Uses the pivoting characterization: after reducing away zero rows with
    the HNF transform, A is unimodular iff some maximal square column
    submatrix B has determinant +-1 and B^-1 * A is totally unimodular.
    (If h*A is TU for some h, then every unit-determinant column basis B
    gives a TU pivot B^-1 * A, so one basis decides the question.)
    """
    g = a.rows
    if is_totally_unimodular(a):
        return IntMatrix.identity(g)
    r = rank(a)
    h_mat, u = hermite_normal_form(a)
    top = [h_mat.data[i] for i in range(r)] if r else []
    if r == 0:
        return IntMatrix.identity(g)  # zero matrix is trivially TU
    # search an r x r column submatrix of the reduced row space with det +-1
    basis_cols = None
    for cols_idx in combinations(range(a.cols), r):
        sub = [tuple(row[j] for j in cols_idx) for row in top]
        if int_determinant(sub) in (-1, 1):
            basis_cols = cols_idx
            break
    if basis_cols is None:
        return None
    b = IntMatrix([[top[i][j] for j in basis_cols] for i in range(r)])
    b_inv = invert(b)
    reduced = b_inv.mul(IntMatrix(top).to_rational())
    if not reduced.is_integral():
        return None
    reduced_int = reduced.to_integer()
    if not is_totally_unimodular(reduced_int):
        return None
    # assemble the g x g witness: diag(B^-1, I) * U
    w_rows = []
    for i in range(g):
        if i < r:
            row = [b_inv.data[i][j] for j in range(r)] + [0] * (g - r)
        else:
            row = [0] * g
            row[i] = 1
        w_rows.append(row)
    w = IntMatrix([[int(x) for x in row] for row in w_rows])
    return w.mul(u)


def equivalent_unimodular(a: IntMatrix, b: IntMatrix) -> bool:
    """True iff A = h*B*Y for h in GL_g(Z) and a signed permutation Y.

    Decided through the vector matroids: the matrices are equivalent exactly
    when their column matroids agree up to a relabeling of the columns.
    """
    from .matroids import matroid_isomorphic, vector_matroid

    if a.shape != b.shape:
        raise DimensionError("equivalence needs matrices of the same shape")
    if is_unimodular(a) is None or is_unimodular(b) is None:
        raise ValueError("equivalence test requires unimodular inputs")
    return matroid_isomorphic(vector_matroid(a), vector_matroid(b))


# ---------------------------------------------------------------------------
# sum shapes and block assembly


def _require_simple_tu(m: TUMatrix, side: str) -> IntMatrix:
    a = m.inner
    if not (m.verified or is_totally_unimodular(a)):
        raise ValueError(f"{side} matrix is not totally unimodular")
    if not is_simple_matrix(a):
        raise ValueError(f"{side} matrix is not simple")
    return a


def _unit_column(col, one_at: int) -> bool:
    return all(x == (1 if i == one_at else 0) for i, x in enumerate(col))


@dataclass(frozen=True)
class SumShape2:
    """Pair of simple TU matrices in the 2-sum block form.

    left  = [B 0; b^t 1]   (last column is the unit vector at the last row)
    right = [c^t 1; C 0]   (last column is the unit vector at the first row)
    """

    left: TUMatrix
    right: TUMatrix

    def __post_init__(self):
        l = _require_simple_tu(self.left, "left")
        r = _require_simple_tu(self.right, "right")
        if l.rows < 2 or l.cols < 2 or r.rows < 2 or r.cols < 2:
            raise BlockShapeError("2-sum blocks need at least two rows and columns")
        if not _unit_column(l.column(l.cols - 1), l.rows - 1):
            raise BlockShapeError("left block must end with the (0,...,0,1) column")
        if any(l.data[i][j] != 0 for i in range(l.rows - 1) for j in (l.cols - 1,)):
            raise BlockShapeError("left block zero pattern violated")
        if not _unit_column(r.column(r.cols - 1), 0):
            raise BlockShapeError("right block must end with the (1,0,...,0) column")

    @property
    def g1(self) -> int:
        return self.left.rows - 1

    @property
    def g2(self) -> int:
        return self.right.rows - 1

    @property
    def n1(self) -> int:
        return self.left.cols - 1

    @property
    def n2(self) -> int:
        return self.right.cols - 1


@dataclass(frozen=True)
class SumShape3:
    """Pair of simple TU matrices in the 3-sum block form.

    left  = [B 0 0 0; b1^t 1 0 1; b2^t 0 1 1]
    right = [c1^t 1 0 1; c2^t 0 1 1; C 0 0 0]
    """

    left: TUMatrix
    right: TUMatrix

    def __post_init__(self):
        l = _require_simple_tu(self.left, "left")
        r = _require_simple_tu(self.right, "right")
        if l.rows < 3 or l.cols < 4 or r.rows < 3 or r.cols < 4:
            raise BlockShapeError("3-sum blocks need at least 3 rows and 4 columns")
        g1, n1 = l.rows - 2, l.cols - 3
        tail = [l.column(n1), l.column(n1 + 1), l.column(n1 + 2)]
        want = [
            [0] * g1 + [1, 0],
            [0] * g1 + [0, 1],
            [0] * g1 + [1, 1],
        ]
        if [list(t) for t in tail] != want:
            raise BlockShapeError("left block trailing columns must be the 1/0/1 pattern")
        g2, n2 = r.rows - 2, r.cols - 3
        tail = [r.column(n2), r.column(n2 + 1), r.column(n2 + 2)]
        want = [
            [1, 0] + [0] * g2,
            [0, 1] + [0] * g2,
            [1, 1] + [0] * g2,
        ]
        if [list(t) for t in tail] != want:
            raise BlockShapeError("right block trailing columns must be the 1/0/1 pattern")

    @property
    def g1(self) -> int:
        return self.left.rows - 2

    @property
    def g2(self) -> int:
        return self.right.rows - 2

    @property
    def n1(self) -> int:
        return self.left.cols - 3

    @property
    def n2(self) -> int:
        return self.right.cols - 3


def _assemble_sum1(a1: IntMatrix, a2: IntMatrix) -> IntMatrix:
    rows = []
    for i in range(a1.rows):
        rows.append(list(a1.data[i]) + [0] * a2.cols)
    for i in range(a2.rows):
        rows.append([0] * a1.cols + list(a2.data[i]))
    return IntMatrix(rows)


def _assemble_sum2(l: IntMatrix, r: IntMatrix) -> IntMatrix:
    g1, n1 = l.rows - 1, l.cols - 1
    g2, n2 = r.rows - 1, r.cols - 1
    rows = []
    for i in range(g1):
        rows.append(list(l.data[i][:n1]) + [0] * n2 + [0])
    rows.append(list(l.data[g1][:n1]) + list(r.data[0][:n2]) + [1])
    for i in range(g2):
        rows.append([0] * n1 + list(r.data[1 + i][:n2]) + [0])
    return IntMatrix(rows)


def _assemble_sum3(l: IntMatrix, r: IntMatrix) -> IntMatrix:
    g1, n1 = l.rows - 2, l.cols - 3
    g2, n2 = r.rows - 2, r.cols - 3
    rows = []
    for i in range(g1):
        rows.append(list(l.data[i][:n1]) + [0] * n2 + [0, 0, 0])
    rows.append(list(l.data[g1][:n1]) + list(r.data[0][:n2]) + [1, 0, 1])
    rows.append(list(l.data[g1 + 1][:n1]) + list(r.data[1][:n2]) + [0, 1, 1])
    for i in range(g2):
        rows.append([0] * n1 + list(r.data[2 + i][:n2]) + [0, 0, 0])
    return IntMatrix(rows)


def _finish_sum(a: IntMatrix) -> TUMatrix:
    if not is_totally_unimodular(a):
        raise ValueError("assembled sum failed the total unimodularity check")
    if not is_simple_matrix(a):
        raise ValueError("assembled sum is not simple")
    return TUMatrix(a, verified=True)


def seymour_sum1(a1: TUMatrix, a2: TUMatrix) -> TUMatrix:
    """Block-diagonal composition of two simple TU matrices."""
    m1 = _require_simple_tu(a1, "left")
    m2 = _require_simple_tu(a2, "right")
    return _finish_sum(_assemble_sum1(m1, m2))


def seymour_sum2(s: SumShape2) -> TUMatrix:
    """Glue the two blocks along the shared unit column: [B 0 0; b^t c^t 1; 0 C 0]."""
    return _finish_sum(_assemble_sum2(s.left.inner, s.right.inner))


def seymour_sum3(s: SumShape3) -> TUMatrix:
    """Glue along the shared rank-2 triangle pattern (three tail columns kept)."""
    return _finish_sum(_assemble_sum3(s.left.inner, s.right.inner))
