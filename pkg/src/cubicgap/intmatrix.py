"""Exact square integer matrices.

Provides Bareiss fraction-free determinants and exact characteristic
polynomials.  Char polys use Berkowitz's division-free algorithm for dense
small matrices and a Faddeev-LeVerrier variant (integer divisions, each
checked exact) for larger sparse ones such as adjacency matrices.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .poly import IntPoly

_BERKOWITZ_CUTOFF = 34


class IntMatrix:
    __slots__ = ("n", "rows")

    def __init__(self, rows: Iterable[Iterable[int]]) -> None:
        rs = tuple(tuple(int(x) for x in row) for row in rows)
        n = len(rs)
        for row in rs:
            if len(row) != n:
                raise ValueError("matrix must be square")
        self.n = n
        self.rows = rs

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    @classmethod
    def zero(cls, n: int) -> "IntMatrix":
        return cls(tuple((0,) * n for _ in range(n)))

    def __eq__(self, other) -> bool:
        return isinstance(other, IntMatrix) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"IntMatrix({[list(r) for r in self.rows]})"

    def __getitem__(self, ij: tuple[int, int]) -> int:
        return self.rows[ij[0]][ij[1]]

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        return IntMatrix(tuple(tuple(a + b for a, b in zip(r1, r2))
                               for r1, r2 in zip(self.rows, other.rows)))

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        return IntMatrix(tuple(tuple(a - b for a, b in zip(r1, r2))
                               for r1, r2 in zip(self.rows, other.rows)))

    def __mul__(self, other):
        if isinstance(other, int):
            return IntMatrix(tuple(tuple(a * other for a in r) for r in self.rows))
        n = self.n
        bt = list(zip(*other.rows))
        return IntMatrix(tuple(tuple(sum(a * b for a, b in zip(row, col)) for col in bt)
                               for row in self.rows))

    __rmul__ = __mul__

    def scalar_plus(self, c: int) -> "IntMatrix":
        """self + c*I"""
        return IntMatrix(tuple(tuple(v + c if i == j else v for j, v in enumerate(row))
                               for i, row in enumerate(self.rows)))

    def transpose(self) -> "IntMatrix":
        return IntMatrix(tuple(zip(*self.rows)))

    def is_symmetric(self) -> bool:
        return all(self.rows[i][j] == self.rows[j][i]
                   for i in range(self.n) for j in range(i + 1, self.n))

    def trace(self) -> int:
        return sum(self.rows[i][i] for i in range(self.n))

    def submatrix(self, idx: Sequence[int]) -> "IntMatrix":
        """Principal submatrix, rows and columns in the order given by idx."""
        return IntMatrix(tuple(tuple(self.rows[i][j] for j in idx) for i in idx))


def det_exact(m: IntMatrix) -> int:
    """Exact determinant by fraction-free Bareiss elimination.

    Pivot search takes the first nonzero entry in the current column; a fully
    zero column short-circuits to 0.  All divisions are exact by the Bareiss
    identity (asserted).
    """
    n = m.n
    if n == 0:
        return 1
    a = [list(row) for row in m.rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        piv = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            rowi = a[i]
            rowk = a[k]
            for j in range(k + 1, n):
                num = rowi[j] * piv - aik * rowk[j]
                q, r = divmod(num, prev)
                assert r == 0, "Bareiss divisibility violated"
                rowi[j] = q
            rowi[k] = 0
        prev = piv
    return sign * a[n - 1][n - 1]


def char_poly(m: IntMatrix) -> IntPoly:
    """det(xI - m), monic of degree n, exact integer coefficients."""
    if m.n <= _BERKOWITZ_CUTOFF:
        return _char_poly_berkowitz(m)
    return _char_poly_faddeev(m)


def _char_poly_berkowitz(m: IntMatrix) -> IntPoly:
    """Berkowitz's division-free algorithm, O(n^4) scalar operations.

    Iterates over leading principal submatrices, combining each new row and
    column through a Toeplitz product.  Coefficient vectors are kept highest
    degree first.
    """
    n = m.n
    if n == 0:
        return IntPoly.const(1)
    a = m.rows
    # coefficients of det(xI - A_k), highest first; start with k = 1
    coeffs = [1, -a[0][0]]
    for k in range(1, n):
        row = [a[k][j] for j in range(k)]
        col = [a[i][k] for i in range(k)]
        d = a[k][k]
        # t[j] for j = 0..k+1: 1, -d, -row.col, -row.M.col, ...
        t = [1, -d]
        vec = col
        for _ in range(k - 1):
            t.append(-sum(x * y for x, y in zip(row, vec)))
            vec = [sum(a[i][j] * vec[j] for j in range(k)) for i in range(k)]
        t.append(-sum(x * y for x, y in zip(row, vec)))
        new = [0] * (k + 2)
        for i, c in enumerate(coeffs):
            if c:
                for j in range(k + 2 - i):
                    if t[j]:
                        new[i + j] += c * t[j]
        # toeplitz structure: new[m] = sum_{j} t[j] * coeffs[m - j]
        coeffs = new
    return IntPoly(tuple(reversed(coeffs)))


def _char_poly_faddeev(m: IntMatrix) -> IntPoly:
    """Faddeev-LeVerrier with exact integer divisions.

    c_{n-k} = -tr(A M_{k-1}) / k; the division is exact for integer input (the
    c are the characteristic coefficients) and is verified.  Sparse rows of A
    are exploited, which makes this fast for adjacency-like matrices.
    """
    n = m.n
    if n == 0:
        return IntPoly.const(1)
    sparse = [[(j, v) for j, v in enumerate(row) if v] for row in m.rows]
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    work = [[1 if i == j else 0 for j in range(n)] for i in range(n)]  # M_0 = I
    for k in range(1, n + 1):
        am = [[sum(v * work[j][col] for j, v in srow) for col in range(n)]
              for srow in sparse]
        tr = sum(am[i][i] for i in range(n))
        c, r = divmod(-tr, k)
        assert r == 0, "Faddeev-LeVerrier trace divisibility violated"
        coeffs[n - k] = c
        if k < n:
            for i in range(n):
                am[i][i] += c
            work = am
    return IntPoly(tuple(coeffs))
