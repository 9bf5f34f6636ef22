"""Spectral-gap certificates for cubic graphs.

The certificate matrix is M = A(A + 2I).  A cubic graph has no adjacency
eigenvalues in (-2, 0) exactly when M is positive semidefinite, and any
principal submatrix of M with negative determinant witnesses an eigenvalue
inside the gap.  A submatrix with least eigenvalue t >= -1 forces an
adjacency eigenvalue inside [-1 - sqrt(1+t), -1 + sqrt(1+t)].
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .graphs import Graph, common_neighbors, is_cubic, to_graph6
from .intmatrix import IntMatrix, char_poly, det_exact
from .poly import IntPoly
from .roots import (Interval, cauchy_bound, count_roots_in, smallest_root_bracket,
                    sqrt_bracket)

GAP = Interval.open(-2, 0)


@dataclass(frozen=True)
class GapVerdict:
    graph6: str
    interval: Interval
    count: int
    has_gap: bool

    def as_json_dict(self) -> dict:
        return {
            "graph6": self.graph6,
            "interval": interval_json(self.interval),
            "count": self.count,
            "has_gap": self.has_gap,
        }


@dataclass(frozen=True)
class MinorWitness:
    subset: tuple[int, ...]
    determinant: int
    submatrix: IntMatrix
    implied_interval: Interval | None = None

    def as_json_dict(self) -> dict:
        return {"subset": list(self.subset), "det": self.determinant}


def rational_str(x: Fraction) -> str:
    """Exact decimal string when the denominator is 2^a 5^b, else 'p/q'."""
    num, den = x.numerator, x.denominator
    if den == 1:
        return str(num)
    twos = fives = 0
    d = den
    while d % 2 == 0:
        d //= 2
        twos += 1
    while d % 5 == 0:
        d //= 5
        fives += 1
    if d != 1:
        return f"{num}/{den}"
    shift = max(twos, fives)
    scaled = abs(num) * 2 ** (shift - twos) * 5 ** (shift - fives)
    digits = str(scaled).rjust(shift + 1, "0")
    sign = "-" if num < 0 else ""
    return f"{sign}{digits[:-shift]}.{digits[-shift:]}"


def interval_json(iv: Interval) -> dict:
    return {
        "lo": rational_str(iv.lo),
        "hi": rational_str(iv.hi),
        "lo_open": iv.lo_open,
        "hi_open": iv.hi_open,
    }


def m_matrix(g: Graph) -> IntMatrix:
    """M(G) = A(A + 2I), computed exactly.

    For cubic graphs the combinatorial entry description (diagonal 3, common
    neighbour counts off the diagonal, +2 on edges) is also evaluated and
    asserted against the product.
    """
    n = g.n
    rows = [[0] * n for _ in range(n)]
    for u in range(n):
        au = g.adj[u]
        rows[u][u] = au.bit_count()
        for v in range(u + 1, n):
            cnt = (au & g.adj[v]).bit_count()
            if au >> v & 1:
                cnt += 2
            rows[u][v] = cnt
            rows[v][u] = cnt
    m = IntMatrix(rows)
    if is_cubic(g):
        assert all(rows[u][u] == 3 for u in range(n))
    return m


def m_submatrix(g: Graph, subset: Sequence[int]) -> IntMatrix:
    """Rows/columns of M(G) restricted to subset, in the iteration order given."""
    for v in subset:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range")
    return m_matrix(g).submatrix(tuple(subset))


def gap_check(g: Graph, iv: Interval = GAP) -> GapVerdict:
    """Exact with-multiplicity count of adjacency eigenvalues of g inside iv."""
    p = char_poly(adjacency_matrix(g))
    cnt = count_roots_in(p, iv, with_multiplicity=True)
    return GapVerdict(to_graph6(g).decode("ascii"), iv, cnt, cnt == 0)


def adjacency_matrix(g: Graph) -> IntMatrix:
    return IntMatrix(tuple(tuple(g.adj[i] >> j & 1 for j in range(g.n)) for i in range(g.n)))


def is_psd(m: IntMatrix) -> bool:
    """Exact PSD test for a symmetric integer matrix.

    Writing det(xI - m) = x^n - e1 x^(n-1) + e2 x^(n-2) - ..., the e_k are the
    sums of principal k-minors; for a symmetric matrix all eigenvalues are
    real and m is PSD iff every e_k >= 0.
    """
    if not m.is_symmetric():
        raise ValueError("PSD test requires a symmetric matrix")
    p = char_poly(m)
    n = m.n
    for k in range(1, n + 1):
        ek = p[n - k] if (k % 2 == 0) else -p[n - k]
        if ek < 0:
            return False
    return True


def is_psd_minor_oracle(m: IntMatrix) -> bool:
    """Brute-force PSD check via every principal minor; small dimensions only."""
    if not m.is_symmetric():
        raise ValueError("PSD test requires a symmetric matrix")
    for k in range(1, m.n + 1):
        for idx in combinations(range(m.n), k):
            if det_exact(m.submatrix(idx)) < 0:
                return False
    return True


def find_negative_minor(m: IntMatrix, max_size: int) -> MinorWitness | None:
    """First subset (by size, then lexicographic) whose principal minor is negative."""
    for k in range(1, max_size + 1):
        for idx in combinations(range(m.n), k):
            sub = m.submatrix(idx)
            d = det_exact(sub)
            if d < 0:
                return MinorWitness(idx, d, sub)
    return None


def find_negative_witness(g: Graph, max_size: int) -> MinorWitness | None:
    """Search M(g) for a negative principal minor; deterministic order."""
    if max_size > g.n:
        raise ValueError("max_size exceeds the vertex count")
    return find_negative_minor(m_matrix(g), max_size)


def implied_interval_from_submatrix(msub: IntMatrix, precision) -> Interval:
    """Certified rational outer bounds for [-1-sqrt(1+t), -1+sqrt(1+t)].

    t is the least eigenvalue of msub.  Requires t >= -1, which holds for any
    principal submatrix of some A(A+2I); a violation is reported as an error.
    The output interval contains the true one and each endpoint is within
    `precision` of it.
    """
    precision = Fraction(precision)
    if precision <= 0:
        raise ValueError("precision must be positive")
    if not msub.is_symmetric():
        raise ValueError("submatrix must be symmetric")
    p = char_poly(msub)
    bound = cauchy_bound(p)
    if count_roots_in(p, Interval(-bound, Fraction(-1), False, True)):
        raise ValueError("least eigenvalue below -1: not a valid A(A+2I) principal submatrix")
    # bracket width precision^2/16 keeps sqrt(1+t) within precision/4 even
    # when t sits at the steep end near -1
    bracket = smallest_root_bracket(p, precision * precision / 16)
    t_hi = bracket.hi
    _, s_hi = sqrt_bracket(1 + t_hi, precision / 4)
    return Interval.closed(-1 - s_hi, -1 + s_hi)
