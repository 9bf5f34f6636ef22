"""Rational intervals and exact real-root counting via Sturm chains.

Open/closed endpoint semantics are always resolved by exact evaluation at the
endpoints, never by perturbation.  Chains are built over the integers from
the square-free part, with content stripped after every pseudo-remainder to
keep coefficient growth in check.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .poly import IntPoly, poly_gcd, pseudo_rem, square_free_decomposition, square_free_part


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class Interval:
    """Rational-endpoint interval with independent open/closed endpoint flags."""

    lo: Fraction
    hi: Fraction
    lo_open: bool = False
    hi_open: bool = False

    def __post_init__(self):
        object.__setattr__(self, "lo", _frac(self.lo))
        object.__setattr__(self, "hi", _frac(self.hi))
        if self.lo > self.hi:
            raise ValueError("interval endpoints out of order")
        if self.lo == self.hi and (self.lo_open or self.hi_open):
            raise ValueError("degenerate interval must be closed at both ends")

    @staticmethod
    def open(lo, hi) -> "Interval":
        return Interval(_frac(lo), _frac(hi), True, True)

    @staticmethod
    def closed(lo, hi) -> "Interval":
        return Interval(_frac(lo), _frac(hi), False, False)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def contains(self, x) -> bool:
        x = _frac(x)
        if x < self.lo or x > self.hi:
            return False
        if x == self.lo and self.lo_open:
            return False
        if x == self.hi and self.hi_open:
            return False
        return True

    def __str__(self) -> str:
        lb = "(" if self.lo_open else "["
        rb = ")" if self.hi_open else "]"
        return f"{lb}{self.lo}, {self.hi}{rb}"


class SturmChain:
    """Sturm chain of the square-free part of a polynomial.

    The chain starts with the square-free part and its derivative; successive
    elements are negated pseudo-remainders, content-stripped, so all entries
    stay integer polynomials while keeping the sign structure of the rational
    chain.
    """

    __slots__ = ("polys",)

    def __init__(self, p: IntPoly) -> None:
        if p.is_zero():
            raise ValueError("Sturm chain of the zero polynomial")
        f = square_free_part(p)
        chain = [f]
        if f.degree > 0:
            chain.append(f.derivative().primitive())
            while chain[-1].degree > 0:
                r = pseudo_rem(chain[-2], chain[-1])
                if r.is_zero():
                    raise AssertionError("square-free part produced a zero remainder")
                chain.append((-r).primitive())
        self.polys = tuple(chain)

    @property
    def squarefree(self) -> IntPoly:
        return self.polys[0]

    def variations_at(self, x: Fraction) -> int:
        signs = []
        for q in self.polys:
            s = q.sign_at(x)
            if s:
                signs.append(s)
        return sum(1 for a, b in zip(signs, signs[1:]) if a != b)

    def count_open(self, a: Fraction, b: Fraction) -> int:
        """Distinct roots in the open interval (a, b); a and b must be non-roots."""
        if a >= b:
            return 0
        f = self.polys[0]
        assert f.sign_at(a) != 0 and f.sign_at(b) != 0
        return self.variations_at(a) - self.variations_at(b)


def root_multiplicity_at(p: IntPoly, r: Fraction) -> int:
    """Multiplicity of the rational point r as a root of p, by exact division."""
    if p.is_zero():
        raise ValueError("zero polynomial")
    r = _frac(r)
    lin = IntPoly.linear(-r.numerator, r.denominator)
    mult = 0
    while not p.is_zero() and p.eval_fraction(r) == 0:
        p = p.exact_divide(lin)
        mult += 1
    return mult


def cauchy_bound(p: IntPoly) -> Fraction:
    """B with all real roots of p strictly inside (-B, B)."""
    if p.is_zero() or p.degree < 1:
        return Fraction(1)
    lead = abs(p.lc)
    big = max(abs(c) for c in p.coeffs[:-1])
    return 1 + Fraction(big, lead)


def _distinct_roots_in_open(f: IntPoly, a: Fraction, b: Fraction) -> int:
    """Distinct roots of square-free f strictly inside (a, b)."""
    if a >= b:
        return 0
    # deflate roots sitting exactly at the endpoints, then apply Sturm
    for pt in (a, b):
        while f.degree > 0 and f.eval_fraction(pt) == 0:
            f = f.exact_divide(IntPoly.linear(-pt.numerator, pt.denominator))
    if f.degree <= 0:
        return 0
    chain = SturmChain(f)
    return chain.count_open(a, b)


def count_roots_in(p: IntPoly, iv: Interval, with_multiplicity: bool = False) -> int:
    """Exact number of real roots of p in iv.

    Distinct roots by default; with_multiplicity weights every root by its
    multiplicity in p.  Endpoint membership honours the open/closed flags and
    is decided by exact evaluation.
    """
    if p.is_zero():
        raise ValueError("zero polynomial has ill-defined root counts")
    if iv.lo == iv.hi:
        if p.eval_fraction(iv.lo) != 0:
            return 0
        return root_multiplicity_at(p, iv.lo) if with_multiplicity else 1
    total = 0
    if with_multiplicity:
        for f, mult in square_free_decomposition(p):
            total += mult * _distinct_roots_in_open(f, iv.lo, iv.hi)
    else:
        total += _distinct_roots_in_open(square_free_part(p), iv.lo, iv.hi)
    for pt, is_open in ((iv.lo, iv.lo_open), (iv.hi, iv.hi_open)):
        if not is_open and p.eval_fraction(pt) == 0:
            total += root_multiplicity_at(p, pt) if with_multiplicity else 1
    return total


def count_real_roots(p: IntPoly, with_multiplicity: bool = False) -> int:
    b = cauchy_bound(p)
    return count_roots_in(p, Interval.closed(-b, b), with_multiplicity)


def smallest_root_bracket(p: IntPoly, width) -> Interval:
    """Closed rational interval of length <= width isolating the smallest real root.

    Bisection guided by Sturm counts starting from a Cauchy bound.  The
    returned interval contains the smallest real root of p and no other root.
    """
    width = _frac(width)
    if width <= 0:
        raise ValueError("width must be positive")
    if p.is_zero():
        raise ValueError("zero polynomial")
    f = square_free_part(p)
    if f.degree < 1:
        raise ValueError("polynomial has no real roots")
    bound = cauchy_bound(f)
    chain = SturmChain(f)
    total = chain.count_open(-bound, bound)
    if total == 0:
        raise ValueError("polynomial has no real roots")

    def roots_upto(lo: Fraction, x: Fraction) -> int:
        # number of roots in (lo, x]; lo is maintained as a non-root
        if f.eval_fraction(x) == 0:
            return 1 + _distinct_roots_in_open(f, lo, x)
        return chain.count_open(lo, x)

    lo, hi = -bound, bound
    while hi - lo > width or roots_upto(lo, hi) != 1:
        mid = (lo + hi) / 2
        if roots_upto(lo, mid) >= 1:
            hi = mid
        else:
            lo = mid
    return Interval.closed(lo, hi)


def sqrt_bracket(x, tol) -> tuple[Fraction, Fraction]:
    """Rational (lo, hi) with lo^2 <= x <= hi^2, hi - lo <= tol, both >= 0."""
    x = _frac(x)
    tol = _frac(tol)
    if x < 0:
        raise ValueError("negative radicand")
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    if x == 0:
        return Fraction(0), Fraction(0)
    lo, hi = Fraction(0), max(Fraction(1), x)
    while hi - lo > tol:
        mid = (lo + hi) / 2
        if mid * mid <= x:
            lo = mid
        else:
            hi = mid
    return lo, hi
