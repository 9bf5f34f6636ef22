"""Dense arbitrary-precision integer polynomials.

Coefficients are stored lowest degree first.  Everything here is exact: ring
arithmetic, content/primitive parts, pseudo-remainders, a primitive-PRS gcd
and Yun's square-free decomposition.  The zero polynomial is the empty
coefficient tuple and has degree -1.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence


class IntPoly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()) -> None:
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    # -- construction helpers ------------------------------------------------

    @classmethod
    def const(cls, c: int) -> "IntPoly":
        return cls((c,))

    @classmethod
    def x(cls) -> "IntPoly":
        return cls((0, 1))

    @classmethod
    def linear(cls, a: int, b: int) -> "IntPoly":
        """a + b*x"""
        return cls((a, b))

    @classmethod
    def from_roots(cls, roots: Iterable[int]) -> "IntPoly":
        p = cls.const(1)
        for r in roots:
            p = p * cls((-r, 1))
        return p

    # -- basic queries ---------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> int:
        if not self.coeffs:
            return 0
        return self.coeffs[-1]

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __eq__(self, other) -> bool:
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            else:
                mono = "x" if i == 1 else f"x^{i}"
                if c == 1:
                    parts.append(mono)
                elif c == -1:
                    parts.append(f"-{mono}")
                else:
                    parts.append(f"{c}*{mono}")
        return " + ".join(reversed(parts)).replace("+ -", "- ")

    # -- ring arithmetic -------------------------------------------------------

    def __add__(self, other: "IntPoly") -> "IntPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(out)

    def __neg__(self) -> "IntPoly":
        return IntPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return self + (-other)

    def __mul__(self, other) -> "IntPoly":
        if isinstance(other, int):
            if other == 0:
                return IntPoly()
            return IntPoly(tuple(c * other for c in self.coeffs))
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "IntPoly":
        if e < 0:
            raise ValueError("negative power")
        result = IntPoly.const(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def shift_up(self, k: int) -> "IntPoly":
        """Multiply by x**k."""
        if not self.coeffs:
            return self
        return IntPoly((0,) * k + self.coeffs)

    def derivative(self) -> "IntPoly":
        return IntPoly(tuple(i * c for i, c in enumerate(self.coeffs) if i))

    # -- evaluation ------------------------------------------------------------

    def eval_int(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_fraction(self, x: Fraction) -> Fraction:
        """Exact Horner evaluation at a rational point."""
        num, den = x.numerator, x.denominator
        if den == 1:
            return Fraction(self.eval_int(num))
        # sum c_i num^i den^(d-i), all integer arithmetic
        acc = 0
        dpow = 1
        for c in reversed(self.coeffs):
            acc = acc * num + c * dpow
            dpow *= den
        d = self.degree
        return Fraction(acc, den ** d) if d >= 0 else Fraction(0)

    def sign_at(self, x: Fraction) -> int:
        """Sign of p(x), computed without building the full Fraction."""
        num, den = x.numerator, x.denominator
        acc = 0
        dpow = 1
        for c in reversed(self.coeffs):
            acc = acc * num + c * dpow
            dpow *= den
        return (acc > 0) - (acc < 0)

    # -- content and division ----------------------------------------------------

    def content(self) -> int:
        return math.gcd(*self.coeffs) if self.coeffs else 0

    def primitive(self) -> "IntPoly":
        """Divide out the (positive) content; the sign of lc is preserved."""
        c = self.content()
        if c in (0, 1):
            return self
        return IntPoly(tuple(k // c for k in self.coeffs))

    def monic_normalized(self) -> "IntPoly":
        """Primitive part with positive leading coefficient."""
        p = self.primitive()
        return -p if p.lc < 0 else p

    def divmod_exact(self, q: "IntPoly") -> tuple["IntPoly", "IntPoly"]:
        """Long division requiring every quotient step to be an exact integer.

        Succeeds whenever q divides self over the integers; raises otherwise.
        """
        if q.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        rem = list(self.coeffs)
        dq = q.degree
        lcq = q.lc
        if len(rem) - 1 < dq:
            return IntPoly(), IntPoly(rem)
        quot = [0] * (len(rem) - dq)
        for k in range(len(rem) - 1, dq - 1, -1):
            head = rem[k]
            if head == 0:
                continue
            step, r = divmod(head, lcq)
            if r:
                raise ValueError("non-exact polynomial division")
            quot[k - dq] = step
            for i, c in enumerate(q.coeffs):
                rem[k - dq + i] -= step * c
        return IntPoly(quot), IntPoly(rem)

    def exact_divide(self, q: "IntPoly") -> "IntPoly":
        """self / q when q divides self over the integers; error otherwise."""
        quot, rem = self.divmod_exact(q)
        if not rem.is_zero():
            raise ValueError("polynomial division left a nonzero remainder")
        return quot


def pseudo_rem(f: IntPoly, g: IntPoly) -> IntPoly:
    """Pseudo-remainder of f by g scaled by a positive constant.

    Returns r with sign(r) = sign(true remainder of f by g), which is what the
    Sturm chain construction needs.
    """
    if g.is_zero():
        raise ZeroDivisionError("pseudo-remainder by zero polynomial")
    d = f.degree - g.degree
    if d < 0:
        return f
    lcg = g.lc
    m = lcg ** (d + 1)
    rem = list((f * m).coeffs)
    dq = g.degree
    for k in range(len(rem) - 1, dq - 1, -1):
        head = rem[k]
        if head == 0:
            continue
        step, r = divmod(head, lcg)
        assert r == 0, "pseudo-division invariant violated"
        for i, c in enumerate(g.coeffs):
            rem[k - dq + i] -= step * c
    out = IntPoly(rem)
    if m < 0:
        out = -out
    return out


def poly_gcd(f: IntPoly, g: IntPoly) -> IntPoly:
    """Primitive gcd over the integers, positive leading coefficient."""
    if f.is_zero():
        return g.monic_normalized()
    if g.is_zero():
        return f.monic_normalized()
    c = math.gcd(f.content(), g.content())
    a, b = f.primitive(), g.primitive()
    while not b.is_zero():
        r = pseudo_rem(a, b).primitive()
        a, b = b, r
    a = a.monic_normalized()
    return a * c


def square_free_part(p: IntPoly) -> IntPoly:
    """Radical of p: the product of its distinct irreducible factors."""
    if p.is_zero():
        raise ValueError("zero polynomial has no square-free part")
    if p.degree == 0:
        return IntPoly.const(1)
    work = p.monic_normalized()
    g = poly_gcd(work, work.derivative())
    if g.degree == 0:
        return work
    return work.exact_divide(g).monic_normalized()


def square_free_decomposition(p: IntPoly) -> list[tuple[IntPoly, int]]:
    """Yun's algorithm: p = c * prod f_i^i with the f_i square-free, coprime.

    Factors are returned primitive with positive leading coefficient, so the
    reconstruction matches p only up to an integer constant.
    """
    if p.is_zero():
        raise ValueError("cannot square-free decompose the zero polynomial")
    if p.degree == 0:
        return []
    work = p.monic_normalized()
    d1 = work.derivative()
    g = poly_gcd(work, d1)
    if g.degree == 0:
        return [(work, 1)]
    b = work.exact_divide(g)
    c = d1.exact_divide(g)
    out: list[tuple[IntPoly, int]] = []
    i = 1
    while True:
        d = c - b.derivative()
        a = poly_gcd(b, d)
        if a.degree > 0:
            out.append((a.monic_normalized(), i))
        b = b.exact_divide(a)
        if b.degree == 0:
            break
        c = d.exact_divide(a)
        i += 1
    return out


def recompose(factors: Sequence[tuple[IntPoly, int]]) -> IntPoly:
    p = IntPoly.const(1)
    for f, m in factors:
        p = p * f ** m
    return p
