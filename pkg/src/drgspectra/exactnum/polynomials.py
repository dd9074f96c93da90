"""Integer-coefficient polynomials with the exact operations needed for
Sturm-sequence root isolation and square-free decomposition.

Coefficients are stored lowest degree first.  All arithmetic is over
arbitrary-precision integers; rational inputs are cleared to a primitive
integer polynomial where needed.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence, Tuple


def _trim(coeffs: Sequence[int]) -> Tuple[int, ...]:
    n = len(coeffs)
    while n > 0 and coeffs[n - 1] == 0:
        n -= 1
    return tuple(coeffs[:n])


class IntPolynomial:
    """Polynomial over Z, coefficients lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int]):
        cs = [int(c) for c in coeffs]
        self.coeffs = _trim(cs)

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> "IntPolynomial":
        return cls(())

    @classmethod
    def constant(cls, c: int) -> "IntPolynomial":
        return cls((c,))

    @classmethod
    def x(cls) -> "IntPolynomial":
        return cls((0, 1))

    @classmethod
    def from_roots(cls, roots: Iterable[int]) -> "IntPolynomial":
        p = cls((1,))
        for r in roots:
            p = p * cls((-r, 1))
        return p

    @classmethod
    def from_fractions(cls, coeffs: Sequence[Fraction]) -> "IntPolynomial":
        """Clear denominators and return the primitive integer polynomial
        with the same roots (sign of the leading coefficient preserved)."""
        fracs = [Fraction(c) for c in coeffs]
        den = math.lcm(*(f.denominator for f in fracs)) if fracs else 1
        ints = [int(f * den) for f in fracs]
        p = cls(ints)
        return p.primitive_part()

    # -- basics --------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __eq__(self, other) -> bool:
        return isinstance(other, IntPolynomial) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self) -> str:
        return format_poly(self.coeffs)

    # -- ring operations -----------------------------------------------

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(out)

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPolynomial(())
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return IntPolynomial(out)

    def scale(self, c: int) -> "IntPolynomial":
        return IntPolynomial(tuple(c * a for a in self.coeffs))

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial(tuple(i * c for i, c in enumerate(self.coeffs) if i))

    # -- evaluation ------------------------------------------------------

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def sign_eval(self, x) -> int:
        """Sign of self(x) at a rational point, by homogeneous integer
        Horner: q^d p(x) = sum c_i a^i q^(d-i) for x = a/q, so only big-int
        multiply-adds are needed (no per-step Fraction normalization)."""
        if not self.coeffs:
            return 0
        x = Fraction(x)
        a, q = x.numerator, x.denominator
        rev = tuple(reversed(self.coeffs))
        acc = rev[0]
        qpow = 1
        for c in rev[1:]:
            qpow *= q
            acc = acc * a + c * qpow
        return (acc > 0) - (acc < 0)

    def eval_interval(self, lo: Fraction, hi: Fraction) -> Tuple[Fraction, Fraction]:
        """Enclosure of p([lo, hi]) by interval Horner."""
        alo, ahi = Fraction(0), Fraction(0)
        for c in reversed(self.coeffs):
            cands = (alo * lo, alo * hi, ahi * lo, ahi * hi)
            alo, ahi = min(cands) + c, max(cands) + c
        return alo, ahi

    # -- content / gcd / square-free --------------------------------------

    def content(self) -> int:
        return math.gcd(*self.coeffs) if self.coeffs else 0

    def primitive_part(self) -> "IntPolynomial":
        if not self.coeffs:
            return self
        c = self.content()
        return IntPolynomial(tuple(a // c for a in self.coeffs))

    def pseudo_rem(self, other: "IntPolynomial") -> "IntPolynomial":
        """Pseudo-remainder: lc(other)^(deg gap + 1) * self mod other."""
        if other.is_zero():
            raise ZeroDivisionError("pseudo_rem by zero polynomial")
        r = list(self.coeffs)
        d = other.degree
        lc = other.leading()
        steps = len(r) - 1 - d
        if steps < 0:
            return IntPolynomial(r)
        for k in range(steps, -1, -1):
            coef = r[k + d]
            r = [lc * c for c in r]
            for i in range(d + 1):
                r[k + i] -= coef * other.coeffs[i]
            r = r[: k + d]
            if len(r) <= d:
                break
        return IntPolynomial(r)

    def exact_div(self, other: "IntPolynomial") -> "IntPolynomial":
        """Division known to be exact over Q; result cleared to Z."""
        num = [Fraction(c) for c in self.coeffs]
        dc = [Fraction(c) for c in other.coeffs]
        if not dc:
            raise ZeroDivisionError("exact_div by zero polynomial")
        q = [Fraction(0)] * max(len(num) - len(dc) + 1, 0)
        for k in range(len(q) - 1, -1, -1):
            coef = num[k + len(dc) - 1] / dc[-1]
            q[k] = coef
            for i, d in enumerate(dc):
                num[k + i] -= coef * d
        if any(num):
            raise ValueError("exact_div: division is not exact")
        assert all(c.denominator == 1 for c in q)
        return IntPolynomial(tuple(int(c) for c in q))

    def gcd(self, other: "IntPolynomial") -> "IntPolynomial":
        """Primitive gcd over Z, positive leading coefficient."""
        a, b = self.primitive_part(), other.primitive_part()
        if a.is_zero():
            g = b
        elif b.is_zero():
            g = a
        else:
            if a.degree < b.degree:
                a, b = b, a
            while not b.is_zero():
                r = a.pseudo_rem(b)
                a, b = b, r.primitive_part() if not r.is_zero() else r
            g = a
        if g.leading() < 0:
            g = -g
        return g

    def squarefree_part(self) -> "IntPolynomial":
        if self.degree <= 0:
            return IntPolynomial((1,)) if not self.is_zero() else self
        g = self.gcd(self.derivative())
        sf = self.exact_div(g).primitive_part()
        if sf.leading() < 0:
            sf = -sf
        return sf

    def squarefree_decomposition(self) -> list[Tuple["IntPolynomial", int]]:
        """Yun's algorithm: returns [(factor, multiplicity)] with factors
        square-free, pairwise coprime, positive leading coefficients."""
        p = self.primitive_part()
        if p.leading() < 0:
            p = -p
        if p.degree <= 0:
            return []
        out = []
        g = p.gcd(p.derivative())
        w = p.exact_div(g)
        y = p.derivative().exact_div(g)
        i = 1
        while w.degree > 0:
            z = y - w.derivative()
            f = w.gcd(z)
            if f.degree > 0:
                out.append((f.primitive_part(), i))
            w = w.exact_div(f)
            y = z.exact_div(f)
            i += 1
        return out

    def root_bound(self) -> Fraction:
        """Cauchy bound: all real roots lie in (-B, B)."""
        if self.degree <= 0:
            return Fraction(1)
        lc = abs(self.leading())
        m = max(abs(c) for c in self.coeffs[:-1])
        return Fraction(m, lc) + 1


def format_poly(coeffs: Sequence, var: str = "x") -> str:
    """Human-readable polynomial, highest degree first."""
    if not any(coeffs):
        return "0"
    parts = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if c == 0:
            continue
        if i == 0:
            term = str(abs(c)) if c == int(c) else str(abs(c))
        else:
            mag = abs(c)
            base = var if i == 1 else f"{var}^{i}"
            term = base if mag == 1 else f"{mag}*{base}"
        if not parts:
            parts.append(term if c > 0 else f"-{term}")
        else:
            parts.append(f" + {term}" if c > 0 else f" - {term}")
    return "".join(parts)
