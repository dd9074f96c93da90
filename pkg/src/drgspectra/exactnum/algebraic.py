"""Real algebraic numbers: a square-free integer polynomial plus an
isolating interval with rational endpoints.

Root isolation uses Sturm sequences over exact rationals; comparisons
refine intervals until disjoint or settle equality through a gcd of the
defining polynomials.  Integer and rational roots are recognized exactly
(never by interval snapping).
"""

from __future__ import annotations

import threading
from fractions import Fraction
from typing import List, Optional, Tuple

from .polynomials import IntPolynomial, format_poly


def sturm_chain(p: IntPolynomial) -> List[IntPolynomial]:
    """Sturm sequence of a square-free polynomial.  Terms are kept
    primitive; only positive contents are divided out, so the sign
    pattern matches the classical chain."""
    chain = [p, p.derivative()]
    while not chain[-1].is_zero() and chain[-1].degree > 0:
        r = chain[-2].pseudo_rem(chain[-1])
        # pseudo_rem multiplies by lc^k; flip sign when that factor is
        # negative and k is odd, then negate for the Sturm recursion.
        lc = chain[-1].leading()
        steps = chain[-2].degree - chain[-1].degree + 1
        if lc < 0 and steps % 2 == 1:
            r = -r
        r = -r
        if r.is_zero():
            break
        chain.append(r.primitive_part() if r.content() > 1 else r)
    return chain


def _variations(chain: List[IntPolynomial], x: Fraction) -> int:
    signs = [s for q in chain if (s := q.sign_eval(x)) != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _count_roots(chain: List[IntPolynomial], lo: Fraction, hi: Fraction) -> int:
    """Number of distinct real roots in (lo, hi]."""
    return _variations(chain, lo) - _variations(chain, hi)


def simplest_in_interval(lo: Fraction, hi: Fraction) -> Fraction:
    """A rational with smallest denominator in the open interval (lo, hi),
    by the continued-fraction recursion."""
    if not lo < hi:
        raise ValueError("empty interval")
    n = lo.__floor__()
    if lo < n + 1 < hi:
        return Fraction(n + 1)
    frac_lo = lo - n
    if frac_lo == 0:
        # interval (n, hi) with hi <= n+1: smallest k with n + 1/k < hi
        k = (1 / (hi - n)).__floor__() + 1
        return n + Fraction(1, k)
    inner = simplest_in_interval(1 / (hi - n), 1 / frac_lo)
    return n + 1 / inner


class AlgebraicReal:
    """Exact real algebraic number."""

    __slots__ = ("defining", "_lo", "_hi", "_lock")

    def __init__(self, defining: IntPolynomial, lo: Fraction, hi: Fraction):
        self.defining = defining
        self._lo = Fraction(lo)
        self._hi = Fraction(hi)
        self._lock = threading.Lock()

    # -- constructors --------------------------------------------------

    @classmethod
    def from_rational(cls, r) -> "AlgebraicReal":
        r = Fraction(r)
        p = IntPolynomial((-r.numerator, r.denominator))
        return cls(p, r, r)

    def __neg__(self) -> "AlgebraicReal":
        coeffs = tuple(c if i % 2 == 0 else -c for i, c in enumerate(self.defining.coeffs))
        if coeffs[-1] < 0:
            coeffs = tuple(-c for c in coeffs)
        return AlgebraicReal(IntPolynomial(coeffs), -self._hi, -self._lo)

    # -- interval access -------------------------------------------------

    @property
    def interval(self) -> Tuple[Fraction, Fraction]:
        return self._lo, self._hi

    def is_rational_point(self) -> bool:
        return self._lo == self._hi

    # -- refinement ---------------------------------------------------------

    def refine(self, eps) -> Tuple[Fraction, Fraction]:
        """Shrink the isolating interval below width eps (bisection).
        Returns the new interval; degenerate [r, r] for rational points."""
        eps = Fraction(eps)
        if eps <= 0:
            raise ValueError("eps must be positive")
        with self._lock:
            if self._lo == self._hi:
                return self._lo, self._hi
            p = self.defining
            slo = p.sign_eval(self._lo)
            assert slo != 0, "isolating endpoints must not be roots"
            while self._hi - self._lo >= eps:
                mid = (self._lo + self._hi) / 2
                v = p.sign_eval(mid)
                if v == 0:
                    # mid is a rational root; collapse exactly
                    self._lo = self._hi = mid
                    return mid, mid
                if v == slo:
                    self._lo = mid
                else:
                    self._hi = mid
            return self._lo, self._hi

    # -- recognition ----------------------------------------------------------

    def as_rational(self) -> Optional[Fraction]:
        """Exact rational value, or None.  Uses the rational-root bound
        (denominator divides the leading coefficient), never snapping."""
        if self._lo == self._hi:
            return self._lo
        if self.defining.degree == 1:
            b, a = self.defining.coeffs
            r = Fraction(-b, a)
            with self._lock:
                self._lo = self._hi = r
            return r
        lc = abs(self.defining.leading())
        self.refine(Fraction(1, lc * lc + 1))
        lo, hi = self.interval
        if lo == hi:
            return lo
        cand = simplest_in_interval(lo, hi)
        if cand.denominator <= lc and self.defining.sign_eval(cand) == 0:
            with self._lock:
                self._lo = self._hi = cand
            return cand
        return None

    def as_integer(self) -> Optional[int]:
        r = self.as_rational()
        if r is not None and r.denominator == 1:
            return r.numerator
        return None

    # -- comparisons --------------------------------------------------------

    def compare(self, other: "AlgebraicReal") -> int:
        a0, a1 = self.interval
        b0, b1 = other.interval
        # exact equality first; nondegenerate isolating intervals have
        # non-root endpoints, which makes each case below decidable
        if a0 == a1 and b0 == b1:
            return (a0 > b0) - (a0 < b0)
        if a0 == a1:
            if b0 < a0 < b1 and other.defining.sign_eval(a0) == 0:
                return 0
        elif b0 == b1:
            if a0 < b0 < a1 and self.defining.sign_eval(b0) == 0:
                return 0
        else:
            lo, hi = max(a0, b0), min(a1, b1)
            if lo < hi:
                g = self.defining.gcd(other.defining)
                if g.degree >= 1:
                    # a root of g inside the open overlap lies in both
                    # isolating intervals, hence is both numbers at once
                    gs = g.squarefree_part()
                    if _count_roots(sturm_chain(gs), lo, hi) >= 1:
                        return 0
        # distinct values: refine until the intervals separate strictly
        widths = [w for w in (a1 - a0, b1 - b0) if w > 0]
        width = min(widths) if widths else Fraction(1)
        while True:
            width /= 2
            a0, a1 = self.refine(width)
            b0, b1 = other.refine(width)
            if a1 < b0:
                return -1
            if b1 < a0:
                return 1

    def _root_of_in(self, g: IntPolynomial, lo: Fraction, hi: Fraction) -> bool:
        """Does g share this number as a root?  True iff g vanishes at
        the unique root of `defining` in our isolating interval."""
        if self._lo == self._hi:
            return g(self._lo) == 0
        # count roots of g in successively refined copies of our interval
        chain = sturm_chain(g.squarefree_part())
        while True:
            a, b = self.interval
            if g.sign_eval(a) == 0 or g.sign_eval(b) == 0:
                # endpoint is a root of g but not of defining; shrink
                self.refine((b - a) / 4)
                continue
            n = _count_roots(chain, a, b)
            if n == 0:
                return False
            # g has a root here; it equals ours iff gcd(defining, g) does.
            gg = self.defining.gcd(g)
            if gg.degree < 1:
                return False
            chain2 = sturm_chain(gg)
            if _count_roots(chain2, a, b) > 0:
                return True
            if n > 0 and (b - a) < Fraction(1, 10**9):
                # distinct roots of g nearby; keep refining ours
                pass
            self.refine((b - a) / 4)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = AlgebraicReal.from_rational(other)
        if not isinstance(other, AlgebraicReal):
            return NotImplemented
        return self.compare(other) == 0

    def __hash__(self):
        r = self.as_rational()
        if r is not None:
            return hash(r)
        return hash(self.defining.squarefree_part())

    def __lt__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = AlgebraicReal.from_rational(other)
        return self.compare(other) < 0

    def __le__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = AlgebraicReal.from_rational(other)
        return self.compare(other) <= 0

    def __gt__(self, other) -> bool:
        return not self.__le__(other)

    def __ge__(self, other) -> bool:
        return not self.__lt__(other)

    # -- output -----------------------------------------------------------

    def approx(self, digits: int = 12) -> Fraction:
        self.refine(Fraction(1, 10 ** (digits + 2)))
        lo, hi = self.interval
        return (lo + hi) / 2

    def __float__(self) -> float:
        return float(self.approx(17))

    def __repr__(self) -> str:
        r = self.as_rational()
        if r is not None:
            return f"AlgebraicReal({r})"
        return f"AlgebraicReal({self.defining!r}, {float(self):.6f})"

    def pretty(self, digits: int = 12) -> str:
        """Lossless-but-readable rendering used by the CLI."""
        r = self.as_rational()
        if r is not None:
            return str(r.numerator) if r.denominator == 1 else f"{r.numerator}/{r.denominator}"
        val = self.approx(digits)
        dec = f"{float(val):.{digits}f}"
        return f"root({format_poly(self.defining.coeffs)} ~ {dec})"


def isolate_real_roots(p: IntPolynomial) -> List[AlgebraicReal]:
    """All distinct real roots of p, ascending, as AlgebraicReal.

    Rational roots come back with a degree-1 defining polynomial and a
    degenerate interval."""
    if p.is_zero():
        raise ValueError("cannot isolate roots of the zero polynomial")
    sf = p.squarefree_part()
    if sf.degree <= 0:
        return []
    chain = sturm_chain(sf)
    bound = sf.root_bound()
    roots: List[AlgebraicReal] = []

    def walk(lo: Fraction, hi: Fraction, n: int) -> None:
        # n = number of roots in the open interval (lo, hi); neither
        # endpoint is ever a root.
        if n == 0:
            return
        if n == 1:
            root = AlgebraicReal(sf, lo, hi)
            rat = root.as_rational()
            if rat is not None:
                roots.append(AlgebraicReal.from_rational(rat))
            else:
                roots.append(root)
            return
        mid = (lo + hi) / 2
        while sf.sign_eval(mid) == 0:  # never split at a root; finitely many exist
            mid = (lo + mid) / 2
        left = _count_roots(chain, lo, mid)
        walk(lo, mid, left)
        walk(mid, hi, n - left)

    total = _count_roots(chain, -bound, bound)
    walk(-bound, bound, total)
    roots.sort(key=lambda r: r.interval[0])
    # sort() above is safe: isolating intervals of distinct roots of one
    # square-free polynomial are disjoint by construction of walk().
    return roots


def sign_at(num_coeffs, alpha: AlgebraicReal) -> int:
    """Exact sign of q(alpha) for a polynomial q with rational
    coefficients (lowest degree first)."""
    q = IntPolynomial.from_fractions([Fraction(c) for c in num_coeffs])
    if q.is_zero():
        return 0
    if alpha.is_rational_point():
        v = q(alpha.interval[0])
        return 0 if v == 0 else (1 if v > 0 else -1)
    if alpha._root_of_in(q, *alpha.interval):
        return 0
    while True:
        lo, hi = alpha.interval
        vlo, vhi = q.eval_interval(lo, hi)
        if vlo > 0:
            return 1
        if vhi < 0:
            return -1
        alpha.refine((hi - lo) / 4)
