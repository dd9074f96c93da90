"""Exact arithmetic in a number field Q[y]/(m(y)) with a chosen real
embedding.

Elements are stored as integer coefficient vectors over a common
denominator, which keeps multiplication in fast machine-integer /
big-int territory; inversion drops to rational-polynomial XGCD.
The real embedding (an AlgebraicReal for the generator) supplies exact
sign decisions.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .algebraic import AlgebraicReal, isolate_real_roots, sign_at
from .polynomials import IntPolynomial


def _poly_divmod(a: List[Fraction], b: List[Fraction]):
    """divmod for Fraction coefficient lists (lowest degree first)."""
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    db = len(b) - 1
    q = [Fraction(0)] * max(len(a) - db, 0)
    while len(a) - 1 >= db and a:
        k = len(a) - 1 - db
        coef = a[-1] / b[-1]
        q[k] = coef
        for i in range(db + 1):
            a[k + i] -= coef * b[i]
        while a and a[-1] == 0:
            a.pop()
    return q, a


class NumberField:
    """Q[y]/(m(y)) together with a real root of m as the embedding."""

    def __init__(self, modulus: Sequence[Fraction], generator: AlgebraicReal):
        mod = [Fraction(c) for c in modulus]
        lc = mod[-1]
        self.modulus = tuple(c / lc for c in mod)  # monic
        self.degree = len(self.modulus) - 1
        self.generator = generator
        self._reduction_rows, self._reduction_den = self._build_reduction()

    @classmethod
    def from_algebraic(cls, alpha: AlgebraicReal) -> "NumberField":
        return cls([Fraction(c) for c in alpha.defining.coeffs], alpha)

    def _build_reduction(self) -> Tuple[List[Tuple[int, ...]], int]:
        """Rows expressing y^(d+j) in the power basis, j = 0..d-2, as
        integer vectors over one common denominator."""
        d = self.degree
        rows_frac: List[List[Fraction]] = []
        # y^d = -(m_0 + ... + m_{d-1} y^{d-1})
        base = [-c for c in self.modulus[:-1]]
        cur = list(base)
        rows_frac.append(list(cur))
        for _ in range(d - 2):
            # multiply by y, reduce the overflow into the basis
            top = cur[-1]
            cur = [Fraction(0)] + cur[:-1]
            cur = [c + top * b for c, b in zip(cur, base)]
            rows_frac.append(list(cur))
        den = 1
        for row in rows_frac:
            for c in row:
                den = den * c.denominator // math.gcd(den, c.denominator)
        rows = [tuple(int(c * den) for c in row) for row in rows_frac]
        return rows, den

    # -- element constructors ------------------------------------------

    def element(self, coeffs: Sequence, den: int = 1) -> "FieldElement":
        d = self.degree
        fracs = [Fraction(c) for c in coeffs]
        fracs += [Fraction(0)] * (d - len(fracs))
        if len(fracs) > d:
            raise ValueError("coefficient vector longer than field degree")
        common = den
        for f in fracs:
            common = common * f.denominator // math.gcd(common, f.denominator)
        nums = tuple(int(f * common) for f in fracs)
        return FieldElement(self, nums, common)

    def zero(self) -> "FieldElement":
        return self.element([])

    def one(self) -> "FieldElement":
        return self.element([1])

    def gen(self) -> "FieldElement":
        return self.element([0, 1])

    def from_rational(self, r) -> "FieldElement":
        return self.element([Fraction(r)])


class FieldElement:
    """Element of a NumberField: integer vector / denominator."""

    __slots__ = ("field", "nums", "den")

    def __init__(self, field: NumberField, nums: Tuple[int, ...], den: int):
        if den < 0:
            nums, den = tuple(-n for n in nums), -den
        g = math.gcd(den, *nums) if any(nums) else den
        if g > 1:
            nums = tuple(n // g for n in nums)
            den //= g
        if not any(nums):
            den = 1
        self.field = field
        self.nums = nums
        self.den = den

    # -- coercion ------------------------------------------------------

    def _coerce(self, other) -> Optional["FieldElement"]:
        if isinstance(other, FieldElement):
            if other.field is not self.field:
                raise ValueError("elements of different fields")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.from_rational(other)
        return None

    # -- predicates / conversions ----------------------------------------

    def is_zero(self) -> bool:
        return not any(self.nums)

    def as_fraction(self) -> Optional[Fraction]:
        if any(self.nums[1:]):
            return None
        return Fraction(self.nums[0] if self.nums else 0, self.den)

    def frac_coeffs(self) -> List[Fraction]:
        return [Fraction(n, self.den) for n in self.nums]

    def sign(self) -> int:
        if self.is_zero():
            return 0
        r = self.as_fraction()
        if r is not None:
            return 1 if r > 0 else -1
        # a nonzero coefficient vector over an irreducible modulus is a
        # nonzero number, so interval evaluation settles the sign; the
        # sign_at fallback stays sound for reducible moduli
        coeffs = self.frac_coeffs()
        gen = self.field.generator
        for _ in range(64):
            lo, hi = gen.interval
            vlo, vhi = _interval_eval(coeffs, lo, hi)
            if vlo > 0:
                return 1
            if vhi < 0:
                return -1
            gen.refine((hi - lo) / 4)
        return sign_at(coeffs, gen)

    def to_algebraic(self) -> AlgebraicReal:
        """Minimal polynomial by linear algebra, embedding by interval
        matching against the generator's interval."""
        r = self.as_fraction()
        if r is not None:
            return AlgebraicReal.from_rational(r)
        d = self.field.degree
        # rows: coefficient vectors of 1, e, e^2, ... until dependent
        powers: List[List[Fraction]] = [[Fraction(1)] + [Fraction(0)] * (d - 1)]
        cur = self.field.one()
        dep: Optional[List[Fraction]] = None
        for _ in range(d):
            cur = cur * self
            powers.append(cur.frac_coeffs())
            dep = _linear_dependence(powers)
            if dep is not None:
                break
        assert dep is not None
        minpoly = IntPolynomial.from_fractions(dep)
        roots = isolate_real_roots(minpoly)
        # refine our own enclosure until it matches exactly one root
        coeffs = self.frac_coeffs()
        width = Fraction(1)
        while True:
            lo, hi = self.field.generator.interval
            elo, ehi = _interval_eval(coeffs, lo, hi)
            hits = [rt for rt in roots if not (rt.interval[1] < elo or ehi < rt.interval[0])]
            if len(hits) == 1:
                return hits[0]
            width /= 4
            self.field.generator.refine(width)
            for rt in hits:
                a, b = rt.interval
                if a != b:
                    rt.refine((b - a) / 4)

    # -- arithmetic ------------------------------------------------------

    def __neg__(self) -> "FieldElement":
        return FieldElement(self.field, tuple(-n for n in self.nums), self.den)

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        g = math.gcd(self.den, o.den)
        la, lb = o.den // g, self.den // g
        den = self.den * la
        nums = tuple(a * la + b * lb for a, b in zip(self.nums, o.nums))
        return FieldElement(self.field, nums, den)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        f = self.field
        d = f.degree
        a, b = self.nums, o.nums
        conv = [0] * (2 * d - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    conv[i + j] += ai * bj
        R = f._reduction_den
        out = [c * R for c in conv[:d]]
        for k in range(d, 2 * d - 1):
            ck = conv[k]
            if ck:
                row = f._reduction_rows[k - d]
                for i in range(d):
                    if row[i]:
                        out[i] += ck * row[i]
        return FieldElement(f, tuple(out), self.den * o.den * R)

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        """Inverse via a fraction-free linear solve of (mult-by-self) x = 1.

        Bareiss elimination on the integer multiplication matrix avoids
        the coefficient blow-up of rational polynomial XGCD."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero field element")
        r = self.as_fraction()
        if r is not None:
            return self.field.from_rational(1 / r)
        f = self.field
        d = f.degree
        # column j: integer coordinates of self * y^j (common scale R)
        R = f._reduction_den
        cols = []
        shifted = list(self.nums)
        for j in range(d):
            conv = [0] * j + shifted
            out = [c * R for c in conv[:d]]
            for k in range(d, len(conv)):
                ck = conv[k]
                if ck:
                    row = f._reduction_rows[k - d]
                    for i in range(d):
                        if row[i]:
                            out[i] += ck * row[i]
            cols.append(out)
        # solve sum_j x_j * cols[j] = (den * R) * e0 by Bareiss elimination
        m = [[cols[j][i] for j in range(d)] for i in range(d)]
        rhs = [self.den * R if i == 0 else 0 for i in range(d)]
        prev = 1
        for k in range(d - 1):
            if m[k][k] == 0:
                for p in range(k + 1, d):
                    if m[p][k] != 0:
                        m[k], m[p] = m[p], m[k]
                        rhs[k], rhs[p] = rhs[p], rhs[k]
                        break
                else:
                    raise ZeroDivisionError(
                        "element is a zero divisor (reducible modulus)"
                    )
            pk = m[k][k]
            for i in range(k + 1, d):
                mik = m[i][k]
                row_i, row_k = m[i], m[k]
                for j in range(k + 1, d):
                    row_i[j] = (pk * row_i[j] - mik * row_k[j]) // prev
                rhs[i] = (pk * rhs[i] - mik * rhs[k]) // prev
                row_i[k] = 0
            prev = pk
        if m[d - 1][d - 1] == 0:
            raise ZeroDivisionError("element is a zero divisor (reducible modulus)")
        # back substitution over exact rationals
        x = [Fraction(0)] * d
        for i in range(d - 1, -1, -1):
            s = Fraction(rhs[i])
            for j in range(i + 1, d):
                s -= m[i][j] * x[j]
            x[i] = s / m[i][i]
        return f.element(x)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int) -> "FieldElement":
        if n < 0:
            return self.inverse() ** (-n)
        result = self.field.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).is_zero()

    def __hash__(self):
        return hash((self.nums, self.den))

    def __repr__(self) -> str:
        r = self.as_fraction()
        if r is not None:
            return f"FieldElement({r})"
        return f"FieldElement({self.frac_coeffs()})"


def _linear_dependence(rows: List[List[Fraction]]) -> Optional[List[Fraction]]:
    """If rows are linearly dependent, return combination coefficients
    (one per row, last nonzero normalized to 1) witnessing it, treating
    rows as vectors; None when independent."""
    n = len(rows)
    width = len(rows[0])
    # Gaussian elimination tracking the combination matrix
    mat = [list(r) for r in rows]
    comb = [[Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]
    piv_cols = []
    ri = 0
    for col in range(width):
        sel = None
        for r in range(ri, n):
            if mat[r][col] != 0:
                sel = r
                break
        if sel is None:
            continue
        mat[ri], mat[sel] = mat[sel], mat[ri]
        comb[ri], comb[sel] = comb[sel], comb[ri]
        inv = 1 / mat[ri][col]
        mat[ri] = [c * inv for c in mat[ri]]
        comb[ri] = [c * inv for c in comb[ri]]
        for r in range(n):
            if r != ri and mat[r][col] != 0:
                factor = mat[r][col]
                mat[r] = [c - factor * p for c, p in zip(mat[r], mat[ri])]
                comb[r] = [c - factor * p for c, p in zip(comb[r], comb[ri])]
        piv_cols.append(col)
        ri += 1
        if ri == n:
            return None
    # rows ri.. are zero rows: dependence found
    dep = comb[ri]
    # normalize on the highest-index row participating
    last = max(i for i, c in enumerate(dep) if c != 0)
    scale = 1 / dep[last]
    return [c * scale for c in dep]


def _interval_eval(coeffs: Sequence[Fraction], lo: Fraction, hi: Fraction):
    alo, ahi = Fraction(0), Fraction(0)
    for c in reversed(list(coeffs)):
        cands = (alo * lo, alo * hi, ahi * lo, ahi * hi)
        alo, ahi = min(cands) + c, max(cands) + c
    return alo, ahi


def batch_inverse(xs):
    """Invert a list of nonzero scalars with a single division
    (Montgomery's trick); works for Fractions and field elements alike."""
    if not xs:
        return []
    prefix = [xs[0]]
    for x in xs[1:]:
        prefix.append(prefix[-1] * x)
    total = prefix[-1]
    acc = 1 / total if isinstance(total, Fraction) else total.inverse()
    out = [None] * len(xs)
    for i in range(len(xs) - 1, 0, -1):
        out[i] = acc * prefix[i - 1]
        acc = acc * xs[i]
    out[0] = acc
    return out
