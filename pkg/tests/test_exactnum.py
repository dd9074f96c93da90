"""Exact-arithmetic kernel: polynomials, algebraic reals, number fields."""

import random
from fractions import Fraction

import pytest

from drgspectra.exactnum import (
    AlgebraicReal,
    FieldElement,
    IntPolynomial,
    NumberField,
    isolate_real_roots,
    sign_at,
    simplest_in_interval,
    sturm_chain,
)
from drgspectra.exactnum.numberfield import batch_inverse
from drgspectra.exactnum.splitting import splitting_field


# -- integer polynomials ------------------------------------------------


def test_ring_ops_and_eval():
    p = IntPolynomial((1, 2, 3))  # 3x^2 + 2x + 1
    q = IntPolynomial((-1, 1))  # x - 1
    assert (p + q).coeffs == (0, 3, 3)
    assert (p * q).coeffs == (-1, -1, -1, 3)
    assert (-p).coeffs == (-1, -2, -3)
    assert p(Fraction(1, 2)) == Fraction(1) + 1 + Fraction(3, 4)
    assert p.degree == 2 and q.leading() == 1


def test_from_roots_and_derivative():
    p = IntPolynomial.from_roots([1, -2, 3])
    assert p(1) == 0 and p(-2) == 0 and p(3) == 0 and p(0) != 0
    d = p.derivative()
    # derivative of (x-1)(x+2)(x-3) = x^3 - 2x^2 - 5x + 6
    assert p.coeffs == (6, -5, -2, 1)
    assert d.coeffs == (-5, -4, 3)


def test_from_fractions_clears_denominators():
    p = IntPolynomial.from_fractions([Fraction(1, 2), Fraction(-1, 3), Fraction(1)])
    # primitive with the same roots: 6x^2 - 2x + 3
    assert p.coeffs == (3, -2, 6)
    assert p.content() == 1


def test_gcd_primitive_prs():
    a = IntPolynomial.from_roots([1, 2, 3]).scale(4)
    b = IntPolynomial.from_roots([2, 3, 5]).scale(-6)
    g = a.gcd(b)
    assert g(2) == 0 and g(3) == 0 and g.degree == 2
    assert g.content() == 1 and g.leading() > 0
    c = IntPolynomial((7,))
    assert a.gcd(c).degree == 0


def test_squarefree_part_and_yun():
    p = IntPolynomial.from_roots([1, 1, 1, -2, -2, 5])
    sf = p.squarefree_part()
    assert sorted(sf.coeffs) == sorted(IntPolynomial.from_roots([1, -2, 5]).coeffs)
    dec = p.squarefree_decomposition()
    by_mult = {m: f for f, m in dec}
    assert by_mult[1](5) == 0 and by_mult[1].degree == 1
    assert by_mult[2](-2) == 0 and by_mult[2].degree == 1
    assert by_mult[3](1) == 0 and by_mult[3].degree == 1
    # reassemble
    prod = IntPolynomial((1,))
    for f, m in dec:
        for _ in range(m):
            prod = prod * f
    assert prod.coeffs == p.primitive_part().coeffs


def test_root_bound_contains_roots():
    p = IntPolynomial.from_roots([-17, 3, 12])
    bound = p.root_bound()
    assert bound > 17


def test_exact_div():
    a = IntPolynomial.from_roots([1, 2, 3])
    b = IntPolynomial.from_roots([2])
    q = a.exact_div(b)
    assert (q * b).coeffs == a.coeffs


# -- Sturm isolation -----------------------------------------------------


def test_isolate_linear():
    roots = isolate_real_roots(IntPolynomial((-3, 1)))  # x - 3
    assert len(roots) == 1
    assert roots[0].as_rational() == 3
    assert roots[0].as_integer() == 3


def test_isolate_sqrt2():
    roots = isolate_real_roots(IntPolynomial((-2, 0, 1)))  # x^2 - 2
    assert len(roots) == 2
    neg, pos = roots
    assert pos.as_rational() is None and pos.as_integer() is None
    lo, hi = pos.refine(Fraction(1, 10**6))
    assert lo * lo < 2 < hi * hi
    assert neg.compare(pos) < 0
    assert (-pos).compare(neg) == 0


def test_isolate_heptagon_cosines():
    # roots are 2cos(2pi j/7), j = 1, 2, 3
    p = IntPolynomial((-1, -2, 1, 1))  # x^3 + x^2 - 2x - 1
    roots = isolate_real_roots(p)
    assert len(roots) == 3
    import math

    expect = sorted(2 * math.cos(2 * math.pi * j / 7) for j in (1, 2, 3))
    for r, e in zip(roots, expect):
        assert abs(float(r) - e) < 1e-12
        assert r.as_rational() is None


def test_isolate_mixed_rational_irrational():
    # (x - 1/2)(x^2 - 3) cleared: (2x - 1)(x^2 - 3)
    p = IntPolynomial((-1, 2)) * IntPolynomial((-3, 0, 1))
    roots = isolate_real_roots(p)
    assert len(roots) == 3
    rats = [r.as_rational() for r in roots]
    assert rats[1] == Fraction(1, 2)
    assert rats[0] is None and rats[2] is None


def test_isolation_random_integer_roots():
    rng = random.Random(7)
    for _ in range(20):
        pts = sorted(rng.sample(range(-40, 40), rng.randint(2, 5)))
        p = IntPolynomial.from_roots(pts)
        roots = isolate_real_roots(p)
        assert [r.as_integer() for r in roots] == pts


def test_sturm_chain_counts():
    p = IntPolynomial((-2, 0, 1))  # x^2 - 2
    chain = sturm_chain(p)
    from drgspectra.exactnum.algebraic import _count_roots

    assert _count_roots(chain, Fraction(-10), Fraction(10)) == 2
    assert _count_roots(chain, Fraction(0), Fraction(10)) == 1
    assert _count_roots(chain, Fraction(2), Fraction(10)) == 0


def test_refine_nested_and_monotone():
    r = isolate_real_roots(IntPolynomial((-2, 0, 1)))[1]
    lo1, hi1 = r.refine(Fraction(1, 10))
    lo2, hi2 = r.refine(Fraction(1, 1000))
    assert lo1 <= lo2 < hi2 <= hi1
    assert hi2 - lo2 < Fraction(1, 1000)


def test_as_rational_never_snaps():
    # root of x^2 + 3x + 1 is irrational but close to simple rationals
    r = isolate_real_roots(IntPolynomial((1, 3, 1)))[0]
    assert r.as_rational() is None
    r.refine(Fraction(1, 10**12))
    assert r.as_rational() is None


def test_compare_touching_intervals():
    # two distinct numbers whose initial isolating intervals share an
    # endpoint must still compare strictly, and a number must equal an
    # exact rational sitting on its interval boundary only when it is
    # that rational
    sqrt2 = isolate_real_roots(IntPolynomial((-2, 0, 1)))[1]
    sqrt3 = isolate_real_roots(IntPolynomial((-3, 0, 1)))[1]
    assert sqrt2.compare(sqrt3) == -1
    assert sqrt3.compare(sqrt2) == 1
    # same number from two different defining polynomials
    a = AlgebraicReal(IntPolynomial((-2, 0, 1)), Fraction(1), Fraction(2))
    b = AlgebraicReal(IntPolynomial((-4, 0, 0, 0, 1)), Fraction(1), Fraction(3, 2))
    assert a.compare(b) == 0
    assert a == b


def test_comparison_with_rationals():
    sqrt2 = isolate_real_roots(IntPolynomial((-2, 0, 1)))[1]
    assert sqrt2 > 1
    assert sqrt2 < Fraction(3, 2)
    assert sqrt2 != Fraction(7, 5)
    assert not (sqrt2 == Fraction(7, 5))


def test_sign_at():
    sqrt2 = isolate_real_roots(IntPolynomial((-2, 0, 1)))[1]
    assert sign_at([Fraction(-2), Fraction(0), Fraction(1)], sqrt2) == 0
    assert sign_at([Fraction(-1), Fraction(1)], sqrt2) == 1  # x - 1 > 0
    assert sign_at([Fraction(2), Fraction(-1)], sqrt2) == 1  # 2 - x > 0
    assert sign_at([Fraction(1), Fraction(-1)], sqrt2) == -1  # 1 - x < 0


def test_simplest_in_interval():
    assert simplest_in_interval(Fraction(1, 3), Fraction(1, 2)) == Fraction(2, 5)
    assert simplest_in_interval(Fraction(5, 2), Fraction(7, 2)) == 3
    assert simplest_in_interval(Fraction(-1, 2), Fraction(1, 2)) == 0
    with pytest.raises(ValueError):
        simplest_in_interval(Fraction(1), Fraction(1))


def test_pretty_and_float():
    three = AlgebraicReal.from_rational(3)
    assert three.pretty() == "3"
    sqrt2 = isolate_real_roots(IntPolynomial((-2, 0, 1)))[1]
    s = sqrt2.pretty()
    assert "root(" in s and "1.414213562373" in s
    assert abs(float(sqrt2) - 2**0.5) < 1e-15


# -- number fields -------------------------------------------------------


def _golden_field():
    phi = isolate_real_roots(IntPolynomial((-1, -1, 1)))[1]  # (1+sqrt5)/2
    return NumberField.from_algebraic(phi)


def test_field_arithmetic():
    K = _golden_field()
    g = K.gen()
    assert (g * g - g - 1).is_zero()  # phi^2 = phi + 1
    assert (g + 1 - g * g).is_zero()
    x = g * Fraction(2, 3) + 5
    y = x - 5
    assert (y * Fraction(3, 2) - g).is_zero()
    assert x.as_fraction() is None
    assert K.from_rational(Fraction(7, 4)).as_fraction() == Fraction(7, 4)


def test_field_inverse_and_division():
    K = _golden_field()
    g = K.gen()
    inv = g.inverse()
    assert (g * inv - 1).is_zero()
    # 1/phi = phi - 1
    assert (inv - (g - 1)).is_zero()
    assert ((1 / g) - inv).is_zero()
    with pytest.raises(ZeroDivisionError):
        K.zero().inverse()


def test_field_sign_and_to_algebraic():
    K = _golden_field()
    g = K.gen()
    assert g.sign() == 1
    assert (g - 2).sign() == -1
    assert (g * g - g - 1).sign() == 0
    back = g.to_algebraic()
    assert back.defining.coeffs == (-1, -1, 1)
    # conjugate element 1 - phi = -1/phi is a root of the same minpoly
    conj = 1 - g
    alg = conj.to_algebraic()
    assert alg.defining(Fraction(0)) != 0
    assert alg < 0


def test_field_pow():
    K = _golden_field()
    g = K.gen()
    # phi^10 = 55 phi + 34 (Fibonacci)
    assert (g**10 - (g * 55 + 34)).is_zero()
    assert ((g**-3) * (g**3) - 1).is_zero()


def test_batch_inverse():
    K = _golden_field()
    xs = [K.gen(), K.gen() + 1, K.from_rational(Fraction(3, 7)), K.gen() * 2 - 1]
    invs = batch_inverse(xs)
    for x, ix in zip(xs, invs):
        assert (x * ix - 1).is_zero()
    fr = batch_inverse([Fraction(2), Fraction(-3, 5)])
    assert fr == [Fraction(1, 2), Fraction(-5, 3)]
    assert batch_inverse([]) == []


# -- splitting fields -----------------------------------------------------


def test_splitting_single():
    sqrt2 = isolate_real_roots(IntPolynomial((-2, 0, 1)))[1]
    field, reps = splitting_field([sqrt2])
    assert field.degree == 2
    assert (reps[0] * reps[0] - 2).is_zero()


def test_splitting_conjugate_pair():
    roots = isolate_real_roots(IntPolynomial((-2, 0, 1)))
    field, reps = splitting_field(roots)
    assert field.degree == 2
    assert (reps[0] + reps[1]).is_zero()  # -sqrt2 + sqrt2 = 0
    assert (reps[0] * reps[1] + 2).is_zero()


def test_splitting_two_quadratics():
    sqrt2 = isolate_real_roots(IntPolynomial((-2, 0, 1)))[1]
    sqrt3 = isolate_real_roots(IntPolynomial((-3, 0, 1)))[1]
    field, reps = splitting_field([sqrt2, sqrt3])
    assert field.degree == 4
    a, b = reps
    assert (a * a - 2).is_zero() and (b * b - 3).is_zero()
    prod = a * b  # sqrt6
    assert (prod * prod - 6).is_zero()
    assert prod.sign() == 1


def test_splitting_cubic_all_roots():
    p = IntPolynomial((-1, -2, 1, 1))  # heptagon cosines
    roots = isolate_real_roots(p)
    field, reps = splitting_field(roots)
    # Galois cubic: all three roots live in the degree-3 field
    assert field.degree == 3
    s = reps[0] + reps[1] + reps[2]
    assert (s + 1).is_zero()  # sum of roots = -1
    prod = reps[0] * reps[1] * reps[2]
    assert (prod - 1).is_zero()  # product = 1
    # each rep really satisfies the cubic
    for r in reps:
        assert (((r + 1) * r - 2) * r - 1).is_zero()


def test_splitting_order_preserved():
    roots = isolate_real_roots(IntPolynomial((-1, -2, 1, 1)))
    field, reps = splitting_field(roots)
    for prev, nxt in zip(reps, reps[1:]):
        assert (nxt - prev).sign() == 1
