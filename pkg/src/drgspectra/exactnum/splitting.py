"""Common real number field for a batch of algebraic numbers.

Builds the compositum incrementally: adjoin one number at a time via a
primitive element gamma' = gamma + c*theta, with the new minimal
polynomial obtained from an integer resultant plus one integer
factorization, and theta recovered inside the new field by a polynomial
gcd.  Every representation is verified exactly against the target's
defining polynomial and isolating interval, so a bad choice of c (or any
bug) surfaces as a retry or a hard error, never as a wrong answer.

This is dramatically faster than generic symbolic machinery because the
only big operations are one resultant and one Zassenhaus factorization
per adjunction."""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

import sympy

from .algebraic import AlgebraicReal, isolate_real_roots, sign_at
from .numberfield import FieldElement, NumberField
from .polynomials import IntPolynomial


class _RetryExtension(Exception):
    """The chosen combination coefficient c was degenerate."""


def _to_sympy(p: IntPolynomial, sym) -> "sympy.Poly":
    return sympy.Poly(list(reversed(p.coeffs)), sym)


def _from_sympy(p) -> IntPolynomial:
    coeffs = tuple(int(c) for c in reversed(p.all_coeffs()))
    if coeffs[-1] < 0:
        coeffs = tuple(-c for c in coeffs)
    return IntPolynomial(coeffs)


def _irreducible_factors(p: IntPolynomial) -> List[IntPolynomial]:
    z = sympy.Symbol("z")
    _, fl = sympy.factor_list(_to_sympy(p, z))
    return [_from_sympy(f) for f, _ in fl]


def _minpoly_of(alpha: AlgebraicReal, factors: List[IntPolynomial]) -> IntPolynomial:
    for f in factors:
        if sign_at([Fraction(c) for c in f.coeffs], alpha) == 0:
            return f
    raise ArithmeticError("no irreducible factor vanishes at the target")


# -- polynomial helpers over a number field ---------------------------------


def _fe_poly_trim(p: List[FieldElement]) -> List[FieldElement]:
    while p and p[-1].is_zero():
        p.pop()
    return p


def _fe_poly_rem(
    a: List[FieldElement], b: List[FieldElement], field: NumberField
) -> List[FieldElement]:
    """Pseudo-remainder of a mod b over the field (b nonzero): a scalar
    multiple of the true remainder, computed without any inversion.
    Fine for gcd chains, where remainders matter only up to scale."""
    a = list(a)
    lcb = b[-1]
    db = len(b) - 1
    while len(a) - 1 >= db and _fe_poly_trim(a):
        k = len(a) - 1 - db
        coef = a[-1]
        a = [x * lcb for x in a]
        for i in range(db + 1):
            a[k + i] = a[k + i] - coef * b[i]
        a.pop()
        _fe_poly_trim(a)
    return a


def _fe_poly_gcd(
    a: List[FieldElement], b: List[FieldElement], field: NumberField
) -> List[FieldElement]:
    a, b = list(a), list(b)
    _fe_poly_trim(a)
    _fe_poly_trim(b)
    while b:
        a, b = b, _fe_poly_rem(a, b, field)
    return a


def _compose_linear(
    M: IntPolynomial, gen: FieldElement, c, field: NumberField
) -> List[FieldElement]:
    """M(gen - c*z) as a polynomial in z over the field, by Horner.
    c may be any rational."""
    acc: List[FieldElement] = [field.zero()]
    neg_c = field.from_rational(-Fraction(c))
    for coeff in reversed(M.coeffs):
        # acc = acc * (gen - c z) + coeff
        shifted = [field.zero()] + [x * neg_c for x in acc]
        for i, x in enumerate(acc):
            shifted[i] = shifted[i] + x * gen
        shifted[0] = shifted[0] + coeff
        acc = shifted
    return _fe_poly_trim(acc)


def _verify_rep(el: FieldElement, target: AlgebraicReal) -> None:
    """el must be the root of target.defining in target's interval."""
    acc = el.field.zero()
    for c in reversed(target.defining.coeffs):
        acc = acc * el + c
    if not acc.is_zero():
        raise ArithmeticError("field representation is not a conjugate root")
    lo, hi = target.interval
    if (el - lo).sign() <= 0 or (el - hi).sign() >= 0:
        raise ArithmeticError("field representation picks the wrong conjugate")


def _resultant_minpoly(
    M: IntPolynomial, f: IntPolynomial, c: int
) -> List[IntPolynomial]:
    """Irreducible integer factors of Res_z(M(z), f(x - c z)); the new
    primitive element theta + c*gamma is a root of one of them."""
    x, z = sympy.symbols("x z")
    fx = sum(
        co * (x - c * z) ** i for i, co in enumerate(f.coeffs) if co
    )
    R = sympy.resultant(_to_sympy(M, z).as_expr(), sympy.expand(fx), z)
    Rp = sympy.Poly(R, x)
    if Rp.degree() < 1:
        raise _RetryExtension
    _, fl = sympy.factor_list(Rp)
    return [_from_sympy(g) for g, _ in fl if g.degree(x) >= 1]


def _extend(
    M: IntPolynomial,
    gen_alg: AlgebraicReal,
    field: NumberField,
    f: IntPolynomial,
    theta: AlgebraicReal,
    c: int,
) -> Tuple[IntPolynomial, NumberField, AlgebraicReal, FieldElement, FieldElement]:
    """Adjoin theta (root of irreducible f) to Q(gen_alg) (minpoly M) via
    gamma' = theta + c*gamma.  Returns (M', field', gen'_alg, theta_rep,
    old_gamma_rep)."""
    candidates = _resultant_minpoly(M, f, c)

    def lo_of(w):
        a, _ = gen_alg.refine(w)
        b, _ = theta.refine(w)
        return b + c * a

    def hi_of(w):
        _, a = gen_alg.refine(w)
        _, b = theta.refine(w)
        return b + c * a

    # locate the factor vanishing at gamma' by interval isolation over
    # the union of all candidate roots
    roots_by_poly = []
    for cand in candidates:
        roots_by_poly.extend((cand, r) for r in isolate_real_roots(cand))
    width = Fraction(1, 16)
    while True:
        lo, hi = lo_of(width), hi_of(width)
        hits = [
            (cand, r)
            for cand, r in roots_by_poly
            if not (r.interval[1] < lo or hi < r.interval[0])
        ]
        if len(hits) == 1:
            M2, gen2_alg = hits[0]
            break
        if not hits:
            raise ArithmeticError(
                "primitive element is not a root of the resultant (bug)"
            )
        width /= 16
        for _, r in hits:
            a, b = r.interval
            if a != b:
                r.refine((b - a) / 4)
    if M2.degree < max(M.degree, f.degree):
        # gamma + c*theta collapsed into a smaller field (e.g. the trace
        # of a conjugate pair); this c cannot give a primitive element
        raise _RetryExtension
    if M2.degree == M.degree:
        # the field did not grow, so theta most likely lies in it
        # already.  Solve for theta inside the current field: theta is
        # the unique common root of f(z) and M2(z + c*gamma).  Keeping
        # the old generator avoids the coefficient blow-up of chained
        # resultant generators.
        G = _compose_linear(M2, c * field.gen(), -1, field)
        fz = [field.from_rational(co) for co in f.coeffs]
        h = _fe_poly_gcd(fz, G, field)
        if len(h) != 2:
            raise _RetryExtension
        theta_rep = -(h[0] * h[1].inverse())
        _verify_rep(theta_rep, theta)
        return M, field, gen_alg, theta_rep, field.gen()
    field2 = NumberField([Fraction(co) for co in M2.coeffs], gen2_alg)
    # theta is the unique common root of f(z) and M((gamma' - z)/c)
    inv_c = Fraction(1, c)
    G = _compose_linear(M, inv_c * field2.gen(), inv_c, field2)
    fz = [field2.from_rational(co) for co in f.coeffs]
    h = _fe_poly_gcd(fz, G, field2)
    if len(h) != 2:
        raise _RetryExtension
    theta_rep = -(h[0] * h[1].inverse())
    _verify_rep(theta_rep, theta)
    old_gamma = inv_c * (field2.gen() - theta_rep)
    _verify_rep(old_gamma, gen_alg)
    return M2, field2, gen2_alg, theta_rep, old_gamma


def splitting_field(
    targets: Sequence[AlgebraicReal],
) -> Tuple[NumberField, List[FieldElement]]:
    """A number field containing every (irrational) target, with each
    target expressed in it.  Representations are verified exactly."""
    if not targets:
        raise ValueError("no targets")
    factor_cache: Dict[Tuple[int, ...], List[IntPolynomial]] = {}
    minpolys: List[IntPolynomial] = []
    for t in targets:
        key = t.defining.coeffs
        if key not in factor_cache:
            factor_cache[key] = _irreducible_factors(t.defining)
        minpolys.append(_minpoly_of(t, factor_cache[key]))

    M = minpolys[0]
    gen_alg = AlgebraicReal(M, *targets[0].interval)
    field = NumberField([Fraction(co) for co in M.coeffs], gen_alg)
    reps = [field.gen()]
    for t in range(1, len(targets)):
        f, theta = minpolys[t], targets[t]
        siblings = [reps[s] for s in range(t) if minpolys[s].coeffs == f.coeffs]
        if len(siblings) == f.degree - 1:
            # every other root of f is known; when f is totally real
            # this one is the trace minus their sum, skipping a full
            # extension step (verified, with fallback if f has complex
            # roots)
            trace = -Fraction(f.coeffs[f.degree - 1], f.coeffs[f.degree])
            rep = field.from_rational(trace)
            for s in siblings:
                rep = rep - s
            try:
                _verify_rep(rep, theta)
            except ArithmeticError:
                pass
            else:
                reps.append(rep)
                continue
        for c in (1, 2, 3, 5, 7, 11, 13, 17):
            try:
                M2, field2, gen2_alg, theta_rep, old_gamma = _extend(
                    M, gen_alg, field, f, theta, c
                )
            except _RetryExtension:
                continue
            break
        else:
            raise ArithmeticError("no usable combination coefficient found")
        if field2 is field:
            reps.append(theta_rep)
            continue
        new_reps = []
        for rp in reps:
            coeffs = rp.frac_coeffs()
            acc = field2.zero()
            for co in reversed(coeffs):
                acc = acc * old_gamma + co
            new_reps.append(acc)
        new_reps.append(theta_rep)
        reps = new_reps
        M, gen_alg, field = M2, gen2_alg, field2
    for rp, t in zip(reps, targets):
        _verify_rep(rp, t)
    return field, reps
