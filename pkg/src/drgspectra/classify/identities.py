"""Randomized exact identity suites tying the closed forms to each other.

Each suite samples exact rational parameters from a seeded RNG and
demands exact equality between two independently coded expressions, so a
corrupted formula anywhere in the params module fails loudly.  All
checks go through the params module attributes at call time, which keeps
them honest under test-time mutation."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from types import SimpleNamespace
from typing import Callable, List, Optional, Tuple

from . import params
from .family import d3_family


@dataclass
class IdentityResult:
    name: str
    trials: int
    passed: bool
    detail: str = ""


def _random_q(rng: random.Random, require_sq_gt1: bool = False) -> Fraction:
    """Random nonzero rational q avoiding the torsion exclusions."""
    while True:
        num = rng.randint(-60, 60)
        den = rng.randint(1, 12)
        q = Fraction(num, den)
        if q == 0 or abs(q) == 1:
            continue
        if require_sq_gt1 and q * q <= 1:
            continue
        return q


def _random_params(rng: random.Random, dmax: int) -> params.QSParameters:
    while True:
        q = _random_q(rng)
        s = Fraction(rng.randint(-30, 30), rng.randint(1, 10))
        D = rng.randint(3, dmax)
        p = params.QSParameters(q, s, D)
        if not p.violated_constraints():
            return p


def check_xi_closed_form(trials: int, rng: random.Random, dmax: int) -> IdentityResult:
    """eta + beta^2 - 1 must equal (q^{2D}-q^9)/(q^{2D+2}-q^7)."""
    for _ in range(trials):
        D = rng.randint(3, dmax)
        q = _random_q(rng)
        if q ** (2 * D) == q**5 or q ** (2 * D + 2) == q**7:
            continue
        rep = params.eta_of(q, D)
        expect = (q ** (2 * D) - q**9) / (q ** (2 * D + 2) - q**7)
        got = rep.eta + rep.beta * rep.beta - 1
        if got != expect or rep.xi != expect:
            return IdentityResult(
                "xi_closed_form", trials, False, f"q={q} D={D}: {got} != {expect}"
            )
    return IdentityResult("xi_closed_form", trials, True)


def check_theta_d_closed_form(
    trials: int, rng: random.Random, dmax: int
) -> IdentityResult:
    """theta_D from the general formula equals (q^{1-D}-q^D)/(q-1)."""
    for _ in range(trials):
        p = _random_params(rng, dmax)
        _, _, _, thetas = params.qs_evaluate(p)
        q, D = p.q, p.D
        expect = (q ** (1 - D) - q**D) / (q - 1)
        if thetas[D] != expect:
            return IdentityResult(
                "theta_d_closed_form",
                trials,
                False,
                f"(q,s,D)=({p.q},{p.s},{p.D}): {thetas[D]} != {expect}",
            )
    return IdentityResult("theta_d_closed_form", trials, True)


def check_beta_consistency(
    trials: int, rng: random.Random, dmax: int
) -> IdentityResult:
    """beta_of applied to the parametrized theta's gives q + 1/q."""
    for _ in range(trials):
        p = _random_params(rng, dmax)
        _, _, _, thetas = params.qs_evaluate(p)
        try:
            got = params.beta_of(thetas[0], thetas[1], thetas[2], thetas[3])
        except ValueError:
            continue
        expect = p.q + 1 / p.q
        if got != expect:
            return IdentityResult(
                "beta_consistency",
                trials,
                False,
                f"(q,s,D)=({p.q},{p.s},{p.D}): {got} != {expect}",
            )
    return IdentityResult("beta_consistency", trials, True)


def check_curtin_closed_form(
    trials: int, rng: random.Random, dmax: int
) -> IdentityResult:
    """Direct gap at theta_D equals the closed-form rational function."""
    for _ in range(trials):
        p = _random_params(rng, dmax)
        _, k, cs, thetas = params.qs_evaluate(p)
        arr = SimpleNamespace(D=p.D, k=k, c=cs)
        direct = params.curtin_gap(arr, thetas[p.D])
        try:
            closed = params.curtin_gap_closed_form(p)
        except params.ParameterConstraintError:
            continue
        if direct != closed:
            return IdentityResult(
                "curtin_closed_form",
                trials,
                False,
                f"(q,s,D)=({p.q},{p.s},{p.D}): {direct} != {closed}",
            )
    return IdentityResult("curtin_closed_form", trials, True)


def check_chebyshev(trials: int, rng: random.Random, dmax: int) -> IdentityResult:
    """T_i(q + 1/q) = q^i + q^{-i} for i <= 20."""
    for _ in range(trials):
        q = _random_q(rng)
        i = rng.randint(0, 20)
        if params.chebyshev_T(i)(q + 1 / q) != q**i + q**-i:
            return IdentityResult(
                "chebyshev", trials, False, f"q={q} i={i} mismatch"
            )
    return IdentityResult("chebyshev", trials, True)


def check_b2_closed_form(trials: int, rng: random.Random, dmax: int) -> IdentityResult:
    """k - mu = (beta^2+beta-1)(beta^2+beta-1-beta*mu) on an integer grid."""
    count = 0
    for beta in range(-50, 51):
        for mu in range(1, 51):
            p = d3_family(beta, mu)
            e = Fraction(beta * beta + beta - 1)
            if p.k - mu != e * (e - beta * mu):
                return IdentityResult(
                    "b2_closed_form", count, False, f"beta={beta} mu={mu}"
                )
            count += 1
    return IdentityResult("b2_closed_form", count, True)


def check_d4_impossibility(
    trials: int, rng: random.Random, dmax: int
) -> IdentityResult:
    """Sign value strictly negative and xi^2 < 1 for all q^2 > 1, D >= 4."""
    for _ in range(trials):
        q = _random_q(rng, require_sq_gt1=True)
        D = rng.randint(4, max(4, dmax))
        xi, sign_value = params.d4_contradiction_witness(q, D)
        if not (sign_value < 0 and xi * xi < 1):
            return IdentityResult(
                "d4_impossibility",
                trials,
                False,
                f"q={q} D={D}: sign={sign_value} xi={xi}",
            )
    return IdentityResult("d4_impossibility", trials, True)


SUITES: Tuple[Tuple[str, Callable], ...] = (
    ("xi_closed_form", check_xi_closed_form),
    ("theta_d_closed_form", check_theta_d_closed_form),
    ("beta_consistency", check_beta_consistency),
    ("curtin_closed_form", check_curtin_closed_form),
    ("chebyshev", check_chebyshev),
    ("b2_closed_form", check_b2_closed_form),
    ("d4_impossibility", check_d4_impossibility),
)


def run_identity_suite(
    trials: int, seed: int, dmax: int = 8, names: Optional[List[str]] = None
) -> List[IdentityResult]:
    """Run every identity suite (or the named subset) with its own
    deterministic RNG stream."""
    results = []
    for name, fn in SUITES:
        if names is not None and name not in names:
            continue
        rng = random.Random(f"{seed}:{name}")
        results.append(fn(trials, rng, dmax))
    return results
