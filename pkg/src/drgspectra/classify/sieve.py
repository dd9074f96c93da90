"""Deterministic feasibility sieve over the (beta, mu) grid of the
diameter-3 family.

Each grid cell is evaluated by a pure function; the output is emitted in
(beta, mu)-lexicographic order regardless of how the cells were
scheduled, so two runs with the same inputs are byte-identical.  Records
carry every filter verdict (cheap integer checks first, then spectral
ones); degenerate cells are emitted with failing flags, never skipped.

Record line format (space-separated key=value, one record per line):

    beta=<int> mu=<int> k=<q> c2=<q> c3=<q> n=<q|na> thetas=<q,q,q,q>
    mults=<q,q,q,q|na> <filter>=<true|false|na> ... verdict=<word>

where <q> is an exact integer or numerator/denominator pair and the
filters appear in the fixed order of FILTER_NAMES."""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Tuple

from ..spectral.arrays import IntersectionArray
from ..spectral.eigensystem import RepeatedEigenvalueError, spectrum
from .family import classify, d3_family
from .params import curtin_gap

FILTER_NAMES = (
    "k_positive_integral",
    "c2_positive_integral",
    "c3_positive_integral",
    "a3_positive",
    "monotone",
    "n_integral",
    "mults_positive_integral",
    "krein_nonnegative",
    "eigenvalues_integral",
    "curtin_nonzero",
    "theta1_negative",
    "beta_condition",
)


@dataclass
class CandidateRecord:
    """One (beta, mu) cell with its derived data and filter verdicts."""

    beta: int
    mu: int
    k: Fraction
    c2: Fraction
    c3: Fraction
    n: Optional[Fraction]
    thetas: Tuple[Fraction, Fraction, Fraction, Fraction]
    mults: Optional[Tuple[Fraction, ...]]
    filters: Dict[str, Optional[bool]]
    verdict: str

    def passed(self) -> bool:
        return all(v is True for v in self.filters.values())

    def to_line(self) -> str:
        parts = [
            f"beta={self.beta}",
            f"mu={self.mu}",
            f"k={_fmt(self.k)}",
            f"c2={_fmt(self.c2)}",
            f"c3={_fmt(self.c3)}",
            f"n={_fmt(self.n)}",
            f"thetas={','.join(_fmt(t) for t in self.thetas)}",
            "mults="
            + ("na" if self.mults is None else ",".join(_fmt(m) for m in self.mults)),
        ]
        for name in FILTER_NAMES:
            parts.append(f"{name}={_fmt_flag(self.filters[name])}")
        parts.append(f"verdict={self.verdict}")
        return " ".join(parts)

    @classmethod
    def from_line(cls, line: str) -> "CandidateRecord":
        kv = dict(item.split("=", 1) for item in line.split())
        return cls(
            beta=int(kv["beta"]),
            mu=int(kv["mu"]),
            k=Fraction(kv["k"]),
            c2=Fraction(kv["c2"]),
            c3=Fraction(kv["c3"]),
            n=None if kv["n"] == "na" else Fraction(kv["n"]),
            thetas=tuple(Fraction(t) for t in kv["thetas"].split(",")),
            mults=None
            if kv["mults"] == "na"
            else tuple(Fraction(m) for m in kv["mults"].split(",")),
            filters={name: _parse_flag(kv[name]) for name in FILTER_NAMES},
            verdict=kv["verdict"],
        )


def _fmt(x) -> str:
    if x is None:
        return "na"
    return str(x)


def _fmt_flag(v: Optional[bool]) -> str:
    return "na" if v is None else ("true" if v else "false")


def _parse_flag(s: str) -> Optional[bool]:
    return None if s == "na" else s == "true"


def _pos_int(x: Fraction) -> bool:
    return x.denominator == 1 and x > 0


def evaluate_candidate(beta: int, mu: int) -> CandidateRecord:
    """Pure per-cell evaluation; see FILTER_NAMES for the filter order."""
    p = d3_family(beta, mu)
    k, c2, c3 = p.k, p.c2, p.c3
    thetas = p.thetas
    f: Dict[str, Optional[bool]] = {name: None for name in FILTER_NAMES}

    f["k_positive_integral"] = _pos_int(k)
    f["c2_positive_integral"] = _pos_int(c2)
    f["c3_positive_integral"] = _pos_int(c3)
    f["a3_positive"] = k - c3 > 0
    b_seq = (k, k - 1, k - mu)
    c_seq = (Fraction(1), c2, c3)
    f["monotone"] = all(
        b_seq[i] >= b_seq[i + 1] for i in range(2)
    ) and all(c_seq[i] <= c_seq[i + 1] for i in range(2))

    # restrictions computable from the formula eigenvalues alone
    gaps = [
        (c2 - 1) * t * t - (k - c2) * (k - 2) for t in thetas[1:]
    ]
    f["curtin_nonzero"] = all(g != 0 for g in gaps)
    f["theta1_negative"] = thetas[1] < 0
    f["beta_condition"] = beta * beta + beta - 1 - beta * mu > 0

    n: Optional[Fraction] = None
    mults: Optional[Tuple[Fraction, ...]] = None
    structural_ok = all(
        f[name]
        for name in (
            "k_positive_integral",
            "c2_positive_integral",
            "c3_positive_integral",
            "a3_positive",
            "monotone",
        )
    )
    arr: Optional[IntersectionArray] = None
    if structural_ok:
        arr = p.array()
        n = arr.n
        f["n_integral"] = n.denominator == 1
        try:
            sd = spectrum(arr)
        except RepeatedEigenvalueError:
            f["mults_positive_integral"] = False
            f["krein_nonnegative"] = False
            f["eigenvalues_integral"] = False
        else:
            mf = sd.mult_fractions()
            if all(m is not None for m in mf):
                mults = tuple(mf)
            f["mults_positive_integral"] = sd.mults_are_positive_integers()
            f["krein_nonnegative"] = sd.krein_nonnegative()
            f["eigenvalues_integral"] = all(
                (r := e.as_rational()) is not None and r.denominator == 1
                for e in sd.eigenvalues
            )

    if all(f[name] is True for name in FILTER_NAMES):
        verdict = classify(arr).describe()
    else:
        verdict = "rejected"
    return CandidateRecord(
        beta=beta,
        mu=mu,
        k=k,
        c2=c2,
        c3=c3,
        n=n,
        thetas=tuple(thetas),
        mults=mults,
        filters=f,
        verdict=verdict,
    )


def _cell(args: Tuple[int, int]) -> CandidateRecord:
    return evaluate_candidate(*args)


def sieve(
    beta_min: int, beta_max: int, mu_max: int, wide: bool = False
) -> List[CandidateRecord]:
    """Evaluate every integer cell of [beta_min, beta_max] x [1, mu_max]
    in (beta, mu)-lexicographic order.

    Without wide=True the beta range must lie strictly below -2 (the only
    regime where an unknown graph could hide); wide mode admits any
    integer range, useful for demonstrating why other beta fail."""
    if beta_min > beta_max or mu_max < 1:
        raise ValueError("empty sieve range")
    if not wide and beta_max >= -2:
        raise ValueError(
            "beta range must be below -2; pass wide=True to scan other beta"
        )
    grid = [(b, m) for b in range(beta_min, beta_max + 1) for m in range(1, mu_max + 1)]
    workers = int(os.environ.get("DRG_SPECTRA_THREADS", "1"))
    if workers > 1 and len(grid) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(_cell, grid, chunksize=16))
    return [evaluate_candidate(b, m) for b, m in grid]


def write_records(records: Iterable[CandidateRecord], path: str) -> None:
    with open(path, "w") as fh:
        for rec in records:
            fh.write(rec.to_line() + "\n")
