"""Intersection arrays {b0,...,b_{D-1}; c1,...,cD} and their derived data."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Tuple


@dataclass(frozen=True)
class IntersectionArray:
    """The array {b0,...,b_{D-1}; c1,...,cD} of a distance-regular graph.

    Derived quantities (a_i, valency k, subconstituent sizes k_i, vertex
    count n) are computed eagerly; k_i and n are exact rationals since a
    formal array need not have integral ones.
    """

    b: Tuple[int, ...]
    c: Tuple[int, ...]

    def __post_init__(self):
        if len(self.b) != len(self.c):
            raise ValueError("b and c sequences must have equal length D")
        if not self.b:
            raise ValueError("diameter must be at least 1")

    @property
    def D(self) -> int:
        return len(self.b)

    @property
    def k(self) -> int:
        return self.b[0]

    def b_at(self, i: int) -> int:
        """b_i with the convention b_D = 0."""
        return self.b[i] if i < self.D else 0

    def c_at(self, i: int) -> int:
        """c_i with the convention c_0 = 0."""
        return self.c[i - 1] if i >= 1 else 0

    @property
    def a(self) -> Tuple[int, ...]:
        return tuple(self.k - self.b_at(i) - self.c_at(i) for i in range(self.D + 1))

    @property
    def k_sizes(self) -> Tuple[Fraction, ...]:
        ks = [Fraction(1)]
        for i in range(1, self.D + 1):
            ks.append(ks[-1] * self.b[i - 1] / self.c[i - 1])
        return tuple(ks)

    @property
    def n(self) -> Fraction:
        return sum(self.k_sizes, Fraction(0))

    def feasibility_issues(self) -> List[str]:
        """Violations of the standard basic feasibility conditions."""
        issues = []
        if self.c[0] != 1:
            issues.append(f"c1 = {self.c[0]} != 1")
        for i, bi in enumerate(self.b):
            if bi < 1:
                issues.append(f"b{i} = {bi} < 1")
        for i, ci in enumerate(self.c, start=1):
            if ci < 1:
                issues.append(f"c{i} = {ci} < 1")
        for i, ai in enumerate(self.a):
            if ai < 0:
                issues.append(f"a{i} = {ai} < 0")
        for i in range(1, self.D):
            if self.c[i - 1] > self.c[i]:
                issues.append(f"c{i} > c{i + 1}")
            if self.b[i - 1] < self.b[i]:
                issues.append(f"b{i - 1} < b{i}")
        return issues

    def is_feasible(self) -> bool:
        return not self.feasibility_issues()

    def require_feasible(self) -> "IntersectionArray":
        issues = self.feasibility_issues()
        if issues:
            raise ValueError("infeasible intersection array: " + "; ".join(issues))
        return self

    def is_almost_bipartite(self) -> bool:
        a = self.a
        return all(ai == 0 for ai in a[:-1]) and a[-1] != 0

    # -- text format: {b0,b1,...;c1,c2,...} -----------------------------

    @classmethod
    def parse(cls, text: str) -> "IntersectionArray":
        m = re.fullmatch(r"\s*\{([^;{}]*);([^;{}]*)\}\s*", text)
        if not m:
            raise ValueError(f"cannot parse intersection array: {text!r}")
        try:
            b = tuple(int(t) for t in m.group(1).replace(" ", "").split(","))
            c = tuple(int(t) for t in m.group(2).replace(" ", "").split(","))
        except ValueError as exc:
            raise ValueError(f"cannot parse intersection array: {text!r}") from exc
        return cls(b, c)

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.b)) + ";" + ",".join(map(str, self.c)) + "}"
