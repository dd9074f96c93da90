"""Concrete simple undirected graphs with sorted adjacency lists and the
edge-list text format (line 1 "n m", then m lines "u v", 0-indexed)."""

from __future__ import annotations

from array import array
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple


@dataclass(frozen=True)
class Graph:
    n: int
    adjacency: Tuple[Tuple[int, ...], ...]
    labels: Optional[Tuple[str, ...]] = None

    def __post_init__(self):
        if self.n != len(self.adjacency):
            raise ValueError("adjacency length does not match n")
        if self.labels is not None and len(self.labels) != self.n:
            raise ValueError("labels length does not match n")
        seen = set()
        for u, nbrs in enumerate(self.adjacency):
            for v in nbrs:
                if v == u:
                    raise ValueError(f"loop at vertex {u}")
                if not 0 <= v < self.n:
                    raise ValueError(f"neighbor {v} of {u} out of range")
                seen.add((u, v))
        for u, v in list(seen):
            if (v, u) not in seen:
                raise ValueError(f"asymmetric edge ({u}, {v})")

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[Tuple[int, int]],
        labels: Optional[Sequence[str]] = None,
    ) -> "Graph":
        adj: List[set] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            adj[u].add(v)
            adj[v].add(u)
        return cls(
            n,
            tuple(tuple(sorted(s)) for s in adj),
            tuple(labels) if labels is not None else None,
        )

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def edges(self) -> List[Tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]

    def degrees(self) -> List[int]:
        return [len(a) for a in self.adjacency]

    def is_regular(self) -> Optional[int]:
        degs = set(self.degrees())
        return degs.pop() if len(degs) == 1 else None

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = bytearray(self.n)
        stack = [0]
        seen[0] = 1
        count = 1
        while stack:
            u = stack.pop()
            for v in self.adjacency[u]:
                if not seen[v]:
                    seen[v] = 1
                    count += 1
                    stack.append(v)
        return count == self.n

    def is_bipartite(self) -> bool:
        color = [-1] * self.n
        for start in range(self.n):
            if color[start] != -1:
                continue
            color[start] = 0
            stack = [start]
            while stack:
                u = stack.pop()
                for v in self.adjacency[u]:
                    if color[v] == -1:
                        color[v] = 1 - color[u]
                        stack.append(v)
                    elif color[v] == color[u]:
                        return False
        return True

    def csr(self) -> Tuple[array, array]:
        """Flat CSR arrays (offsets, neighbors) for the distance kernels."""
        offsets = array("i", [0] * (self.n + 1))
        neighbors = array("i")
        for u in range(self.n):
            neighbors.extend(self.adjacency[u])
            offsets[u + 1] = len(neighbors)
        return offsets, neighbors

    # -- edge-list text format -------------------------------------------

    def to_edge_list(self) -> str:
        lines = [f"{self.n} {self.m}"]
        lines.extend(f"{u} {v}" for u, v in self.edges())
        return "\n".join(lines) + "\n"

    @classmethod
    def from_edge_list(cls, text: str, labels_text: Optional[str] = None) -> "Graph":
        tokens = text.split()
        if len(tokens) < 2:
            raise ValueError("edge list must start with 'n m'")
        n, m = int(tokens[0]), int(tokens[1])
        nums = tokens[2:]
        if len(nums) != 2 * m:
            raise ValueError(f"expected {2 * m} endpoints, found {len(nums)}")
        edges = [(int(nums[2 * i]), int(nums[2 * i + 1])) for i in range(m)]
        labels = labels_text.splitlines() if labels_text is not None else None
        return cls.from_edges(n, edges, labels)

    def write(self, path, labels_path=None) -> None:
        with open(path, "w") as fh:
            fh.write(self.to_edge_list())
        if labels_path is not None and self.labels is not None:
            with open(labels_path, "w") as fh:
                fh.write("\n".join(self.labels) + "\n")

    @classmethod
    def read(cls, path, labels_path=None) -> "Graph":
        with open(path) as fh:
            text = fh.read()
        labels_text = None
        if labels_path is not None:
            with open(labels_path) as fh:
                labels_text = fh.read()
        return cls.from_edge_list(text, labels_text)
