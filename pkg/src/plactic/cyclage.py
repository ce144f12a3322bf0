"""Cyclage, cocharge and charge.

A cyclage sends ``t = a_x . u`` (plactic product, x >= 2) to ``u . a_x``.
The initial cyclage cycles the first letter of the row reading.  Cocharge
is the number of initial cyclages needed to reach the single-row tableau.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cache
from typing import Sequence

from .crystal import sigma
from .diagnostics import RowTableau
from .tableaux import (
    Tableau,
    as_partition,
    insert,
    is_partition,
    partition_norm,
    row_tableau,
    tableaux_of_weight,
)


@cache
def initial_cyclage(t: Tableau) -> Tableau:
    if t.is_row():
        raise RowTableau(f"{t} is a single row")
    w = t.reading
    return insert(w[1:] + w[:1], t.rank)


@cache
def cyclages(t: Tableau) -> tuple[tuple[int, Tableau], ...]:
    """All ``(x, t')`` with t = a_x . u and t' = u . a_x, x >= 2.

    Brute force over every tableau u of weight ``weight(t) - e_x``.
    """
    out = []
    for x in range(2, t.rank + 2):
        if t.weight[x - 1] == 0:
            continue
        w = list(t.weight)
        w[x - 1] -= 1
        for u in tableaux_of_weight(w, t.rank):
            if insert((x,) + u.reading, t.rank) == t:
                out.append((x, insert(u.reading + (x,), t.rank)))
    return tuple(sorted(set(out)))


def _require_partition_weight(t: Tableau) -> None:
    if not is_partition(t.weight):
        raise ValueError(f"weight {t.weight} is not a partition; use charge_any_weight")


@cache
def cocharge(t: Tableau) -> int:
    _require_partition_weight(t)
    steps = 0
    while not t.is_row():
        t = initial_cyclage(t)
        steps += 1
    return steps


def charge(t: Tableau) -> int:
    return partition_norm(t.weight) - cocharge(t)


def sort_weight(t: Tableau) -> Tableau:
    """Apply sigma_i (bubble-sort order) until the weight is a partition."""
    changed = True
    while changed:
        changed = False
        for i in range(1, t.rank + 1):
            w = t.weight
            if w[i - 1] < w[i]:
                t = sigma(i, t)
                changed = True
    return t


def charge_any_weight(t: Tableau) -> int:
    return charge(sort_weight(t))


@dataclass
class CyclageGraph:
    weight: tuple[int, ...]
    rank: int
    vertices: list[Tableau]
    edges: list[tuple[int, int, int]]
    cocharges: list[int]

    def __post_init__(self):
        self.index = {t: k for k, t in enumerate(self.vertices)}

    @property
    def levels(self) -> set[int]:
        return set(self.cocharges)

    def tree_edges(self) -> list[tuple[int, int, int]]:
        """Edges that are initial cyclages; together they form the tree rooted at the row tableau."""
        out = []
        for s, c, t in self.edges:
            v = self.vertices[s]
            if v.first_letter == c and initial_cyclage(v) == self.vertices[t]:
                out.append((s, c, t))
        return out

    def sinks(self) -> list[int]:
        has_out = {s for s, _, _ in self.edges}
        return [k for k in range(len(self.vertices)) if k not in has_out]

    def to_json(self, tree: bool = False) -> dict:
        edges = self.tree_edges() if tree else self.edges
        return {
            "weight": list(self.weight),
            "rank": self.rank,
            "vertices": [
                dict(t.to_json(), cocharge=c) for t, c in zip(self.vertices, self.cocharges)
            ],
            "edges": [list(e) for e in edges],
        }

    def to_dot(self, tree: bool = False, name: str = "cyclage") -> str:
        edges = self.tree_edges() if tree else self.edges
        lines = [f"digraph {name} {{", "  rankdir=TB;"]
        by_level: dict[int, list[int]] = {}
        for k, c in enumerate(self.cocharges):
            by_level.setdefault(c, []).append(k)
        for level in sorted(by_level, reverse=True):
            ids = "; ".join(f"v{k}" for k in by_level[level])
            lines.append(f"  {{ rank=same; {ids}; }}")
        for k, t in enumerate(self.vertices):
            label = "/".join("".join(map(str, r)) for r in t.rows)
            lines.append(f'  v{k} [label="{label}", cocharge={self.cocharges[k]}];')
        for s, c, t in edges:
            lines.append(f'  v{s} -> v{t} [label="{c}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def cyclage_graph(mu: Sequence[int], rank: int) -> CyclageGraph:
    """All tableaux of weight ``mu`` with every cyclage arrow."""
    mu = tuple(mu) + (0,) * (rank + 1 - len(mu))
    if not is_partition(mu):
        raise ValueError(f"{mu} is not a partition")
    vertices = tableaux_of_weight(mu, rank)
    index = {t: k for k, t in enumerate(vertices)}
    edges = []
    for k, t in enumerate(vertices):
        for x, u in cyclages(t):
            edges.append((k, x, index[u]))
    edges.sort()
    return CyclageGraph(mu, rank, vertices, edges, [cocharge(t) for t in vertices])


def cyclage_tree(mu: Sequence[int], rank: int) -> CyclageGraph:
    g = cyclage_graph(mu, rank)
    return CyclageGraph(g.weight, g.rank, g.vertices, g.tree_edges(), g.cocharges)


def tree_spans(g: CyclageGraph) -> bool:
    """Every vertex reaches the row tableau along initial cyclages only."""
    root = g.index[row_tableau(as_partition(g.weight), g.rank)]
    children: dict[int, list[int]] = {}
    for s, _, t in g.tree_edges():
        children.setdefault(t, []).append(s)
    seen = {root}
    todo = deque([root])
    while todo:
        k = todo.popleft()
        for m in children.get(k, []):
            if m not in seen:
                seen.add(m)
                todo.append(m)
    return len(seen) == len(g.vertices)
