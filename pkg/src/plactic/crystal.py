"""Crystal operators on words and tableaux, and the crystal graph of a shape.

The operators act on the letters i, i+1 of a word after bracketing every
factor (i+1, i) repeatedly; what is left is ``i^r (i+1)^s``.  On tableaux
they act on the row reading, followed by reinsertion.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cache
from typing import Sequence

from .tableaux import Partition, Tableau, Word, as_partition, enumerate_tableaux, insert, yamanouchi_tableau


def reduced_positions(i: int, w: Sequence[int]) -> tuple[list[int], list[int]]:
    """Positions of the unbracketed ``i`` letters and ``i+1`` letters of ``w``."""
    ones: list[int] = []
    pending: list[int] = []
    for pos, x in enumerate(w):
        if x == i + 1:
            pending.append(pos)
        elif x == i:
            if pending:
                pending.pop()
            else:
                ones.append(pos)
    return ones, pending


def _replace(w: Sequence[int], changes: dict[int, int]) -> Word:
    out = list(w)
    for pos, x in changes.items():
        out[pos] = x
    return tuple(out)


def eps_word(i: int, w: Sequence[int]) -> Word | None:
    _, twos = reduced_positions(i, w)
    if not twos:
        return None
    return _replace(w, {twos[0]: i})


def phi_word(i: int, w: Sequence[int]) -> Word | None:
    ones, _ = reduced_positions(i, w)
    if not ones:
        return None
    return _replace(w, {ones[-1]: i + 1})


def sigma_word(i: int, w: Sequence[int]) -> Word:
    ones, twos = reduced_positions(i, w)
    s = len(twos)
    positions = ones + twos
    return _replace(w, {p: (i if k < s else i + 1) for k, p in enumerate(positions)})


def omega2_word(w: Sequence[int], rank: int) -> Word:
    return tuple(rank + 2 - x for x in reversed(w))


@cache
def _lift(op: str, i: int, t: Tableau) -> Tableau | None:
    w = {"eps": eps_word, "phi": phi_word, "sigma": sigma_word}[op](i, t.reading)
    return None if w is None else insert(w, t.rank)


def _check_color(i: int, rank: int) -> None:
    if not 1 <= i <= rank:
        raise ValueError(f"colour {i} outside 1..{rank}")


def eps(i: int, t):
    """Raising operator.  Accepts a word or a tableau; returns None for 0."""
    if isinstance(t, Tableau):
        _check_color(i, t.rank)
        return _lift("eps", i, t)
    return eps_word(i, t)


def phi(i: int, t):
    if isinstance(t, Tableau):
        _check_color(i, t.rank)
        return _lift("phi", i, t)
    return phi_word(i, t)


def sigma(i: int, t):
    if isinstance(t, Tableau):
        _check_color(i, t.rank)
        return _lift("sigma", i, t)
    return sigma_word(i, t)


def omega2(t, rank: int | None = None):
    """The anti-automorphism a_i -> a_{n+2-i} (reverses the word)."""
    if isinstance(t, Tableau):
        return insert(omega2_word(t.reading, t.rank), t.rank)
    if rank is None:
        raise ValueError("rank is required for words")
    return omega2_word(t, rank)


def string_position(i: int, t: Tableau) -> tuple[int, int]:
    """``(e, f)``: how many times eps_i, resp. phi_i, can be applied to t."""
    ones, twos = reduced_positions(i, t.reading)
    return len(twos), len(ones)


@cache
def string_exponents(t: Tableau) -> tuple[int, ...]:
    """Distance to the nearer end of the colour-i string, for i = 1..n."""
    out = []
    for i in range(1, t.rank + 1):
        e, f = string_position(i, t)
        out.append(min(e, f))
    return tuple(out)


def raising_exponents(t: Tableau) -> tuple[int, ...]:
    """Largest s with eps_i^s(t) != 0, for each i.

    Agrees with :func:`string_exponents` when the weight of t is rectangular.
    """
    return tuple(string_position(i, t)[0] for i in range(1, t.rank + 1))


def d_stat(t: Tableau) -> int:
    return sum(i * d for i, d in enumerate(string_exponents(t), start=1))


def dprime_stat(t: Tableau) -> int:
    n = t.rank
    return sum((n - i + 1) * d for i, d in enumerate(string_exponents(t), start=1))


@dataclass
class CrystalGraph:
    shape: Partition
    rank: int
    vertices: list[Tableau]
    edges: list[tuple[int, int, int]]

    def __post_init__(self):
        self.index = {t: k for k, t in enumerate(self.vertices)}

    def __len__(self) -> int:
        return len(self.vertices)

    def colors(self) -> set[int]:
        return {c for _, c, _ in self.edges}

    def vertices_of_weight(self, weight: Sequence[int]) -> list[Tableau]:
        weight = tuple(weight) + (0,) * (self.rank + 1 - len(weight))
        return [t for t in self.vertices if t.weight == weight]

    def successor(self, k: int, color: int) -> int | None:
        for s, c, t in self.edges:
            if s == k and c == color:
                return t
        return None

    def is_connected(self) -> bool:
        if not self.vertices:
            return True
        adj: dict[int, set[int]] = {k: set() for k in range(len(self.vertices))}
        for s, _, t in self.edges:
            adj[s].add(t)
            adj[t].add(s)
        seen = {0}
        todo = [0]
        while todo:
            k = todo.pop()
            for m in adj[k] - seen:
                seen.add(m)
                todo.append(m)
        return len(seen) == len(self.vertices)

    def to_json(self) -> dict:
        return {
            "shape": list(self.shape),
            "rank": self.rank,
            "vertices": [t.to_json() for t in self.vertices],
            "edges": [list(e) for e in self.edges],
        }

    def to_dot(self, name: str = "crystal") -> str:
        lines = [f"digraph {name} {{"]
        for k, t in enumerate(self.vertices):
            label = "".join(map(str, t.reading)) if t.rank < 9 else ",".join(map(str, t.reading))
            lines.append(f'  v{k} [label="{label}"];')
        for s, c, t in self.edges:
            lines.append(f'  v{s} -> v{t} [colorscheme=set19, color={(c - 1) % 9 + 1}, label="{c}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def crystal_graph(shape: Sequence[int], rank: int) -> CrystalGraph:
    """Breadth-first closure of the Yamanouchi tableau under phi_1..phi_n."""
    shape = as_partition(shape)
    start = yamanouchi_tableau(shape, rank)
    order = [start]
    seen = {start: 0}
    queue = deque([start])
    edges = []
    while queue:
        t = queue.popleft()
        for i in range(1, rank + 1):
            u = phi(i, t)
            if u is None:
                continue
            if u not in seen:
                seen[u] = len(order)
                order.append(u)
                queue.append(u)
            edges.append((seen[t], i, seen[u]))
    edges.sort()
    return CrystalGraph(shape, rank, order, edges)


def crystal_vertices(shape: Sequence[int], rank: int) -> list[Tableau]:
    """The vertex set of the crystal graph, in sorted order."""
    return enumerate_tableaux(shape, None, rank)
