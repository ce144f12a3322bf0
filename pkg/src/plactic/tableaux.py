"""Partitions, words and semistandard tableaux over the alphabet 1..n+1.

Tableaux use the French convention: ``rows[0]`` is the bottom (longest)
row, rows weakly increase to the right and columns strictly increase
upwards.  The row reading of a tableau reads the top row first.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cache, cached_property
from itertools import permutations
from typing import Iterable, Iterator, Sequence

Partition = tuple[int, ...]
Word = tuple[int, ...]


def as_partition(parts: Iterable[int]) -> Partition:
    """Validate ``parts`` as a weakly decreasing sequence and drop trailing zeros."""
    p = tuple(int(x) for x in parts)
    if any(x < 0 for x in p):
        raise ValueError(f"negative part in {p}")
    if any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise ValueError(f"{p} is not weakly decreasing")
    while p and p[-1] == 0:
        p = p[:-1]
    return p


def is_partition(parts: Sequence[int]) -> bool:
    return all(x >= 0 for x in parts) and all(
        parts[i] >= parts[i + 1] for i in range(len(parts) - 1)
    )


def conjugate(shape: Sequence[int]) -> Partition:
    shape = as_partition(shape)
    if not shape:
        return ()
    return tuple(sum(1 for p in shape if p > j) for j in range(shape[0]))


def partition_norm(mu: Sequence[int]) -> int:
    """``sum((i-1) * mu_i)``, the largest cocharge on tableaux of weight mu."""
    return sum(i * m for i, m in enumerate(mu))


def dominates(lam: Sequence[int], mu: Sequence[int]) -> bool:
    if sum(lam) != sum(mu):
        return False
    a = b = 0
    for i in range(max(len(lam), len(mu))):
        a += lam[i] if i < len(lam) else 0
        b += mu[i] if i < len(mu) else 0
        if a < b:
            return False
    return True


@cache
def partitions(size: int, max_length: int | None = None, max_part: int | None = None) -> tuple[Partition, ...]:
    """All partitions of ``size`` in reverse lexicographic order."""
    if max_part is None:
        max_part = size
    if size == 0:
        return ((),)
    if max_length == 0:
        return ()
    out = []
    for first in range(min(size, max_part), 0, -1):
        rest_len = None if max_length is None else max_length - 1
        for rest in partitions(size - first, rest_len, first):
            out.append((first,) + rest)
    return tuple(out)


def distinct_permutations(parts: Sequence[int]) -> list[tuple[int, ...]]:
    return sorted(set(permutations(parts)))


def descent_set(composition: Sequence[int]) -> tuple[int, ...]:
    """Partial sums of a composition, excluding the total."""
    out, s = [], 0
    for part in composition[:-1]:
        s += part
        out.append(s)
    return tuple(out)


def parse_word(text: str | Sequence[int]) -> Word:
    """Accept ``"211"``, ``"2,1,1"`` or a sequence of ints."""
    if not isinstance(text, str):
        return tuple(int(x) for x in text)
    text = text.strip()
    if not text:
        return ()
    if "," in text:
        return tuple(int(x) for x in text.split(","))
    return tuple(int(ch) for ch in text)


@dataclass(frozen=True, order=True)
class Tableau:
    rows: tuple[tuple[int, ...], ...]
    rank: int = field(compare=True)

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows if len(r))
        object.__setattr__(self, "rows", rows)

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]], rank: int | None = None) -> "Tableau":
        """Build and validate.  ``rank`` defaults to (largest letter - 1)."""
        rows = tuple(tuple(int(x) for x in r) for r in rows)
        if rank is None:
            rank = max((max(r) for r in rows if r), default=1) - 1
            rank = max(rank, 1)
        t = cls(rows, rank)
        t.validate()
        return t

    @classmethod
    def empty(cls, rank: int) -> "Tableau":
        return cls((), rank)

    def validate(self) -> None:
        rows = self.rows
        if self.rank < 1:
            raise ValueError("rank must be >= 1")
        for r in rows:
            for x in r:
                if not 1 <= x <= self.rank + 1:
                    raise ValueError(f"letter {x} outside 1..{self.rank + 1}")
            if any(r[j] > r[j + 1] for j in range(len(r) - 1)):
                raise ValueError(f"row {r} is not weakly increasing")
        for k in range(len(rows) - 1):
            if len(rows[k + 1]) > len(rows[k]):
                raise ValueError("row lengths do not form a partition")
            for j, x in enumerate(rows[k + 1]):
                if x <= rows[k][j]:
                    raise ValueError(f"column {j} is not strictly increasing")

    @cached_property
    def shape(self) -> Partition:
        return tuple(len(r) for r in self.rows)

    @cached_property
    def weight(self) -> tuple[int, ...]:
        w = [0] * (self.rank + 1)
        for r in self.rows:
            for x in r:
                w[x - 1] += 1
        return tuple(w)

    @property
    def size(self) -> int:
        return sum(self.shape)

    @cached_property
    def reading(self) -> Word:
        """Row reading: top row first, each row left to right."""
        return tuple(x for r in reversed(self.rows) for x in r)

    def column_reading(self) -> Word:
        """Columns left to right, each read top to bottom."""
        out = []
        for j in range(self.shape[0] if self.rows else 0):
            col = [r[j] for r in self.rows if len(r) > j]
            out.extend(reversed(col))
        return tuple(out)

    def columns(self) -> list[tuple[int, ...]]:
        """Columns left to right, each listed bottom to top."""
        if not self.rows:
            return []
        return [tuple(r[j] for r in self.rows if len(r) > j) for j in range(len(self.rows[0]))]

    @property
    def first_letter(self) -> int | None:
        return self.rows[-1][0] if self.rows else None

    def is_row(self) -> bool:
        return len(self.rows) <= 1

    def to_json(self) -> dict:
        return {"rows": [list(r) for r in self.rows], "rank": self.rank}

    @classmethod
    def from_json(cls, data: dict) -> "Tableau":
        return cls.from_rows(data["rows"], data["rank"])

    def __str__(self) -> str:
        return "/".join("".join(map(str, r)) if self.rank < 9 else ",".join(map(str, r)) for r in self.rows) or "()"

    def pretty(self) -> str:
        """Multi-line French picture, top row printed first."""
        return "\n".join(" ".join(f"{x:>2}" for x in r) for r in reversed(self.rows))


def _row_insert(rows: list[list[int]], x: int) -> tuple[int, int]:
    """Insert ``x`` into ``rows`` in place; return the cell that was added."""
    for i, row in enumerate(rows):
        # leftmost entry strictly greater than x
        lo, hi = 0, len(row)
        while lo < hi:
            mid = (lo + hi) // 2
            if row[mid] > x:
                hi = mid
            else:
                lo = mid + 1
        if lo == len(row):
            row.append(x)
            return i, lo
        row[lo], x = x, row[lo]
    rows.append([x])
    return len(rows) - 1, 0


@cache
def _insert_word(w: Word) -> tuple[tuple[int, ...], ...]:
    rows: list[list[int]] = []
    for x in w:
        _row_insert(rows, x)
    return tuple(tuple(r) for r in rows)


def insert(w: Sequence[int], rank: int) -> Tableau:
    """P-tableau of ``w``."""
    return Tableau(_insert_word(tuple(w)), rank)


def schensted(w: Sequence[int], rank: int) -> tuple[Tableau, Tableau]:
    """Robinson-Schensted row insertion, returning ``(P, Q)``.

    Q is standard on 1..len(w); its rank is chosen so that it validates.
    """
    rows: list[list[int]] = []
    rec: list[list[int]] = []
    for step, x in enumerate(w, start=1):
        i, j = _row_insert(rows, x)
        if i == len(rec):
            rec.append([])
        rec[i].append(step)
    P = Tableau(tuple(map(tuple, rows)), rank)
    Q = Tableau(tuple(map(tuple, rec)), max(len(w) - 1, 1))
    return P, Q


def row_reading(t: Tableau) -> Word:
    return t.reading


def knuth_equivalent(w1: Sequence[int], w2: Sequence[int]) -> bool:
    return _insert_word(tuple(w1)) == _insert_word(tuple(w2))


def plactic_product(*tableaux: Tableau) -> Tableau:
    if not tableaux:
        raise ValueError("need at least one tableau")
    rank = tableaux[0].rank
    if any(t.rank != rank for t in tableaux):
        raise ValueError("tableaux have different ranks")
    return insert(sum((t.reading for t in tableaux), ()), rank)


def yamanouchi_tableau(shape: Sequence[int], rank: int) -> Tableau:
    shape = as_partition(shape)
    if len(shape) > rank + 1:
        raise ValueError(f"shape {shape} has more than {rank + 1} rows")
    return Tableau(tuple((r + 1,) * p for r, p in enumerate(shape)), rank)


def row_tableau(mu: Sequence[int], rank: int) -> Tableau:
    """The single-row tableau a_1^{mu_1} a_2^{mu_2} ... ."""
    if not is_partition(mu):
        raise ValueError(f"{tuple(mu)} is not a partition")
    if len(as_partition(mu)) > rank + 1:
        raise ValueError(f"weight {tuple(mu)} needs more than {rank + 1} letters")
    return insert(tuple(i + 1 for i, m in enumerate(mu) for _ in range(m)), rank)


def column_tableau(height: int, rank: int) -> Tableau:
    """The column a_h ... a_2 a_1."""
    return Tableau(tuple((i,) for i in range(1, height + 1)), rank)


def is_yamanouchi(t: Tableau) -> bool:
    return as_partition(t.weight) == t.shape


def _strips(inner: Partition, outer: Partition, size: int | None, max_rows: int) -> Iterator[Partition]:
    """Partitions nu with inner <= nu <= outer, nu/inner a horizontal strip."""
    rows = max(len(outer), len(inner))
    inner_p = list(inner) + [0] * (rows - len(inner))
    outer_p = list(outer) + [0] * (rows - len(outer))
    rows = min(rows, max_rows)

    def rec(r: int, acc: list[int], left: int | None):
        if r == rows:
            if left in (None, 0):
                yield as_partition(acc)
            return
        hi = outer_p[r]
        if r > 0:
            hi = min(hi, inner_p[r - 1])
        for v in range(inner_p[r], hi + 1):
            used = v - inner_p[r]
            if left is not None and used > left:
                break
            acc.append(v)
            yield from rec(r + 1, acc, None if left is None else left - used)
            acc.pop()

    yield from rec(0, [], size)


def enumerate_tableaux(shape: Sequence[int], weight: Sequence[int] | None = None, rank: int | None = None) -> list[Tableau]:
    """All semistandard tableaux of ``shape`` (and ``weight`` if given), sorted."""
    shape = as_partition(shape)
    if rank is None:
        if weight is None:
            raise ValueError("rank is required when no weight is given")
        rank = len(weight) - 1
    if weight is not None:
        weight = tuple(weight)
        if len(weight) > rank + 1 and any(weight[rank + 1:]):
            return []
        weight = weight + (0,) * (rank + 1 - len(weight))
        if sum(weight) != sum(shape):
            return []
    return list(_enumerate(shape, weight, rank))


@cache
def _enumerate(shape: Partition, weight: tuple[int, ...] | None, rank: int) -> tuple[Tableau, ...]:
    if len(shape) > rank + 1:
        return ()
    out = []

    def rec(letter: int, inner: Partition, chain: list[Partition]):
        if letter == rank + 2:
            if inner == shape:
                out.append(_from_chain(chain, rank))
            return
        want = None if weight is None else weight[letter - 1]
        for nu in _strips(inner, shape, want, letter):
            # remaining letters can still fill the remaining rows
            if len(shape) - len(nu) > 0 and letter == rank + 1:
                continue
            chain.append(nu)
            rec(letter + 1, nu, chain)
            chain.pop()

    rec(1, (), [])
    return tuple(sorted(out))


def _from_chain(chain: list[Partition], rank: int) -> Tableau:
    rows: list[list[int]] = []
    prev: Partition = ()
    for letter, nu in enumerate(chain, start=1):
        for r, length in enumerate(nu):
            before = prev[r] if r < len(prev) else 0
            if r == len(rows):
                rows.append([])
            rows[r].extend([letter] * (length - before))
        prev = nu
    return Tableau(tuple(map(tuple, rows)), rank)


def kostka_number(shape: Sequence[int], weight: Sequence[int], rank: int | None = None) -> int:
    return len(enumerate_tableaux(shape, weight, rank))


def tableaux_of_weight(weight: Sequence[int], rank: int) -> list[Tableau]:
    """All tableaux (any shape) with the given weight, sorted by shape then rows."""
    weight = tuple(weight)
    size = sum(weight)
    out = []
    for lam in partitions(size, rank + 1):
        out.extend(enumerate_tableaux(lam, weight, rank))
    return out
