"""Bounded rewriting for the plactic congruence of type C_n.

Letters are nonzero integers: ``i`` is a_i and ``-i`` is the barred letter.
The integer order matches the alphabet order  -n < ... < -1 < 1 < ... < n,
and the bar involution is negation.
"""

from __future__ import annotations

from collections import deque
from itertools import combinations
from typing import Iterable, Literal, Sequence

from .diagnostics import NotDecreasing

SignedWord = tuple[int, ...]
Verdict = Literal["true", "false", "unknown"]


def parse_signed_word(text: str) -> SignedWord:
    text = text.strip()
    if not text:
        return ()
    return tuple(int(x) for x in text.split(","))


def validate(w: Sequence[int], rank: int) -> SignedWord:
    w = tuple(w)
    for x in w:
        if x == 0 or abs(x) > rank:
            raise ValueError(f"letter {x} outside +-1..{rank}")
    return w


def signed_weight(w: Sequence[int], rank: int) -> tuple[int, ...]:
    v = [0] * rank
    for x in w:
        v[abs(x) - 1] += 1 if x > 0 else -1
    return tuple(v)


def is_strictly_decreasing(w: Sequence[int]) -> bool:
    return all(w[p] > w[p + 1] for p in range(len(w) - 1))


def erasable_pairs(w: Sequence[int], rank: int) -> list[tuple[int, int]]:
    """Positions (p, q), 1-based, of pairs (a_i, bar a_i) with q - p < k + i - n."""
    k = len(w)
    where = {x: p for p, x in enumerate(w, start=1)}
    out = []
    for i in range(1, rank + 1):
        if i in where and -i in where:
            p, q = where[i], where[-i]
            if q - p < k + i - rank:
                out.append((p, q))
    return out


def sp4_erase(w: Sequence[int], rank: int) -> SignedWord:
    w = tuple(w)
    if not is_strictly_decreasing(w):
        raise NotDecreasing(f"{w} is not strictly decreasing")
    drop = {pos for pair in erasable_pairs(w, rank) for pos in pair}
    return tuple(x for p, x in enumerate(w, start=1) if p not in drop)


def _sp1_sp2_sp3(w: SignedWord, rank: int) -> Iterable[SignedWord]:
    m = len(w)
    for p in range(m - 2):
        a, b, c = w[p : p + 3]
        head, tail = w[:p], w[p + 3 :]
        # SP1, x < y < z, x != -z:  yxz <-> yzx  and  xzy <-> zxy
        if b < a < c and b != -c:  # y x z
            yield head + (a, c, b) + tail
        if c < a < b and c != -b:  # y z x
            yield head + (a, c, b) + tail
        if a < c < b and a != -b:  # x z y
            yield head + (b, a, c) + tail
        if b < c < a and b != -a:  # z x y
            yield head + (b, a, c) + tail
        # SP2, x < y, x != -y:  yxx <-> xyx  and  yyx <-> yxy
        if b == c and b < a and b != -a:  # y x x
            yield head + (b, a, b) + tail
        if a == c and a < b and a != -b:  # x y x
            yield head + (b, a, a) + tail
        if a == b and c < a and c != -a:  # y y x
            yield head + (a, c, a) + tail
        if a == c and b < a and b != -a:  # y x y
            yield head + (a, a, b) + tail
        # SP3, i <= n-1, |x| <= i:  a_i bar(a_i) x <-> bar(a_{i+1}) a_{i+1} x
        if a > 0 and b == -a and a <= rank - 1 and abs(c) <= a:
            yield head + (-(a + 1), a + 1, c) + tail
        if b > 1 and a == -b and abs(c) <= b - 1:
            yield head + (b - 1, -(b - 1), c) + tail
        # ... and x a_i bar(a_i) <-> x bar(a_{i+1}) a_{i+1}
        if b > 0 and c == -b and b <= rank - 1 and abs(a) <= b:
            yield head + (a, -(b + 1), b + 1) + tail
        if c > 1 and b == -c and abs(a) <= c - 1:
            yield head + (a, c - 1, -(c - 1)) + tail


def _sp4_inverse(w: SignedWord, rank: int, max_len: int) -> tuple[list[SignedWord], bool]:
    """Strictly decreasing words v with sp4_erase(v) = w and len(v) <= max_len.

    Also reports whether some candidate was cut off by the length bound.
    """
    present = {abs(x) for x in w}
    free = [i for i in range(1, rank + 1) if i not in present]
    out, truncated = [], False
    for size in range(1, len(free) + 1):
        for S in combinations(free, size):
            v = tuple(sorted(w + tuple(S) + tuple(-i for i in S), reverse=True))
            if sp4_erase(v, rank) != w:
                continue
            if len(v) > max_len:
                truncated = True
            else:
                out.append(v)
    return out, truncated


def _neighbors(w: SignedWord, rank: int, max_len: int) -> tuple[set[SignedWord], bool]:
    out = set(_sp1_sp2_sp3(w, rank))
    truncated = False
    if is_strictly_decreasing(w):
        hat = sp4_erase(w, rank)
        if hat != w:
            out.add(hat)
        grown, truncated = _sp4_inverse(w, rank, max_len)
        out.update(grown)
    out.discard(w)
    return out, truncated


def sp_neighbors(w: Sequence[int], rank: int, max_len: int | None = None) -> set[SignedWord]:
    """Words one relation step away from w (in either direction)."""
    w = validate(w, rank)
    if max_len is None:
        max_len = len(w) + 2 * rank
    return _neighbors(w, rank, max_len)[0]


class _Search:
    def __init__(self, start: SignedWord, rank: int, max_len: int):
        self.rank, self.max_len = rank, max_len
        self.seen = {start}
        self.frontier = deque([start])
        self.bounded = False

    def step(self) -> set[SignedWord]:
        w = self.frontier.popleft()
        new, truncated = _neighbors(w, self.rank, self.max_len)
        self.bounded |= truncated
        fresh = {v for v in new if v not in self.seen}
        self.seen |= fresh
        self.frontier.extend(sorted(fresh))
        return fresh


def closure(w: Sequence[int], rank: int, max_len: int = 8, max_states: int = 50_000) -> tuple[set[SignedWord], bool]:
    """Congruence class of w explored within the bounds; flag is True if complete."""
    s = _Search(validate(w, rank), rank, max_len)
    while s.frontier:
        if len(s.seen) >= max_states:
            return s.seen, False
        s.step()
    return s.seen, not s.bounded


def congruent(w1: Sequence[int], w2: Sequence[int], rank: int, max_len: int = 8, max_states: int = 50_000) -> Verdict:
    w1, w2 = validate(w1, rank), validate(w2, rank)
    if signed_weight(w1, rank) != signed_weight(w2, rank):
        return "false"
    if w1 == w2:
        return "true"
    a = _Search(w1, rank, max_len)
    b = _Search(w2, rank, max_len)
    while a.frontier or b.frontier:
        if len(a.seen) + len(b.seen) >= max_states:
            return "unknown"
        # expand the smaller live side first
        side, other = (a, b) if (a.frontier and (len(a.seen) <= len(b.seen) or not b.frontier)) else (b, a)
        if side.step() & other.seen:
            return "true"
    if a.bounded or b.bounded:
        return "unknown"
    return "false"
