"""The action of S_{n+1} on tableaux through the reflections sigma_i."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from typing import Iterable, Sequence

from .crystal import d_stat, dprime_stat, sigma, string_exponents
from .diagnostics import CheckResult, NonIntegerMean
from .tableaux import Tableau, enumerate_tableaux, is_partition

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class Orbit:
    members: tuple[Tableau, ...]

    @property
    def representative(self) -> Tableau:
        dominant = [t for t in self.members if is_partition(t.weight)]
        return min(dominant, key=lambda t: t.reading)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, t: Tableau) -> bool:
        return t in self.members

    def to_json(self) -> dict:
        rep = self.representative
        return {
            "representative": rep.to_json(),
            "members": [t.to_json() for t in self.members],
            "b": mean_b(rep),
            "b_prime": mean_bprime(rep),
        }


@cache
def _orbit_members(t: Tableau) -> tuple[Tableau, ...]:
    seen = {t}
    todo = [t]
    while todo:
        u = todo.pop()
        for i in range(1, u.rank + 1):
            v = sigma(i, u)
            if v not in seen:
                seen.add(v)
                todo.append(v)
    return tuple(sorted(seen, key=lambda u: (tuple(-x for x in u.weight), u.reading)))


def orbit(t: Tableau) -> Orbit:
    return Orbit(_orbit_members(t))


def orbits_of_shape(shape: Sequence[int], rank: int) -> list[Orbit]:
    seen: set[Tableau] = set()
    out = []
    for t in enumerate_tableaux(shape, None, rank):
        if t in seen:
            continue
        o = orbit(t)
        seen.update(o.members)
        out.append(o)
    return out


def fixed_points(shape: Sequence[int], rank: int) -> list[Tableau]:
    return [
        t
        for t in enumerate_tableaux(shape, None, rank)
        if all(sigma(i, t) == t for i in range(1, rank + 1))
    ]


def _integer_mean(values: Iterable[int], what: str) -> int:
    values = list(values)
    m = Fraction(sum(values), len(values))
    if m.denominator != 1:
        raise NonIntegerMean(f"mean of {what} over an orbit is {m}")
    return int(m)


def mean_b(t: Tableau) -> int:
    """Arithmetic mean of d over the orbit of t."""
    return _integer_mean((d_stat(u) for u in _orbit_members(t)), "d")


def mean_bprime(t: Tableau) -> int:
    return _integer_mean((dprime_stat(u) for u in _orbit_members(t)), "d'")


def _compose(word: Sequence[int], t: Tableau) -> Tableau:
    for i in reversed(word):
        t = sigma(i, t)
    return t


def moore_coxeter_check(shape: Sequence[int], rank: int) -> CheckResult:
    """Check the Coxeter relations of S_{n+1} pointwise on Tab(shape, .)."""
    tabs = enumerate_tableaux(shape, None, rank)
    checked = 0
    for t in tabs:
        for i in range(1, rank + 1):
            relations = [((i, i), ())]
            for j in range(i + 1, rank + 1):
                if j - i > 1:
                    relations.append(((i, j), (j, i)))
                else:
                    relations.append(((i, j, i), (j, i, j)))
            for lhs, rhs in relations:
                checked += 1
                if _compose(lhs, t) != _compose(rhs, t):
                    return CheckResult.fail(
                        f"sigma{lhs} != sigma{rhs} on {t.to_json()}", checked
                    )
    return CheckResult(True, None, checked)


@dataclass(frozen=True)
class Chain:
    """Members u_i ~> u_{i-1} ~> ... ~> u_h; u_j has first letter a_j."""

    members: tuple[Tableau, ...]

    @property
    def top(self) -> int:
        return self.members[0].first_letter

    @property
    def bottom(self) -> int:
        return self.members[-1].first_letter


def leads_to(u: Tableau, v: Tableau) -> list[int]:
    """All colours i with sigma_i(u) = v, first(u) = i+1 and first(v) = i."""
    if u.is_row() or v.is_row():
        return []
    i = u.first_letter - 1
    if i < 1 or i > u.rank or v.first_letter != i:
        return []
    return [i] if sigma(i, u) == v else []


def chain_decompose(o: Orbit) -> list[Chain]:
    """Split an orbit of non-row tableaux into maximal ~> paths."""
    members = [t for t in o.members if not t.is_row()]
    succ: dict[Tableau, list[Tableau]] = {t: [] for t in members}
    pred: dict[Tableau, list[Tableau]] = {t: [] for t in members}
    for u in members:
        i = u.first_letter - 1
        if 1 <= i <= u.rank:
            v = sigma(i, u)
            if v in succ and leads_to(u, v):
                succ[u].append(v)
                pred[v].append(u)
    chains = []
    for start in members:
        if pred[start]:
            continue
        path = [start]
        while succ[path[-1]]:
            if len(succ[path[-1]]) > 1:
                log.warning("non-linear chain at %s", path[-1])
            path.append(succ[path[-1]][0])
        chains.append(Chain(tuple(path)))
    covered = sum(len(c.members) for c in chains)
    if covered != len(members):
        log.warning("chains cover %d of %d orbit members", covered, len(members))
    return chains


def difference_vector(u: Tableau, v: Tableau) -> tuple[int, ...]:
    return tuple(b - a for a, b in zip(string_exponents(u), string_exponents(v)))


def expected_chain_differences(chain: Chain) -> list[tuple[int, ...]]:
    """Difference vectors d(C(u_j)) - d(u_j) predicted for each chain member.

    Basis vectors are e_1..e_n with e_{n+1} = 0.
    """
    n = chain.members[0].rank

    def e(j: int) -> list[int]:
        v = [0] * n
        if 1 <= j <= n:
            v[j - 1] = 1
        return v

    top, bottom = chain.top, chain.bottom
    out = []
    for u in chain.members:
        j = u.first_letter
        if top == bottom:
            vec = [a - b for a, b in zip(e(top - 1), e(top))]
        elif j == top:
            vec = [-a for a in e(top)]
        elif j == bottom:
            vec = e(bottom - 1)
        else:
            vec = [0] * n
        out.append(tuple(vec))
    return out


def mean_dprime(tabs: Sequence[Tableau]) -> Fraction:
    return Fraction(sum(dprime_stat(t) for t in tabs), len(tabs))
