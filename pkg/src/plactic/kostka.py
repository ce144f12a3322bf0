"""Kostka-Foulkes polynomials computed three independent ways.

* ``lusztig_kostka``: alternating sum over S_{n+1} of the q-analogue of
  Kostant's partition function.  Uses rho = (n, n-1, ..., 0).
* ``charge_kostka``: generating function of the charge.
* ``mean_kostka``: generating function of the orbit mean of d.

Weights that are not partitions are accepted by all three; the Lusztig
route sorts them first (the polynomial only depends on the S_{n+1}-orbit
of the weight, which is what the two tableau routes compute).
"""

from __future__ import annotations

from functools import cache
from itertools import permutations
from typing import Sequence

from .cyclage import charge_any_weight
from .diagnostics import SizeMismatch
from .orbits import mean_b
from .polynomials import QPoly
from .tableaux import as_partition, enumerate_tableaux


def positive_roots(rank: int) -> tuple[tuple[int, int], ...]:
    """Pairs (i, j), i < j, standing for e_i - e_j, in lexicographic order (0-based)."""
    return tuple((i, j) for i in range(rank + 1) for j in range(i + 1, rank + 1))


@cache
def _kostant(rank: int, r: int, v: tuple[int, ...]) -> QPoly:
    roots = positive_roots(rank)
    if r == len(roots):
        return QPoly({0: 1}) if not any(v) else QPoly()
    i, j = roots[r]
    if v[i] < 0:
        return QPoly()
    last_for_i = j == rank
    choices = [v[i]] if last_for_i else range(v[i] + 1)
    total = QPoly()
    for m in choices:
        w = list(v)
        w[i] -= m
        w[j] += m
        total = total + _kostant(rank, r + 1, tuple(w)).shift(m)
    return total


def q_kostant(v: Sequence[int], rank: int) -> QPoly:
    """Sum of q^(number of roots) over decompositions of v into positive roots."""
    v = tuple(v)
    if len(v) != rank + 1:
        raise ValueError(f"vector {v} should have {rank + 1} entries")
    if sum(v) != 0:
        return QPoly()
    return _kostant(rank, 0, v)


def _sign(perm: Sequence[int]) -> int:
    inversions = sum(1 for a in range(len(perm)) for b in range(a + 1, len(perm)) if perm[a] > perm[b])
    return -1 if inversions % 2 else 1


def _check(lam: Sequence[int], mu: Sequence[int], rank: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    lam = as_partition(lam)
    mu = tuple(mu)
    if sum(lam) != sum(mu):
        raise SizeMismatch(f"|{lam}| != |{mu}|")
    if len(lam) > rank + 1:
        raise ValueError(f"{lam} has more than {rank + 1} parts")
    if len(mu) > rank + 1:
        if any(mu[rank + 1:]):
            raise ValueError(f"{mu} has more than {rank + 1} entries")
        mu = mu[: rank + 1]
    return lam + (0,) * (rank + 1 - len(lam)), mu + (0,) * (rank + 1 - len(mu))


@cache
def _lusztig(lam: tuple[int, ...], mu: tuple[int, ...], rank: int) -> QPoly:
    rho = tuple(range(rank, -1, -1))
    lr = tuple(a + b for a, b in zip(lam, rho))
    total = QPoly()
    for perm in permutations(range(rank + 1)):
        v = tuple(lr[perm[k]] - mu[k] - rho[k] for k in range(rank + 1))
        p = q_kostant(v, rank)
        if not p.is_zero():
            total = total + p * _sign(perm)
    return total


def lusztig_kostka(lam: Sequence[int], mu: Sequence[int], rank: int) -> QPoly:
    lam, mu = _check(lam, mu, rank)
    return _lusztig(lam, tuple(sorted(mu, reverse=True)), rank)


def charge_kostka(lam: Sequence[int], mu: Sequence[int], rank: int) -> QPoly:
    lam, mu = _check(lam, mu, rank)
    return QPoly.from_exponents(charge_any_weight(t) for t in enumerate_tableaux(lam, mu, rank))


def mean_kostka(lam: Sequence[int], mu: Sequence[int], rank: int) -> QPoly:
    lam, mu = _check(lam, mu, rank)
    return QPoly.from_exponents(mean_b(t) for t in enumerate_tableaux(lam, mu, rank))


METHODS = {
    "lusztig": lusztig_kostka,
    "charge": charge_kostka,
    "mean": mean_kostka,
}
