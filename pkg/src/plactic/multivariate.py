"""Multivariate refinement of K_{lambda,(k^{n+1})}(q) by string exponents.

``bold_kostka(lam, k, n)`` sums ``x_1^{d_1(t)} ... x_n^{d_n(t)}`` over the
tableaux of shape lam and rectangular weight (k^{n+1}).  Substituting
``x_i = q^i`` gives back the Kostka-Foulkes polynomial.
"""

from __future__ import annotations

from typing import Sequence

from .crystal import eps, string_exponents
from .diagnostics import CheckResult, KTooSmall, ShapeInfeasible, SizeMismatch
from .kostka import lusztig_kostka
from .polynomials import MultiPoly, QPoly
from .tableaux import (
    Partition,
    Tableau,
    as_partition,
    column_tableau,
    conjugate,
    descent_set,
    distinct_permutations,
    enumerate_tableaux,
    is_yamanouchi,
    kostka_number,
    partitions,
    plactic_product,
    yamanouchi_tableau,
)


def rectangle(k: int, rank: int) -> tuple[int, ...]:
    return (k,) * (rank + 1)


def _rect_tableaux(lam: Sequence[int], k: int, rank: int) -> list[Tableau]:
    lam = as_partition(lam)
    if sum(lam) != k * (rank + 1):
        raise SizeMismatch(f"|{lam}| != {k}*{rank + 1}")
    return enumerate_tableaux(lam, rectangle(k, rank), rank)


def bold_kostka(lam: Sequence[int], k: int, rank: int) -> MultiPoly:
    return MultiPoly.from_exponents(
        rank, (string_exponents(t) for t in _rect_tableaux(lam, k, rank))
    )


def completion(t: Tableau) -> tuple[Tableau, Partition]:
    """Minimal u with t.u Yamanouchi, built from the columns c_i = a_i...a_1.

    Column c_i is used d_i(t) times.  Returns ``(u, weight of u)``.
    """
    cols = [column_tableau(i, t.rank) for i, d in enumerate(string_exponents(t), start=1) for _ in range(d)]
    u = plactic_product(Tableau.empty(t.rank), *cols)
    return u, as_partition(u.weight)


def completion_iterative(t: Tableau) -> Tableau:
    """Same tableau u, found by repeatedly absorbing a free letter.

    While some eps_i acts on t.u, multiply by the column c_i.  Used as a
    cross-check of :func:`completion`.
    """
    u = Tableau.empty(t.rank)
    current = t
    while True:
        for i in range(1, t.rank + 1):
            if eps(i, current) is not None:
                c = column_tableau(i, t.rank)
                u = plactic_product(u, c)
                current = plactic_product(current, c)
                break
        else:
            return u


def monomial_from_completion(t: Tableau) -> tuple[int, ...]:
    """Exponent vector of x_{nu'(t)}: the column lengths of u, as variables."""
    _, nu = completion(t)
    e = [0] * t.rank
    for part in conjugate(nu):
        e[part - 1] += 1
    return tuple(e)


def build_lambda(alpha: Sequence[int], beta: Sequence[int], k: int, rank: int) -> Partition:
    """``[alpha, beta]^k_{n+1}``: alpha on top of a (k^{n+1}) box, beta cut from below."""
    alpha, beta = as_partition(alpha), as_partition(beta)
    if sum(alpha) != sum(beta):
        raise ShapeInfeasible(f"|{alpha}| != |{beta}|")
    if beta and beta[0] > k:
        raise ShapeInfeasible(f"part {beta[0]} of {beta} exceeds k={k}")
    r, s = len(alpha), len(beta)
    if r + s > rank + 1:
        raise ShapeInfeasible(f"{alpha} and {beta} do not fit in {rank + 1} rows")
    lam = [a + k for a in alpha] + [k] * (rank + 1 - r - s) + [k - b for b in reversed(beta)]
    return as_partition(lam)


def schur_poly(lam: Sequence[int], nvars: int) -> MultiPoly:
    lam = as_partition(lam)
    if not lam:
        return MultiPoly.one(nvars)
    if len(lam) > nvars:
        return MultiPoly(nvars)
    if nvars == 1:
        return MultiPoly(1, {(lam[0],): 1}) if len(lam) == 1 else MultiPoly(1)
    return MultiPoly.from_exponents(
        nvars, (t.weight for t in enumerate_tableaux(lam, None, nvars - 1))
    )


def swap_involution(t: Tableau, alpha: Sequence[int], beta: Sequence[int], k: int) -> Tableau:
    """Exponent-preserving bijection Tab([a,b]^k) -> Tab([b,a]^k).

    The part of t inside the k x (n+1) box is completed column by column
    with the complementary letters; rotating those complements by 180
    degrees gives the beta-part of the image.  The alpha-part of t is
    rotated into the top-right corner of an empty box, and the box columns
    are filled with the complements of what sits above them.
    """
    alpha, beta = as_partition(alpha), as_partition(beta)
    if k < max(alpha[:1] + beta[:1] + (0,)):
        raise KTooSmall(f"k={k} < max part of {alpha}, {beta}")
    rank = t.rank
    N = rank + 1
    lam = build_lambda(alpha, beta, k, rank)
    if t.shape != lam or t.weight != rectangle(k, rank):
        raise ValueError(f"tableau does not lie in Tab({lam}, ({k}^{N}))")
    letters = set(range(1, N + 1))

    # beta-part of the image: complements of the box columns, rotated.
    box_cols = [[r[c] for r in t.rows if len(r) > c] for c in range(k)]
    new_right: list[list[int]] = []
    for c in range(k):
        comp = sorted(letters - set(box_cols[c]))
        for h, x in enumerate(comp):
            while len(new_right) <= h:
                new_right.append([])
            new_right[h].append(x)
    # columns were visited left to right; the rotation reverses column order
    new_right = [list(reversed(row)) for row in new_right]

    # alpha-part of t rotated into the top-right corner of the box
    above: list[set[int]] = [set() for _ in range(k)]
    for r, row in enumerate(t.rows):
        for j, x in enumerate(row[k:], start=1):
            above[k - j].add(x)
    box_rows: list[list[int]] = [[] for _ in range(N)]
    for c in range(k):
        for h, x in enumerate(sorted(letters - above[c])):
            box_rows[h].append(x)
    rows = []
    for h in range(N):
        row = box_rows[h] + (new_right[h] if h < len(new_right) else [])
        rows.append(tuple(row))
    out = Tableau(tuple(rows), rank)
    out.validate()
    return out


def specialize(p: MultiPoly) -> QPoly:
    """Substitute x_i = q^i."""
    out: dict[int, int] = {}
    for e, v in p.items():
        deg = sum(i * a for i, a in enumerate(e, start=1))
        out[deg] = out.get(deg, 0) + v
    return QPoly(out)


def stability_check(lam: Sequence[int], k: int, r: int, rank: int) -> CheckResult:
    lam = as_partition(lam)
    shifted = tuple(x + r for x in lam + (0,) * (rank + 1 - len(lam)))
    a = bold_kostka(shifted, k + r, rank)
    b = bold_kostka(lam, k, rank)
    if a != b:
        return CheckResult.fail(f"K[{shifted},{k + r}] = {a} but K[{lam},{k}] = {b}", 1)
    return CheckResult(True, None, 1)


def standard_weight_rhs(lam: Sequence[int], rank: int) -> MultiPoly:
    """Sum over mu of K_{lam' mu} and compositions I of mu of
    prod_{d in D(I)} x_d * prod_{e not in D(I)} (1 - x_e)."""
    n = rank
    lam_conj = conjugate(lam)
    one = MultiPoly.one(n)
    total = MultiPoly(n)
    for mu in partitions(n + 1):
        K = kostka_number(lam_conj, mu, max(len(lam_conj), len(mu)) - 1 or 1)
        if not K:
            continue
        for comp in distinct_permutations(mu):
            D = set(descent_set(comp))
            term = one
            for i in range(1, n + 1):
                x = MultiPoly.variable(n, i)
                term = term * (x if i in D else one - x)
            total = total + term * K
    return total


def standard_weight_identity(rank: int) -> CheckResult:
    checked = 0
    for lam in partitions(rank + 1, rank + 1):
        lhs = bold_kostka(lam, 1, rank)
        rhs = standard_weight_rhs(lam, rank)
        checked += 1
        if lhs != rhs:
            return CheckResult.fail(f"lambda={lam}: {lhs} != {rhs}", checked)
    return CheckResult(True, None, checked)


def specialization_check(lam: Sequence[int], k: int, rank: int) -> CheckResult:
    lhs = specialize(bold_kostka(lam, k, rank))
    rhs = lusztig_kostka(lam, rectangle(k, rank), rank)
    if lhs != rhs:
        return CheckResult.fail(f"lambda={tuple(lam)}, k={k}: {lhs} != {rhs}", 1)
    return CheckResult(True, None, 1)


def completion_check(t: Tableau) -> CheckResult:
    """t.u is Yamanouchi, t.u = u.y = y.u, and x_{nu'} matches the exponents."""
    u, nu = completion(t)
    k = t.weight[0]
    y = yamanouchi_tableau(rectangle(k, t.rank), t.rank)
    tu = plactic_product(t, u)
    if not is_yamanouchi(tu):
        return CheckResult.fail(f"{t}.{u} = {tu} is not Yamanouchi")
    if not (tu == plactic_product(u, y) == plactic_product(y, u)):
        return CheckResult.fail(f"t.u, u.y, y.u differ for t={t}")
    if monomial_from_completion(t) != string_exponents(t):
        return CheckResult.fail(f"x_nu' != x^d for t={t}")
    if completion_iterative(t) != u:
        return CheckResult.fail(f"iterative completion differs for t={t}")
    return CheckResult(True, None, 1)
