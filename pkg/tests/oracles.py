"""Slow, independent reference implementations used only by the tests.

None of these reuse the package's insertion, bracketing or enumeration code.
"""

from __future__ import annotations

from collections import deque
from fractions import Fraction
from itertools import permutations, product
from math import prod

from plactic.polynomials import MultiPoly, QPoly


def is_ssyt(rows) -> bool:
    for r in rows:
        if any(r[j] > r[j + 1] for j in range(len(r) - 1)):
            return False
    for k in range(len(rows) - 1):
        if len(rows[k + 1]) > len(rows[k]):
            return False
        if any(rows[k + 1][j] <= rows[k][j] for j in range(len(rows[k + 1]))):
            return False
    return True


def brute_tableaux(shape, rank, weight=None) -> list[tuple[tuple[int, ...], ...]]:
    """Every filling of the shape with letters 1..rank+1, filtered."""
    cells = sum(shape)
    out = []
    for filling in product(range(1, rank + 2), repeat=cells):
        if weight is not None and tuple(filling.count(a) for a in range(1, rank + 2)) != tuple(weight):
            continue
        rows, pos = [], 0
        for p in shape:
            rows.append(filling[pos : pos + p])
            pos += p
        if is_ssyt(rows):
            out.append(tuple(rows))
    return sorted(out)


def hook_content_count(shape, nletters) -> int:
    """Number of SSYT of the shape with entries in 1..nletters."""
    conj = [sum(1 for p in shape if p > j) for j in range(shape[0])] if shape else []
    num = Fraction(1)
    for i, p in enumerate(shape):
        for j in range(p):
            hook = (p - j - 1) + (conj[j] - i - 1) + 1
            num *= Fraction(nletters + j - i, hook)
    return int(num)


def knuth_class(w) -> set[tuple[int, ...]]:
    """Closure of w under the elementary Knuth relations."""
    w = tuple(w)
    seen, todo = {w}, deque([w])
    while todo:
        v = todo.popleft()
        for p in range(len(v) - 2):
            a, b, c = v[p : p + 3]
            nxt = []
            # y x z <-> y z x  (x < y <= z)
            if b < a <= c:
                nxt.append((a, c, b))
            if c < a <= b:
                nxt.append((a, c, b))
            # x z y <-> z x y  (x <= y < z)
            if a <= c < b:
                nxt.append((b, a, c))
            if b <= c < a:
                nxt.append((b, a, c))
            for x in nxt:
                u = v[:p] + x + v[p + 3 :]
                if u not in seen:
                    seen.add(u)
                    todo.append(u)
    return seen


def ls_charge(word) -> int:
    """Charge of a word of partition weight by standard-subword extraction.

    Scan right to left for 1, then cyclically leftwards for 2, 3, ...;
    the index goes up by one whenever the scan wraps around.
    """
    letters = list(enumerate(word))
    total = 0
    while letters:
        top = max(x for _, x in letters)
        picked = []
        # position in the list of the rightmost 1
        pos = max(k for k, (_, x) in enumerate(letters) if x == 1)
        picked.append(pos)
        index = 0
        for want in range(2, top + 1):
            cands = [k for k, (_, x) in enumerate(letters) if x == want and k not in picked]
            if not cands:
                break
            left = [k for k in cands if k < pos]
            if left:
                pos = max(left)
            else:
                pos = max(cands)
                index += 1
            total += index
            picked.append(pos)
        letters = [e for k, e in enumerate(letters) if k not in picked]
    return total


def brute_kostant(v, rank) -> QPoly:
    """Sum of q^{sum m} over all root multiplicities m with sum m_a a = v."""
    roots = [(i, j) for i in range(rank + 1) for j in range(i + 1, rank + 1)]
    bound = sum(x for x in v if x > 0)
    out: dict[int, int] = {}
    for m in product(range(bound + 1), repeat=len(roots)):
        vec = [0] * (rank + 1)
        for (i, j), c in zip(roots, m):
            vec[i] += c
            vec[j] -= c
        if tuple(vec) == tuple(v):
            out[sum(m)] = out.get(sum(m), 0) + 1
    return QPoly(out)


def _poly_div(num: list[int], den: list[int]) -> list[int]:
    num = num[:]
    out = [0] * (len(num) - len(den) + 1)
    for k in range(len(out) - 1, -1, -1):
        c = num[k + len(den) - 1] // den[-1]
        out[k] = c
        for j, d in enumerate(den):
            num[k + j] -= c * d
    assert not any(num), "division was not exact"
    return out


def standard_kostka(shape) -> QPoly:
    """K_{lambda,(1^N)}(q) = q^{n(lambda')} prod (1-q^i) / prod_cells (1-q^h)."""
    N = sum(shape)
    conj = [sum(1 for p in shape if p > j) for j in range(shape[0])]
    n_conj = sum(i * c for i, c in enumerate(conj))
    num = [1]
    for i in range(1, N + 1):
        num = _mul(num, [1] + [0] * (i - 1) + [-1])
    den = [1]
    for i, p in enumerate(shape):
        for j in range(p):
            h = (p - j - 1) + (conj[j] - i - 1) + 1
            den = _mul(den, [1] + [0] * (h - 1) + [-1])
    quo = _poly_div(num, den)
    return QPoly({e + n_conj: c for e, c in enumerate(quo) if c})


def _mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def complete_homogeneous(k: int, nvars: int) -> MultiPoly:
    if k < 0:
        return MultiPoly(nvars)
    terms = {}
    for e in product(range(k + 1), repeat=nvars):
        if sum(e) == k:
            terms[e] = 1
    return MultiPoly(nvars, terms)


def jacobi_trudi(lam, nvars: int) -> MultiPoly:
    """det(h_{lam_i - i + j}) expanded over permutations."""
    m = len(lam)
    if m == 0:
        return MultiPoly.one(nvars)
    total = MultiPoly(nvars)
    for perm in permutations(range(m)):
        sign = prod(-1 for a in range(m) for b in range(a + 1, m) if perm[a] > perm[b])
        term = MultiPoly.one(nvars)
        for i in range(m):
            term = term * complete_homogeneous(lam[i] - i + perm[i], nvars)
        total = total + term * sign
    return total


def string_sigma(i, t, eps, phi):
    """sigma_i by walking the colour-i string: reflect about its middle."""
    e = 0
    cur = t
    while (nxt := eps(i, cur)) is not None:
        cur, e = nxt, e + 1
    f = 0
    cur = t
    while (nxt := phi(i, cur)) is not None:
        cur, f = nxt, f + 1
    cur = t
    if f > e:
        for _ in range(f - e):
            cur = phi(i, cur)
    else:
        for _ in range(e - f):
            cur = eps(i, cur)
    return cur
