"""Named cross-method verification suites.

Every suite takes a size bound and returns a :class:`CheckResult`; the
first violation found is reported as the counterexample.
"""

from __future__ import annotations

from itertools import product
from typing import Callable, Iterator

from .crystal import crystal_graph, eps, omega2, phi, sigma, string_exponents
from .cyclage import (
    charge,
    charge_any_weight,
    cocharge,
    cyclage_graph,
    initial_cyclage,
    tree_spans,
)
from .diagnostics import CheckResult
from .kostka import charge_kostka, lusztig_kostka, mean_kostka
from .multivariate import (
    bold_kostka,
    build_lambda,
    completion_check,
    rectangle,
    schur_poly,
    specialization_check,
    stability_check,
    standard_weight_identity,
    swap_involution,
)
from .orbits import (
    chain_decompose,
    difference_vector,
    expected_chain_differences,
    mean_b,
    mean_bprime,
    mean_dprime,
    orbit,
    orbits_of_shape,
)
from .tableaux import (
    enumerate_tableaux,
    insert,
    kostka_number,
    knuth_equivalent,
    partition_norm,
    partitions,
    plactic_product,
    row_tableau,
)
from .typec import closure, signed_weight


class Violation(Exception):
    pass


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise Violation(message)


def _shapes(max_size: int, max_rank: int) -> Iterator[tuple[tuple[int, ...], int]]:
    for rank in range(1, max_rank + 1):
        for size in range(1, max_size + 1):
            for lam in partitions(size, rank + 1):
                yield lam, rank


def _words(max_len: int, rank: int) -> Iterator[tuple[int, ...]]:
    for m in range(max_len + 1):
        yield from product(range(1, rank + 2), repeat=m)


def _run(body: Callable[[], int]) -> CheckResult:
    try:
        checked = body()
    except Violation as exc:
        return CheckResult.fail(str(exc))
    return CheckResult(True, None, checked)


def knuth_insertion(max_size: int = 8) -> CheckResult:
    def body():
        n = 0
        for rank in (1, 2, 3):
            for w in _words(min(max_size, 8 if rank < 3 else 6), rank):
                P = insert(w, rank)
                _require(knuth_equivalent(w, P.reading), f"w={w} not equivalent to its P reading")
                n += 1
        return n

    return _run(body)


def plactic_associativity(max_size: int = 4) -> CheckResult:
    def body():
        n = 0
        rank = 2
        words = [w for w in _words(min(max_size, 4), rank)]
        tabs = sorted({insert(w, rank) for w in words if len(w) <= 2})
        for a, b, c in product(tabs, repeat=3):
            _require(
                plactic_product(plactic_product(a, b), c) == plactic_product(a, plactic_product(b, c)),
                f"associativity fails on {a}, {b}, {c}",
            )
            n += 1
        return n

    return _run(body)


def crystal_strings(max_size: int = 6) -> CheckResult:
    def body():
        n = 0
        for lam, rank in _shapes(max_size, 3):
            g = crystal_graph(lam, rank)
            _require(len(g) == len(enumerate_tableaux(lam, None, rank)), f"Gamma{lam} misses vertices")
            _require(g.is_connected(), f"Gamma{lam} disconnected")
            seen_out, seen_in = set(), set()
            for s, c, t in g.edges:
                _require((s, c) not in seen_out and (t, c) not in seen_in, f"colour {c} branches in Gamma{lam}")
                seen_out.add((s, c))
                seen_in.add((t, c))
            for t in g.vertices:
                for i in range(1, rank + 1):
                    u = phi(i, t)
                    if u is not None:
                        _require(eps(i, u) == t, f"eps_{i} phi_{i} != id at {t}")
                    e_len = 0
                    cur = t
                    while (nxt := eps(i, cur)) is not None:
                        cur, e_len = nxt, e_len + 1
                    f_len = 0
                    while (nxt := phi(i, cur)) is not None:
                        cur, f_len = nxt, f_len + 1
                    for _ in range(f_len - e_len):
                        cur = eps(i, cur)
                    _require(cur == t, f"string walk does not return to {t}")
                    n += 1
        return n

    return _run(body)


def knuth_compatibility(max_size: int = 6) -> CheckResult:
    def body():
        n = 0
        for rank in (1, 2):
            classes: dict = {}
            for w in _words(min(max_size, 6), rank):
                classes.setdefault(insert(w, rank), []).append(w)
            for words in classes.values():
                for i in range(1, rank + 1):
                    for op in (eps, phi, sigma):
                        images = {None if (v := op(i, w)) is None else insert(v, rank) for w in words}
                        _require(len(images) == 1, f"{op.__name__}_{i} not plactic on class of {words[0]}")
                        n += 1
        return n

    return _run(body)


def omega_symmetry(max_size: int = 6) -> CheckResult:
    def body():
        n = 0
        for lam, rank in _shapes(max_size, 3):
            g = crystal_graph(lam, rank)
            edges = set(g.edges)
            for s, c, t in g.edges:
                a = g.index[omega2(g.vertices[t])]
                b = g.index[omega2(g.vertices[s])]
                _require((a, rank + 1 - c, b) in edges, f"Omega2 symmetry fails in Gamma{lam}")
                n += 1
            for t in g.vertices:
                _require(omega2(omega2(t)) == t, f"Omega2 not an involution at {t}")
        return n

    return _run(body)


def moore_coxeter(max_size: int = 6) -> CheckResult:
    from .orbits import moore_coxeter_check

    def body():
        n = 0
        for lam, rank in _shapes(max_size, 3):
            r = moore_coxeter_check(lam, rank)
            _require(r.ok, r.counterexample or "")
            n += r.checked
        return n

    return _run(body)


def orbit_structure(max_size: int = 6) -> CheckResult:
    def body():
        n = 0
        for lam, rank in _shapes(max_size, 3):
            orbs = orbits_of_shape(lam, rank)
            owner = {}
            for k, o in enumerate(orbs):
                for t in o.members:
                    _require(t not in owner, f"orbits overlap at {t}")
                    owner[t] = k
                    _require(orbit(t).members == o.members, f"orbit of {t} differs from its class")
                c = charge_any_weight(o.members[0])
                for t in o.members:
                    _require(charge_any_weight(t) == c, f"charge not constant on orbit of {t}")
                n += 1
            for mu in partitions(sum(lam), rank + 1):
                padded = mu + (0,) * (rank + 1 - len(mu))
                reps = [o for o in orbs if any(t.weight == padded for t in o.members)]
                _require(len(reps) == kostka_number(lam, mu, rank), f"orbit count != K for {lam},{mu}")
        return n

    return _run(body)


def kostka_threeway(max_size: int = 8) -> CheckResult:
    def body():
        n = 0
        for lam, rank in _shapes(max_size, 3):
            for mu in partitions(sum(lam), rank + 1):
                a = lusztig_kostka(lam, mu, rank)
                b = charge_kostka(lam, mu, rank)
                c = mean_kostka(lam, mu, rank)
                _require(a == b == c, f"K[{lam},{mu}] rank {rank}: lusztig={a} charge={b} mean={c}")
                _require(a(1) == kostka_number(lam, mu, rank), f"K[{lam},{mu}](1) != |Tab|")
                _require(all(v >= 0 for v in a.coeffs.values()), f"negative coefficient in K[{lam},{mu}]")
                n += 1
        return n

    return _run(body)


def orbit_means(max_size: int = 6) -> CheckResult:
    def body():
        n = 0
        for lam, rank in _shapes(max_size, 3):
            for t in enumerate_tableaux(lam, None, rank):
                _require(mean_b(t) == charge_any_weight(omega2(t)), f"b(t) != c(Omega2 t) at {t}")
                _require(mean_bprime(t) == charge_any_weight(t), f"b'(t) != c(t) at {t}")
                n += 1
        return n

    return _run(body)


def cyclage_graded(max_size: int = 6) -> CheckResult:
    def body():
        n = 0
        for rank in (1, 2):
            for size in range(1, max_size + 1):
                for mu in partitions(size, rank + 1):
                    g = cyclage_graph(mu, rank)
                    root = g.index[row_tableau(mu, rank)]
                    _require(g.sinks() == [root], f"H{mu}: sinks {g.sinks()}")
                    for s, _, t in g.edges:
                        _require(g.cocharges[s] == g.cocharges[t] + 1, f"H{mu}: edge {s}->{t} not graded")
                    _require(max(g.cocharges) == partition_norm(mu), f"H{mu}: top level != ||mu||")
                    _require(tree_spans(g), f"T{mu} does not span")
                    for t in g.vertices:
                        _require(charge(t) + cocharge(t) == partition_norm(mu), "charge + cocharge != ||mu||")
                    n += 1
        return n

    return _run(body)


def cyclage_sigma(max_size: int = 6) -> CheckResult:
    def body():
        n = 0
        for lam, rank in _shapes(max_size, 3):
            if len(lam) < 2:
                continue
            for t in enumerate_tableaux(lam, None, rank):
                for i in range(1, rank + 1):
                    _require(
                        sigma(i, initial_cyclage(t)) == initial_cyclage(sigma(i, t)),
                        f"sigma_{i} C != C sigma_{i} at {t}",
                    )
                    n += 1
        return n

    return _run(body)


def chains(max_size: int = 6) -> CheckResult:
    def body():
        n = 0
        for rank in (1, 2, 3):
            for size in range(1, max_size + 1):
                for mu in partitions(size, rank + 1):
                    t = row_tableau(mu, rank)
                    _require(mean_bprime(t) == partition_norm(mu), f"b'(t_mu) != ||mu|| for {mu}")
                    n += 1
        for lam, rank in _shapes(max_size, 3):
            if len(lam) < 2:
                continue
            for o in orbits_of_shape(lam, rank):
                for ch in chain_decompose(o):
                    images = [initial_cyclage(u) for u in ch.members]
                    _require(
                        mean_dprime(images) == mean_dprime(ch.members) + 1,
                        f"B'(C(chain)) != B'(chain)+1 for chain at {ch.members[0]}",
                    )
                    expected = expected_chain_differences(ch)
                    for u, v, e in zip(ch.members, images, expected):
                        _require(difference_vector(u, v) == e, f"difference vector at {u}: {difference_vector(u, v)} != {e}")
                    n += 1
        return n

    return _run(body)


def _alpha_beta(max_weight: int, rank: int):
    for m in range(0, max_weight + 1):
        for alpha in partitions(m, rank + 1):
            for beta in partitions(m, rank):
                if len(alpha) + len(beta) <= rank + 1:
                    yield alpha, beta


def swap_symmetry(max_size: int = 4) -> CheckResult:
    def body():
        n = 0
        for rank in (1, 2, 3):
            for alpha, beta in _alpha_beta(min(max_size, 4), rank):
                k = max(alpha[:1] + beta[:1] + (1,))
                lam = build_lambda(alpha, beta, k, rank)
                K = bold_kostka(lam, k, rank)
                K_swapped = bold_kostka(build_lambda(beta, alpha, k, rank), k, rank) if len(beta) + len(alpha) <= rank + 1 and len(alpha) <= rank else None
                if len(alpha) == 1:
                    _require(K == schur_poly(beta, rank), f"K[[{alpha},{beta}]^{k}] != s_beta (rank {rank})")
                if len(beta) == 1:
                    _require(K == schur_poly(alpha, rank), f"K[[{alpha},{beta}]^{k}] != s_alpha (rank {rank})")
                if K_swapped is not None:
                    _require(K == K_swapped, f"K[[{alpha},{beta}]^{k}] != K[[{beta},{alpha}]^{k}] (rank {rank})")
                    for t in enumerate_tableaux(lam, rectangle(k, rank), rank):
                        t2 = swap_involution(t, alpha, beta, k)
                        _require(string_exponents(t2) == string_exponents(t), f"swap changes exponents at {t}")
                        _require(swap_involution(t2, beta, alpha, k) == t, f"swap not an involution at {t}")
                _require(K == K.reversed_variables(), f"K[{lam}] not symmetric under x_i <-> x_(n+1-i)")
                n += 1
        return n

    return _run(body)


def _rect_range(max_cells: int):
    for rank in (1, 2, 3):
        for k in range(1, max_cells // (rank + 1) + 1):
            for lam in partitions(k * (rank + 1), rank + 1):
                yield lam, k, rank


def specialization(max_size: int = 12) -> CheckResult:
    def body():
        n = 0
        for lam, k, rank in _rect_range(max_size):
            r = specialization_check(lam, k, rank)
            _require(r.ok, r.counterexample or "")
            for t in enumerate_tableaux(lam, rectangle(k, rank), rank):
                r = completion_check(t)
                _require(r.ok, r.counterexample or "")
            n += 1
        return n

    return _run(body)


def stability(max_size: int = 12) -> CheckResult:
    def body():
        n = 0
        for lam, k, rank in _rect_range(max_size):
            for r in (1, 2):
                res = stability_check(lam, k, r, rank)
                _require(res.ok, res.counterexample or "")
                n += 1
        return n

    return _run(body)


def standard_weight(max_size: int = 3) -> CheckResult:
    def body():
        n = 0
        for rank in range(1, max_size + 1):
            r = standard_weight_identity(rank)
            _require(r.ok, r.counterexample or "")
            n += r.checked
        return n

    return _run(body)


def typec_weight(max_size: int = 8) -> CheckResult:
    def body():
        n = 0
        rank = 2
        letters = [x for x in range(-rank, rank + 1) if x]
        for m in range(0, 4):
            for w in product(letters, repeat=m):
                members, _ = closure(w, rank, max_len=max_size, max_states=20_000)
                sw = signed_weight(w, rank)
                for v in members:
                    _require(signed_weight(v, rank) == sw, f"closure of {w} contains {v} with another signed weight")
                n += 1
        return n

    return _run(body)


SUITES: dict[str, tuple[Callable[[int], CheckResult], int]] = {
    "knuth-insertion": (knuth_insertion, 8),
    "plactic-associativity": (plactic_associativity, 4),
    "crystal-strings": (crystal_strings, 6),
    "knuth-compatibility": (knuth_compatibility, 6),
    "omega-symmetry": (omega_symmetry, 6),
    "moore-coxeter": (moore_coxeter, 6),
    "orbits": (orbit_structure, 6),
    "kostka-threeway": (kostka_threeway, 8),
    "orbit-means": (orbit_means, 6),
    "cyclage-graded": (cyclage_graded, 6),
    "cyclage-sigma": (cyclage_sigma, 6),
    "chains": (chains, 6),
    "swap-symmetry": (swap_symmetry, 4),
    "specialization": (specialization, 12),
    "stability": (stability, 12),
    "standard-weight": (standard_weight, 3),
    "typec-weight": (typec_weight, 8),
}


def run_suite(name: str, max_size: int | None = None) -> CheckResult:
    fn, default = SUITES[name]
    return fn(default if max_size is None else max_size)
