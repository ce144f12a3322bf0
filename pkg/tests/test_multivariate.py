import pytest

from oracles import jacobi_trudi
from plactic.diagnostics import KTooSmall, ShapeInfeasible, SizeMismatch
from plactic.kostka import lusztig_kostka
from plactic.multivariate import (
    bold_kostka,
    build_lambda,
    completion,
    completion_check,
    completion_iterative,
    monomial_from_completion,
    rectangle,
    schur_poly,
    specialize,
    stability_check,
    swap_involution,
)
from plactic.polynomials import MultiPoly, QPoly
from plactic.tableaux import Tableau, enumerate_tableaux, kostka_number, partitions


@pytest.mark.parametrize("nvars", [1, 2, 3])
def test_schur_polynomials_match_jacobi_trudi(nvars):
    for size in range(0, 5):
        for lam in partitions(size):
            assert schur_poly(lam, nvars) == jacobi_trudi(lam, nvars), lam


def test_build_lambda():
    assert build_lambda((4, 2, 2), (5, 3), 5, 4) == (9, 7, 7, 2)
    assert build_lambda((5, 3), (4, 2, 2), 5, 4) == (10, 8, 3, 3, 1)
    assert build_lambda((), (), 2, 3) == (2, 2, 2, 2)
    with pytest.raises(ShapeInfeasible):
        build_lambda((2,), (1,), 2, 3)
    with pytest.raises(ShapeInfeasible):
        build_lambda((3,), (3,), 2, 3)
    with pytest.raises(ShapeInfeasible):
        build_lambda((1, 1, 1), (1, 1, 1), 1, 3)


def test_completion_example():
    t = Tableau.from_rows([[1, 1, 2, 3, 3], [2]], 2)
    u, nu = completion(t)
    assert u == Tableau.from_rows([[1, 1, 1], [2, 2]], 2)
    assert nu == (3, 2)
    assert completion_iterative(t) == u
    assert completion_check(t).ok


@pytest.mark.parametrize("lam, k, rank", [((3, 3, 2), 2, 3), ((4, 2), 2, 2), ((5, 2, 1), 2, 3), ((3, 2, 1), 2, 2)])
def test_completion_gives_the_exponents(lam, k, rank):
    for t in enumerate_tableaux(lam, rectangle(k, rank), rank):
        assert completion_check(t).ok
        x = monomial_from_completion(t)
        assert len(x) == rank


@pytest.mark.parametrize("rank", [1, 2, 3])
def test_specialisation_and_value_at_one(rank):
    for k in (1, 2):
        mu = rectangle(k, rank)
        for lam in partitions(k * (rank + 1), rank + 1):
            K = bold_kostka(lam, k, rank)
            assert specialize(K) == lusztig_kostka(lam, mu, rank)
            assert K.evaluate((1,) * rank) == kostka_number(lam, mu, rank)
            assert K == K.reversed_variables()


def test_specialize_by_hand():
    p = MultiPoly(2, {(1, 0): 1, (0, 1): 2, (1, 1): 1})
    assert specialize(p) == QPoly({1: 1, 2: 2, 3: 1})


def test_stability_examples():
    for lam, k in [((3, 3, 2), 2), ((4, 2, 2), 2), ((2, 1, 1), 1)]:
        for r in (1, 2, 3):
            assert stability_check(lam, k, r, 3).ok


def test_swap_involution_errors():
    t = Tableau.from_rows([[1, 1, 2, 2, 3], [2, 3, 3], [4, 4], []], 3)
    # k = 2 is smaller than alpha_1 = 3
    with pytest.raises(KTooSmall):
        swap_involution(t, (3,), (1, 1, 1), 2)
    with pytest.raises(ValueError):
        swap_involution(Tableau.from_rows([[1, 1, 2, 2]], 3), (1,), (1,), 2)


def test_swap_involution_on_a_small_family():
    alpha, beta, k, rank = (2, 1), (2, 1), 2, 3
    lam = build_lambda(alpha, beta, k, rank)
    images = set()
    for t in enumerate_tableaux(lam, rectangle(k, rank), rank):
        s = swap_involution(t, alpha, beta, k)
        images.add(s)
        assert swap_involution(s, beta, alpha, k) == t
    assert len(images) == kostka_number(lam, rectangle(k, rank), rank)


def test_size_mismatch():
    with pytest.raises(SizeMismatch):
        bold_kostka((3, 2), 2, 3)
