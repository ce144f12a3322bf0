import pytest

from plactic.verify import SUITES, run_suite

SMALL = {
    "knuth-insertion": 5,
    "plactic-associativity": 3,
    "crystal-strings": 4,
    "knuth-compatibility": 4,
    "omega-symmetry": 4,
    "moore-coxeter": 4,
    "orbits": 4,
    "kostka-threeway": 5,
    "orbit-means": 4,
    "cyclage-graded": 4,
    "cyclage-sigma": 4,
    "chains": 4,
    "swap-symmetry": 2,
    "specialization": 6,
    "stability": 6,
    "standard-weight": 2,
    "typec-weight": 5,
}


def test_every_suite_has_a_small_size():
    assert set(SMALL) == set(SUITES)


@pytest.mark.parametrize("name", sorted(SUITES))
def test_suite_passes_at_small_size(name):
    result = run_suite(name, SMALL[name])
    assert result.ok, result.counterexample
    assert result.checked > 0


@pytest.mark.parametrize("name", ["omega-symmetry", "moore-coxeter", "orbits", "orbit-means", "swap-symmetry", "stability"])
def test_suite_passes_at_default_size(name):
    result = run_suite(name)
    assert result.ok, result.counterexample
