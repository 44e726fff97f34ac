import pytest

from hsstab.constructions import corpus
from hsstab.core import square_set
from hsstab.structure import classify
from hsstab.suites import SUITES, run_suite, subgroup_lattice, subsets

import oracles


@pytest.mark.parametrize("name", sorted(corpus()))
def test_suites_on_corpus(name):
    s = corpus()[name]
    results = run_suite(s, samples=60)
    assert {r.status for r in results} <= {"PASS", "FAIL", "SKIP"}
    failed = {r.name for r in results if r.status == "FAIL"}
    # the kernel leg of the commutative equivalence needs S = S^2
    expected = set()
    if classify(s).commutative and square_set(s) != s.full():
        expected = {"commutative: three-way stability agreement"}
    assert failed == expected, [r for r in results if r.status == "FAIL"]


def test_example_suite_only_for_rees():
    s = corpus()["rees-S3"]
    results = run_suite(s, "example")
    assert len(results) == 5 and all(r.status == "PASS" for r in results)
    assert run_suite(corpus()["S3"], "example")[0].status == "SKIP"


def test_subsets_sampling():
    s = corpus()["S3"]
    assert len(list(subsets(s))) == 64
    big = corpus()["S4"]
    a = [t.indices for t in subsets(big, samples=50, seed=1)]
    b = [t.indices for t in subsets(big, samples=50, seed=1)]
    assert len(a) == 50 and a == b


def test_subgroup_lattice_against_brute_force():
    s = corpus()["S3"]
    tab, star = oracles.as_lists(s)
    assert {frozenset(t) for t in subgroup_lattice(s)} == set(oracles.subgroups_brute(tab, star))


def test_unknown_suite():
    with pytest.raises(ValueError):
        run_suite(corpus()["S2"], "nope")
    assert "morphic" in SUITES
