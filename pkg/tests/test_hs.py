import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hsstab import complex_product, star_set
from hsstab.closure import gen_inv_subsemigroup
from hsstab.constructions import (
    chain_semilattice,
    cyclic_group,
    enumerate_all,
    rectangular_band,
    symmetric_group,
    zero_semigroup,
)
from hsstab.errors import EmptyInput, MixedParents, NotAGroup, NotSubsemigroup, TooLarge
from hsstab.hs import (
    Equal,
    WitnessChain,
    check_coset_criterion,
    check_problem,
    conjugated_squares,
    enumerate_hs_stable,
    genhs_formula,
    genhs_oracle,
    group_identity,
    is_hs_simple,
    is_hs_stable,
    is_hs_stable_by_conditions,
    min_hs_stable,
    search_witness,
    specialform_check,
)

import oracles
from conftest import small_corpus


def _all(s):
    for m in range(2 ** s.order):
        yield s.subset([i for i in range(s.order) if m >> i & 1])


def test_s3_hs_stable_are_the_subgroups():
    s3 = symmetric_group(3)
    tab, star = oracles.as_lists(s3)
    found = {frozenset(t) for t in enumerate_hs_stable(s3)}
    assert found == set(oracles.subgroups_brute(tab, star))
    assert len(found) == 6


@pytest.mark.parametrize("s", small_corpus(8), ids=lambda s: s.name)
def test_stability_tests_match_definition(s):
    tab, star = oracles.as_lists(s)
    for t in _all(s):
        expected = oracles.is_hs_stable(tab, star, set(t))
        direct = is_hs_stable(t)
        via = is_hs_stable_by_conditions(t)
        assert direct.stable == expected == via.stable
        assert direct.recheck(t) and via.recheck(t)


@pytest.mark.parametrize("s", small_corpus(8), ids=lambda s: s.name)
def test_genhs_matches_intersection(s):
    tab, star = oracles.as_lists(s)
    stable = oracles.all_hs_stable(tab, star)
    assert {frozenset(t) for t in enumerate_hs_stable(s)} == set(stable)
    assert enumerate_hs_stable(s) == enumerate_hs_stable(s, method="subsets")
    for a in _all(s):
        want = oracles.genhs_by_intersection(tab, star, set(a), stable)
        assert set(genhs_formula(a)) == want
        assert set(genhs_oracle(a)) == want


def test_enumeration_cap():
    s = symmetric_group(4)
    with pytest.raises(TooLarge):
        enumerate_hs_stable(s, cap=2 ** 16)
    assert len(enumerate_hs_stable(s, cap=2 ** 24)) == 30  # subgroups of S4


def test_enumeration_sorted():
    out = enumerate_hs_stable(chain_semilattice(4))
    keys = [t.sort_key() for t in out]
    assert keys == sorted(keys)


def test_min_hs_stable_and_simplicity():
    assert is_hs_simple(chain_semilattice(1))
    z = zero_semigroup(3)
    assert set(min_hs_stable(z)) == {0}
    assert not is_hs_simple(z)
    # bands: every idempotent is hermitian up to conjugation
    assert is_hs_simple(rectangular_band(2))
    s3 = symmetric_group(3)
    assert set(min_hs_stable(s3)) == {s3.index("e")}


def test_report_counterexamples():
    s3 = symmetric_group(3)
    t = s3.subset(["(12)"])
    rep = is_hs_stable(t)
    assert not rep and rep.violated == "product" and rep.recheck(t)
    t = s3.subset(["e", "(123)"])
    rep = is_hs_stable(t)
    assert rep.violated == "product"
    z = zero_semigroup(3, [0, 2, 1])
    t = z.subset([0, 1])
    assert is_hs_stable(t).violated == "star"
    assert is_hs_stable_by_conditions(t).violated == "main3"
    t = z.subset([1, 2])
    assert is_hs_stable(t).violated == "product"
    assert is_hs_stable_by_conditions(t).violated == "main1"


def test_conjugated_squares_against_oracle():
    for s in small_corpus(10):
        tab, star = oracles.as_lists(s)
        h = oracles.hermitian(tab, star)
        h2 = oracles.product(tab, h, h)
        want = {tab[tab[x][g]][star[x]] for x in range(s.order) for g in h2}
        assert set(conjugated_squares(s)) == want


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_genhs_is_closure_operator(data):
    s = symmetric_group(4)
    a = s.subset(data.draw(st.sets(st.integers(0, 23), max_size=3)))
    b = s.subset(data.draw(st.sets(st.integers(0, 23), max_size=3)))
    g = genhs_formula(a)
    assert a <= g
    assert genhs_formula(g) == g
    assert genhs_formula(a | b) >= g
    assert is_hs_stable(g)
    assert g == genhs_oracle(a)


# complex-product problem

def test_problem_witness_in_s3():
    s3 = symmetric_group(3)
    odd = s3.subset(["(12)", "(13)", "(23)"])
    res = check_problem([odd, odd], s3.full(), exhaustive=True)
    assert isinstance(res, WitnessChain)
    assert res.verify()
    assert set(res.T) == {s3.index(x) for x in ("e", "(123)", "(132)")}
    assert res.anchors == (min(odd),)


def test_problem_equal():
    s3 = symmetric_group(3)
    odd = s3.subset(["(12)", "(13)", "(23)"])
    res = check_problem([odd], s3.full(), exhaustive=True)
    assert isinstance(res, Equal) and res.generated == s3.full() and res.contained
    assert "Equal" in res.render()


def test_problem_single_set_witness():
    s3 = symmetric_group(3)
    a = s3.subset(["(123)"])
    res = check_problem([a], s3.full(), exhaustive=True)
    assert isinstance(res, WitnessChain) and res.anchors == ()
    assert a <= res.T


def test_problem_input_errors():
    s3 = symmetric_group(3)
    with pytest.raises(EmptyInput):
        check_problem([], s3.full())
    with pytest.raises(EmptyInput):
        check_problem([s3.empty()], s3.full())
    with pytest.raises(MixedParents):
        check_problem([s3.full(), symmetric_group(3).full()], s3.full())
    with pytest.raises(NotSubsemigroup):
        check_problem([s3.full()], s3.subset(["(12)"]))


def test_witness_failures_reported():
    s3 = symmetric_group(3)
    odd = s3.subset(["(12)", "(13)", "(23)"])
    a3 = s3.subset(["e", "(123)", "(132)"])
    bad = WitnessChain(a3, (s3.index("e"),), (odd, odd), s3.full())
    assert not bad.verify()
    assert any("S_1 a_1*" in f for f in bad.failures())
    assert WitnessChain(a3, (), (odd, odd), s3.full()).failures() == ["expected 1 anchors, got 0"]


def _problem_inputs(s):
    subs = [a for a in _all(s) if a]
    closed = [t for t in _all(s) if t and gen_inv_subsemigroup(t) == t]
    return subs, closed


@pytest.mark.parametrize("s", [x for n in (2, 3) for x in enumerate_all(n)], ids=lambda s: s.name)
def test_problem_agrees_with_search_exhaustively(s):
    subs, closed = _problem_inputs(s)
    for sets in itertools.product(subs, repeat=2):
        for sp in closed:
            res = check_problem(list(sets), sp)
            found = search_witness(list(sets), sp)
            assert (found is None) == isinstance(res, Equal)
            if isinstance(res, WitnessChain):
                assert res.verify()


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(small_corpus(7)), st.data())
def test_problem_property(s, data):
    n = data.draw(st.integers(1, 3))
    sets = [s.subset(data.draw(st.sets(st.integers(0, s.order - 1), min_size=1, max_size=3))) for _ in range(n)]
    sp = gen_inv_subsemigroup(s.subset(data.draw(st.sets(st.integers(0, s.order - 1), min_size=1))))
    res = check_problem(sets, sp, exhaustive=True)
    if isinstance(res, WitnessChain):
        assert res.verify()
    for k in range(1, n + 1):
        assert specialform_check(sets, k)


def test_specialform_bounds():
    s3 = symmetric_group(3)
    with pytest.raises(ValueError):
        specialform_check([s3.full()], 2)


# groups

def test_group_identity():
    s3 = symmetric_group(3)
    assert s3.label(group_identity(s3)) == "e"
    with pytest.raises(NotAGroup):
        group_identity(chain_semilattice(2))
    with pytest.raises(NotAGroup):
        group_identity(cyclic_group(4, trivial_star=True))


def _odd_subset(g, n):
    # elements are indexed in itertools.permutations order (checked in test_constructions)
    perms = list(itertools.permutations(range(n)))
    return g.subset([i for i, p in enumerate(perms) if oracles.is_odd(p)])


@pytest.mark.parametrize("n", [3, 4])
def test_odd_permutations_coset(n):
    g = symmetric_group(n)
    odd = _odd_subset(g, n)
    res = check_coset_criterion(g, odd)
    assert not res.equal and res.verify(odd)
    assert res.generated == g.full()
    assert len(res.generated_quotients) == g.order // 2


def test_coset_equal_case():
    z6 = cyclic_group(6)
    a = z6.subset([0, 1])
    res = check_coset_criterion(z6, a)
    assert res.equal and res.coset is None and res.verify(a)
    b = z6.subset([1])
    res = check_coset_criterion(z6, b)
    assert not res.equal and res.verify(b) and set(res.generated_quotients) == {0}


def test_coset_errors():
    s3 = symmetric_group(3)
    with pytest.raises(EmptyInput):
        check_coset_criterion(s3, s3.empty())
    with pytest.raises(MixedParents):
        check_coset_criterion(s3, symmetric_group(3).full())
    with pytest.raises(NotAGroup):
        c = chain_semilattice(2)
        check_coset_criterion(c, c.full())


def test_star_product_reverses_in_groups():
    g = symmetric_group(3)
    a = _odd_subset(g, 3)
    assert complex_product([star_set(a), a]) == star_set(complex_product([star_set(a), a]))
