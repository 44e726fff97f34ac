import itertools

import pytest

from hsstab import complex_product
from hsstab.constructions import (
    brandt_semigroup,
    chain_semilattice,
    cyclic_group,
    nonnormal_rees_instance,
    rectangular_band,
    symmetric_group,
    symmetric_inverse_monoid,
    zero_semigroup,
)
from hsstab.closure import gen_inv_subsemigroup, omega
from hsstab.core import hermitian_squares, idempotents, square_set
from hsstab.errors import EmptyInput, MixedParents, NotCommutative, NotInverse, NotRegularStar, NotSemilattice
from hsstab.hs import genhs_formula, is_hs_simple
from hsstab.morphic import enumerate_group_quotients
from hsstab.structure import (
    check_commutative_equivalence,
    check_hermitian_identities,
    classify,
    commutative_legs,
    f_set,
    genhs_commutative,
    genhs_orthodox,
    genhs_regular,
    hermitian_identities,
    inverse_hs_simplicity,
    inverses,
    is_e_unitary,
    orthodox_simplicity_agrees,
    regular_star_invariants,
    semilattice_product_criterion,
)

import oracles
from conftest import small_corpus


def _brute_classes(s):
    tab, star = oracles.as_lists(s)
    n = range(s.order)
    inv = {x: [y for y in n if tab[tab[x][y]][x] == x and tab[tab[y][x]][y] == y] for x in n}
    regular_star = all(star[x] in inv[x] for x in n)
    e = {x for x in n if tab[x][x] == x}
    return {
        "regular": all(inv[x] for x in n),
        "regular_star": regular_star,
        "orthodox_star": regular_star and all(tab[a][b] in e for a in e for b in e),
        "inverse": regular_star and all(len(inv[x]) == 1 for x in n),
        "commutative": all(tab[a][b] == tab[b][a] for a in n for b in n),
        "semilattice": e == set(n) and all(tab[a][b] == tab[b][a] for a in n for b in n),
    }


@pytest.mark.parametrize("s", small_corpus(54), ids=lambda s: s.name)
def test_classify_against_brute_force(s):
    rep = classify(s).as_dict()
    for key, val in _brute_classes(s).items():
        assert rep[key] == val, key


def test_classify_known_examples():
    assert classify(symmetric_group(3)).inverse
    rect = classify(rectangular_band(2))
    assert rect.orthodox_star and not rect.inverse
    z = classify(zero_semigroup(3))
    assert not z.regular and z.has_zero and z.zero == 0 and not z.monoid
    sim = classify(symmetric_inverse_monoid(2))
    assert sim.inverse and sim.monoid and sim.has_zero
    assert classify(cyclic_group(3, trivial_star=True)).trivial_involution
    assert inverses(rectangular_band(2), 0) == [0, 1, 2, 3]


def test_f_set_of_rectangular_band():
    # orthodox, yet F_S = H_S is strictly inside E_S = S; both generate S
    r = rectangular_band(2)
    assert f_set(r) == hermitian_squares(r) == r.subset(["(1,1)", "(2,2)"])
    assert f_set(r) < idempotents(r) == r.full()
    assert gen_inv_subsemigroup(f_set(r)) == r.full()


def test_inverse_monoid_and_brandt_orders():
    assert symmetric_inverse_monoid(2).order == 7
    assert symmetric_inverse_monoid(3).order == 34
    assert brandt_semigroup(2).order == 5


def _regular_corpus():
    return [s for s in small_corpus(54) if classify(s).regular_star]


@pytest.mark.parametrize("s", _regular_corpus(), ids=lambda s: s.name)
def test_hermitian_identities_and_invariants(s):
    tab, star = oracles.as_lists(s)
    h = oracles.hermitian(tab, star)
    e = frozenset(x for x in range(s.order) if tab[x][x] == x)
    assert h == {x for x in e if star[x] == x}
    assert oracles.product(tab, h, h) == e
    assert check_hermitian_identities(s)
    assert all(regular_star_invariants(s).values())
    fs = {tab[tab[x][g]][star[x]] for x in range(s.order) for g in e}
    assert set(f_set(s)) == fs


@pytest.mark.parametrize("s", _regular_corpus(), ids=lambda s: s.name)
def test_regular_generation_formulas(s):
    rep = classify(s)
    subsets = (s.subset([i for i in range(s.order) if m >> i & 1]) for m in range(min(2 ** s.order, 512)))
    for t in subsets:
        g = genhs_formula(t)
        assert genhs_regular(t) == g
        if rep.orthodox_star:
            assert genhs_orthodox(t) == g


def test_hermitian_identities_requires_regular_star():
    with pytest.raises(NotRegularStar):
        hermitian_identities(zero_semigroup(2))
    # the Rees instance is regular * but its idempotents do not form a subsemigroup
    rees = nonnormal_rees_instance()
    assert classify(rees).regular_star and not classify(rees).orthodox_star
    with pytest.raises(NotRegularStar):
        genhs_orthodox(rees.empty())


def test_e_unitary_against_brute_force():
    for s in small_corpus(54):
        tab, _ = oracles.as_lists(s)
        e = frozenset(x for x in range(s.order) if tab[x][x] == x)
        assert is_e_unitary(s) == (oracles.omega(tab, e) == e)
    assert is_e_unitary(symmetric_group(3))
    assert not is_e_unitary(brandt_semigroup(2))


def test_inverse_simplicity_criterion():
    for s in small_corpus(54):
        if not classify(s).inverse:
            continue
        res = inverse_hs_simplicity(s)
        assert res.holds == is_hs_simple(s)
        for x, w in res.witnesses.items():
            if w is not None:
                assert s.mult(x, w) == w == s.mult(w, x)
    with pytest.raises(NotInverse):
        inverse_hs_simplicity(rectangular_band(2))


def test_orthodox_simplicity():
    for s in small_corpus(10):
        if classify(s).orthodox_star:
            assert orthodox_simplicity_agrees(s)


# commutative

@pytest.mark.parametrize("s", [s for s in small_corpus(8) if classify(s).commutative], ids=lambda s: s.name)
def test_commutative_legs(s):
    full_square = square_set(s) == s.full()
    kernels = {q.kernel for q in enumerate_group_quotients(s, True)}
    for m in range(2 ** s.order):
        t = s.subset([i for i in range(s.order) if m >> i & 1])
        leg1, leg2, leg3 = commutative_legs(t)
        assert leg1 == leg2
        assert leg3 is not None
        if full_square:
            assert leg1 == leg3
            assert check_commutative_equivalence(t)
        if leg1:
            # the omega-closure of an HS-stable set is always a kernel
            assert omega(t) in kernels
        assert genhs_commutative(t) == genhs_formula(t)


def test_kernel_leg_fails_without_full_square():
    # zero semigroup {0, a}: {0} is HS-stable but not closed (a0 = 0), so no kernel
    z = zero_semigroup(2)
    t = z.subset([0])
    assert commutative_legs(t) == (True, True, False)
    assert not check_commutative_equivalence(t)


def test_commutative_errors():
    s3 = symmetric_group(3)
    with pytest.raises(NotCommutative):
        commutative_legs(s3.full())
    with pytest.raises(NotCommutative):
        genhs_commutative(s3.full())


def test_commutative_leg3_skipped_when_large():
    z = cyclic_group(12)
    assert commutative_legs(z.full(), max_order=8)[2] is None


# semilattices

def test_semilattice_criterion_example():
    c = chain_semilattice(2)
    res = semilattice_product_criterion(c, [c.subset([0]), c.subset([1])])
    assert not res.equal and not res.dominated and res.agree
    assert res.witness == (2, 1, 1)
    res = semilattice_product_criterion(c, [c.full(), c.full()])
    assert res.equal and res.dominated and res.witness is None


def test_semilattice_criterion_against_brute_force():
    for s in small_corpus(5):
        if not classify(s).semilattice:
            continue
        tab, star = oracles.as_lists(s)
        nonempty = [a for a in oracles.all_subsets(s.order) if a]
        for sets in itertools.product(nonempty, repeat=2):
            union = sets[0] | sets[1]
            prod = oracles.product(tab, sets[0], sets[1])
            equal = oracles.generated(tab, star, union, False) == oracles.generated(tab, star, prod, False)
            res = semilattice_product_criterion(s, [s.subset(a) for a in sets])
            assert res.equal == equal and res.agree


def test_semilattice_errors():
    c = chain_semilattice(2)
    with pytest.raises(NotSemilattice):
        semilattice_product_criterion(cyclic_group(2), [cyclic_group(2).full()])
    with pytest.raises(EmptyInput):
        semilattice_product_criterion(c, [])
    with pytest.raises(EmptyInput):
        semilattice_product_criterion(c, [c.empty()])
    with pytest.raises(MixedParents):
        semilattice_product_criterion(c, [chain_semilattice(2).full()])


def test_hermitian_squares_are_idempotent_in_regular():
    for s in _regular_corpus():
        assert hermitian_squares(s) <= idempotents(s)
        assert complex_product([hermitian_squares(s)] * 2) == idempotents(s)
