import pytest

from hsstab.constructions import chain_semilattice, cyclic_group, symmetric_group, zero_semigroup
from hsstab.errors import NotInvSubsemigroup, TooLarge
from hsstab.hs import is_hs_stable
from hsstab.morphic import (
    Congruence,
    as_group_quotient,
    check_involution_preservation,
    check_kernel_characterization,
    enumerate_congruences,
    enumerate_group_quotients,
    greatest_group_quotient,
    is_congruence,
)

import oracles
from conftest import small_corpus


def _brute_congruences(s, star):
    tab, st = oracles.as_lists(s)
    out = set()
    for part in oracles.set_partitions(range(s.order)):
        block = {x: i for i, b in enumerate(part) for x in b}
        ok = all(block[tab[a][c]] == block[tab[b][c]] and block[tab[c][a]] == block[tab[c][b]]
                 for p in part for a in p for b in p for c in range(s.order))
        if star:
            ok = ok and all(block[st[a]] == block[st[b]] for p in part for a in p for b in p)
        if ok:
            out.add(frozenset(frozenset(p) for p in part))
    return out


def _as_partition(c):
    return frozenset(frozenset(b) for b in c.blocks())


@pytest.mark.parametrize("s", small_corpus(7), ids=lambda s: s.name)
@pytest.mark.parametrize("star", [False, True])
def test_congruences_match_brute_force(s, star):
    want = _brute_congruences(s, star)
    for method in ("closure", "partitions"):
        got = enumerate_congruences(s, star=star, method=method)
        assert {_as_partition(c) for c in got} == want
        assert all(is_congruence(s, c.labels, star=star) for c in got)
        assert all(c.star_compatible == (star or c.star_compatible) for c in got)


def test_zero_semigroup_every_partition_is_congruence():
    # all products are 0, so any equivalence is compatible: Bell(4) = 15
    assert len(enumerate_congruences(zero_semigroup(4))) == 15


def test_congruence_ordering_and_labels():
    cs = enumerate_congruences(chain_semilattice(3))
    assert cs[0].nblocks == 3 and cs[-1].nblocks == 1
    c = Congruence(chain_semilattice(3), (5, 5, 2))
    assert c.labels == (0, 0, 1)
    assert c.blocks() == [(0, 1), (2,)]


def test_method_and_size_errors():
    with pytest.raises(ValueError):
        enumerate_congruences(chain_semilattice(2), method="magic")
    with pytest.raises(TooLarge):
        enumerate_congruences(symmetric_group(4))


@pytest.mark.parametrize("s", small_corpus(8), ids=lambda s: s.name)
@pytest.mark.parametrize("star", [False, True])
def test_group_kernels_match_brute_force(s, star):
    tab, st = oracles.as_lists(s)
    want = oracles.group_kernels_brute(tab, st, star)
    got = enumerate_group_quotients(s, star, max_order=8)
    assert {frozenset(q.kernel) for q in got} == want
    for q in got:
        assert q.table[q.identity].tolist() == list(range(q.order))
        if star:
            assert q.preserves_involution_direct() and check_involution_preservation(q)
            assert is_hs_stable(q.kernel)


def test_s3_quotients():
    s3 = symmetric_group(3)
    kernels = sorted(len(q.kernel) for q in enumerate_group_quotients(s3, True))
    assert kernels == [1, 3, 6]
    assert greatest_group_quotient(s3, True).order == 6


def test_trivial_star_cyclic_group():
    # phi(a*) = phi(a)^-1 forces every image to have order <= 2
    z4 = cyclic_group(4, trivial_star=True)
    orders = sorted(q.order for q in enumerate_group_quotients(z4, True))
    assert orders == [1, 2]
    assert sorted(q.order for q in enumerate_group_quotients(z4, False)) == [1, 2, 4]


def test_kernel_characterization():
    s3 = symmetric_group(3)
    assert check_kernel_characterization(s3.subset(["e", "(123)", "(132)"]))
    assert not check_kernel_characterization(s3.subset(["e", "(12)"]))
    with pytest.raises(NotInvSubsemigroup):
        check_kernel_characterization(s3.subset(["(12)"]))


def test_as_group_quotient_rejects_non_groups():
    c = enumerate_congruences(chain_semilattice(2))[0]
    assert c.nblocks == 2
    assert as_group_quotient(c) is None
