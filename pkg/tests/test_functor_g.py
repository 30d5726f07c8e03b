import pytest

from cosetduality import catalog
from cosetduality.functor_g import (FullFilter, aut_to_filter, enumerate_full_filters,
                                    filter_to_aut, g_of_m, g_on_morphism, hat, is_groupoid_aut)
from cosetduality.functor_w import build_w, w_on_morphism
from cosetduality.groupoid import MeetGroupoid, NotFullError, idempotents, one_object_groupoid
from cosetduality.perm import (GroupHom, Perm, SubgroupFamily, all_subgroups, brute_automorphisms,
                               enumerate_subgroups, is_subgroup, left_cosets, trivial_chain)


def test_filter_count_is_group_order(catalog_group):
    G = catalog_group
    assert len(enumerate_full_filters(build_w(G, all_subgroups(G)))) == G.order


def test_filter_count_chain_basis(catalog_group):
    G = catalog_group
    assert len(enumerate_full_filters(build_w(G, trivial_chain(G)))) == G.order


def _normal(G, order):
    return [U for U in enumerate_subgroups(G) if len(U) == order
            and all(frozenset(G.mul(G.mul(g, u), G.inv(g)) for u in U) == U for g in range(G.order))]


@pytest.mark.parametrize("name,order", [("Z4", 2), ("Z4", 4), ("S3", 3), ("D4", 2), ("Q8", 2)])
def test_non_separating_count_is_coset_count(name, order):
    G = catalog.get(name)
    K = _normal(G, order)[0]
    S = SubgroupFamily(G, [range(G.order), K])
    assert S.separating == (len(K) == 1)
    assert len(enumerate_full_filters(build_w(G, S))) == len(left_cosets(G, K))


def test_filters_give_automorphisms(catalog_group):
    G = catalog_group
    W = build_w(G, all_subgroups(G))
    for R in enumerate_full_filters(W):
        p = filter_to_aut(W, R)
        assert is_groupoid_aut(W, p)
        assert aut_to_filter(W, p) == R


def test_g_of_m_is_closed_and_sized(catalog_group):
    G = catalog_group
    W = build_w(G, all_subgroups(G))
    GM = g_of_m(W)
    assert GM.order == G.order
    assert GM.is_abelian() == G.is_abelian()
    assert sorted(GM.element_order(i) for i in range(GM.order)) == \
        sorted(G.element_order(i) for i in range(G.order))


def test_is_groupoid_aut_witnesses():
    W = build_w(catalog.get("S3"), all_subgroups(catalog.get("S3")))
    assert is_groupoid_aut(W, range(W.size))
    bad = list(range(W.size))
    bad[0], bad[1] = 1, 0
    assert is_groupoid_aut(W, bad).witness == ("empty",)
    bad = list(range(W.size))
    bad[1], bad[2] = 2, 1
    assert is_groupoid_aut(W, bad).witness[0] in ("meet", "product")
    assert is_groupoid_aut(W, [0] * W.size).witness == ("bijective",)


def test_hat_of_idempotent_is_subgroup(catalog_group):
    G = catalog_group
    W = build_w(G, all_subgroups(G))
    GM = g_of_m(W)
    for U in idempotents(W):
        H = hat(W, U)
        assert is_subgroup(GM, H)
        assert len(H) == len(W.backing[U])
    assert hat(W, 0) == frozenset()


def test_hat_of_coset_is_coset(catalog_group):
    G = catalog_group
    W = build_w(G, all_subgroups(G))
    GM = g_of_m(W)
    for a in range(1, W.size):
        U = W.mul(W.inv(a), a)
        H, HU = hat(W, a), hat(W, U)
        g = min(H)
        assert H == frozenset(GM.mul(g, u) for u in HU)


def test_trivial_groupoid():
    M = one_object_groupoid()
    assert g_of_m(M).order == 1


def test_not_full_rejected():
    P = [[0, -1, -1], [-1, 1, -1], [-1, -1, 2]]
    M = MeetGroupoid(P, [0, 1, 2], [[0, 0, 0], [0, 1, 1], [0, 1, 2]])
    with pytest.raises(NotFullError):
        enumerate_full_filters(M)


def test_g_on_morphism_is_conjugation():
    G = catalog.get("D4")
    W = build_w(G, all_subgroups(G))
    GM = g_of_m(W)
    for phi in brute_automorphisms(G).elements:
        theta = w_on_morphism(GroupHom(G, G, tuple(phi)), W, W)
        h = g_on_morphism(theta)
        t = Perm(theta.images)
        for i, p in enumerate(GM.elements):
            assert GM.elements[h.images[i]] == t * p * t.inverse()


def test_full_filter_json():
    R = FullFilter.from_dict({3: 5, 1: 2})
    assert R.choice == ((1, 2), (3, 5))
    assert R[3] == 5
    assert R.to_json() == '{"1": 2, "3": 5}'
