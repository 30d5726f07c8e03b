import pytest

from cosetduality import catalog
from cosetduality.functor_w import BasisNotClosedError, build_w, close_basis, w_on_morphism
from cosetduality.groupoid import check_axioms
from cosetduality.perm import (CapExceeded, GroupHom, SubgroupFamily, all_subgroups,
                               brute_automorphisms, enumerate_subgroups)

import oracles

# 1 + sum of indices over all subgroups
W_SIZES = {"trivial": 2, "Z2": 4, "Z3": 5, "Z4": 8, "Z8": 16, "Z2xZ2": 12, "S3": 19,
           "D4": 36, "Q8": 20}


def test_size_is_one_plus_index_sum(catalog_group):
    G = catalog_group
    S = all_subgroups(G)
    W = build_w(G, S)
    assert W.size == 1 + sum(G.order // len(U) for U in S)
    assert W.size == W_SIZES[G.name]


def test_s4_size():
    G = catalog.get("S4")
    assert build_w(G, all_subgroups(G)).size == 235


def test_tables_match_set_arithmetic(catalog_group):
    G = catalog_group
    W = build_w(G, all_subgroups(G))
    inv = G.inverses
    frame = {}
    for a in range(1, W.size):
        A = W.backing[a]
        g = min(A)
        frame[a] = oracles.set_product(G, [G.inv(g)], A)
    for a in range(1, W.size):
        A = W.backing[a]
        assert W.backing[W.inv(a)] == frozenset(inv[x] for x in A)
        for b in range(1, W.size):
            B = W.backing[b]
            assert W.backing[W.meet(a, b)] == A & B
            prod = W.mul(a, b)
            # a·b is defined exactly when the left frame of a is the right frame of b
            b_right = oracles.set_product(G, B, [G.inv(min(B))])
            if frame[a] == b_right:
                assert prod is not None
                assert W.backing[prod] == oracles.set_product(G, A, B)
            else:
                assert prod is None


def test_ids_are_canonical():
    W = build_w(catalog.get("S3"), all_subgroups(catalog.get("S3")))
    sizes = [len(W.backing[a]) for a in range(1, W.size)]
    assert sizes == sorted(sizes, reverse=True)
    assert W.label(0) == "∅"


def test_rejects_unclosed_basis():
    G = catalog.get("S3")
    t = next(U for U in enumerate_subgroups(G) if len(U) == 2)
    with pytest.raises(BasisNotClosedError):
        build_w(G, SubgroupFamily(G, [range(6), t, [G.identity]]))
    G4 = catalog.get("Z2xZ2")
    a, b = [U for U in enumerate_subgroups(G4) if len(U) == 2][:2]
    with pytest.raises(BasisNotClosedError):
        build_w(G4, SubgroupFamily(G4, [range(4), a, b]))


def test_close_basis():
    G = catalog.get("S3")
    t = next(U for U in enumerate_subgroups(G) if len(U) == 2)
    S = close_basis(G, [range(6), t])
    assert len(S) == 5                   # S3, three reflections, trivial
    assert S.meet_closed and S.conjugation_closed
    with pytest.raises(CapExceeded):
        close_basis(G, [range(6), t], cap=3)


def test_non_separating_still_valid():
    G = catalog.get("Z4")
    half = next(U for U in enumerate_subgroups(G) if len(U) == 2)
    W = build_w(G, SubgroupFamily(G, [range(4), half]))
    assert W.size == 4 and not W.separating
    assert check_axioms(W).passed


def test_morphism_is_isomorphism(catalog_group):
    G = catalog_group
    S = all_subgroups(G)
    W = build_w(G, S)
    for phi in brute_automorphisms(G).elements:
        iso = w_on_morphism(GroupHom(G, G, tuple(phi)), W, W)
        assert iso.check()


def test_morphism_functorial():
    G = catalog.get("Q8")
    S = all_subgroups(G)
    W = build_w(G, S)
    auts = [GroupHom(G, G, tuple(p)) for p in brute_automorphisms(G).elements[:6]]
    for a in auts:
        for b in auts:
            lhs = w_on_morphism(a.then(b), W, W)
            rhs = w_on_morphism(a, W, W).then(w_on_morphism(b, W, W))
            assert lhs.images == rhs.images


def test_morphism_must_carry_basis():
    G = catalog.get("Z2xZ2")
    a = next(U for U in enumerate_subgroups(G) if len(U) == 2)
    S = close_basis(G, [range(4), a, [G.identity]])
    W = build_w(G, S)
    swap = next(p for p in brute_automorphisms(G).elements
                if frozenset(p[x] for x in a) != a)
    with pytest.raises(ValueError):
        w_on_morphism(GroupHom(G, G, tuple(swap)), W, W)
