import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from cosetduality import catalog
from cosetduality.perm import (CapExceeded, GroupHom, Perm, PermGroup, SubgroupFamily,
                               all_subgroups, brute_automorphisms, centralizer_in_sym,
                               close_generators, compose_rows, conjugate_rows,
                               conjugation_automorphism, double_cosets, enumerate_subgroups,
                               generated_subgroup, hom_from_generators, invert_rows, left_cosets,
                               normalizer_in_sym, orbits, right_cosets, trivial_chain)

import oracles

perms = st.integers(1, 7).flatmap(lambda n: st.permutations(list(range(n))).map(Perm))



class TestPerm:
    def test_composition_applies_right_factor_first(self):
        p = Perm.parse("(0 1)", 3)
        q = Perm.parse("(1 2)", 3)
        assert (p * q)(1) == p(q(1)) == 2
        assert p * q == Perm([1, 2, 0])

    def test_parse_and_cycles_round_trip(self):
        p = Perm.parse("(0 2 4)(1 3)", 6)
        assert p.cycles() == [(0, 2, 4), (1, 3)]
        assert p.cycle_type() == (3, 2, 1)
        assert p.order() == 6
        assert Perm.parse("()", 3).is_identity()

    def test_rejects_non_permutations(self):
        with pytest.raises(ValueError):
            Perm([0, 0, 1])
        with pytest.raises(ValueError):
            Perm.parse("(0 1", 3)
        with pytest.raises(ValueError):
            Perm.parse("(0 5)", 3)

    @given(perms)
    def test_inverse(self, p):
        e = Perm.identity(len(p))
        assert p * p.inverse() == e == p.inverse() * p
        assert p ** p.order() == e

    @given(st.integers(1, 6).flatmap(lambda n: st.tuples(*[st.permutations(list(range(n)))] * 3)))
    def test_associative(self, triple):
        a, b, c = map(Perm, triple)
        assert (a * b) * c == a * (b * c)

    @given(st.integers(1, 6).flatmap(lambda n: st.lists(st.permutations(list(range(n))),
                                                        min_size=2, max_size=2)))
    def test_row_helpers_match_scalar(self, pair):
        p, q = map(Perm, pair)
        P, Q = np.array([p]), np.array([q])
        assert compose_rows(P, Q)[0].tolist() == list(p * q)
        assert invert_rows(P)[0].tolist() == list(p.inverse())
        assert conjugate_rows(P, np.array(q))[0].tolist() == list(p * q * p.inverse())


ORDERS = {"trivial": 1, "Z2": 2, "Z3": 3, "Z4": 4, "Z8": 8, "Z2xZ2": 4, "S3": 6, "D4": 8,
          "Q8": 8, "S4": 24}
# subgroup counts from the subset-closure oracle (S4 from the standard lattice)
SUBGROUP_COUNTS = {"trivial": 1, "Z2": 2, "Z3": 2, "Z4": 3, "Z8": 4, "Z2xZ2": 5, "S3": 6,
                   "D4": 10, "Q8": 6, "S4": 30}


class TestGroups:
    @pytest.mark.parametrize("name", list(catalog.CATALOG))
    def test_orders(self, name):
        G = catalog.get(name)
        assert G.order == ORDERS[name]
        assert len(G.elements) == len(set(G.elements))

    def test_subgroups_match_subset_oracle(self, catalog_group):
        G = catalog_group
        found = set(enumerate_subgroups(G))
        assert found == oracles.subgroups_by_subsets(G)
        assert len(found) == SUBGROUP_COUNTS[G.name]

    def test_s4_subgroup_count(self):
        assert len(enumerate_subgroups(catalog.get("S4"))) == 30

    def test_table_is_composition(self, catalog_group):
        G = catalog_group
        for i, p in enumerate(G.elements):
            for j, q in enumerate(G.elements):
                assert G.elements[G.mul(i, j)] == p * q

    def test_from_elements_verifies_closure(self):
        with pytest.raises(ValueError):
            PermGroup.from_elements(3, [[0, 1, 2], [1, 2, 0]])
        G = PermGroup.from_elements(3, [[0, 1, 2], [1, 2, 0], [2, 0, 1]])
        assert G.order == 3 and G.is_abelian()

    def test_close_generators_s3(self):
        G = close_generators(3, [Perm.parse("(0 1)", 3), Perm.parse("(0 1 2)", 3)])
        assert G.order == 6

    def test_center(self, catalog_group):
        assert set(catalog_group.center()) == oracles.center_by_scan(catalog_group)

    def test_cosets_partition(self, catalog_group):
        G = catalog_group
        for U in enumerate_subgroups(G):
            for cos in (left_cosets(G, U), right_cosets(G, U)):
                assert sum(map(len, cos)) == G.order
                assert frozenset().union(*cos) == frozenset(range(G.order))
                assert len(cos) * len(U) == G.order
            D = double_cosets(G, U)
            assert sum(map(len, D)) == G.order
            assert all(len(d) % len(U) == 0 for d in D)

    def test_generated_subgroup(self):
        G = catalog.get("Z8")
        gen = next(i for i in range(8) if G.element_order(i) == 4)
        assert len(generated_subgroup(G, [gen])) == 4

    def test_subgroup_cap(self):
        with pytest.raises(CapExceeded):
            enumerate_subgroups(catalog.get("S4"), cap=10)


AUT_ORDERS = {"trivial": 1, "Z2": 1, "Z3": 2, "Z4": 2, "Z8": 4, "Z2xZ2": 6, "S3": 6,
              "D4": 8, "Q8": 24}


class TestAutomorphisms:
    def test_matches_bijection_oracle(self, catalog_group):
        G = catalog_group
        A = brute_automorphisms(G)
        assert {tuple(p) for p in A.elements} == oracles.automorphisms_by_bijections(G)
        assert A.order == AUT_ORDERS[G.name]

    def test_s4_aut(self):
        assert brute_automorphisms(catalog.get("S4")).order == 24

    def test_cap(self):
        with pytest.raises(CapExceeded):
            brute_automorphisms(catalog.get("S4"), cap=8)

    def test_conjugation_is_automorphism(self, catalog_group):
        G = catalog_group
        A = brute_automorphisms(G)
        for g in range(G.order):
            assert conjugation_automorphism(G, g) in A

    def test_hom_from_generators_rejects_non_hom(self):
        G = catalog.get("Z4")
        gen = G.small_generators()
        # sending a generator of Z4 to an element of order 2 extends
        two = next(i for i in range(4) if G.element_order(i) == 2)
        phi = hom_from_generators(G, G, gen, [two])
        assert phi is not None and len(phi.kernel()) == 2
        S3 = catalog.get("S3")
        t = next(i for i in range(6) if S3.element_order(i) == 2)
        assert hom_from_generators(G, S3, gen, [t]) is not None
        three = next(i for i in range(6) if S3.element_order(i) == 3)
        assert hom_from_generators(G, S3, gen, [three]) is None

    def test_group_hom_composition(self):
        G = catalog.get("S3")
        A = brute_automorphisms(G)
        a, b = (GroupHom(G, G, tuple(p)) for p in A.elements[1:3])
        c = a.then(b)
        assert c.is_homomorphism() and c.is_bijective()
        assert c.then(c.inverse()).images == tuple(range(6))


class TestSymmetricSearch:
    @pytest.mark.parametrize("n,cycles", [(3, "(0 1 2)"), (4, "(0 1)(2 3)"), (5, "(0 1 2)"),
                                          (6, "(0 1)(2 3)(4 5)"), (6, "(0 1 2)(3 4)")])
    def test_centralizer_of_cyclic_matches_brute(self, n, cycles):
        g = Perm.parse(cycles, n)
        H = close_generators(n, [g])
        C = centralizer_in_sym(n, H)
        assert {tuple(p) for p in C.elements} == set(oracles.commuting_perms(n, [g]))

    @pytest.mark.parametrize("name", ["S3", "Z2xZ2", "D4"])
    def test_centralizer_of_natural_action(self, name):
        G = catalog.get(name)
        C = centralizer_in_sym(G.degree, G)
        assert {tuple(p) for p in C.elements} == set(oracles.commuting_perms(G.degree, G.generators))

    @pytest.mark.parametrize("name", ["Z3", "Z4", "S3", "Z2xZ2", "D4"])
    def test_normalizer_matches_brute(self, name):
        G = catalog.get(name)
        N = normalizer_in_sym(G.degree, G)
        assert {tuple(p) for p in N.elements} == set(oracles.normalizing_perms(G.degree, G.elements))

    def test_caps(self):
        G = catalog.get("Z8")
        with pytest.raises(CapExceeded):
            centralizer_in_sym(8, G, cap=4)
        with pytest.raises(CapExceeded):
            normalizer_in_sym(8, G, cap=4)

    def test_orbits(self):
        H = close_generators(5, [Perm.parse("(0 1)(2 3 4)", 5)])
        assert orbits(H) == [(0, 1), (2, 3, 4)]


class TestSubgroupFamily:
    def test_all_subgroups_flags(self, catalog_group):
        S = all_subgroups(catalog_group)
        assert S.meet_closed and S.conjugation_closed and S.separating
        sizes = [len(m) for m in S]
        assert sizes == sorted(sizes, reverse=True)

    def test_non_separating(self):
        G = catalog.get("Z4")
        half = next(U for U in enumerate_subgroups(G) if len(U) == 2)
        S = SubgroupFamily(G, [range(4), half])
        assert S.meet_closed and S.conjugation_closed
        assert not S.separating and S.core == half

    def test_not_conjugation_closed(self):
        G = catalog.get("S3")
        t = next(U for U in enumerate_subgroups(G) if len(U) == 2)
        S = SubgroupFamily(G, [range(6), t, [G.identity]])
        assert S.meet_closed and not S.conjugation_closed

    def test_rejects_non_subgroup(self):
        G = catalog.get("Z4")
        with pytest.raises(ValueError):
            SubgroupFamily(G, [[0, 1]])

    def test_trivial_chain(self, catalog_group):
        S = trivial_chain(catalog_group)
        assert len(S) == (1 if catalog_group.order == 1 else 2)
