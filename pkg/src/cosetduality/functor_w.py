"""The coset meet groupoid W(G, S) of a group with a family of subgroups."""
from __future__ import annotations

import numpy as np

from .groupoid import EMPTY, UNDEFINED, GroupoidIso, MeetGroupoid
from .perm import (CLOSURE_CAP, CapExceeded, GroupHom, PermGroup, SubgroupFamily,
                   conjugate_subgroup, left_cosets)


class BasisNotClosedError(ValueError):
    pass


def close_basis(G: PermGroup, members, cap: int = CLOSURE_CAP) -> SubgroupFamily:
    """Smallest family containing ``members`` closed under ∩ and conjugation by ``G``."""
    family = {frozenset(G.index(i) for i in m) for m in members}
    gens = G.small_generators()
    frontier = set(family)
    while frontier:
        new = set()
        for H in frontier:
            for g in gens:
                K = conjugate_subgroup(G, g, H)
                if K not in family:
                    new.add(K)
            for K in family:
                J = H & K
                if J not in family:
                    new.add(J)
        family |= new
        if len(family) > cap:
            raise CapExceeded(f"basis closure exceeds {cap} subgroups")
        frontier = new
    return SubgroupFamily(G, family)


class CosetGroupoid(MeetGroupoid):
    """``W(G, S)``: ∅ together with all left cosets ``gU``, ``U ∈ S``.

    Ids are ordered by basis position (largest subgroups first) and then by
    coset representative, the minimal element index of the coset.
    """

    def __init__(self, group: PermGroup, basis: SubgroupFamily, product, inverse, meet,
                 backing, coset_index):
        labels = ["∅"] + [_label(group, basis, u, r) for u, r in coset_index[1:]]
        super().__init__(product, inverse, meet, labels=labels, backing=backing)
        self.group = group
        self.basis = basis
        self.coset_index: tuple = tuple(coset_index)
        self._id_of = {s: k for k, s in enumerate(self.backing)}

    @property
    def separating(self) -> bool:
        return self.basis.separating

    def coset_id(self, cos) -> int:
        return self._id_of[frozenset(cos)]

    def find_coset(self, cos) -> int | None:
        return self._id_of.get(frozenset(cos))

    def left_frame(self, a: int) -> int:
        """Basis position of the subgroup ``U`` with ``a = gU``."""
        return self.coset_index[a][0]

    def provenance_json(self) -> dict:
        from .catalog import group_to_json
        return {"group": group_to_json(self.group), "basis": self.basis.to_json()}

    def to_json(self) -> dict:
        out = super().to_json()
        out["provenance"] = self.provenance_json()
        return out


def _label(G, S, u, r):
    return f"{_cyc(G.elements[r])}U{u}"


def _cyc(p) -> str:
    return "".join("(" + " ".join(map(str, c)) + ")" for c in p.cycles()) or "e"


def build_w(G: PermGroup, S: SubgroupFamily) -> CosetGroupoid:
    """Tables of ``W(G, S)`` computed by set arithmetic on cosets."""
    if S.parent != G:
        raise ValueError("basis belongs to a different group")
    if not S.meet_closed:
        raise BasisNotClosedError("basis is not closed under intersection")
    if not S.conjugation_closed:
        raise BasisNotClosedError("basis is not closed under conjugation")

    backing: list[frozenset[int]] = [frozenset()]
    coset_index: list = [None]
    for u, U in enumerate(S.members):
        for C in left_cosets(G, U):
            backing.append(C)
            coset_index.append((u, min(C)))
    m = len(backing)
    id_of = {s: k for k, s in enumerate(backing)}
    T = G.table
    ginv = np.asarray(G.inverses)

    inverse = [0] * m
    for a in range(1, m):
        inverse[a] = id_of[frozenset(int(x) for x in ginv[list(backing[a])])]

    meet = np.zeros((m, m), dtype=np.int64)
    for a in range(1, m):
        meet[a, a] = a
        for b in range(a + 1, m):
            c = id_of[backing[a] & backing[b]] if backing[a] & backing[b] else EMPTY
            meet[a, b] = meet[b, a] = c

    # a·b is defined iff a is a left and b a right coset of the same subgroup,
    # i.e. b⁻¹ is a left coset of it
    frame = [None] + [ci[0] for ci in coset_index[1:]]
    prod = np.full((m, m), UNDEFINED, dtype=np.int64)
    prod[EMPTY, EMPTY] = EMPTY
    for a in range(1, m):
        A = sorted(backing[a])
        for b in range(1, m):
            if frame[a] != frame[inverse[b]]:
                continue
            AB = frozenset(np.unique(T[np.ix_(A, sorted(backing[b]))]).tolist())
            prod[a, b] = id_of[AB]
    return CosetGroupoid(G, S, prod, inverse, meet, backing, coset_index)


def w_on_morphism(alpha: GroupHom, MG: CosetGroupoid, MH: CosetGroupoid) -> GroupoidIso:
    """``W(α)``: the carrier bijection ``A ↦ α(A)``."""
    if alpha.source != MG.group or alpha.target != MH.group:
        raise ValueError("alpha does not run between the groups of MG and MH")
    if not alpha.is_bijective():
        raise ValueError("alpha is not bijective")
    if MG.basis.image(alpha) != MH.basis:
        raise ValueError("alpha does not carry the basis of G onto the basis of H")
    images = tuple(MH.coset_id(alpha.map_set(A)) for A in MG.backing)
    iso = GroupoidIso(MG, MH, images)
    cert = iso.check()
    if not cert:
        raise ValueError(f"induced carrier map is not an isomorphism: {cert.witness}")
    return iso
