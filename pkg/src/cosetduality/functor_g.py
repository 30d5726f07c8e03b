"""Reconstructing a group from a full meet groupoid.

``G(M)`` consists of the permutations ``p`` of the carrier that preserve
meets and satisfy ``p(A·B) = p(A)·B``.  Such a ``p`` is determined by the
left *coset ``p(U)`` it picks for every idempotent ``U``; those choices form
a full filter, and the filters are found by a tree search.
"""
from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .groupoid import (EMPTY, UNDEFINED, Certificate, GroupoidIso, MeetGroupoid,
                       NotFullError, fullness_violations, idempotents, left_star_cosets,
                       right_star_cosets)
from .perm import GroupHom, Perm, PermGroup


@dataclass(frozen=True)
class FullFilter:
    """A left *coset for every idempotent, as sorted ``(idempotent, coset)`` pairs."""

    choice: tuple[tuple[int, int], ...]

    def __getitem__(self, U: int) -> int:
        return dict(self.choice)[U]

    def as_dict(self) -> dict[int, int]:
        return dict(self.choice)

    def to_json(self) -> str:
        return json.dumps({str(u): a for u, a in self.choice}, sort_keys=True)

    @classmethod
    def from_dict(cls, d: dict[int, int]) -> FullFilter:
        return cls(tuple(sorted((int(u), int(a)) for u, a in d.items())))


def idempotents_by_size(M: MeetGroupoid) -> list[int]:
    """Idempotents ordered so that each comes before every idempotent below it."""
    down = M.leq_matrix.sum(axis=0)
    return sorted(idempotents(M), key=lambda u: (-int(down[u]), u))


def is_groupoid_aut(M: MeetGroupoid, p) -> Certificate:
    """Whether ``p`` fixes ∅, preserves ∧ and satisfies ``p(A·B) = p(A)·B``."""
    f = np.asarray(p, dtype=np.int64)
    m = M.size
    if f.shape != (m,) or sorted(f.tolist()) != list(range(m)):
        return Certificate(False, ("bijective",))
    if f[EMPTY] != EMPTY:
        return Certificate(False, ("empty",))
    mt = M.meet_table
    bad = np.argwhere(mt[np.ix_(f, f)] != f[mt])
    if len(bad):
        a, b = map(int, bad[0])
        return Certificate(False, ("meet", a, b))
    P = M.product_table
    a_idx, b_idx = np.nonzero(P != UNDEFINED)
    lhs = f[P[a_idx, b_idx]]
    rhs = P[f[a_idx], b_idx]
    bad = np.flatnonzero(lhs != rhs)
    if len(bad):
        k = bad[0]
        return Certificate(False, ("product", int(a_idx[k]), int(b_idx[k])))
    return Certificate(True)


def _require_full(M: MeetGroupoid):
    bad = fullness_violations(M)
    if bad:
        tag, w = bad[0]
        raise NotFullError(f"not a full meet groupoid: axiom {tag} fails at {w}")


def enumerate_full_filters(M: MeetGroupoid) -> list[FullFilter]:
    """All full filters of a finite full meet groupoid, in canonical order."""
    _require_full(M)
    order = idempotents_by_size(M)
    if not order:
        return []
    leq = M.leq_matrix
    mt = M.meet_table
    candidates = {U: left_star_cosets(M, U) for U in order}
    right = {U: right_star_cosets(M, U) for U in order}
    bottom = min(order, key=lambda u: int(leq[:, u].sum()))
    out: list[FullFilter] = []
    chosen: dict[int, int] = {}

    def consistent(U, A):
        for V, B in chosen.items():
            if leq[U, V] and not leq[A, B]:
                return False
            if mt[A, B] == EMPTY:
                # a filter is downward directed
                return False
        return True

    def is_full():
        # upward closure of the filter is everything above the bottom choice
        base = chosen[bottom]
        return all(any(leq[base, B] for B in right[V]) for V in order)

    def extend(k):
        if k == len(order):
            if is_full():
                out.append(FullFilter.from_dict(chosen))
            return
        U = order[k]
        for A in candidates[U]:
            if consistent(U, A):
                chosen[U] = A
                extend(k + 1)
                del chosen[U]

    extend(0)
    return sorted(out, key=lambda R: R.choice)


def filter_to_aut(M: MeetGroupoid, R: FullFilter) -> Perm:
    """The automorphism picking ``R[U]`` at ``U``: ``p(B) = R[U]·B`` for ``B`` a right ``U`` *coset."""
    choice = R.as_dict()
    P, inv = M.product_table, M.inverse_table
    images = [EMPTY] * M.size
    for b in range(1, M.size):
        U = int(P[b, inv[b]])
        if U == UNDEFINED or U not in choice:
            raise ValueError(f"element {M.label(b)} has no right frame among the idempotents")
        c = int(P[choice[U], b])
        if c == UNDEFINED:
            raise ValueError(f"incoherent filter: {M.label(choice[U])}·{M.label(b)} undefined")
        images[b] = c
    if sorted(images) != list(range(M.size)):
        raise ValueError("incoherent filter: induced map is not a bijection")
    return Perm._raw(images)


def aut_to_filter(M: MeetGroupoid, p) -> FullFilter:
    cert = is_groupoid_aut(M, p)
    if not cert:
        raise ValueError(f"not an automorphism of the groupoid: {cert.witness}")
    return FullFilter.from_dict({U: int(p[U]) for U in idempotents(M)})


def g_of_m(M: MeetGroupoid) -> PermGroup:
    """``G(M)`` as a permutation group on the carrier ids (cached on ``M``)."""
    if "G" not in M._cache:
        perms = [filter_to_aut(M, R) for R in enumerate_full_filters(M)]
        for p in perms:
            cert = is_groupoid_aut(M, p)
            if not cert:
                raise AssertionError(f"filter produced a non-automorphism: {cert.witness}")
        verify = len(perms) <= 256
        M._cache["G"] = PermGroup.from_elements(M.size, perms, name="G(M)", verify=verify)
    return M._cache["G"]


def g_on_morphism(theta: GroupoidIso) -> GroupHom:
    """``G(θ)``: ``p ↦ θ∘p∘θ⁻¹`` from ``G(M)`` to ``G(N)``."""
    cert = theta.check()
    if not cert:
        raise ValueError(f"theta is not an isomorphism: {cert.witness}")
    GM, GN = g_of_m(theta.source), g_of_m(theta.target)
    t = np.asarray(theta.images)
    ti = np.asarray(theta.inverse().images)

    def conj(p):
        return Perm._raw(t[np.asarray(p)[ti]].tolist())

    hom = GroupHom.from_function(GM, GN, conj)
    if not (hom.is_bijective() and hom.is_homomorphism()):
        raise AssertionError("G(theta) is not a group isomorphism")
    return hom


def hat(M: MeetGroupoid, a: int) -> frozenset[int]:
    """``{p ∈ G(M) : p(U) = a}`` for ``a`` a left ``U`` *coset, as element indices of ``g_of_m(M)``."""
    M._check(a)
    if a == EMPTY:
        return frozenset()
    key = ("hat", a)
    if key not in M._cache:
        U = M.mul(M.inv(a), a)
        if U is None:
            raise ValueError(f"{M.label(a)} is not a *coset")
        G = g_of_m(M)
        M._cache[key] = frozenset(i for i, p in enumerate(G.elements) if p[U] == a)
    return M._cache[key]
