"""The two round trips ``G -> W(G) -> G(W(G))`` and ``M -> G(M) -> W(G(M))``.

``η_G`` sends ``g`` to left translation ``A ↦ gA`` of the coset groupoid.
``η_M`` sends ``A`` to ``Â``, the set of automorphisms of ``M`` taking the
left frame of ``A`` to ``A``.  For a groupoid not built from a group, the
basis of ``G(M)`` is taken to be ``{Û : U idempotent}``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any

import numpy as np

from .autgroup import NonSeparatingBasisError, inn_out
from .functor_g import g_of_m, g_on_morphism, hat
from .functor_w import CosetGroupoid, build_w, w_on_morphism
from .groupoid import (EMPTY, GroupoidIso, MeetGroupoid, check_axioms, fullness_violations,
                       idempotents)
from .perm import (AUTOMORPHISM_CAP, CapExceeded, GroupHom, Perm, PermGroup, SubgroupFamily,
                   all_subgroups, brute_automorphisms, double_cosets, is_roelcke_precompact)
from .report import CheckResult

BASIS_ASSUMPTION = "basis of G(M) is {hat(U) : U idempotent of M}"


class NotAnObjectError(ValueError):
    """The groupoid fails the conditions for the reverse round trip."""


@dataclass
class NaturalitySquare:
    """``right∘top = bottom∘left``, checked pointwise."""

    top: Any
    bottom: Any
    left: Any
    right: Any
    commutes: bool
    witness: Any = None
    checked: int = 0

    def __bool__(self):
        return self.commutes

    def to_json(self) -> dict:
        out = {"commutes": self.commutes, "checked": self.checked}
        if self.witness is not None:
            out["witness"] = list(self.witness)
        return out


# -- η_G --------------------------------------------------------------------

def translation(W: CosetGroupoid, g: int) -> Perm:
    """The carrier permutation ``A ↦ gA`` of ``W(G, S)``."""
    T = W.group.table
    return Perm._raw([EMPTY] + [W.coset_id(frozenset(T[g, sorted(A)].tolist()))
                                for A in W.backing[1:]])


def eta_g(G: PermGroup, S: SubgroupFamily, W: CosetGroupoid | None = None,
          require_separating: bool = True) -> GroupHom:
    """``η_G: G -> G(W(G, S))``, verified to be a homomorphism onto ``G(W)``.

    With ``require_separating=False`` a non-separating basis is accepted and
    the result is the surjection whose kernel is the core of ``S``.
    """
    if require_separating and not S.separating:
        raise NonSeparatingBasisError(
            f"basis core has {len(S.core)} elements; η_G is not injective")
    W = W if W is not None else build_w(G, S)
    GW = g_of_m(W)
    images = []
    for g in range(G.order):
        idx = GW.find(translation(W, g))
        if idx is None:
            raise AssertionError(f"translation by element {g} is not in G(W)")
        images.append(idx)
    hom = GroupHom(G, GW, tuple(images))
    if not hom.is_homomorphism():
        raise AssertionError("η_G is not a homomorphism")
    if hom.image() != frozenset(range(GW.order)):
        raise AssertionError("η_G is not onto G(W)")
    if hom.kernel() != S.core:
        raise AssertionError("kernel of η_G differs from the basis core")
    return hom


# -- η_M --------------------------------------------------------------------

def hat_family(M: MeetGroupoid) -> SubgroupFamily:
    """``{Û : U idempotent}`` as a family of subgroups of ``G(M)``."""
    return SubgroupFamily(g_of_m(M), {hat(M, U) for U in idempotents(M)})


def mm_object_violations(M: MeetGroupoid) -> list[str]:
    """Reasons ``M`` fails to be an object of the groupoid category (empty when it is one)."""
    if not check_axioms(M, fullness=False).passed:
        return ["axioms"]
    if fullness_violations(M):
        return ["not full"]
    fam = hat_family(M)
    out = []
    if not fam.meet_closed:
        out.append("hat family not meet-closed")
    if not fam.conjugation_closed:
        out.append("hat family not conjugation-closed")
    if not fam.separating:
        out.append("hat family not separating")
    if any(not hat(M, U) for U in idempotents(M)):
        out.append("empty hat")
    return out


def is_object_of_MM(M: MeetGroupoid) -> bool:
    return not mm_object_violations(M)


def eta_m(M: MeetGroupoid) -> GroupoidIso:
    """``η_M: M -> W(G(M))``, ``A ↦ Â``, verified to be a meet-groupoid isomorphism."""
    bad = mm_object_violations(M)
    if bad:
        raise NotAnObjectError("; ".join(bad))
    GM = g_of_m(M)
    W2 = build_w(GM, hat_family(M))
    images = []
    for a in range(M.size):
        b = W2.find_coset(hat(M, a))
        if b is None:
            raise AssertionError(f"hat of {M.label(a)} is not a coset of the hat family")
        images.append(b)
    iso = GroupoidIso(M, W2, tuple(images))
    cert = iso.check()
    if not cert:
        raise AssertionError(f"η_M is not an isomorphism: {cert.witness}")
    return iso


def hat_identity_checks(M: MeetGroupoid) -> list[CheckResult]:
    """The identities making ``A ↦ Â`` a meet-groupoid embedding, checked over all pairs."""
    GM = g_of_m(M)
    T = GM.table
    inv = np.asarray(GM.inverses)
    m = M.size
    H = [hat(M, a) for a in range(m)]

    def setprod(X, Y):
        if not X or not Y:
            return frozenset()
        return frozenset(np.unique(T[np.ix_(sorted(X), sorted(Y))]).tolist())

    def first(pred):
        return next(((a, b) for a in range(m) for b in range(m) if pred(a, b)), None)

    out = []
    w = first(lambda a, b: H[M.meet(a, b)] != H[a] & H[b])
    out.append(CheckResult("hat-meet", w is None, w))
    w = first(lambda a, b: M.mul(a, b) is not None and H[M.mul(a, b)] != setprod(H[a], H[b]))
    out.append(CheckResult("hat-product", w is None, w))
    w = next((a for a in range(m) if H[M.inv(a)] != frozenset(inv[sorted(H[a])].tolist())), None)
    out.append(CheckResult("hat-inverse", w is None, w))
    out.append(CheckResult("hat-injective", len(set(H)) == m))
    w = first(lambda a, b: M.leq(a, b) != (H[a] <= H[b]))
    out.append(CheckResult("hat-order", w is None, w))
    w = next((a for a in range(1, m) if not H[a]), None)
    out.append(CheckResult("hat-nonempty", w is None, w))
    return out


# -- naturality -------------------------------------------------------------

def check_naturality_g(alpha: GroupHom, S_G: SubgroupFamily | None = None,
                       S_H: SubgroupFamily | None = None) -> NaturalitySquare:
    """``G(W(α))(η_G(g)) = η_H(α(g))`` for every ``g``, compared at every carrier point."""
    G, H = alpha.source, alpha.target
    S_G = S_G if S_G is not None else all_subgroups(G)
    S_H = S_H if S_H is not None else all_subgroups(H)
    MG, MH = build_w(G, S_G), build_w(H, S_H)
    theta = w_on_morphism(alpha, MG, MH)
    upsilon = g_on_morphism(theta)
    eG, eH = eta_g(G, S_G, MG), eta_g(H, S_H, MH)
    HW = eH.target
    for g in range(G.order):
        lhs = HW.elements[upsilon.images[eG.images[g]]]
        rhs = HW.elements[eH.images[alpha.images[g]]]
        if lhs != rhs:
            x = next(i for i in range(MH.size) if lhs[i] != rhs[i])
            return NaturalitySquare(alpha, upsilon, eG, eH, False, (g, x), g + 1)
    return NaturalitySquare(alpha, upsilon, eG, eH, True, None, G.order * MH.size)


def check_naturality_m(theta: GroupoidIso) -> NaturalitySquare:
    """``η_N(θ(A)) = W(G(θ))(Â)`` for every ``A``, compared as subsets of ``G(N)``."""
    M, N = theta.source, theta.target
    gt = g_on_morphism(theta)
    eM, eN = eta_m(M), eta_m(N)
    upsilon = w_on_morphism(gt, eM.target, eN.target)
    for a in range(M.size):
        if hat(N, theta(a)) != gt.map_set(hat(M, a)):
            return NaturalitySquare(theta, upsilon, eM, eN, False, (a,), a + 1)
        if eN(theta(a)) != upsilon(eM(a)):
            return NaturalitySquare(theta, upsilon, eM, eN, False, (a,), a + 1)
    return NaturalitySquare(theta, upsilon, eM, eN, True, None, M.size)


# -- sampled morphisms ------------------------------------------------------

def relabel(G: PermGroup, pi) -> tuple[PermGroup, GroupHom]:
    """``H = πGπ⁻¹`` on the same points, with the isomorphism ``g ↦ πgπ⁻¹``."""
    pi = Perm(pi)
    pinv = pi.inverse()
    conj = [pi * g * pinv for g in G.elements]
    name = f"{G.name}'" if G.name else None
    H = PermGroup(G.degree, sorted(conj), name=name)
    return H, GroupHom(G, H, tuple(H.index(c) for c in conj))


def sample_isomorphisms(G: PermGroup, count: int = 20, seed: int = 0,
                        cap: int = AUTOMORPHISM_CAP) -> list[GroupHom]:
    """``count`` isomorphisms ``G -> πGπ⁻¹`` for random relabelings ``π``, each
    preceded by a random automorphism of ``G`` when ``Aut(G)`` is within the cap."""
    rng = np.random.default_rng(seed)
    try:
        auts = brute_automorphisms(G, cap).elements
    except CapExceeded:
        auts = [Perm.identity(G.order)]
    out = []
    for _ in range(count):
        pi = rng.permutation(G.degree).tolist()
        phi = auts[int(rng.integers(len(auts)))]
        H, c = relabel(G, pi)
        out.append(GroupHom(G, H, tuple(c.images[phi[g]] for g in range(G.order))))
    return out


def basis_invariance_check(alpha: GroupHom) -> CheckResult:
    """An isomorphism carries the all-subgroups basis onto the all-subgroups basis."""
    ok = all_subgroups(alpha.source).image(alpha) == all_subgroups(alpha.target)
    return CheckResult("all-subgroups-basis-invariant", ok)


def double_coset_check(G: PermGroup, S: SubgroupFamily) -> CheckResult:
    """Every basis subgroup has finitely many double cosets, and they partition ``G``."""
    counts = []
    for U in S:
        D = double_cosets(G, U)
        if sum(map(len, D)) != G.order or frozenset().union(*D) != frozenset(range(G.order)):
            return CheckResult("double-cosets-partition", False, sorted(U))
        if not is_roelcke_precompact(G, U):
            return CheckResult("double-cosets-finite", False, sorted(U))
        counts.append(len(D))
    return CheckResult("double-cosets-finite", True, detail={"counts": counts})


def functoriality_checks(a1: GroupHom, a2: GroupHom, S: list[SubgroupFamily]) -> list[CheckResult]:
    """``W(β∘α) = W(β)∘W(α)`` and ``G(θ2∘θ1) = G(θ2)∘G(θ1)``."""
    M = [build_w(a1.source, S[0]), build_w(a1.target, S[1]), build_w(a2.target, S[2])]
    t1, t2 = w_on_morphism(a1, M[0], M[1]), w_on_morphism(a2, M[1], M[2])
    t12 = w_on_morphism(a1.then(a2), M[0], M[2])
    ok_w = t12.images == t1.then(t2).images
    g1, g2 = g_on_morphism(t1), g_on_morphism(t2)
    ok_g = g_on_morphism(t1.then(t2)).images == g1.then(g2).images
    return [CheckResult("W-preserves-composition", ok_w),
            CheckResult("G-preserves-composition", ok_g)]


def roundtrip_report(G: PermGroup, S: SubgroupFamily, samples: int = 20, seed: int = 0) -> dict:
    """Both round trips, the hat identities and both naturality squares on sampled isomorphisms."""
    if not S.separating:
        raise NonSeparatingBasisError(
            f"basis core has {len(S.core)} elements; the round trip needs a separating basis")
    W = build_w(G, S)
    checks: list[CheckResult] = []
    eG = eta_g(G, S, W)
    checks.append(CheckResult("eta-G-isomorphism", eG.is_bijective(),
                              detail={"G": G.order, "G(W)": eG.target.order}))
    try:
        eM = eta_m(W)
        checks.append(CheckResult("eta-M-isomorphism", bool(eM.check()), detail={"W": W.size}))
    except NotAnObjectError as exc:
        checks.append(CheckResult("eta-M-isomorphism", False, str(exc)))
    checks += hat_identity_checks(W)

    alphas = sample_isomorphisms(G, samples, seed)
    all_G = S == all_subgroups(G)
    sq_g, sq_m = [], []
    for a in alphas:
        SH = S.image(a)
        sq_g.append(check_naturality_g(a, S, SH))
        sq_m.append(check_naturality_m(w_on_morphism(a, W, build_w(a.target, SH))))
    for name, sq in (("naturality-eta-G", sq_g), ("naturality-eta-M", sq_m)):
        bad = next((k for k, s in enumerate(sq) if not s), None)
        checks.append(CheckResult(name, bad is None,
                                  None if bad is None else {"sample": bad, "at": sq[bad].witness},
                                  detail={"samples": len(sq),
                                          "points": sum(s.checked for s in sq)}))
    if len(alphas) >= 2:
        a1 = alphas[0]
        a2 = a1.inverse().then(alphas[1])
        checks += functoriality_checks(a1, a2, [S, S.image(a1), S.image(a1.then(a2))])
    if all_G:
        bad = next((k for k, a in enumerate(alphas) if not basis_invariance_check(a)), None)
        checks.append(CheckResult("all-subgroups-basis-invariant", bad is None, bad))
    checks.append(double_coset_check(G, S))

    card = {"G": G.order, "W": W.size, "idempotents": len(S)}
    try:
        pres = inn_out(G)
        card.update(aut=pres.aut.order, out=pres.out_order)
    except CapExceeded:
        pass
    return {"group": G.name, "assumption": BASIS_ASSUMPTION, "cardinalities": card,
            "checks": [c.to_json() for c in checks], "passed": all(checks)}
