"""Aut(G) as the normalizer of a coset representation modulo its centralizer.

``G`` acts from the left on Ω, the set of left cosets of the basis
subgroups, giving the embedding ``Θ: G -> Ĝ ≤ Sym(Ω)``.  An automorphism
``φ`` of ``G`` permutes Ω by ``rU ↦ φ(r)φ(U)`` (the section ``Δ``), and a
permutation ``α`` normalizing ``Ĝ`` induces the automorphism
``Γ(α) = Θ⁻¹∘(conjugation by α)∘Θ``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .functor_w import CosetGroupoid, build_w
from .perm import (AUTOMORPHISM_CAP, NORMALIZER_CAP, Perm, PermGroup, SubgroupFamily,
                   brute_automorphisms, centralizer_in_sym, conjugate_rows,
                   conjugation_automorphism, normalizer_in_sym, row_keys)
from .report import CheckResult

# The Ω of the catalog groups reaches 35 points (D4); the search in
# centralizer_in_sym is orbit-driven, so its cost tracks |C|, not |Ω|.
AUT_CENTRALIZER_CAP = 64


class NonSeparatingBasisError(ValueError):
    """The basis subgroups meet in more than the identity, so Θ is not injective."""


class NotNormalizingError(ValueError):
    pass


@dataclass(frozen=True)
class OmegaLabeling:
    """Position ``k`` of Ω is the coset with id ``k + 1`` in ``W(G, S)``."""

    W: CosetGroupoid

    @property
    def entries(self) -> tuple[tuple[int, int], ...]:
        """``(basis position, representative index)`` for each point of Ω."""
        return self.W.coset_index[1:]

    def __len__(self):
        return self.W.size - 1

    def coset(self, k: int) -> frozenset[int]:
        return self.W.backing[k + 1]

    def position(self, cos) -> int:
        return self.W.coset_id(cos) - 1

    def subgroup_position(self, u: int) -> int:
        """Point of Ω holding the basis subgroup ``u`` itself."""
        return self.position(self.W.basis[u])


class Theta:
    """The left action of ``G`` on Ω, ``Θ(g)(k) = ρ⁻¹(g·ρ(k))``."""

    def __init__(self, G: PermGroup, S: SubgroupFamily, W: CosetGroupoid | None = None):
        self.group = G
        self.basis = S
        self.W = W if W is not None else build_w(G, S)
        self.labeling = OmegaLabeling(self.W)
        n = len(self.labeling)
        T = G.table
        perms = []
        for g in range(G.order):
            img = [self.labeling.position(frozenset(int(x) for x in T[g, sorted(self.labeling.coset(k))]))
                   for k in range(n)]
            perms.append(Perm._raw(img))
        self.perms: tuple[Perm, ...] = tuple(perms)
        self.image = PermGroup(n, sorted(set(perms)), name="Ĝ")
        self._pre = {}
        for g, p in enumerate(perms):
            self._pre.setdefault(p, g)

    @property
    def omega_size(self) -> int:
        return len(self.labeling)

    @property
    def injective(self) -> bool:
        return len(set(self.perms)) == self.group.order

    def kernel(self) -> frozenset[int]:
        e = Perm.identity(self.omega_size)
        return frozenset(g for g, p in enumerate(self.perms) if p == e)

    def __call__(self, g) -> Perm:
        return self.perms[self.group.index(g)]

    def preimage(self, p) -> int:
        try:
            return self._pre[tuple(p)]
        except KeyError:
            raise NotNormalizingError("permutation lies outside Ĝ") from None

    def generator_rows(self) -> np.ndarray:
        return np.asarray([self.perms[s] for s in self.group.small_generators()], dtype=np.int32)


def theta(G: PermGroup, S: SubgroupFamily) -> Theta:
    return Theta(G, S)


def _require_separating(S: SubgroupFamily):
    if not S.separating:
        raise NonSeparatingBasisError(
            f"basis core has {len(S.core)} elements; Θ is not injective")


def delta(G: PermGroup, S: SubgroupFamily, phi, th: Theta | None = None) -> Perm:
    """``Δ(φ)``: the permutation ``rU ↦ φ(r)φ(U)`` of Ω."""
    th = th if th is not None else Theta(G, S)
    phi = tuple(phi)
    if len(phi) != G.order:
        raise ValueError("phi must permute the element indices of G")
    lab = th.labeling
    out = []
    for k in range(len(lab)):
        img = frozenset(phi[x] for x in lab.coset(k))
        pos = th.W.find_coset(img)
        if pos is None:
            raise ValueError("phi does not preserve the basis")
        out.append(pos - 1)
    return Perm._raw(out)


def gamma(G: PermGroup, S: SubgroupFamily, alpha, th: Theta | None = None) -> Perm:
    """``Γ(α)``: the automorphism ``g ↦ Θ⁻¹(α Θ(g) α⁻¹)`` as a permutation of element indices."""
    _require_separating(S)
    th = th if th is not None else Theta(G, S)
    a = np.asarray(alpha, dtype=np.int32)
    out = []
    for g in range(G.order):
        c = conjugate_rows(a, np.asarray(th.perms[g], dtype=np.int32))[0]
        out.append(th.preimage(c.tolist()))
    if sorted(out) != list(range(G.order)):
        raise NotNormalizingError("alpha does not normalize Ĝ")
    return Perm._raw(out)


# -- Aut, Inn, Out ----------------------------------------------------------

@dataclass
class AutPresentation:
    """``Aut(G)`` on the element indices of ``G``, with ``Inn(G)`` and a transversal for ``Out(G)``."""

    group: PermGroup
    aut: PermGroup
    inn: frozenset[int]
    out_reps: tuple[int, ...]
    center: frozenset[int]

    @property
    def out_order(self) -> int:
        return len(self.out_reps)

    def out_group(self) -> PermGroup:
        """``Out(G)`` as the action of ``Aut(G)`` on the cosets of ``Inn(G)``."""
        A = self.aut
        cosets = [frozenset(A.mul(r, i) for i in self.inn) for r in self.out_reps]
        where = {}
        for k, C in enumerate(cosets):
            for x in C:
                where[x] = k
        perms = {Perm._raw(tuple(where[A.mul(a, r)] for r in self.out_reps)) for a in range(A.order)}
        return PermGroup(len(cosets), sorted(perms), name="Out")

    def to_json(self) -> dict:
        return {"aut": self.aut.order, "inn": len(self.inn), "out": self.out_order,
                "center": len(self.center)}


def inn_out(G: PermGroup, cap: int = AUTOMORPHISM_CAP) -> AutPresentation:
    aut = brute_automorphisms(G, cap)
    conj = [aut.index(conjugation_automorphism(G, g)) for g in range(G.order)]
    inn = frozenset(conj)
    reps, covered = [], set()
    for a in range(aut.order):
        if a in covered:
            continue
        reps.append(a)
        covered.update(aut.mul(a, i) for i in inn)
    pres = AutPresentation(G, aut, inn, tuple(reps), G.center())
    for res in inner_checks(pres, conj):
        if not res:
            raise AssertionError(f"{res.name} failed: {res.witness}")
    return pres


def inner_checks(pres: AutPresentation, conj: list[int] | None = None) -> list[CheckResult]:
    """``g ↦ (h ↦ ghg⁻¹)`` is a homomorphism with kernel ``Z(G)`` onto a normal ``Inn(G)``."""
    G, A = pres.group, pres.aut
    if conj is None:
        conj = [A.index(conjugation_automorphism(G, g)) for g in range(G.order)]
    out = []
    bad = next(((g, h) for g in range(G.order) for h in range(G.order)
                if conj[G.mul(g, h)] != A.mul(conj[g], conj[h])), None)
    out.append(CheckResult("conjugation-homomorphism", bad is None, bad))
    kernel = frozenset(g for g in range(G.order) if conj[g] == A.identity)
    out.append(CheckResult("conjugation-kernel-is-center", kernel == pres.center,
                           None if kernel == pres.center else sorted(kernel)))
    ok = len(pres.inn) * len(pres.center) == G.order
    out.append(CheckResult("inn-order-is-index-of-center", ok,
                           detail={"inn": len(pres.inn), "index": G.order // len(pres.center)}))
    bad = next(((a, i) for a in range(A.order) for i in pres.inn
                if A.mul(A.mul(a, i), A.inv(a)) not in pres.inn), None)
    out.append(CheckResult("inn-normal", bad is None, bad))
    ok = len(pres.inn) * pres.out_order == A.order
    out.append(CheckResult("lagrange", ok, detail={"aut": A.order, "inn": len(pres.inn),
                                                   "out": pres.out_order}))
    return out


# -- the normalizer-modulo-centralizer picture ------------------------------

class AutContext:
    """Shared data for checking the normalizer/centralizer description of ``Aut(G)``."""

    def __init__(self, G: PermGroup, S: SubgroupFamily,
                 centralizer_cap: int = AUT_CENTRALIZER_CAP):
        _require_separating(S)
        self.group, self.basis = G, S
        self.theta = Theta(G, S)
        self.pres = inn_out(G)
        self.centralizer_cap = centralizer_cap
        gens = G.small_generators()
        self._gens = gens
        self._aut_key = {tuple(p[s] for s in gens): a for a, p in enumerate(self.pres.aut.elements)}
        self._hat_to_g = np.array([self.theta.preimage(p) for p in self.theta.image.elements])

    @property
    def omega_size(self) -> int:
        return self.theta.omega_size

    @cached_property
    def delta_rows(self) -> np.ndarray:
        """Row ``a`` is ``Δ`` of the ``a``-th automorphism."""
        rows = [delta(self.group, self.basis, phi, self.theta) for phi in self.pres.aut.elements]
        return np.asarray(rows, dtype=np.int32).reshape(len(rows), self.omega_size)

    @cached_property
    def centralizer(self) -> PermGroup:
        return centralizer_in_sym(self.omega_size, self.theta.image, self.centralizer_cap)

    @cached_property
    def hc_rows(self) -> np.ndarray:
        """All products ``h∘c`` with ``h ∈ Δ(Aut G)``, ``c ∈ C``, ``h``-major."""
        H, C = self.delta_rows, self.centralizer.array
        return H[:, C].reshape(-1, self.omega_size)

    def gamma_rows(self, rows: np.ndarray) -> np.ndarray:
        """Aut index of ``Γ(α)`` for each row ``α``; -1 where ``α`` does not normalize ``Ĝ``."""
        rows = np.atleast_2d(rows)
        hatG = self.theta.image
        parts = []
        for s in self._gens:
            conj = conjugate_rows(rows, np.asarray(self.theta.perms[s], dtype=np.int32))
            idx = hatG.lookup_rows(conj)
            parts.append(np.where(idx >= 0, self._hat_to_g[np.maximum(idx, 0)], -1))
        if not parts:                      # trivial group
            return np.full(rows.shape[0], self.pres.aut.identity, dtype=np.int64)
        keys = np.stack(parts, axis=1)
        ok = (keys >= 0).all(axis=1)
        cache: dict = {}
        out = np.full(len(keys), -1, dtype=np.int64)
        for i in np.flatnonzero(ok):
            k = keys[i].tobytes()
            if k not in cache:
                cache[k] = self._aut_key.get(tuple(keys[i].tolist()), -1)
            out[i] = cache[k]
        return out

    @cached_property
    def hc_gamma(self) -> np.ndarray:
        return self.gamma_rows(self.hc_rows)

    @cached_property
    def coset_fixed(self) -> np.ndarray:
        """``coset_fixed[a, k]``: automorphism ``a`` maps the ``k``-th coset onto itself (setwise)."""
        lab = self.theta.labeling
        auts = self.pres.aut.elements
        return np.array([[frozenset(phi[x] for x in lab.coset(k)) == lab.coset(k)
                          for k in range(len(lab))] for phi in auts], dtype=bool)


def _context(G, S, ctx):
    return ctx if ctx is not None else AutContext(G, S)


def gamma_delta_checks(G: PermGroup, S: SubgroupFamily, ctx: AutContext | None = None) -> list[CheckResult]:
    """Θ is an injective homomorphism, Δ is an injective homomorphism into the
    normalizer of Ĝ, ``Γ∘Δ = id`` and ``Γ(Θ(g))`` is conjugation by ``g``."""
    ctx = _context(G, S, ctx)
    th, A = ctx.theta, ctx.pres.aut
    out = []

    bad = next(((g, h) for g in range(G.order) for h in range(G.order)
                if th.perms[G.mul(g, h)] != th.perms[g] * th.perms[h]), None)
    out.append(CheckResult("theta-homomorphism", bad is None, bad))
    out.append(CheckResult("theta-kernel-is-core", th.kernel() == S.core,
                           detail={"kernel": len(th.kernel()), "core": len(S.core)}))

    D = [Perm._raw(r) for r in ctx.delta_rows.tolist()]
    bad = next(((a, b) for a in range(A.order) for b in range(A.order)
                if D[A.mul(a, b)] != D[a] * D[b]), None)
    out.append(CheckResult("delta-homomorphism", bad is None, bad))
    out.append(CheckResult("delta-injective", len(set(D)) == A.order))

    bad = None
    for a, phi in enumerate(A.elements):
        for g in range(G.order):
            lhs = D[a] * th.perms[g] * D[a].inverse()
            if lhs != th.perms[phi[g]]:
                bad = (a, g)
                break
        if bad:
            break
    out.append(CheckResult("delta-conjugates-theta", bad is None, bad))

    bad = next((a for a, phi in enumerate(A.elements) if gamma(G, S, D[a], th) != phi), None)
    out.append(CheckResult("gamma-after-delta-is-identity", bad is None, bad,
                           detail={"automorphisms": A.order}))

    bad = next((g for g in range(G.order)
                if gamma(G, S, th.perms[g], th) != conjugation_automorphism(G, g)), None)
    out.append(CheckResult("gamma-of-theta-is-inner", bad is None, bad))
    return out


def centralizer_kernel_check(G: PermGroup, S: SubgroupFamily, ctx: AutContext | None = None) -> CheckResult:
    """``C = {α ∈ Δ(Aut G)·C : Γ(α) = id}``."""
    ctx = _context(G, S, ctx)
    ident = ctx.pres.aut.identity
    kernel = set(row_keys(ctx.hc_rows[ctx.hc_gamma == ident]))
    C = set(row_keys(ctx.centralizer.array))
    ok = kernel == C
    witness = None if ok else {"extra": len(kernel - C), "missing": len(C - kernel)}
    return CheckResult("centralizer-is-kernel-of-gamma", ok, witness,
                       detail={"centralizer": ctx.centralizer.order})


def split_extension_check(G: PermGroup, S: SubgroupFamily, ctx: AutContext | None = None,
                          normalizer_cap: int = NORMALIZER_CAP) -> list[CheckResult]:
    """``H ∩ C = {1}`` and ``H·C`` is a group normalizing Ĝ, for ``H = Δ(Aut G)``.

    When Ω is small enough the normalizer is also enumerated and compared
    with ``H·C``.
    """
    ctx = _context(G, S, ctx)
    H, C = ctx.delta_rows, ctx.centralizer
    n = ctx.omega_size
    out = []

    meet = set(row_keys(H)) & set(row_keys(C.array))
    ident = row_keys(np.arange(n, dtype=np.int32))[0]
    out.append(CheckResult("H-meet-C-trivial", meet == {ident},
                           None if meet == {ident} else len(meet)))

    # H normalizes C, so H·C is a subgroup
    conj_ok = True
    for h in H:
        if (C.lookup_rows(conjugate_rows(h[None, :].repeat(C.order, 0), C.array)) < 0).any():
            conj_ok = False
            break
    out.append(CheckResult("H-normalizes-C", conj_ok))

    HC = ctx.hc_rows
    distinct = len(set(row_keys(HC)))
    out.append(CheckResult("HC-order", distinct == len(H) * C.order,
                           detail={"HC": distinct, "H": len(H), "C": C.order}))

    gens = ctx.theta.generator_rows()
    norm_ok = all((ctx.theta.image.lookup_rows(conjugate_rows(HC, g)) >= 0).all() for g in gens)
    out.append(CheckResult("HC-normalizes-theta-image", norm_ok))

    if n <= normalizer_cap:
        N = normalizer_in_sym(n, ctx.theta.image, normalizer_cap)
        same = set(row_keys(N.array)) == set(row_keys(HC))
        out.append(CheckResult("HC-equals-normalizer", same,
                               detail={"normalizer": N.order, "HC": distinct}))
    return out


def basis_subgroup(G: PermGroup, S: SubgroupFamily, cosets, pres: AutPresentation | None = None
                   ) -> frozenset[int]:
    """``{Φ ∈ Aut(G) : Φ(A_i) = A_i for all i}`` as indices into ``Aut(G)``."""
    pres = pres if pres is not None else inn_out(G)
    W = build_w(G, S)
    cosets = [frozenset(G.index(x) for x in A) for A in cosets]
    for A in cosets:
        if W.find_coset(A) is None or not A:
            raise ValueError(f"{sorted(A)} is not a coset of a basis subgroup")
    return frozenset(a for a, phi in enumerate(pres.aut.elements)
                     if all(frozenset(phi[x] for x in A) == A for A in cosets))


def neighbourhood_biconditional_check(G: PermGroup, S: SubgroupFamily,
                                      ctx: AutContext | None = None,
                                      max_cosets: int = 2) -> CheckResult:
    """For all ``α ∈ H·C`` and every choice of up to ``max_cosets`` cosets ``A_i``:
    ``Γ(α)`` fixes each ``A_i`` setwise iff ``α ∈ C·𝒰``, with ``𝒰`` the pointwise
    stabilizer in ``Sym(Ω)`` of the points ``U_i, A_i``."""
    ctx = _context(G, S, ctx)
    lab = ctx.theta.labeling
    n = ctx.omega_size
    HC, gam = ctx.hc_rows, ctx.hc_gamma
    C = ctx.centralizer.array
    if (gam < 0).any():
        return CheckResult("neighbourhood-biconditional", False, "H·C leaves the normalizer")
    frame_pos = [lab.subgroup_position(u) for u, _ in lab.entries]
    choices = 0
    for r in range(1, max_cosets + 1):
        for ks in itertools.combinations(range(n), r):
            pts = sorted({k for k in ks} | {frame_pos[k] for k in ks})
            weights = n ** np.arange(len(pts), dtype=np.int64)
            seen = np.zeros(n ** len(pts), dtype=bool)
            seen[C[:, pts].astype(np.int64) @ weights] = True
            in_cu = seen[HC[:, pts].astype(np.int64) @ weights]
            in_a = ctx.coset_fixed[:, list(ks)].all(axis=1)[gam]
            choices += 1
            bad = np.flatnonzero(in_cu != in_a)
            if len(bad):
                return CheckResult("neighbourhood-biconditional", False,
                                   {"cosets": list(ks), "alpha_row": int(bad[0])})
    return CheckResult("neighbourhood-biconditional", True,
                       detail={"choices": choices, "alphas": len(HC)})


def stabilizers_separate_check(G: PermGroup, S: SubgroupFamily,
                               ctx: AutContext | None = None) -> CheckResult:
    """The single-coset stabilizers in ``Aut(G)`` meet in the identity."""
    ctx = _context(G, S, ctx)
    common = np.flatnonzero(ctx.coset_fixed.all(axis=1))
    ok = common.tolist() == [ctx.pres.aut.identity]
    return CheckResult("coset-stabilizers-separate", ok, None if ok else common.tolist())


def aut_report(G: PermGroup, S: SubgroupFamily, biconditional: bool = True,
               max_cosets: int = 2) -> dict:
    """Run every check on ``(G, S)`` and collect cardinalities."""
    ctx = AutContext(G, S)
    checks = list(inner_checks(ctx.pres))
    checks += gamma_delta_checks(G, S, ctx)
    checks.append(centralizer_kernel_check(G, S, ctx))
    checks += split_extension_check(G, S, ctx)
    checks.append(stabilizers_separate_check(G, S, ctx))
    if biconditional:
        checks.append(neighbourhood_biconditional_check(G, S, ctx, max_cosets))
    return {
        "group": G.name,
        "cardinalities": {"aut": ctx.pres.aut.order, "inn": len(ctx.pres.inn),
                          "out": ctx.pres.out_order, "omega": ctx.omega_size,
                          "centralizer": ctx.centralizer.order},
        "checks": [c.to_json() for c in checks],
        "passed": all(checks),
    }
