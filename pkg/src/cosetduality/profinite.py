"""Towers of finite groups ``G_0 <- G_1 <- ... <- G_D`` and their coset groupoids.

The basis at depth ``d`` is the chain of kernels ``V_j = ker(G_d -> G_j)``.
A coset of ``V_j`` is stored as ``LevelCoset(j, x)`` with ``x`` an element
of ``G_j``: it stands for every element projecting to ``x``.  Level ``-1``
is the whole group.  Because the kernels form a chain of normal subgroups,
products, meets and inverses of level cosets can be computed from the
residues alone, without building any coset tables.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path

import numpy as np

from .catalog import group_from_json, group_to_json
from .functor_g import enumerate_full_filters
from .functor_w import build_w
from .groupoid import EMPTY, UNDEFINED, GroupoidIso, MeetGroupoid, level_up
from .perm import GroupHom, Perm, PermGroup, SubgroupFamily
from .report import CheckResult


class DepthError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class LevelCoset:
    """The set of elements whose image at ``level`` is the residue ``x``."""

    level: int
    x: int

    def __repr__(self):
        return f"<{self.x} @ {self.level}>"


TOP = LevelCoset(-1, 0)


class InverseSystem:
    """Finite groups with surjective maps ``maps[d]: levels[d+1] -> levels[d]``."""

    def __init__(self, levels, maps, name: str | None = None, labels=None):
        self.levels: tuple[PermGroup, ...] = tuple(levels)
        self.maps: tuple[GroupHom, ...] = tuple(maps)
        self.name = name
        self.labels = labels
        if len(self.maps) != len(self.levels) - 1:
            raise ValueError("need one map between each pair of consecutive levels")
        for d, f in enumerate(self.maps):
            if f.source != self.levels[d + 1] or f.target != self.levels[d]:
                raise ValueError(f"map {d} does not run from level {d + 1} to level {d}")
            if f.image() != frozenset(range(f.target.order)):
                raise ValueError(f"map {d} is not surjective")
            if not f.is_homomorphism():
                raise ValueError(f"map {d} is not a homomorphism")

    @property
    def depth(self) -> int:
        return len(self.levels) - 1

    def _check_depth(self, d: int):
        if not -1 <= d <= self.depth:
            raise DepthError(f"level {d} outside 0..{self.depth}")

    @cached_property
    def _proj(self) -> list[list[np.ndarray]]:
        """``_proj[d][j]``: images of the elements of ``G_d`` in ``G_j``, for ``-1 <= j <= d``."""
        out = []
        for d, G in enumerate(self.levels):
            row = {d: np.arange(G.order)}
            for j in range(d - 1, -1, -1):
                row[j] = np.asarray(self.maps[j].images)[row[j + 1]]
            row[-1] = np.zeros(G.order, dtype=np.int64)
            out.append(row)
        return out

    def project(self, x: int, d: int, j: int) -> int:
        """Image of ``x ∈ G_d`` in ``G_j``."""
        self._check_depth(d)
        self._check_depth(j)
        if j > d:
            raise ValueError("can only project to a lower level")
        if d == -1:
            return 0
        return int(self._proj[d][j][x])

    def _injective_step(self, d: int) -> bool:
        """Whether ``G_d -> G_{d-1}`` is injective (``G_{-1}`` is trivial)."""
        below = self.levels[d - 1].order if d > 0 else 1
        return self.levels[d].order == below

    def canonical(self, c: LevelCoset) -> LevelCoset:
        """Lowest level describing the same set."""
        self._check_depth(c.level)
        d, x = c.level, c.x
        while d >= 0 and self._injective_step(d):
            x = self.project(x, d, d - 1)
            d -= 1
        return LevelCoset(d, 0 if d < 0 else x)

    def canonical_levels(self, depth: int) -> list[int]:
        self._check_depth(depth)
        return sorted({self.canonical(LevelCoset(d, 0)).level for d in range(-1, depth + 1)})

    def kernel(self, d: int, j: int) -> frozenset[int]:
        """``ker(G_d -> G_j)``; ``j = -1`` gives all of ``G_d``."""
        if j < 0:
            return frozenset(range(self.levels[d].order))
        return frozenset(np.flatnonzero(self._proj[d][j] == self.levels[j].identity).tolist())

    def preimage(self, c: LevelCoset, d: int) -> frozenset[int]:
        """The elements of ``G_d`` in ``c``."""
        if c.level > d:
            raise DepthError(f"level {c.level} coset is finer than depth {d}")
        if c.level < 0:
            return frozenset(range(self.levels[d].order))
        return frozenset(np.flatnonzero(self._proj[d][c.level] == c.x).tolist())

    def to_json(self) -> dict:
        return {"levels": [group_to_json(G) for G in self.levels],
                "maps": [list(f.images) for f in self.maps],
                "name": self.name}

    @classmethod
    def from_json(cls, data: dict | str | Path) -> InverseSystem:
        if isinstance(data, Path) or (isinstance(data, str) and not data.lstrip().startswith("{")):
            data = Path(data).read_text()
        if isinstance(data, str):
            data = json.loads(data)
        levels = [group_from_json(g) for g in data["levels"]]
        maps = [GroupHom(levels[d + 1], levels[d], tuple(int(i) for i in m))
                for d, m in enumerate(data["maps"])]
        return cls(levels, maps, name=data.get("name"))


def truncate(sys: InverseSystem, d: int) -> tuple[PermGroup, SubgroupFamily]:
    """``G_d`` with the chain basis ``{G_d} ∪ {ker(G_d -> G_j) : j <= d}``."""
    if not 0 <= d <= sys.depth:
        raise DepthError(f"depth {d} outside 0..{sys.depth}")
    G = sys.levels[d]
    members = {frozenset(range(G.order))} | {sys.kernel(d, j) for j in range(d + 1)}
    return G, SubgroupFamily(G, members)


# -- level operations -------------------------------------------------------

class LevelOps:
    """Product, meet and inverse of level cosets, computed from residues."""

    def __init__(self, sys: InverseSystem):
        self.sys = sys

    def _canon(self, c: LevelCoset | None) -> LevelCoset | None:
        return None if c is None else self.sys.canonical(c)

    def meet(self, a: LevelCoset | None, b: LevelCoset | None) -> LevelCoset | None:
        """``None`` stands for ∅."""
        if a is None or b is None:
            return None
        a, b = self._canon(a), self._canon(b)
        lo, hi = (a, b) if a.level <= b.level else (b, a)
        if lo.level < 0 or self.sys.project(hi.x, hi.level, lo.level) == lo.x:
            return hi
        return None

    def product(self, a: LevelCoset | None, b: LevelCoset | None):
        """``a·b``; returns ``UNDEFINED`` when the frames do not match."""
        if a is None and b is None:
            return None
        if a is None or b is None:
            return UNDEFINED
        a, b = self._canon(a), self._canon(b)
        if a.level != b.level:
            return UNDEFINED
        if a.level < 0:
            return TOP
        G = self.sys.levels[a.level]
        return LevelCoset(a.level, G.mul(a.x, b.x))

    def inverse(self, a: LevelCoset | None) -> LevelCoset | None:
        if a is None:
            return None
        a = self._canon(a)
        if a.level < 0:
            return a
        return LevelCoset(a.level, self.sys.levels[a.level].inv(a.x))

    def leq(self, a, b) -> bool:
        return self.meet(a, b) == (None if a is None else self._canon(a))


def level_ops(sys: InverseSystem) -> LevelOps:
    return LevelOps(sys)


def level_cosets(sys: InverseSystem, depth: int) -> list[LevelCoset]:
    """Every canonical level coset of level at most ``depth``, ordered by (level, residue)."""
    out = []
    for j in sys.canonical_levels(depth):
        n = 1 if j < 0 else sys.levels[j].order
        out.extend(LevelCoset(j, x) for x in range(n))
    return out


def lazy_groupoid(sys: InverseSystem, depth: int) -> tuple[MeetGroupoid, list[LevelCoset | None]]:
    """Tables of the depth-``depth`` coset groupoid filled in from ``level_ops`` alone.

    Returns the groupoid and its carrier, with ``None`` at id 0 for ∅.
    """
    ops = LevelOps(sys)
    carrier: list[LevelCoset | None] = [None] + level_cosets(sys, depth)
    id_of = {c: k for k, c in enumerate(carrier)}
    m = len(carrier)
    prod = np.full((m, m), UNDEFINED, dtype=np.int64)
    meet = np.zeros((m, m), dtype=np.int64)
    for i, a in enumerate(carrier):
        for k, b in enumerate(carrier):
            meet[i, k] = id_of[ops.meet(a, b)]
            p = ops.product(a, b)
            if not (isinstance(p, int) and p == UNDEFINED):
                prod[i, k] = id_of[p]
    inverse = [id_of[ops.inverse(a)] for a in carrier]
    labels = ["∅"] + [repr(c) for c in carrier[1:]]
    return MeetGroupoid(prod, inverse, meet, labels=labels), carrier


def lazy_eager_iso(sys: InverseSystem, depth: int) -> GroupoidIso:
    """The map sending each level coset to its preimage in ``W(truncate(sys, depth))``."""
    lazy, carrier = lazy_groupoid(sys, depth)
    W = build_w(*truncate(sys, depth))
    images = [EMPTY] + [W.coset_id(sys.preimage(c, depth)) for c in carrier[1:]]
    return GroupoidIso(lazy, W, tuple(images))


# -- filters by depth -------------------------------------------------------

@dataclass(frozen=True)
class DepthFilter:
    """The full filter at ``depth`` of all level cosets containing the residue ``x ∈ G_depth``."""

    depth: int
    x: int

    def cosets(self, sys: InverseSystem) -> list[LevelCoset]:
        return [LevelCoset(j, sys.project(self.x, self.depth, j) if j >= 0 else 0)
                for j in sys.canonical_levels(self.depth)]


def refine_filter(sys: InverseSystem, partial: DepthFilter, target: int) -> list[DepthFilter]:
    """All depth-``target`` filters whose cosets at levels ``<= partial.depth`` agree with ``partial``."""
    if not partial.depth <= target <= sys.depth:
        raise DepthError(f"cannot refine from depth {partial.depth} to {target}")
    ys = np.flatnonzero(sys._proj[target][partial.depth] == partial.x).tolist()
    out = [DepthFilter(target, y) for y in ys]
    base = set(partial.cosets(sys))
    for F in out:
        if not base <= set(F.cosets(sys)):
            raise AssertionError(f"extension {F} is incoherent")
    return out


def depth_filters(sys: InverseSystem, depth: int) -> list[DepthFilter]:
    """Depth filters recovered from the full filters of the lazily built groupoid."""
    lazy, carrier = lazy_groupoid(sys, depth)
    out = []
    for R in enumerate_full_filters(lazy):
        finest = max((carrier[a] for _, a in R.choice), key=lambda c: c.level)
        if finest.level < depth:
            finest = LevelCoset(depth, next(iter(sys.preimage(finest, depth))))
        out.append(DepthFilter(depth, finest.x))
    return sorted(out, key=lambda F: F.x)


def compatibility_checks(sys: InverseSystem, d: int) -> list[CheckResult]:
    """Projecting depth ``d+1`` cosets to depth ``d`` is a product- and order-preserving
    retraction that agrees with level-up to the depth-``d`` kernel."""
    if not 0 <= d < sys.depth:
        raise DepthError(f"need 0 <= d < {sys.depth}")
    fine, carrier = lazy_groupoid(sys, d + 1)
    coarse_levels = set(sys.canonical_levels(d))
    id_of = {c: k for k, c in enumerate(carrier)}
    top_level = max(coarse_levels)

    def q(c):
        if c is None or c.level in coarse_levels:
            return c
        return sys.canonical(LevelCoset(top_level, sys.project(c.x, c.level, top_level)))

    qmap = [id_of[q(c)] for c in carrier]
    V = id_of[sys.canonical(LevelCoset(top_level, sys.levels[top_level].identity))] \
        if top_level >= 0 else id_of[TOP]
    out = []
    bad = next((a for a in range(1, fine.size)
                if carrier[a].level not in coarse_levels and level_up(fine, a, V) != qmap[a]), None)
    out.append(CheckResult("projection-is-level-up", bad is None, bad))
    P = fine.product_table
    bad = next(((a, b) for a in range(fine.size) for b in range(fine.size)
                if P[a, b] != UNDEFINED and P[qmap[a], qmap[b]] != qmap[P[a, b]]), None)
    out.append(CheckResult("projection-preserves-product", bad is None, bad))
    leq = fine.leq_matrix
    bad = next(((a, b) for a in range(fine.size) for b in range(fine.size)
                if leq[a, b] and not leq[qmap[a], qmap[b]]), None)
    out.append(CheckResult("projection-monotone", bad is None, bad))
    bad = next((a for a in range(fine.size) if qmap[qmap[a]] != qmap[a]), None)
    out.append(CheckResult("projection-idempotent", bad is None, bad))
    return out


# -- towers -----------------------------------------------------------------

def regular_group(labels, mul, name: str | None = None) -> tuple[PermGroup, dict]:
    """Left regular representation of a finite group given by its elements and product."""
    labels = list(labels)
    pos = {x: i for i, x in enumerate(labels)}
    perms = [Perm._raw(tuple(pos[mul(x, y)] for y in labels)) for x in labels]
    G = PermGroup(len(labels), sorted(perms), name=name)
    return G, {x: G.index(p) for x, p in zip(labels, perms)}


def _tower(groups, project, name) -> InverseSystem:
    """``groups``: per level ``(labels, mul, name)``; ``project(d, label)`` maps level ``d+1`` to ``d``."""
    built = [regular_group(*g) for g in groups]
    maps = []
    for d in range(len(built) - 1):
        (G1, idx1), (G0, idx0) = built[d + 1], built[d]
        images = [0] * G1.order
        for lab, i in idx1.items():
            images[i] = idx0[project(d, lab)]
        maps.append(GroupHom(G1, G0, tuple(images)))
    labels = [{i: lab for lab, i in idx.items()} for _, idx in built]
    return InverseSystem([G for G, _ in built], maps, name=name, labels=labels)


def padic_tower(p: int, depth: int) -> InverseSystem:
    """``Z/p^d`` for ``d = 0..depth``, with reduction maps; the limit is the p-adic integers."""
    groups = [(range(p ** d), (lambda n: lambda x, y: (x + y) % n)(p ** d), f"Z{p ** d}")
              for d in range(depth + 1)]
    return _tower(groups, lambda d, x: x % (p ** d), f"{p}adic")


def two_adic_tower(depth: int) -> InverseSystem:
    return padic_tower(2, depth)


def dihedral_tower(depth: int) -> InverseSystem:
    """Dihedral groups of order ``2^(d+1)`` (rotations mod ``2^d``), reducing rotations."""

    def level(d):
        n = 2 ** d
        els = [(k, e) for e in range(2) for k in range(n)]
        return els, (lambda a, b: ((a[0] + (-1) ** a[1] * b[0]) % n, (a[1] + b[1]) % 2)), f"Dih{2 * n}"

    return _tower([level(d) for d in range(depth + 1)],
                  lambda d, a: (a[0] % (2 ** d), a[1]), "dihedral")


TOWERS = {"2adic": two_adic_tower,
          "3adic": lambda depth: padic_tower(3, depth),
          "dihedral": dihedral_tower}


def demo_report(sys: InverseSystem, depth: int) -> dict:
    """Per-depth agreement of lazy and eager groupoids, filter counts and refinement fan-out."""
    if not 0 <= depth <= sys.depth:
        raise DepthError(f"depth {depth} outside 0..{sys.depth}")
    rows, checks = [], []
    for d in range(depth + 1):
        iso = lazy_eager_iso(sys, d)
        cert = iso.check()
        checks.append(CheckResult(f"lazy-equals-eager@{d}", bool(cert), cert.witness))
        n_filters = len(depth_filters(sys, d))
        G = sys.levels[d]
        checks.append(CheckResult(f"filter-count@{d}", n_filters == G.order,
                                  detail={"filters": n_filters, "order": G.order}))
        if d > 0:
            fan = {len(refine_filter(sys, DepthFilter(d - 1, x), d))
                   for x in range(sys.levels[d - 1].order)}
            ok = fan == {G.order // sys.levels[d - 1].order}
            checks.append(CheckResult(f"refinement-fanout@{d}", ok, None if ok else sorted(fan)))
            checks += [CheckResult(f"{c.name}@{d - 1}", c.passed, c.witness)
                       for c in compatibility_checks(sys, d - 1)]
        rows.append({"depth": d, "order": G.order, "carrier": iso.source.size,
                     "filters": n_filters})
    return {"tower": sys.name, "depth": depth, "levels": rows,
            "checks": [c.to_json() for c in checks], "passed": all(checks)}
