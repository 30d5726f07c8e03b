"""Finite permutation groups, stored fully enumerated.

Elements of a group are kept in lexicographic order of their image
sequences, and most routines below address them by their position in that
order.  Subgroups and cosets are frozensets of such positions.
"""
from __future__ import annotations

import itertools
import re
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

CLOSURE_CAP = 10_000
SUBGROUP_CAP = 64
AUTOMORPHISM_CAP = 24
CENTRALIZER_CAP = 16
NORMALIZER_CAP = 8

# pairwise closure verification in from_elements is quadratic
_VERIFY_PAIRWISE_MAX = 256
_TABLE_MAX = 2048


class CapExceeded(RuntimeError):
    """A configured size cap was exceeded; results are never truncated."""


class Perm(tuple):
    """A permutation of ``{0..n-1}`` given by its image sequence.

    ``p * q`` is composition with ``q`` applied first, ``(p * q)(i) == p(q(i))``.
    """

    __slots__ = ()

    def __new__(cls, images: Iterable[int]):
        t = tuple(int(i) for i in images)
        if sorted(t) != list(range(len(t))):
            raise ValueError(f"not a permutation of 0..{len(t) - 1}: {t}")
        return tuple.__new__(cls, t)

    @classmethod
    def _raw(cls, t) -> Perm:
        return tuple.__new__(cls, t)

    @classmethod
    def identity(cls, n: int) -> Perm:
        return cls._raw(range(n))

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]]) -> Perm:
        images = list(range(n))
        seen: set[int] = set()
        for cyc in cycles:
            for i in cyc:
                if not 0 <= i < n or i in seen:
                    raise ValueError(f"bad cycle {tuple(cyc)} for degree {n}")
                seen.add(i)
            for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
                images[a] = b
        return cls._raw(images)

    @classmethod
    def parse(cls, text: str, degree: int | None = None) -> Perm:
        """Parse cycle notation such as ``"(0 1 2)(3 4)"``; ``"()"`` is the identity."""
        return parse_cycles(text, degree)

    @property
    def degree(self) -> int:
        return len(self)

    def __call__(self, i: int) -> int:
        return self[i]

    def __mul__(self, other):
        return compose(self, other)

    def inverse(self) -> Perm:
        inv = [0] * len(self)
        for i, j in enumerate(self):
            inv[j] = i
        return Perm._raw(inv)

    def __pow__(self, k: int) -> Perm:
        base = self if k >= 0 else self.inverse()
        out = Perm.identity(len(self))
        for _ in range(abs(k)):
            out = compose(out, base)
        return out

    def cycles(self) -> list[tuple[int, ...]]:
        seen = [False] * len(self)
        out = []
        for i in range(len(self)):
            if seen[i]:
                continue
            cyc = [i]
            seen[i] = True
            j = self[i]
            while j != i:
                cyc.append(j)
                seen[j] = True
                j = self[j]
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def cycle_type(self) -> tuple[int, ...]:
        lengths = [len(c) for c in self.cycles()]
        fixed = len(self) - sum(lengths)
        return tuple(sorted(lengths + [1] * fixed, reverse=True))

    def order(self) -> int:
        from math import lcm
        return lcm(*self.cycle_type()) if len(self) else 1

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self))

    def __repr__(self):
        cyc = self.cycles()
        body = "".join("(" + " ".join(map(str, c)) + ")" for c in cyc) or "()"
        return f"Perm<{len(self)}>{body}"


def compose(p: Perm, q: Perm) -> Perm:
    """Return ``p∘q``: first ``q``, then ``p``."""
    if len(p) != len(q):
        raise ValueError(f"degree mismatch: {len(p)} vs {len(q)}")
    return Perm._raw(tuple(p[i] for i in q))


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, degree: int | None = None) -> Perm:
    text = text.strip()
    if re.sub(r"\([^()]*\)|\s", "", text):
        raise ValueError(f"malformed cycle notation: {text!r}")
    cycles = []
    for body in _CYCLE_RE.findall(text):
        pts = [int(x) for x in body.replace(",", " ").split()]
        if pts:
            cycles.append(pts)
    top = max((max(c) for c in cycles), default=-1) + 1
    n = top if degree is None else degree
    if n < top:
        raise ValueError(f"cycle point {top - 1} exceeds degree {n}")
    return Perm.from_cycles(n, cycles)


# -- bulk helpers on stacked permutations (rows are image sequences) --------

def as_array(perms: Sequence[Sequence[int]], degree: int | None = None) -> np.ndarray:
    if len(perms) == 0:
        return np.zeros((0, degree or 0), dtype=np.int32)
    return np.asarray(perms, dtype=np.int32)


def compose_rows(P: np.ndarray, Q: np.ndarray) -> np.ndarray:
    """Row-wise ``P[k]∘Q[k]`` (broadcasting a single row is allowed)."""
    P, Q = np.broadcast_arrays(np.atleast_2d(P), np.atleast_2d(Q))
    return np.take_along_axis(P, Q, axis=1)


def invert_rows(P: np.ndarray) -> np.ndarray:
    P = np.atleast_2d(P)
    out = np.empty_like(P)
    rows = np.arange(P.shape[0])[:, None]
    out[rows, P] = np.arange(P.shape[1])[None, :]
    return out


def conjugate_rows(A: np.ndarray, g: np.ndarray) -> np.ndarray:
    """Row-wise ``A[k]∘g∘A[k]⁻¹``: the result sends ``A[k][i]`` to ``A[k][g[i]]``."""
    A = np.atleast_2d(A)
    g = np.broadcast_to(np.atleast_2d(g), A.shape)
    out = np.empty_like(A)
    rows = np.arange(A.shape[0])[:, None]
    out[rows, A] = np.take_along_axis(A, g, axis=1)
    return out


def row_keys(P: np.ndarray) -> list[bytes]:
    P = np.ascontiguousarray(np.atleast_2d(P), dtype=np.int32)
    return [r.tobytes() for r in P]


# -- groups -----------------------------------------------------------------

class PermGroup:
    """A finite permutation group with every element listed.

    Use :func:`close_generators` or :meth:`from_elements` rather than the
    constructor, which trusts its input.
    """

    def __init__(self, degree: int, elements: Sequence[Perm],
                 generators: Sequence[Perm] | None = None, name: str | None = None):
        self.degree = degree
        self.elements: tuple[Perm, ...] = tuple(elements)
        self.name = name
        self._index = {p: i for i, p in enumerate(self.elements)}
        self._generators = None if generators is None else tuple(generators)
        self._table = None
        self._mul = None
        self._array = None
        self._keys = None
        self._cache: dict = {}

    @classmethod
    def from_elements(cls, degree: int, elements: Iterable[Sequence[int]],
                      name: str | None = None, verify: bool = True) -> PermGroup:
        elems = sorted({Perm(e) if not isinstance(e, Perm) else e for e in elements})
        for e in elems:
            if len(e) != degree:
                raise ValueError(f"element {e!r} has degree {len(e)}, expected {degree}")
        G = cls(degree, elems, name=name)
        if verify:
            if len(elems) > _VERIFY_PAIRWISE_MAX:
                raise ValueError(
                    f"{len(elems)} elements is too many to verify pairwise; pass verify=False "
                    "only when the set is a group by construction")
            if Perm.identity(degree) not in G._index:
                raise ValueError("element set lacks the identity")
            for p in elems:
                if p.inverse() not in G._index:
                    raise ValueError(f"not closed under inverse: {p!r}")
                for q in elems:
                    if compose(p, q) not in G._index:
                        raise ValueError(f"not closed under composition: {p!r}, {q!r}")
        return G

    def __len__(self):
        return len(self.elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, p) -> bool:
        return tuple(p) in self._index

    def __eq__(self, other):
        return (isinstance(other, PermGroup) and self.degree == other.degree
                and self.elements == other.elements)

    def __hash__(self):
        return hash((self.degree, self.elements))

    def __repr__(self):
        tag = f" {self.name}" if self.name else ""
        return f"<PermGroup{tag} degree={self.degree} order={self.order}>"

    def index(self, p) -> int:
        if isinstance(p, (int, np.integer)):
            if not 0 <= p < len(self.elements):
                raise IndexError(f"element index {p} out of range")
            return int(p)
        try:
            return self._index[tuple(p)]
        except KeyError:
            raise ValueError(f"{p!r} is not an element of {self!r}") from None

    def find(self, p) -> int | None:
        return self._index.get(tuple(p))

    @property
    def identity(self) -> int:
        return self._index[Perm.identity(self.degree)]

    @property
    def array(self) -> np.ndarray:
        if self._array is None:
            self._array = as_array(self.elements, self.degree)
            self._array.flags.writeable = False
        return self._array

    def lookup_rows(self, P: np.ndarray) -> np.ndarray:
        """Element indices of the rows of ``P``; -1 where a row is not in the group."""
        if self._keys is None:
            self._keys = {k: i for i, k in enumerate(row_keys(self.array))}
        return np.array([self._keys.get(k, -1) for k in row_keys(P)], dtype=np.int64)

    @property
    def table(self) -> np.ndarray:
        """Multiplication table: ``table[i, j]`` is the index of ``e_i∘e_j``."""
        if self._table is None:
            n = len(self.elements)
            if n > _TABLE_MAX:
                raise CapExceeded(f"multiplication table for order {n} > {_TABLE_MAX}")
            A = self.array
            # A[:, A][i, j, k] = e_i[e_j[k]] = (e_i∘e_j)[k]
            flat = A[:, A].reshape(n * n, self.degree)
            idx = self.lookup_rows(flat).reshape(n, n)
            if (idx < 0).any():
                raise ValueError("element set is not closed under composition")
            idx.flags.writeable = False
            self._table = idx
        return self._table

    def mul(self, i: int, j: int) -> int:
        if self._mul is None:
            self._mul = self.table.tolist()
        return self._mul[i][j]

    @property
    def inverses(self) -> tuple[int, ...]:
        if "inv" not in self._cache:
            self._cache["inv"] = tuple(self._index[p.inverse()] for p in self.elements)
        return self._cache["inv"]

    def inv(self, i: int) -> int:
        return self.inverses[i]

    def element_order(self, i: int) -> int:
        return self.elements[i].order()

    @property
    def generators(self) -> tuple[Perm, ...]:
        if self._generators is None:
            self._generators = tuple(self.elements[i] for i in self.small_generators())
        return self._generators

    def small_generators(self) -> tuple[int, ...]:
        """A short generating set (indices), chosen greedily by decreasing element order."""
        if "gens" not in self._cache:
            e = self.identity
            current = frozenset([e])
            gens: list[int] = []
            ranked = sorted(range(self.order), key=lambda i: (-self.element_order(i), i))
            for i in ranked:
                if len(current) == self.order:
                    break
                if i in current:
                    continue
                gens.append(i)
                current = generated_subgroup(self, gens)
            self._cache["gens"] = tuple(gens)
        return self._cache["gens"]

    def is_abelian(self) -> bool:
        T = self.table
        return bool((T == T.T).all())

    def center(self) -> frozenset[int]:
        T = self.table
        return frozenset(int(i) for i in np.flatnonzero((T == T.T).all(axis=1)))


def close_generators(degree: int, gens: Iterable[Sequence[int]], name: str | None = None,
                     cap: int = CLOSURE_CAP) -> PermGroup:
    """Enumerate the group generated by ``gens``."""
    gens = [g if isinstance(g, Perm) else Perm(g) for g in gens]
    for g in gens:
        if len(g) != degree:
            raise ValueError(f"generator {g!r} does not have degree {degree}")
    e = Perm.identity(degree)
    seen = {e}
    queue = deque([e])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = compose(x, g)
            if y not in seen:
                seen.add(y)
                if len(seen) > cap:
                    raise CapExceeded(f"closure exceeds {cap} elements")
                queue.append(y)
    return PermGroup(degree, sorted(seen), generators=gens, name=name)


def generated_subgroup(G: PermGroup, seeds: Iterable[int]) -> frozenset[int]:
    """Indices of the subgroup of ``G`` generated by the element indices ``seeds``."""
    seeds = [int(s) for s in seeds]
    e = G.identity
    seen = {e}
    queue = deque([e])
    while queue:
        x = queue.popleft()
        for s in seeds:
            y = G.mul(x, s)
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return frozenset(seen)


def is_subgroup(G: PermGroup, H: Iterable[int]) -> bool:
    H = frozenset(H)
    if G.identity not in H:
        return False
    return all(G.mul(a, b) in H for a in H for b in H)


def _as_subgroup(G: PermGroup, H) -> frozenset[int]:
    if isinstance(H, PermGroup):
        H = [G.index(p) for p in H.elements]
    H = frozenset(G.index(h) for h in H)
    if not is_subgroup(G, H):
        raise ValueError("not a subgroup of the parent group")
    return H


def subgroup_as_group(G: PermGroup, H: Iterable[int], name: str | None = None) -> PermGroup:
    return PermGroup(G.degree, sorted(G.elements[i] for i in H), name=name)


def enumerate_subgroups(G: PermGroup, cap: int = SUBGROUP_CAP) -> list[frozenset[int]]:
    """All subgroups of ``G``, sorted by (order, sorted element indices)."""
    if G.order > cap:
        raise CapExceeded(f"|G| = {G.order} exceeds subgroup-enumeration cap {cap}")
    trivial = frozenset([G.identity])
    found = {trivial}
    queue = deque([trivial])
    while queue:
        H = queue.popleft()
        tried: set[int] = set()
        for g in range(G.order):
            if g in H or g in tried:
                continue
            # <H, g> only depends on the coset gH
            tried.update(G.mul(g, h) for h in H)
            K = generated_subgroup(G, list(H) + [g])
            if K not in found:
                found.add(K)
                queue.append(K)
    return sorted(found, key=lambda S: (len(S), sorted(S)))


def left_cosets(G: PermGroup, H) -> list[frozenset[int]]:
    """Left cosets ``gH``, ordered by their minimal element index."""
    H = _as_subgroup(G, H)
    out, covered = [], set()
    for g in range(G.order):
        if g in covered:
            continue
        C = frozenset(G.mul(g, h) for h in H)
        covered |= C
        out.append(C)
    return out


def right_cosets(G: PermGroup, H) -> list[frozenset[int]]:
    H = _as_subgroup(G, H)
    out, covered = [], set()
    for g in range(G.order):
        if g in covered:
            continue
        C = frozenset(G.mul(h, g) for h in H)
        covered |= C
        out.append(C)
    return out


def conjugate_subgroup(G: PermGroup, g, H) -> frozenset[int]:
    """Return ``gHg⁻¹``."""
    g = G.index(g)
    gi = G.inv(g)
    return frozenset(G.mul(G.mul(g, G.index(h)), gi) for h in H)


def double_cosets(G: PermGroup, U, V=None) -> list[frozenset[int]]:
    """The double cosets ``UgV``."""
    U = _as_subgroup(G, U)
    V = U if V is None else _as_subgroup(G, V)
    out, covered = [], set()
    for g in range(G.order):
        if g in covered:
            continue
        D = frozenset(G.mul(G.mul(u, g), v) for u in U for v in V)
        covered |= D
        out.append(D)
    return out


def is_roelcke_precompact(G: PermGroup, U) -> bool:
    """Whether ``U`` has finitely many double cosets ``UgU``; always so for finite ``G``."""
    return len(double_cosets(G, U)) <= G.order


# -- homomorphisms ----------------------------------------------------------

@dataclass(frozen=True)
class GroupHom:
    """A map of element indices ``source -> target``."""

    source: PermGroup
    target: PermGroup
    images: tuple[int, ...]
    _inv: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        if len(self.images) != self.source.order:
            raise ValueError("images must cover every source element")

    @classmethod
    def from_function(cls, source: PermGroup, target: PermGroup, f) -> GroupHom:
        return cls(source, target, tuple(target.index(f(p)) for p in source.elements))

    def __call__(self, p) -> Perm:
        return self.target.elements[self.images[self.source.index(p)]]

    def is_homomorphism(self) -> bool:
        S, T, im = self.source, self.target, self.images
        return all(im[S.mul(a, b)] == T.mul(im[a], im[b])
                   for a in range(S.order) for b in range(S.order))

    def is_bijective(self) -> bool:
        return len(set(self.images)) == self.source.order == self.target.order

    def kernel(self) -> frozenset[int]:
        e = self.target.identity
        return frozenset(i for i, j in enumerate(self.images) if j == e)

    def image(self) -> frozenset[int]:
        return frozenset(self.images)

    def inverse(self) -> GroupHom:
        if not self.is_bijective():
            raise ValueError("only a bijective map has an inverse")
        inv = [0] * self.target.order
        for i, j in enumerate(self.images):
            inv[j] = i
        return GroupHom(self.target, self.source, tuple(inv))

    def then(self, other: GroupHom) -> GroupHom:
        """``other∘self``."""
        if other.source != self.target:
            raise ValueError("cannot compose: target/source mismatch")
        return GroupHom(self.source, other.target, tuple(other.images[j] for j in self.images))

    def map_set(self, A: Iterable[int]) -> frozenset[int]:
        return frozenset(self.images[a] for a in A)


def hom_from_generators(G: PermGroup, H: PermGroup, gens: Sequence[int],
                        images: Sequence[int]) -> GroupHom | None:
    """Extend ``gens[k] -> images[k]`` to a homomorphism, or return None.

    Walks the right Cayley graph of ``G`` and checks every edge, which is
    enough for the extension to be a homomorphism.
    """
    phi = [-1] * G.order
    e = G.identity
    phi[e] = H.identity
    queue = deque([e])
    while queue:
        x = queue.popleft()
        for s, t in zip(gens, images):
            y = G.mul(x, s)
            val = H.mul(phi[x], t)
            if phi[y] < 0:
                phi[y] = val
                queue.append(y)
            elif phi[y] != val:
                return None
    if min(phi) < 0:
        raise ValueError("gens do not generate the source group")
    return GroupHom(G, H, tuple(phi))


def brute_automorphisms(G: PermGroup, cap: int = AUTOMORPHISM_CAP) -> PermGroup:
    """All automorphisms of ``G`` as permutations of its element indices.

    Generator images range over elements of matching order; each candidate
    assignment is extended and kept when it is a bijective homomorphism.
    """
    if G.order > cap:
        raise CapExceeded(f"|G| = {G.order} exceeds automorphism-oracle cap {cap}")
    gens = G.small_generators()
    by_order: dict[int, list[int]] = {}
    for i in range(G.order):
        by_order.setdefault(G.element_order(i), []).append(i)
    candidates = [by_order[G.element_order(g)] for g in gens]
    auts = []
    for imgs in itertools.product(*candidates):
        phi = hom_from_generators(G, G, gens, imgs)
        if phi is not None and len(set(phi.images)) == G.order:
            auts.append(Perm._raw(phi.images))
    return PermGroup(G.order, sorted(auts), name=f"Aut({G.name})" if G.name else None)


def conjugation_automorphism(G: PermGroup, g) -> Perm:
    """The automorphism ``h -> g h g⁻¹`` as a permutation of element indices."""
    g = G.index(g)
    gi = G.inv(g)
    return Perm._raw(tuple(G.mul(G.mul(g, h), gi) for h in range(G.order)))


# -- centralizers and normalizers in Sym(Ω) ---------------------------------

def orbits(H: PermGroup) -> list[tuple[int, ...]]:
    seen = [False] * H.degree
    out = []
    for x in range(H.degree):
        if seen[x]:
            continue
        orb = sorted({h[x] for h in H.elements})
        for y in orb:
            seen[y] = True
        out.append(tuple(orb))
    return out


def centralizer_in_sym(omega_size: int, H: PermGroup, cap: int = CENTRALIZER_CAP) -> PermGroup:
    """``{α ∈ Sym(Ω) : αh = hα for all h ∈ H}``.

    A commuting ``α`` is fixed by where it sends one point ``ω`` of each
    orbit, via ``α(hω) = hα(ω)``; the target must have the same stabilizer as
    ``ω`` and lie in an orbit not already used.
    """
    if H.degree != omega_size:
        raise ValueError(f"H acts on {H.degree} points, not {omega_size}")
    if omega_size > cap:
        raise CapExceeded(f"|Ω| = {omega_size} exceeds centralizer cap {cap}")
    orbs = orbits(H)
    orbit_of = {}
    for k, orb in enumerate(orbs):
        for x in orb:
            orbit_of[x] = k
    stab = [frozenset(i for i, h in enumerate(H.elements) if h[x] == x)
            for x in range(omega_size)]
    reps = [orb[0] for orb in orbs]
    options = [[t for t in range(omega_size) if stab[t] == stab[r]] for r in reps]

    results: list[Perm] = []
    alpha = [-1] * omega_size

    def place(k: int, used: set[int]):
        if k == len(reps):
            results.append(Perm._raw(alpha))
            return
        r = reps[k]
        for t in options[k]:
            o = orbit_of[t]
            if o in used or len(orbs[o]) != len(orbs[k]):
                continue
            for h in H.elements:
                alpha[h[r]] = h[t]
            used.add(o)
            place(k + 1, used)
            used.discard(o)
        for x in orbs[k]:
            alpha[x] = -1

    place(0, set())
    return PermGroup(omega_size, sorted(results))


def normalizer_in_sym(omega_size: int, H: PermGroup, cap: int = NORMALIZER_CAP) -> PermGroup:
    """``{α ∈ Sym(Ω) : αHα⁻¹ = H}`` by exhaustive search over ``Sym(Ω)``."""
    if H.degree != omega_size:
        raise ValueError(f"H acts on {H.degree} points, not {omega_size}")
    if omega_size > cap:
        raise CapExceeded(f"|Ω| = {omega_size} exceeds exhaustive normalizer cap {cap}")
    gens = [np.asarray(H.elements[i]) for i in H.small_generators()]
    out = []
    for images in itertools.permutations(range(omega_size)):
        a = np.asarray(images)
        if all(H.find(conjugate_rows(a, g)[0]) is not None for g in gens):
            out.append(Perm._raw(images))
    return PermGroup(omega_size, out)


# -- subgroup families ------------------------------------------------------

class SubgroupFamily:
    """A family of subgroups of ``parent``, in canonical order.

    Members are sorted by decreasing order, then by their sorted element
    indices.  The closure flags are recomputed on demand, never supplied.
    """

    def __init__(self, parent: PermGroup, members: Iterable[Iterable[int]]):
        uniq = {frozenset(parent.index(i) for i in m) for m in members}
        if not uniq:
            raise ValueError("a subgroup family needs at least one member")
        for m in uniq:
            if not is_subgroup(parent, m):
                raise ValueError(f"member {sorted(m)} is not a subgroup")
        self.parent = parent
        self.members: tuple[frozenset[int], ...] = tuple(
            sorted(uniq, key=lambda m: (-len(m), sorted(m))))
        self._pos = {m: k for k, m in enumerate(self.members)}

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __getitem__(self, k) -> frozenset[int]:
        return self.members[k]

    def __contains__(self, H) -> bool:
        return frozenset(H) in self._pos

    def __eq__(self, other):
        return (isinstance(other, SubgroupFamily) and self.parent == other.parent
                and self.members == other.members)

    def __hash__(self):
        return hash(self.members)

    def __repr__(self):
        return f"<SubgroupFamily of {self.parent!r}: orders {[len(m) for m in self.members]}>"

    def position(self, H) -> int:
        return self._pos[frozenset(H)]

    @property
    def meet_closed(self) -> bool:
        return all((a & b) in self._pos for a in self.members for b in self.members)

    @property
    def conjugation_closed(self) -> bool:
        G = self.parent
        gens = G.small_generators() or (G.identity,)
        return all(conjugate_subgroup(G, g, m) in self._pos for g in gens for m in self.members)

    @property
    def core(self) -> frozenset[int]:
        """Intersection of all members."""
        return frozenset.intersection(*self.members)

    @property
    def separating(self) -> bool:
        return self.core == frozenset([self.parent.identity])

    def flags(self) -> dict[str, bool]:
        return {"meet_closed": self.meet_closed,
                "conjugation_closed": self.conjugation_closed,
                "separating": self.separating}

    def image(self, alpha: GroupHom) -> SubgroupFamily:
        return SubgroupFamily(alpha.target, [alpha.map_set(m) for m in self.members])

    def to_json(self) -> list[list[list[int]]]:
        G = self.parent
        return [[list(G.elements[i]) for i in sorted(m)] for m in self.members]


def all_subgroups(G: PermGroup, cap: int = SUBGROUP_CAP) -> SubgroupFamily:
    return SubgroupFamily(G, enumerate_subgroups(G, cap))


def trivial_chain(G: PermGroup) -> SubgroupFamily:
    """The two-member chain ``{G, {e}}``."""
    return SubgroupFamily(G, [range(G.order), [G.identity]])
