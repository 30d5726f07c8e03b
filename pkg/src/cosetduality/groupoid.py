"""Meet groupoids: a partial product, an inverse and a meet on a finite carrier.

Element 0 is always the least element ∅.  The product table stores -1 where
a product is undefined; :func:`product` returns ``None`` in that case.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Sequence

import numpy as np

EMPTY = 0
UNDEFINED = -1


class InvalidElementError(IndexError):
    pass


class NotFullError(ValueError):
    """Raised when a level-up or level-down witness is missing."""


class Certificate(NamedTuple):
    """A boolean verdict with a witness explaining a negative answer."""

    ok: bool
    witness: tuple | None = None

    def __bool__(self):
        return self.ok


def _frozen(a, dtype=np.int64) -> np.ndarray:
    a = np.array(a, dtype=dtype)
    a.flags.writeable = False
    return a


class MeetGroupoid:
    """A finite meet groupoid given by its three tables.

    ``backing`` optionally holds the concrete set each element stands for
    (for coset groupoids); it plays no role in the algebra.
    """

    def __init__(self, product, inverse, meet, labels: Sequence[str] | None = None,
                 backing: Sequence[frozenset] | None = None):
        P = _frozen(product)
        inv = _frozen(inverse)
        mt = _frozen(meet)
        m = inv.shape[0]
        if m < 1 or P.shape != (m, m) or mt.shape != (m, m):
            raise ValueError("tables must be (m, m), (m,), (m, m) with m >= 1")
        if P.min() < UNDEFINED or P.max() >= m or inv.min() < 0 or inv.max() >= m \
                or mt.min() < 0 or mt.max() >= m:
            raise ValueError("table entry outside the carrier")
        self.product_table = P
        self.inverse_table = inv
        self.meet_table = mt
        self.labels = list(labels) if labels is not None else None
        self.backing = tuple(backing) if backing is not None else None
        self._cache: dict = {}

    @property
    def size(self) -> int:
        return self.inverse_table.shape[0]

    def __len__(self):
        return self.size

    def __repr__(self):
        return f"<{type(self).__name__} size={self.size} idempotents={len(idempotents(self))}>"

    def _check(self, *ids):
        for a in ids:
            if not 0 <= a < self.size:
                raise InvalidElementError(f"element id {a} not in 0..{self.size - 1}")

    def mul(self, a: int, b: int) -> int | None:
        self._check(a, b)
        c = int(self.product_table[a, b])
        return None if c == UNDEFINED else c

    def inv(self, a: int) -> int:
        self._check(a)
        return int(self.inverse_table[a])

    def meet(self, a: int, b: int) -> int:
        self._check(a, b)
        return int(self.meet_table[a, b])

    def leq(self, a: int, b: int) -> bool:
        return self.meet(a, b) == a

    def label(self, a: int) -> str:
        return self.labels[a] if self.labels else str(a)

    @property
    def leq_matrix(self) -> np.ndarray:
        """``leq_matrix[a, b]`` iff ``a ⊆ b``."""
        if "leq" not in self._cache:
            self._cache["leq"] = self.meet_table == np.arange(self.size)[:, None]
        return self._cache["leq"]

    def same_tables(self, other: MeetGroupoid) -> bool:
        return (self.size == other.size
                and np.array_equal(self.product_table, other.product_table)
                and np.array_equal(self.inverse_table, other.inverse_table)
                and np.array_equal(self.meet_table, other.meet_table))

    # -- serialisation ------------------------------------------------------

    def to_json(self) -> dict:
        P = self.product_table
        triples = [[int(a), int(b), int(P[a, b])] for a, b in np.argwhere(P != UNDEFINED)]
        out = {"size": self.size,
               "inverse": self.inverse_table.tolist(),
               "meet": self.meet_table.tolist(),
               "product": triples}
        if self.labels is not None:
            out["labels"] = list(self.labels)
        return out

    @classmethod
    def from_json(cls, data: dict | str) -> MeetGroupoid:
        if isinstance(data, str):
            data = json.loads(data)
        m = int(data["size"])
        P = np.full((m, m), UNDEFINED, dtype=np.int64)
        for a, b, c in data.get("product", []):
            if not (0 <= a < m and 0 <= b < m):
                raise ValueError(f"product triple {(a, b, c)} outside the carrier")
            if P[a, b] != UNDEFINED:
                raise ValueError(f"product ({a}, {b}) given twice")
            P[a, b] = c
        return cls(P, data["inverse"], data["meet"], labels=data.get("labels"))


def product(M: MeetGroupoid, a: int, b: int) -> int | None:
    """``a·b``, or ``None`` when undefined; raises on an invalid id."""
    return M.mul(a, b)


def meet(M: MeetGroupoid, a: int, b: int) -> int:
    return M.meet(a, b)


def idempotents(M: MeetGroupoid) -> list[int]:
    if "idem" not in M._cache:
        P = M.product_table
        ids = np.arange(M.size)
        M._cache["idem"] = [int(a) for a in ids[1:] if P[a, a] == a]
    return M._cache["idem"]


def _require_idempotent(M, U):
    M._check(U)
    if U not in idempotents(M):
        raise ValueError(f"{M.label(U)} is not an idempotent")


def left_star_cosets(M: MeetGroupoid, U: int) -> list[int]:
    """All ``A`` with ``A·U = A``."""
    _require_idempotent(M, U)
    col = M.product_table[:, U]
    return [int(a) for a in np.flatnonzero(col == np.arange(M.size))]


def right_star_cosets(M: MeetGroupoid, U: int) -> list[int]:
    """All ``B`` with ``U·B = B``."""
    _require_idempotent(M, U)
    row = M.product_table[U, :]
    return [int(b) for b in np.flatnonzero(row == np.arange(M.size))]


def coset_frame(M: MeetGroupoid, a: int) -> tuple[int, int]:
    """``(U, V)`` with ``a`` a left ``U`` *coset and a right ``V`` *coset.

    ``U = a⁻¹·a`` and ``V = a·a⁻¹``.
    """
    M._check(a)
    if a == EMPTY:
        raise ValueError("∅ has no coset frame")
    ai = M.inv(a)
    U, V = M.mul(ai, a), M.mul(a, ai)
    if U is None or V is None:
        raise ValueError(f"{M.label(a)}: a·a⁻¹ or a⁻¹·a undefined")
    return U, V


def level_up(M: MeetGroupoid, a: int, V: int) -> int:
    """The unique left ``V`` *coset containing ``a``."""
    _require_idempotent(M, V)
    U, _ = coset_frame(M, a)
    if not M.leq(U, V):
        raise ValueError(f"frame {M.label(U)} of {M.label(a)} is not below {M.label(V)}")
    above = [b for b in left_star_cosets(M, V) if M.leq(a, b)]
    if len(above) != 1:
        raise NotFullError(f"{len(above)} left {M.label(V)} *cosets contain {M.label(a)}")
    return above[0]


def level_down(M: MeetGroupoid, b: int, U: int) -> list[int]:
    """The left ``U`` *cosets contained in ``b``."""
    _require_idempotent(M, U)
    return [a for a in left_star_cosets(M, U) if M.leq(a, b)]


def idempotent_order_dot(M: MeetGroupoid, name: str = "idempotents") -> str:
    """Hasse diagram of the idempotents under ⊆, as DOT; edges point upward."""
    ids = idempotents(M)
    lines = [f"digraph {json.dumps(name)} {{", "  rankdir=BT;"]
    for u in ids:
        lines.append(f"  n{u} [label={json.dumps(M.label(u))}];")
    for u in ids:
        for v in ids:
            if u == v or not M.leq(u, v):
                continue
            if any(w not in (u, v) and M.leq(u, w) and M.leq(w, v) for w in ids):
                continue
            lines.append(f"  n{u} -> n{v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


# -- axiom validation -------------------------------------------------------

@dataclass
class ValidationReport:
    passed: bool
    violations: list[tuple[str, tuple[int, ...]]] = field(default_factory=list)
    checked: list[str] = field(default_factory=list)

    def tags(self) -> set[str]:
        return {t for t, _ in self.violations}

    def to_json(self) -> dict:
        return {"passed": self.passed, "checked": self.checked,
                "violations": [{"axiom": t, "witness": list(w)} for t, w in self.violations]}


def _first(mask: np.ndarray) -> tuple[int, ...] | None:
    hits = np.argwhere(mask)
    return None if len(hits) == 0 else tuple(int(x) for x in hits[0])


def check_axioms(M: MeetGroupoid, fullness: bool = True) -> ValidationReport:
    """Exhaustively test the groupoid, meet-groupoid and (optionally) fullness axioms.

    Reports the lexicographically first witness for each violated clause.
    """
    P, inv, mt = M.product_table, M.inverse_table, M.meet_table
    m = M.size
    ids = np.arange(m)
    # extended product: index m stands for "undefined" and absorbs
    Px = np.full((m + 1, m + 1), m, dtype=np.int64)
    Px[:m, :m] = np.where(P == UNDEFINED, m, P)
    leq = mt == ids[:, None]

    violations: list[tuple[str, tuple[int, ...]]] = []
    checked: list[str] = []

    def record(tag, mask_or_witness):
        checked.append(tag)
        w = mask_or_witness if isinstance(mask_or_witness, tuple) or mask_or_witness is None \
            else _first(mask_or_witness)
        if w is not None:
            violations.append((tag, w))

    # meet semilattice with least element ∅
    record("meet-idempotent", mt[ids, ids] != ids)
    record("meet-commutative", mt != mt.T)
    w = None
    for a in range(m):
        lhs = mt[mt[a]]                        # (a∧b)∧c over (b, c)
        rhs = mt[a][mt]                        # a∧(b∧c)
        if (lhs != rhs).any():
            b, c = _first(lhs != rhs)
            w = (a, b, c)
            break
    record("meet-associative", w)
    record("meet-least", mt[EMPTY] != EMPTY)

    # ∅ conventions
    w = None
    if inv[EMPTY] != EMPTY:
        w = (EMPTY,)
    elif P[EMPTY, EMPTY] != EMPTY:
        w = (EMPTY, EMPTY)
    else:
        bad = np.flatnonzero((P[EMPTY, 1:] != UNDEFINED) | (P[1:, EMPTY] != UNDEFINED))
        if len(bad):
            w = (int(bad[0]) + 1,)
    record("empty", w)

    idem = np.array([a for a in range(1, m) if P[a, a] == a], dtype=np.int64)
    record("idempotent-meet-nonempty", _idem_meet_witness(mt, idem) if len(idem) else None)

    # (a) associativity, both sides or neither defined
    w = None
    for a in range(m):
        ab = Px[a, :m]                         # over b
        lhs = Px[ab][:, :m]                    # (a·b)·c
        rhs = Px[a][Px[:m, :m]]                # a·(b·c)
        if (lhs != rhs).any():
            b, c = _first(lhs != rhs)
            w = (a, b, c)
            break
    record("(a)", w)

    # (b) a·a⁻¹ and a⁻¹·a defined
    record("(b)", (P[ids, inv] == UNDEFINED) | (P[inv, ids] == UNDEFINED))

    # (c) a·b defined ⇒ a·b·b⁻¹ = a and a⁻¹·a·b = b
    defined = P != UNDEFINED
    Pd = Px[:m, :m]
    back = Px[Pd, inv[None, :].repeat(m, 0)]   # (a·b)·b⁻¹
    front = Px[inv[:, None].repeat(m, 1), Pd]  # a⁻¹·(a·b)
    record("(c)", defined & ((back != ids[:, None]) | (front != ids[None, :])))

    # (d) a ⊆ b ⇔ a⁻¹ ⊆ b⁻¹
    record("(d)", leq != leq[np.ix_(inv, inv)])

    # (e) and (f) over pairs of defined products
    pa, pb = np.nonzero(defined)
    pc = P[pa, pb]
    we = wf = None
    block = 256
    for s in range(0, len(pa), block):
        a0, b0, c0 = pa[s:s + block, None], pb[s:s + block, None], pc[s:s + block, None]
        ma, mb = mt[a0, pa[None, :]], mt[b0, pb[None, :]]
        if we is None:
            hyp = (ma != EMPTY) & (mb != EMPTY)
            bad = hyp & (Px[ma, mb] != mt[c0, pc[None, :]])
            if bad.any():
                i, j = _first(bad)
                we = (int(pa[s + i]), int(pb[s + i]), int(pa[j]), int(pb[j]))
        if wf is None:
            hyp = (ma == a0) & (mb == b0)
            bad = hyp & (mt[c0, pc[None, :]] != c0)
            if bad.any():
                i, j = _first(bad)
                wf = (int(pa[s + i]), int(pb[s + i]), int(pa[j]), int(pb[j]))
        if we is not None and wf is not None:
            break
    record("(e)", we)
    record("(f)", wf)

    if fullness:
        for tag, w in _fullness_witnesses(M, idem, leq):
            record(tag, w)

    return ValidationReport(passed=not violations, violations=violations, checked=checked)


def _idem_meet_witness(mt, idem):
    bad = mt[np.ix_(idem, idem)] == EMPTY
    w = _first(bad)
    return None if w is None else (int(idem[w[0]]), int(idem[w[1]]))


def _fullness_witnesses(M: MeetGroupoid, idem: np.ndarray, leq: np.ndarray):
    P = M.product_table
    m = M.size
    ids = np.arange(m)
    if len(idem) == 0:
        return [("(g)", None), ("(h)", None)]
    # is_left[a, k]: a·U_k = a ; is_right[b, k]: U_k·b = b
    is_left = P[:, idem] == ids[:, None]
    is_right = P[idem, :].T == ids[:, None]
    idem_leq = leq[np.ix_(idem, idem)]
    out = []
    wg = wh = None
    for side, member in (("left", is_left), ("right", is_right)):
        above = leq.astype(np.int64) @ member.astype(np.int64)     # cosets of U_k above a
        below = leq.T.astype(np.int64) @ member.astype(np.int64)   # cosets of U_k below b
        for u in range(len(idem)):
            for v in range(len(idem)):
                if not idem_leq[u, v]:
                    continue
                if wg is None:
                    rows = np.flatnonzero(member[:, u] & (above[:, v] != 1))
                    if len(rows):
                        wg = (int(rows[0]), int(idem[u]), int(idem[v]))
                if wh is None and u != v:
                    rows = np.flatnonzero(member[:, v] & (below[:, u] < 2))
                    if len(rows):
                        wh = (int(rows[0]), int(idem[u]), int(idem[v]))
    out.append(("(g)", wg))
    out.append(("(h)", wh))
    return out


def fullness_violations(M: MeetGroupoid) -> list[tuple[str, tuple[int, ...]]]:
    idem = np.array(idempotents(M), dtype=np.int64)
    return [(t, w) for t, w in _fullness_witnesses(M, idem, M.leq_matrix) if w is not None]


# -- isomorphisms -----------------------------------------------------------

@dataclass(frozen=True)
class GroupoidIso:
    """A carrier map ``source -> target`` given by ``images[a]``."""

    source: MeetGroupoid
    target: MeetGroupoid
    images: tuple[int, ...]

    def __call__(self, a: int) -> int:
        return self.images[a]

    def check(self) -> Certificate:
        """Bijective and preserving product (including undefinedness), inverse and meet."""
        S, T = self.source, self.target
        f = np.asarray(self.images)
        if S.size != T.size or sorted(self.images) != list(range(T.size)):
            return Certificate(False, ("bijective",))
        w = _first(T.inverse_table[f] != f[S.inverse_table])
        if w is not None:
            return Certificate(False, ("inverse", *w))
        w = _first(T.meet_table[np.ix_(f, f)] != f[S.meet_table])
        if w is not None:
            return Certificate(False, ("meet", *w))
        Ps = S.product_table
        mapped = np.where(Ps == UNDEFINED, UNDEFINED, f[np.where(Ps == UNDEFINED, 0, Ps)])
        w = _first(T.product_table[np.ix_(f, f)] != mapped)
        if w is not None:
            return Certificate(False, ("product", *w))
        return Certificate(True)

    def inverse(self) -> GroupoidIso:
        inv = [0] * len(self.images)
        for a, b in enumerate(self.images):
            inv[b] = a
        return GroupoidIso(self.target, self.source, tuple(inv))

    def then(self, other: GroupoidIso) -> GroupoidIso:
        """``other∘self``."""
        return GroupoidIso(self.source, other.target, tuple(other.images[b] for b in self.images))

    @classmethod
    def identity(cls, M: MeetGroupoid) -> GroupoidIso:
        return cls(M, M, tuple(range(M.size)))


def _invariants(M: MeetGroupoid) -> list[tuple]:
    leq = M.leq_matrix
    P = M.product_table
    idem = set(idempotents(M))
    down, up = leq.sum(axis=0), leq.sum(axis=1)
    inv = M.inverse_table
    out = []
    for a in range(M.size):
        frame = (0, 0) if a == EMPTY else (int(down[P[inv[a], a]]), int(down[P[a, inv[a]]]))
        out.append((a in idem, int(down[a]), int(up[a]), frame,
                    int((P[a] != UNDEFINED).sum())))
    return out


def find_isomorphism(M: MeetGroupoid, N: MeetGroupoid) -> GroupoidIso | None:
    """Search for a meet-groupoid isomorphism ``M -> N``.

    Candidates are restricted to elements with equal order-theoretic and
    frame invariants; each assignment is closed under the three operations
    before branching further.
    """
    if M.size != N.size:
        return None
    inv_m, inv_n = _invariants(M), _invariants(N)
    if sorted(inv_m) != sorted(inv_n):
        return None
    classes: dict[tuple, list[int]] = {}
    for b, key in enumerate(inv_n):
        classes.setdefault(key, []).append(b)
    Pm, Pn = M.product_table, N.product_table
    Im, In = M.inverse_table, N.inverse_table
    Mm, Mn = M.meet_table, N.meet_table
    # branch on elements with the fewest candidates first
    order = sorted(range(M.size), key=lambda a: (len(classes[inv_m[a]]), -inv_m[a][1], a))

    def propagate(f: dict[int, int], g: dict[int, int], a: int, b: int) -> bool:
        stack = [(a, b)]
        while stack:
            x, y = stack.pop()
            if x in f:
                if f[x] != y:
                    return False
                continue
            if y in g or inv_m[x] != inv_n[y]:
                return False
            f[x], g[y] = y, x
            stack.append((int(Im[x]), int(In[y])))
            for x2, y2 in list(f.items()):
                stack.append((int(Mm[x, x2]), int(Mn[y, y2])))
                for p, q in ((Pm[x, x2], Pn[y, y2]), (Pm[x2, x], Pn[y2, y])):
                    if (p == UNDEFINED) != (q == UNDEFINED):
                        return False
                    if p != UNDEFINED:
                        stack.append((int(p), int(q)))
        return True

    def search(f, g):
        rest = [a for a in order if a not in f]
        if not rest:
            return f
        a = rest[0]
        for b in classes[inv_m[a]]:
            if b in g:
                continue
            f2, g2 = dict(f), dict(g)
            if propagate(f2, g2, a, b):
                found = search(f2, g2)
                if found is not None:
                    return found
        return None

    f0, g0 = {}, {}
    if not propagate(f0, g0, EMPTY, EMPTY):
        return None
    found = search(f0, g0)
    if found is None:
        return None
    iso = GroupoidIso(M, N, tuple(found[a] for a in range(M.size)))
    return iso if iso.check() else None


def one_object_groupoid() -> MeetGroupoid:
    """∅ plus a single idempotent."""
    return MeetGroupoid([[0, -1], [-1, 1]], [0, 1], [[0, 0], [0, 1]], labels=["∅", "U"])


def from_tables(product: Iterable[Iterable[int]], inverse, meet, **kw) -> MeetGroupoid:
    return MeetGroupoid(product, inverse, meet, **kw)
