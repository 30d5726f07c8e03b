"""Built-in groups and the JSON group format.

A group file looks like::

    {"degree": 4, "generators": [[1, 2, 3, 0]], "name": "Z4"}

Generators may also be given in cycle notation, e.g. ``"(0 1 2 3)"``.
"""
from __future__ import annotations

import json
from pathlib import Path

from .perm import Perm, PermGroup, close_generators


def cyclic(n: int) -> PermGroup:
    if n == 1:
        return close_generators(1, [], name="trivial")
    return close_generators(n, [Perm([(i + 1) % n for i in range(n)])], name=f"Z{n}")


def klein_four() -> PermGroup:
    return close_generators(4, [Perm.parse("(0 1)", 4), Perm.parse("(2 3)", 4)], name="Z2xZ2")


def symmetric(n: int) -> PermGroup:
    gens = [Perm([(i + 1) % n for i in range(n)]), Perm.parse("(0 1)", n)] if n > 1 else []
    return close_generators(n, gens, name=f"S{n}")


def dihedral(n: int) -> PermGroup:
    """Symmetries of a regular ``n``-gon (order ``2n``), for ``n >= 3``."""
    rot = Perm([(i + 1) % n for i in range(n)])
    ref = Perm([(-i) % n for i in range(n)])
    return close_generators(n, [rot, ref], name=f"D{n}")


def quaternion() -> PermGroup:
    """Q8 in its regular representation on the labels ±1, ±i, ±j, ±k."""
    units = "1ijk"
    # unit products: (sign, unit)
    rule = {("1", u): (1, u) for u in units}
    rule.update({(u, "1"): (1, u) for u in units})
    rule.update({("i", "i"): (-1, "1"), ("j", "j"): (-1, "1"), ("k", "k"): (-1, "1"),
                 ("i", "j"): (1, "k"), ("j", "k"): (1, "i"), ("k", "i"): (1, "j"),
                 ("j", "i"): (-1, "k"), ("k", "j"): (-1, "i"), ("i", "k"): (-1, "j")})
    labels = [(s, u) for s in (1, -1) for u in units]
    pos = {x: k for k, x in enumerate(labels)}

    def left_mult(x):
        sx, ux = x
        out = []
        for sy, uy in labels:
            s, u = rule[(ux, uy)]
            out.append(pos[(sx * sy * s, u)])
        return Perm(out)

    return close_generators(8, [left_mult((1, "i")), left_mult((1, "j"))], name="Q8")


CATALOG = {
    "trivial": lambda: cyclic(1),
    "Z2": lambda: cyclic(2),
    "Z3": lambda: cyclic(3),
    "Z4": lambda: cyclic(4),
    "Z8": lambda: cyclic(8),
    "Z2xZ2": klein_four,
    "S3": lambda: symmetric(3),
    "D4": lambda: dihedral(4),
    "Q8": quaternion,
    "S4": lambda: symmetric(4),
}

# validating W(S4) is slow; only loaded on request
LARGE = frozenset({"S4"})

DEFAULT_NAMES = tuple(k for k in CATALOG if k not in LARGE)


def get(name: str) -> PermGroup:
    try:
        return CATALOG[name]()
    except KeyError:
        raise KeyError(f"unknown catalog group {name!r}; known: {', '.join(CATALOG)}") from None


def group_from_json(data: dict) -> PermGroup:
    degree = int(data["degree"])
    gens = []
    for g in data.get("generators", []):
        gens.append(Perm.parse(g, degree) if isinstance(g, str) else Perm(g))
    return close_generators(degree, gens, name=data.get("name"))


def group_to_json(G: PermGroup) -> dict:
    return {"degree": G.degree,
            "generators": [list(g) for g in G.generators],
            "name": G.name}


def load_group(name_or_path: str) -> PermGroup:
    """A catalog name, or a path to a group JSON file."""
    if name_or_path in CATALOG:
        return get(name_or_path)
    path = Path(name_or_path)
    if not path.exists():
        raise KeyError(f"{name_or_path!r} is neither a catalog group nor a file")
    return group_from_json(json.loads(path.read_text()))
