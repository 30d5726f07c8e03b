"""Command line front end.

Exit codes: 0 when every check passes, 1 when a check fails (the report
carries a witness), 2 when the input is rejected or a size cap is hit.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import catalog
from .autgroup import NonSeparatingBasisError, NotNormalizingError, aut_report
from .equivalence import NotAnObjectError, roundtrip_report
from .functor_w import BasisNotClosedError, build_w, close_basis
from .groupoid import (InvalidElementError, MeetGroupoid, NotFullError, check_axioms,
                       idempotent_order_dot)
from .perm import (CapExceeded, Perm, PermGroup, SubgroupFamily, all_subgroups,
                   generated_subgroup, trivial_chain)
from .profinite import TOWERS, DepthError, InverseSystem, demo_report


class UsageError(Exception):
    pass


PRECONDITION_ERRORS = (UsageError, CapExceeded, NonSeparatingBasisError, NotNormalizingError,
                       BasisNotClosedError, NotFullError, NotAnObjectError, DepthError,
                       InvalidElementError, KeyError, FileNotFoundError, json.JSONDecodeError,
                       ValueError)


def emit(data, as_json: bool, out=None) -> None:
    out = out or sys.stdout
    if as_json:
        out.write(json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False) + "\n")
        return
    for line in _summary_lines(data):
        out.write(line + "\n")


def _summary_lines(data: dict) -> list[str]:
    lines = []
    for key in ("group", "tower", "size", "depth"):
        if key in data and data[key] is not None:
            lines.append(f"{key}: {data[key]}")
    if "cardinalities" in data:
        lines.append("cardinalities: " + ", ".join(f"{k}={v}" for k, v in
                                                   sorted(data["cardinalities"].items())))
    for c in data.get("checks", []):
        status = "pass" if c["passed"] else "FAIL"
        extra = f"  witness={c['witness']}" if "witness" in c else ""
        lines.append(f"[{status}] {c['name']}{extra}")
    report = data.get("report")
    if report is not None:
        for v in report["violations"]:
            lines.append(f"[FAIL] axiom {v['axiom']}  witness={v['witness']}")
    lines.append("passed" if data.get("passed") else "FAILED")
    return lines


# -- argument helpers -------------------------------------------------------

def load_group(name_or_path: str, large: bool) -> PermGroup:
    if name_or_path in catalog.LARGE and not large:
        raise UsageError(f"{name_or_path} is large; pass --large to use it")
    return catalog.load_group(name_or_path)


def load_basis(G: PermGroup, policy: str, basis_file: str | None) -> SubgroupFamily:
    if policy == "all":
        return all_subgroups(G)
    if policy == "chain":
        return trivial_chain(G)
    if policy == "file":
        if basis_file is None:
            raise UsageError("--basis file needs --basis-file PATH")
        data = json.loads(Path(basis_file).read_text())
        members = []
        for sub in data:
            perms = [Perm.parse(p, G.degree) if isinstance(p, str) else Perm(p) for p in sub]
            members.append(generated_subgroup(G, [G.index(p) for p in perms]))
        return close_basis(G, members)
    raise UsageError(f"unknown basis policy {policy!r}")


def _group_and_basis(args) -> tuple[PermGroup, SubgroupFamily]:
    G = load_group(args.group, args.large)
    return G, load_basis(G, args.basis, args.basis_file)


# -- verbs ------------------------------------------------------------------

def cmd_w(args) -> int:
    G, S = _group_and_basis(args)
    W = build_w(G, S)
    report = check_axioms(W, fullness=True)
    data = {"group": G.name, "size": W.size, "groupoid": W.to_json(),
            "report": report.to_json(), "passed": report.passed,
            "cardinalities": {"carrier": W.size, "idempotents": len(S), "group": G.order}}
    emit(data, args.json)
    return 0 if report.passed else 1


def cmd_roundtrip(args) -> int:
    G, S = _group_and_basis(args)
    data = roundtrip_report(G, S, samples=args.samples, seed=args.seed)
    emit(data, args.json)
    return 0 if data["passed"] else 1


def cmd_verify_duality(args) -> int:
    G = load_group(args.group_file, args.large)
    S = load_basis(G, args.basis, args.basis_file)
    data = roundtrip_report(G, S, samples=args.samples, seed=args.seed)
    emit(data, args.json)
    return 0 if data["passed"] else 1


def cmd_aut(args) -> int:
    G, S = _group_and_basis(args)
    data = aut_report(G, S)
    emit(data, args.json)
    return 0 if data["passed"] else 1


def _load_groupoid(path: str) -> MeetGroupoid:
    return MeetGroupoid.from_json(Path(path).read_text())


def cmd_validate(args) -> int:
    M = _load_groupoid(args.groupoid)
    report = check_axioms(M, fullness=not args.no_fullness)
    data = {"size": M.size, "report": report.to_json(), "passed": report.passed}
    emit(data, args.json)
    return 0 if report.passed else 1


def cmd_export(args) -> int:
    if args.groupoid:
        M = _load_groupoid(args.groupoid)
    else:
        M = build_w(*_group_and_basis(args))
    if args.dot:
        sys.stdout.write(idempotent_order_dot(M))
    else:
        sys.stdout.write(json.dumps(M.to_json(), sort_keys=True, indent=2, ensure_ascii=False) + "\n")
    return 0


def cmd_profinite(args) -> int:
    if args.tower_file:
        sys_ = InverseSystem.from_json(Path(args.tower_file))
    else:
        if args.tower not in TOWERS:
            raise UsageError(f"unknown tower {args.tower!r}; known: {', '.join(TOWERS)}")
        sys_ = TOWERS[args.tower](args.depth)
    data = demo_report(sys_, args.depth)
    emit(data, args.json)
    return 0 if data["passed"] else 1


def cmd_catalog(args) -> int:
    rows = []
    for name in catalog.CATALOG:
        if name in catalog.LARGE and not args.large:
            continue
        G = catalog.get(name)
        rows.append({"name": name, "order": G.order, "degree": G.degree,
                     "large": name in catalog.LARGE, "default_basis": "all"})
    if args.json:
        emit(rows, True)
    else:
        for r in rows:
            sys.stdout.write(f"{r['name']:8s} order {r['order']:3d}  degree {r['degree']}"
                             f"{'  (large)' if r['large'] else ''}\n")
    return 0


# -- parser -----------------------------------------------------------------

def _common(p, group=True):
    if group:
        p.add_argument("--group", default="trivial", help="catalog name or group JSON path")
    p.add_argument("--basis", default="all", choices=["all", "chain", "file"])
    p.add_argument("--basis-file", help="JSON list of subgroups, each a list of permutations")
    p.add_argument("--json", action="store_true", help="print the full JSON report")
    p.add_argument("--large", action="store_true", help="allow groups gated as large")
    p.add_argument("--seed", type=int, default=0, help="seed for sampled isomorphisms")
    p.add_argument("--samples", type=int, default=20, help="number of sampled isomorphisms")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="cosetduality",
                                 description="Coset meet groupoids of finite groups and their checks.")
    sub = ap.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("w", help="build W(G, S) and validate its axioms")
    _common(p)
    p.set_defaults(func=cmd_w)

    p = sub.add_parser("roundtrip", help="both round trips and naturality squares")
    _common(p)
    p.set_defaults(func=cmd_roundtrip)

    p = sub.add_parser("verify-duality", help="round-trip report for a group file or catalog name")
    p.add_argument("group_file")
    _common(p, group=False)
    p.set_defaults(func=cmd_verify_duality)

    p = sub.add_parser("aut", help="Aut(G) as normalizer modulo centralizer")
    _common(p)
    p.set_defaults(func=cmd_aut)

    p = sub.add_parser("validate", help="check the axioms of a groupoid JSON file")
    p.add_argument("groupoid")
    p.add_argument("--no-fullness", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("export", help="groupoid JSON, or DOT of the idempotent order")
    p.add_argument("groupoid", nargs="?")
    _common(p)
    p.add_argument("--dot", action="store_true")
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("profinite", help="tower demos")
    p.add_argument("action", choices=["demo"])
    p.add_argument("--tower", default="2adic")
    p.add_argument("--tower-file", help='JSON {"levels": [...], "maps": [...]}')
    p.add_argument("--depth", type=int, default=3)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_profinite)

    p = sub.add_parser("catalog", help="list built-in groups")
    p.add_argument("action", choices=["list"])
    p.add_argument("--json", action="store_true")
    p.add_argument("--large", action="store_true")
    p.set_defaults(func=cmd_catalog)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except PRECONDITION_ERRORS as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        sys.stderr.write(f"error: {msg}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
