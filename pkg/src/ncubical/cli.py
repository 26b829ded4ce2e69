"""Command-line front end.

Exit codes: 0 success, 1 a check failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from . import fixtures
from .bbc import BBCError, BBCSequence, bbc_from_cyclic, build_direct, build_inductive, type_counts, validate_bbc
from .cubical import CubicalComplex, f_vector_cubical, is_cubically_k_neighborly
from .io import (
    ParseError,
    cubical_to_json,
    parse_complex,
    parse_cubical,
    parse_sequence,
    parse_simplicial,
    serialize_cubical,
)
from .ncp import cge_facets, ncp_facet_count, phi_map
from .surfaces import checked_genus, embeds_in_sphere, equivelar_m4q, orientability, to_json, to_off, vertex_links_are_cycles
from .verify import BudgetExceeded, closed_pseudomanifold_check, complexes_isomorphic, euler_characteristic, verify_complex


class UsageError(Exception):
    pass


def _bool(x: bool) -> str:
    return "true" if x else "false"


def _fmt_fvector(fv) -> str:
    return "(" + ", ".join(str(c) for c in fv) + ")"


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def load_sequence(source: str, encoding: str = "auto", index_base: int = 0) -> BBCSequence:
    if source == "altshuler":
        return fixtures.altshuler_sequence()
    if source == "pentagon":
        return fixtures.pentagon_sequence()
    if source.startswith("cyclic:"):
        try:
            d, n = (int(x) for x in source[len("cyclic:"):].split(","))
        except ValueError:
            raise UsageError(f"bad sequence {source!r}; expected cyclic:d,n") from None
        try:
            return bbc_from_cyclic(d, n)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    path = Path(source)
    if not path.is_file():
        raise UsageError(f"no such sequence file or builtin: {source!r}")
    balls = parse_sequence(path.read_text(), encoding, index_base)
    return validate_bbc(balls)


# -- bbc --------------------------------------------------------------------------


def cmd_bbc_build(args: argparse.Namespace) -> int:
    seq = load_sequence(args.seq, args.encoding, args.index_base)
    built: dict[str, CubicalComplex] = {}
    if args.mode in ("direct", "both"):
        built["direct"] = build_direct(seq)
    if args.mode in ("inductive", "both"):
        built["inductive"] = build_inductive(seq)
    sphere = built["direct"] if "direct" in built else built["inductive"]
    ok = True
    lines = [f"sequence: {args.seq} (d={seq.d}, n={seq.n})", f"facets: {len(sphere)}"]
    types = type_counts(sphere, seq.d)
    lines.append("types: " + " ".join(f"{t}:{c}" for t, c in types.items()))
    checks: dict[str, object] = {}
    if args.mode == "both":
        agree = built["direct"].keys() == built["inductive"].keys()
        ok &= agree
        checks["paths_agree"] = agree
        lines.append(f"paths agree: {_bool(agree)}")
    fv = None
    if args.fvector or args.report == "json":
        fv = f_vector_cubical(sphere)
        lines.append(f"f-vector: {_fmt_fvector(fv)}")
        lines.append(f"euler: {euler_characteristic(fv)}")
    if args.check:
        closed, connected = closed_pseudomanifold_check(sphere)
        k = (seq.d + 1) // 2
        nb = is_cubically_k_neighborly(sphere, k)
        checks.update(closed_pseudomanifold=closed, strongly_connected=connected, **{f"cubically_{k}_neighborly": nb})
        ok &= closed and connected
        lines += [
            f"closed pseudomanifold: {_bool(closed)}",
            f"strongly connected: {_bool(connected)}",
            f"cubically {k}-neighborly: {_bool(nb)}",
        ]
    if args.out:
        Path(args.out).write_text(
            json.dumps(cubical_to_json(sphere), indent=2) + "\n" if args.export == "json" else serialize_cubical(sphere)
        )
    if args.report == "json":
        report = {
            "command": "bbc build",
            "params": {"seq": args.seq, "mode": args.mode, "d": seq.d, "n": seq.n},
            "f_vector": list(fv),
            "euler": euler_characteristic(fv),
            "checks": {**checks, "facet_types": {str(t): c for t, c in types.items()}},
            "facets_path": args.out,
        }
        print(json.dumps(report, indent=2, sort_keys=True))
    else:
        print("\n".join(lines))
    return 0 if ok else 1


def cmd_bbc_validate(args: argparse.Namespace) -> int:
    try:
        seq = load_sequence(args.seq, args.encoding, args.index_base)
    except BBCError as exc:
        print(f"invalid: {exc}")
        return 1
    print(f"valid: d={seq.d}, n={seq.n}, balls={len(seq.balls)}")
    return 0


# -- ncp --------------------------------------------------------------------------


def cmd_ncp_facets(args: argparse.Namespace) -> int:
    try:
        c = cge_facets(args.n, args.d)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.count_only:
        print(f"facets: {len(c)}")
        if args.d % 2:
            formula = ncp_facet_count(args.n, args.d)
            print(f"closed form: {formula}")
            return 0 if formula == len(c) else 1
        return 0
    _emit(serialize_cubical(c), args.out)
    return 0


def cmd_phi(args: argparse.Namespace) -> int:
    text = Path(args.input).read_text() if args.input != "-" else sys.stdin.read()
    c = parse_cubical(text)
    image = CubicalComplex(c.ambient_dim, frozenset(phi_map(f) for f in c.facets))
    _emit(serialize_cubical(image), args.out)
    return 0


# -- verify -------------------------------------------------------------------------


def cmd_verify(args: argparse.Namespace) -> int:
    c = parse_complex(Path(args.input).read_text(), args.encoding, args.index_base)
    report = verify_complex(c, homology=args.homology, links=args.links, homology_cap=args.homology_cap)
    ok = report.is_closed_pseudomanifold and report.is_strongly_connected
    ok &= not any("disagree" in n for n in report.notes)
    if args.report == "json":
        doc = {
            "command": "verify",
            "params": {"in": args.input, "homology": args.homology, "links": args.links},
            "f_vector": list(report.f_vector),
            "euler": report.euler,
            "checks": {
                "pure": report.is_pure,
                "closed_pseudomanifold": report.is_closed_pseudomanifold,
                "strongly_connected": report.is_strongly_connected,
                "neighborliness": report.neighborliness,
                "betti_z2": list(report.betti_z2) if report.betti_z2 is not None else None,
                "notes": report.notes,
            },
            "facets_path": args.input,
        }
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        print(f"f-vector: {_fmt_fvector(report.f_vector)}")
        print(f"euler: {report.euler}")
        print(f"pure: {_bool(report.is_pure)}")
        print(f"closed pseudomanifold: {_bool(report.is_closed_pseudomanifold)}")
        print(f"strongly connected: {_bool(report.is_strongly_connected)}")
        print(f"neighborliness: {report.neighborliness}")
        if report.betti_z2 is not None:
            print(f"betti (Z/2): {_fmt_fvector(report.betti_z2)}")
        for note in report.notes:
            print(f"note: {note}")
    return 0 if ok else 1


# -- surface ------------------------------------------------------------------------


def cmd_surface(args: argparse.Namespace) -> int:
    try:
        s = equivelar_m4q(args.q)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.export == "off":
        _emit(to_off(s), args.out)
        return 0
    if args.export == "json":
        _emit(to_json(s) + "\n", args.out)
        return 0
    fv = s.f_vector()
    print(f"q: {args.q}")
    print(f"f-vector: {_fmt_fvector(fv)}")
    print(f"euler: {s.euler()}")
    ok = True
    if args.genus:
        g = checked_genus(args.q)
        print(f"genus: {g}")
        print(f"genus exceeds vertices: {_bool(g > fv[0])}")
    if args.check:
        orient = orientability(s)
        links = vertex_links_are_cycles(s)
        print(f"orientable: {_bool(orient)}")
        print(f"vertex links are {args.q}-cycles: {_bool(links)}")
        ok &= orient and links
        if args.q >= 4:
            emb = embeds_in_sphere(s, args.q)
            print(f"subcomplex of S3({args.q}): {_bool(emb)}")
            ok &= emb
    return 0 if ok else 1


# -- iso / fixtures ------------------------------------------------------------------


def cmd_iso(args: argparse.Namespace) -> int:
    a = parse_simplicial(Path(args.a).read_text(), args.encoding, args.index_base)
    b = parse_simplicial(Path(args.b).read_text(), args.encoding, args.index_base)
    try:
        result = complexes_isomorphic(a, b, budget=args.budget, max_vertices=args.max_vertices)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(f"isomorphic: {_bool(result)}")
    return 0 if result else 1


def check_fixtures() -> list[tuple[str, bool]]:
    from .simplicial import boundary_complex

    results = []
    rows = fixtures.altshuler_rows()
    seq = fixtures.altshuler_sequence()
    results.append(("altshuler: valid sequence", seq.n == 11 and seq.d == 5))
    results.append(
        ("altshuler: listed boundaries", all(set(r.listed_boundary) == boundary_complex(r.ball).facets for r in rows))
    )
    results.append(
        (
            "altshuler: bold entries are the next base",
            all(row.marked == seq.link_ball(i + 1).facets for i, row in zip(range(5, 10), rows)),
        )
    )
    prow = fixtures.pentagon_rows()
    pseq = fixtures.pentagon_sequence()
    results.append(("pentagon: valid sequence", pseq.n == 6))
    results.append(
        (
            "pentagon: listed boundaries of T3, T4",
            all(sorted(r.listed_boundary) == sorted(boundary_complex(r.ball).facets) for r in prow[:2]),
        )
    )
    results.append(
        (
            "pentagon: bold entries are the next base",
            all(row.marked == pseq.link_ball(i + 1).facets for i, row in zip(range(3, 5), prow)),
        )
    )
    results.append(
        ("pentagon-sphere: patterns equal the direct construction", fixtures.pentagon_sphere().keys() == build_direct(pseq).keys())
    )
    return results


def cmd_fixtures(args: argparse.Namespace) -> int:
    if args.action == "list":
        for fx in fixtures.FIXTURES.values():
            print(f"{fx.name}\t{fx.kind}\tindex-base {fx.index_base}\t{fx.description}")
        return 0
    if args.action == "show":
        if args.name not in fixtures.FIXTURES:
            raise UsageError(f"unknown fixture {args.name!r}")
        sys.stdout.write(fixtures.FIXTURES[args.name].payload)
        return 0
    ok = True
    for label, passed in check_fixtures():
        print(f"{'PASS' if passed else 'FAIL'} {label}")
        ok &= passed
    return 0 if ok else 1


# -- parser ------------------------------------------------------------------------


def _add_io_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--encoding", choices=("auto", "vertices", "complement", "sign"), default="auto")
    p.add_argument("--index-base", type=int, choices=(0, 1), default=0)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ncubical", description="Neighborly cubical spheres and polytopes.")
    sub = parser.add_subparsers(dest="command", required=True)

    bbc = sub.add_parser("bbc", help="cubical spheres from BBC sequences")
    bbc_sub = bbc.add_subparsers(dest="action", required=True)
    build = bbc_sub.add_parser("build", help="construct the cubical sphere of a sequence")
    build.add_argument("--seq", required=True, help="file, cyclic:d,n, pentagon or altshuler")
    build.add_argument("--mode", choices=("inductive", "direct", "both"), default="direct")
    build.add_argument("--fvector", action="store_true", help="print the f-vector")
    build.add_argument("--check", action="store_true", help="pseudomanifold and neighborliness checks")
    build.add_argument("--export", choices=("text", "json"), default="text")
    build.add_argument("--out", help="write the facets here")
    build.add_argument("--report", choices=("text", "json"), default="text")
    _add_io_flags(build)
    build.set_defaults(func=cmd_bbc_build)
    val = bbc_sub.add_parser("validate", help="check the sequence conditions")
    val.add_argument("--seq", required=True)
    _add_io_flags(val)
    val.set_defaults(func=cmd_bbc_validate)

    ncp = sub.add_parser("ncp", help="neighborly cubical polytopes")
    ncp_sub = ncp.add_subparsers(dest="action", required=True)
    facets = ncp_sub.add_parser("facets", help="facets from the cubical evenness condition")
    facets.add_argument("--n", type=int, required=True)
    facets.add_argument("--d", type=int, required=True)
    facets.add_argument("--count-only", action="store_true")
    facets.add_argument("--out")
    facets.set_defaults(func=cmd_ncp_facets)
    for holder in (ncp_sub, sub):
        phi = holder.add_parser("phi", help="apply the reverse-and-alternate isomorphism")
        phi.add_argument("--in", dest="input", required=True)
        phi.add_argument("--out")
        phi.set_defaults(func=cmd_phi)

    ver = sub.add_parser("verify", help="topological checks on a facet file")
    ver.add_argument("--in", dest="input", required=True)
    ver.add_argument("--homology", action="store_true")
    ver.add_argument("--links", action="store_true")
    ver.add_argument("--report", choices=("text", "json"), default="text")
    ver.add_argument("--homology-cap", type=int, default=1 << 20)
    _add_io_flags(ver)
    ver.set_defaults(func=cmd_verify)

    surf = sub.add_parser(
        "surface",
        help="equivelar surface M_{4,q}",
        description="Mirror complex of the q-gon. The genus is computed from the Euler "
        "characteristic and from 1 + 2^(q-3)(q-4); both must agree (q >= 3).",
    )
    surf.add_argument("--q", type=int, required=True)
    surf.add_argument("--genus", action="store_true")
    surf.add_argument("--check", action="store_true", help="orientability, links, embedding in S3(q)")
    surf.add_argument("--export", choices=("off", "json"))
    surf.add_argument("--out")
    surf.set_defaults(func=cmd_surface)

    iso = sub.add_parser("iso", help="isomorphism test for two small simplicial complexes")
    iso.add_argument("a")
    iso.add_argument("b")
    iso.add_argument("--budget", type=int, default=1_000_000)
    iso.add_argument("--max-vertices", type=int, default=16)
    _add_io_flags(iso)
    iso.set_defaults(func=cmd_iso)

    fx = sub.add_parser("fixtures", help="embedded reference data")
    fx.add_argument("action", choices=("list", "show", "check"), nargs="?", default="list")
    fx.add_argument("name", nargs="?")
    fx.set_defaults(func=cmd_fixtures)
    return parser


def run_cli(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, ParseError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BBCError as exc:
        print(f"invalid sequence: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
