"""Command-line front end.

Every command prints canonical text by default or a deterministic JSON
run report with --json.  Exit codes: 0 when all checks pass, 1 when a
check fails, 2 for malformed input of any kind (bad expression, bad
file, bad flag combination).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import atlas, corpus, multi, transport
from .errors import StarkitError
from .moyal import StarProduct, verify_star_axioms
from .parsing import parse_expr, parse_poly, parse_scalar, poly_to_str, series_to_str
from .poisson import SymplecticForm, bivector_from_form
from .reports import Report

_BUILTIN_FORMS = {"omega0": 1, "omega0x2": 2, "omega0x3": 3}


def _load_form(name: str) -> SymplecticForm:
    if name in _BUILTIN_FORMS:
        return SymplecticForm.standard(_BUILTIN_FORMS[name])
    with open(name, "r", encoding="utf-8") as fh:
        rows = json.load(fh)
    return SymplecticForm([[parse_scalar(entry) for entry in row]
                           for row in rows])


def _product_names(copies: int):
    names = []
    for i in range(1, copies + 1):
        names.extend((f"q{i}", f"p{i}"))
    return tuple(names)


def _emit(args, payload: dict, lines: list) -> None:
    if args.json:
        payload.setdefault("corpus_version", corpus.CORPUS_VERSION)
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        for line in lines:
            print(line)


def _report_payload(report: Report) -> dict:
    return report.to_dict()


def _finish_check(args, payload: dict, report: Report, lines: list) -> int:
    payload["checks"] = _report_payload(report)
    payload["passed"] = report.passed
    lines.extend(report.summary_lines())
    lines.append("pass" if report.passed else "fail")
    _emit(args, payload, lines)
    return 0 if report.passed else 1


def cmd_star(args) -> int:
    form = _load_form(args.form)
    sp = StarProduct.from_form(form, args.order)
    F = parse_expr(args.f, form.dim, args.order)
    G = parse_expr(args.g, form.dim, args.order)
    result = sp.star_series(F, G)
    text = series_to_str(result)
    payload = {
        "command": "star",
        "inputs": {"form": args.form, "order": args.order,
                   "f": args.f, "g": args.g},
        "outputs": {"series": text},
    }
    _emit(args, payload, [text])
    return 0


def cmd_bracket(args) -> int:
    form = _load_form(args.form)
    biv = bivector_from_form(form)
    f = parse_poly(args.f, form.dim)
    g = parse_poly(args.g, form.dim)
    result = biv.bracket(f, g)
    text = poly_to_str(result)
    payload = {
        "command": "bracket",
        "inputs": {"form": args.form, "f": args.f, "g": args.g},
        "outputs": {"poly": text},
    }
    _emit(args, payload, [text])
    return 0


def cmd_verify_dq(args) -> int:
    form = _load_form(args.form)
    sp = StarProduct.from_form(form, args.order)
    triples = corpus.random_poly_triples(form.dim, args.count, 3, args.seed)
    report = verify_star_axioms(sp, triples, args.order)
    payload = {
        "command": "verify-dq",
        "inputs": {"form": args.form, "order": args.order,
                   "seed": args.seed, "count": args.count},
    }
    return _finish_check(args, payload, report, [])


def cmd_surface_ingest(args) -> int:
    surface = atlas.ingest_polygon(atlas.PolygonGluing.from_file(args.surface))
    text = surface.summary()
    payload = {
        "command": "surface-ingest",
        "inputs": {"surface": args.surface},
        "outputs": {
            "summary": text,
            "genus": surface.genus,
            "zero_orders": surface.zero_orders(),
            "vertex_classes": [list(c) for c in surface.vertex_classes],
            "charts": [c.name for c in surface.charts],
            "overlaps": [
                {"src": ov.src, "dst": ov.dst, "component": ov.component,
                 "constant": str(ov.constant)}
                for ov in surface.overlaps
            ],
        },
    }
    _emit(args, payload, [text])
    return 0


def cmd_patch_check(args) -> int:
    surface = atlas.ingest_polygon(atlas.PolygonGluing.from_file(args.surface))
    report = Report("patching")
    report.extend(atlas.liouville_pullback_check(surface), prefix="form: ")
    report.extend(atlas.cocycle_check(surface), prefix="cocycle: ")
    for idx, ov in enumerate(surface.overlaps):
        pairs = corpus.random_poly_pairs(2, args.count, 3, args.seed + idx)
        for k, (f, g) in enumerate(pairs):
            sub = atlas.overlap_agreement_check(surface, ov, f, g, args.order)
            report.extend(sub, prefix=f"pair {k} ")
    payload = {
        "command": "patch-check",
        "inputs": {"surface": args.surface, "order": args.order,
                   "seed": args.seed, "count": args.count},
    }
    return _finish_check(args, payload, report, [])


def cmd_product_star(args) -> int:
    lines = []
    extra = {}
    copies = args.n
    if args.rank is not None or args.genus is not None:
        if args.rank is None or args.genus is None:
            raise StarkitError("--rank and --genus must be given together")
        delta = multi.moduli_copies(args.rank, args.genus)
        extra = {"rank": args.rank, "genus": args.genus, "delta": delta}
        lines.append(f"delta = {delta} (2*delta = {2 * delta} coordinates)")
        if copies is None:
            copies = delta
        elif copies != delta:
            raise StarkitError(
                f"--n {copies} conflicts with delta = {delta}")
    if copies is None:
        raise StarkitError("need --n or --rank/--genus")
    space = multi.ProductSpace(copies, args.order)
    names = _product_names(copies)
    F = parse_expr(args.f, space.dim, args.order)
    G = parse_expr(args.g, space.dim, args.order)
    result = space.star.star_series(F, G)
    text = series_to_str(result, names)
    lines.append(text)
    payload = {
        "command": "product-star",
        "inputs": {"n": copies, "order": args.order,
                   "f": args.f, "g": args.g, **extra},
        "outputs": {"series": text, **extra},
    }
    _emit(args, payload, lines)
    return 0


def cmd_symmetrize(args) -> int:
    space = multi.ProductSpace(args.n)
    f = parse_poly(args.f, space.dim)
    result = multi.symmetrize(f)
    text = poly_to_str(result, _product_names(args.n))
    payload = {
        "command": "symmetrize",
        "inputs": {"n": args.n, "f": args.f},
        "outputs": {"poly": text},
    }
    _emit(args, payload, [text])
    return 0


def cmd_transport(args) -> int:
    form = _load_form(args.form)
    m = transport.SymplectoMap.from_file(args.map)
    sp = StarProduct.from_form(form, args.order)
    gate = transport.check_symplecto(m, form)
    payload = {
        "command": "transport",
        "inputs": {"map": args.map, "form": args.form, "order": args.order,
                   "f": args.f, "g": args.g},
        "checks": _report_payload(gate),
        "passed": gate.passed,
    }
    if not gate.passed:
        lines = gate.summary_lines() + ["fail"]
        _emit(args, payload, lines)
        return 1
    f = parse_poly(args.f, form.dim)
    g = parse_poly(args.g, form.dim)
    result = transport.transported_star(m, sp, f, g, args.order,
                                        verify=False)
    text = series_to_str(result)
    payload["outputs"] = {"series": text}
    _emit(args, payload, [text])
    return 0


def cmd_verify_transport(args) -> int:
    form = _load_form(args.form)
    m = transport.SymplectoMap.from_file(args.map)
    sp = StarProduct.from_form(form, args.order)
    report = Report("transport")
    report.extend(transport.check_symplecto(m, form), prefix="map: ")
    if report.passed:
        triples = corpus.random_poly_triples(form.dim, args.count, 3,
                                             args.seed)
        report.extend(transport.verify_transported_dq(m, sp, triples,
                                                      args.order))
    payload = {
        "command": "verify-transport",
        "inputs": {"map": args.map, "form": args.form, "order": args.order,
                   "seed": args.seed, "count": args.count},
    }
    return _finish_check(args, payload, report, [])


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="starkit",
        description="Exact star products: Moyal expansion, surface "
                    "patching, product spaces, transport.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, form=False, order=False, seed=False):
        if form:
            p.add_argument("--form", default="omega0",
                           help="built-in form name (omega0, omega0x2, "
                                "omega0x3) or a JSON matrix file")
        if order:
            p.add_argument("--order", type=int, default=8,
                           help="truncation order in h (default 8)")
        if seed:
            p.add_argument("--seed", type=int, default=0)
            p.add_argument("--count", type=int, default=5,
                           help="number of generated cases")
        p.add_argument("--json", action="store_true",
                       help="emit a JSON run report")

    p = sub.add_parser("star", help="star product of two expressions")
    common(p, form=True, order=True)
    p.add_argument("f")
    p.add_argument("g")
    p.set_defaults(func=cmd_star)

    p = sub.add_parser("bracket", help="Poisson bracket of two polynomials")
    common(p, form=True)
    p.add_argument("f")
    p.add_argument("g")
    p.set_defaults(func=cmd_bracket)

    p = sub.add_parser("verify-dq",
                       help="check the quantization axioms on seeded inputs")
    common(p, form=True, order=True, seed=True)
    p.set_defaults(func=cmd_verify_dq)

    p = sub.add_parser("surface-ingest",
                       help="read a polygon gluing and report its stratum")
    p.add_argument("surface", help="surface JSON file")
    common(p)
    p.set_defaults(func=cmd_surface_ingest)

    p = sub.add_parser("patch-check",
                       help="verify chart products agree on all overlaps")
    p.add_argument("--surface", required=True)
    common(p, order=True, seed=True)
    p.set_defaults(func=cmd_patch_check)

    p = sub.add_parser("product-star",
                       help="star product on n interleaved (q,p) pairs")
    p.add_argument("--n", type=int, default=None, help="number of copies")
    p.add_argument("--rank", type=int, default=None)
    p.add_argument("--genus", type=int, default=None)
    common(p, order=True)
    p.add_argument("f")
    p.add_argument("g")
    p.set_defaults(func=cmd_product_star)

    p = sub.add_parser("symmetrize",
                       help="average a polynomial over copy relabellings")
    p.add_argument("--n", type=int, required=True)
    common(p)
    p.add_argument("f")
    p.set_defaults(func=cmd_symmetrize)

    p = sub.add_parser("transport",
                       help="star product transported along a map")
    p.add_argument("--map", required=True, help="map JSON file")
    common(p, form=True, order=True)
    p.add_argument("f")
    p.add_argument("g")
    p.set_defaults(func=cmd_transport)

    p = sub.add_parser("verify-transport",
                       help="axiom suite for a transported product")
    p.add_argument("--map", required=True, help="map JSON file")
    common(p, form=True, order=True, seed=True)
    p.set_defaults(func=cmd_verify_transport)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except StarkitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
