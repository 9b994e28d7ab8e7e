"""``pm``: command-line access to the toolkit.

Exit codes: 0 on success or a passing check, 1 when a check fails, 2 on
usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import pmt
from .catalog import FIXED_NAMES, RHO_A_REPRESENTATIVES, build
from .classes import (
    ClassId,
    decompressions,
    excluded_minor_report,
    in_class,
    in_R_set,
)
from .core import Polymatroid, components, elements_of, relation, validate
from .enumerate import GenConfig, enumerate_2polymatroids, find_excluded_minors
from .minors import find_minor, find_mk4_minor, find_u24_minor, is_binary, is_series_parallel
from .natural import k_natural_matroid, natural_matroid
from .ops import compress, contract, delete, k_dual, principal_extension_polymatroid
from .verify import SUITES, report_json, run_suite


class UsageError(Exception):
    pass


def _mask(text: str | None, n: int) -> int:
    """Comma-separated element indices, or empty."""
    if not text:
        return 0
    m = 0
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        i = int(part)
        if not 0 <= i < n:
            raise UsageError(f"element {i} out of range for n={n}")
        m |= 1 << i
    return m


def _load(path: str) -> Polymatroid:
    try:
        return pmt.read(path)
    except (OSError, ValueError) as exc:
        raise UsageError(str(exc)) from exc


def _emit(p: Polymatroid, out: str | None, groups=None) -> None:
    text = pmt.dumps(p, groups)
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _write_json(data: dict, out: str | None) -> None:
    text = json.dumps(data, indent=2, sort_keys=True) + "\n"
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------- commands


def cmd_validate(args) -> int:
    p = _load(args.file)
    rep = validate(p, mode=args.mode)
    print(rep.message)
    return 0 if rep else 1


def _dot(p: Polymatroid) -> str:
    kinds = {0: "loop", 1: "point", 2: "line", 3: "plane"}
    lines = ["graph polymatroid {"]
    for i in range(p.n):
        shape = "circle" if p.r1(i) <= 1 else "box"
        lines.append(f'  e{i} [label="{i}: {kinds.get(p.r1(i), f"rank {p.r1(i)}")}" shape={shape}];')
    for i in range(p.n):
        for j in range(i + 1, p.n):
            rel = relation(p, i, j)
            if rel == "parallel":
                lines.append(f"  e{i} -- e{j} [style=bold];")
            elif isinstance(rel, tuple):
                lines.append(f"  e{rel[1]} -- e{rel[2]} [style=dashed];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def cmd_show(args) -> int:
    p = _load(args.file)
    if args.dot:
        sys.stdout.write(_dot(p))
        return 0
    print(f"n = {p.n}, rank = {p.total}, k = {p.k}")
    print("singleton ranks:", " ".join(str(r) for r in p.singleton_ranks))
    print("components:", [elements_of(c) for c in components(p)])
    for i in range(p.n):
        for j in range(i + 1, p.n):
            rel = relation(p, i, j)
            if rel != "other":
                print(f"  {i},{j}: {rel if isinstance(rel, str) else f'{rel[1]} lies on {rel[2]}'}")
    return 0


def cmd_catalog(args) -> int:
    if args.list:
        for nm in FIXED_NAMES:
            print(nm)
        print("S:<n>        n >= 2")
        print("U:<r>,<n>    0 <= r <= n")
        print("rhoA:<mask>  mask over a..f, e.g. rhoA:0b000111")
        for desc, A in RHO_A_REPRESENTATIVES.items():
            print(f"  rhoA:{A:#08b}  {desc}")
        return 0
    if not args.name:
        raise UsageError("catalog needs --name or --list")
    try:
        p = build(args.name)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    _emit(p, args.out)
    return 0


def cmd_delete(args) -> int:
    p = _load(args.file)
    _emit(delete(p, _mask(args.elements, p.n)), args.out)
    return 0


def cmd_contract(args) -> int:
    p = _load(args.file)
    _emit(contract(p, _mask(args.elements, p.n)), args.out)
    return 0


def cmd_dual(args) -> int:
    p = _load(args.file)
    try:
        _emit(k_dual(p, args.k), args.out)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    return 0


def cmd_compress(args) -> int:
    p = _load(args.file)
    if not 0 <= args.element < p.n:
        raise UsageError(f"element {args.element} out of range")
    _emit(compress(p, args.element), args.out)
    return 0


def cmd_extend(args) -> int:
    p = _load(args.file)
    try:
        q = principal_extension_polymatroid(p, _mask(args.set, p.n), args.rank)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    _emit(q, args.out)
    return 0


def cmd_natural(args) -> int:
    lm = natural_matroid(_load(args.file))
    _emit(lm.matroid, args.out, lm.groups)
    return 0


def cmd_knatural(args) -> int:
    try:
        lm = k_natural_matroid(_load(args.file), args.k)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    _emit(lm.matroid, args.out, lm.groups)
    return 0


def cmd_minor(args) -> int:
    host, pattern = _load(args.host), _load(args.pattern)
    cert = find_minor(host, pattern)
    if cert is None:
        print("no minor")
        return 1
    print("minor found:", json.dumps(cert.to_json(), sort_keys=True))
    if args.certificate:
        _write_json(cert.to_json(), args.certificate)
    return 0


def cmd_test(args) -> int:
    m = _load(args.file)
    if not m.is_matroid():
        raise UsageError("test expects a matroid (all singleton ranks <= 1)")
    if args.binary:
        ok = is_binary(m, check=args.check)
        cert = None if ok else find_u24_minor(m)
        print("binary" if ok else "not binary")
    elif args.mk4:
        cert = find_mk4_minor(m)
        ok = cert is None
        print("no M(K4) minor" if ok else "has an M(K4) minor")
    else:
        ok = is_series_parallel(m, check=args.check)
        cert = None
        print("series-parallel" if ok else "not series-parallel")
    if cert is not None:
        print("certificate:", json.dumps(cert.to_json(), sort_keys=True))
    return 0 if ok else 1


def _class(text: str) -> ClassId:
    try:
        return ClassId.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def cmd_class(args) -> int:
    p = _load(args.file)
    c = _class(args.id)
    try:
        ok = in_class(p, c)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    print(f"{'in' if ok else 'not in'} {c.value}")
    return 0 if ok else 1


def cmd_exmin(args) -> int:
    p = _load(args.file)
    c = _class(args.id)
    rep = excluded_minor_report(p, c)
    data = rep.to_json()
    if rep.is_excluded:
        data["compressions_in_class"] = in_R_set(p, c)
    _write_json(data, args.out)
    return 0 if rep.is_excluded else 1


def cmd_decompress(args) -> int:
    p = _load(args.file)
    found = decompressions(p, _class(args.id))
    print(f"{len(found)} excluded-minor decompression(s)")
    for q in found:
        sys.stdout.write(pmt.dumps(q))
    return 0


def cmd_enumerate(args) -> int:
    cfg = GenConfig.structural(args.n) if args.filters == "structural" else GenConfig(args.n)
    res = enumerate_2polymatroids(cfg)
    print(f"n={args.n}: {len(res)} classes, {res.nodes} nodes, complete={res.complete}, filters={cfg.filters}")
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        for i, p in enumerate(res):
            pmt.write(p, out / f"n{args.n}_{i:05d}.pmt")
    return 0 if res.complete else 1


def cmd_certify(args) -> int:
    c = _class(args.id)
    res = find_excluded_minors(c, args.n, structural_from=4 if args.filters == "structural" else None)
    _write_json(res.to_json(), args.out)
    print(f"{len(res.found)} excluded minors for {c.value} on at most {args.n} elements")
    return 0 if res.complete else 1


def cmd_verify(args) -> int:
    if args.all:
        names = list(SUITES)
    elif args.suite:
        names = args.suite
    else:
        raise UsageError("verify needs --all or --suite NAME")
    for nm in names:
        if nm not in SUITES:
            raise UsageError(f"unknown suite {nm!r}; choose from {', '.join(SUITES)}")
    reports = []
    for nm in names:
        rep = run_suite(nm)
        reports.append(rep)
        print(f"{'PASS' if rep.passed else 'FAIL'}  {nm}  ({rep.seconds:.1f}s)")
        for c in rep.checks:
            if not c.ok:
                print(f"    failed: {c.name}")
    if args.out:
        _write_json(report_json(reports), args.out)
    return 0 if all(r.passed for r in reports) else 1


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="pm", description="Exact integer polymatroid toolkit.")
    sub = ap.add_subparsers(dest="command", required=True)

    def with_file(name, help_text):
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument("file", help=".pmt rank table")
        return sp

    sp = with_file("validate", "check the polymatroid axioms")
    sp.add_argument("--mode", choices=["reference", "fast"], default="reference")
    sp.set_defaults(func=cmd_validate)

    sp = with_file("show", "summarize a polymatroid")
    sp.add_argument("--dot", action="store_true", help="emit a DOT incidence diagram")
    sp.set_defaults(func=cmd_show)

    sp = sub.add_parser("catalog", help="build a named polymatroid")
    sp.add_argument("--name")
    sp.add_argument("--list", action="store_true")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_catalog)

    for name, func in (("delete", cmd_delete), ("contract", cmd_contract)):
        sp = with_file(name, f"{name} a set of elements")
        sp.add_argument("--elements", required=True, help="comma-separated indices")
        sp.add_argument("--out")
        sp.set_defaults(func=func)

    sp = with_file("dual", "k-dual")
    sp.add_argument("--k", type=int, default=2)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_dual)

    sp = with_file("compress", "compress by one element")
    sp.add_argument("--element", type=int, required=True)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_compress)

    sp = with_file("extend", "freely add a new element to a set")
    sp.add_argument("--set", default="", help="comma-separated indices of F")
    sp.add_argument("--rank", type=int, default=1)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_extend)

    sp = with_file("natural", "natural matroid with its groups")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_natural)

    sp = with_file("knatural", "k-natural matroid with its groups")
    sp.add_argument("--k", type=int, default=2)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_knatural)

    sp = sub.add_parser("minor", help="search for a minor")
    sp.add_argument("--host", required=True)
    sp.add_argument("--pattern", required=True)
    sp.add_argument("--certificate", help="write the certificate as JSON")
    sp.set_defaults(func=cmd_minor)

    sp = with_file("test", "structural tests on a matroid")
    g = sp.add_mutually_exclusive_group(required=True)
    g.add_argument("--binary", action="store_true")
    g.add_argument("--mk4", action="store_true")
    g.add_argument("--sp", action="store_true")
    sp.add_argument("--check", action="store_true", help="also run the second algorithm and compare")
    sp.set_defaults(func=cmd_test)

    classes = [c.value for c in ClassId]
    sp = with_file("class", "class membership")
    sp.add_argument("--id", required=True, choices=classes)
    sp.set_defaults(func=cmd_class)

    sp = with_file("exmin", "excluded-minor report")
    sp.add_argument("--class", dest="id", required=True, choices=classes)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_exmin)

    sp = with_file("decompress", "excluded-minor decompressions")
    sp.add_argument("--class", dest="id", required=True, choices=classes)
    sp.set_defaults(func=cmd_decompress)

    sp = sub.add_parser("enumerate", help="isomorph-free 2-polymatroids")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--filters", choices=["none", "structural"], default="none")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("certify", help="excluded-minor search report")
    sp.add_argument("--class", dest="id", required=True, choices=classes)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--filters", choices=["none", "structural"], default="structural")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_certify)

    sp = sub.add_parser("verify", help="run verification suites")
    sp.add_argument("--all", action="store_true")
    sp.add_argument("--suite", action="append", choices=list(SUITES))
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_verify)
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"pm: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
