"""``birackpoly`` command line.

Exit status: 0 on success, 1 for invalid input, 2 for an unsupported
configuration (for instance ``--k 1`` over a composite modulus).
"""
from __future__ import annotations

import argparse
import csv
import io
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from .birack import BirackError, format_cycles, load_birack
from .diagram import GaussCodeError, load_link
from .invariant import phi_beads, phi_delta
from .labeling import basic_counting, integral_counting
from .module import ModuleError, SearchShape, format_module, load_module, search_modules
from .poly import ParseError, UnsupportedRingError, parse_ring

EXIT_OK, EXIT_INVALID, EXIT_UNSUPPORTED = 0, 1, 2


class _Unsupported(Exception):
    pass


def _k(value: str) -> int:
    k = int(value)
    if k < 0:
        raise argparse.ArgumentTypeError("k must be nonnegative")
    return k


def cmd_verify_birack(args) -> int:
    b = load_birack(args.birack)
    if b.rank == 1:
        print(f"valid, N={b.rank}")
    else:
        print(f"valid, pi={format_cycles(b.pi)}, N={b.rank}")
    return EXIT_OK


def cmd_verify_module(args) -> int:
    b = load_birack(args.birack)
    m = load_module(args.module, b)
    print(f"valid module over {m.ring.header()}")
    return EXIT_OK


def cmd_search_modules(args) -> int:
    b = load_birack(args.birack)
    ring = parse_ring(args.ring)
    if ring.modulus == 0:
        raise _Unsupported("module search needs a finite coefficient ring such as Z5[q]")
    shape = SearchShape(e_max=args.emax, d_max=args.dmax)
    try:
        found = search_modules(b, ring, shape, limit=args.limit)
    except ValueError as exc:
        raise _Unsupported(str(exc)) from None
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        for i, m in enumerate(found, start=1):
            (out / f"module_{i:03d}.txt").write_text(format_module(m))
        print(f"{len(found)} module(s) written to {out}")
    else:
        sys.stdout.write("\n".join(format_module(m) for m in found))
    if not found and args.limit != 0:
        print("no modules in this search shape", file=sys.stderr)
    return EXIT_OK


def cmd_count(args) -> int:
    b = load_birack(args.birack)
    d = load_link(args.link)
    print(integral_counting(d, b) if not args.basic else basic_counting(d, b))
    return EXIT_OK


def _enhance_value(d, m, k: int, beads: bool) -> str:
    if beads:
        if m.ring.nvars:
            raise _Unsupported("--beads needs a module over constants Z_n")
        return str(phi_beads(d, m))
    return str(phi_delta(d, m, k))


def cmd_enhance(args) -> int:
    b = load_birack(args.birack)
    m = load_module(args.module, b)
    d = load_link(args.link)
    value = _enhance_value(d, m, args.k, args.beads)
    if args.format == "csv":
        buf = io.StringIO()
        csv.writer(buf, quoting=csv.QUOTE_NONNUMERIC, lineterminator="\n").writerow(
            [Path(args.link).stem, value])
        sys.stdout.write(buf.getvalue())
    else:
        print(value)
    return EXIT_OK


def _id_key(name: str):
    try:
        return (0, tuple(int(p) for p in name.split(".")), name)
    except ValueError:
        return (1, (), name)


def _table_job(job):
    path, birack_path, module_path, k, beads = job
    b = load_birack(birack_path)
    m = load_module(module_path, b)
    try:
        return path.stem, _enhance_value(load_link(path), m, k, beads), None
    except (GaussCodeError, OSError) as exc:
        return path.stem, None, str(exc)


def cmd_table(args) -> int:
    b = load_birack(args.birack)
    m = load_module(args.module, b)
    if args.beads and m.ring.nvars:
        raise _Unsupported("--beads needs a module over constants Z_n")
    links = sorted(Path(args.links).glob("*.txt"), key=lambda p: _id_key(p.stem))
    if not Path(args.links).is_dir():
        raise FileNotFoundError(f"no such directory: {args.links}")
    jobs = [(p, args.birack, args.module, args.k, args.beads) for p in links]
    if args.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as ex:
            results = list(ex.map(_table_job, jobs))
    else:
        results = [_table_job(j) for j in jobs]
    failed = 0
    for kid, _, err in results:
        if err is not None:
            failed += 1
            print(f"{kid}: {err}", file=sys.stderr)
    good = [(kid, val) for kid, val, err in results if err is None]
    if args.grouped:
        groups: dict[str, list[str]] = {}
        for kid, val in good:
            groups.setdefault(val, []).append(kid)
        rows = list(groups.items())
        if args.format == "csv":
            w = csv.writer(sys.stdout, quoting=csv.QUOTE_NONNUMERIC, lineterminator="\n")
            for val, kids in rows:
                w.writerow([val, ",".join(kids)])
        else:
            width = max((len(v) for v, _ in rows), default=0)
            for val, kids in rows:
                print(f"{val.rjust(width)} | {','.join(kids)}")
    elif args.format == "csv":
        w = csv.writer(sys.stdout, quoting=csv.QUOTE_NONNUMERIC, lineterminator="\n")
        for kid, val in good:
            w.writerow([kid, val])
    else:
        width = max((len(k) for k, _ in good), default=0)
        for kid, val in good:
            print(f"{kid.ljust(width)}  {val}")
    return EXIT_INVALID if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="birackpoly",
                                description="Birack counting invariants and their polynomial enhancements.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("verify-birack", help="check the birack axioms")
    s.add_argument("birack")
    s.set_defaults(func=cmd_verify_birack)

    s = sub.add_parser("verify-module", help="check a birack module against its birack")
    s.add_argument("birack")
    s.add_argument("module")
    s.set_defaults(func=cmd_verify_module)

    s = sub.add_parser("search-modules", help="search for birack modules over a finite ring")
    s.add_argument("birack")
    s.add_argument("--ring", required=True, help='ring header, e.g. "Z5[q]"')
    s.add_argument("--emax", type=int, default=1, help="T, R exponent bound")
    s.add_argument("--dmax", type=int, default=1, help="S degree bound")
    s.add_argument("--limit", type=int, default=None)
    s.add_argument("--out", help="directory for module files (default: stdout)")
    s.set_defaults(func=cmd_search_modules)

    s = sub.add_parser("count", help="integral birack counting invariant")
    s.add_argument("birack")
    s.add_argument("link")
    s.add_argument("--basic", action="store_true", help="count labelings of the diagram as drawn")
    s.set_defaults(func=cmd_count)

    s = sub.add_parser("enhance", help="polynomial or bead-count enhancement")
    s.add_argument("birack")
    s.add_argument("module")
    s.add_argument("link")
    s.add_argument("--k", type=_k, default=0)
    s.add_argument("--beads", action="store_true")
    s.add_argument("--format", choices=("text", "csv"), default="text")
    s.set_defaults(func=cmd_enhance)

    s = sub.add_parser("table", help="enhancement for every link file in a directory")
    s.add_argument("birack")
    s.add_argument("module")
    s.add_argument("links")
    s.add_argument("--k", type=_k, default=0)
    s.add_argument("--beads", action="store_true")
    s.add_argument("--format", choices=("text", "csv"), default="csv")
    s.add_argument("--grouped", action="store_true", help="one row per value with its knot list")
    s.add_argument("--jobs", type=int, default=1)
    s.set_defaults(func=cmd_table)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (_Unsupported, UnsupportedRingError) as exc:
        print(f"unsupported: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except ModuleError as exc:
        tag = f" [{exc.family}]" if exc.family else ""
        print(f"invalid module{tag}: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except BirackError as exc:
        print(f"invalid birack: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (GaussCodeError, ParseError, OSError, ValueError) as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
