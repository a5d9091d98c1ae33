"""Command-line front end; every subcommand is plumbing over the library.

All output is deterministic: identical invocations produce identical
bytes.  Rationals are always shown as num/den with a decimal rendering
in parentheses, never decimal-only.
"""
from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction
from pathlib import Path

from . import compare, constructions, designer, ecc, soldb
from .bisection import (
    bisection_direct,
    bisection_fwht,
    brute_force_bisection,
    cut_counts,
    eigenvalues,
)
from .errors import LongHopError
from .graph import (
    distance_profile,
    format_hops,
    hex_width,
    load_hops,
)

DEFAULT_DB = "lh.db"


def _fmt_fraction(fr: Fraction) -> str:
    return f"{fr.numerator}/{fr.denominator} ({float(fr)!r})"


def _db_path(args) -> Path:
    if args.db:
        return Path(args.db)
    return Path(os.environ.get("LH_DB", DEFAULT_DB))


def _load_db(args) -> soldb.SolutionDB:
    path = _db_path(args)
    if not path.exists():
        raise LongHopError(f"database {path} not found; run `lh db seed`")
    return soldb.load(path)


def _emit(args, text: str) -> None:
    if getattr(args, "out", None):
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


def _parse_range(spec: str, base: int = 10) -> tuple[int, int]:
    lo, sep, hi = spec.partition("..")
    if not sep:
        raise LongHopError(f"expected a range like 3..8, got {spec!r}")
    try:
        return int(lo, base), int(hi, base)
    except ValueError:
        raise LongHopError(f"bad range {spec!r}") from None


def cmd_bisect(args) -> int:
    gens = load_hops(args.file)
    engine = bisection_direct if args.engine == "direct" else bisection_fwht
    rep = engine(gens)
    print(f"b={rep.b} B={rep.B} t={rep.t:X}")
    return 0


def cmd_oracle(args) -> int:
    gens = load_hops(args.file)
    B, partition = brute_force_bisection(gens, max_nodes=args.max_nodes)
    b = Fraction(B, gens.n // 2)
    b_text = str(b.numerator) if b.denominator == 1 else _fmt_fraction(b)
    width = max(1, (gens.n + 3) // 4)
    print(f"B={B} b={b_text} side={partition.side_mask():0{width}X}")
    return 0


def cmd_spectrum(args) -> int:
    gens = load_hops(args.file)
    lam = eigenvalues(gens)
    cuts = cut_counts(gens)
    w = hex_width(gens.d)
    lines = ["# k\tlambda\tcut"]
    lines.extend(
        f"{k:0{w}X}\t{int(lam[k])}\t{int(cuts[k])}" for k in range(gens.n)
    )
    _emit(args, "\n".join(lines) + "\n")
    return 0


def cmd_metrics(args) -> int:
    gens = load_hops(args.file)
    prof = distance_profile(gens)
    print(f"diam={prof.diameter} avg={prof.total}/{prof.n} ({float(prof.avg)!r})")
    return 0


def cmd_translate(args) -> int:
    if args.to_hops:
        code = ecc.load_code(args.to_hops)
        _emit(args, format_hops(ecc.code_to_hops(code)))
    else:
        gens = load_hops(args.to_code)
        _emit(args, ecc.format_code(ecc.hops_to_code(gens)))
    return 0


def cmd_build(args) -> int:
    if args.kind == "hd":
        gens = constructions.lh_hd(args.dim, args.hops)
    elif args.kind == "b3":
        columns = None
        if args.columns:
            columns = tuple(int(c, 16) for c in args.columns.split(","))
        gens = constructions.low_density_b3(args.dim, columns)
    elif args.kind == "mesh":
        gens = constructions.mesh(args.dim)
    else:
        gens = constructions.augment_odd_b(load_hops(args.file))
    _emit(args, format_hops(gens))
    return 0


def cmd_diag(args) -> int:
    gens = load_hops(args.file)
    normalized, _ = ecc.diagonalize(gens)
    _emit(args, format_hops(normalized))
    return 0


def cmd_design(args) -> int:
    db = _load_db(args)
    phi = Fraction(args.phi)
    weights = designer.DEFAULT_WEIGHTS
    if args.weights:
        parts = args.weights.split(",")
        if len(parts) != 2:
            raise LongHopError("--weights takes two comma-separated values")
        weights = (Fraction(parts[0]), Fraction(parts[1]))
    choice = designer.find_solution(
        db, args.ports, args.radix, phi=phi,
        at_least_ports=args.at_least, weights=weights,
    )
    rec = choice.record
    print(f"d={rec.d} m={rec.m} b={rec.b} n={rec.n} prov={rec.provenance}")
    print(
        f"ports={choice.ports} free={choice.free_ports} "
        f"phi={_fmt_fraction(choice.phi)} score={_fmt_fraction(choice.score)}"
    )
    return 0


def cmd_wire(args) -> int:
    db = _load_db(args)
    try:
        d_text, m_text = args.record.split(",")
        d, m = int(d_text), int(m_text)
    except ValueError:
        raise LongHopError("--record takes d,m (decimal)") from None
    rec = db.query(d, m)
    if rec is None:
        raise LongHopError(f"no record (d={d}, m={m}) in the database")
    table = designer.wiring_table(rec, args.radix)
    lo, hi = (0, table.n - 1)
    if args.rows:
        lo, hi = _parse_range(args.rows, base=16)
    if args.out:
        with open(args.out, "w") as fh:
            table.write(fh, lo, hi)
    else:
        table.write(sys.stdout, lo, hi)
    return 0


def cmd_db(args) -> int:
    path = _db_path(args)
    if args.action == "seed":
        if path.exists() and not args.force:
            raise LongHopError(f"{path} exists; use --force to reseed")
        db = soldb.SolutionDB()
        count = soldb.seed_defaults(db)
        soldb.save(db, path)
        print(f"seeded {count} records into {path}")
        return 0
    if args.action == "list":
        db = _load_db(args)
        for rec in db.records():
            print(
                f"d={rec.d} m={rec.m} b={rec.b} diam={rec.diameter} "
                f"avg={rec.total}/{rec.n} prov={rec.provenance}"
            )
        return 0
    if args.action == "verify":
        db = _load_db(args)
        problems = db.verify()
        if problems:
            for p in problems:
                print(p, file=sys.stderr)
            return 1
        print(f"ok: {len(db)} records verified")
        return 0
    db = soldb.load(path) if path.exists() else soldb.SolutionDB()
    rec = soldb.ingest_code_file(
        db, args.file, provenance=args.prov, replace=args.replace
    )
    soldb.save(db, path)
    print(f"ingested d={rec.d} m={rec.m} b={rec.b} into {path}")
    return 0


def cmd_compare(args) -> int:
    sizes = None
    if args.sizes:
        lo, hi = _parse_range(args.sizes)
        sizes = range(lo, hi + 1)
    if args.family == "lh":
        db = _load_db(args)
        records = [
            rec for rec in db.records()
            if rec.m < args.radix and (sizes is None or rec.d in sizes)
        ]
        text = compare.to_csv(compare.lh_series(records, args.radix))
    elif args.family == "lh_vs_hypercube":
        db = _load_db(args)
        rows = compare.versus_hypercube(db, args.radix, sizes)
        text = compare.yield_csv(rows)
    else:
        text = compare.to_csv(
            compare.alternative_series(args.family, args.radix, sizes)
        )
    _emit(args, text)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lh",
        description="Cayley-graph network toolkit over Z_2^d",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bisect", help="exact bisection of a hop-list file")
    p.add_argument("file")
    p.add_argument("--engine", choices=("fwht", "direct"), default="fwht")
    p.set_defaults(func=cmd_bisect)

    p = sub.add_parser("oracle", help="brute-force bisection (tiny n only)")
    p.add_argument("file")
    p.add_argument("--max-nodes", type=int, default=16)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("spectrum", help="eigenvalues and cut counts per k")
    p.add_argument("file")
    p.add_argument("-o", "--out")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("metrics", help="diameter and average distance")
    p.add_argument("file")
    p.set_defaults(func=cmd_metrics)

    p = sub.add_parser("translate", help="convert between code and hop files")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--to-hops", metavar="CODEFILE")
    group.add_argument("--to-code", metavar="HOPFILE")
    p.add_argument("-o", "--out")
    p.set_defaults(func=cmd_translate)

    p = sub.add_parser("build", help="emit a constructed hop set")
    kinds = p.add_subparsers(dest="kind", required=True)
    hd = kinds.add_parser("hd", help="half-distance ladder set")
    hd.add_argument("-d", "--dim", type=int, required=True)
    hd.add_argument("-m", "--hops", type=int, required=True)
    b3 = kinds.add_parser("b3", help="low-density b=3 set")
    b3.add_argument("-d", "--dim", type=int, required=True)
    b3.add_argument("--columns", help="comma-separated hex check patterns")
    mesh_p = kinds.add_parser("mesh", help="full mesh")
    mesh_p.add_argument("-d", "--dim", type=int, required=True)
    aug = kinds.add_parser("augment", help="append the hop XOR (odd b only)")
    aug.add_argument("file")
    for sp in (hd, b3, mesh_p, aug):
        sp.add_argument("-o", "--out")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("diag", help="rewrite a hop set in systematic form")
    p.add_argument("file")
    p.add_argument("-o", "--out")
    p.set_defaults(func=cmd_diag)

    p = sub.add_parser("design", help="match a (ports, radix, phi) requirement")
    p.add_argument("-P", "--ports", type=int, required=True)
    p.add_argument("-R", "--radix", type=int, required=True)
    p.add_argument("--phi", default="1")
    p.add_argument("--at-least", action="store_true")
    p.add_argument("--weights", help="wP,wPhi (default 7/10,3/10)")
    p.add_argument("--db")
    p.set_defaults(func=cmd_design)

    p = sub.add_parser("wire", help="emit the per-switch wiring table")
    p.add_argument("--record", required=True, metavar="D,M")
    p.add_argument("-R", "--radix", type=int, required=True)
    p.add_argument("--rows", help="hex row range like 0..F")
    p.add_argument("--db")
    p.add_argument("-o", "--out")
    p.set_defaults(func=cmd_wire)

    p = sub.add_parser("db", help="solution store maintenance")
    actions = p.add_subparsers(dest="action", required=True)
    seed = actions.add_parser("seed", help="write the default seed records")
    seed.add_argument("--force", action="store_true")
    listing = actions.add_parser("list", help="one line per record")
    verify = actions.add_parser("verify", help="recompute all stored metrics")
    ingest = actions.add_parser("ingest", help="add a code-matrix file")
    ingest.add_argument("file")
    ingest.add_argument("--prov")
    ingest.add_argument("--replace", action="store_true")
    for sp in (seed, listing, verify, ingest):
        sp.add_argument("--db")
    p.set_defaults(func=cmd_db)

    p = sub.add_parser("compare", help="ports/switch and cables/port series")
    p.add_argument(
        "--family",
        required=True,
        choices=compare.FAMILIES + ("lh_vs_hypercube",),
    )
    p.add_argument("-R", "--radix", type=int, required=True)
    p.add_argument("--sizes", help="size range like 3..8")
    p.add_argument("--db")
    p.add_argument("-o", "--out")
    p.set_defaults(func=cmd_compare)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except LongHopError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
