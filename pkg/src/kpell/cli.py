"""Command-line interface: ``kpell {gen,table,binet,verify,oeis}``.

Exit codes: 0 success, 1 a verification or comparison failed, 2 bad
arguments, 3 file or network error.
"""

from __future__ import annotations

import argparse
import csv
import io
import itertools
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from kpell.identities import check_lemma21, check_lemma22
from kpell.oeis import (
    MAPPINGS,
    BFileError,
    OeisMapping,
    bundled_bfile,
    compare,
    fetch_bfile,
    normalize_id,
    parse_bfile,
)
from kpell.quadrature import verify_numeric
from kpell.report import summarize
from kpell.ring import binet_pair
from kpell.sequences import Family, sequence_range
from kpell.symbolic import Theorem, TheoremParams, verify

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3

LEMMAS = ("lemma2.1", "lemma2.2")
THEOREM_ALIASES = {
    "all": [t.value for t in Theorem],
    "lemmas": list(LEMMAS),
    "lemma21": ["lemma2.1"],
    "lemma22": ["lemma2.2"],
}


class UsageError(Exception):
    pass


def parse_range(text: str) -> list[int]:
    """Parse ``"3"``, ``"1..4"`` or ``"0,2,5"`` (pieces may be mixed)."""
    values: list[int] = []
    try:
        for piece in text.split(","):
            piece = piece.strip()
            if ".." in piece:
                lo, hi = (int(s) for s in piece.split("..", 1))
                if hi < lo:
                    raise UsageError(f"empty range {piece!r}")
                values.extend(range(lo, hi + 1))
            else:
                values.append(int(piece))
    except ValueError:
        raise UsageError(f"malformed range {text!r}") from None
    if not values:
        raise UsageError(f"empty range {text!r}")
    if min(values) < 0:
        raise UsageError(f"negative value in range {text!r}")
    return sorted(set(values))


def _positive_k(values: list[int]) -> list[int]:
    if min(values) < 1:
        raise UsageError("k must be a positive integer")
    return values


# --- gen / table / binet -------------------------------------------------


def cmd_gen(args, out) -> int:
    if args.k < 1:
        raise UsageError("k must be a positive integer")
    if args.n_from < 0 or args.n_to < args.n_from:
        raise UsageError("need 0 <= --from <= --to")
    family = Family(args.family)
    values = sequence_range(family, args.k, args.n_from, args.n_to)
    pairs = list(zip(range(args.n_from, args.n_to + 1), values))
    if args.format == "plain":
        for _, v in pairs:
            print(v, file=out)
    elif args.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["n", "value"])
        w.writerows(pairs)
    else:
        json.dump([{"n": n, "value": str(v)} for n, v in pairs], out)
        print(file=out)
    return EXIT_OK


def render_table(k_max: int, n_max: int, fmt: str = "plain") -> str:
    """Both families for ``k = 1..k_max`` and ``n = 0..n_max``."""
    blocks = {
        fam: {k: sequence_range(fam, k, 0, n_max) for k in range(1, k_max + 1)}
        for fam in Family
    }
    buf = io.StringIO()
    if fmt == "plain":
        for fam, rows in blocks.items():
            print(f"{fam.symbol}(k,n) n=0..{n_max}", file=buf)
            for k, vals in rows.items():
                print(f"k={k}: " + " ".join(map(str, vals)), file=buf)
    elif fmt == "csv":
        w = csv.writer(buf, lineterminator="\n")
        for fam, rows in blocks.items():
            w.writerow(["family", "k", *range(n_max + 1)])
            for k, vals in rows.items():
                w.writerow([fam.symbol, k, *vals])
    else:
        doc = {
            fam.symbol: {str(k): [str(v) for v in vals] for k, vals in rows.items()}
            for fam, rows in blocks.items()
        }
        buf.write(json.dumps(doc) + "\n")
    return buf.getvalue()


def cmd_table(args, out) -> int:
    if args.k_max < 1 or args.n_max < 0:
        raise UsageError("need --k-max >= 1 and --n-max >= 0")
    out.write(render_table(args.k_max, args.n_max, args.format))
    return EXIT_OK


def cmd_binet(args, out) -> int:
    if args.k < 1 or args.n < 0:
        raise UsageError("need --k >= 1 and --n >= 0")
    bp = binet_pair(args.k, args.n)
    if args.format == "plain":
        print(f"P({args.k},{args.n}) = {bp.p}", file=out)
        print(f"Q({args.k},{args.n}) = {bp.q}", file=out)
    elif args.format == "csv":
        print("k,n,p,q", file=out)
        print(f"{args.k},{args.n},{bp.p},{bp.q}", file=out)
    else:
        print(json.dumps({"k": args.k, "n": args.n, "p": str(bp.p), "q": str(bp.q)}), file=out)
    return EXIT_OK


# --- verify ---------------------------------------------------------------


def _resolve_ids(names: list[str]) -> list[str]:
    ids: list[str] = []
    for raw in names:
        for name in raw.split(","):
            name = name.strip().lower()
            expanded = THEOREM_ALIASES.get(name)
            if expanded is None:
                try:
                    expanded = [Theorem(name).value]
                except ValueError:
                    raise UsageError(f"unknown theorem {name!r}") from None
            ids.extend(x for x in expanded if x not in ids)
    return ids


def build_tasks(ids, ks, ls, ns, rs, ms, mode) -> list[tuple]:
    """Deterministically ordered sweep: by id, then parameter tuple, then mode."""
    modes = ["exact", "numeric"] if mode == "both" else [mode]
    tasks = []
    for tid in ids:
        if tid == "lemma2.1":
            tasks += [("lemma2.1", (k, n)) for k, n in itertools.product(ks, ns)]
            continue
        if tid == "lemma2.2":
            tasks += [("lemma2.2", (k, m, n)) for k, m, n in itertools.product(ks, ms, ns)]
            continue
        th = Theorem(tid)
        params = [
            TheoremParams(th, k, n, l=l, r=r)
            for k, l, n, r in itertools.product(
                ks, ls if th.uses_l else [None], ns, rs if th.uses_r else [None]
            )
        ]
        params.sort(key=TheoremParams.sort_key)
        tasks += [(md, p) for p in params for md in modes]
    return tasks


def run_task(task, tol: float = 1e-12):
    kind, arg = task
    if kind == "lemma2.1":
        return check_lemma21(*arg)
    if kind == "lemma2.2":
        return check_lemma22(*arg)
    if kind == "exact":
        return verify(arg)
    return verify_numeric(arg, tol)


def _run_chunk(chunk, tol):
    return [run_task(t, tol) for t in chunk]


def run_sweep(tasks, tol: float = 1e-12, jobs: int = 1):
    if jobs <= 1:
        return [run_task(t, tol) for t in tasks]
    size = max(1, len(tasks) // (jobs * 8))
    chunks = [tasks[i : i + size] for i in range(0, len(tasks), size)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        results = pool.map(_run_chunk, chunks, itertools.repeat(tol))
        return [r for chunk in results for r in chunk]


def cmd_verify(args, out) -> int:
    ids = _resolve_ids(args.theorem)
    ks = _positive_k(parse_range(args.k))
    ls, ns, rs, ms = (parse_range(x) for x in (args.l, args.n, args.r, args.m))
    if not args.tol > 0:
        raise UsageError("--tol must be positive")
    tasks = build_tasks(ids, ks, ls, ns, rs, ms, args.mode)
    reports = run_sweep(tasks, args.tol, args.jobs)
    sink = out
    fh = None
    if args.output:
        try:
            fh = open(args.output, "w", encoding="utf-8")
        except OSError as exc:
            print(f"kpell: cannot write {args.output}: {exc}", file=sys.stderr)
            return EXIT_IO
        sink = fh
    try:
        for rep in reports:
            sink.write(rep.to_json() + "\n")
    finally:
        if fh:
            fh.close()
    counts = summarize(reports)
    print(
        f"summary: total={len(reports)} "
        + " ".join(f"{k}={v}" for k, v in counts.items()),
        file=sys.stderr,
    )
    return EXIT_FAIL if counts["fail"] else EXIT_OK


# --- oeis -----------------------------------------------------------------


def cmd_oeis(args, out) -> int:
    try:
        oid = normalize_id(args.id)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    custom = (args.family, args.k)
    if any(v is not None for v in custom):
        if not all(v is not None for v in custom):
            raise UsageError("a custom mapping needs both --family and --k")
        if args.k < 1:
            raise UsageError("k must be a positive integer")
        mapping = OeisMapping(oid, Family(args.family), args.k, args.offset or 0)
    elif oid in MAPPINGS:
        mapping = MAPPINGS[oid]
        if args.offset is not None:
            mapping = OeisMapping(oid, mapping.family, mapping.k, args.offset)
    else:
        raise UsageError(f"{oid} is not a bundled mapping; pass --family and --k")
    if args.n < 1:
        raise UsageError("--n must be positive")

    try:
        if args.file:
            text = Path(args.file).read_text(encoding="ascii")
            source = args.file
        elif args.fetch:
            text = fetch_bfile(oid)
            source = "oeis.org"
            if args.save:
                Path(args.save).write_text(text, encoding="ascii")
        else:
            text = bundled_bfile(oid)
            source = "bundled"
            if text is None:
                print(f"kpell: no bundled b-file for {oid}; use --file or --fetch", file=sys.stderr)
                return EXIT_IO
        terms = parse_bfile(text)
    except (OSError, UnicodeDecodeError, BFileError) as exc:
        print(f"kpell: cannot read b-file for {oid}: {exc}", file=sys.stderr)
        return EXIT_IO

    result = compare(mapping, terms, args.n)
    doc = {
        "id": oid,
        "family": mapping.family.value,
        "k": mapping.k,
        "offset": mapping.offset,
        "source": source,
        "requested": result.requested,
        "checked": result.checked,
        "status": "match" if result.matched else "mismatch",
    }
    if result.first_mismatch is not None:
        doc.update(
            first_mismatch=result.first_mismatch,
            expected=str(result.expected),
            found=str(result.found),
        )
    if result.note:
        doc["note"] = result.note
    if args.format == "json":
        print(json.dumps(doc), file=out)
    else:
        print(" ".join(f"{k}={v}" for k, v in doc.items()), file=out)
    return EXIT_OK if result.matched else EXIT_FAIL


# --- parser ---------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kpell",
        description="k-Pell / k-Pell-Lucas sequences and exact checks of their integral representations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    fmt = dict(choices=["plain", "csv", "json"], default="plain")
    families = [f.value for f in Family]

    g = sub.add_parser("gen", help="generate sequence terms")
    g.add_argument("--family", choices=families, required=True)
    g.add_argument("--k", type=int, required=True)
    g.add_argument("--from", dest="n_from", type=int, default=0)
    g.add_argument("--to", dest="n_to", type=int, required=True)
    g.add_argument("--format", **fmt)
    g.set_defaults(func=cmd_gen)

    t = sub.add_parser("table", help="print both families as tables")
    t.add_argument("--k-max", type=int, default=6)
    t.add_argument("--n-max", type=int, default=10)
    t.add_argument("--format", **fmt)
    t.set_defaults(func=cmd_table)

    b = sub.add_parser("binet", help="P and Q through powers of 1 + sqrt(1+k)")
    b.add_argument("--k", type=int, required=True)
    b.add_argument("--n", type=int, required=True)
    b.add_argument("--format", **fmt)
    b.set_defaults(func=cmd_binet)

    v = sub.add_parser("verify", help="sweep theorem / lemma checks, JSON Lines output")
    v.add_argument(
        "--theorem",
        action="append",
        required=True,
        help="p-ln, q-ln, p-lnr, q-lnr, p-even, p-odd, lemma21, lemma22, lemmas or all",
    )
    v.add_argument("--k", required=True, help="range such as 1..10")
    v.add_argument("--l", default="1")
    v.add_argument("--n", required=True)
    v.add_argument("--r", default="0")
    v.add_argument("--m", default="0", help="second index for lemma22")
    v.add_argument("--mode", choices=["exact", "numeric", "both"], default="exact")
    v.add_argument("--tol", type=float, default=1e-12)
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--output", help="write reports here instead of stdout")
    v.set_defaults(func=cmd_verify)

    o = sub.add_parser("oeis", help="compare a b-file with the generated sequence")
    o.add_argument("--id", required=True)
    src = o.add_mutually_exclusive_group()
    src.add_argument("--file", help="local b-file")
    src.add_argument("--fetch", action="store_true", help="download from oeis.org")
    o.add_argument("--save", help="with --fetch, also store the downloaded b-file")
    o.add_argument("--n", type=int, default=30, help="number of terms to compare")
    o.add_argument("--family", choices=families)
    o.add_argument("--k", type=int)
    o.add_argument("--offset", type=int)
    o.add_argument("--format", choices=["plain", "json"], default="plain")
    o.set_defaults(func=cmd_oeis)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, out)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"kpell {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
